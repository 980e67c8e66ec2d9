#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dessinalg {

// Base for every domain failure raised by the library. The CLI maps these to
// exit status 1.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class DegreeMismatch : public Error {
public:
  using Error::Error;
};

class ParseError : public Error {
public:
  explicit ParseError(const std::string& what) : Error(what) {}
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

  // 0 when the error is not tied to a line of a file.
  std::size_t line() const { return line_; }

private:
  std::size_t line_ = 0;
};

// A degree, basis-size or group-order cap tripped before the computation
// finished.
class CapExceeded : public Error {
public:
  using Error::Error;
};

// A dessin needed by a Galois-orbit computation is missing from the table.
class CoverageError : public Error {
public:
  using Error::Error;
};

} // namespace dessinalg
