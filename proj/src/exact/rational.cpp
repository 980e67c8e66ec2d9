#include "dessinalg/rational.hpp"

#include "dessinalg/errors.hpp"

#include <cctype>

namespace dessinalg {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

bool is_signed_digits(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

} // namespace

Integer parse_integer(std::string_view text) {
  text = trim(text);
  if (!is_signed_digits(text)) throw ParseError("bad integer '" + std::string(text) + "'");
  if (text.front() == '+') text.remove_prefix(1);
  return Integer(std::string(text), 10);
}

Rational parse_rational(std::string_view text) {
  text = trim(text);
  if (text.size() >= 2 && text.front() == '(' && text.back() == ')') {
    text = trim(text.substr(1, text.size() - 2));
  }
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  const auto num_text = trim(text.substr(0, slash));
  const auto den_text = trim(text.substr(slash + 1));
  if (!is_signed_digits(num_text) || !is_signed_digits(den_text) ||
      den_text.front() == '-' || den_text.front() == '+') {
    throw ParseError("bad rational '" + std::string(text) + "'");
  }
  Rational r(parse_integer(num_text), parse_integer(den_text));
  if (r.get_den() == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  r.canonicalize();
  return r;
}

std::string format_rational(const Rational& r) { return r.get_str(); }

} // namespace dessinalg
