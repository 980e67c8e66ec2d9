#include "dessinalg/catalog.hpp"
#include "dessinalg/errors.hpp"
#include "dessinalg/galois.hpp"
#include "dessinalg/s3.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

using namespace dessinalg;

namespace {

// Opens a path for reading; "-" is standard input.
class Input {
public:
  explicit Input(const std::string& path) {
    if (path == "-") return;
    file_.open(path);
    if (!file_) throw Error("cannot open '" + path + "'");
  }
  std::istream& stream() { return file_.is_open() ? static_cast<std::istream&>(file_) : std::cin; }

private:
  std::ifstream file_;
};

// A dessin given inline, or "-" for one dessin per line on standard input.
std::vector<Dessin> dessins_from(const std::string& arg) {
  if (arg != "-") return {parse_dessin(arg)};
  std::vector<Dessin> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(std::cin, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    try {
      out.push_back(parse_dessin(line));
    } catch (const ParseError& e) {
      throw ParseError(line_no, e.what());
    }
  }
  return out;
}

IrreducibleDessin irreducible_from(const std::string& arg) {
  const Dessin d = parse_dessin(arg);
  if (!is_irreducible(d)) throw Error("dessin " + format_dessin(d) + " is not irreducible");
  return IrreducibleDessin::from(d);
}

OrbitTable table_from(const std::string& path) {
  Input in(path);
  return read_orbit_table(in.stream());
}

Catalog catalog_from(const std::string& path) {
  Input in(path);
  return load_catalog(in.stream());
}

// Generator files hold formal sums separated by blank lines.
std::vector<FormalSum> generators_from(const std::string& path) {
  Input in(path);
  std::vector<FormalSum> out;
  std::string block;
  std::string line;
  auto flush = [&] {
    if (!block.empty()) out.push_back(parse_formal_sum(block));
    block.clear();
  };
  while (std::getline(in.stream(), line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) {
      flush();
    } else if (line.find_first_not_of(" \t") != line.find('#')) {
      block += line + "\n";
    }
  }
  flush();
  return out;
}

std::string join(const std::vector<Rational>& values) {
  std::string out;
  for (const auto& v : values) {
    if (!out.empty()) out += ',';
    out += format_rational(v);
  }
  return out;
}

void print_sum(const FormalSum& s) {
  if (s.is_zero()) {
    std::cout << "# zero\n";
  } else {
    std::cout << format_formal_sum(s);
  }
}

struct Options {
  std::string dessin;
  std::vector<std::string> pair;
  std::string sum;
  std::string catalog;
  std::string table;
  std::string output;
  std::string element;
  std::size_t n = 0;
  std::size_t max_edges = 0;
  bool factor = false;
  bool all = false;
  bool relaxed = false;
  std::uint64_t order_cap = kDefaultGroupOrderCap;
  MinpolyCaps minpoly;
  SubalgebraCaps subalgebra;
};

void add_minpoly_caps(CLI::App* cmd, Options& o) {
  cmd->add_option("--max-degree", o.minpoly.max_degree, "Largest degree to try")->check(CLI::PositiveNumber);
  cmd->add_option("--max-basis", o.minpoly.max_basis, "Largest support to track")->check(CLI::PositiveNumber);
}

int run(const std::string& name, const Options& o) {
  if (name == "canon") {
    for (const auto& d : dessins_from(o.dessin)) std::cout << format_dessin(canonicalize(d)) << "\n";
  } else if (name == "decompose") {
    for (const auto& d : dessins_from(o.dessin)) {
      for (const auto& c : decompose(d)) std::cout << format_dessin(c.dessin()) << "\n";
    }
  } else if (name == "product") {
    print_sum(from_dessin(product(parse_dessin(o.pair[0]), parse_dessin(o.pair[1]))));
  } else if (name == "passport") {
    for (const auto& d : dessins_from(o.dessin)) {
      if (!is_irreducible(d)) throw Error("dessin " + format_dessin(d) + " is not irreducible");
      std::cout << format_passport(passport(IrreducibleDessin::from(d), o.order_cap)) << "\n";
    }
  } else if (name == "s3-orbit") {
    const Dessin d = parse_dessin(o.dessin);
    if (!o.element.empty()) {
      std::cout << format_dessin(s3_apply(S3Element::parse(o.element), d)) << "\n";
    } else {
      for (const auto& rho : S3Element::all()) {
        std::cout << rho.symbol() << ": " << format_dessin(s3_apply(rho, d)) << "\n";
      }
      std::cout << "orbit size " << s3_orbit(d).size() << "\n";
    }
  } else if (name == "minpoly") {
    FormalSum a;
    if (!o.dessin.empty()) {
      a = from_dessin(parse_dessin(o.dessin));
    } else {
      Input in(o.sum);
      a = parse_formal_sum(in.stream());
    }
    const auto p = minimal_polynomial(a, o.minpoly);
    std::cout << format_coefficients(p) << "\n";
    if (o.factor) std::cout << format_polynomial(p) << " = " << format_factorization(factor_over_q(p)) << "\n";
  } else if (name == "verify-splitting") {
    const auto entries = catalog_from(o.catalog).irreducible_entries();
    std::size_t split = 0;
    for (const auto& d : entries) {
      const auto r = verify_linear_splitting(d, o.minpoly);
      split += r.split;
      std::cout << format_dessin(d.dessin()) << " | minpoly " << format_coefficients(r.minimal_polynomial)
                << " | roots " << join(r.roots) << " | " << (r.split ? "split" : "NOT SPLIT") << "\n";
    }
    std::cout << "split " << split << " of " << entries.size() << "\n";
    if (split != entries.size()) return 1;
  } else if (name == "enumerate") {
    const std::size_t limit = o.max_edges ? o.max_edges : max_edges_from_environment();
    const Catalog c = enumerate(o.n, !o.all, limit);
    if (o.output.empty() || o.output == "-") {
      save_catalog(c, std::cout);
    } else {
      std::ofstream file(o.output);
      if (!file) throw Error("cannot write '" + o.output + "'");
      save_catalog(c, file);
    }
  } else if (name == "burnside") {
    std::cout << burnside_count(o.n) << "\n";
  } else if (name == "partition") {
    std::cout << write_orbit_table(invariant_partition(catalog_from(o.catalog).irreducible_entries()));
  } else if (name == "validate-orbits") {
    const OrbitTable t = table_from(o.table);
    const auto violations = validate_table(t, !o.relaxed);
    for (const auto& v : violations) std::cout << violation_kind_name(v.kind) << ": " << v.message << "\n";
    if (!violations.empty()) return 1;
    std::size_t members = 0;
    for (const auto& orbit : t.orbits()) members += orbit.members.size();
    std::cout << "valid: " << t.orbits().size() << " orbits, " << members << " dessins, provenance "
              << t.provenance() << "\n";
  } else if (name == "balanced") {
    print_sum(balanced(irreducible_from(o.dessin), table_from(o.table)));
  } else if (name == "check-conjecture1") {
    const OrbitTable t = table_from(o.table);
    const auto violations = validate_table(t, !o.relaxed);
    if (!violations.empty()) {
      throw Error("orbit table is invalid: " + std::string(violation_kind_name(violations.front().kind)) + ": " +
                  violations.front().message);
    }
    const std::vector<IrreducibleDessin> targets =
        o.dessin.empty() ? catalog_from(o.catalog).irreducible_entries()
                         : std::vector<IrreducibleDessin>{irreducible_from(o.dessin)};
    for (const auto& d : targets) std::cout << format_report(conjecture1_check(d, t, o.minpoly)) << "\n";
  } else if (name == "subalgebra") {
    const auto basis = balanced_subalgebra_basis(generators_from(o.sum), o.subalgebra);
    std::cout << "# dimension " << basis.size() << "\n";
    for (std::size_t i = 0; i < basis.size(); ++i) {
      std::cout << "\n# basis " << i + 1 << "\n";
      print_sum(basis[i]);
    }
  }
  return 0;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Dessins, their formal-sum algebra and balanced dessins"};
  app.set_config("--config", "", "Read options from a TOML or INI file");
  app.require_subcommand(1, 1);
  Options o;

  auto* canon = app.add_subcommand("canon", "Canonical form of a dessin");
  canon->add_option("dessin", o.dessin, "Dessin, or - to read one per line")->required();

  auto* decomp = app.add_subcommand("decompose", "Irreducible components of a dessin");
  decomp->add_option("dessin", o.dessin, "Dessin, or - to read one per line")->required();

  auto* prod = app.add_subcommand("product", "Cartesian product of two dessins as a formal sum");
  prod->add_option("dessins", o.pair, "Two dessins")->required()->expected(2);

  auto* pass = app.add_subcommand("passport", "Cycle types, genus and monodromy order");
  pass->add_option("dessin", o.dessin, "Irreducible dessin, or - to read one per line")->required();
  pass->add_option("--order-cap", o.order_cap, "Largest monodromy group to enumerate")->check(CLI::PositiveNumber);

  auto* orbit = app.add_subcommand("s3-orbit", "Images under the six permutations of the branch points");
  orbit->add_option("dessin", o.dessin, "Dessin")->required();
  orbit->add_option("--element", o.element, "Apply only this element, e.g. swap01 or \"(0 1 inf)\"");

  auto* minpoly = app.add_subcommand("minpoly", "Minimal polynomial of a dessin or formal sum");
  auto* d_opt = minpoly->add_option("--dessin", o.dessin, "Dessin");
  auto* s_opt = minpoly->add_option("--sum", o.sum, "Formal-sum file, or - for standard input");
  d_opt->excludes(s_opt);
  minpoly->add_flag("--factor", o.factor, "Also print the factorization over Q");
  add_minpoly_caps(minpoly, o);

  auto* split = app.add_subcommand("verify-splitting", "Check that minimal polynomials of catalog entries split over Q");
  split->add_option("catalog", o.catalog, "Catalog file, or - for standard input")->required();
  add_minpoly_caps(split, o);

  auto* enumerate_cmd = app.add_subcommand("enumerate", "Catalog of all dessins with n edges");
  enumerate_cmd->add_option("n", o.n, "Edge count")->required()->check(CLI::PositiveNumber);
  enumerate_cmd->add_flag("--all", o.all, "Include reducible dessins");
  enumerate_cmd->add_option("-o,--output", o.output, "Write the catalog here instead of standard output");
  enumerate_cmd->add_option("--max-edges", o.max_edges, "Refuse larger n (default DESSINALG_MAX_EDGES or 7)")
      ->check(CLI::PositiveNumber);

  auto* burnside = app.add_subcommand("burnside", "Number of dessins with n edges by Burnside's lemma");
  burnside->add_option("n", o.n, "Edge count")->required()->check(CLI::PositiveNumber);

  auto* partition = app.add_subcommand("partition", "Orbit table grouping catalog entries by passport");
  partition->add_option("catalog", o.catalog, "Catalog file, or - for standard input")->required();

  auto* validate = app.add_subcommand("validate-orbits", "Check an orbit table for consistency");
  validate->add_option("table", o.table, "Orbit-table file, or - for standard input")->required();
  validate->add_flag("--relaxed", o.relaxed, "Skip the passport check");

  auto* bal = app.add_subcommand("balanced", "Balanced dessin of an irreducible dessin");
  bal->add_option("dessin", o.dessin, "Irreducible dessin")->required();
  bal->add_option("--table", o.table, "Orbit-table file")->required();

  auto* conj = app.add_subcommand("check-conjecture1", "Compare factor degrees of balanced dessins with orbit sizes");
  auto* cd_opt = conj->add_option("--dessin", o.dessin, "Irreducible dessin");
  auto* cc_opt = conj->add_option("--catalog", o.catalog, "Catalog file, or - for standard input");
  cd_opt->excludes(cc_opt);
  conj->add_option("--table", o.table, "Orbit-table file")->required();
  conj->add_flag("--relaxed", o.relaxed, "Validate the table without the passport check");
  add_minpoly_caps(conj, o);

  auto* sub = app.add_subcommand("subalgebra", "Basis of the subalgebra generated by formal sums");
  sub->add_option("generators", o.sum, "Formal sums separated by blank lines, or - for standard input")->required();
  sub->add_option("--max-degree", o.subalgebra.max_degree, "Longest product of generators")->check(CLI::PositiveNumber);
  sub->add_option("--max-size", o.subalgebra.max_size, "Largest basis")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
    if (minpoly->parsed() && minpoly->count("--dessin") + minpoly->count("--sum") != 1) {
      throw CLI::RequiredError("exactly one of --dessin and --sum");
    }
    if (conj->parsed() && conj->count("--dessin") + conj->count("--catalog") != 1) {
      throw CLI::RequiredError("exactly one of --dessin and --catalog");
    }
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    return run(app.get_subcommands().front()->get_name(), o);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
