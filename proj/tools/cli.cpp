#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include "covsys/covsys.hpp"

namespace covsys::cli {

namespace {

constexpr const char* kDefaultSearchCap = "100000000";

struct UsageError : Error {
  using Error::Error;
};

/// Aligned text table that can also print itself as CSV.
class Table {
 public:
  explicit Table(std::vector<std::string> header) : header_(std::move(header)) {}

  void add(std::vector<std::string> row) { rows_.push_back(std::move(row)); }

  void print(std::ostream& out, bool csv) const {
    if (csv) {
      print_csv_row(out, header_);
      for (const auto& row : rows_) print_csv_row(out, row);
      return;
    }
    std::vector<std::size_t> width(header_.size(), 0);
    auto widen = [&](const std::vector<std::string>& row) {
      for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
    };
    widen(header_);
    for (const auto& row : rows_) widen(row);
    auto line = [&](const std::vector<std::string>& row) {
      for (std::size_t i = 0; i < row.size(); ++i) {
        out << row[i];
        if (i + 1 < row.size()) out << std::string(width[i] - row[i].size() + 2, ' ');
      }
      out << '\n';
    };
    line(header_);
    for (const auto& row : rows_) line(row);
  }

 private:
  static void print_csv_row(std::ostream& out, const std::vector<std::string>& row) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out << ',';
      out << row[i];
    }
    out << '\n';
  }

  std::vector<std::string> header_;
  std::vector<std::vector<std::string>> rows_;
};

/// Two-column key/value report.
class Report {
 public:
  void add(std::string key, std::string value) { table_.add({std::move(key), std::move(value)}); }
  void print(std::ostream& out, bool csv) const { table_.print(out, csv); }

 private:
  Table table_{{"key", "value"}};
};

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string join_polys(const std::vector<Poly>& polys) {
  std::string s;
  for (const auto& p : polys) {
    if (!s.empty()) s += ' ';
    s += p.to_string();
  }
  return s;
}

BigInt parse_cap(const std::string& text) {
  if (text.empty() || !std::all_of(text.begin(), text.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    throw UsageError("--cap must be a nonnegative integer, got '" + text + "'");
  }
  return BigInt(text);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot write " + path);
  out << text;
}

CongruenceSystem load_system(const std::string& path) {
  try {
    return parse_system(read_file(path));
  } catch (const ParseError& e) {
    throw UsageError(path + ": " + e.what());
  }
}

Field prime_field(std::uint64_t q) {
  if (!is_prime(q)) throw UsageError("--q must be prime for this command");
  return Field::prime(static_cast<std::uint32_t>(q));
}

Field any_field(std::uint64_t q) {
  try {
    return Field::of_order(q);
  } catch (const InvalidArgument& e) {
    throw UsageError(e.what());
  }
}

// "2:1,3:2" -> groups of (degree, classes)
std::vector<ClassGroup> parse_groups(const std::string& text) {
  std::vector<ClassGroup> groups;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto colon = item.find(':');
    if (colon == std::string::npos) throw UsageError("--groups entries are d:k, got '" + item + "'");
    try {
      ClassGroup g;
      g.degree = static_cast<std::uint32_t>(std::stoul(item.substr(0, colon)));
      g.classes = BigInt(std::stoull(item.substr(colon + 1)));
      groups.push_back(g);
    } catch (const std::logic_error&) {
      throw UsageError("--groups entries are d:k, got '" + item + "'");
    }
  }
  if (groups.empty()) throw UsageError("--groups is empty");
  std::stable_sort(groups.begin(), groups.end(), [](const auto& a, const auto& b) { return a.degree < b.degree; });
  return groups;
}

struct Options {
  std::uint64_t q = 2;
  std::uint32_t n = 0;
  std::string file;
  std::optional<std::uint32_t> below;
  std::string cap;
  bool csv = false;
  std::uint32_t max_mod_deg = 0;
  std::uint32_t degree_budget = 0;
  std::string target = "0";
  std::string groups;
  std::string table;
  bool list = false;
};

// ---------------------------------------------------------------- commands

int cmd_check(const Options& o, std::ostream& out) {
  const auto system = load_system(o.file);
  const BigInt cap = o.cap.empty() ? BigInt(kDefaultClassCap) : parse_cap(o.cap);
  Report r;
  r.add("q", std::to_string(system.field().order()));
  r.add("congruences", std::to_string(system.size()));
  r.add("density", to_string(density_upper(system)));
  if (o.below) {
    const auto cov = coverage_below(system, *o.below);
    r.add("below", std::to_string(*o.below));
    r.add("checked", std::to_string(cov.checked_count));
    r.add("covered", std::to_string(cov.covered_count));
    r.add("uncovered", std::to_string(cov.uncovered_count()));
    if (!cov.uncovered.empty()) r.add("first_uncovered", join_polys(cov.uncovered));
  }
  const auto exact = covers_everything_exact(system, cap);
  r.add("lcm", exact.modulus_lcm.to_string());
  r.add("classes", std::to_string(exact.classes_checked));
  r.add("covers_all", yes_no(exact.complete));
  if (exact.witness_class) {
    r.add("witness", exact.witness_class->residue.to_string() + " mod " + exact.witness_class->modulus.to_string());
  }
  r.print(out, o.csv);
  return kOk;
}

int cmd_sharp(const Options& o, std::ostream& out, std::ostream& err) {
  if (o.n == 0) throw UsageError("--n must be positive");
  const Field f2 = Field::prime(2);
  Poly target(f2);
  try {
    target = parse_poly(f2, o.target);
  } catch (const ParseError& e) {
    throw UsageError(std::string("--target: ") + e.what());
  }
  SharpSystem sharp;
  try {
    sharp = build_sharp_system(o.n, target);
  } catch (const UniquenessFailure& e) {
    err << "uniqueness failure: " << e.what() << '\n';
    return kViolation;
  } catch (const InvalidArgument& e) {
    throw UsageError(e.what());
  }
  const std::string path = o.file.empty() ? "sharp-" + std::to_string(o.n) + ".cov" : o.file;
  write_file(path, format_system(sharp.system));

  const auto cov = coverage_below(sharp.system, o.n);
  const auto report = verify_sharp(sharp);
  Report r;
  r.add("file", path);
  r.add("n", std::to_string(o.n));
  r.add("target", sharp.target.to_string());
  r.add("covered", std::to_string(cov.covered_count) + "/" + std::to_string(cov.checked_count));
  r.add("uncovered", join_polys(cov.uncovered));
  r.add("disjoint", yes_no(report.disjoint));
  r.add("partition", yes_no(report.partition));
  r.add("uncovered_is_target", yes_no(report.uncovered_is_target));
  r.print(out, o.csv);
  for (const auto& f : report.failures) err << "sharp: " << f << '\n';
  return report.ok() ? kOk : kViolation;
}

// Lays the groups out as a concrete system over F_q: group i uses the next unused
// monic irreducible of degree d_i and its first k_i residues in index order.
CongruenceSystem realize_groups(const Field& field, const std::vector<ClassGroup>& groups) {
  std::map<std::uint32_t, std::vector<Poly>> pool;
  std::map<std::uint32_t, std::size_t> next;
  CongruenceSystem system(field);
  for (const auto& g : groups) {
    auto& irr = pool[g.degree];
    if (irr.empty()) {
      for (const auto& p : monic_of_degree(field, g.degree)) {
        if (is_irreducible(p)) irr.push_back(p);
      }
    }
    const std::size_t i = next[g.degree]++;
    if (i >= irr.size()) throw UsageError("not enough irreducibles of degree " + std::to_string(g.degree));
    const auto k = static_cast<std::uint64_t>(g.classes);
    for (std::uint64_t r = 0; r < k; ++r) system.add(Congruence(irr[i], Poly::from_index(field, r)));
  }
  return system;
}

int cmd_bound(const Options& o, std::ostream& out) {
  if (o.n == 0) throw UsageError("--n must be positive");
  if (o.groups.empty()) throw UsageError("bound needs --groups d:k,...");
  const Field field = prime_field(o.q);
  BoundInstance inst;
  inst.q = o.q;
  inst.n = o.n;
  inst.groups = parse_groups(o.groups);
  try {
    inst.split = 1;
    validate(inst);
  } catch (const InvalidArgument& e) {
    throw UsageError(e.what());
  }
  const auto system = realize_groups(field, inst.groups);
  const BigInt uncovered = coverage_below(system, o.n).uncovered_count();
  const bool all_zero =
      std::all_of(inst.groups.begin(), inst.groups.end(), [](const ClassGroup& g) { return g.classes == 0; });

  Table t({"n", "s", "lhs", "rhs", "holds"});
  bool all_hold = true;
  for (std::size_t s = 1; s <= inst.groups.size(); ++s) {
    inst.split = s;
    const Rational bound = lemma_ie_bound(inst);
    const bool holds = all_zero ? Rational(uncovered) == bound : Rational(uncovered) > bound;
    all_hold = all_hold && holds;
    t.add({std::to_string(o.n), std::to_string(s), to_string(uncovered), to_string(bound), yes_no(holds)});
  }
  t.print(out, o.csv);
  return all_hold ? kOk : kViolation;
}

int cmd_irr(const Options& o, std::ostream& out) {
  if (o.n == 0) throw UsageError("--n must be positive");
  const Field field = any_field(o.q);
  if (o.list) {
    for (const auto& p : monic_of_degree(field, o.n)) {
      if (is_irreducible(p)) out << p.to_string() << '\n';
    }
    return kOk;
  }
  Table t({"d", "enumerated", "formula", "cumulative"});
  bool agree = true;
  const auto irr = irreducibles_up_to(field, o.n);
  for (std::uint32_t d = 1; d <= o.n; ++d) {
    const auto enumerated =
        std::count_if(irr.begin(), irr.end(), [&](const Poly& p) { return p.degree() == d; });
    const BigInt formula = count_irreducible(o.q, d);
    agree = agree && formula == enumerated;
    t.add({std::to_string(d), std::to_string(enumerated), to_string(formula),
           to_string(cumulative_irreducible_count(o.q, d))});
  }
  t.print(out, o.csv);
  return agree ? kOk : kViolation;
}

int cmd_adjust(const Options& o, std::ostream& out, std::ostream& err) {
  const auto system = load_system(o.file);
  const std::size_t n = o.n == 0 ? system.size() : o.n;
  const BigInt cap = o.cap.empty() ? BigInt(kDefaultClassCap) : parse_cap(o.cap);
  NormalizedSystem result;
  try {
    result = normalize_lemma1(system, n, cap);
  } catch (const PremiseViolated& e) {
    throw UsageError(e.what());
  } catch (const NormalizationBlocked& e) {
    err << "normalization blocked: " << e.what() << '\n';
    return kViolation;
  } catch (const PostconditionFailed& e) {
    err << "postcondition failed: " << e.what() << '\n';
    return kViolation;
  }
  const auto cond = check_lemma1_conditions(result.system, result.omitted, n);
  out << format_system(result.system);
  out << "# omitted " << result.omitted.to_string() << '\n';
  out << "# covers_below " << yes_no(cond.covers_below) << '\n';
  out << "# irreducible_moduli " << yes_no(cond.irreducible_moduli) << '\n';
  out << "# multiplicity_bound " << yes_no(cond.multiplicity_bound) << '\n';
  out << "# multiplicity_strict " << yes_no(cond.multiplicity_strict) << '\n';
  return cond.ok() ? kOk : kViolation;
}

void print_search(const SearchResult& res, const Options& o, std::ostream& out) {
  Report r;
  r.add("systems_examined", to_string(res.systems_examined));
  r.add("premise_hits", to_string(res.premise_hits));
  r.add("counterexamples", std::to_string(res.counterexamples.size()));
  r.print(out, o.csv);
}

int cmd_verify_theorem(const Options& o, std::ostream& out) {
  if (o.n == 0 || o.max_mod_deg == 0) throw UsageError("verify-theorem needs positive --n and --max-mod-deg");
  const Field field = any_field(o.q);
  const BigInt cap = parse_cap(o.cap.empty() ? kDefaultSearchCap : o.cap);
  const auto res = verify_theorem(field, o.n, o.max_mod_deg, cap);
  print_search(res, o, out);
  if (res.counterexamples.empty()) {
    if (!o.csv) out << "no counterexample\n";
    return kOk;
  }
  for (const auto& s : res.counterexamples) {
    if (s.field().is_prime_field()) out << "\n" << format_system(s);
  }
  return kViolation;
}

int cmd_conjecture(const Options& o, std::ostream& out) {
  if (o.n == 0 || o.degree_budget == 0) throw UsageError("conjecture needs positive --n and --degree-budget");
  any_field(o.q);
  const BigInt cap = parse_cap(o.cap.empty() ? kDefaultSearchCap : o.cap);
  const std::size_t cover = conjecture_cover_degree(o.q, o.n);
  const auto found = conjecture_search(o.q, o.n, o.degree_budget, cap);
  const std::string prefix = o.file.empty() ? "conjecture" : o.file;
  std::vector<std::string> written;
  for (std::size_t i = 0; i < found.size(); ++i) {
    if (!found[i].field().is_prime_field()) continue;
    written.push_back(prefix + "-" + std::to_string(i + 1) + ".cov");
    write_file(written.back(), format_system(found[i]));
  }
  for (const auto& path : written) out << "wrote " << path << '\n';
  out << "q " << o.q << " n " << o.n << " cover_degree " << cover << " degree_budget " << o.degree_budget
      << " candidates " << found.size() << '\n';
  return found.empty() ? kOk : kViolation;
}

int cmd_thresholds(const Options& o, std::ostream& out) {
  const std::uint32_t top = o.n == 0 ? 20 : o.n;
  Table t({"n", "lhs", "rhs", "holds"});
  if (o.table == "theorem2") {
    for (std::uint32_t n = 1; n <= top; ++n) {
      const auto c = theorem2_check(n);
      t.add({std::to_string(n), to_string(c.lhs_pow6), to_string(c.rhs_pow6), yes_no(c.holds)});
    }
  } else if (o.table == "coverage") {
    for (std::uint32_t n = 1; n <= top; ++n) {
      const BigInt upper = max_coverage_upper(o.q, n);
      const BigInt total = ipow(BigInt(o.q), n);
      t.add({std::to_string(n), to_string(upper), to_string(total), yes_no(upper < total)});
    }
  } else if (o.table == "lemma3") {
    for (std::uint32_t d = 2; d <= top; ++d) {
      const auto c = lemma3_bound_check(o.q, d);
      t.add({std::to_string(d), to_string(c.lhs), to_string(c.rhs), yes_no(c.holds)});
    }
  } else if (o.table == "degree-gap") {
    for (std::uint32_t n = 1; n <= top; ++n) {
      const auto c = corollary_degree_gap_check(o.q, n);
      t.add({std::to_string(n), to_string(c.lhs), to_string(c.rhs), yes_no(c.holds)});
    }
  } else {
    throw UsageError("--table must be one of theorem2, coverage, lemma3, degree-gap");
  }
  t.print(out, o.csv);
  return kOk;
}

}  // namespace

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Covering systems of congruences over F_q[x]", "covsys"};
  app.require_subcommand(1);
  Options o;

  auto add_q = [&](CLI::App* sub) { sub->add_option("--q", o.q, "field order")->capture_default_str(); };
  auto add_cap = [&](CLI::App* sub) { sub->add_option("--cap", o.cap, "enumeration cap"); };
  auto add_csv = [&](CLI::App* sub) { sub->add_flag("--csv", o.csv, "print CSV"); };

  auto* check = app.add_subcommand("check", "coverage below a degree and exact global coverage");
  check->add_option("--file", o.file, ".cov file")->required();
  check->add_option("--below", o.below, "check every polynomial of degree < below");
  add_cap(check);
  add_csv(check);

  auto* sharp = app.add_subcommand("sharp", "build the sharp system with moduli x, ..., x^n over F_2");
  sharp->add_option("--n", o.n)->required();
  sharp->add_option("--target", o.target, "the polynomial left uncovered")->capture_default_str();
  sharp->add_option("--file", o.file, "output .cov path (default sharp-<n>.cov)");
  add_csv(sharp);

  auto* bound = app.add_subcommand("bound", "inclusion-exclusion bound against brute-force counts");
  add_q(bound);
  bound->add_option("--n", o.n)->required();
  bound->add_option("--groups", o.groups, "d:k,... classes per irreducible modulus")->required();
  add_csv(bound);

  auto* irr = app.add_subcommand("irr", "count or list monic irreducibles");
  add_q(irr);
  irr->add_option("--n", o.n, "degree")->required();
  irr->add_flag("--list", o.list, "list the irreducibles of degree n");
  add_csv(irr);

  auto* adjust = app.add_subcommand("adjust", "normalize a counterexample-shaped system");
  adjust->add_option("--file", o.file, ".cov file")->required();
  adjust->add_option("--n", o.n, "degree bound (default: number of congruences)");
  add_cap(adjust);

  auto* verify = app.add_subcommand("verify-theorem", "exhaustive search for counterexamples");
  add_q(verify);
  verify->add_option("--n", o.n, "largest system size")->required();
  verify->add_option("--max-mod-deg", o.max_mod_deg)->required();
  add_cap(verify);
  add_csv(verify);

  auto* conj = app.add_subcommand("conjecture", "search below the conjectured degree bound");
  add_q(conj);
  conj->add_option("--n", o.n, "number of congruences")->required();
  conj->add_option("--degree-budget", o.degree_budget, "largest modulus degree")->required();
  conj->add_option("--file", o.file, "prefix for candidate files (default conjecture)");
  add_cap(conj);

  auto* thresholds = app.add_subcommand("thresholds", "exact bound tables");
  add_q(thresholds);
  thresholds->add_option("--table", o.table, "theorem2, coverage, lemma3 or degree-gap")->required();
  thresholds->add_option("--n", o.n, "last row (default 20)");
  add_csv(thresholds);

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (check->parsed()) return cmd_check(o, out);
    if (sharp->parsed()) return cmd_sharp(o, out, err);
    if (bound->parsed()) return cmd_bound(o, out);
    if (irr->parsed()) return cmd_irr(o, out);
    if (adjust->parsed()) return cmd_adjust(o, out, err);
    if (verify->parsed()) return cmd_verify_theorem(o, out);
    if (conj->parsed()) return cmd_conjecture(o, out);
    if (thresholds->parsed()) return cmd_thresholds(o, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const PostconditionFailed& e) {
    err << "postcondition failed: " << e.what() << '\n';
    return kViolation;
  }
  return kUsage;
}

}  // namespace covsys::cli
