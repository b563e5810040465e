#include "cli.hpp"

#include <CLI11.hpp>
#include <chrono>
#include <fstream>
#include <optional>

#include "lcomplex/classify2.hpp"
#include "lcomplex/engine.hpp"
#include "lcomplex/error.hpp"
#include "lcomplex/harness.hpp"
#include "lcomplex/table_io.hpp"

namespace lcx::cli {

namespace {

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::Io:
    case ErrorCode::BadMagic:
    case ErrorCode::BadVersion:
    case ErrorCode::Truncated:
    case ErrorCode::BadChecksum:
    case ErrorCode::Malformed:
      return kExitIo;
    default:
      return kExitConfig;
  }
}

struct Options {
  std::optional<u64> l;
  std::optional<u64> max_n;
  std::string table;
  std::string table1;
  std::string out;
  std::string format = "csv";
  unsigned threads = 1;
  bool witness = false;
  bool no_reduction = false;
  std::size_t cap = 10000;
  std::optional<unsigned> m_max;
  std::optional<unsigned> r_max;
  std::optional<unsigned> u_max;
  std::optional<unsigned> a_max;
  std::optional<unsigned> b_max;
  std::optional<u64> l_max;
  std::optional<u64> n;
  std::optional<u64> n_max;
  std::optional<u64> from;
  std::optional<u64> to;
  std::string check;
};

/// Writes to --out when given, otherwise to the command's stdout.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) : target_(&fallback) {
    if (!path.empty()) {
      file_.open(path, std::ios::trunc);
      if (!file_) throw Error(ErrorCode::Io, "cannot open " + path + " for writing");
      target_ = &file_;
    }
  }
  std::ostream& stream() { return *target_; }

 private:
  std::ofstream file_;
  std::ostream* target_;
};

ComplexityTable load_checked(const std::string& path, std::optional<u64> expect_l) {
  ComplexityTable t = load_table(path);
  if (expect_l && *expect_l != t.l()) {
    throw Error(ErrorCode::InvalidConfig, "--l " + std::to_string(*expect_l) + " does not match table l=" +
                                              std::to_string(t.l()) + " in " + path);
  }
  return t;
}

/// The table named by `path`, or a fresh one for (l, max_n).
ComplexityTable table_or_build(const std::string& path, u64 l, u64 default_max, const Options& o) {
  if (!path.empty()) return load_checked(path, l);
  const u64 max_n = o.max_n.value_or(default_max) / l * l;
  return build_table(BuildConfig{.l = l, .max_n = max_n, .threads = o.threads});
}

int cmd_build(const Options& o, std::ostream& out, std::ostream& err) {
  const u64 l = o.l.value_or(2);
  if (l == 0) throw Error(ErrorCode::InvalidConfig, "--l must be positive");
  u64 max_n = *o.max_n;
  if (max_n % l != 0) {
    const u64 rounded = max_n / l * l;
    err << "warning: --max " << max_n << " is not a multiple of l=" << l << "; using " << rounded << "\n";
    max_n = rounded;
  }
  const BuildConfig cfg{.l = l, .max_n = max_n, .use_reduction = !o.no_reduction, .threads = o.threads};
  const auto start = std::chrono::steady_clock::now();
  const ComplexityTable t = build_table(cfg);
  const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
  save_table(t, o.out);

  out << "l = " << t.l() << "\n"
      << "max_n = " << t.max_n() << "\n"
      << "entries = " << t.size() << "\n"
      << "build_seconds = " << elapsed.count() << "\n"
      << "defect histogram:\n";
  int shown = 0;
  for (const auto& [d, count] : defect_histogram(t)) {
    if (shown++ == 8) {
      out << "  ...\n";
      break;
    }
    out << "  " << d << ": " << count << "\n";
  }
  out << "wrote " << o.out << "\n";
  return kExitOk;
}

int cmd_query(const Options& o, std::ostream& out) {
  const ComplexityTable t = load_checked(o.table, o.l);
  const u64 n = *o.n;
  out << t.complexity(n) << "\n";
  if (o.witness) out << to_string(witness(t, n), t.l()) << "\n";
  return kExitOk;
}

int cmd_classify(const Options& o, std::ostream& out) {
  const u64 n = *o.n;
  const Pow2Decomposition d = decompose_pow2(n);
  out << "n = " << n << "\n";
  out << "decomposition =";
  for (std::size_t i = 0; i < d.exponents.size(); ++i) out << (i ? " + 2^" : " 2^") << d.exponents[i];
  out << "\n";
  out << "m = " << floor_exponent(n) << "\n";
  const auto one = classify_m_plus_1(n);
  out << "m+1 form = " << (one ? describe(*one) : "none") << "\n";
  if (!one) {
    const auto two = classify_m_plus_2(n);
    out << "m+2 forms =";
    if (two.empty()) out << " none";
    for (const auto& f : two) out << " " << describe(f);
    out << "\n";
  }
  out << "lower bound = " << refined_lower_bound_2(n) << "\n";
  return kExitOk;
}

int cmd_census(const Options& o, std::ostream& out) {
  if (o.format != "csv" && o.format != "json") {
    throw Error(ErrorCode::InvalidConfig, "--format must be csv or json");
  }
  const ComplexityTable t = load_checked(o.table, o.l);
  const u64 l = t.l();
  const u64 from = o.from.value_or(l);
  const u64 to = o.to.value_or(t.max_n());
  if (from <= to && to > t.max_n()) {
    throw Error(ErrorCode::OutOfRange, "--to " + std::to_string(to) + " exceeds table range " + std::to_string(t.max_n()));
  }
  Sink sink(o.out, out);
  std::ostream& os = sink.stream();
  const bool csv = o.format == "csv";
  if (csv) os << (o.witness ? "n,complexity,defect,witness\n" : "n,complexity,defect\n");
  const u64 first = std::max<u64>(l, (from + l - 1) / l * l);
  for (u64 n = first; n <= to && from <= to; n += l) {
    const unsigned c = t[n];
    const unsigned d = defect(t, n);
    if (csv) {
      os << n << ',' << c << ',' << d;
      if (o.witness) os << ',' << to_string(witness(t, n), l);
      os << '\n';
    } else {
      ordered_json row{{"n", n}, {"complexity", c}, {"defect", d}};
      if (o.witness) row["witness"] = to_string(witness(t, n), l);
      os << row.dump() << '\n';
    }
  }
  return kExitOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
  const std::string& check = o.check;
  VerificationReport rep;
  std::optional<ComplexityTable> primary;  // for self-verification of counterexamples

  if (check == "classify2-exhaustive") {
    primary = table_or_build(o.table, 2, u64{1} << 20, o);
    rep = verify_classify2_exhaustive(*primary);
  } else if (check == "bounds") {
    if (!o.table.empty()) primary = load_checked(o.table, o.l);
    else primary = table_or_build("", o.l.value_or(2), u64{1} << 16, o);
    rep = verify_bounds(*primary);
  } else if (check == "reduction") {
    rep = verify_reduction(o.l.value_or(2), o.max_n.value_or(u64{1} << 16));
  } else if (check == "six-ten") {
    primary = table_or_build(o.table, 2, 300000, o);
    rep = verify_six_ten(*primary);
  } else if (check == "conjecture-l2") {
    primary = table_or_build(o.table, 2, 300000, o);
    rep = verify_conjecture_l2(*primary, o.r_max.value_or(9), o.m_max.value_or(64));
  } else if (check == "question2") {
    const u64 per_l = o.max_n.value_or(200000);
    rep = verify_question2(o.l_max.value_or(6), o.r_max.value_or(8), o.m_max.value_or(32), [&](u64 l) {
      return build_table(BuildConfig{.l = l, .max_n = per_l / l * l, .threads = o.threads});
    });
  } else if (check == "a-set") {
    primary = table_or_build(o.table, o.l.value_or(2), u64{1} << 18, o);
    rep = o.n ? verify_a_set(*primary, *o.n, o.m_max)
              : scan_a_set(primary->l(), o.n_max.value_or(1000), o.m_max.value_or(8), *primary);
  } else if (check == "question4") {
    primary = table_or_build(o.table, 2, u64{1} << 20, o);
    rep = verify_question4(*primary, o.u_max.value_or(6), o.r_max.value_or(6), o.m_max.value_or(64));
  } else if (check == "question5") {
    const u64 n_max = o.n_max.value_or(1000);
    const ComplexityTable t1 =
        o.table1.empty() ? build_table(BuildConfig{.l = 1, .max_n = n_max}) : load_checked(o.table1, 1);
    primary = table_or_build(o.table, 2, u64{1} << 22, o);
    rep = verify_question5(n_max, o.cap, t1, *primary).report;
  } else if (check == "conjecture-l1") {
    const std::string& path = o.table1.empty() ? o.table : o.table1;
    primary = path.empty() ? build_table(BuildConfig{.l = 1, .max_n = o.max_n.value_or(100000)})
                           : load_checked(path, 1);
    rep = verify_conjecture_l1(*primary, o.a_max.value_or(64), o.b_max.value_or(64));
  } else if (check == "oracle-equivalence") {
    rep = verify_oracle_equivalence(o.l.value_or(2), o.m_max.value_or(14));
  } else {
    throw Error(ErrorCode::InvalidConfig, "unknown check '" + check + "'");
  }

  if (primary && !counterexamples_reproduce(rep, *primary)) {
    rep.add_note("counterexamples did not reproduce against the table");
  }
  Sink sink(o.out, out);
  sink.stream() << to_json(rep).dump(2) << "\n";
  return rep.status == Status::Fail ? kExitCheckFailed : kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"l-complexity tables, witnesses, classification and verification checks", "lcx"};
  app.require_subcommand(1);
  Options o;

  auto* build = app.add_subcommand("build", "Build a complexity table and write it to disk");
  build->add_option("--l", o.l, "Literal l (default 2)");
  build->add_option("--max", o.max_n, "Largest n; rounded down to a multiple of l")->required();
  build->add_option("--out", o.out, "Output table path")->required();
  build->add_option("--threads", o.threads, "Worker threads")->check(CLI::PositiveNumber);
  build->add_flag("--no-reduction", o.no_reduction, "Skip the b + a*l shortcut");

  auto* query = app.add_subcommand("query", "Look up ||n||_l in a table");
  query->add_option("n", o.n, "Value to query")->required();
  query->add_option("--table", o.table, "Table path")->required();
  query->add_option("--l", o.l, "Expected l of the table");
  query->add_flag("--witness", o.witness, "Also print a minimal expression");

  auto* classify = app.add_subcommand("classify", "Match an even n against the m+1 / m+2 closed forms");
  classify->add_option("n", o.n, "Even value")->required();

  auto* census = app.add_subcommand("census", "Stream (n, complexity, defect) rows from a table");
  census->add_option("--table", o.table, "Table path")->required();
  census->add_option("--l", o.l, "Expected l of the table");
  census->add_option("--from", o.from, "First n (default l)");
  census->add_option("--to", o.to, "Last n (default max_n)");
  census->add_option("--format", o.format, "csv or json (JSON lines)");
  census->add_option("--out", o.out, "Output path (default stdout)");
  census->add_flag("--witness", o.witness, "Add a witness column");

  auto* verify = app.add_subcommand("verify", "Run a verification check and emit a JSON report");
  verify->add_option("check", o.check,
                     "classify2-exhaustive | bounds | reduction | six-ten | conjecture-l2 | question2 | a-set | "
                     "question4 | question5 | conjecture-l1 | oracle-equivalence")
      ->required();
  verify->add_option("--table", o.table, "Table path (l from its header)");
  verify->add_option("--table1", o.table1, "l = 1 table path");
  verify->add_option("--l", o.l, "Literal l");
  verify->add_option("--max", o.max_n, "Range for tables built on the fly");
  verify->add_option("--threads", o.threads, "Worker threads for tables built on the fly")
      ->check(CLI::PositiveNumber);
  verify->add_option("--m-max,--m", o.m_max, "Largest m (or oracle depth)");
  verify->add_option("--r-max", o.r_max, "Largest r");
  verify->add_option("--u-max", o.u_max, "Largest u (question4)");
  verify->add_option("--a-max", o.a_max, "Largest a (conjecture-l1)");
  verify->add_option("--b-max", o.b_max, "Largest b (conjecture-l1)");
  verify->add_option("--l-max", o.l_max, "Largest l (question2)");
  verify->add_option("--n", o.n, "Single n (a-set)");
  verify->add_option("--n-max", o.n_max, "Largest n scanned (a-set, question5)");
  verify->add_option("--cap", o.cap, "Representations per n (question5)");
  verify->add_option("--out", o.out, "Report path (default stdout)");

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitConfig;
  }

  try {
    if (build->parsed()) return cmd_build(o, out, err);
    if (query->parsed()) return cmd_query(o, out);
    if (classify->parsed()) return cmd_classify(o, out);
    if (census->parsed()) return cmd_census(o, out);
    return cmd_verify(o, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << " [" << to_string(e.code()) << "]\n";
    return exit_code_for(e.code());
  }
}

}  // namespace lcx::cli
