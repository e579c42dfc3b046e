#include "spaving/cli.hpp"

#include "spaving/acceptance.hpp"
#include "spaving/codes.hpp"
#include "spaving/ehrhart.hpp"
#include "spaving/matroid.hpp"
#include "spaving/oracle.hpp"
#include "spaving/report.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <map>
#include <ostream>
#include <sstream>

namespace spaving::cli {

namespace {

// Building the full polynomial interpolates at n points; past this the
// user should go through `bounds` or `search` on smaller ranges.
constexpr int kMaxPolynomialGround = 1000;

enum class Format { kText, kJson, kCsv };

struct Range {
  int lo = 0;
  int hi = -1;  // hi < lo: unset
};

Range parse_range(const std::string& text, const char* flag) {
  const auto colon = text.find(':');
  try {
    if (colon == std::string::npos) {
      const int v = std::stoi(text);
      return {v, v};
    }
    return {std::stoi(text.substr(0, colon)), std::stoi(text.substr(colon + 1))};
  } catch (const std::logic_error&) {
    throw std::invalid_argument(std::string(flag) + " expects a:b, got '" + text + "'");
  }
}

Integer parse_integer(const std::string& text, const char* flag) {
  Integer z;
  if (text.empty() || z.set_str(text, 10) != 0)
    throw std::invalid_argument(std::string(flag) + " expects an integer, got '" + text + "'");
  return z;
}

void check_ground(int n, int k) {
  if (n < 1) throw std::invalid_argument("--n must be positive");
  if (k < 0 || k > n) throw std::invalid_argument("--k must lie in 0..n");
  if (n > kMaxPolynomialGround)
    throw BudgetError("polynomial too large: n = " + std::to_string(n) + " > " +
                      std::to_string(kMaxPolynomialGround));
}

std::string joined_fractions(const Polynomial& p) {
  std::string s;
  for (std::size_t i = 0; i < p.coefficients().size(); ++i)
    s += (i ? ", " : "") + to_fraction_string(p.coefficients()[i]);
  return s;
}

// "1/2 t^2 + 3/2 t + 1", leading term first.
std::string human_polynomial(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::string s;
  for (int m = p.degree(); m >= 0; --m) {
    Rational c = p.coefficient(m);
    if (c == 0) continue;
    if (s.empty()) {
      if (c < 0) s += "-";
    } else {
      s += c < 0 ? " - " : " + ";
    }
    if (c < 0) c = -c;
    const bool unit = c == 1 && m > 0;
    if (!unit) s += to_display_string(c);
    if (m > 0) s += std::string(unit ? "" : " ") + "t" + (m > 1 ? "^" + std::to_string(m) : "");
  }
  return s;
}

std::string semicolon_fractions(const std::vector<Rational>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ";" : "") + to_fraction_string(v[i]);
  return s;
}

void emit_polynomial(std::ostream& out, Format format, const std::string& label, int n, int k,
                     const Polynomial& p) {
  switch (format) {
    case Format::kText:
      out << label << " = " << human_polynomial(p) << '\n';
      out << "coefficients (constant first): " << joined_fractions(p) << '\n';
      break;
    case Format::kJson: {
      nlohmann::json j;
      j["n"] = n;
      j["k"] = k;
      j["coefficients"] = polynomial_to_json(p);
      out << j.dump(2) << '\n';
      break;
    }
    case Format::kCsv:
      out << "n,k,coefficients\n"
          << n << ',' << k << ",\"" << semicolon_fractions(p.coefficients()) << "\"\n";
      break;
  }
}

void emit_reports(std::ostream& out, Format format, const std::vector<CounterexampleReport>& rs) {
  switch (format) {
    case Format::kText:
      for (std::size_t i = 0; i < rs.size(); ++i) {
        if (i) out << '\n';
        write_report_text(out, rs[i]);
      }
      break;
    case Format::kJson: {
      if (rs.size() == 1) {
        out << report_to_json(rs.front()).dump(2) << '\n';
        break;
      }
      auto arr = nlohmann::json::array();
      for (const auto& r : rs) arr.push_back(report_to_json(r));
      out << arr.dump(2) << '\n';
      break;
    }
    case Format::kCsv:
      out << kReportCsvHeader << '\n';
      for (const auto& r : rs) out << report_to_csv_row(r) << '\n';
      break;
  }
}

struct Options {
  Format format = Format::kText;
  int n = -1;
  int k = -1;
  std::string lambda;
  std::string provenance;
  std::string matroid_file;
  std::string matroid_out;
  std::string n_range;
  std::string k_range;
  unsigned threads = 1;
  bool shifted = false;
  bool skip_heavy = false;
  bool check_real_rooted = false;
  std::vector<int> only;
  std::int64_t t_max = 4;
  std::uint64_t budget = kDefaultEnumerationBudget;
};

// lambda from --lambda / --provenance, defaulting to the Graham-Sloane bound.
std::pair<Integer, LambdaProvenance> resolve_lambda(const Options& o) {
  if (o.lambda.empty()) {
    if (!o.provenance.empty() && o.provenance != "gs-bound")
      throw std::invalid_argument("--provenance " + o.provenance + " requires --lambda");
    return {gs_lower_bound(o.n, o.k), LambdaProvenance::kGsBound};
  }
  const Integer lambda = parse_integer(o.lambda, "--lambda");
  const LambdaProvenance prov =
      o.provenance.empty() ? LambdaProvenance::kUser : parse_provenance(o.provenance);
  return {lambda, prov};
}

int cmd_uniform(const Options& o, std::ostream& out) {
  check_ground(o.n, o.k);
  emit_polynomial(out, o.format,
                  "ehr(U_{" + std::to_string(o.k) + "," + std::to_string(o.n) + "}, t)", o.n, o.k,
                  ehr_uniform(o.k, o.n));
  return kOk;
}

int cmd_minimal(const Options& o, std::ostream& out) {
  check_ground(o.n, o.k);
  if (o.k == 0 || o.k == o.n) throw std::invalid_argument("minimal matroids need 0 < k < n");
  const std::string name = "ehr(T_{" + std::to_string(o.k) + "," + std::to_string(o.n) + "}, ";
  if (o.shifted)
    emit_polynomial(out, o.format, name + "t - 1)", o.n, o.k, ehr_minimal_shifted(o.k, o.n));
  else
    emit_polynomial(out, o.format, name + "t)", o.n, o.k, ehr_minimal(o.k, o.n));
  return kOk;
}

int cmd_sparse(Options o, std::ostream& out) {
  CounterexampleReport report;
  if (!o.matroid_file.empty()) {
    if (!o.lambda.empty()) throw std::invalid_argument("--lambda conflicts with --matroid-file");
    const SparsePavingMatroid m = read_matroid_file(o.matroid_file);
    if ((o.n >= 0 && o.n != m.ground_size()) || (o.k >= 0 && o.k != m.rank()))
      throw std::invalid_argument("--n/--k disagree with the matroid file");
    check_ground(m.ground_size(), m.rank());
    report = make_report(m.ground_size(), m.rank(), Integer(static_cast<unsigned long>(m.lambda())),
                         LambdaProvenance::kUser);
  } else {
    check_ground(o.n, o.k);
    const auto [lambda, prov] = resolve_lambda(o);
    report = make_report(o.n, o.k, lambda, prov);
  }
  emit_reports(out, o.format, {report});
  return kOk;
}

int cmd_code(const Options& o, std::ostream& out) {
  if (o.n < 1 || o.n > 64) throw std::invalid_argument("--n must lie in 1..64");
  if (o.k < 0 || o.k > o.n) throw std::invalid_argument("--k must lie in 0..n");
  const auto sizes = gs_classes(o.n, o.k, o.budget);
  const ConstantWeightCode code = gs_best_class(o.n, o.k, o.budget);
  const CodeReport report = make_code_report(code, sizes);
  if (!o.matroid_out.empty()) {
    const SparsePavingMatroid m = code.to_matroid(Validation::kFull);
    if (o.matroid_out == "-") {
      write_matroid(out, m);
    } else {
      std::ofstream file(o.matroid_out);
      if (!file) throw std::invalid_argument("cannot write '" + o.matroid_out + "'");
      write_matroid(file, m);
    }
  }
  if (o.matroid_out == "-") return kOk;
  switch (o.format) {
    case Format::kText:
      out << "n = " << report.n << ", k = " << report.k << '\n';
      out << "class sizes:";
      for (const auto& s : report.class_sizes) out << ' ' << s.get_str();
      out << '\n';
      out << "chosen class: " << report.chosen_index << " (" << code.words.size() << " words)\n";
      out << "lower bound floor(C(n,k)/n): " << report.lower_bound.get_str() << '\n';
      out << "upper bound: " << report.upper_bound.get_str() << '\n';
      break;
    case Format::kJson:
      out << code_report_to_json(report).dump(2) << '\n';
      break;
    case Format::kCsv: {
      std::string sizes_cell;
      for (std::size_t i = 0; i < report.class_sizes.size(); ++i)
        sizes_cell += (i ? ";" : "") + report.class_sizes[i].get_str();
      out << "n,k,class_sizes,chosen_index,lower_bound,upper_bound\n"
          << report.n << ',' << report.k << ",\"" << sizes_cell << "\"," << report.chosen_index
          << ',' << report.lower_bound.get_str() << ',' << report.upper_bound.get_str() << '\n';
      break;
    }
  }
  return kOk;
}

int cmd_bounds(const Options& o, std::ostream& out) {
  if (o.n < 1) throw std::invalid_argument("--n must be positive");
  if (o.k < 0 || o.k > o.n) throw std::invalid_argument("--k must lie in 0..n");
  const Integer gs = gs_lower_bound(o.n, o.k);
  const Integer upper = max_ch_upper_bound(o.n, o.k);
  const bool quad = o.k >= 2 && o.k <= o.n - 2;
  std::vector<std::pair<std::string, std::string>> rows = {
      {"gs_lower_bound", gs.get_str()},
      {"max_ch_upper_bound", upper.get_str()},
  };
  if (quad) {
    rows.emplace_back("lower_bound_quad_minimal", to_fraction_string(lower_bound_quad(o.k, o.n)));
    rows.emplace_back("intermediate_bound_quad_uniform",
                      to_fraction_string(intermediate_bound_quad_uniform(o.k, o.n)));
    rows.emplace_back("upper_bound_quad_uniform",
                      to_fraction_string(upper_bound_quad_uniform(o.k, o.n)));
    rows.emplace_back("counterexample_inequality",
                      counterexample_inequality(o.k, o.n) ? "true" : "false");
  }
  switch (o.format) {
    case Format::kText:
      out << "n = " << o.n << ", k = " << o.k << '\n';
      for (const auto& [key, value] : rows) {
        const bool fraction = value.find('/') != std::string::npos;
        out << key << ": " << (fraction ? to_display_string(parse_rational(value)) : value) << '\n';
      }
      break;
    case Format::kJson: {
      nlohmann::json j;
      j["n"] = o.n;
      j["k"] = o.k;
      j["gs_lower_bound"] = integer_to_json(gs);
      j["max_ch_upper_bound"] = integer_to_json(upper);
      for (std::size_t i = 2; i < rows.size(); ++i) {
        if (rows[i].second == "true" || rows[i].second == "false")
          j[rows[i].first] = rows[i].second == "true";
        else
          j[rows[i].first] = rows[i].second;
      }
      out << j.dump(2) << '\n';
      break;
    }
    case Format::kCsv: {
      std::string header = "n,k";
      std::string line = std::to_string(o.n) + "," + std::to_string(o.k);
      for (const auto& [key, value] : rows) {
        header += "," + key;
        line += "," + value;
      }
      out << header << '\n' << line << '\n';
      break;
    }
  }
  return kOk;
}

int cmd_search(const Options& o, std::ostream& out) {
  if (o.n_range.empty()) throw std::invalid_argument("search needs --n-range");
  const Range nr = parse_range(o.n_range, "--n-range");
  Range kr{1, nr.hi};
  if (!o.k_range.empty()) kr = parse_range(o.k_range, "--k-range");
  if (nr.lo < 2 || nr.hi < nr.lo) throw std::invalid_argument("--n-range needs 2 <= a <= b");
  if (kr.lo < 1 || kr.hi < kr.lo) throw std::invalid_argument("--k-range needs 1 <= a <= b");
  if (nr.hi > kMaxPolynomialGround)
    throw BudgetError("polynomial too large: n = " + std::to_string(nr.hi));
  if (o.threads == 0) throw std::invalid_argument("--threads must be positive");
  emit_reports(out, o.format, search_counterexamples(nr.lo, nr.hi, kr.lo, kr.hi, o.threads));
  return kOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
  AcceptanceOptions opts;
  opts.include_heavy = !o.skip_heavy && std::getenv("SPAVING_SKIP_HEAVY") == nullptr;
  opts.only = o.only;
  const bool text = o.format == Format::kText;
  const auto results = run_acceptance(opts, text ? &out : nullptr);
  bool ok = true;
  for (const auto& r : results) ok = ok && (r.passed || r.skipped);
  if (o.format == Format::kJson) {
    auto arr = nlohmann::json::array();
    for (const auto& r : results)
      arr.push_back({{"id", r.id},
                     {"title", r.title},
                     {"passed", r.passed},
                     {"skipped", r.skipped},
                     {"detail", r.detail},
                     {"seconds", r.seconds}});
    out << arr.dump(2) << '\n';
  } else if (o.format == Format::kCsv) {
    out << "id,status,seconds\n";
    for (const auto& r : results)
      out << r.id << ',' << (r.skipped ? "skip" : r.passed ? "pass" : "fail") << ',' << r.seconds
          << '\n';
  } else {
    out << (ok ? "all criteria passed" : "some criteria FAILED") << '\n';
  }
  return ok ? kOk : kVerificationFailure;
}

int cmd_oracle(const Options& o, std::ostream& out) {
  if (o.matroid_file.empty()) throw std::invalid_argument("oracle needs --matroid-file");
  if (o.t_max < 0) throw std::invalid_argument("--t-max must be nonnegative");
  const SparsePavingMatroid m = read_matroid_file(o.matroid_file);
  const int n = m.ground_size();
  const int k = m.rank();
  if (k == 0 || k == n) throw std::invalid_argument("oracle needs 0 < k < n");
  const Polynomial p = ehr_sparse(n, k, Integer(static_cast<unsigned long>(m.lambda())));
  const bool reciprocity = p.degree() == n - 1;

  struct Row {
    std::int64_t t;
    Integer count, interior;
    Rational formula, reflected;
    bool ok;
  };
  std::vector<Row> rows;
  bool all_ok = true;
  for (std::int64_t t = 0; t <= o.t_max; ++t) {
    const DilationCount d = oracle_dilation(m, t);
    Row row{t, d.boundary_inclusive_count, d.interior_count, p(Rational(t)), 0, true};
    row.ok = Rational(row.count) == row.formula;
    if (reciprocity && t >= 1) {
      row.reflected = p(Rational(-t));
      if ((n - 1) % 2 == 1) row.reflected = -row.reflected;
      row.ok = row.ok && row.reflected == Rational(row.interior);
    }
    all_ok = all_ok && row.ok;
    rows.push_back(row);
  }

  switch (o.format) {
    case Format::kText:
      out << "n = " << n << ", k = " << k << ", lambda = " << m.lambda() << '\n';
      out << "   t        oracle      formula     interior  ok\n";
      for (const auto& r : rows)
        out << std::setw(4) << r.t << std::setw(14) << r.count.get_str() << std::setw(13)
            << to_display_string(r.formula) << std::setw(13) << r.interior.get_str() << "  "
            << (r.ok ? "yes" : "NO") << '\n';
      if (!reciprocity) out << "(lower-dimensional polytope: reciprocity not checked)\n";
      break;
    case Format::kJson: {
      nlohmann::json j;
      j["n"] = n;
      j["k"] = k;
      j["lambda"] = m.lambda();
      j["coefficients"] = polynomial_to_json(p);
      auto arr = nlohmann::json::array();
      for (const auto& r : rows)
        arr.push_back({{"t", r.t},
                       {"oracle", integer_to_json(r.count)},
                       {"formula", to_fraction_string(r.formula)},
                       {"interior", integer_to_json(r.interior)},
                       {"ok", r.ok}});
      j["dilations"] = arr;
      j["agree"] = all_ok;
      out << j.dump(2) << '\n';
      break;
    }
    case Format::kCsv:
      out << "t,oracle,formula,interior,ok\n";
      for (const auto& r : rows)
        out << r.t << ',' << r.count.get_str() << ',' << to_fraction_string(r.formula) << ','
            << r.interior.get_str() << ',' << (r.ok ? "true" : "false") << '\n';
      break;
  }
  return all_ok ? kOk : kVerificationFailure;
}

int cmd_hstar(const Options& o, std::ostream& out) {
  check_ground(o.n, o.k);
  if (o.k == 0 || o.k == o.n) throw std::invalid_argument("hstar needs 0 < k < n");
  const auto [lambda, prov] = resolve_lambda(o);
  const Polynomial p = ehr_sparse(o.n, o.k, lambda);
  const std::vector<Rational> h = hstar(p, p.degree());
  const bool check = o.check_real_rooted;
  const bool real_rooted = check && is_real_rooted(h);
  switch (o.format) {
    case Format::kText: {
      out << "n = " << o.n << ", k = " << o.k << ", lambda = " << lambda.get_str() << " ("
          << to_string(prov) << ")\n";
      out << "h*:";
      for (const auto& x : h) out << ' ' << to_display_string(x);
      out << '\n';
      if (check) out << "real-rooted: " << (real_rooted ? "yes" : "no") << '\n';
      break;
    }
    case Format::kJson: {
      nlohmann::json j;
      j["n"] = o.n;
      j["k"] = o.k;
      j["lambda"] = integer_to_json(lambda);
      j["provenance"] = to_string(prov);
      auto arr = nlohmann::json::array();
      for (const auto& x : h) arr.push_back(to_fraction_string(x));
      j["hstar"] = arr;
      if (check) j["real_rooted"] = real_rooted;
      out << j.dump(2) << '\n';
      break;
    }
    case Format::kCsv:
      out << "n,k,lambda,provenance,hstar" << (check ? ",real_rooted" : "") << '\n';
      out << o.n << ',' << o.k << ',' << lambda.get_str() << ',' << to_string(prov) << ",\""
          << semicolon_fractions(h) << '"';
      if (check) out << ',' << (real_rooted ? "true" : "false");
      out << '\n';
      break;
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Ehrhart polynomials of sparse paving matroids", "spaving"};
  app.require_subcommand(1);
  Options o;
  const std::map<std::string, Format> formats{
      {"text", Format::kText}, {"json", Format::kJson}, {"csv", Format::kCsv}};

  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "text | json | csv")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
  };
  auto add_nk = [&](CLI::App* sub, bool required) {
    auto* n = sub->add_option("--n", o.n, "ground set size");
    auto* k = sub->add_option("--k", o.k, "rank");
    if (required) {
      n->required();
      k->required();
    }
  };

  auto* uniform = app.add_subcommand("uniform", "Ehrhart polynomial of U_{k,n}");
  add_nk(uniform, true);
  add_format(uniform);

  auto* minimal = app.add_subcommand("minimal", "Ehrhart polynomial of T_{k,n}");
  add_nk(minimal, true);
  minimal->add_flag("--shifted", o.shifted, "print ehr(T_{k,n}, t - 1)");
  add_format(minimal);

  auto* sparse = app.add_subcommand("sparse", "Ehrhart polynomial and positivity report");
  add_nk(sparse, false);
  sparse->add_option("--lambda", o.lambda, "number of circuit-hyperplanes (default: gs bound)");
  sparse->add_option("--provenance", o.provenance, "gs-bound | external-table | user");
  sparse->add_option("--matroid-file", o.matroid_file, "matroid in text format");
  add_format(sparse);

  auto* code = app.add_subcommand("code", "Graham-Sloane constant-weight code");
  add_nk(code, true);
  code->add_option("--matroid-out", o.matroid_out, "write the matroid here ('-' for stdout)");
  code->add_option("--budget", o.budget, "cap on C(n, k)");
  add_format(code);

  auto* bounds = app.add_subcommand("bounds", "circuit-hyperplane and quadratic bounds");
  add_nk(bounds, true);
  add_format(bounds);

  auto* search = app.add_subcommand("search", "reports at the gs bound over a range");
  search->add_option("--n-range", o.n_range, "a:b")->required();
  search->add_option("--k-range", o.k_range, "a:b (default 1:n-1)");
  search->add_option("--threads", o.threads, "worker threads");
  add_format(search);

  auto* verify = app.add_subcommand("verify-paper", "run the acceptance criteria");
  verify->add_flag("--skip-heavy", o.skip_heavy, "skip the rank-3 n = 3589 check");
  verify->add_option("--only", o.only, "criterion ids")->delimiter(',');
  add_format(verify);

  auto* oracle = app.add_subcommand("oracle", "brute-force counts against the formula");
  oracle->add_option("--matroid-file", o.matroid_file, "matroid in text format")->required();
  oracle->add_option("--t-max", o.t_max, "largest dilation");
  add_format(oracle);

  auto* hs = app.add_subcommand("hstar", "h*-vector of ehr_sparse");
  add_nk(hs, true);
  hs->add_option("--lambda", o.lambda, "number of circuit-hyperplanes (default: gs bound)");
  hs->add_option("--provenance", o.provenance, "gs-bound | external-table | user");
  hs->add_flag("--check-real-rooted", o.check_real_rooted, "Sturm test of h*(z)");
  add_format(hs);

  std::vector<std::string> argv_storage{"spaving"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_storage) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code_ = app.exit(e, out, err);
    return code_ == 0 ? kOk : kArgumentError;
  }

  try {
    if (uniform->parsed()) return cmd_uniform(o, out);
    if (minimal->parsed()) return cmd_minimal(o, out);
    if (sparse->parsed()) return cmd_sparse(o, out);
    if (code->parsed()) return cmd_code(o, out);
    if (bounds->parsed()) return cmd_bounds(o, out);
    if (search->parsed()) return cmd_search(o, out);
    if (verify->parsed()) return cmd_verify(o, out);
    if (oracle->parsed()) return cmd_oracle(o, out);
    if (hs->parsed()) return cmd_hstar(o, out);
  } catch (const BudgetError& e) {
    err << "budget error: " << e.what() << '\n';
    return kBudgetError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kArgumentError;
  }
  return kArgumentError;
}

}  // namespace spaving::cli
