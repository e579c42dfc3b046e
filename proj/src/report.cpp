#include "spaving/report.hpp"

#include <ostream>
#include <sstream>
#include <stdexcept>

namespace spaving {

namespace {

std::string join(const std::vector<std::string>& parts, char sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

}  // namespace

nlohmann::json polynomial_to_json(const Polynomial& p) {
  auto arr = nlohmann::json::array();
  for (const auto& c : p.coefficients()) arr.push_back(to_fraction_string(c));
  return arr;
}

Polynomial polynomial_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw std::invalid_argument("coefficients must be an array");
  std::vector<Rational> coeffs;
  for (const auto& c : j) {
    if (!c.is_string()) throw std::invalid_argument("coefficient must be a \"p/q\" string");
    coeffs.push_back(parse_rational(c.get<std::string>()));
  }
  return Polynomial(std::move(coeffs));
}

nlohmann::json integer_to_json(const Integer& z) {
  if (z.fits_slong_p()) return static_cast<std::int64_t>(z.get_si());
  return z.get_str();
}

Integer integer_from_json(const nlohmann::json& j) {
  if (j.is_number_integer()) return Integer(static_cast<long>(j.get<std::int64_t>()));
  if (j.is_string()) {
    const Rational q = parse_rational(j.get<std::string>());
    if (!is_integer(q)) throw std::invalid_argument("expected an integer");
    return q.get_num();
  }
  throw std::invalid_argument("expected an integer");
}

nlohmann::json report_to_json(const CounterexampleReport& r) {
  nlohmann::json j;
  j["n"] = r.n;
  j["k"] = r.k;
  j["lambda"] = integer_to_json(r.lambda);
  j["provenance"] = to_string(r.provenance);
  j["coefficients"] = polynomial_to_json(r.ehrhart);
  j["negative_indices"] = r.negative_coefficient_indices;
  j["ehrhart_positive"] = r.is_ehrhart_positive;
  return j;
}

CounterexampleReport report_from_json(const nlohmann::json& j) {
  CounterexampleReport r;
  r.n = j.at("n").get<int>();
  r.k = j.at("k").get<int>();
  r.lambda = integer_from_json(j.at("lambda"));
  r.provenance = parse_provenance(j.at("provenance").get<std::string>());
  r.ehrhart = polynomial_from_json(j.at("coefficients"));
  r.negative_coefficient_indices = j.at("negative_indices").get<std::vector<int>>();
  r.is_ehrhart_positive = j.at("ehrhart_positive").get<bool>();
  if (r.negative_coefficient_indices != negative_coefficient_indices(r.ehrhart) ||
      r.is_ehrhart_positive != r.negative_coefficient_indices.empty())
    throw std::invalid_argument("report fields disagree with its coefficients");
  return r;
}

std::string report_to_csv_row(const CounterexampleReport& r) {
  std::vector<std::string> coeffs;
  for (const auto& c : r.ehrhart.coefficients()) coeffs.push_back(to_fraction_string(c));
  std::vector<std::string> neg;
  for (int m : r.negative_coefficient_indices) neg.push_back(std::to_string(m));
  std::ostringstream out;
  out << r.n << ',' << r.k << ',' << r.lambda.get_str() << ',' << to_string(r.provenance) << ",\""
      << join(coeffs, ';') << "\",\"" << join(neg, ';') << "\","
      << (r.is_ehrhart_positive ? "true" : "false");
  return out.str();
}

void write_report_text(std::ostream& out, const CounterexampleReport& r) {
  out << "n = " << r.n << ", k = " << r.k << ", lambda = " << r.lambda.get_str() << " ("
      << to_string(r.provenance) << ")\n";
  out << "bases: " << Integer(binomial(r.n, r.k) - r.lambda).get_str() << '\n';
  out << "coefficients (constant first):\n";
  for (int m = 0; m <= r.ehrhart.degree(); ++m)
    out << "  t^" << m << ": " << to_display_string(r.ehrhart.coefficient(m)) << '\n';
  out << "negative coefficient degrees: {";
  for (std::size_t i = 0; i < r.negative_coefficient_indices.size(); ++i)
    out << (i ? ", " : "") << r.negative_coefficient_indices[i];
  out << "}\n";
  out << (r.is_ehrhart_positive ? "Ehrhart positive" : "NOT Ehrhart positive") << '\n';
}

CodeReport make_code_report(const ConstantWeightCode& code, std::vector<Integer> class_sizes) {
  CodeReport r;
  r.n = code.n;
  r.k = code.k;
  r.class_sizes = std::move(class_sizes);
  r.chosen_index = code.class_index.value_or(0);
  r.lower_bound = gs_lower_bound(code.n, code.k);
  r.upper_bound = max_ch_upper_bound(code.n, code.k);
  return r;
}

nlohmann::json code_report_to_json(const CodeReport& r) {
  nlohmann::json j;
  j["n"] = r.n;
  j["k"] = r.k;
  auto sizes = nlohmann::json::array();
  for (const auto& s : r.class_sizes) sizes.push_back(integer_to_json(s));
  j["class_sizes"] = sizes;
  j["chosen_index"] = r.chosen_index;
  j["lower_bound"] = integer_to_json(r.lower_bound);
  j["upper_bound"] = integer_to_json(r.upper_bound);
  return j;
}

}  // namespace spaving
