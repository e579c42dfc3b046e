// Serialization of reports: human text, JSON and CSV.

#ifndef SPAVING_REPORT_HPP
#define SPAVING_REPORT_HPP

#include "spaving/codes.hpp"
#include "spaving/ehrhart.hpp"

#include <json.hpp>

#include <iosfwd>
#include <string>
#include <vector>

namespace spaving {

/// ["p/q", ...], index = degree; the zero polynomial is [].
nlohmann::json polynomial_to_json(const Polynomial& p);
Polynomial polynomial_from_json(const nlohmann::json& j);

/// Integers that fit in 64 bits become JSON numbers, larger ones decimal
/// strings.
nlohmann::json integer_to_json(const Integer& z);
Integer integer_from_json(const nlohmann::json& j);

/// {n, k, lambda, provenance, coefficients, negative_indices, ehrhart_positive}
nlohmann::json report_to_json(const CounterexampleReport& r);
/// Inverse of report_to_json. Throws std::invalid_argument when the
/// negative indices or the positivity flag disagree with the coefficients.
CounterexampleReport report_from_json(const nlohmann::json& j);

inline constexpr const char* kReportCsvHeader =
    "n,k,lambda,provenance,coefficients,negative_indices,ehrhart_positive";
std::string report_to_csv_row(const CounterexampleReport& r);

void write_report_text(std::ostream& out, const CounterexampleReport& r);

struct CodeReport {
  int n = 0;
  int k = 0;
  std::vector<Integer> class_sizes;
  int chosen_index = 0;
  Integer lower_bound;
  Integer upper_bound;
};

CodeReport make_code_report(const ConstantWeightCode& code, std::vector<Integer> class_sizes);
/// {n, k, class_sizes, chosen_index, lower_bound, upper_bound}
nlohmann::json code_report_to_json(const CodeReport& r);

}  // namespace spaving

#endif  // SPAVING_REPORT_HPP
