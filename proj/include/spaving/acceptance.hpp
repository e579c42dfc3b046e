// End-to-end checks of the published counterexamples and positivity results.
// Shared by the acceptance test binary and `spaving verify-paper`.

#ifndef SPAVING_ACCEPTANCE_HPP
#define SPAVING_ACCEPTANCE_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace spaving {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  bool skipped = false;
  std::string detail;
  double seconds = 0;
};

struct AcceptanceOptions {
  /// Criterion 10 (rank 3, n = 3589).
  bool include_heavy = true;
  /// Restrict to these criterion ids; empty runs all.
  std::vector<int> only;
};

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options,
                                            std::ostream* progress = nullptr);

/// "[PASS] 1 golden counterexample ... (0.01 s)"
std::string format_result(const CriterionResult& r);

}  // namespace spaving

#endif  // SPAVING_ACCEPTANCE_HPP
