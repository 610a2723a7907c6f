#ifndef TRISECT_BUDGET_HPP
#define TRISECT_BUDGET_HPP

#include <string>

namespace trisect {

enum class Verdict { Proved, Refuted, Inconclusive };

std::string to_string(Verdict v);

/// Worst-of combination: Refuted dominates, then Inconclusive.
Verdict combine_verdicts(Verdict a, Verdict b);

/// Resource caps for certificate searches. Inconclusive results report
/// which cap was hit; all caps must be positive.
struct Budget {
  int max_tietze_passes = 10'000;
  long long max_total_relator_length = 100'000;
  long long max_cosets = 1'000'000;
  long long max_hom_nodes = 10'000'000;
  double max_seconds = 30.0;
};

}  // namespace trisect

#endif  // TRISECT_BUDGET_HPP
