#ifndef TRISECT_CERTIFY_HPP
#define TRISECT_CERTIFY_HPP

#include <optional>
#include <string>

#include "trisect/budget.hpp"
#include "trisect/presentation.hpp"
#include "trisect/tietze.hpp"
#include "trisect/todd_coxeter.hpp"

namespace trisect {

/// An auditable verdict about a presentation. Proved certificates carry
/// replayable evidence (a Tietze transcript reaching a standard
/// presentation, and/or a completed coset enumeration); Refuted ones carry
/// a named obstruction that recomputes to the same value; Inconclusive
/// ones name the exhausted budget.
struct Certificate {
  Verdict verdict = Verdict::Inconclusive;
  std::string claim;

  std::optional<std::string> obstruction;     // Refuted
  std::optional<TietzeResult> tietze;         // transcript evidence
  std::optional<long long> coset_index;       // completed enumeration evidence
  std::optional<std::string> budget_note;     // Inconclusive

  /// The presentation the certificate talks about (canonical form).
  Presentation subject;
};

/// Certifies that the presented group is free of rank k. Refutes via the
/// abelianization; proves via a Tietze transcript ending in a relator-free
/// presentation on k generators, recording the induced generator images.
Certificate certify_free_of_rank(const Presentation& p, int k, const Budget& budget);

/// Certifies that the presented group is trivial. Proof prefers a
/// completed coset enumeration (index 1 over the empty subgroup); a Tietze
/// transcript reaching the empty presentation is recorded as secondary
/// evidence when available. Refutations: nontrivial abelianization, a
/// completed enumeration with more than one coset, or more than one
/// homomorphism into a built-in finite group.
Certificate certify_trivial(const Presentation& p, const Budget& budget);

}  // namespace trisect

#endif  // TRISECT_CERTIFY_HPP
