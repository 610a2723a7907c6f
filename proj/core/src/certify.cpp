#include "trisect/certify.hpp"

#include <sstream>

#include "trisect/finite_group.hpp"

namespace trisect {

namespace {

std::optional<std::string> abelian_obstruction(const Presentation& p, int expected_rank) {
  AbelianInvariants inv = abelianization(p);
  if (inv.free_rank == expected_rank && inv.torsion.empty()) return std::nullopt;
  std::ostringstream os;
  os << "abelianization is " << inv.to_string() << ", expected Z^" << expected_rank;
  return os.str();
}

}  // namespace

Certificate certify_free_of_rank(const Presentation& p, int k, const Budget& budget) {
  Certificate cert;
  cert.claim = "free of rank " + std::to_string(k);
  cert.subject = p;

  if (auto obstruction = abelian_obstruction(p, k)) {
    cert.verdict = Verdict::Refuted;
    cert.obstruction = obstruction;
    return cert;
  }

  TietzeResult tz = tietze_simplify(p, budget);
  bool is_free_on_k = tz.simplified.generator_count() == k && tz.simplified.relators().empty();
  cert.tietze = std::move(tz);
  if (is_free_on_k) {
    cert.verdict = Verdict::Proved;
    return cert;
  }

  cert.verdict = Verdict::Inconclusive;
  cert.budget_note = cert.tietze->budget_exhausted
                         ? cert.tietze->budget_note
                         : "tietze simplification converged without reaching a free presentation";
  return cert;
}

Certificate certify_trivial(const Presentation& p, const Budget& budget) {
  Certificate cert;
  cert.claim = "trivial group";
  cert.subject = p;

  if (auto obstruction = abelian_obstruction(p, 0)) {
    cert.verdict = Verdict::Refuted;
    cert.obstruction = obstruction;
    return cert;
  }

  // Coset enumeration over the empty subgroup computes the group order
  // when it halts, which settles the claim either way.
  ToddCoxeterResult tc = todd_coxeter_index(p, {}, budget);
  if (tc.completed) {
    cert.coset_index = tc.index;
    if (tc.index == 1) {
      cert.verdict = Verdict::Proved;
      TietzeResult tz = tietze_simplify(p, budget);  // secondary evidence
      if (tz.simplified.generator_count() == 0 && tz.simplified.relators().empty())
        cert.tietze = std::move(tz);
      return cert;
    }
    cert.verdict = Verdict::Refuted;
    std::ostringstream os;
    os << "coset enumeration completed with group order " << tc.index;
    cert.obstruction = os.str();
    return cert;
  }

  // Enumeration overflowed; look for a finite quotient separating the
  // group from the trivial one.
  for (const FiniteGroup& q : builtin_finite_groups()) {
    HomCount hc = count_homomorphisms(p, q, budget);
    if (hc.count && *hc.count > 1) {
      cert.verdict = Verdict::Refuted;
      std::ostringstream os;
      os << *hc.count << " homomorphisms into " << q.name << " (a nontrivial one exists)";
      cert.obstruction = os.str();
      return cert;
    }
  }

  TietzeResult tz = tietze_simplify(p, budget);
  if (tz.simplified.generator_count() == 0 && tz.simplified.relators().empty()) {
    cert.tietze = std::move(tz);
    cert.verdict = Verdict::Proved;
    return cert;
  }

  cert.verdict = Verdict::Inconclusive;
  std::ostringstream os;
  os << "coset enumeration overflowed after " << tc.cosets_defined
     << " cosets; no refuting quotient; tietze did not reach the empty presentation";
  cert.budget_note = os.str();
  return cert;
}

}  // namespace trisect
