#ifndef TRISECT_TRISECTION_HPP
#define TRISECT_TRISECTION_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "trisect/budget.hpp"
#include "trisect/certify.hpp"
#include "trisect/matrix.hpp"
#include "trisect/presentation.hpp"
#include "trisect/surface.hpp"

namespace trisect {

/// A (g,k) group trisection, stored by its three lower edges (the
/// handlebody maps, in the fixed cyclic sector order 1,2,3) plus an
/// optional presentation claimed for the group at the terminal vertex.
/// Every other vertex and edge of the cube is derived. The sector order is
/// significant; swapping two sectors is a different trisection.
class GroupTrisection {
 public:
  GroupTrisection(int genus, int rank, std::array<HandlebodyMap, 3> maps,
                  std::optional<Presentation> target);

  int genus() const { return genus_; }
  int rank() const { return rank_; }
  const HandlebodyMap& map(int sector) const;  // sector in 1..3
  const std::array<HandlebodyMap, 3>& maps() const { return maps_; }
  const std::optional<Presentation>& target() const { return target_; }

  /// Display metadata only; not propagated through operations.
  const std::optional<std::string>& name() const { return name_; }
  void set_name(std::optional<std::string> name) { name_ = std::move(name); }

  bool operator==(const GroupTrisection&) const = default;

 private:
  int genus_;
  int rank_;
  std::array<HandlebodyMap, 3> maps_;
  std::optional<Presentation> target_;
  std::optional<std::string> name_;
};

struct PushoutResult {
  Presentation presentation;
  /// Relators that reduced to the empty word, dropped from the
  /// presentation but reported as diagnostics.
  int discarded_empty_relators = 0;
};

/// The face pushout H_i *_{S_g} H_j. With a cut system on sector j this is
/// the quotient form <x1..xg | f_i(c), c a cut of sector j> on sector i's
/// generators; otherwise the symmetric form on 2g generators with one
/// identification relator per surface generator.
PushoutResult pairwise_pushout(const GroupTrisection& t, int i, int j);

/// Colimit of the whole lower half, presented on sector 1's generators
/// where cut systems allow; relators ordered sector 2 then sector 3,
/// duplicates removed.
PushoutResult triple_pushout(const GroupTrisection& t);

/// The same colimit presented symmetrically on all three generator sets
/// regardless of cut systems; used as the redundancy cross-check.
PushoutResult symmetric_triple_pushout(const GroupTrisection& t);

struct FaceCheck {
  int i = 0, j = 0;
  PushoutResult forward;   // pushout(i, j)
  PushoutResult backward;  // pushout(j, i)
  Certificate cert_forward, cert_backward;
  bool inconsistent = false;  // one route proved, the other refuted
  Verdict verdict = Verdict::Inconclusive;
};

struct TargetCheck {
  PushoutResult triple;
  bool has_target = false;
  std::optional<Certificate> triviality;  // used when the target is {1}
  std::optional<AbelianInvariants> triple_ab, target_ab;
  std::vector<std::optional<std::uint64_t>> triple_homs, target_homs;
  std::optional<bool> tietze_match;
  std::string note;
  Verdict verdict = Verdict::Inconclusive;
};

struct RedundancyCheck {
  PushoutResult symmetric;
  AbelianInvariants triple_ab, symmetric_ab;
  bool abelianizations_equal = false;
  std::optional<Certificate> symmetric_triviality;  // when the target is {1}
  bool certificates_conflict = false;
  Verdict verdict = Verdict::Inconclusive;
};

struct VerificationReport {
  std::vector<MapValidationReport> maps;  // sectors 1..3
  std::vector<FaceCheck> faces;           // (1,2), (1,3), (2,3)
  TargetCheck target;
  RedundancyCheck redundancy;
  Verdict overall = Verdict::Inconclusive;
};

/// Runs the full pipeline: C1 validates the three maps, C2 certifies all
/// six pushout forms free of rank k, C3 compares the triple pushout with
/// the claimed target, C4 cross-checks the symmetric triple presentation
/// against the sector-1 form. Overall verdict is the worst part.
VerificationReport verify(const GroupTrisection& t, const Budget& budget);

/// Index-shifted free-product combination: a (g+g', k+k') trisection.
/// Cut systems survive when both inputs carry them; targets combine as the
/// free product when both are present. Names are not propagated.
GroupTrisection connected_sum(const GroupTrisection& a, const GroupTrisection& b);

/// Connected sum with the standard trivial (3,1) trisection: (g,k) grows
/// by (3,1) and the group is unchanged.
GroupTrisection stabilize(const GroupTrisection& t);

GroupTrisection trivial_00();
GroupTrisection standard_trivial_31();

/// Catalogue lookup: trivial00, standard31, s1xs3_11, cp2_10, cp2bar_10.
/// Throws std::invalid_argument for unknown names.
GroupTrisection builtin_example(std::string_view name);
const std::vector<std::string>& builtin_example_names();

/// 2 + g - 3k, by inclusion-exclusion over the three sectors, their
/// pairwise intersections and the central surface.
int euler_characteristic(const GroupTrisection& t);

/// Computable isomorphism-refutation data. Equal inputs give equal
/// fingerprints; differing fingerprints rule out trisected isomorphism.
/// Hom counts that overflow their budget are recorded as unknown and
/// compare as wildcards.
struct Fingerprint {
  int genus = 0;
  int rank = 0;
  int euler = 0;
  AbelianInvariants triple_abelianization;
  std::vector<std::optional<std::uint64_t>> hom_counts;     // builtin_finite_groups() order
  std::array<std::vector<BigInt>, 3> sector_invariant_factors;

  bool operator==(const Fingerprint&) const = default;
};

Fingerprint fingerprint(const GroupTrisection& t, const Budget& budget);

/// Wildcard-aware comparison: unknown hom counts match anything.
bool fingerprints_consistent(const Fingerprint& a, const Fingerprint& b);

/// Nontrivial common-kernel elements: cyclically reduced words up to
/// cyclic rotation and inversion, of length <= max_length, killed by all
/// three maps but nontrivial in the surface group. Ordered by length,
/// then lexicographically.
std::vector<Word> search_common_kernel(const GroupTrisection& t, int max_length);

}  // namespace trisect

#endif  // TRISECT_TRISECTION_HPP
