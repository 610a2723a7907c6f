#ifndef TRISECT_SURFACE_HPP
#define TRISECT_SURFACE_HPP

#include <optional>
#include <vector>

#include "trisect/budget.hpp"
#include "trisect/certify.hpp"
#include "trisect/word.hpp"

namespace trisect {

/// The standard surface relator [a1,b1]...[ag,bg]; length 4g, empty for
/// g = 0.
Word surface_relator(int genus);

/// Word problem for the genus-g surface group. Genus 0: everything is
/// trivial. Genus 1: the group is Z^2, decided by exponent sums. Genus >= 2:
/// Dehn's algorithm (the relator is C'(1/6)); subwords longer than half of
/// a cyclic rotation of the relator or its inverse are replaced by the
/// shorter complement until the word stabilizes.
bool is_trivial_in_surface_group(int genus, const Word& u);

/// One lower edge of the cube: generator images S_g -> H_g, plus an
/// optional cut system of exactly g surface words claimed to normally
/// generate the kernel. Construction enforces shape only; the mathematical
/// conditions are validate_handlebody_map's job, so invalid maps can be
/// represented and reported on. For genus 0 an absent cut system is
/// normalized to the (unique) empty one.
class HandlebodyMap {
 public:
  HandlebodyMap(int genus, GeneratorMapping images, std::optional<std::vector<Word>> cuts);

  /// Convenience constructor: images listed in alphabet order
  /// a1, b1, ..., ag, bg.
  static HandlebodyMap from_images(int genus, std::vector<Word> images,
                                   std::optional<std::vector<Word>> cuts);

  int genus() const { return genus_; }
  const GeneratorMapping& images() const { return images_; }
  const std::optional<std::vector<Word>>& cuts() const { return cuts_; }

  Word apply(const Word& surface_word) const { return images_.apply(surface_word); }

  bool operator==(const HandlebodyMap&) const = default;

 private:
  int genus_;
  GeneratorMapping images_;
  std::optional<std::vector<Word>> cuts_;
};

struct MapValidationReport {
  bool relator_killed = false;
  bool surjective = false;
  /// The induced map Z^2g -> Z^g is onto (all g invariant factors of the
  /// image exponent matrix are 1). Redundant with surjectivity; kept as a
  /// cross-check.
  bool abelianized_surjective = false;
  std::vector<bool> cut_killed;                     // one per cut, empty without cuts
  std::optional<Certificate> kernel_certificate;    // quotient free of rank g, when cuts given

  bool valid() const;
  Verdict verdict() const;
};

/// Checks Definition-style conditions on one edge: the surface relator
/// dies, the image subgroup is the whole free group, each claimed cut dies,
/// and the quotient by the cuts is certified free of rank g.
MapValidationReport validate_handlebody_map(const HandlebodyMap& m, const Budget& budget);

}  // namespace trisect

#endif  // TRISECT_SURFACE_HPP
