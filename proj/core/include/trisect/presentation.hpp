#ifndef TRISECT_PRESENTATION_HPP
#define TRISECT_PRESENTATION_HPP

#include <string>
#include <vector>

#include "trisect/matrix.hpp"
#include "trisect/word.hpp"

namespace trisect {

/// A finite group presentation with explicitly named generators. Relators
/// are stored cyclically reduced, rotated to the lexicographically least
/// cyclic rotation; empty relators are discarded on construction. Relator
/// order and duplicates are preserved.
class Presentation {
 public:
  Presentation() = default;
  /// Throws std::invalid_argument when generators repeat or a relator uses
  /// a letter outside the generator list.
  Presentation(std::vector<Letter> generators, std::vector<Word> relators);

  /// Free presentation on x1..xn.
  static Presentation free_on_x(int n);

  const std::vector<Letter>& generators() const { return gens_; }
  const std::vector<Word>& relators() const { return relators_; }
  int generator_count() const { return static_cast<int>(gens_.size()); }

  int generator_position(const Letter& l) const;  // -1 if absent (sign ignored)

  long long total_relator_length() const;

  /// Exponent-sum matrix, one row per relator, one column per generator.
  IntegerMatrix exponent_matrix() const;

  bool operator==(const Presentation&) const = default;

 private:
  std::vector<Letter> gens_;     // positive letters, distinct
  std::vector<Word> relators_;   // nonempty, canonical cyclic rotation
};

/// Canonical relator normal form: cyclic reduction followed by the
/// lexicographically least rotation.
Word canonical_relator(const Word& w);

struct AbelianInvariants {
  int free_rank = 0;
  std::vector<BigInt> torsion;  // entries >= 2, each dividing the next

  bool trivial() const { return free_rank == 0 && torsion.empty(); }
  bool operator==(const AbelianInvariants&) const = default;
  std::string to_string() const;
};

/// Smith normal form of the exponent matrix: free rank = #generators minus
/// the number of nonzero invariant factors; torsion = factors > 1.
AbelianInvariants abelianization(const Presentation& p);

/// One-line serialization used in reports:
///   presentation { gens: x1 x2 rels: "x1", "x2 x1^-1" }
std::string serialize_presentation(const Presentation& p);

/// Renames generators to x1..xn preserving order; relators follow. Used to
/// compare presentations up to the obvious renaming isomorphism.
Presentation renumber_to_x(const Presentation& p);

}  // namespace trisect

#endif  // TRISECT_PRESENTATION_HPP
