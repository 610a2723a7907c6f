#ifndef TRISECT_TIETZE_HPP
#define TRISECT_TIETZE_HPP

#include <string>
#include <variant>
#include <vector>

#include "trisect/budget.hpp"
#include "trisect/presentation.hpp"

namespace trisect {

/// Elementary simplification moves. Indices refer to the state reached by
/// applying all earlier moves of the transcript; applying a recorded
/// transcript to its input presentation replays deterministically.
namespace tietze_move {
struct DeleteTrivial {
  int relator;  // must be empty at apply time
  bool operator==(const DeleteTrivial&) const = default;
};
struct DeleteDuplicate {
  int relator;
  int kept;  // earlier identical relator
  bool operator==(const DeleteDuplicate&) const = default;
};
struct EliminateGenerator {
  int gen;      // position in the current generator list
  int relator;  // relator containing that generator exactly once
  bool operator==(const EliminateGenerator&) const = default;
};
struct ShortenRelator {
  int target;
  int source;    // != target
  int rotation;  // rotate target left by this much before multiplying
  int exponent;  // +1 or -1, power of the source relator
  bool operator==(const ShortenRelator&) const = default;
};
}  // namespace tietze_move

using TietzeMove = std::variant<tietze_move::DeleteTrivial, tietze_move::DeleteDuplicate,
                                tietze_move::EliminateGenerator, tietze_move::ShortenRelator>;

std::string to_string(const TietzeMove& m);

struct TietzeResult {
  Presentation simplified;
  std::vector<TietzeMove> moves;
  /// Image of each input generator as a word over the simplified
  /// presentation's generators (the isomorphism induced by the moves).
  std::vector<Word> generator_images;
  bool budget_exhausted = false;
  std::string budget_note;
};

/// Greedy descent on total relator length. Move preference per pass:
/// generator elimination, then trivial-relator deletion, then duplicate
/// deletion, then the best shortening substitution; ties broken by lowest
/// generator, then lexicographic relator order. Deterministic.
TietzeResult tietze_simplify(const Presentation& p, const Budget& budget);

/// Replays a transcript. Throws std::runtime_error when a move does not
/// apply to the state it meets (a corrupt transcript).
Presentation replay_transcript(const Presentation& p, const std::vector<TietzeMove>& moves);

/// Intermediate states visited by a transcript (input first, final last);
/// used to check that every move preserves the abelianization.
std::vector<Presentation> transcript_states(const Presentation& p, const std::vector<TietzeMove>& moves);

}  // namespace trisect

#endif  // TRISECT_TIETZE_HPP
