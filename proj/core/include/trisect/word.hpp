#ifndef TRISECT_WORD_HPP
#define TRISECT_WORD_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

namespace trisect {

/// Generator families. Surface groups use a/b pairs, handlebody groups use
/// x, and the rank-k free groups at the top of the cube use z.
enum class Family : std::uint8_t { A = 0, B = 1, X = 2, Z = 3 };

char family_char(Family f);
std::optional<Family> family_from_char(char c);

/// One signed generator symbol, e.g. b3^-1 = {Family::B, 3, -1}.
/// Indices are 1-based to match the usual labels a1, b1, x1, z1.
struct Letter {
  Family family = Family::X;
  std::int32_t index = 1;  // >= 1
  std::int8_t sign = 1;    // +1 or -1

  Letter inverse() const { return Letter{family, index, static_cast<std::int8_t>(-sign)}; }

  bool operator==(const Letter&) const = default;

  // Canonical order: family, then index, then positive before negative.
  auto key() const { return std::make_tuple(static_cast<int>(family), index, sign < 0); }
};

inline bool letter_less(const Letter& a, const Letter& b) { return a.key() < b.key(); }

Letter make_letter(Family f, int index, int sign = 1);

/// A freely reduced word in a free group. The class invariant is that no
/// letter is adjacent to its inverse; every constructor enforces it. The
/// empty word is the identity.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Letter> letters);  // freely reduces

  static Word single(Letter l) { return Word(std::vector<Letter>{l}); }

  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  const Letter& operator[](std::size_t i) const { return letters_[i]; }

  Word inverse() const;

  bool operator==(const Word&) const = default;

 private:
  std::vector<Letter> letters_;
};

/// Free reduction of a raw symbol sequence; idempotent.
Word reduce(std::span<const Letter> letters);

/// Product in the free group (concatenate, then reduce). Throws
/// std::invalid_argument when the two words live over incompatible
/// generator families (surface a/b vs. x vs. z).
Word concat(const Word& u, const Word& v);

Word invert(const Word& u);

struct CyclicReduction {
  Word core;        // cyclically reduced
  Word conjugator;  // input == conjugator * core * conjugator^-1
};
CyclicReduction cyclically_reduce(const Word& u);

/// True if the word is cyclically reduced (first letter is not the inverse
/// of the last).
bool is_cyclically_reduced(const Word& u);

/// Lexicographic order on words (letter order: family, index, sign).
bool word_lex_less(const Word& a, const Word& b);

/// Order by length first, then lexicographically.
bool word_shortlex_less(const Word& a, const Word& b);

/// Alphabets of the three fixed group families. A Surface alphabet of rank
/// g carries the 2g generators a1,b1,...,ag,bg (in that order); FreeX and
/// FreeZ carry x1..xg and z1..zk. Rank 0 is allowed everywhere.
enum class AlphabetKind : std::uint8_t { Surface, FreeX, FreeZ };

struct Alphabet {
  AlphabetKind kind = AlphabetKind::FreeX;
  int rank = 0;

  int size() const { return kind == AlphabetKind::Surface ? 2 * rank : rank; }
  Letter generator(int position) const;             // 0-based position
  std::optional<int> position(const Letter& l) const;  // ignores sign
  bool contains(const Letter& l) const { return position(l).has_value(); }
  bool contains_word(const Word& w) const;

  bool operator==(const Alphabet&) const = default;
};

/// A homomorphism between free objects described on generators: the i-th
/// domain generator (in alphabet order) maps to images[i], a word over the
/// codomain alphabet.
class GeneratorMapping {
 public:
  GeneratorMapping(Alphabet domain, Alphabet codomain, std::vector<Word> images);

  const Alphabet& domain() const { return domain_; }
  const Alphabet& codomain() const { return codomain_; }
  const std::vector<Word>& images() const { return images_; }
  const Word& image_of(const Letter& positive_generator) const;

  /// Substitutes each letter by its image (inverted for negative letters)
  /// and reduces. Throws std::out_of_range for letters outside the domain.
  Word apply(const Word& u) const;

  bool operator==(const GeneratorMapping&) const = default;

 private:
  Alphabet domain_;
  Alphabet codomain_;
  std::vector<Word> images_;
};

inline Word apply_mapping(const GeneratorMapping& f, const Word& u) { return f.apply(u); }

/// Token syntax: whitespace-separated letters, letter = family char +
/// decimal index + optional ^-1 suffix; "1" is the empty word.
std::string to_string(const Letter& l);
std::string to_string(const Word& w);

struct WordSyntaxError {
  std::size_t offset;  // byte offset into the input
  std::string message;
};

/// Parses the token syntax. Returns the word or reports the first error.
/// The parse accepts any well-formed token stream; validation against an
/// alphabet is the caller's concern.
std::optional<Word> try_parse_word(std::string_view text, WordSyntaxError* error = nullptr);

/// Throwing convenience wrapper around try_parse_word.
Word parse_word(std::string_view text);

}  // namespace trisect

#endif  // TRISECT_WORD_HPP
