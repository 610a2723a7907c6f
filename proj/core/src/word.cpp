#include "trisect/word.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace trisect {

char family_char(Family f) {
  switch (f) {
    case Family::A: return 'a';
    case Family::B: return 'b';
    case Family::X: return 'x';
    case Family::Z: return 'z';
  }
  return '?';
}

std::optional<Family> family_from_char(char c) {
  switch (c) {
    case 'a': return Family::A;
    case 'b': return Family::B;
    case 'x': return Family::X;
    case 'z': return Family::Z;
    default: return std::nullopt;
  }
}

Letter make_letter(Family f, int index, int sign) {
  if (index < 1) throw std::invalid_argument("generator index must be >= 1");
  if (sign != 1 && sign != -1) throw std::invalid_argument("generator sign must be +1 or -1");
  return Letter{f, index, static_cast<std::int8_t>(sign)};
}

namespace {

// Stack scan; linear in the input length.
std::vector<Letter> reduce_letters(std::span<const Letter> in) {
  std::vector<Letter> out;
  out.reserve(in.size());
  for (const Letter& l : in) {
    if (!out.empty() && out.back() == l.inverse()) {
      out.pop_back();
    } else {
      out.push_back(l);
    }
  }
  return out;
}

// The a/b families share the surface alphabet; x and z are their own.
enum class FamilyGroup { Surface, X, Z };

FamilyGroup family_group(Family f) {
  switch (f) {
    case Family::A:
    case Family::B: return FamilyGroup::Surface;
    case Family::X: return FamilyGroup::X;
    case Family::Z: return FamilyGroup::Z;
  }
  return FamilyGroup::X;
}

std::optional<FamilyGroup> word_family_group(const Word& w) {
  if (w.empty()) return std::nullopt;
  FamilyGroup g = family_group(w[0].family);
  for (const Letter& l : w.letters()) {
    if (family_group(l.family) != g) throw std::invalid_argument("word mixes generator families");
  }
  return g;
}

}  // namespace

Word::Word(std::vector<Letter> letters) : letters_(reduce_letters(letters)) {}

Word Word::inverse() const {
  std::vector<Letter> rev(letters_.rbegin(), letters_.rend());
  for (Letter& l : rev) l = l.inverse();
  Word w;
  w.letters_ = std::move(rev);  // inverse of a reduced word is reduced
  return w;
}

Word reduce(std::span<const Letter> letters) { return Word(std::vector<Letter>(letters.begin(), letters.end())); }

Word concat(const Word& u, const Word& v) {
  auto gu = word_family_group(u);
  auto gv = word_family_group(v);
  if (gu && gv && *gu != *gv) throw std::invalid_argument("concat: generator family mismatch");
  std::vector<Letter> all;
  all.reserve(u.size() + v.size());
  all.insert(all.end(), u.letters().begin(), u.letters().end());
  all.insert(all.end(), v.letters().begin(), v.letters().end());
  return Word(std::move(all));
}

Word invert(const Word& u) { return u.inverse(); }

CyclicReduction cyclically_reduce(const Word& u) {
  std::vector<Letter> core(u.letters());
  std::vector<Letter> prefix;
  std::size_t lo = 0, hi = core.size();
  while (hi - lo >= 2 && core[lo] == core[hi - 1].inverse()) {
    prefix.push_back(core[lo]);
    ++lo;
    --hi;
  }
  CyclicReduction r;
  r.core = reduce(std::span<const Letter>(core.data() + lo, hi - lo));
  r.conjugator = Word(std::move(prefix));
  return r;
}

bool is_cyclically_reduced(const Word& u) {
  return u.size() < 2 || u[0] != u[u.size() - 1].inverse();
}

bool word_lex_less(const Word& a, const Word& b) {
  return std::lexicographical_compare(a.letters().begin(), a.letters().end(),
                                      b.letters().begin(), b.letters().end(), letter_less);
}

bool word_shortlex_less(const Word& a, const Word& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return word_lex_less(a, b);
}

Letter Alphabet::generator(int position) const {
  if (position < 0 || position >= size()) throw std::out_of_range("alphabet position out of range");
  switch (kind) {
    case AlphabetKind::Surface:
      return Letter{position % 2 == 0 ? Family::A : Family::B, position / 2 + 1, 1};
    case AlphabetKind::FreeX:
      return Letter{Family::X, position + 1, 1};
    case AlphabetKind::FreeZ:
      return Letter{Family::Z, position + 1, 1};
  }
  throw std::logic_error("bad alphabet kind");
}

std::optional<int> Alphabet::position(const Letter& l) const {
  if (l.index < 1 || l.index > rank) return std::nullopt;
  switch (kind) {
    case AlphabetKind::Surface:
      if (l.family == Family::A) return 2 * (l.index - 1);
      if (l.family == Family::B) return 2 * (l.index - 1) + 1;
      return std::nullopt;
    case AlphabetKind::FreeX:
      return l.family == Family::X ? std::optional<int>(l.index - 1) : std::nullopt;
    case AlphabetKind::FreeZ:
      return l.family == Family::Z ? std::optional<int>(l.index - 1) : std::nullopt;
  }
  return std::nullopt;
}

bool Alphabet::contains_word(const Word& w) const {
  for (const Letter& l : w.letters())
    if (!contains(l)) return false;
  return true;
}

GeneratorMapping::GeneratorMapping(Alphabet domain, Alphabet codomain, std::vector<Word> images)
    : domain_(domain), codomain_(codomain), images_(std::move(images)) {
  if (static_cast<int>(images_.size()) != domain_.size())
    throw std::invalid_argument("mapping needs exactly one image per domain generator");
  for (const Word& w : images_)
    if (!codomain_.contains_word(w))
      throw std::invalid_argument("image word uses letters outside the codomain alphabet");
}

const Word& GeneratorMapping::image_of(const Letter& positive_generator) const {
  auto pos = domain_.position(positive_generator);
  if (!pos) throw std::out_of_range("letter outside mapping domain");
  return images_[*pos];
}

Word GeneratorMapping::apply(const Word& u) const {
  std::vector<Letter> out;
  for (const Letter& l : u.letters()) {
    auto pos = domain_.position(l);
    if (!pos) throw std::out_of_range("apply_mapping: letter outside domain alphabet");
    const Word& im = images_[*pos];
    if (l.sign > 0) {
      out.insert(out.end(), im.letters().begin(), im.letters().end());
    } else {
      Word inv = im.inverse();
      out.insert(out.end(), inv.letters().begin(), inv.letters().end());
    }
  }
  return Word(std::move(out));
}

std::string to_string(const Letter& l) {
  std::string s;
  s += family_char(l.family);
  s += std::to_string(l.index);
  if (l.sign < 0) s += "^-1";
  return s;
}

std::string to_string(const Word& w) {
  if (w.empty()) return "1";
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += ' ';
    s += to_string(w[i]);
  }
  return s;
}

std::optional<Word> try_parse_word(std::string_view text, WordSyntaxError* error) {
  auto fail = [&](std::size_t off, std::string msg) -> std::optional<Word> {
    if (error) *error = WordSyntaxError{off, std::move(msg)};
    return std::nullopt;
  };

  std::vector<Letter> letters;
  std::size_t i = 0;
  bool saw_one_token = false;
  bool saw_letter = false;
  while (i < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    std::size_t tok_start = i;
    if (text[i] == '1') {
      ++i;
      if (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i])))
        return fail(tok_start, "unexpected character after '1'");
      saw_one_token = true;
      continue;
    }
    auto fam = family_from_char(text[i]);
    if (!fam) return fail(i, std::string("expected generator family a/b/x/z or '1', got '") + text[i] + "'");
    ++i;
    std::size_t digits_start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == digits_start) return fail(i, "expected generator index");
    int index = 0;
    for (std::size_t d = digits_start; d < i; ++d) {
      index = index * 10 + (text[d] - '0');
      if (index > 1'000'000) return fail(digits_start, "generator index too large");
    }
    if (index < 1) return fail(digits_start, "generator index must be >= 1");
    int sign = 1;
    if (i < text.size() && text[i] == '^') {
      if (text.substr(i, 3) != "^-1") return fail(i, "only exponent ^-1 is supported");
      sign = -1;
      i += 3;
    }
    if (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i])))
      return fail(i, "unexpected character in generator token");
    letters.push_back(make_letter(*fam, index, sign));
    saw_letter = true;
  }
  if (saw_one_token && saw_letter)
    return fail(0, "'1' cannot be mixed with generator tokens");
  if (!saw_one_token && !saw_letter)
    return fail(0, "empty word text (write '1' for the identity)");
  return Word(std::move(letters));
}

Word parse_word(std::string_view text) {
  WordSyntaxError err;
  auto w = try_parse_word(text, &err);
  if (!w) {
    std::ostringstream os;
    os << "word syntax error at offset " << err.offset << ": " << err.message;
    throw std::invalid_argument(os.str());
  }
  return *w;
}

}  // namespace trisect
