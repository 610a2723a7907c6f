#include <doctest.h>

#include <stdexcept>

#include <random>

#include "trisect/surface.hpp"
#include "trisect/tietze.hpp"

using namespace trisect;

namespace {

Word w(const char* s) { return parse_word(s); }

std::vector<Letter> xgens(int n) {
  std::vector<Letter> gens;
  for (int i = 1; i <= n; ++i) gens.push_back(make_letter(Family::X, i));
  return gens;
}

Presentation random_presentation(std::mt19937& rng) {
  std::uniform_int_distribution<int> ngens(1, 4);
  std::uniform_int_distribution<int> nrels(0, 4);
  std::uniform_int_distribution<int> len(1, 6);
  std::uniform_int_distribution<int> coin(0, 1);
  int n = ngens(rng);
  std::uniform_int_distribution<int> idx(1, n);
  std::vector<Word> rels;
  int r = nrels(rng);
  for (int i = 0; i < r; ++i) {
    std::vector<Letter> ls;
    int L = len(rng);
    for (int j = 0; j < L; ++j) ls.push_back(make_letter(Family::X, idx(rng), coin(rng) ? 1 : -1));
    rels.emplace_back(std::move(ls));
  }
  return Presentation(xgens(n), std::move(rels));
}

}  // namespace

TEST_CASE("two eliminations leave the third generator") {
  Presentation p(xgens(3), {w("x1"), w("x2")});
  TietzeResult r = tietze_simplify(p, Budget{});
  CHECK(r.simplified.generators() == std::vector<Letter>{make_letter(Family::X, 3)});
  CHECK(r.simplified.relators().empty());
  CHECK_FALSE(r.budget_exhausted);
}

TEST_CASE("free presentations are fixed points") {
  Presentation p(xgens(1), {});
  TietzeResult r = tietze_simplify(p, Budget{});
  CHECK(r.simplified == p);
  CHECK(r.moves.empty());
}

TEST_CASE("one elimination for x1 = x2") {
  Presentation p(xgens(2), {w("x1 x2^-1")});
  TietzeResult r = tietze_simplify(p, Budget{});
  // Tie-break eliminates the lowest generator, so x2 survives.
  CHECK(r.simplified.generators() == std::vector<Letter>{make_letter(Family::X, 2)});
  CHECK(r.simplified.relators().empty());
  REQUIRE(r.generator_images.size() == 2);
  CHECK(r.generator_images[0] == w("x2"));
  CHECK(r.generator_images[1] == w("x2"));
}

TEST_CASE("kernel quotient of the standard maps simplifies to a free group") {
  Alphabet surface{AlphabetKind::Surface, 3};
  std::vector<Letter> gens;
  for (int i = 0; i < surface.size(); ++i) gens.push_back(surface.generator(i));
  Presentation p(gens, {surface_relator(3), w("a1"), w("b2"), w("b3")});
  TietzeResult r = tietze_simplify(p, Budget{});
  CHECK(r.simplified.generator_count() == 3);
  CHECK(r.simplified.relators().empty());
}

TEST_CASE("duplicate relators are deleted") {
  Presentation p(xgens(2), {w("x1 x2"), w("x2 x1")});  // same canonical form
  TietzeResult r = tietze_simplify(p, Budget{});
  // One relator eliminates a generator; the duplicate must not survive.
  CHECK(r.simplified.relators().empty());
  CHECK(r.simplified.generator_count() == 1);
}

TEST_CASE("transcripts replay byte for byte") {
  std::mt19937 rng(31);
  for (int i = 0; i < 150; ++i) {
    Presentation p = random_presentation(rng);
    TietzeResult r = tietze_simplify(p, Budget{});
    CHECK(replay_transcript(p, r.moves) == r.simplified);
    CHECK(serialize_presentation(replay_transcript(p, r.moves)) ==
          serialize_presentation(r.simplified));
  }
}

TEST_CASE("every move preserves the abelianization") {
  std::mt19937 rng(32);
  for (int i = 0; i < 80; ++i) {
    Presentation p = random_presentation(rng);
    TietzeResult r = tietze_simplify(p, Budget{});
    AbelianInvariants expected = abelianization(p);
    for (const Presentation& state : transcript_states(p, r.moves))
      CHECK(abelianization(state) == expected);
  }
}

TEST_CASE("generator images land in the simplified presentation") {
  std::mt19937 rng(33);
  for (int i = 0; i < 80; ++i) {
    Presentation p = random_presentation(rng);
    TietzeResult r = tietze_simplify(p, Budget{});
    REQUIRE(r.generator_images.size() == static_cast<std::size_t>(p.generator_count()));
    for (const Word& img : r.generator_images)
      for (const Letter& l : img.letters()) CHECK(r.simplified.generator_position(l) >= 0);
  }
}

TEST_CASE("corrupt transcripts are rejected") {
  Presentation p(xgens(2), {w("x1")});
  CHECK_THROWS_AS(replay_transcript(p, {TietzeMove(tietze_move::DeleteTrivial{0})}),
                  std::runtime_error);
  CHECK_THROWS_AS(replay_transcript(p, {TietzeMove(tietze_move::EliminateGenerator{1, 0})}),
                  std::runtime_error);
  CHECK_THROWS_AS(replay_transcript(p, {TietzeMove(tietze_move::DeleteDuplicate{5, 0})}),
                  std::runtime_error);
}

TEST_CASE("length cap blocks explosive eliminations") {
  // x1 = x2^6 substituted into many long relators would exceed a tiny cap.
  std::vector<Word> rels{w("x1 x2^-1 x2^-1 x2^-1 x2^-1 x2^-1 x2^-1")};
  for (int i = 0; i < 4; ++i)
    rels.push_back(w("x1 x1 x1 x1 x1 x1 x1 x1 x2 x1 x1 x1 x1 x1 x1 x1 x1 x2"));
  Presentation p(xgens(2), rels);
  Budget tiny;
  tiny.max_total_relator_length = 40;
  TietzeResult r = tietze_simplify(p, tiny);
  CHECK(r.simplified.total_relator_length() <= 40);
}
