#include <doctest.h>

#include <stdexcept>

#include <random>

#include "trisect/word.hpp"

using namespace trisect;

namespace {

Word w(const char* s) { return parse_word(s); }

// Images of the standard (3,1) trisection's first map, used as a fixed
// nontrivial homomorphism in several tests.
GeneratorMapping standard31_f1() {
  return GeneratorMapping(Alphabet{AlphabetKind::Surface, 3}, Alphabet{AlphabetKind::FreeX, 3},
                          {Word(), w("x1"), w("x2"), Word(), w("x3"), Word()});
}

Word random_raw_word(std::mt19937& rng, int genus, int length) {
  std::uniform_int_distribution<int> pos(0, 2 * genus - 1);
  std::uniform_int_distribution<int> coin(0, 1);
  Alphabet surface{AlphabetKind::Surface, genus};
  std::vector<Letter> ls;
  for (int i = 0; i < length; ++i) {
    Letter l = surface.generator(pos(rng));
    if (coin(rng)) l = l.inverse();
    ls.push_back(l);
  }
  return Word(std::move(ls));
}

}  // namespace

TEST_CASE("free reduction") {
  CHECK(w("a1 a1^-1").empty());
  CHECK(w("a1 b2 b2^-1 a1^-1 a3") == w("a3"));
  CHECK(w("b1 a2 a2^-1 b1") == w("b1 b1"));
}

TEST_CASE("reduce is idempotent on random raw input") {
  std::mt19937 rng(1);
  for (int i = 0; i < 500; ++i) {
    Word u = random_raw_word(rng, 3, 20);
    CHECK(reduce(u.letters()) == u);
  }
}

TEST_CASE("concat and invert") {
  CHECK(concat(w("a1"), w("a1^-1")).empty());
  CHECK(invert(w("a1 b2")) == w("b2^-1 a1^-1"));
  CHECK(concat(w("x1 x2"), w("x2^-1 x3")) == w("x1 x3"));
  CHECK(invert(invert(w("a1 b2 a1"))) == w("a1 b2 a1"));
}

TEST_CASE("concat rejects mixed generator families") {
  CHECK_THROWS_AS(concat(w("a1"), w("x1")), std::invalid_argument);
  CHECK_THROWS_AS(concat(w("x1"), w("z1")), std::invalid_argument);
  // The identity is compatible with everything.
  CHECK(concat(Word(), w("x1")) == w("x1"));
}

TEST_CASE("inverse words cancel") {
  std::mt19937 rng(2);
  for (int i = 0; i < 200; ++i) {
    Word u = random_raw_word(rng, 2, 15);
    CHECK(concat(u, invert(u)).empty());
    CHECK(concat(invert(u), u).empty());
  }
}

TEST_CASE("cyclic reduction") {
  auto r1 = cyclically_reduce(w("a1 b1 a1^-1"));
  CHECK(r1.core == w("b1"));
  CHECK(r1.conjugator == w("a1"));

  auto r2 = cyclically_reduce(w("b1 b1"));
  CHECK(r2.core == w("b1 b1"));
  CHECK(r2.conjugator.empty());

  auto r3 = cyclically_reduce(Word());
  CHECK(r3.core.empty());
  CHECK(r3.conjugator.empty());
}

TEST_CASE("cyclic reduction reassembles") {
  std::mt19937 rng(3);
  for (int i = 0; i < 300; ++i) {
    Word u = random_raw_word(rng, 3, 14);
    auto r = cyclically_reduce(u);
    CHECK(is_cyclically_reduced(r.core));
    CHECK(concat(concat(r.conjugator, r.core), invert(r.conjugator)) == u);
  }
}

TEST_CASE("apply_mapping on the fixed map") {
  GeneratorMapping f1 = standard31_f1();
  CHECK(apply_mapping(f1, w("a2 b1")) == w("x2 x1"));
  CHECK(apply_mapping(f1, Word()).empty());
  CHECK(apply_mapping(f1, w("a1 b2")).empty());
}

TEST_CASE("apply_mapping is a homomorphism") {
  GeneratorMapping f1 = standard31_f1();
  std::mt19937 rng(4);
  for (int i = 0; i < 300; ++i) {
    Word u = random_raw_word(rng, 3, 10);
    Word v = random_raw_word(rng, 3, 10);
    CHECK(apply_mapping(f1, concat(u, v)) == concat(apply_mapping(f1, u), apply_mapping(f1, v)));
  }
}

TEST_CASE("apply_mapping rejects letters outside the domain") {
  GeneratorMapping f1 = standard31_f1();
  CHECK_THROWS_AS(f1.apply(w("a4")), std::out_of_range);
}

TEST_CASE("empty alphabets are supported") {
  Alphabet empty{AlphabetKind::Surface, 0};
  CHECK(empty.size() == 0);
  CHECK_FALSE(empty.contains(make_letter(Family::A, 1)));
  GeneratorMapping f(empty, Alphabet{AlphabetKind::FreeX, 0}, {});
  CHECK(f.apply(Word()).empty());
}

TEST_CASE("word token syntax") {
  CHECK(to_string(Word()) == "1");
  CHECK(to_string(w("a1 b2^-1 x3")) == "a1 b2^-1 x3");
  CHECK(parse_word("1").empty());
  CHECK(parse_word("  x1   x2^-1 ") == w("x1 x2^-1"));

  WordSyntaxError err;
  CHECK_FALSE(try_parse_word("a0", &err));
  CHECK_FALSE(try_parse_word("q1", &err));
  CHECK_FALSE(try_parse_word("a1^2", &err));
  CHECK_FALSE(try_parse_word("", &err));
  CHECK_FALSE(try_parse_word("1 a1", &err));
  CHECK_FALSE(try_parse_word("a", &err));
}

TEST_CASE("serialization round-trips") {
  std::mt19937 rng(5);
  for (int i = 0; i < 200; ++i) {
    Word u = random_raw_word(rng, 3, 12);
    CHECK(parse_word(to_string(u)) == u);
  }
}
