#include <doctest.h>

#include "trisect/finite_group.hpp"

using namespace trisect;

namespace {

Word w(const char* s) { return parse_word(s); }

std::vector<Letter> xgens(int n) {
  std::vector<Letter> gens;
  for (int i = 1; i <= n; ++i) gens.push_back(make_letter(Family::X, i));
  return gens;
}

void check_group_axioms(const FiniteGroup& g) {
  INFO("group ", g.name);
  for (int a = 0; a < g.order; ++a) {
    CHECK(g.times(0, a) == a);
    CHECK(g.times(a, 0) == a);
    CHECK(g.times(a, g.inverse(a)) == 0);
    CHECK(g.times(g.inverse(a), a) == 0);
  }
  for (int a = 0; a < g.order; ++a)
    for (int b = 0; b < g.order; ++b)
      for (int c = 0; c < g.order; ++c)
        CHECK(g.times(g.times(a, b), c) == g.times(a, g.times(b, c)));
}

}  // namespace

TEST_CASE("builtin groups satisfy the group axioms") {
  const auto& groups = builtin_finite_groups();
  REQUIRE(groups.size() == 10);
  std::vector<int> expected_orders{2, 3, 4, 4, 6, 8, 8, 12, 24, 60};
  for (std::size_t i = 0; i < groups.size(); ++i) {
    CHECK(groups[i].order == expected_orders[i]);
    check_group_axioms(groups[i]);
  }
}

TEST_CASE("quaternion group is nonabelian with a unique involution") {
  FiniteGroup q8 = quaternion_group();
  int involutions = 0;
  bool abelian = true;
  for (int a = 0; a < 8; ++a) {
    if (a != 0 && q8.times(a, a) == 0) ++involutions;
    for (int b = 0; b < 8; ++b)
      if (q8.times(a, b) != q8.times(b, a)) abelian = false;
  }
  CHECK(involutions == 1);
  CHECK_FALSE(abelian);
}

TEST_CASE("hom counts into Z/2") {
  FiniteGroup z2 = cyclic_group(2);
  HomCount free2 = count_homomorphisms(Presentation::free_on_x(2), z2, Budget{});
  CHECK(free2.count == 4);

  // Genus-2 surface group: the commutator relator is vacuous in an
  // abelian target, so the count is 2^4.
  std::vector<Letter> gens;
  Alphabet surface{AlphabetKind::Surface, 2};
  for (int i = 0; i < surface.size(); ++i) gens.push_back(surface.generator(i));
  Presentation s2(gens, {w("a1 b1 a1^-1 b1^-1 a2 b2 a2^-1 b2^-1")});
  CHECK(count_homomorphisms(s2, z2, Budget{}).count == 16);
}

TEST_CASE("hom count of Z/2 into S3 matches brute force") {
  FiniteGroup s3 = symmetric_group(3);
  // Oracle: elements whose square is the identity.
  std::uint64_t oracle = 0;
  for (int a = 0; a < s3.order; ++a)
    if (s3.times(a, a) == 0) ++oracle;
  CHECK(oracle == 4);

  Presentation p(xgens(1), {w("x1 x1")});
  CHECK(count_homomorphisms(p, s3, Budget{}).count == oracle);
}

TEST_CASE("hom counting respects the node budget") {
  Budget tiny;
  tiny.max_hom_nodes = 10;
  HomCount hc = count_homomorphisms(Presentation::free_on_x(3), alternating_group(5), tiny);
  CHECK_FALSE(hc.count.has_value());
}

TEST_CASE("hom counts are multiplicative over free products") {
  std::vector<std::pair<Presentation, Presentation>> pairs;
  pairs.emplace_back(Presentation(xgens(1), {w("x1 x1")}), Presentation(xgens(1), {w("x1 x1 x1")}));
  pairs.emplace_back(Presentation::free_on_x(1), Presentation(xgens(2), {w("x1 x2")}));

  for (const auto& [a, b] : pairs) {
    // Disjoint union: shift b's generators past a's.
    int n = a.generator_count();
    std::vector<Letter> gens = a.generators();
    for (const Letter& l : b.generators()) gens.push_back(make_letter(Family::X, l.index + n));
    std::vector<Word> rels = a.relators();
    for (const Word& r : b.relators()) {
      std::vector<Letter> ls;
      for (const Letter& l : r.letters()) ls.push_back(Letter{Family::X, l.index + n, l.sign});
      rels.emplace_back(std::move(ls));
    }
    Presentation product(gens, rels);

    for (const FiniteGroup& q : {cyclic_group(4), symmetric_group(3)}) {
      auto ca = count_homomorphisms(a, q, Budget{}).count;
      auto cb = count_homomorphisms(b, q, Budget{}).count;
      auto cp = count_homomorphisms(product, q, Budget{}).count;
      REQUIRE(ca.has_value());
      REQUIRE(cb.has_value());
      REQUIRE(cp.has_value());
      CHECK(*cp == *ca * *cb);
    }
  }
}

TEST_CASE("enumerated homomorphisms satisfy the relators") {
  Presentation p(xgens(2), {w("x1 x1"), w("x2 x2 x2")});
  FiniteGroup s4 = symmetric_group(4);
  HomEnumeration e = enumerate_homomorphisms(p, s4, Budget{});
  REQUIRE(e.complete);
  CHECK(count_homomorphisms(p, s4, Budget{}).count == e.homs.size());
  for (const auto& hom : e.homs) {
    CHECK(s4.times(hom[0], hom[0]) == 0);
    CHECK(s4.times(s4.times(hom[1], hom[1]), hom[1]) == 0);
  }
}
