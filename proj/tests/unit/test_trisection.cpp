#include <doctest.h>

#include <stdexcept>

#include "trisect/trisection.hpp"

using namespace trisect;

namespace {

Word w(const char* s) { return parse_word(s); }

GroupTrisection corrupted_standard31() {
  GroupTrisection t = standard_trivial_31();
  return GroupTrisection(3, 1, {t.map(1), t.map(2), t.map(1)}, t.target());
}

}  // namespace

TEST_CASE("catalogue entries verify as Proved") {
  for (const std::string& name : builtin_example_names()) {
    INFO("example ", name);
    VerificationReport r = verify(builtin_example(name), Budget{});
    CHECK(r.overall == Verdict::Proved);
  }
}

TEST_CASE("standard31 pushout (1,2)") {
  PushoutResult p = pairwise_pushout(standard_trivial_31(), 1, 2);
  CHECK(p.presentation.generator_count() == 3);
  REQUIRE(p.presentation.relators().size() == 2);
  CHECK(p.presentation.relators()[0] == w("x1"));
  CHECK(p.presentation.relators()[1] == w("x2"));
  CHECK(p.discarded_empty_relators == 1);
}

TEST_CASE("trivial00 pushouts are empty presentations") {
  PushoutResult p = pairwise_pushout(trivial_00(), 1, 2);
  CHECK(p.presentation.generator_count() == 0);
  CHECK(p.presentation.relators().empty());
  PushoutResult t = triple_pushout(trivial_00());
  CHECK(t.presentation.generator_count() == 0);
}

TEST_CASE("s1xs3 pushouts are free of rank one") {
  GroupTrisection t = builtin_example("s1xs3_11");
  PushoutResult p = pairwise_pushout(t, 1, 2);
  CHECK(p.presentation.generator_count() == 1);
  CHECK(p.presentation.relators().empty());
  CHECK(p.discarded_empty_relators == 1);
  PushoutResult triple = triple_pushout(t);
  CHECK(triple.presentation.relators().empty());
  CHECK(abelianization(triple.presentation).free_rank == 1);
}

TEST_CASE("standard31 triple pushout") {
  PushoutResult t = triple_pushout(standard_trivial_31());
  CHECK(t.presentation.generator_count() == 3);
  REQUIRE(t.presentation.relators().size() == 3);  // deduplicated
  CHECK(t.presentation.relators()[0] == w("x1"));
  CHECK(t.presentation.relators()[1] == w("x2"));
  CHECK(t.presentation.relators()[2] == w("x3"));
  CHECK(t.discarded_empty_relators == 2);
  CHECK(certify_trivial(t.presentation, Budget{}).verdict == Verdict::Proved);
}

TEST_CASE("pushout rejects equal sectors") {
  CHECK_THROWS_AS(pairwise_pushout(trivial_00(), 2, 2), std::invalid_argument);
}

TEST_CASE("euler characteristic") {
  CHECK(euler_characteristic(trivial_00()) == 2);
  CHECK(euler_characteristic(standard_trivial_31()) == 2);
  CHECK(euler_characteristic(builtin_example("cp2_10")) == 3);
  // chi(S^1 x S^3) = 0 = 2 + 1 - 3.
  CHECK(euler_characteristic(builtin_example("s1xs3_11")) == 0);
}

TEST_CASE("euler characteristic is additive minus two under sums") {
  for (const std::string& a : builtin_example_names()) {
    for (const std::string& b : builtin_example_names()) {
      GroupTrisection ta = builtin_example(a);
      GroupTrisection tb = builtin_example(b);
      CHECK(euler_characteristic(connected_sum(ta, tb)) ==
            euler_characteristic(ta) + euler_characteristic(tb) - 2);
    }
  }
}

TEST_CASE("connected sum with the empty trisection is the identity") {
  for (const std::string& name : builtin_example_names()) {
    GroupTrisection t = builtin_example(name);
    CHECK(connected_sum(trivial_00(), t) == t);
    CHECK(connected_sum(t, trivial_00()) == t);
  }
}

TEST_CASE("connected sum arithmetic") {
  GroupTrisection cp2 = builtin_example("cp2_10");
  GroupTrisection sum = connected_sum(cp2, cp2);
  CHECK(sum.genus() == 2);
  CHECK(sum.rank() == 0);
  CHECK(verify(sum, Budget{}).overall == Verdict::Proved);

  GroupTrisection s1 = builtin_example("s1xs3_11");
  GroupTrisection sum2 = connected_sum(s1, s1);
  CHECK(sum2.genus() == 2);
  CHECK(sum2.rank() == 2);
  AbelianInvariants ab = abelianization(triple_pushout(sum2).presentation);
  CHECK(ab.free_rank == 2);
  CHECK(ab.torsion.empty());
}

TEST_CASE("stabilization") {
  CHECK(stabilize(trivial_00()) == standard_trivial_31());
  GroupTrisection s = stabilize(builtin_example("s1xs3_11"));
  CHECK(s.genus() == 4);
  CHECK(s.rank() == 2);
  AbelianInvariants ab = abelianization(triple_pushout(s).presentation);
  CHECK(ab.free_rank == 1);
  CHECK(ab.torsion.empty());
}

TEST_CASE("fingerprints separate the catalogue where they should") {
  Budget budget;
  Fingerprint std31 = fingerprint(standard_trivial_31(), budget);
  Fingerprint stab00 = fingerprint(stabilize(trivial_00()), budget);
  CHECK(std31 == stab00);
  CHECK(fingerprints_consistent(std31, stab00));

  Fingerprint cp2 = fingerprint(builtin_example("cp2_10"), budget);
  Fingerprint s1 = fingerprint(builtin_example("s1xs3_11"), budget);
  CHECK_FALSE(fingerprints_consistent(cp2, s1));
  CHECK(cp2.rank != s1.rank);
  CHECK(cp2.euler != s1.euler);
  CHECK_FALSE(cp2.triple_abelianization == s1.triple_abelianization);

  Fingerprint cp2bar = fingerprint(builtin_example("cp2bar_10"), budget);
  CHECK(cp2 == cp2bar);  // the coarsening cannot see orientation
}

TEST_CASE("stabilization preserves the triple-pushout fingerprint entries") {
  Budget budget;
  for (const std::string& name : builtin_example_names()) {
    GroupTrisection t = builtin_example(name);
    Fingerprint before = fingerprint(t, budget);
    Fingerprint after = fingerprint(stabilize(t), budget);
    CHECK(after.genus == before.genus + 3);
    CHECK(after.rank == before.rank + 1);
    CHECK(after.triple_abelianization == before.triple_abelianization);
    CHECK(after.hom_counts == before.hom_counts);
  }
}

TEST_CASE("corrupted standard31 is refuted on face (1,3)") {
  VerificationReport r = verify(corrupted_standard31(), Budget{});
  CHECK(r.overall == Verdict::Refuted);
  REQUIRE(r.faces.size() == 3);
  CHECK(r.faces[0].i == 1);
  CHECK(r.faces[0].j == 2);
  CHECK(r.faces[0].verdict == Verdict::Proved);
  CHECK(r.faces[1].i == 1);
  CHECK(r.faces[1].j == 3);
  CHECK(r.faces[1].verdict == Verdict::Refuted);
  CHECK(r.faces[2].i == 2);
  CHECK(r.faces[2].j == 3);
  CHECK(r.faces[2].verdict == Verdict::Proved);
}

TEST_CASE("kernel search finds the first commutator in standard31") {
  std::vector<Word> words = search_common_kernel(standard_trivial_31(), 4);
  Word commutator = w("a1 b1 a1^-1 b1^-1");
  bool found = false;
  for (const Word& u : words)
    if (u == commutator) found = true;
  CHECK(found);

  // Every hit satisfies its defining predicate when re-checked.
  GroupTrisection t = standard_trivial_31();
  for (const Word& u : words) {
    for (int sector = 1; sector <= 3; ++sector) CHECK(t.map(sector).apply(u).empty());
    CHECK_FALSE(is_trivial_in_surface_group(3, u));
  }
}

TEST_CASE("kernel search is empty where it must be") {
  CHECK(search_common_kernel(trivial_00(), 5).empty());
  CHECK(search_common_kernel(builtin_example("cp2_10"), 4).empty());
}

TEST_CASE("verification without cut systems uses symmetric pushouts") {
  // s1xs3 with the cut systems stripped still verifies.
  GroupTrisection t = builtin_example("s1xs3_11");
  HandlebodyMap stripped(1, t.map(1).images(), std::nullopt);
  GroupTrisection bare(1, 1, {stripped, stripped, stripped}, t.target());
  PushoutResult p = pairwise_pushout(bare, 1, 2);
  CHECK(p.presentation.generator_count() == 2);
  VerificationReport r = verify(bare, Budget{});
  CHECK(r.overall == Verdict::Proved);
}

TEST_CASE("constructor enforces g >= k >= 0 and matching genera") {
  GroupTrisection t = builtin_example("s1xs3_11");
  CHECK_THROWS_AS(GroupTrisection(1, 2, {t.map(1), t.map(2), t.map(3)}, std::nullopt),
                  std::invalid_argument);
  HandlebodyMap g0 = HandlebodyMap::from_images(0, {}, std::nullopt);
  CHECK_THROWS_AS(GroupTrisection(1, 0, {t.map(1), t.map(2), g0}, std::nullopt),
                  std::invalid_argument);
}

TEST_CASE("unknown example names are rejected") {
  CHECK_THROWS_AS(builtin_example("nope"), std::invalid_argument);
}
