#include <doctest.h>

#include <stdexcept>

#include "trisect/presentation.hpp"
#include "trisect/surface.hpp"

using namespace trisect;

namespace {

Word w(const char* s) { return parse_word(s); }

std::vector<Letter> xgens(int n) {
  std::vector<Letter> gens;
  for (int i = 1; i <= n; ++i) gens.push_back(make_letter(Family::X, i));
  return gens;
}

Presentation surface_presentation(int g) {
  Alphabet surface{AlphabetKind::Surface, g};
  std::vector<Letter> gens;
  for (int i = 0; i < surface.size(); ++i) gens.push_back(surface.generator(i));
  return Presentation(std::move(gens), {surface_relator(g)});
}

}  // namespace

TEST_CASE("relators are stored in canonical cyclic form") {
  Presentation p(xgens(2), {w("x2 x1"), w("x1 x2 x1^-1")});
  CHECK(p.relators()[0] == w("x1 x2"));  // least rotation
  CHECK(p.relators()[1] == w("x2"));     // cyclically reduced
}

TEST_CASE("empty relators are discarded on construction") {
  Presentation p(xgens(2), {Word(), w("x1 x1^-1"), w("x2")});
  CHECK(p.relators().size() == 1);
  CHECK(p.relators()[0] == w("x2"));
}

TEST_CASE("construction validates letters and duplicates") {
  CHECK_THROWS_AS(Presentation(xgens(2), {w("x3")}), std::invalid_argument);
  std::vector<Letter> dup = {make_letter(Family::X, 1), make_letter(Family::X, 1)};
  CHECK_THROWS_AS(Presentation(dup, {}), std::invalid_argument);
}

TEST_CASE("abelianization of the genus-2 surface group") {
  AbelianInvariants inv = abelianization(surface_presentation(2));
  CHECK(inv.free_rank == 4);
  CHECK(inv.torsion.empty());
}

TEST_CASE("abelianization of Z/5") {
  Presentation p(xgens(1), {w("x1 x1 x1 x1 x1")});
  AbelianInvariants inv = abelianization(p);
  CHECK(inv.free_rank == 0);
  REQUIRE(inv.torsion.size() == 1);
  CHECK(inv.torsion[0] == 5);
}

TEST_CASE("abelianization of a free presentation") {
  AbelianInvariants inv = abelianization(Presentation::free_on_x(2));
  CHECK(inv.free_rank == 2);
  CHECK(inv.torsion.empty());
}

TEST_CASE("exponent matrix") {
  Presentation p(xgens(2), {w("x1 x2 x1")});
  IntegerMatrix m = p.exponent_matrix();
  CHECK(m.rows() == 1);
  CHECK(m.cols() == 2);
  CHECK(m.at(0, 0) == 2);
  CHECK(m.at(0, 1) == 1);
}

TEST_CASE("presentation serialization") {
  Presentation p(xgens(2), {w("x1"), w("x2 x1^-1")});
  CHECK(serialize_presentation(p) == "presentation { gens: x1 x2 rels: \"x1\", \"x1^-1 x2\" }");
  CHECK(serialize_presentation(Presentation({}, {})) == "presentation { gens: rels: }");
}

TEST_CASE("renumber_to_x") {
  Presentation p({make_letter(Family::X, 3)}, {w("x3 x3")});
  Presentation q = renumber_to_x(p);
  CHECK(q.generators() == xgens(1));
  CHECK(q.relators()[0] == w("x1 x1"));

  Presentation s = renumber_to_x(surface_presentation(1));
  CHECK(s.generator_count() == 2);
  CHECK(s.relators()[0] == canonical_relator(w("x1 x2 x1^-1 x2^-1")));
}
