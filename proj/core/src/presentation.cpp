#include "trisect/presentation.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace trisect {

Word canonical_relator(const Word& w) {
  Word core = cyclically_reduce(w).core;
  if (core.size() < 2) return core;
  Word best = core;
  std::vector<Letter> rot(core.letters());
  for (std::size_t i = 1; i < core.size(); ++i) {
    std::rotate(rot.begin(), rot.begin() + 1, rot.end());
    Word cand = reduce(rot);  // rotations of a cyclically reduced word stay reduced
    if (word_lex_less(cand, best)) best = cand;
  }
  return best;
}

Presentation::Presentation(std::vector<Letter> generators, std::vector<Word> relators)
    : gens_(std::move(generators)) {
  std::set<std::pair<int, int>> seen;
  for (Letter& g : gens_) {
    g.sign = 1;
    if (!seen.insert({static_cast<int>(g.family), g.index}).second)
      throw std::invalid_argument("duplicate generator in presentation");
  }
  for (const Word& r : relators) {
    Word canon = canonical_relator(r);
    if (canon.empty()) continue;
    for (const Letter& l : canon.letters())
      if (generator_position(l) < 0)
        throw std::invalid_argument("relator uses a letter that is not a generator: " + to_string(l));
    relators_.push_back(std::move(canon));
  }
}

Presentation Presentation::free_on_x(int n) {
  std::vector<Letter> gens;
  for (int i = 1; i <= n; ++i) gens.push_back(make_letter(Family::X, i));
  return Presentation(std::move(gens), {});
}

int Presentation::generator_position(const Letter& l) const {
  for (std::size_t i = 0; i < gens_.size(); ++i)
    if (gens_[i].family == l.family && gens_[i].index == l.index) return static_cast<int>(i);
  return -1;
}

long long Presentation::total_relator_length() const {
  long long n = 0;
  for (const Word& r : relators_) n += static_cast<long long>(r.size());
  return n;
}

IntegerMatrix Presentation::exponent_matrix() const {
  IntegerMatrix m(static_cast<int>(relators_.size()), generator_count());
  for (int i = 0; i < m.rows(); ++i)
    for (const Letter& l : relators_[i].letters())
      m.at(i, generator_position(l)) += l.sign;
  return m;
}

std::string AbelianInvariants::to_string() const {
  std::ostringstream os;
  os << "Z^" << free_rank;
  for (const BigInt& t : torsion) os << " + Z/" << t;
  return os.str();
}

AbelianInvariants abelianization(const Presentation& p) {
  SmithNormalForm snf = smith_normal_form(p.exponent_matrix());
  AbelianInvariants inv;
  int nonzero = 0;
  int n = std::min(snf.d.rows(), snf.d.cols());
  for (int i = 0; i < n; ++i) {
    const BigInt& d = snf.d.at(i, i);
    if (d == 0) continue;
    ++nonzero;
    if (d > 1) inv.torsion.push_back(d);
  }
  inv.free_rank = p.generator_count() - nonzero;
  return inv;
}

std::string serialize_presentation(const Presentation& p) {
  std::ostringstream os;
  os << "presentation { gens:";
  for (const Letter& g : p.generators()) os << ' ' << to_string(g);
  os << " rels:";
  for (std::size_t i = 0; i < p.relators().size(); ++i) {
    os << (i ? ", " : " ") << '"' << to_string(p.relators()[i]) << '"';
  }
  os << " }";
  return os.str();
}

Presentation renumber_to_x(const Presentation& p) {
  std::vector<Letter> gens;
  for (int i = 1; i <= p.generator_count(); ++i) gens.push_back(make_letter(Family::X, i));
  std::vector<Word> rels;
  for (const Word& r : p.relators()) {
    std::vector<Letter> ls;
    for (const Letter& l : r.letters()) {
      int pos = p.generator_position(l);
      ls.push_back(Letter{Family::X, pos + 1, l.sign});
    }
    rels.push_back(Word(std::move(ls)));
  }
  return Presentation(std::move(gens), std::move(rels));
}

}  // namespace trisect
