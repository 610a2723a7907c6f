#include "trisect/surface.hpp"

#include <algorithm>
#include <stdexcept>

#include "trisect/matrix.hpp"
#include "trisect/subgroup_graph.hpp"

namespace trisect {

Word surface_relator(int genus) {
  if (genus < 0) throw std::invalid_argument("genus must be >= 0");
  std::vector<Letter> letters;
  letters.reserve(4 * genus);
  for (int i = 1; i <= genus; ++i) {
    Letter a = make_letter(Family::A, i);
    Letter b = make_letter(Family::B, i);
    letters.push_back(a);
    letters.push_back(b);
    letters.push_back(a.inverse());
    letters.push_back(b.inverse());
  }
  return Word(std::move(letters));
}

namespace {

// All cyclic rotations of R_g and R_g^-1.
std::vector<Word> relator_rotations(int genus) {
  std::vector<Word> rots;
  for (const Word& base : {surface_relator(genus), surface_relator(genus).inverse()}) {
    std::vector<Letter> ls(base.letters());
    for (std::size_t k = 0; k < ls.size(); ++k) {
      rots.emplace_back(std::vector<Letter>(ls));
      std::rotate(ls.begin(), ls.begin() + 1, ls.end());
    }
  }
  return rots;
}

// Longest common prefix of the cyclic word (w read from position i) with
// rho, capped at min(|w|, |rho|).
std::size_t cyclic_match_length(const Word& w, std::size_t i, const Word& rho) {
  std::size_t cap = std::min(w.size(), rho.size());
  std::size_t len = 0;
  while (len < cap && w[(i + len) % w.size()] == rho[len]) ++len;
  return len;
}

bool exponent_sums_vanish(int genus, const Word& u) {
  std::vector<long long> sums(2 * genus, 0);
  Alphabet surface{AlphabetKind::Surface, genus};
  for (const Letter& l : u.letters()) {
    auto pos = surface.position(l);
    if (!pos) throw std::invalid_argument("word outside the surface alphabet");
    sums[*pos] += l.sign;
  }
  return std::all_of(sums.begin(), sums.end(), [](long long s) { return s == 0; });
}

}  // namespace

bool is_trivial_in_surface_group(int genus, const Word& u) {
  Alphabet surface{AlphabetKind::Surface, genus};
  if (!surface.contains_word(u)) throw std::invalid_argument("word outside the surface alphabet");
  if (genus == 0) return true;
  if (genus == 1) return exponent_sums_vanish(1, u);

  const std::vector<Word> rots = relator_rotations(genus);
  const std::size_t threshold = 2 * static_cast<std::size_t>(genus) + 1;  // > half of 4g

  Word w = cyclically_reduce(u).core;
  for (;;) {
    if (w.empty()) return true;
    bool replaced = false;
    for (std::size_t i = 0; i < w.size() && !replaced; ++i) {
      for (const Word& rho : rots) {
        std::size_t len = cyclic_match_length(w, i, rho);
        if (len < threshold) continue;
        // w (cyclic, from i) = p . rest with p == the first len letters of
        // rho; rho = p . q is a relator, so p = q^-1 and the piece shrinks.
        std::vector<Letter> rest;
        for (std::size_t t = len; t < w.size(); ++t) rest.push_back(w[(i + t) % w.size()]);
        std::vector<Letter> q(rho.letters().begin() + len, rho.letters().end());
        Word replacement = concat(Word(std::move(q)).inverse(), Word(std::move(rest)));
        w = cyclically_reduce(replacement).core;
        replaced = true;
        break;
      }
    }
    if (!replaced) return false;
  }
}

HandlebodyMap::HandlebodyMap(int genus, GeneratorMapping images, std::optional<std::vector<Word>> cuts)
    : genus_(genus), images_(std::move(images)), cuts_(std::move(cuts)) {
  if (genus < 0) throw std::invalid_argument("genus must be >= 0");
  Alphabet surface{AlphabetKind::Surface, genus};
  Alphabet handle{AlphabetKind::FreeX, genus};
  if (!(images_.domain() == surface) || !(images_.codomain() == handle))
    throw std::invalid_argument("handlebody map must send Surface(g) to FreeX(g)");
  if (genus == 0 && !cuts_) cuts_.emplace();
  if (cuts_) {
    if (static_cast<int>(cuts_->size()) != genus)
      throw std::invalid_argument("cut system must contain exactly g words");
    for (const Word& c : *cuts_)
      if (!surface.contains_word(c))
        throw std::invalid_argument("cut word outside the surface alphabet");
  }
}

HandlebodyMap HandlebodyMap::from_images(int genus, std::vector<Word> images,
                                         std::optional<std::vector<Word>> cuts) {
  GeneratorMapping f(Alphabet{AlphabetKind::Surface, genus}, Alphabet{AlphabetKind::FreeX, genus},
                     std::move(images));
  return HandlebodyMap(genus, std::move(f), std::move(cuts));
}

bool MapValidationReport::valid() const {
  if (!relator_killed || !surjective || !abelianized_surjective) return false;
  for (bool ok : cut_killed)
    if (!ok) return false;
  if (kernel_certificate && kernel_certificate->verdict == Verdict::Refuted) return false;
  return true;
}

Verdict MapValidationReport::verdict() const {
  if (!valid()) return Verdict::Refuted;
  if (kernel_certificate && kernel_certificate->verdict == Verdict::Inconclusive)
    return Verdict::Inconclusive;
  return Verdict::Proved;
}

MapValidationReport validate_handlebody_map(const HandlebodyMap& m, const Budget& budget) {
  MapValidationReport report;
  int g = m.genus();

  report.relator_killed = m.apply(surface_relator(g)).empty();

  Alphabet handle{AlphabetKind::FreeX, g};
  SubgroupGraph image_graph = SubgroupGraph::build(m.images().images(), handle);
  report.surjective = image_graph.is_whole_group();

  // Exponent matrix of the images, 2g x g; onto Z^g iff all g invariant
  // factors are 1.
  IntegerMatrix exp(2 * g, g);
  for (int i = 0; i < 2 * g; ++i)
    for (const Letter& l : m.images().images()[i].letters()) exp.at(i, l.index - 1) += l.sign;
  SmithNormalForm snf = smith_normal_form(exp);
  bool onto = true;
  for (int i = 0; i < g; ++i)
    if (snf.d.rows() <= i || snf.d.at(i, i) != 1) onto = false;
  report.abelianized_surjective = onto;

  if (m.cuts()) {
    for (const Word& c : *m.cuts()) report.cut_killed.push_back(m.apply(c).empty());

    // Necessary condition on the claimed kernel: the quotient of S_g by
    // the cuts must be free of rank g.
    Alphabet surface{AlphabetKind::Surface, g};
    std::vector<Letter> gens;
    for (int i = 0; i < surface.size(); ++i) gens.push_back(surface.generator(i));
    std::vector<Word> relators;
    relators.push_back(surface_relator(g));
    for (const Word& c : *m.cuts()) relators.push_back(c);
    Presentation quotient(std::move(gens), std::move(relators));
    report.kernel_certificate = certify_free_of_rank(quotient, g, budget);
  }

  return report;
}

}  // namespace trisect
