#include "trisect/trisection.hpp"

#include <algorithm>
#include <stdexcept>

#include "trisect/finite_group.hpp"

namespace trisect {

namespace {

Word shift_x(const Word& w, int offset) {
  std::vector<Letter> ls;
  ls.reserve(w.size());
  for (const Letter& l : w.letters()) ls.push_back(Letter{Family::X, l.index + offset, l.sign});
  return Word(std::move(ls));
}

Word shift_surface(const Word& w, int offset) {
  std::vector<Letter> ls;
  ls.reserve(w.size());
  for (const Letter& l : w.letters()) ls.push_back(Letter{l.family, l.index + offset, l.sign});
  return Word(std::move(ls));
}

std::vector<Letter> x_generators(int from_index, int count) {
  std::vector<Letter> gens;
  for (int i = 0; i < count; ++i) gens.push_back(make_letter(Family::X, from_index + i));
  return gens;
}

void push_relator(std::vector<Word>& relators, int& discarded, Word w) {
  if (w.empty()) {
    ++discarded;
  } else {
    relators.push_back(std::move(w));
  }
}

}  // namespace

GroupTrisection::GroupTrisection(int genus, int rank, std::array<HandlebodyMap, 3> maps,
                                 std::optional<Presentation> target)
    : genus_(genus), rank_(rank), maps_(std::move(maps)), target_(std::move(target)) {
  if (genus < 0 || rank < 0 || genus < rank)
    throw std::invalid_argument("trisection requires g >= k >= 0");
  for (const HandlebodyMap& m : maps_)
    if (m.genus() != genus) throw std::invalid_argument("all three maps must have the trisection's genus");
}

const HandlebodyMap& GroupTrisection::map(int sector) const {
  if (sector < 1 || sector > 3) throw std::out_of_range("sector must be 1, 2 or 3");
  return maps_[sector - 1];
}

PushoutResult pairwise_pushout(const GroupTrisection& t, int i, int j) {
  if (i == j) throw std::invalid_argument("pairwise_pushout needs two distinct sectors");
  const HandlebodyMap& fi = t.map(i);
  const HandlebodyMap& fj = t.map(j);
  int g = t.genus();

  PushoutResult result;
  std::vector<Word> relators;
  if (fj.cuts()) {
    for (const Word& c : *fj.cuts()) push_relator(relators, result.discarded_empty_relators, fi.apply(c));
    result.presentation = Presentation(x_generators(1, g), std::move(relators));
  } else {
    Alphabet surface{AlphabetKind::Surface, g};
    for (int s = 0; s < surface.size(); ++s) {
      Word gen = Word::single(surface.generator(s));
      Word rel = concat(fi.apply(gen), shift_x(fj.apply(gen), g).inverse());
      push_relator(relators, result.discarded_empty_relators, std::move(rel));
    }
    result.presentation = Presentation(x_generators(1, 2 * g), std::move(relators));
  }
  return result;
}

namespace {

// Shared by triple_pushout (cuts preferred) and symmetric_triple_pushout
// (always symmetric).
PushoutResult triple_pushout_impl(const GroupTrisection& t, bool force_symmetric, bool deduplicate) {
  int g = t.genus();
  const HandlebodyMap& f1 = t.map(1);

  PushoutResult result;
  std::vector<Word> relators;
  int extra_gens_from = g + 1;
  std::vector<Letter> gens = x_generators(1, g);

  Alphabet surface{AlphabetKind::Surface, g};
  for (int j : {2, 3}) {
    const HandlebodyMap& fj = t.map(j);
    if (fj.cuts() && !force_symmetric) {
      for (const Word& c : *fj.cuts())
        push_relator(relators, result.discarded_empty_relators, f1.apply(c));
    } else {
      int offset = extra_gens_from - 1;
      auto block = x_generators(extra_gens_from, g);
      gens.insert(gens.end(), block.begin(), block.end());
      extra_gens_from += g;
      for (int s = 0; s < surface.size(); ++s) {
        Word gen = Word::single(surface.generator(s));
        Word rel = concat(f1.apply(gen), shift_x(fj.apply(gen), offset).inverse());
        push_relator(relators, result.discarded_empty_relators, std::move(rel));
      }
    }
  }

  if (deduplicate) {
    std::vector<Word> unique;
    for (Word& r : relators) {
      Word canon = canonical_relator(r);
      if (std::find(unique.begin(), unique.end(), canon) == unique.end())
        unique.push_back(std::move(canon));
    }
    relators = std::move(unique);
  }

  result.presentation = Presentation(std::move(gens), std::move(relators));
  return result;
}

}  // namespace

PushoutResult triple_pushout(const GroupTrisection& t) { return triple_pushout_impl(t, false, true); }

PushoutResult symmetric_triple_pushout(const GroupTrisection& t) {
  return triple_pushout_impl(t, true, false);
}

namespace {

bool target_is_trivial_claim(const Presentation& target) { return target.generator_count() == 0; }

std::vector<std::optional<std::uint64_t>> hom_count_vector(const Presentation& p, const Budget& budget) {
  std::vector<std::optional<std::uint64_t>> counts;
  for (const FiniteGroup& q : builtin_finite_groups()) counts.push_back(count_homomorphisms(p, q, budget).count);
  return counts;
}

bool hom_vectors_compatible(const std::vector<std::optional<std::uint64_t>>& a,
                            const std::vector<std::optional<std::uint64_t>>& b) {
  for (std::size_t i = 0; i < a.size() && i < b.size(); ++i)
    if (a[i] && b[i] && *a[i] != *b[i]) return false;
  return true;
}

FaceCheck check_face(const GroupTrisection& t, int i, int j, const Budget& budget) {
  FaceCheck face;
  face.i = i;
  face.j = j;
  face.forward = pairwise_pushout(t, i, j);
  face.backward = pairwise_pushout(t, j, i);
  face.cert_forward = certify_free_of_rank(face.forward.presentation, t.rank(), budget);
  face.cert_backward = certify_free_of_rank(face.backward.presentation, t.rank(), budget);

  Verdict a = face.cert_forward.verdict;
  Verdict b = face.cert_backward.verdict;
  face.inconsistent = (a == Verdict::Proved && b == Verdict::Refuted) ||
                      (a == Verdict::Refuted && b == Verdict::Proved);
  if (face.inconsistent || a == Verdict::Refuted || b == Verdict::Refuted) {
    face.verdict = Verdict::Refuted;
  } else if (a == Verdict::Proved || b == Verdict::Proved) {
    face.verdict = Verdict::Proved;
  } else {
    face.verdict = Verdict::Inconclusive;
  }
  return face;
}

TargetCheck check_target(const GroupTrisection& t, const Budget& budget) {
  TargetCheck check;
  check.triple = triple_pushout(t);
  const Presentation& triple = check.triple.presentation;

  if (!t.target()) {
    // No claim to verify; the cube always presents some group.
    check.has_target = false;
    check.note = "no target claimed";
    check.verdict = Verdict::Proved;
    return check;
  }
  check.has_target = true;
  const Presentation& target = *t.target();

  if (target_is_trivial_claim(target)) {
    check.triviality = certify_trivial(triple, budget);
    check.verdict = check.triviality->verdict;
    return check;
  }

  // General target: invariant comparison, then a Tietze match up to
  // generator renumbering.
  check.triple_ab = abelianization(triple);
  check.target_ab = abelianization(target);
  if (!(*check.triple_ab == *check.target_ab)) {
    check.note = "abelianizations differ";
    check.verdict = Verdict::Refuted;
    return check;
  }
  check.triple_homs = hom_count_vector(triple, budget);
  check.target_homs = hom_count_vector(target, budget);
  if (!hom_vectors_compatible(check.triple_homs, check.target_homs)) {
    check.note = "finite-quotient homomorphism counts differ";
    check.verdict = Verdict::Refuted;
    return check;
  }
  Presentation lhs = renumber_to_x(tietze_simplify(triple, budget).simplified);
  Presentation rhs = renumber_to_x(tietze_simplify(target, budget).simplified);
  check.tietze_match = (lhs == rhs);
  if (*check.tietze_match) {
    check.verdict = Verdict::Proved;
  } else {
    check.note = "invariants agree but no presentation match was found";
    check.verdict = Verdict::Inconclusive;
  }
  return check;
}

RedundancyCheck check_redundancy(const GroupTrisection& t, const PushoutResult& triple,
                                 const std::optional<Certificate>& triple_triviality,
                                 const Budget& budget) {
  RedundancyCheck check;
  check.symmetric = symmetric_triple_pushout(t);
  check.triple_ab = abelianization(triple.presentation);
  check.symmetric_ab = abelianization(check.symmetric.presentation);
  check.abelianizations_equal = check.triple_ab == check.symmetric_ab;

  if (triple_triviality) {
    check.symmetric_triviality = certify_trivial(check.symmetric.presentation, budget);
    Verdict a = triple_triviality->verdict;
    Verdict b = check.symmetric_triviality->verdict;
    check.certificates_conflict = (a == Verdict::Proved && b == Verdict::Refuted) ||
                                  (a == Verdict::Refuted && b == Verdict::Proved);
  }

  check.verdict = (check.abelianizations_equal && !check.certificates_conflict) ? Verdict::Proved
                                                                                : Verdict::Refuted;
  return check;
}

}  // namespace

VerificationReport verify(const GroupTrisection& t, const Budget& budget) {
  VerificationReport report;

  for (int sector = 1; sector <= 3; ++sector)
    report.maps.push_back(validate_handlebody_map(t.map(sector), budget));

  report.faces.push_back(check_face(t, 1, 2, budget));
  report.faces.push_back(check_face(t, 1, 3, budget));
  report.faces.push_back(check_face(t, 2, 3, budget));

  report.target = check_target(t, budget);
  report.redundancy = check_redundancy(t, report.target.triple, report.target.triviality, budget);

  Verdict overall = Verdict::Proved;
  for (const MapValidationReport& m : report.maps) overall = combine_verdicts(overall, m.verdict());
  for (const FaceCheck& f : report.faces) overall = combine_verdicts(overall, f.verdict);
  overall = combine_verdicts(overall, report.target.verdict);
  overall = combine_verdicts(overall, report.redundancy.verdict);
  report.overall = overall;
  return report;
}

GroupTrisection connected_sum(const GroupTrisection& a, const GroupTrisection& b) {
  int g = a.genus(), gp = b.genus();
  int g2 = g + gp, k2 = a.rank() + b.rank();

  auto sum_map = [&](int sector) {
    const HandlebodyMap& fa = a.map(sector);
    const HandlebodyMap& fb = b.map(sector);
    std::vector<Word> images;
    images.reserve(2 * g2);
    for (const Word& w : fa.images().images()) images.push_back(w);
    for (const Word& w : fb.images().images()) images.push_back(shift_x(w, g));

    std::optional<std::vector<Word>> cuts;
    if (fa.cuts() && fb.cuts()) {
      cuts.emplace();
      for (const Word& c : *fa.cuts()) cuts->push_back(c);
      for (const Word& c : *fb.cuts()) cuts->push_back(shift_surface(c, g));
    }
    return HandlebodyMap::from_images(g2, std::move(images), std::move(cuts));
  };

  std::optional<Presentation> target;
  if (a.target() && b.target()) {
    // Free product: disjoint union of generators and relators.
    int n = a.target()->generator_count();
    std::vector<Letter> gens = a.target()->generators();
    for (const Letter& l : b.target()->generators())
      gens.push_back(Letter{l.family, l.index + n, 1});
    std::vector<Word> rels = a.target()->relators();
    for (const Word& r : b.target()->relators()) rels.push_back(shift_x(r, n));
    target = Presentation(std::move(gens), std::move(rels));
  }

  return GroupTrisection(g2, k2, {sum_map(1), sum_map(2), sum_map(3)}, std::move(target));
}

GroupTrisection stabilize(const GroupTrisection& t) { return connected_sum(t, standard_trivial_31()); }

GroupTrisection trivial_00() {
  HandlebodyMap empty = HandlebodyMap::from_images(0, {}, std::nullopt);
  return GroupTrisection(0, 0, {empty, empty, empty}, Presentation({}, {}));
}

GroupTrisection standard_trivial_31() {
  // Three genus-1 blocks; sector i kills the i-th a-generator and the
  // other two b-generators.
  auto w = [](const char* s) { return parse_word(s); };
  Word e;  // identity
  HandlebodyMap f1 = HandlebodyMap::from_images(
      3, {e, w("x1"), w("x2"), e, w("x3"), e}, std::vector<Word>{w("a1"), w("b2"), w("b3")});
  HandlebodyMap f2 = HandlebodyMap::from_images(
      3, {w("x1"), e, e, w("x2"), w("x3"), e}, std::vector<Word>{w("b1"), w("a2"), w("b3")});
  HandlebodyMap f3 = HandlebodyMap::from_images(
      3, {w("x1"), e, w("x2"), e, e, w("x3")}, std::vector<Word>{w("b1"), w("b2"), w("a3")});
  return GroupTrisection(3, 1, {f1, f2, f3}, Presentation({}, {}));
}

namespace {

GroupTrisection s1xs3_11() {
  auto w = [](const char* s) { return parse_word(s); };
  HandlebodyMap f = HandlebodyMap::from_images(1, {w("x1"), Word()}, std::vector<Word>{w("b1")});
  return GroupTrisection(1, 1, {f, f, f}, Presentation::free_on_x(1));
}

GroupTrisection cp2_10() {
  auto w = [](const char* s) { return parse_word(s); };
  HandlebodyMap f1 = HandlebodyMap::from_images(1, {w("x1"), Word()}, std::vector<Word>{w("b1")});
  HandlebodyMap f2 = HandlebodyMap::from_images(1, {Word(), w("x1")}, std::vector<Word>{w("a1")});
  HandlebodyMap f3 =
      HandlebodyMap::from_images(1, {w("x1"), w("x1^-1")}, std::vector<Word>{w("a1 b1")});
  return GroupTrisection(1, 0, {f1, f2, f3}, Presentation({}, {}));
}

GroupTrisection cp2bar_10() {
  GroupTrisection t = cp2_10();
  // Opposite cyclic order: swap sectors 2 and 3.
  return GroupTrisection(1, 0, {t.map(1), t.map(3), t.map(2)}, t.target());
}

}  // namespace

const std::vector<std::string>& builtin_example_names() {
  static const std::vector<std::string> names = {"trivial00", "standard31", "s1xs3_11", "cp2_10",
                                                 "cp2bar_10"};
  return names;
}

GroupTrisection builtin_example(std::string_view name) {
  if (name == "trivial00") return trivial_00();
  if (name == "standard31") return standard_trivial_31();
  if (name == "s1xs3_11") return s1xs3_11();
  if (name == "cp2_10") return cp2_10();
  if (name == "cp2bar_10") return cp2bar_10();
  throw std::invalid_argument("unknown example: " + std::string(name));
}

int euler_characteristic(const GroupTrisection& t) { return 2 + t.genus() - 3 * t.rank(); }

Fingerprint fingerprint(const GroupTrisection& t, const Budget& budget) {
  Fingerprint fp;
  fp.genus = t.genus();
  fp.rank = t.rank();
  fp.euler = euler_characteristic(t);

  Presentation triple = triple_pushout(t).presentation;
  fp.triple_abelianization = abelianization(triple);
  fp.hom_counts = hom_count_vector(triple, budget);

  for (int sector = 1; sector <= 3; ++sector) {
    const HandlebodyMap& m = t.map(sector);
    int g = t.genus();
    IntegerMatrix exp(2 * g, g);
    for (int i = 0; i < 2 * g; ++i)
      for (const Letter& l : m.images().images()[i].letters()) exp.at(i, l.index - 1) += l.sign;
    SmithNormalForm snf = smith_normal_form(exp);
    std::vector<BigInt> factors;
    for (int i = 0; i < g; ++i) factors.push_back(snf.d.at(i, i));
    fp.sector_invariant_factors[sector - 1] = std::move(factors);
  }
  return fp;
}

bool fingerprints_consistent(const Fingerprint& a, const Fingerprint& b) {
  if (a.genus != b.genus || a.rank != b.rank || a.euler != b.euler) return false;
  if (!(a.triple_abelianization == b.triple_abelianization)) return false;
  if (a.hom_counts.size() != b.hom_counts.size()) return false;
  if (!hom_vectors_compatible(a.hom_counts, b.hom_counts)) return false;
  return a.sector_invariant_factors == b.sector_invariant_factors;
}

namespace {

bool is_canonical_cyclic_class_representative(const Word& w) {
  std::vector<Letter> ls(w.letters());
  for (const Word& base : {w, w.inverse()}) {
    std::vector<Letter> rot(base.letters());
    for (std::size_t k = 0; k < rot.size(); ++k) {
      if (k > 0) std::rotate(rot.begin(), rot.begin() + 1, rot.end());
      if (std::lexicographical_compare(rot.begin(), rot.end(), ls.begin(), ls.end(), letter_less))
        return false;
    }
  }
  return true;
}

}  // namespace

std::vector<Word> search_common_kernel(const GroupTrisection& t, int max_length) {
  if (max_length < 1) throw std::invalid_argument("max_length must be >= 1");
  int g = t.genus();
  Alphabet surface{AlphabetKind::Surface, g};

  std::vector<Letter> signed_letters;
  for (int pos = 0; pos < surface.size(); ++pos) {
    signed_letters.push_back(surface.generator(pos));
    signed_letters.push_back(surface.generator(pos).inverse());
  }
  std::sort(signed_letters.begin(), signed_letters.end(), letter_less);

  std::vector<Word> found;
  std::vector<Letter> stack;

  auto accept = [&](const Word& w) {
    if (!is_canonical_cyclic_class_representative(w)) return;
    for (int sector = 1; sector <= 3; ++sector)
      if (!t.map(sector).apply(w).empty()) return;
    if (is_trivial_in_surface_group(g, w)) return;
    found.push_back(w);
  };

  // Depth-first over freely reduced words in letter order: within one
  // length the emission order is lexicographic.
  auto dfs = [&](auto&& self, int remaining) -> void {
    if (remaining == 0) {
      if (stack.size() >= 2 && stack.front() == stack.back().inverse()) return;  // not cyclically reduced
      accept(Word(std::vector<Letter>(stack)));
      return;
    }
    for (const Letter& l : signed_letters) {
      if (!stack.empty() && stack.back() == l.inverse()) continue;
      stack.push_back(l);
      self(self, remaining - 1);
      stack.pop_back();
    }
  };

  for (int len = 1; len <= max_length; ++len) dfs(dfs, len);
  return found;
}

}  // namespace trisect
