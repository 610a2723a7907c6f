#include "trisect/tietze.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace trisect {

namespace {

using Clock = std::chrono::steady_clock;

// Working state: like a Presentation, but empty relators are allowed to
// linger until a deletion move removes them.
struct State {
  std::vector<Letter> gens;
  std::vector<Word> relators;

  long long total_length() const {
    long long n = 0;
    for (const Word& r : relators) n += static_cast<long long>(r.size());
    return n;
  }
};

State state_from(const Presentation& p) { return State{p.generators(), p.relators()}; }

Presentation presentation_from(const State& s) { return Presentation(s.gens, s.relators); }

bool same_generator(const Letter& a, const Letter& b) {
  return a.family == b.family && a.index == b.index;
}

// Replaces every occurrence of gen^(+-1) in w by word^(+-1), then reduces.
Word substitute(const Word& w, const Letter& gen, const Word& image) {
  std::vector<Letter> out;
  Word inv = image.inverse();
  for (const Letter& l : w.letters()) {
    if (same_generator(l, gen)) {
      const Word& rep = l.sign > 0 ? image : inv;
      out.insert(out.end(), rep.letters().begin(), rep.letters().end());
    } else {
      out.push_back(l);
    }
  }
  return Word(std::move(out));
}

Word rotate_left(const Word& w, int k) {
  if (w.empty()) return w;
  std::vector<Letter> ls(w.letters());
  k = ((k % static_cast<int>(ls.size())) + static_cast<int>(ls.size())) % static_cast<int>(ls.size());
  std::rotate(ls.begin(), ls.begin() + k, ls.end());
  return Word(std::move(ls));
}

// Count occurrences of gen (either sign) in w; records the position of the
// last one seen.
int occurrences(const Word& w, const Letter& gen, std::size_t* where = nullptr) {
  int n = 0;
  for (std::size_t i = 0; i < w.size(); ++i)
    if (same_generator(w[i], gen)) {
      ++n;
      if (where) *where = i;
    }
  return n;
}

// The word the eliminated generator equals, read off a relator that
// contains it exactly once: u g v = 1 gives g = u^-1 v^-1, and
// u g^-1 v = 1 gives g = v u.
Word solve_for_generator(const Word& relator, const Letter& gen) {
  std::size_t pos = 0;
  if (occurrences(relator, gen, &pos) != 1)
    throw std::runtime_error("tietze: relator does not contain the generator exactly once");
  std::vector<Letter> u(relator.letters().begin(), relator.letters().begin() + pos);
  std::vector<Letter> v(relator.letters().begin() + pos + 1, relator.letters().end());
  Word wu{std::vector<Letter>(u)};
  Word wv{std::vector<Letter>(v)};
  if (relator[pos].sign > 0) return concat(wu.inverse(), wv.inverse());
  return concat(wv, wu);
}

struct Applier {
  State& st;
  std::vector<Word>* images;  // optional: per-original-generator images

  void apply(const TietzeMove& move) {
    std::visit([this](const auto& m) { this->apply_one(m); }, move);
  }

  void check_relator_index(int r) const {
    if (r < 0 || r >= static_cast<int>(st.relators.size()))
      throw std::runtime_error("tietze: relator index out of range");
  }

  void apply_one(const tietze_move::DeleteTrivial& m) {
    check_relator_index(m.relator);
    if (!st.relators[m.relator].empty())
      throw std::runtime_error("tietze: DeleteTrivial on a nonempty relator");
    st.relators.erase(st.relators.begin() + m.relator);
  }

  void apply_one(const tietze_move::DeleteDuplicate& m) {
    check_relator_index(m.relator);
    check_relator_index(m.kept);
    if (m.kept == m.relator) throw std::runtime_error("tietze: duplicate of itself");
    if (!(st.relators[m.relator] == st.relators[m.kept]))
      throw std::runtime_error("tietze: DeleteDuplicate on distinct relators");
    st.relators.erase(st.relators.begin() + m.relator);
  }

  void apply_one(const tietze_move::EliminateGenerator& m) {
    check_relator_index(m.relator);
    if (m.gen < 0 || m.gen >= static_cast<int>(st.gens.size()))
      throw std::runtime_error("tietze: generator index out of range");
    Letter gen = st.gens[m.gen];
    Word image = solve_for_generator(st.relators[m.relator], gen);
    st.relators.erase(st.relators.begin() + m.relator);
    for (Word& r : st.relators) r = canonical_relator(substitute(r, gen, image));
    st.gens.erase(st.gens.begin() + m.gen);
    if (images)
      for (Word& w : *images) w = substitute(w, gen, image);
  }

  void apply_one(const tietze_move::ShortenRelator& m) {
    check_relator_index(m.target);
    check_relator_index(m.source);
    if (m.target == m.source) throw std::runtime_error("tietze: shorten against itself");
    if (m.exponent != 1 && m.exponent != -1) throw std::runtime_error("tietze: bad exponent");
    const Word& s = st.relators[m.source];
    Word product = concat(rotate_left(st.relators[m.target], m.rotation),
                          m.exponent > 0 ? s : s.inverse());
    st.relators[m.target] = canonical_relator(product);
  }
};

// --- move search -----------------------------------------------------------

// Generator order for the elimination preference: canonical letter order.
std::vector<int> sorted_gen_positions(const State& st) {
  std::vector<int> idx(st.gens.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(),
            [&](int a, int b) { return letter_less(st.gens[a], st.gens[b]); });
  return idx;
}

struct EliminationPlan {
  TietzeMove move;
  State result;
};

// Lowest generator (canonical order) that occurs exactly once in some
// relator; among those relators, the lexicographically least (ties: lowest
// index). Skips candidates whose substitution would blow the length cap
// and reports the skip so the caller can flag the budget.
std::optional<EliminationPlan> find_elimination(const State& st, std::vector<Word>* images,
                                                long long max_total_length, bool* skipped_by_cap) {
  for (int g : sorted_gen_positions(st)) {
    int best_r = -1;
    for (int r = 0; r < static_cast<int>(st.relators.size()); ++r) {
      if (occurrences(st.relators[r], st.gens[g]) != 1) continue;
      if (best_r < 0 || word_lex_less(st.relators[r], st.relators[best_r])) best_r = r;
    }
    if (best_r < 0) continue;
    State trial = st;
    std::vector<Word> trial_images = images ? *images : std::vector<Word>{};
    Applier ap{trial, images ? &trial_images : nullptr};
    TietzeMove move = tietze_move::EliminateGenerator{g, best_r};
    ap.apply(move);
    if (trial.total_length() > max_total_length) {
      if (skipped_by_cap) *skipped_by_cap = true;
      continue;  // try the next generator
    }
    if (images) *images = std::move(trial_images);
    return EliminationPlan{move, std::move(trial)};
  }
  return std::nullopt;
}

std::optional<TietzeMove> find_trivial_deletion(const State& st) {
  for (int r = 0; r < static_cast<int>(st.relators.size()); ++r)
    if (st.relators[r].empty()) return TietzeMove(tietze_move::DeleteTrivial{r});
  return std::nullopt;
}

std::optional<TietzeMove> find_duplicate_deletion(const State& st) {
  for (int j = 1; j < static_cast<int>(st.relators.size()); ++j)
    for (int i = 0; i < j; ++i)
      if (st.relators[i] == st.relators[j]) return TietzeMove(tietze_move::DeleteDuplicate{j, i});
  return std::nullopt;
}

std::optional<TietzeMove> find_shortening(const State& st) {
  std::optional<TietzeMove> best;
  std::size_t best_len = 0;
  for (int t = 0; t < static_cast<int>(st.relators.size()); ++t) {
    const Word& rt = st.relators[t];
    if (rt.empty()) continue;
    for (int s = 0; s < static_cast<int>(st.relators.size()); ++s) {
      if (s == t || st.relators[s].empty()) continue;
      for (int e : {1, -1}) {
        Word se = e > 0 ? st.relators[s] : st.relators[s].inverse();
        for (int rot = 0; rot < static_cast<int>(rt.size()); ++rot) {
          Word cand = canonical_relator(concat(rotate_left(rt, rot), se));
          if (cand.size() >= rt.size()) continue;
          if (!best || cand.size() < best_len) {
            best = TietzeMove(tietze_move::ShortenRelator{t, s, rot, e});
            best_len = cand.size();
          }
        }
      }
    }
  }
  return best;
}

}  // namespace

std::string to_string(const TietzeMove& m) {
  std::ostringstream os;
  std::visit(
      [&os](const auto& mv) {
        using T = std::decay_t<decltype(mv)>;
        if constexpr (std::is_same_v<T, tietze_move::DeleteTrivial>) {
          os << "delete-trivial r" << mv.relator;
        } else if constexpr (std::is_same_v<T, tietze_move::DeleteDuplicate>) {
          os << "delete-duplicate r" << mv.relator << " (= r" << mv.kept << ")";
        } else if constexpr (std::is_same_v<T, tietze_move::EliminateGenerator>) {
          os << "eliminate g" << mv.gen << " via r" << mv.relator;
        } else {
          os << "shorten r" << mv.target << " by r" << mv.source << "^" << mv.exponent
             << " rot " << mv.rotation;
        }
      },
      m);
  return os.str();
}

TietzeResult tietze_simplify(const Presentation& p, const Budget& budget) {
  State st = state_from(p);
  std::vector<Word> images;
  images.reserve(st.gens.size());
  for (const Letter& g : st.gens) images.push_back(Word::single(g));

  TietzeResult result;
  auto start = Clock::now();
  auto out_of_time = [&] {
    return std::chrono::duration<double>(Clock::now() - start).count() > budget.max_seconds;
  };

  int pass = 0;
  for (;; ++pass) {
    if (pass >= budget.max_tietze_passes) {
      result.budget_exhausted = true;
      result.budget_note = "tietze pass budget exhausted";
      break;
    }
    if (out_of_time()) {
      result.budget_exhausted = true;
      result.budget_note = "tietze wall-clock budget exhausted";
      break;
    }

    bool skipped_by_cap = false;
    if (auto plan = find_elimination(st, &images, budget.max_total_relator_length, &skipped_by_cap)) {
      st = std::move(plan->result);
      result.moves.push_back(plan->move);
      continue;
    }
    if (auto mv = find_trivial_deletion(st)) {
      Applier{st, &images}.apply(*mv);
      result.moves.push_back(*mv);
      continue;
    }
    if (auto mv = find_duplicate_deletion(st)) {
      Applier{st, &images}.apply(*mv);
      result.moves.push_back(*mv);
      continue;
    }
    if (auto mv = find_shortening(st)) {
      Applier{st, &images}.apply(*mv);
      result.moves.push_back(*mv);
      continue;
    }
    if (skipped_by_cap) {
      result.budget_exhausted = true;
      result.budget_note = "relator length cap blocked a generator elimination";
    }
    break;  // fixed point
  }

  result.simplified = presentation_from(st);
  result.generator_images = std::move(images);
  return result;
}

Presentation replay_transcript(const Presentation& p, const std::vector<TietzeMove>& moves) {
  State st = state_from(p);
  Applier ap{st, nullptr};
  for (const TietzeMove& m : moves) ap.apply(m);
  return presentation_from(st);
}

std::vector<Presentation> transcript_states(const Presentation& p, const std::vector<TietzeMove>& moves) {
  std::vector<Presentation> states;
  State st = state_from(p);
  states.push_back(presentation_from(st));
  Applier ap{st, nullptr};
  for (const TietzeMove& m : moves) {
    ap.apply(m);
    states.push_back(presentation_from(st));
  }
  return states;
}

}  // namespace trisect
