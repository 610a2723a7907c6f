#include "trisect/todd_coxeter.hpp"

#include <chrono>
#include <deque>
#include <stdexcept>
#include <vector>

namespace trisect {

namespace {

using Clock = std::chrono::steady_clock;

// Cosets are numbered from 1. Column 2*g scans generator g forward,
// column 2*g+1 scans it backward; 0 in the table means undefined.
class Enumerator {
 public:
  Enumerator(const Presentation& p, std::span<const Word> subgroup_generators, const Budget& budget)
      : ncols_(2 * p.generator_count()), budget_(budget), start_(Clock::now()) {
    // Cap the table by cells as well as by cosets, so wide alphabets
    // cannot exhaust memory before hitting the coset cap.
    max_cosets_ = budget.max_cosets;
    if (ncols_ > 0) {
      long long by_cells = 64'000'000 / ncols_;
      if (by_cells < max_cosets_) max_cosets_ = by_cells;
    }
    for (const Word& r : p.relators()) relators_.push_back(to_cols(p, r));
    for (const Word& w : subgroup_generators) {
      if (!w.empty()) subgroup_.push_back(to_cols(p, w));
    }
    new_coset();  // coset 1
  }

  ToddCoxeterResult run() {
    ToddCoxeterResult res;
    for (const auto& w : subgroup_) {
      if (!scan_and_fill(1, w)) return overflow(res);
    }
    for (long long a = 1; a <= max_defined_; ++a) {
      if (rep(a) != a) continue;
      bool died = false;
      for (const auto& w : relators_) {
        if (!scan_and_fill(a, w)) return overflow(res);
        if (rep(a) != a) {
          died = true;
          break;
        }
      }
      if (died) continue;
      for (int x = 0; x < ncols_; ++x) {
        if (entry(a, x) == 0) {
          if (!define(a, x)) return overflow(res);
        }
      }
    }
    res.completed = true;
    res.index = live_count();
    res.cosets_defined = total_defined_;
    self_check();
    return res;
  }

 private:
  std::vector<std::vector<int>> relators_;
  std::vector<std::vector<int>> subgroup_;
  int ncols_;
  Budget budget_;
  Clock::time_point start_;
  long long max_cosets_ = 0;

  std::vector<long long> table_;  // (max_defined_+1) * ncols_, row 0 unused
  std::vector<long long> p_;      // merge forest, p_[c] <= c
  long long max_defined_ = 0;
  long long total_defined_ = 0;
  bool out_of_budget_ = false;

  static int inv_col(int x) { return x ^ 1; }

  static std::vector<int> to_cols(const Presentation& p, const Word& w) {
    std::vector<int> cols;
    cols.reserve(w.size());
    for (const Letter& l : w.letters()) {
      int pos = p.generator_position(l);
      if (pos < 0) throw std::invalid_argument("word uses a letter outside the presentation");
      cols.push_back(2 * pos + (l.sign < 0 ? 1 : 0));
    }
    return cols;
  }

  long long entry(long long c, int x) const { return table_[c * ncols_ + x]; }
  void set_entry(long long c, int x, long long v) { table_[c * ncols_ + x] = v; }

  long long rep(long long c) {
    while (p_[c] != c) {
      p_[c] = p_[p_[c]];
      c = p_[c];
    }
    return c;
  }

  long long new_coset() {
    ++max_defined_;
    ++total_defined_;
    table_.resize((max_defined_ + 1) * ncols_, 0);
    p_.resize(max_defined_ + 1);
    p_[max_defined_] = max_defined_;
    return max_defined_;
  }

  bool budget_ok() {
    if (out_of_budget_) return false;
    if (total_defined_ > max_cosets_) {
      out_of_budget_ = true;
      return false;
    }
    if ((total_defined_ & 0xfff) == 0 &&
        std::chrono::duration<double>(Clock::now() - start_).count() > budget_.max_seconds) {
      out_of_budget_ = true;
      return false;
    }
    return true;
  }

  bool define(long long a, int x) {
    long long b = new_coset();
    if (!budget_ok()) return false;
    set_entry(a, x, b);
    set_entry(b, inv_col(x), a);
    return true;
  }

  void merge(long long a, long long b, std::deque<long long>& queue) {
    a = rep(a);
    b = rep(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    p_[b] = a;
    queue.push_back(b);
  }

  void coincidence(long long a, long long b) {
    std::deque<long long> queue;
    merge(a, b, queue);
    while (!queue.empty()) {
      long long dead = queue.front();
      queue.pop_front();
      for (int x = 0; x < ncols_; ++x) {
        long long d = entry(dead, x);
        if (d == 0) continue;
        set_entry(d, inv_col(x), 0);
        long long mu = rep(dead);
        long long nu = rep(d);
        if (long long t = entry(mu, x); t != 0) {
          merge(nu, t, queue);
        } else if (long long s = entry(nu, inv_col(x)); s != 0) {
          merge(mu, s, queue);
        } else {
          set_entry(mu, x, nu);
          set_entry(nu, inv_col(x), mu);
        }
      }
    }
  }

  // Scans the cyclic relation a . w = a, defining cosets to fill gaps.
  // Returns false when the coset budget is exhausted.
  bool scan_and_fill(long long a, const std::vector<int>& w) {
    long long f = a;
    long long b = a;
    int i = 0;
    int j = static_cast<int>(w.size()) - 1;
    for (;;) {
      while (i <= j && entry(f, w[i]) != 0) f = entry(f, w[i++]);
      if (i > j) {
        if (f != b) coincidence(f, b);
        return true;
      }
      while (j >= i && entry(b, inv_col(w[j])) != 0) b = entry(b, inv_col(w[j--]));
      if (j < i) {
        coincidence(f, b);
        return true;
      }
      if (j == i) {
        set_entry(f, w[i], b);
        set_entry(b, inv_col(w[i]), f);
        return true;
      }
      if (!define(f, w[i])) return false;
    }
  }

  long long live_count() {
    long long n = 0;
    for (long long c = 1; c <= max_defined_; ++c)
      if (rep(c) == c) ++n;
    return n;
  }

  ToddCoxeterResult overflow(ToddCoxeterResult res) {
    res.completed = false;
    res.cosets_defined = total_defined_;
    return res;
  }

  // Invariant audit after completion: the table is a genuine transitive
  // permutation action in which all relators and subgroup generators close.
  void self_check() {
    for (long long c = 1; c <= max_defined_; ++c) {
      if (rep(c) != c) continue;
      for (int x = 0; x < ncols_; ++x) {
        long long d = entry(c, x);
        if (d == 0 || rep(d) != d || entry(d, inv_col(x)) != c)
          throw std::logic_error("todd_coxeter: incomplete or inconsistent final table");
      }
      for (const auto& w : relators_) {
        long long t = c;
        for (int x : w) t = entry(t, x);
        if (t != c) throw std::logic_error("todd_coxeter: relator does not close");
      }
    }
    for (const auto& w : subgroup_) {
      long long t = rep(1);
      for (int x : w) t = entry(t, x);
      if (t != rep(1)) throw std::logic_error("todd_coxeter: subgroup generator does not close");
    }
  }
};

}  // namespace

ToddCoxeterResult todd_coxeter_index(const Presentation& p, std::span<const Word> subgroup_generators,
                                     const Budget& budget) {
  Enumerator e(p, subgroup_generators, budget);
  return e.run();
}

}  // namespace trisect
