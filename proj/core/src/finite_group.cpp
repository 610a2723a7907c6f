#include "trisect/finite_group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace trisect {

namespace {

FiniteGroup from_permutations(std::string name, std::vector<std::vector<int>> elements) {
  // Identity-first, then lexicographic. The identity permutation is the
  // lexicographic minimum, so a plain sort suffices.
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  std::map<std::vector<int>, int> index;
  for (std::size_t i = 0; i < elements.size(); ++i) index[elements[i]] = static_cast<int>(i);

  int n = static_cast<int>(elements.size());
  FiniteGroup g;
  g.name = std::move(name);
  g.order = n;
  g.mul.resize(static_cast<std::size_t>(n) * n);
  g.inv.resize(n);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      std::vector<int> c(elements[a].size());
      for (std::size_t i = 0; i < c.size(); ++i) c[i] = elements[a][elements[b][i]];
      auto it = index.find(c);
      if (it == index.end()) throw std::logic_error("permutation set is not closed");
      g.mul[static_cast<std::size_t>(a) * n + b] = it->second;
      if (it->second == 0) g.inv[a] = b;
    }
  }
  return g;
}

std::vector<std::vector<int>> all_permutations(int n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<int>> out;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

bool is_even(const std::vector<int>& p) {
  int inversions = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) ++inversions;
  return inversions % 2 == 0;
}

}  // namespace

FiniteGroup cyclic_group(int n) {
  if (n < 1) throw std::invalid_argument("cyclic group order must be >= 1");
  FiniteGroup g;
  g.name = "Z/" + std::to_string(n);
  g.order = n;
  g.mul.resize(static_cast<std::size_t>(n) * n);
  g.inv.resize(n);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) g.mul[static_cast<std::size_t>(a) * n + b] = (a + b) % n;
    g.inv[a] = (n - a) % n;
  }
  return g;
}

FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b) {
  FiniteGroup g;
  g.name = a.name + "x" + b.name;
  g.order = a.order * b.order;
  g.mul.resize(static_cast<std::size_t>(g.order) * g.order);
  g.inv.resize(g.order);
  auto enc = [&](int x, int y) { return x * b.order + y; };
  for (int x1 = 0; x1 < a.order; ++x1)
    for (int y1 = 0; y1 < b.order; ++y1) {
      int e1 = enc(x1, y1);
      g.inv[e1] = enc(a.inverse(x1), b.inverse(y1));
      for (int x2 = 0; x2 < a.order; ++x2)
        for (int y2 = 0; y2 < b.order; ++y2)
          g.mul[static_cast<std::size_t>(e1) * g.order + enc(x2, y2)] =
              enc(a.times(x1, x2), b.times(y1, y2));
    }
  return g;
}

FiniteGroup symmetric_group(int n) {
  if (n < 1 || n > 6) throw std::invalid_argument("symmetric_group supports 1 <= n <= 6");
  return from_permutations("S" + std::to_string(n), all_permutations(n));
}

FiniteGroup alternating_group(int n) {
  if (n < 1 || n > 6) throw std::invalid_argument("alternating_group supports 1 <= n <= 6");
  std::vector<std::vector<int>> evens;
  for (auto& p : all_permutations(n))
    if (is_even(p)) evens.push_back(p);
  return from_permutations("A" + std::to_string(n), std::move(evens));
}

FiniteGroup dihedral_group(int n) {
  if (n < 3) throw std::invalid_argument("dihedral_group needs n >= 3");
  std::vector<std::vector<int>> elems;
  for (int k = 0; k < n; ++k) {
    std::vector<int> rot(n), refl(n);
    for (int i = 0; i < n; ++i) {
      rot[i] = (i + k) % n;
      refl[i] = ((k - i) % n + n) % n;
    }
    elems.push_back(rot);
    elems.push_back(refl);
  }
  return from_permutations("D" + std::to_string(n), std::move(elems));
}

FiniteGroup quaternion_group() {
  // Elements encoded (axis, sign): 0:+1 1:-1 2:+i 3:-i 4:+j 5:-j 6:+k 7:-k.
  auto axis = [](int e) { return e / 2; };  // 0 scalar, 1 i, 2 j, 3 k
  auto sgn = [](int e) { return e % 2 == 0 ? 1 : -1; };
  auto enc = [](int ax, int s) { return 2 * ax + (s < 0 ? 1 : 0); };

  auto mul_units = [&](int a, int b) {
    int ax1 = axis(a), ax2 = axis(b);
    int s = sgn(a) * sgn(b);
    if (ax1 == 0) return enc(ax2, s);
    if (ax2 == 0) return enc(ax1, s);
    if (ax1 == ax2) return enc(0, -s);  // i*i = j*j = k*k = -1
    // i*j=k, j*k=i, k*i=j; reversed order flips the sign.
    int ax3 = 6 - ax1 - ax2;  // {1,2,3} \ {ax1, ax2}
    bool forward = (ax2 - ax1 + 3) % 3 == 1;
    return enc(ax3, forward ? s : -s);
  };

  FiniteGroup g;
  g.name = "Q8";
  g.order = 8;
  g.mul.resize(64);
  g.inv.resize(8);
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) {
      int c = mul_units(a, b);
      g.mul[static_cast<std::size_t>(a) * 8 + b] = c;
      if (c == 0) g.inv[a] = b;
    }
  return g;
}

const std::vector<FiniteGroup>& builtin_finite_groups() {
  static const std::vector<FiniteGroup> groups = [] {
    std::vector<FiniteGroup> gs;
    gs.push_back(cyclic_group(2));
    gs.push_back(cyclic_group(3));
    gs.push_back(cyclic_group(4));
    gs.push_back(direct_product(cyclic_group(2), cyclic_group(2)));
    gs.push_back(symmetric_group(3));
    gs.push_back(dihedral_group(4));
    gs.push_back(quaternion_group());
    gs.push_back(alternating_group(4));
    gs.push_back(symmetric_group(4));
    gs.push_back(alternating_group(5));
    return gs;
  }();
  return groups;
}

namespace {

struct HomSearcher {
  const FiniteGroup& q;
  int ngens;
  // Relators as (generator position, sign) strings, grouped by the highest
  // generator position they mention.
  std::vector<std::vector<std::vector<std::pair<int, int>>>> relators_by_level;
  long long node_budget;
  long long nodes = 0;
  bool aborted = false;
  std::uint64_t count = 0;
  std::vector<int> assignment;
  std::vector<std::vector<int>>* collect = nullptr;

  HomSearcher(const Presentation& p, const FiniteGroup& q_, const Budget& budget)
      : q(q_), ngens(p.generator_count()), node_budget(budget.max_hom_nodes) {
    relators_by_level.resize(ngens);
    for (const Word& r : p.relators()) {
      std::vector<std::pair<int, int>> cols;
      int level = -1;
      for (const Letter& l : r.letters()) {
        int pos = p.generator_position(l);
        cols.emplace_back(pos, l.sign);
        level = std::max(level, pos);
      }
      if (level >= 0) relators_by_level[level].push_back(std::move(cols));
    }
    assignment.assign(ngens, 0);
  }

  bool relator_holds(const std::vector<std::pair<int, int>>& r) const {
    int acc = 0;  // identity
    for (auto [pos, sign] : r) {
      int img = assignment[pos];
      acc = q.times(acc, sign > 0 ? img : q.inverse(img));
    }
    return acc == 0;
  }

  void search(int level) {
    if (aborted) return;
    if (level == ngens) {
      ++count;
      if (collect) collect->push_back(assignment);
      return;
    }
    for (int value = 0; value < q.order; ++value) {
      if (++nodes > node_budget) {
        aborted = true;
        return;
      }
      assignment[level] = value;
      bool ok = true;
      for (const auto& r : relators_by_level[level])
        if (!relator_holds(r)) {
          ok = false;
          break;
        }
      if (ok) search(level + 1);
      if (aborted) return;
    }
  }
};

}  // namespace

HomCount count_homomorphisms(const Presentation& p, const FiniteGroup& q, const Budget& budget) {
  HomSearcher s(p, q, budget);
  s.search(0);
  HomCount out;
  out.nodes_visited = s.nodes;
  if (!s.aborted) out.count = s.count;
  return out;
}

HomEnumeration enumerate_homomorphisms(const Presentation& p, const FiniteGroup& q, const Budget& budget) {
  HomSearcher s(p, q, budget);
  HomEnumeration out;
  s.collect = &out.homs;
  s.search(0);
  out.complete = !s.aborted;
  out.nodes_visited = s.nodes;
  return out;
}

}  // namespace trisect
