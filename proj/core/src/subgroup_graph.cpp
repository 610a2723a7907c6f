#include "trisect/subgroup_graph.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <stdexcept>

namespace trisect {

namespace {

struct RawEdge {
  int src;
  int label;
  int dst;
  auto key() const { return std::tie(src, label, dst); }
  bool operator<(const RawEdge& o) const { return key() < o.key(); }
  bool operator==(const RawEdge& o) const { return key() == o.key(); }
};

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) {
    for (int i = 0; i < n; ++i) parent[i] = i;
  }
  int find(int v) {
    while (parent[v] != v) {
      parent[v] = parent[parent[v]];
      v = parent[v];
    }
    return v;
  }
  // Keeps the smaller id as representative so the basepoint survives.
  void merge(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    parent[b] = a;
  }
};

}  // namespace

SubgroupGraph SubgroupGraph::build(std::span<const Word> generators, const Alphabet& ambient) {
  // Wedge of subdivided loops at vertex 0, one loop per generator word.
  std::vector<RawEdge> edges;
  int next_vertex = 1;
  for (const Word& w : generators) {
    if (!ambient.contains_word(w))
      throw std::invalid_argument("subgroup generator uses letters outside the ambient alphabet");
    if (w.empty()) continue;
    int cur = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
      const Letter& l = w[i];
      int nxt = (i + 1 == w.size()) ? 0 : next_vertex++;
      int label = *ambient.position(l);
      if (l.sign > 0)
        edges.push_back({cur, label, nxt});
      else
        edges.push_back({nxt, label, cur});
      cur = nxt;
    }
  }

  UnionFind uf(next_vertex);

  // Iterated folding: find the lowest-id vertex with two outgoing (or two
  // incoming) edges of equal label and merge the two lowest targets.
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<RawEdge> normalized;
    normalized.reserve(edges.size());
    for (const RawEdge& e : edges) normalized.push_back({uf.find(e.src), e.label, uf.find(e.dst)});
    std::sort(normalized.begin(), normalized.end());
    normalized.erase(std::unique(normalized.begin(), normalized.end()), normalized.end());
    edges = normalized;

    std::map<std::pair<int, int>, int> out_seen, in_seen;
    for (const RawEdge& e : edges) {
      auto [oit, onew] = out_seen.emplace(std::make_pair(e.src, e.label), e.dst);
      if (!onew && oit->second != e.dst) {
        uf.merge(oit->second, e.dst);
        changed = true;
        break;
      }
      auto [iit, inew] = in_seen.emplace(std::make_pair(e.dst, e.label), e.src);
      if (!inew && iit->second != e.src) {
        uf.merge(iit->second, e.src);
        changed = true;
        break;
      }
    }
  }

  // Trim dangling trees: non-basepoint vertices of total degree <= 1.
  std::set<int> alive;
  alive.insert(uf.find(0));
  for (const RawEdge& e : edges) {
    alive.insert(e.src);
    alive.insert(e.dst);
  }
  bool trimmed = true;
  while (trimmed) {
    trimmed = false;
    std::map<int, int> degree;
    for (int v : alive) degree[v] = 0;
    for (const RawEdge& e : edges) {
      degree[e.src]++;
      degree[e.dst]++;
    }
    int base = uf.find(0);
    for (int v : alive) {
      if (v != base && degree[v] <= 1) {
        alive.erase(v);
        std::vector<RawEdge> kept;
        for (const RawEdge& e : edges)
          if (e.src != v && e.dst != v) kept.push_back(e);
        edges = kept;
        trimmed = true;
        break;
      }
    }
  }

  // Compact vertex ids, basepoint first.
  std::map<int, int> remap;
  remap[uf.find(0)] = 0;
  for (int v : alive)
    if (!remap.count(v)) remap[v] = static_cast<int>(remap.size());

  SubgroupGraph g;
  g.ambient_ = ambient;
  int n = ambient.size();
  g.out_.assign(remap.size(), std::vector<int>(n, -1));
  g.in_.assign(remap.size(), std::vector<int>(n, -1));
  for (const RawEdge& e : edges) {
    int s = remap.at(e.src), d = remap.at(e.dst);
    g.out_[s][e.label] = d;
    g.in_[d][e.label] = s;
    ++g.edge_count_;
  }
  return g;
}

bool SubgroupGraph::member(const Word& u) const {
  int cur = 0;
  for (const Letter& l : u.letters()) {
    auto pos = ambient_.position(l);
    if (!pos) throw std::invalid_argument("member: letter outside the ambient alphabet");
    int nxt = l.sign > 0 ? out_[cur][*pos] : in_[cur][*pos];
    if (nxt < 0) return false;
    cur = nxt;
  }
  return cur == 0;
}

int SubgroupGraph::rank() const { return edge_count_ - vertex_count() + 1; }

bool SubgroupGraph::is_whole_group() const {
  return vertex_count() == 1 && edge_count_ == ambient_.size();
}

std::optional<long long> SubgroupGraph::finite_index() const {
  for (int v = 0; v < vertex_count(); ++v)
    for (int l = 0; l < ambient_.size(); ++l)
      if (out_[v][l] < 0 || in_[v][l] < 0) return std::nullopt;
  return vertex_count();
}

std::vector<std::tuple<int, int, int>> SubgroupGraph::canonical_edges() const {
  std::vector<int> order(vertex_count(), -1);
  int next = 0;
  std::deque<int> queue;
  order[0] = next++;
  queue.push_back(0);
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    for (int l = 0; l < ambient_.size(); ++l) {
      int w = out_[v][l];
      if (w >= 0 && order[w] < 0) {
        order[w] = next++;
        queue.push_back(w);
      }
    }
    for (int l = 0; l < ambient_.size(); ++l) {
      int w = in_[v][l];
      if (w >= 0 && order[w] < 0) {
        order[w] = next++;
        queue.push_back(w);
      }
    }
  }
  std::vector<std::tuple<int, int, int>> edges;
  for (int v = 0; v < vertex_count(); ++v)
    for (int l = 0; l < ambient_.size(); ++l)
      if (out_[v][l] >= 0) edges.emplace_back(order[v], l, order[out_[v][l]]);
  std::sort(edges.begin(), edges.end());
  return edges;
}

std::optional<int> SubgroupGraph::out_edge(int v, int label) const {
  int w = out_.at(v).at(label);
  return w >= 0 ? std::optional<int>(w) : std::nullopt;
}

std::optional<int> SubgroupGraph::in_edge(int v, int label) const {
  int w = in_.at(v).at(label);
  return w >= 0 ? std::optional<int>(w) : std::nullopt;
}

}  // namespace trisect
