#ifndef TRISECT_SUBGROUP_GRAPH_HPP
#define TRISECT_SUBGROUP_GRAPH_HPP

#include <array>
#include <optional>
#include <span>
#include <tuple>
#include <vector>

#include "trisect/word.hpp"

namespace trisect {

/// Folded, basepointed core graph of a finitely generated subgroup of a
/// free group (a Stallings graph). Edges are labeled by the 0-based
/// position of a generator in the ambient alphabet; each vertex has at
/// most one outgoing and one incoming edge per label.
class SubgroupGraph {
 public:
  /// Folds the wedge of loops spelled by the generator words. Deterministic
  /// for a fixed input order: clashes are resolved lowest vertex id first.
  /// Throws std::invalid_argument for words outside the ambient alphabet.
  static SubgroupGraph build(std::span<const Word> generators, const Alphabet& ambient);

  const Alphabet& ambient() const { return ambient_; }
  int vertex_count() const { return static_cast<int>(out_.size()); }
  int edge_count() const { return edge_count_; }
  int basepoint() const { return 0; }

  /// True iff u spells a closed path at the basepoint, i.e. lies in the
  /// subgroup.
  bool member(const Word& u) const;

  /// First Betti number E - V + 1 = rank of the subgroup.
  int rank() const;

  /// True iff the graph is the full rose, i.e. the subgroup is the whole
  /// ambient free group.
  bool is_whole_group() const;

  /// If the core graph is already a covering of the rose (every vertex has
  /// a full set of edges), the subgroup index equals the vertex count.
  /// Otherwise the index is infinite and nullopt is returned.
  std::optional<long long> finite_index() const;

  /// Basepointed labeled-graph canonical form: vertices relabeled in BFS
  /// discovery order (out-edges in label order, then in-edges), edges
  /// sorted. Two graphs are isomorphic as based labeled graphs iff their
  /// canonical forms are equal.
  std::vector<std::tuple<int, int, int>> canonical_edges() const;  // (src, label, dst)

  std::optional<int> out_edge(int v, int label) const;
  std::optional<int> in_edge(int v, int label) const;

 private:
  SubgroupGraph() = default;

  Alphabet ambient_;
  // out_[v][label] / in_[v][label] = target vertex, -1 when absent.
  std::vector<std::vector<int>> out_;
  std::vector<std::vector<int>> in_;
  int edge_count_ = 0;
};

}  // namespace trisect

#endif  // TRISECT_SUBGROUP_GRAPH_HPP
