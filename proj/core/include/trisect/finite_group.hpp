#ifndef TRISECT_FINITE_GROUP_HPP
#define TRISECT_FINITE_GROUP_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "trisect/budget.hpp"
#include "trisect/presentation.hpp"

namespace trisect {

/// A finite group as an explicit multiplication table. Element 0 is the
/// identity.
struct FiniteGroup {
  std::string name;
  int order = 1;
  std::vector<int> mul;  // order x order, row-major
  std::vector<int> inv;

  int times(int a, int b) const { return mul[static_cast<std::size_t>(a) * order + b]; }
  int inverse(int a) const { return inv[a]; }
};

FiniteGroup cyclic_group(int n);
FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b);
FiniteGroup symmetric_group(int n);    // n <= 6
FiniteGroup alternating_group(int n);  // n <= 6
FiniteGroup dihedral_group(int n);     // order 2n, n >= 3
FiniteGroup quaternion_group();        // Q8

/// The fixed invariant battery: Z/2, Z/3, Z/4, Z/2xZ/2, S3, D4, Q8, A4,
/// S4, A5, in that order.
const std::vector<FiniteGroup>& builtin_finite_groups();

struct HomCount {
  /// Exact count, or nullopt when the node budget ran out.
  std::optional<std::uint64_t> count;
  long long nodes_visited = 0;
};

/// Counts homomorphisms P -> Q by backtracking over generator images with
/// relator-prefix pruning (each relator is checked as soon as its last
/// generator is assigned).
HomCount count_homomorphisms(const Presentation& p, const FiniteGroup& q, const Budget& budget);

struct HomEnumeration {
  std::vector<std::vector<int>> homs;  // generator-image tuples
  bool complete = false;               // false when the node budget ran out
  long long nodes_visited = 0;
};

/// Enumerates the homomorphisms found within the node budget, in
/// lexicographic order of generator-image tuples.
HomEnumeration enumerate_homomorphisms(const Presentation& p, const FiniteGroup& q, const Budget& budget);

}  // namespace trisect

#endif  // TRISECT_FINITE_GROUP_HPP
