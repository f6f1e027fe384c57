#ifndef GRAPHHOM_MULTIGRAPH_HPP
#define GRAPHHOM_MULTIGRAPH_HPP

#include <cstdint>
#include <utility>
#include <vector>

namespace graphhom {

/// An unordered node pair with a multiplicity. Endpoints satisfy a < b.
struct Edge {
  std::uint32_t a = 0;
  std::uint32_t b = 0;
  std::uint32_t mult = 1;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Finite loop-free multigraph. Nodes are 0..node_count-1; parallel edges
/// are stored as one Edge per node pair with a multiplicity. Immutable
/// after construction.
class MultiGraph {
 public:
  /// Edges may repeat a pair (in either endpoint order); repeats accumulate
  /// multiplicity. Edge.mult defaults to 1, so brace lists of pairs work:
  /// MultiGraph(3, {{0,1}, {0,1}, {1,2}}). Throws std::invalid_argument on
  /// loops or out-of-range endpoints.
  explicit MultiGraph(std::uint32_t node_count = 0,
                      std::vector<Edge> edges = {});

  std::uint32_t node_count() const { return node_count_; }
  const std::vector<Edge>& edges() const { return edges_; }

  /// Total edge count, multiplicities included.
  std::uint64_t edge_count() const;

  /// Degree counting multiplicities.
  std::uint32_t degree(std::uint32_t v) const;

  std::uint32_t multiplicity(std::uint32_t u, std::uint32_t v) const;

  /// Parallel classes collapsed to single edges.
  MultiGraph simple_support() const;

  MultiGraph disjoint_union(const MultiGraph& other) const;

  /// Sorted, merged edge list makes this structural (not isomorphism) equality.
  friend bool operator==(const MultiGraph&, const MultiGraph&) = default;

 private:
  void normalize();

  std::uint32_t node_count_ = 0;
  std::vector<Edge> edges_;  // sorted by (a, b), pairs unique, mult >= 1
};

MultiGraph path_graph(std::uint32_t n);
MultiGraph cycle_graph(std::uint32_t n);
MultiGraph complete_graph(std::uint32_t n);

}  // namespace graphhom

#endif
