#include "graphhom/multigraph.hpp"

#include <algorithm>
#include <stdexcept>

namespace graphhom {

MultiGraph::MultiGraph(std::uint32_t node_count, std::vector<Edge> edges)
    : node_count_(node_count), edges_(std::move(edges)) {
  for (auto& e : edges_) {
    if (e.a > e.b) std::swap(e.a, e.b);
  }
  normalize();
}

void MultiGraph::normalize() {
  for (const auto& e : edges_) {
    if (e.a == e.b)
      throw std::invalid_argument("loops are not allowed in domain graphs");
    if (e.b >= node_count_)
      throw std::invalid_argument("edge endpoint out of range");
    if (e.mult == 0) throw std::invalid_argument("zero edge multiplicity");
  }
  std::sort(edges_.begin(), edges_.end(), [](const Edge& x, const Edge& y) {
    return std::tie(x.a, x.b) < std::tie(y.a, y.b);
  });
  std::vector<Edge> merged;
  for (const auto& e : edges_) {
    if (!merged.empty() && merged.back().a == e.a && merged.back().b == e.b) {
      merged.back().mult += e.mult;
    } else {
      merged.push_back(e);
    }
  }
  edges_ = std::move(merged);
}

std::uint64_t MultiGraph::edge_count() const {
  std::uint64_t total = 0;
  for (const auto& e : edges_) total += e.mult;
  return total;
}

std::uint32_t MultiGraph::degree(std::uint32_t v) const {
  std::uint32_t d = 0;
  for (const auto& e : edges_) {
    if (e.a == v) d += e.mult;
    if (e.b == v) d += e.mult;
  }
  return d;
}

std::uint32_t MultiGraph::multiplicity(std::uint32_t u, std::uint32_t v) const {
  if (u > v) std::swap(u, v);
  for (const auto& e : edges_) {
    if (e.a == u && e.b == v) return e.mult;
  }
  return 0;
}

MultiGraph MultiGraph::simple_support() const {
  std::vector<Edge> simple = edges_;
  for (auto& e : simple) e.mult = 1;
  return MultiGraph(node_count_, std::move(simple));
}

MultiGraph MultiGraph::disjoint_union(const MultiGraph& other) const {
  std::vector<Edge> all = edges_;
  for (const auto& e : other.edges_) {
    all.push_back(Edge{e.a + node_count_, e.b + node_count_, e.mult});
  }
  return MultiGraph(node_count_ + other.node_count_, std::move(all));
}

MultiGraph path_graph(std::uint32_t n) {
  std::vector<Edge> edges;
  for (std::uint32_t i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1, 1});
  return MultiGraph(n, std::move(edges));
}

MultiGraph cycle_graph(std::uint32_t n) {
  if (n < 3) throw std::invalid_argument("cycle needs at least 3 nodes");
  std::vector<Edge> edges;
  for (std::uint32_t i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1, 1});
  edges.push_back({0, n - 1, 1});
  return MultiGraph(n, std::move(edges));
}

MultiGraph complete_graph(std::uint32_t n) {
  std::vector<Edge> edges;
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = i + 1; j < n; ++j) edges.push_back({i, j, 1});
  return MultiGraph(n, std::move(edges));
}

}  // namespace graphhom
