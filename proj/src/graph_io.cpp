#include "graphhom/graph_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace graphhom {

LabeledGraph read_graph(std::istream& in) {
  std::uint32_t n = 0, m = 0, k = 0;
  if (!(in >> n >> m >> k))
    throw std::invalid_argument("graph header: expected 'N M K'");
  std::vector<Edge> edges;
  edges.reserve(m);
  for (std::uint32_t i = 0; i < m; ++i) {
    std::uint32_t u = 0, v = 0;
    if (!(in >> u >> v))
      throw std::invalid_argument("graph edge list truncated");
    if (u == v)
      throw std::invalid_argument("loop edge in input; loops are rejected");
    if (u >= n || v >= n)
      throw std::invalid_argument("edge endpoint out of range");
    edges.push_back(Edge{u, v, 1});
  }
  std::map<Label, std::uint32_t> labels;
  for (std::uint32_t i = 0; i < k; ++i) {
    std::uint32_t l = 0, v = 0;
    if (!(in >> l >> v))
      throw std::invalid_argument("graph label list truncated");
    if (l == 0) throw std::invalid_argument("labels must be positive");
    if (v >= n) throw std::invalid_argument("labeled node out of range");
    if (!labels.emplace(l, v).second)
      throw std::invalid_argument("duplicate label in input");
  }
  return LabeledGraph(MultiGraph(n, std::move(edges)), std::move(labels));
}

LabeledGraph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open graph file: " + path);
  return read_graph(in);
}

void write_graph(std::ostream& out, const LabeledGraph& g) {
  std::uint64_t m = g.graph().edge_count();
  out << g.graph().node_count() << ' ' << m << ' ' << g.labels().size()
      << '\n';
  for (const auto& e : g.graph().edges()) {
    for (std::uint32_t i = 0; i < e.mult; ++i)
      out << e.a << ' ' << e.b << '\n';
  }
  for (const auto& [l, v] : g.labels()) out << l << ' ' << v << '\n';
}

std::string graph_to_string(const LabeledGraph& g) {
  std::ostringstream out;
  write_graph(out, g);
  return out.str();
}

}  // namespace graphhom
