#include "graphhom/labeled_graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace graphhom {

LabeledGraph::LabeledGraph(MultiGraph graph,
                           std::map<Label, std::uint32_t> labels)
    : graph_(std::move(graph)), labels_(std::move(labels)) {
  std::set<std::uint32_t> used;
  for (const auto& [l, v] : labels_) {
    if (l == 0) throw std::invalid_argument("labels must be positive");
    if (v >= graph_.node_count())
      throw std::invalid_argument("labeled node out of range");
    if (!used.insert(v).second)
      throw std::invalid_argument("labeling is not injective");
  }
}

LabelSet LabeledGraph::label_set() const {
  LabelSet s;
  for (const auto& [l, v] : labels_) s.insert(l);
  return s;
}

std::uint32_t LabeledGraph::node_of(Label l) const {
  auto it = labels_.find(l);
  if (it == labels_.end()) throw std::out_of_range("no such label");
  return it->second;
}

bool LabeledGraph::is_labeled_node(std::uint32_t v) const {
  for (const auto& [l, n] : labels_)
    if (n == v) return true;
  return false;
}

LabeledGraph labeled_complete(std::uint32_t k) {
  std::map<Label, std::uint32_t> labels;
  for (std::uint32_t i = 0; i < k; ++i) labels[i + 1] = i;
  return LabeledGraph(complete_graph(k), std::move(labels));
}

LabeledGraph labeled_edgeless(std::uint32_t k) {
  std::map<Label, std::uint32_t> labels;
  for (std::uint32_t i = 0; i < k; ++i) labels[i + 1] = i;
  return LabeledGraph(MultiGraph(k, std::vector<Edge>{}), std::move(labels));
}

LabeledGraph unit_graph(const LabelSet& label_names) {
  std::map<Label, std::uint32_t> labels;
  std::uint32_t idx = 0;
  for (Label l : label_names) labels[l] = idx++;
  return LabeledGraph(MultiGraph(idx, std::vector<Edge>{}), std::move(labels));
}

LabeledGraph edge_between_labels(Label u, Label v, const LabelSet& rest) {
  if (u == v) throw std::invalid_argument("edge needs two distinct labels");
  LabelSet all = rest;
  all.insert(u);
  all.insert(v);
  std::map<Label, std::uint32_t> labels;
  std::uint32_t idx = 0;
  for (Label l : all) labels[l] = idx++;
  std::vector<Edge> edges{
      {std::min(labels[u], labels[v]), std::max(labels[u], labels[v]), 1}};
  return LabeledGraph(MultiGraph(idx, std::move(edges)), std::move(labels));
}

LabeledGraph glue(const LabeledGraph& g1, const LabeledGraph& g2) {
  const std::uint32_t n1 = g1.graph().node_count();
  // Map g2's nodes: shared labels collapse onto g1's node, the rest append.
  std::vector<std::uint32_t> map2(g2.graph().node_count(),
                                  std::uint32_t(-1));
  for (const auto& [l, v] : g2.labels()) {
    if (g1.has_label(l)) map2[v] = g1.node_of(l);
  }
  std::uint32_t next = n1;
  for (std::uint32_t v = 0; v < g2.graph().node_count(); ++v) {
    if (map2[v] == std::uint32_t(-1)) map2[v] = next++;
  }
  std::vector<Edge> edges = g1.graph().edges();
  for (const auto& e : g2.graph().edges()) {
    edges.push_back(Edge{map2[e.a], map2[e.b], e.mult});
  }
  std::map<Label, std::uint32_t> labels = g1.labels();
  for (const auto& [l, v] : g2.labels()) labels[l] = map2[v];
  return LabeledGraph(MultiGraph(next, std::move(edges)), std::move(labels));
}

LabeledGraph restrict_labels(const LabeledGraph& g, const LabelSet& keep) {
  std::map<Label, std::uint32_t> labels;
  for (const auto& [l, v] : g.labels()) {
    if (keep.count(l)) labels[l] = v;
  }
  return LabeledGraph(g.graph(), std::move(labels));
}

LabeledGraph relabel(const LabeledGraph& g,
                     const std::map<Label, Label>& rename) {
  std::map<Label, std::uint32_t> labels;
  for (const auto& [l, v] : g.labels()) {
    auto it = rename.find(l);
    const Label name = it == rename.end() ? l : it->second;
    if (!labels.emplace(name, v).second)
      throw std::invalid_argument("relabeling collides");
  }
  return LabeledGraph(g.graph(), std::move(labels));
}

LabeledGraph add_isolated_labels(const LabeledGraph& g, const LabelSet& extra) {
  std::vector<Label> fresh;
  for (Label l : extra) {
    if (!g.has_label(l)) fresh.push_back(l);
  }
  if (fresh.empty()) return g;
  MultiGraph grown(g.graph().node_count() + fresh.size(), g.graph().edges());
  std::map<Label, std::uint32_t> labels = g.labels();
  std::uint32_t next = g.graph().node_count();
  for (Label l : fresh) labels[l] = next++;
  return LabeledGraph(std::move(grown), std::move(labels));
}

}  // namespace graphhom
