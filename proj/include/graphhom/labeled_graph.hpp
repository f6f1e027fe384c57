#ifndef GRAPHHOM_LABELED_GRAPH_HPP
#define GRAPHHOM_LABELED_GRAPH_HPP

#include <map>
#include <set>
#include <vector>

#include "graphhom/multigraph.hpp"

namespace graphhom {

using Label = std::uint32_t;
using LabelSet = std::set<Label>;

/// Multigraph with an injective partial labeling of its nodes by positive
/// integers. The special case with labels {1..k} is a k-labeled graph.
class LabeledGraph {
 public:
  LabeledGraph() = default;

  /// Throws std::invalid_argument on non-positive labels, out-of-range
  /// nodes, or a non-injective labeling.
  LabeledGraph(MultiGraph graph, std::map<Label, std::uint32_t> labels);

  const MultiGraph& graph() const { return graph_; }
  const std::map<Label, std::uint32_t>& labels() const { return labels_; }

  LabelSet label_set() const;
  bool has_label(Label l) const { return labels_.count(l) != 0; }
  std::uint32_t node_of(Label l) const;
  bool is_labeled_node(std::uint32_t v) const;

  friend bool operator==(const LabeledGraph&, const LabeledGraph&) = default;

 private:
  MultiGraph graph_;
  std::map<Label, std::uint32_t> labels_;
};

/// K_k: complete graph on k nodes, all labeled 1..k. K_0 is the empty graph.
LabeledGraph labeled_complete(std::uint32_t k);

/// O_k: k labeled nodes, no edges.
LabeledGraph labeled_edgeless(std::uint32_t k);

/// U_S: one node per label in S, no edges (the unit of the S-algebra).
LabeledGraph unit_graph(const LabelSet& labels);

/// Single edge between two fresh nodes labeled u and v (k_uv of the target
/// construction), plus isolated nodes for the remaining labels in S.
LabeledGraph edge_between_labels(Label u, Label v, const LabelSet& rest);

/// Gluing product: disjoint union with same-labeled nodes identified.
/// Label sets may differ; the result carries their union. Parallel edges
/// are preserved.
LabeledGraph glue(const LabeledGraph& g1, const LabeledGraph& g2);

/// Drops the labels outside `keep`; the underlying graph is unchanged.
LabeledGraph restrict_labels(const LabeledGraph& g, const LabelSet& keep);

/// Renames labels via the injective map `rename` (labels absent from the
/// map are kept). Throws if the renaming collides.
LabeledGraph relabel(const LabeledGraph& g, const std::map<Label, Label>& rename);

/// Adds one isolated labeled node per label in `extra` (labels already
/// present are ignored). This realizes the inclusion of an S-labeled graph
/// into the T-labeled algebra for S subset of T.
LabeledGraph add_isolated_labels(const LabeledGraph& g, const LabelSet& extra);

}  // namespace graphhom

#endif
