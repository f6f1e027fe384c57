#ifndef GRAPHHOM_ENUMERATE_HPP
#define GRAPHHOM_ENUMERATE_HPP

#include <vector>

#include "graphhom/canonical.hpp"
#include "graphhom/labeled_graph.hpp"

namespace graphhom {

/// One representative per label-preserving isomorphism class with label set
/// exactly `labels`, at most `max_nodes` nodes and `max_edges` edges
/// (multiplicities counted). Parallel edges appear iff `multi`. Output is
/// sorted by canonical code, which orders by node count first.
/// Requires max_nodes >= |labels|.
std::vector<LabeledGraph> enumerate_labeled(const LabelSet& labels,
                                            std::uint32_t max_nodes,
                                            std::uint32_t max_edges,
                                            bool multi);

}  // namespace graphhom

#endif
