#ifndef GRAPHHOM_HOM_HPP
#define GRAPHHOM_HOM_HPP

#include <map>

#include "graphhom/labeled_graph.hpp"
#include "graphhom/weighted_target.hpp"

namespace graphhom {

/// Pinning of labels to target nodes, keyed by label name.
using Assignment = std::map<Label, std::uint32_t>;

/// Weighted homomorphism partition function: the sum over all maps
/// phi: V(G) -> V(H) of prod alpha(phi(u)) * prod beta(phi(u),phi(v)),
/// parallel edges contributing repeated beta factors. hom(K_0, h) = 1.
/// Exact; cost d^|V(G)|.
Rational hom(const MultiGraph& g, const WeightedTarget& h);

/// Same sum restricted to maps extending `phi` on the labeled nodes.
/// Throws std::invalid_argument unless phi's domain is exactly the label
/// set of g. Summing over all phi recovers hom.
Rational hom_pinned(const LabeledGraph& g, const WeightedTarget& h,
                    const Assignment& phi);

/// Exact value of hom along a greedy min-degree elimination order; cost is
/// exponential only in the elimination boundary. Falls back to the direct
/// sum when an intermediate table would exceed `table_cap` entries.
Rational hom_fast(const MultiGraph& g, const WeightedTarget& h,
                  std::uint64_t table_cap = 10'000'000);

}  // namespace graphhom

#endif
