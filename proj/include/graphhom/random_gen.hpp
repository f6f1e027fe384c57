#ifndef GRAPHHOM_RANDOM_GEN_HPP
#define GRAPHHOM_RANDOM_GEN_HPP

#include <random>

#include "graphhom/multigraph.hpp"
#include "graphhom/weighted_target.hpp"

namespace graphhom {

/// Seeded random multigraph: node count in [0, max_nodes], up to max_edges
/// edges (parallel copies allowed iff multi).
MultiGraph random_multigraph(std::mt19937_64& rng, std::uint32_t max_nodes,
                             std::uint32_t max_edges, bool multi);

/// Seeded random target: d nodes, positive alpha and symmetric beta with
/// numerators in [-num_range, num_range] (alpha positive) and denominators
/// up to den_range.
WeightedTarget random_target(std::mt19937_64& rng, std::uint32_t d,
                             int num_range, int den_range);

/// Same, resampled until twin-free with no symmetry between nodes
/// (distinct alpha or distinct loop weights).
WeightedTarget random_twin_free_target(std::mt19937_64& rng, std::uint32_t d,
                                       int num_range, int den_range);

}  // namespace graphhom

#endif
