#ifndef GRAPHHOM_WEIGHTED_TARGET_HPP
#define GRAPHHOM_WEIGHTED_TARGET_HPP

#include <string>
#include <vector>

#include "graphhom/rational.hpp"

namespace graphhom {

/// Weighted target graph H: d nodes with positive node weights alpha and a
/// symmetric edge-weight matrix beta (diagonal = loop weights; absent edges
/// are weight 0, so H is conceptually complete with loops).
struct WeightedTarget {
  std::uint32_t d = 0;
  std::vector<Rational> alpha;               // size d, all > 0
  std::vector<std::vector<Rational>> beta;   // d x d, symmetric

  const Rational& b(std::uint32_t i, std::uint32_t j) const {
    return beta[i][j];
  }

  /// Throws std::invalid_argument when the invariants fail.
  void validate() const;

  /// Two nodes are twins when their beta rows coincide entrywise; twin
  /// targets are not pinned down by their homomorphism function.
  bool twin_free() const;
};

/// Complete-graph target K_q: alpha = 1, beta = 1 off-diagonal, 0 on the
/// diagonal. hom(G, K_q) counts proper q-colorings.
WeightedTarget complete_target(std::uint32_t q);

/// Single node with a loop of the given weight and node weight 1.
WeightedTarget single_loop_target(const Rational& loop_weight);

/// JSON form: {"d": 2, "alpha": ["1/2","1/2"], "beta": [["1","-1"],["-1","1"]]}
/// with rationals as "p/q" strings (plain integers allowed).
WeightedTarget target_from_json(const std::string& text);
std::string target_to_json(const WeightedTarget& h);
WeightedTarget read_target_file(const std::string& path);
void write_target_file(const std::string& path, const WeightedTarget& h);

}  // namespace graphhom

#endif
