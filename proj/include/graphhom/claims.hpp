#ifndef GRAPHHOM_CLAIMS_HPP
#define GRAPHHOM_CLAIMS_HPP

#include "graphhom/algebra.hpp"

namespace graphhom {

struct ClaimResult {
  std::string name;
  bool pass = false;
  double residual = 0.0;  // worst violation observed (0 for count checks)
};

/// Property suite for the quotient-algebra layer: resolution-sum,
/// resolution-partition, unlabeling, resolution-projection and -product
/// identities, degree monotonicity, the unit decomposition, the product
/// decomposition of extension idempotents, and the mass factorization.
/// Runs against a normalized reflection-positive oracle on label sets of
/// size up to 2 (extensions reach 3 labels). Residual bound 1e-6.
std::vector<ClaimResult> run_section4_claims(
    const GraphParameter& f_normalized, const AlgebraBudget& budget,
    std::uint64_t seed);

bool all_pass(const std::vector<ClaimResult>& results);

}  // namespace graphhom

#endif
