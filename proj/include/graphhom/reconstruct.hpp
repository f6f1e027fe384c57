#ifndef GRAPHHOM_RECONSTRUCT_HPP
#define GRAPHHOM_RECONSTRUCT_HPP

#include <optional>

#include "graphhom/algebra.hpp"
#include "graphhom/connmat.hpp"

namespace graphhom {

/// Divides f by f(K_1)^{|V(G)|} so the normalized parameter takes value 1
/// on a single node; the returned scale is f(K_1). Undone after
/// reconstruction by multiplying every recovered node weight by the scale.
/// Requires f(K_0) = 1 and throws "non-normalizable" when f(K_1) <= 0.
std::pair<GraphParameter, Rational> normalize(const GraphParameter& f);

struct DegreeSite {
  LabelSet labels;              // S
  QuantumGraph idempotent;      // p attaining the maximum degree
  std::uint32_t max_degree = 0; // D
  bool stabilized = false;      // degree repeated across consecutive levels
  std::vector<std::uint32_t> level_max_degrees;
};

/// Grows S through {}, {1}, {1,2}, ... computing every basic idempotent's
/// degree per level; returns the first level whose maximum degree repeats
/// at the next level, or the best site found when the level budget runs
/// out (flagged unstabilized).
DegreeSite find_max_degree_site(const GraphParameter& f_normalized,
                                const AlgebraBudget& budget,
                                std::uint32_t max_levels, std::uint64_t seed);

struct TargetBuild {
  WeightedTarget target;       // exact-rational weights (snapped or dyadic)
  std::vector<double> alpha_raw;
  std::vector<std::vector<double>> beta_raw;
  double max_asymmetry = 0.0;
  bool snapped = true;         // every weight hit a small rational
};

/// The target construction: the D idempotents over S+{u} resolving p give
/// the node weights alpha_i = f(q_i^u)/f(p); their relabeled copies over
/// S+{v} pair into orthogonal idempotents q_i^u q_j^v whose projections of
/// p*k_uv yield beta. Weights are snapped to rationals with denominator
/// <= 10^4 when within 1e-6, else kept as exact dyadic doubles.
/// Throws "degenerate idempotent mass" when some f(q_i^u q_j^v) vanishes.
TargetBuild build_target(const GraphParameter& f_normalized,
                         const DegreeSite& site, const AlgebraBudget& budget,
                         std::uint64_t seed);

/// Relative errors |f(G) - hom(G,h)| / max(1, |f(G)|) per test graph.
std::vector<double> verify(const GraphParameter& f, const WeightedTarget& h,
                           const std::vector<MultiGraph>& test_graphs);

enum class ReconstructStatus {
  success,
  not_psd,            // reflection positivity failed; certificate attached
  not_multiplicative, // M(f,0) has rank > 1 or f(K_0) != 1
  unsaturated,        // degree never stabilized within the level budget
  degenerate,         // idempotent mass vanished during target extraction
};

struct ReconstructOptions {
  AlgebraBudget algebra;
  std::uint32_t max_levels = 3;       // deepest S tried is {1..max_levels}
  std::uint32_t psd_gate_k = 2;       // slices checked for PSD before work
  std::uint64_t seed = 0;
  double tol = 1e-6;
  std::uint32_t verify_graphs = 50;
  std::uint32_t verify_max_nodes = 6;
  std::uint32_t verify_max_edges = 9;
};

struct ReconstructionReport {
  ReconstructStatus status = ReconstructStatus::success;
  std::optional<WeightedTarget> target;
  LabelSet labels_used;
  std::uint32_t max_degree = 0;   // equals target.d on success
  Rational normalization = 1;     // the f(K_1) scale factor
  std::vector<double> residuals;
  double max_residual = 0.0;
  bool degree_stabilized = true;
  bool degree_bound_ok = true;  // D vs observed ceil(r_k^(1/k)) over k <= 2
  bool snapped = true;
  std::string message;
  // For status == not_psd: the offending slice and its certificate.
  std::uint32_t psd_fail_k = 0;
  std::optional<PsdVerdict> psd_certificate;
  std::vector<CanonicalCode> psd_fail_rows;

  bool success() const { return status == ReconstructStatus::success; }
  std::string to_json() const;
};

/// Full pipeline: multiplicativity gate, reflection-positivity gate,
/// normalization, degree-site search, target construction, verification.
ReconstructionReport reconstruct(const GraphParameter& f,
                                 const ReconstructOptions& options = {});

}  // namespace graphhom

#endif
