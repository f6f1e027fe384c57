#ifndef GRAPHHOM_ALGEBRA_HPP
#define GRAPHHOM_ALGEBRA_HPP

#include <Eigen/Dense>

#include "graphhom/quantum.hpp"

namespace graphhom {

struct AlgebraBudget {
  std::uint32_t extra_nodes = 3;   // generators up to |S| + extra_nodes nodes
  std::uint32_t extra_edges = 4;   // edge budget |S| + extra_edges
  bool multi = true;
  double rank_pivot_tol = 1e-9;    // relative pivot threshold for numerical rank
  double identity_tol = 1e-6;      // idempotent / resolution residual bound
};

/// Concrete finite-dimensional model of the S-labeled quotient algebra:
/// a greedily selected Gram-independent generator basis, the Gram matrix
/// f(b_i b_j), its spectral data, and the structure tensor f(b_i b_j b_k)
/// used to multiply modulo the Gram kernel. Requires f normalized
/// (f(K_1) = 1) and reflection positive on the touched slices.
class AlgebraRep {
 public:
  AlgebraRep(GraphParameter f, LabelSet labels, AlgebraBudget budget);

  const LabelSet& labels() const { return labels_; }
  const GraphParameter& oracle() const { return f_; }
  const AlgebraBudget& budget() const { return budget_; }
  std::size_t dim() const { return basis_.size(); }
  bool saturated() const { return saturated_; }
  const std::vector<LabeledGraph>& basis() const { return basis_; }
  const Eigen::MatrixXd& gram() const { return gram_; }

  /// Least-squares coordinates against the Gram matrix, kernel components
  /// discarded. Exact for elements of span(basis) + kernel.
  Eigen::VectorXd coords(const QuantumGraph& x) const;

  QuantumGraph to_quantum(const Eigen::VectorXd& c) const;

  /// Coordinates of the glued product, modulo the Gram kernel.
  Eigen::VectorXd multiply(const Eigen::VectorXd& x,
                           const Eigen::VectorXd& y) const;

  /// f extended linearly, via coordinates.
  double f_of(const Eigen::VectorXd& c) const;

  Eigen::VectorXd unit_coords() const;
  const QuantumGraph& unit() const { return unit_qg_; }

 private:
  friend struct IdempotentBasis;

  GraphParameter f_;
  LabelSet labels_;
  AlgebraBudget budget_;
  std::vector<LabeledGraph> basis_;
  std::vector<double> scale_;    // basis elements are scale_[i] * graph,
                                 // normalized to unit Gram norm
  std::vector<double> basis_f_;  // f of the scaled element
  Eigen::MatrixXd gram_;
  Eigen::MatrixXd u_pos_;        // positive-eigenvalue eigenvectors of gram
  Eigen::VectorXd lam_pos_;
  std::vector<double> triple_;   // f(b_i b_j b_k), dense r^3
  bool saturated_ = false;
  QuantumGraph unit_qg_;

  double triple_at(std::size_t i, std::size_t j, std::size_t k) const {
    const std::size_t r = basis_.size();
    return triple_[(i * r + j) * r + k];
  }
};

AlgebraRep build_algebra(const GraphParameter& f, const LabelSet& labels,
                         const AlgebraBudget& budget = {});

/// The uniquely determined orthogonal idempotent basis p_1..p_r:
/// p_i^2 = p_i, p_i p_j = 0, sum p_i = unit, f(p_i) > 0.
struct IdempotentBasis {
  std::vector<QuantumGraph> elements;
  std::vector<Eigen::VectorXd> coords;
  std::vector<double> f_values;

  std::size_t size() const { return elements.size(); }
};

/// Eigendecomposition of the multiplication operator of a seeded random
/// element, restricted to the Gram-positive subspace; eigenprojections are
/// normalized into idempotents. Retries on degenerate spectra up to 10
/// times, then throws std::runtime_error("degenerate spectrum ...").
IdempotentBasis idempotent_basis(const AlgebraRep& a, std::uint64_t seed);

/// q resolves p when pq = q. p lives over a sub-label-set and is embedded
/// by adding isolated labeled nodes; the test is
/// ||pq - q|| < identity_tol * max(1, ||q||) in the Gram seminorm.
bool resolves(const AlgebraRep& a_t, const QuantumGraph& q,
              const QuantumGraph& p);

struct DegreeResult {
  std::uint32_t degree = 0;
  bool saturated = true;  // the extension algebra reached saturation
};

/// Number of basic idempotents over labels(p) + {fresh} resolving p.
DegreeResult degree(const GraphParameter& f, const QuantumGraph& p,
                    Label fresh, const AlgebraBudget& budget,
                    std::uint64_t seed);

/// First label not used by S.
Label fresh_label(const LabelSet& used);

/// Debug dump (JSON): basis codes, Gram matrix, idempotent coordinates.
std::string algebra_dump(const AlgebraRep& a, const IdempotentBasis* idem);

}  // namespace graphhom

#endif
