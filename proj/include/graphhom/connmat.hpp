#ifndef GRAPHHOM_CONNMAT_HPP
#define GRAPHHOM_CONNMAT_HPP

#include <optional>
#include <vector>

#include "graphhom/canonical.hpp"
#include "graphhom/parameters.hpp"

namespace graphhom {

/// Dense matrix of exact rationals.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& at(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }
  bool is_symmetric() const;

  static RatMatrix identity(std::size_t n);

  friend bool operator==(const RatMatrix&, const RatMatrix&) = default;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rational> data_;
};

/// Finite principal slice of the connection matrix M(f,k): rows are
/// pairwise non-isomorphic k-labeled graphs, entries f(glue(G_i, G_j)).
struct ConnectionSlice {
  std::uint32_t k = 0;
  std::vector<LabeledGraph> rows;
  std::vector<CanonicalCode> row_codes;
  RatMatrix entries;
};

/// Exact PSD verdict. For not_psd the witness x satisfies x^T M x =
/// witness_value < 0 and is re-checkable in exact arithmetic; for psd the
/// pivots are the positive pivots of a symmetric diagonal-pivoted
/// elimination whose final residual block is zero.
struct PsdVerdict {
  bool psd = false;
  std::vector<Rational> pivots;
  std::vector<Rational> witness;
  Rational witness_value;
};

/// Entry at (i,j) of one certified rank-profile level.
struct RankProfileEntry {
  std::uint32_t k = 0;
  std::size_t rank = 0;        // certified lower bound on r_f(k)
  std::size_t rows_used = 0;
  std::uint32_t max_nodes = 0;
  std::uint32_t max_edges = 0;
  bool saturated = false;  // rank unchanged across two consecutive levels
};

struct SliceBudget {
  std::uint32_t max_nodes = 0;
  std::uint32_t max_edges = 0;
  bool multi = false;
  int threads = 1;
  std::size_t row_cap = 2000;  // rows beyond the cap are dropped (slices
                               // stay principal, ranks stay lower bounds)
};

/// Rows from enumerate_labeled({1..k}, ...), entries evaluated through f.
/// Deterministic for any thread count.
ConnectionSlice build_slice(const GraphParameter& f, std::uint32_t k,
                            const SliceBudget& budget);

/// Slice over an explicit row list (rows must carry label set {1..k}).
ConnectionSlice build_slice_rows(const GraphParameter& f, std::uint32_t k,
                                 const std::vector<LabeledGraph>& rows,
                                 int threads = 1);

/// Exact rank by fraction-free (Bareiss) elimination; cost O(rank * n^2).
std::size_t exact_rank(const RatMatrix& m);

/// Exact PSD check by symmetric Gaussian elimination with diagonal
/// pivoting. Throws std::invalid_argument on a non-symmetric input.
PsdVerdict psd_check(const RatMatrix& m);

/// Re-evaluates x^T M x for a not_psd certificate; exact.
Rational witness_quadratic_form(const RatMatrix& m,
                                const std::vector<Rational>& x);

/// Certified lower bounds on r_f(k) for k = 0..k_max. Per k, rows grow
/// cumulatively through levels L = 0..max_level (max_nodes = k+L,
/// max_edges = k+L+1, so the default depth 3 is the k+3 / k+4 budget),
/// keeping earlier rows as a stable prefix; the level loop stops as
/// saturated when a nonempty extension leaves the exact rank unchanged.
/// Rows stop growing at row_cap (reported unsaturated when it binds).
std::vector<RankProfileEntry> rank_profile(const GraphParameter& f,
                                           std::uint32_t k_max,
                                           std::uint32_t max_level = 3,
                                           int threads = 1,
                                           std::size_t row_cap = 600);

}  // namespace graphhom

#endif
