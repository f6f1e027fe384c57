#include "graphhom/algebra.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "graphhom/enumerate.hpp"

namespace graphhom {

namespace {

// Numerical rank by symmetric elimination with diagonal pivoting; pivots
// below tol * (largest initial diagonal) do not count.
std::size_t numeric_psd_rank(Eigen::MatrixXd s, double rel_tol) {
  const std::size_t n = s.rows();
  double scale = 0.0;
  for (std::size_t i = 0; i < n; ++i) scale = std::max(scale, s(i, i));
  if (scale <= 0.0) return 0;
  const double threshold = rel_tol * scale;
  std::vector<bool> done(n, false);
  std::size_t rank = 0;
  while (true) {
    std::size_t pivot = n;
    for (std::size_t i = 0; i < n; ++i) {
      if (done[i]) continue;
      if (s(i, i) > threshold && (pivot == n || s(i, i) > s(pivot, pivot)))
        pivot = i;
    }
    if (pivot == n) break;
    ++rank;
    done[pivot] = true;
    const double pv = s(pivot, pivot);
    for (std::size_t i = 0; i < n; ++i) {
      if (done[i]) continue;
      const double c = s(i, pivot) / pv;
      if (c == 0.0) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (done[j]) continue;
        s(i, j) -= c * s(pivot, j);
      }
    }
  }
  return rank;
}

double exact_glue_f(const GraphParameter& f, const LabeledGraph& a,
                    const LabeledGraph& b) {
  return rational_to_double(f(glue(a, b)));
}

// Deterministic uniform double in [-1, 1), identical across platforms.
double uniform_pm1(std::mt19937_64& rng) {
  return double(rng() >> 11) * (2.0 / 9007199254740992.0) - 1.0;
}

}  // namespace

Label fresh_label(const LabelSet& used) {
  Label l = 1;
  while (used.count(l)) ++l;
  return l;
}

AlgebraRep::AlgebraRep(GraphParameter f, LabelSet labels, AlgebraBudget budget)
    : f_(std::move(f)), labels_(std::move(labels)), budget_(budget) {
  const std::uint32_t k = labels_.size();
  auto candidates =
      enumerate_labeled(labels_, k + budget_.extra_nodes,
                        k + budget_.extra_edges, budget_.multi);

  // Greedy Gram-rank growth over candidates in canonical order (node count
  // ascending); one full node-count level without growth = saturation.
  // Kept elements are rescaled to unit Gram norm, which keeps the Gram
  // matrix conditioned independently of how large the oracle values get.
  std::uint32_t level = k;
  bool grew_this_level = false;
  bool any_level_closed = false;
  saturated_ = false;
  for (const auto& g : candidates) {
    const std::uint32_t n = g.graph().node_count();
    if (n != level) {
      if (!grew_this_level && !basis_.empty()) {
        saturated_ = true;
        break;
      }
      level = n;
      grew_this_level = false;
      any_level_closed = true;
    }
    const Rational self = f_(glue(g, g).graph());
    if (self == 0) continue;  // exact kernel direction
    const double s = 1.0 / std::sqrt(rational_to_double(self));
    if (!std::isfinite(s)) continue;

    const std::size_t r = basis_.size();
    Eigen::MatrixXd ext(r + 1, r + 1);
    ext.topLeftCorner(r, r) = gram_;
    for (std::size_t i = 0; i < r; ++i) {
      const double cross = scale_[i] * s * exact_glue_f(f_, basis_[i], g);
      ext(i, r) = cross;
      ext(r, i) = cross;
    }
    ext(r, r) = 1.0;
    if (numeric_psd_rank(ext, budget_.rank_pivot_tol) == r + 1) {
      basis_.push_back(g);
      scale_.push_back(s);
      gram_ = std::move(ext);
      grew_this_level = true;
    }
  }
  if (!saturated_ && !grew_this_level && any_level_closed && !basis_.empty()) {
    // Last level closed without growth at the budget boundary.
    saturated_ = true;
  }
  if (basis_.empty())
    throw std::runtime_error("algebra basis is empty; oracle vanished");

  basis_f_.reserve(basis_.size());
  for (std::size_t i = 0; i < basis_.size(); ++i)
    basis_f_.push_back(scale_[i] * rational_to_double(f_(basis_[i])));

  // Spectral data of the Gram matrix; the basis was chosen rank-increasing
  // so the positive part normally has full dimension.
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(gram_);
  const double lam_max = es.eigenvalues().cwiseAbs().maxCoeff();
  if (es.eigenvalues().minCoeff() < -1e-7 * std::max(1.0, lam_max))
    throw std::runtime_error(
        "Gram matrix is not positive semidefinite; the parameter fails "
        "reflection positivity on this slice");
  std::vector<int> keep;
  for (int i = 0; i < es.eigenvalues().size(); ++i) {
    if (es.eigenvalues()(i) > budget_.rank_pivot_tol * std::max(1.0, lam_max))
      keep.push_back(i);
  }
  u_pos_.resize(gram_.rows(), keep.size());
  lam_pos_.resize(keep.size());
  for (std::size_t j = 0; j < keep.size(); ++j) {
    u_pos_.col(j) = es.eigenvectors().col(keep[j]);
    lam_pos_(j) = es.eigenvalues()(keep[j]);
  }

  // Structure tensor f(b_i b_j b_k) for the scaled elements.
  const std::size_t r = basis_.size();
  triple_.assign(r * r * r, 0.0);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = i; j < r; ++j) {
      const LabeledGraph bij = glue(basis_[i], basis_[j]);
      for (std::size_t k3 = j; k3 < r; ++k3) {
        const double v = scale_[i] * scale_[j] * scale_[k3] *
                         exact_glue_f(f_, bij, basis_[k3]);
        const std::size_t idx[3] = {i, j, k3};
        std::size_t p[3] = {0, 1, 2};
        std::sort(p, p + 3);
        do {
          triple_[(idx[p[0]] * r + idx[p[1]]) * r + idx[p[2]]] = v;
        } while (std::next_permutation(p, p + 3));
      }
    }
  }

  unit_qg_ = QuantumGraph(unit_graph(labels_));
}

Eigen::VectorXd AlgebraRep::coords(const QuantumGraph& x) const {
  const std::size_t r = basis_.size();
  Eigen::VectorXd rhs(r);
  for (std::size_t i = 0; i < r; ++i)
    rhs(i) = scale_[i] * inner(f_, QuantumGraph(basis_[i]), x);
  // Pseudo-inverse via the positive spectral part.
  return u_pos_ * lam_pos_.cwiseInverse().asDiagonal() *
         (u_pos_.transpose() * rhs);
}

QuantumGraph AlgebraRep::to_quantum(const Eigen::VectorXd& c) const {
  QuantumGraph out = QuantumGraph::zero(labels_);
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    if (c(i) != 0.0) out += QuantumGraph(basis_[i], c(i) * scale_[i]);
  }
  return out;
}

Eigen::VectorXd AlgebraRep::multiply(const Eigen::VectorXd& x,
                                     const Eigen::VectorXd& y) const {
  const std::size_t r = basis_.size();
  Eigen::VectorXd rhs(r);
  for (std::size_t k = 0; k < r; ++k) {
    double acc = 0.0;
    for (std::size_t i = 0; i < r; ++i) {
      if (x(i) == 0.0) continue;
      for (std::size_t j = 0; j < r; ++j)
        acc += x(i) * y(j) * triple_at(k, i, j);
    }
    rhs(k) = acc;
  }
  return u_pos_ * lam_pos_.cwiseInverse().asDiagonal() *
         (u_pos_.transpose() * rhs);
}

double AlgebraRep::f_of(const Eigen::VectorXd& c) const {
  double acc = 0.0;
  for (std::size_t i = 0; i < basis_.size(); ++i) acc += c(i) * basis_f_[i];
  return acc;
}

Eigen::VectorXd AlgebraRep::unit_coords() const {
  return coords(unit_qg_);
}

AlgebraRep build_algebra(const GraphParameter& f, const LabelSet& labels,
                         const AlgebraBudget& budget) {
  return AlgebraRep(f, labels, budget);
}

IdempotentBasis idempotent_basis(const AlgebraRep& a, std::uint64_t seed) {
  const std::size_t r = a.dim();
  const Eigen::MatrixXd& gram = a.gram();

  // Orthonormal frame of the Gram-positive subspace: columns of W are
  // basis coordinates of orthonormal elements, xi = W^T G c inverts it.
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(gram);
  const double lam_max = es.eigenvalues().cwiseAbs().maxCoeff();
  std::vector<int> keep;
  for (int i = 0; i < es.eigenvalues().size(); ++i)
    if (es.eigenvalues()(i) >
        a.budget().rank_pivot_tol * std::max(1.0, lam_max))
      keep.push_back(i);
  const std::size_t rp = keep.size();
  Eigen::MatrixXd w(r, rp);
  for (std::size_t j = 0; j < rp; ++j)
    w.col(j) = es.eigenvectors().col(keep[j]) /
               std::sqrt(es.eigenvalues()(keep[j]));
  const Eigen::MatrixXd wt_g = w.transpose() * gram;

  std::mt19937_64 rng(seed);
  std::string last_error = "degenerate spectrum";
  for (int attempt = 0; attempt < 10; ++attempt) {
    Eigen::VectorXd xi(rp);
    for (std::size_t i = 0; i < rp; ++i) xi(i) = uniform_pm1(rng);
    const Eigen::VectorXd z = w * xi;

    // Multiplication operator of z in the orthonormal frame; symmetric up
    // to round-off because the algebra is commutative and self-adjoint.
    Eigen::MatrixXd op(rp, rp);
    for (std::size_t b = 0; b < rp; ++b)
      op.col(b) = wt_g * a.multiply(z, w.col(b));
    op = ((op + op.transpose()) / 2.0).eval();

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> oes(op);
    const Eigen::VectorXd& mu = oes.eigenvalues();
    double min_gap = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i + 1 < rp; ++i)
      min_gap = std::min(min_gap, mu(i + 1) - mu(i));
    const double gap_floor = 1e-7 * std::max(1.0, mu.cwiseAbs().maxCoeff());
    if (rp > 1 && min_gap < gap_floor) {
      last_error = "degenerate spectrum: eigenvalue gap " +
                   std::to_string(min_gap) + " below " +
                   std::to_string(gap_floor);
      continue;
    }

    IdempotentBasis out;
    bool ok = true;
    for (std::size_t idx = 0; idx < rp; ++idx) {
      const Eigen::VectorXd c = w * oes.eigenvectors().col(idx);
      const Eigen::VectorXd sq = a.multiply(c, c);
      const double denom = c.dot(gram * c);
      const double lambda = c.dot(gram * sq) / denom;
      if (std::fabs(lambda) < 1e-9) {
        ok = false;
        last_error = "degenerate spectrum: eigenvector squares to zero";
        break;
      }
      Eigen::VectorXd p = c / lambda;
      // Newton polish for x^2 = x; contracts eigen-solver noise
      // quadratically onto the nearby exact idempotent.
      for (int polish = 0; polish < 2; ++polish) {
        const Eigen::VectorXd p2 = a.multiply(p, p);
        const Eigen::VectorXd p3 = a.multiply(p2, p);
        p = 3.0 * p2 - 2.0 * p3;
      }
      const Eigen::VectorXd err = a.multiply(p, p) - p;
      const double residual = std::sqrt(std::max(0.0, err.dot(gram * err)));
      if (residual > a.budget().identity_tol) {
        ok = false;
        last_error = "degenerate spectrum: idempotent residual " +
                     std::to_string(residual);
        break;
      }
      out.coords.push_back(p);
    }
    if (!ok) continue;

    for (const auto& c : out.coords) {
      out.elements.push_back(a.to_quantum(c));
      out.f_values.push_back(a.f_of(c));
    }
    return out;
  }
  throw std::runtime_error(last_error);
}

bool resolves(const AlgebraRep& a_t, const QuantumGraph& q,
              const QuantumGraph& p) {
  const QuantumGraph p_emb = qg_embed(p, a_t.labels());
  const QuantumGraph pq = qg_product(p_emb, q);
  const double dist = qg_norm(a_t.oracle(), pq - q);
  const double qn = qg_norm(a_t.oracle(), q);
  if (dist < a_t.budget().identity_tol * std::max(1.0, qn)) return true;
  // For idempotents the quotient leaves no middle ground: pq equals q or
  // pq equals 0, so the distance is either round-off or the full norm of
  // q. Split at half norm to stay stable under idempotent noise.
  return qn > a_t.budget().identity_tol && dist <= 0.5 * qn;
}

DegreeResult degree(const GraphParameter& f, const QuantumGraph& p,
                    Label fresh, const AlgebraBudget& budget,
                    std::uint64_t seed) {
  if (p.labels().count(fresh))
    throw std::invalid_argument("fresh label already used by p");
  LabelSet ext = p.labels();
  ext.insert(fresh);
  AlgebraRep a = build_algebra(f, ext, budget);
  IdempotentBasis idem = idempotent_basis(a, seed);
  DegreeResult result;
  result.saturated = a.saturated();
  for (const auto& q : idem.elements) {
    if (resolves(a, q, p)) ++result.degree;
  }
  return result;
}

std::string algebra_dump(const AlgebraRep& a, const IdempotentBasis* idem) {
  nlohmann::json j;
  j["labels"] = std::vector<Label>(a.labels().begin(), a.labels().end());
  j["dim"] = a.dim();
  j["saturated"] = a.saturated();
  nlohmann::json codes = nlohmann::json::array();
  for (const auto& b : a.basis()) codes.push_back(canonical(b).hex());
  j["basis_codes"] = std::move(codes);
  nlohmann::json gram = nlohmann::json::array();
  for (Eigen::Index i = 0; i < a.gram().rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (Eigen::Index k = 0; k < a.gram().cols(); ++k)
      row.push_back(a.gram()(i, k));
    gram.push_back(std::move(row));
  }
  j["gram"] = std::move(gram);
  if (idem) {
    nlohmann::json ps = nlohmann::json::array();
    for (std::size_t i = 0; i < idem->size(); ++i) {
      nlohmann::json entry;
      entry["f"] = idem->f_values[i];
      nlohmann::json coords = nlohmann::json::array();
      for (Eigen::Index t = 0; t < idem->coords[i].size(); ++t)
        coords.push_back(idem->coords[i](t));
      entry["coords"] = std::move(coords);
      ps.push_back(std::move(entry));
    }
    j["idempotents"] = std::move(ps);
  }
  return j.dump(2);
}

}  // namespace graphhom
