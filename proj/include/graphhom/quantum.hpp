#ifndef GRAPHHOM_QUANTUM_HPP
#define GRAPHHOM_QUANTUM_HPP

#include <map>

#include "graphhom/canonical.hpp"
#include "graphhom/parameters.hpp"

namespace graphhom {

/// Formal real linear combination of S-labeled graphs, terms keyed by
/// canonical code. Every term carries label set exactly `labels()`;
/// coefficients below 1e-12 of the largest are dropped on normalization.
class QuantumGraph {
 public:
  QuantumGraph() = default;
  explicit QuantumGraph(const LabeledGraph& g, double coeff = 1.0);

  static QuantumGraph zero(const LabelSet& labels);

  const LabelSet& labels() const { return labels_; }
  const std::map<CanonicalCode, std::pair<LabeledGraph, double>>& terms()
      const {
    return terms_;
  }
  std::size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  QuantumGraph& operator+=(const QuantumGraph& other);
  QuantumGraph& operator-=(const QuantumGraph& other);
  QuantumGraph& operator*=(double scale);
  friend QuantumGraph operator+(QuantumGraph a, const QuantumGraph& b) {
    return a += b;
  }
  friend QuantumGraph operator-(QuantumGraph a, const QuantumGraph& b) {
    return a -= b;
  }
  friend QuantumGraph operator*(double s, QuantumGraph a) { return a *= s; }

 private:
  void add_term(const LabeledGraph& g, double coeff);
  void prune();

  LabelSet labels_;
  std::map<CanonicalCode, std::pair<LabeledGraph, double>> terms_;
};

/// Gluing product, extended bilinearly over the terms.
QuantumGraph qg_product(const QuantumGraph& a, const QuantumGraph& b);

/// Labels outside `keep` are deleted from every term (the combinatorial
/// form of the orthogonal projection onto the S-labeled subalgebra).
QuantumGraph qg_project(const QuantumGraph& x, const LabelSet& keep);

/// Injective relabeling applied to every term.
QuantumGraph qg_relabel(const QuantumGraph& x,
                        const std::map<Label, Label>& rename);

/// Every term gains isolated labeled nodes for the labels in `target`
/// missing from it (the inclusion into a larger label set's algebra).
QuantumGraph qg_embed(const QuantumGraph& x, const LabelSet& target);

/// f extended linearly: sum of coeff * f(term graph).
double qg_eval(const GraphParameter& f, const QuantumGraph& x);

/// Bilinear inner product <x,y> = f(xy), exact f per glued term pair.
double inner(const GraphParameter& f, const QuantumGraph& x,
             const QuantumGraph& y);

/// sqrt(max(0, f(xx))), the Gram seminorm.
double qg_norm(const GraphParameter& f, const QuantumGraph& x);

}  // namespace graphhom

#endif
