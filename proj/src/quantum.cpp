#include "graphhom/quantum.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace graphhom {

QuantumGraph::QuantumGraph(const LabeledGraph& g, double coeff)
    : labels_(g.label_set()) {
  add_term(g, coeff);
  prune();
}

QuantumGraph QuantumGraph::zero(const LabelSet& labels) {
  QuantumGraph q;
  q.labels_ = labels;
  return q;
}

void QuantumGraph::add_term(const LabeledGraph& g, double coeff) {
  CanonicalCode code = canonical(g);
  auto it = terms_.find(code);
  if (it == terms_.end()) {
    terms_.emplace(std::move(code), std::make_pair(g, coeff));
  } else {
    it->second.second += coeff;
  }
}

void QuantumGraph::prune() {
  double largest = 0.0;
  for (const auto& [code, term] : terms_)
    largest = std::max(largest, std::fabs(term.second));
  const double cutoff = largest * 1e-12;
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (std::fabs(it->second.second) <= cutoff)
      it = terms_.erase(it);
    else
      ++it;
  }
}

QuantumGraph& QuantumGraph::operator+=(const QuantumGraph& other) {
  if (terms_.empty()) labels_ = other.labels_;
  if (!other.terms_.empty() && labels_ != other.labels_)
    throw std::invalid_argument("quantum graphs carry different label sets");
  for (const auto& [code, term] : other.terms_)
    add_term(term.first, term.second);
  prune();
  return *this;
}

QuantumGraph& QuantumGraph::operator-=(const QuantumGraph& other) {
  if (terms_.empty()) labels_ = other.labels_;
  if (!other.terms_.empty() && labels_ != other.labels_)
    throw std::invalid_argument("quantum graphs carry different label sets");
  for (const auto& [code, term] : other.terms_)
    add_term(term.first, -term.second);
  prune();
  return *this;
}

QuantumGraph& QuantumGraph::operator*=(double scale) {
  for (auto& [code, term] : terms_) term.second *= scale;
  prune();
  return *this;
}

QuantumGraph qg_product(const QuantumGraph& a, const QuantumGraph& b) {
  LabelSet joint = a.labels();
  joint.insert(b.labels().begin(), b.labels().end());
  QuantumGraph out = QuantumGraph::zero(joint);
  for (const auto& [ca, ta] : a.terms()) {
    for (const auto& [cb, tb] : b.terms()) {
      out += QuantumGraph(glue(ta.first, tb.first),
                          ta.second * tb.second);
    }
  }
  return out;
}

QuantumGraph qg_project(const QuantumGraph& x, const LabelSet& keep) {
  LabelSet kept;
  for (Label l : x.labels())
    if (keep.count(l)) kept.insert(l);
  QuantumGraph out = QuantumGraph::zero(kept);
  for (const auto& [code, term] : x.terms())
    out += QuantumGraph(restrict_labels(term.first, kept), term.second);
  return out;
}

QuantumGraph qg_relabel(const QuantumGraph& x,
                        const std::map<Label, Label>& rename) {
  LabelSet names;
  for (Label l : x.labels()) {
    auto it = rename.find(l);
    names.insert(it == rename.end() ? l : it->second);
  }
  QuantumGraph out = QuantumGraph::zero(names);
  for (const auto& [code, term] : x.terms())
    out += QuantumGraph(relabel(term.first, rename), term.second);
  return out;
}

QuantumGraph qg_embed(const QuantumGraph& x, const LabelSet& target) {
  LabelSet joint = x.labels();
  joint.insert(target.begin(), target.end());
  QuantumGraph out = QuantumGraph::zero(joint);
  for (const auto& [code, term] : x.terms())
    out += QuantumGraph(add_isolated_labels(term.first, joint), term.second);
  return out;
}

double qg_eval(const GraphParameter& f, const QuantumGraph& x) {
  double total = 0.0;
  for (const auto& [code, term] : x.terms())
    total += term.second * rational_to_double(f(term.first));
  return total;
}

double inner(const GraphParameter& f, const QuantumGraph& x,
             const QuantumGraph& y) {
  double total = 0.0;
  for (const auto& [cx, tx] : x.terms()) {
    for (const auto& [cy, ty] : y.terms()) {
      const Rational v = f(glue(tx.first, ty.first).graph());
      total += tx.second * ty.second * rational_to_double(v);
    }
  }
  return total;
}

double qg_norm(const GraphParameter& f, const QuantumGraph& x) {
  return std::sqrt(std::max(0.0, inner(f, x, x)));
}

}  // namespace graphhom
