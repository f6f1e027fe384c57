#ifndef GRAPHHOM_PARAMETERS_HPP
#define GRAPHHOM_PARAMETERS_HPP

#include <functional>
#include <string>
#include <vector>

#include "graphhom/hom.hpp"
#include "graphhom/labeled_graph.hpp"
#include "graphhom/rational.hpp"
#include "graphhom/weighted_target.hpp"

namespace graphhom {

/// Isomorphism-invariant function from multigraphs to rationals.
/// `multiplicity_sensitive` tells the connection-matrix tooling whether
/// parallel-edge rows are worth enumerating for this parameter.
struct GraphParameter {
  std::string name;
  std::function<Rational(const MultiGraph&)> eval;
  bool multiplicative = false;
  bool multiplicity_sensitive = false;

  Rational operator()(const MultiGraph& g) const { return eval(g); }
  Rational operator()(const LabeledGraph& g) const { return eval(g.graph()); }
};

/// Finite abelian group in invariant-factor form Z_{m1} x ... x Z_{mt};
/// elements are tuples encoded as mixed-radix indices 0..order-1.
struct FiniteAbelianGroup {
  std::vector<std::uint32_t> moduli;  // each >= 2

  std::uint64_t order() const;
  std::vector<std::uint32_t> element(std::uint64_t index) const;
  std::uint64_t index_of(const std::vector<std::uint32_t>& tuple) const;
  std::uint64_t add(std::uint64_t x, std::uint64_t y) const;
  std::uint64_t neg(std::uint64_t x) const;
};

/// Flow alphabet: a subset S of the group closed under inversion.
struct FlowSpec {
  FiniteAbelianGroup group;
  std::vector<std::uint64_t> s_elements;  // sorted element indices

  /// Throws std::invalid_argument unless S is inversion-closed.
  void validate() const;
};

/// Number of perfect matchings, parallel edges counted separately.
Rational perfect_matchings(const MultiGraph& g);

/// Matchings covering every unlabeled node and exactly the labels in X
/// among the labeled ones. Throws when X is not a subset of the labels.
Rational partial_matchings(const LabeledGraph& g, const LabelSet& X);

/// Number of S-flows: edge assignments from S with zero net boundary at
/// every node, for an arbitrary fixed orientation (the count is
/// orientation-independent). Optional `flip` reorients edge instances.
Rational count_flows(const MultiGraph& g, const FlowSpec& spec,
                     const std::vector<bool>* flip = nullptr);

/// Character-sum target representing count_flows as a hom function:
/// d = |group|, alpha = 1/|group|, beta[x][y] = sum_{s in S} chi_x^{-1}(s)
/// chi_y(s). Exact for all-Z_2 groups; otherwise character sums are
/// evaluated in doubles and snapped to rationals with denominator <= |group|
/// at 1e-9 (a genuinely irrational sum throws).
WeightedTarget flow_target(const FlowSpec& spec);

/// Chromatic polynomial evaluated at x, by deletion-contraction on the
/// simple support.
Rational chromatic(const MultiGraph& g, const Rational& x);

/// 2^{-|E(G')|} where G' is the simple support of g.
Rational simple_support_param(const MultiGraph& g);

/// 1 if every degree is even (multiplicities counted), else 0.
Rational eulerian_indicator(const MultiGraph& g);

/// Number of partitions of a k-set into at most q parts. bell_bounded(k,k)
/// is the k-th Bell number.
Integer bell_bounded(std::uint32_t k, std::uint32_t q);

// Catalog constructors. Registry names: matchings, eulerian,
// simple-support, chromatic@<x>, hom@<targetfile>, flows@<specfile>.
GraphParameter make_matchings_param();
GraphParameter make_eulerian_param();
GraphParameter make_simple_support_param();
GraphParameter make_chromatic_param(const Rational& x);
GraphParameter make_hom_param(const WeightedTarget& h, std::string name = "");
GraphParameter make_flows_param(const FlowSpec& spec);

/// Resolves a registry name. `hom@:loop-half` and `hom@:loop-two` are
/// built-in single-node loop targets (weights 1/2 and 2); other hom@ /
/// flows@ arguments are file paths.
GraphParameter parameter_by_name(const std::string& name);

/// FlowSpec text format:
///   group m1,m2,...
///   S t1 t2 ...        (tuples comma-joined, e.g. "S 1 2" or "S 0,1 1,0")
FlowSpec parse_flow_spec(const std::string& text);
FlowSpec read_flow_spec_file(const std::string& path);
std::string flow_spec_to_string(const FlowSpec& spec);

}  // namespace graphhom

#endif
