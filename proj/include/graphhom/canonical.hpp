#ifndef GRAPHHOM_CANONICAL_HPP
#define GRAPHHOM_CANONICAL_HPP

#include <compare>
#include <string>

#include "graphhom/labeled_graph.hpp"

namespace graphhom {

/// Byte string identifying a labeled graph up to label-preserving
/// isomorphism: equal codes iff isomorphic.
struct CanonicalCode {
  std::string bytes;

  auto operator<=>(const CanonicalCode&) const = default;

  /// Hex rendering for TSV headers and debug dumps.
  std::string hex() const;
};

/// Canonical form by minimizing the adjacency encoding over node orderings.
/// Labeled nodes occupy fixed slots (sorted by label name); unlabeled nodes
/// are permuted within cells of equal structural invariant. Brute force with
/// refinement, sized for graphs up to ~10 nodes.
CanonicalCode canonical(const LabeledGraph& g);

inline bool isomorphic(const LabeledGraph& a, const LabeledGraph& b) {
  return canonical(a) == canonical(b);
}

}  // namespace graphhom

#endif
