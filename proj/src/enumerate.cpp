#include "graphhom/enumerate.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace graphhom {

std::vector<LabeledGraph> enumerate_labeled(const LabelSet& label_names,
                                            std::uint32_t max_nodes,
                                            std::uint32_t max_edges,
                                            bool multi) {
  const std::uint32_t k = label_names.size();
  if (max_nodes < k)
    throw std::invalid_argument("max_nodes below the number of labels");

  std::map<CanonicalCode, LabeledGraph> classes;

  std::map<Label, std::uint32_t> base_labels;
  {
    std::uint32_t idx = 0;
    for (Label l : label_names) base_labels[l] = idx++;
  }

  for (std::uint32_t n = k; n <= max_nodes; ++n) {
    if (n == 0) {
      LabeledGraph g(MultiGraph(0, std::vector<Edge>{}), {});
      classes.emplace(canonical(g), g);
      continue;
    }
    std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
    for (std::uint32_t i = 0; i < n; ++i)
      for (std::uint32_t j = i + 1; j < n; ++j) pairs.emplace_back(i, j);

    // DFS over per-pair multiplicities with a total edge budget.
    std::vector<Edge> chosen;
    auto rec = [&](auto&& self, std::size_t pair_idx,
                   std::uint32_t remaining) -> void {
      if (pair_idx == pairs.size()) {
        LabeledGraph g(MultiGraph(n, chosen), base_labels);
        auto code = canonical(g);
        classes.emplace(std::move(code), std::move(g));
        return;
      }
      self(self, pair_idx + 1, remaining);  // multiplicity 0
      const std::uint32_t cap = multi ? remaining : std::min(remaining, 1u);
      const auto [a, b] = pairs[pair_idx];
      for (std::uint32_t m = 1; m <= cap; ++m) {
        chosen.push_back(Edge{a, b, m});
        self(self, pair_idx + 1, remaining - m);
        chosen.pop_back();
      }
    };
    rec(rec, 0, max_edges);
  }

  std::vector<LabeledGraph> out;
  out.reserve(classes.size());
  for (auto& [code, g] : classes) out.push_back(std::move(g));
  return out;
}

}  // namespace graphhom
