#include "graphhom/random_gen.hpp"

#include <stdexcept>

namespace graphhom {

namespace {

std::uint64_t below(std::mt19937_64& rng, std::uint64_t bound) {
  // Simple modulo draw; bias is irrelevant for test-data generation.
  return bound == 0 ? 0 : rng() % bound;
}

}  // namespace

MultiGraph random_multigraph(std::mt19937_64& rng, std::uint32_t max_nodes,
                             std::uint32_t max_edges, bool multi) {
  const std::uint32_t n = static_cast<std::uint32_t>(below(rng, max_nodes + 1));
  if (n < 2) return MultiGraph(n, std::vector<Edge>{});
  const std::uint32_t m = static_cast<std::uint32_t>(below(rng, max_edges + 1));
  std::vector<Edge> edges;
  std::set<std::pair<std::uint32_t, std::uint32_t>> seen;
  for (std::uint32_t i = 0; i < m; ++i) {
    const auto u = static_cast<std::uint32_t>(below(rng, n));
    auto v = static_cast<std::uint32_t>(below(rng, n - 1));
    if (v >= u) ++v;
    auto key = std::minmax(u, v);
    if (!multi && !seen.insert({key.first, key.second}).second) continue;
    edges.push_back(Edge{u, v, 1});
  }
  return MultiGraph(n, edges);
}

WeightedTarget random_target(std::mt19937_64& rng, std::uint32_t d,
                             int num_range, int den_range) {
  WeightedTarget h;
  h.d = d;
  for (std::uint32_t i = 0; i < d; ++i) {
    const long num = 1 + long(below(rng, num_range));
    const long den = 1 + long(below(rng, den_range));
    h.alpha.push_back(Rational(num, den));
  }
  h.beta.assign(d, std::vector<Rational>(d, Rational(0)));
  for (std::uint32_t i = 0; i < d; ++i) {
    for (std::uint32_t j = i; j < d; ++j) {
      const long num = long(below(rng, 2 * num_range + 1)) - num_range;
      const long den = 1 + long(below(rng, den_range));
      h.beta[i][j] = h.beta[j][i] = Rational(num, den);
    }
  }
  h.validate();
  return h;
}

WeightedTarget random_twin_free_target(std::mt19937_64& rng, std::uint32_t d,
                                       int num_range, int den_range) {
  for (int attempt = 0; attempt < 1000; ++attempt) {
    WeightedTarget h = random_target(rng, d, num_range, den_range);
    // Strictly positive weights keep the reconstruction generic.
    bool positive = true;
    for (const auto& row : h.beta)
      for (const auto& b : row)
        if (b <= 0) positive = false;
    if (!positive || !h.twin_free()) continue;
    // Avoid an accidental node-swapping symmetry.
    bool symmetric_pair = false;
    for (std::uint32_t i = 0; i < d && !symmetric_pair; ++i)
      for (std::uint32_t j = i + 1; j < d; ++j)
        if (h.alpha[i] == h.alpha[j] && h.beta[i][i] == h.beta[j][j]) {
          symmetric_pair = true;
          break;
        }
    if (symmetric_pair) continue;
    return h;
  }
  throw std::runtime_error("failed to sample a twin-free target");
}

}  // namespace graphhom
