#include <doctest.h>

#include <random>

#include "graphhom/canonical.hpp"
#include "graphhom/enumerate.hpp"
#include "graphhom/hom.hpp"
#include "graphhom/random_gen.hpp"

using namespace graphhom;

namespace {

WeightedTarget eulerian_target() {
  WeightedTarget h;
  h.d = 2;
  h.alpha = {Rational(1, 2), Rational(1, 2)};
  h.beta = {{Rational(1), Rational(-1)}, {Rational(-1), Rational(1)}};
  return h;
}

// Independent oracle: count proper q-colorings by direct enumeration.
long count_proper_colorings(const MultiGraph& g, std::uint32_t q) {
  const std::uint32_t n = g.node_count();
  std::vector<std::uint32_t> c(n, 0);
  long count = 0;
  while (true) {
    bool proper = true;
    for (const auto& e : g.edges())
      if (c[e.a] == c[e.b]) proper = false;
    if (proper) ++count;
    std::uint32_t pos = 0;
    while (pos < n && ++c[pos] == q) c[pos++] = 0;
    if (pos == n) break;
  }
  return n == 0 ? 1 : count;
}

}  // namespace

TEST_CASE("hom on the empty graph is 1") {
  const MultiGraph k0(0, std::vector<Edge>{});
  CHECK(hom(k0, eulerian_target()) == 1);
  CHECK(hom_fast(k0, eulerian_target()) == 1);
  CHECK(hom(k0, complete_target(3)) == 1);
}

TEST_CASE("eulerian target distinguishes C_3 from K_2") {
  CHECK(hom(cycle_graph(3), eulerian_target()) == 1);
  CHECK(hom(complete_graph(2), eulerian_target()) == 0);
  // Parallel edges flip parity back.
  const MultiGraph doubled(2, {{0, 1}, {0, 1}});
  CHECK(hom(doubled, eulerian_target()) == 1);
}

TEST_CASE("hom into K_3 counts proper colorings of the triangle") {
  CHECK(hom(complete_graph(3), complete_target(3)) == 6);
  CHECK(hom(complete_graph(3), complete_target(3)) ==
        count_proper_colorings(complete_graph(3), 3));
}

TEST_CASE("hom_pinned on a single labeled node is alpha") {
  WeightedTarget h = eulerian_target();
  const LabeledGraph k1(MultiGraph(1, std::vector<Edge>{}), {{1, 0}});
  CHECK(hom_pinned(k1, h, {{1, 0}}) == Rational(1, 2));
  CHECK(hom_pinned(k1, h, {{1, 1}}) == Rational(1, 2));
}

TEST_CASE("pinned sums decompose hom") {
  WeightedTarget h = eulerian_target();
  const LabeledGraph k2 = labeled_complete(2);
  Rational total(0);
  for (std::uint32_t i = 0; i < 2; ++i)
    for (std::uint32_t j = 0; j < 2; ++j)
      total += hom_pinned(k2, h, {{1, i}, {2, j}});
  CHECK(total == hom(k2.graph(), h));
}

TEST_CASE("hom_pinned on the eulerian edge") {
  const LabeledGraph k2 = labeled_complete(2);
  CHECK(hom_pinned(k2, eulerian_target(), {{1, 0}, {2, 1}}) ==
        Rational(-1, 4));
}

TEST_CASE("hom_pinned rejects a mismatched assignment") {
  const LabeledGraph k2 = labeled_complete(2);
  CHECK_THROWS_AS(hom_pinned(k2, eulerian_target(), {{1, 0}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(hom_pinned(k2, eulerian_target(), {{1, 0}, {3, 1}}),
                  std::invalid_argument);
}

TEST_CASE("pinning identity for glued graphs") {
  // hom_phi(G1 G2) * prod alpha(phi(i)) = hom_phi(G1) * hom_phi(G2), exact.
  std::mt19937_64 rng(42);
  WeightedTarget h = random_target(rng, 3, 3, 4);
  const auto graphs = enumerate_labeled({1, 2}, 4, 3, true);
  std::mt19937_64 pick(43);
  for (int t = 0; t < 40; ++t) {
    const auto& g1 = graphs[pick() % graphs.size()];
    const auto& g2 = graphs[pick() % graphs.size()];
    for (std::uint32_t i = 0; i < h.d; ++i) {
      for (std::uint32_t j = 0; j < h.d; ++j) {
        const Assignment phi{{1, i}, {2, j}};
        const Rational lhs =
            hom_pinned(glue(g1, g2), h, phi) * h.alpha[i] * h.alpha[j];
        const Rational rhs =
            hom_pinned(g1, h, phi) * hom_pinned(g2, h, phi);
        REQUIRE(lhs == rhs);
      }
    }
  }
}

TEST_CASE("hom_fast equals the Fibonacci count on a long path") {
  WeightedTarget indep;
  indep.d = 2;
  indep.alpha = {Rational(1), Rational(1)};
  indep.beta = {{Rational(1), Rational(1)}, {Rational(1), Rational(0)}};
  // Independent sets of P_n follow i(P_n) = i(P_{n-1}) + i(P_{n-2}),
  // with i(P_1) = 2 and i(P_2) = 3.
  Integer a(1), b(2);
  for (int n = 2; n <= 100; ++n) {
    const Integer next = a + b;
    a = b;
    b = next;
  }
  CHECK(hom_fast(path_graph(100), indep) == Rational(b));
  // Cross-check the recurrence against brute force on small sizes.
  for (std::uint32_t n = 1; n <= 7; ++n) {
    CHECK(hom_fast(path_graph(n), indep) == hom(path_graph(n), indep));
  }
}

TEST_CASE("hom_fast is exactly hom on random instances") {
  std::mt19937_64 rng(2024);
  for (int t = 0; t < 50; ++t) {
    const MultiGraph g = random_multigraph(rng, 7, 10, true);
    const WeightedTarget h = random_target(rng, 1 + rng() % 4, 3, 5);
    REQUIRE(hom_fast(g, h) == hom(g, h));
  }
}

TEST_CASE("hom is multiplicative over disjoint unions") {
  std::mt19937_64 rng(9);
  const WeightedTarget h = random_target(rng, 3, 2, 3);
  for (int t = 0; t < 20; ++t) {
    const MultiGraph g1 = random_multigraph(rng, 4, 5, true);
    const MultiGraph g2 = random_multigraph(rng, 4, 5, true);
    CHECK(hom(g1.disjoint_union(g2), h) == hom(g1, h) * hom(g2, h));
  }
}

TEST_CASE("an isolated node scales hom by the alpha sum") {
  std::mt19937_64 rng(10);
  const WeightedTarget h = random_target(rng, 3, 2, 3);
  Rational alpha_sum(0);
  for (const auto& a : h.alpha) alpha_sum += a;
  for (int t = 0; t < 10; ++t) {
    const MultiGraph g = random_multigraph(rng, 5, 6, true);
    MultiGraph grown(g.node_count() + 1, g.edges());
    CHECK(hom(grown, h) == alpha_sum * hom(g, h));
  }
}

TEST_CASE("hom is isomorphism-invariant") {
  std::mt19937_64 rng(11);
  const WeightedTarget h = random_target(rng, 3, 2, 3);
  const MultiGraph g(4, {{0, 1}, {1, 2}, {2, 3}, {0, 1}});
  // Relabel nodes by a permutation.
  const MultiGraph p(4, {{3, 2}, {2, 1}, {1, 0}, {3, 2}});
  CHECK(canonical(LabeledGraph(g, {})) == canonical(LabeledGraph(p, {})));
  CHECK(hom(g, h) == hom(p, h));
}
