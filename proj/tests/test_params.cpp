#include <doctest.h>

#include <random>

#include "graphhom/enumerate.hpp"
#include "graphhom/parameters.hpp"
#include "graphhom/random_gen.hpp"

using namespace graphhom;

namespace {

// Oracle: count perfect matchings over explicit edge-instance subsets.
long matchings_bruteforce(const MultiGraph& g) {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> inst;
  for (const auto& e : g.edges())
    for (std::uint32_t i = 0; i < e.mult; ++i) inst.emplace_back(e.a, e.b);
  const std::size_t m = inst.size();
  long count = 0;
  for (std::size_t mask = 0; mask < (std::size_t(1) << m); ++mask) {
    std::vector<int> deg(g.node_count(), 0);
    for (std::size_t i = 0; i < m; ++i) {
      if (mask & (std::size_t(1) << i)) {
        ++deg[inst[i].first];
        ++deg[inst[i].second];
      }
    }
    bool perfect = true;
    for (std::uint32_t v = 0; v < g.node_count(); ++v)
      if (deg[v] != 1) perfect = false;
    if (perfect) ++count;
  }
  return count;
}

// Oracle: matchings covering all unlabeled nodes and exactly X.
long partial_matchings_bruteforce(const LabeledGraph& g, const LabelSet& x) {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> inst;
  for (const auto& e : g.graph().edges())
    for (std::uint32_t i = 0; i < e.mult; ++i) inst.emplace_back(e.a, e.b);
  const std::size_t m = inst.size();
  long count = 0;
  for (std::size_t mask = 0; mask < (std::size_t(1) << m); ++mask) {
    std::vector<int> deg(g.graph().node_count(), 0);
    for (std::size_t i = 0; i < m; ++i) {
      if (mask & (std::size_t(1) << i)) {
        ++deg[inst[i].first];
        ++deg[inst[i].second];
      }
    }
    bool ok = true;
    for (std::uint32_t v = 0; v < g.graph().node_count() && ok; ++v) {
      if (deg[v] > 1) ok = false;
    }
    if (!ok) continue;
    for (std::uint32_t v = 0; v < g.graph().node_count() && ok; ++v) {
      bool must = true;  // unlabeled nodes must be covered
      for (const auto& [l, node] : g.labels()) {
        if (node == v) must = x.count(l) != 0;
      }
      if ((deg[v] == 1) != must) ok = false;
    }
    if (ok) ++count;
  }
  return count;
}

// Oracle: flows counted by full enumeration of S-assignments.
long flows_bruteforce(const MultiGraph& g, const FlowSpec& spec) {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> inst;
  for (const auto& e : g.edges())
    for (std::uint32_t i = 0; i < e.mult; ++i) inst.emplace_back(e.a, e.b);
  const std::size_t m = inst.size();
  if (spec.s_elements.empty()) return m == 0 ? 1 : 0;
  std::vector<std::size_t> pick(m, 0);
  long count = 0;
  while (true) {
    std::vector<std::uint64_t> boundary(g.node_count(), 0);
    for (std::size_t i = 0; i < m; ++i) {
      const std::uint64_t s = spec.s_elements[pick[i]];
      boundary[inst[i].second] = spec.group.add(boundary[inst[i].second], s);
      boundary[inst[i].first] =
          spec.group.add(boundary[inst[i].first], spec.group.neg(s));
    }
    bool flow = true;
    for (std::uint32_t v = 0; v < g.node_count(); ++v)
      if (boundary[v] != 0) flow = false;
    if (flow) ++count;
    std::size_t pos = 0;
    while (pos < m && ++pick[pos] == spec.s_elements.size()) pick[pos++] = 0;
    if (pos == m) break;
  }
  return count;
}

// Oracle: partitions of {0..k-1} into at most q blocks, by enumeration of
// restricted growth strings.
long partitions_bruteforce(std::uint32_t k, std::uint32_t q) {
  std::vector<std::uint32_t> rgs(k, 0);
  if (k == 0) return 1;
  long count = 0;
  auto rec = [&](auto&& self, std::uint32_t pos, std::uint32_t used) -> void {
    if (pos == k) {
      if (used <= q) ++count;
      return;
    }
    for (std::uint32_t b = 0; b <= used; ++b) {
      rgs[pos] = b;
      self(self, pos + 1, std::max(used, b + 1));
    }
  };
  rec(rec, 0, 0);
  return count;
}

FlowSpec make_spec(std::vector<std::uint32_t> moduli,
                   std::vector<std::vector<std::uint32_t>> elems) {
  FlowSpec spec;
  spec.group.moduli = std::move(moduli);
  for (const auto& t : elems) spec.s_elements.push_back(spec.group.index_of(t));
  std::sort(spec.s_elements.begin(), spec.s_elements.end());
  spec.validate();
  return spec;
}

}  // namespace

TEST_CASE("perfect matchings on the basics") {
  CHECK(perfect_matchings(complete_graph(2)) == 1);
  CHECK(perfect_matchings(path_graph(3)) == 0);
  CHECK(perfect_matchings(cycle_graph(4)) == 2);
  CHECK(perfect_matchings(cycle_graph(4)) ==
        matchings_bruteforce(cycle_graph(4)));
  CHECK(perfect_matchings(MultiGraph(0, std::vector<Edge>{})) == 1);
  // Parallel edges count separately.
  const MultiGraph doubled(2, {{0, 1}, {0, 1}});
  CHECK(perfect_matchings(doubled) == 2);
}

TEST_CASE("perfect matchings agree with brute force on random graphs") {
  std::mt19937_64 rng(77);
  for (int t = 0; t < 60; ++t) {
    const MultiGraph g = random_multigraph(rng, 6, 8, true);
    CHECK(perfect_matchings(g) == matchings_bruteforce(g));
  }
}

TEST_CASE("partial matchings: spec examples") {
  const LabeledGraph k1(MultiGraph(1, std::vector<Edge>{}), {{1, 0}});
  CHECK(partial_matchings(k1, {}) == 1);
  const LabeledGraph k2(MultiGraph(2, {{0, 1}}), {{1, 0}});
  CHECK(partial_matchings(k2, {1}) == 1);
  CHECK(partial_matchings(k2, {}) == 0);  // the unlabeled end needs cover
  CHECK_THROWS_AS(partial_matchings(k1, {2}), std::invalid_argument);
}

TEST_CASE("partial matchings agree with brute force") {
  std::mt19937_64 rng(78);
  for (int t = 0; t < 40; ++t) {
    const MultiGraph g = random_multigraph(rng, 5, 6, true);
    if (g.node_count() < 2) continue;
    const LabeledGraph lg(g, {{1, 0}, {2, 1}});
    for (const LabelSet& x :
         {LabelSet{}, LabelSet{1}, LabelSet{2}, LabelSet{1, 2}}) {
      CHECK(partial_matchings(lg, x) == partial_matchings_bruteforce(lg, x));
    }
  }
}

TEST_CASE("matching decomposition identity over glued graphs") {
  // Phi(G1 G2) = sum over complementary (X1, X2) of Phi(G1,X1) Phi(G2,X2).
  std::mt19937_64 rng(79);
  const auto graphs = enumerate_labeled({1, 2, 3}, 5, 4, false);
  for (int t = 0; t < 30; ++t) {
    const auto& g1 = graphs[rng() % graphs.size()];
    const auto& g2 = graphs[rng() % graphs.size()];
    Rational sum(0);
    for (std::uint32_t mask = 0; mask < 8; ++mask) {
      LabelSet x1, x2;
      for (std::uint32_t b = 0; b < 3; ++b) {
        if (mask & (1u << b))
          x1.insert(b + 1);
        else
          x2.insert(b + 1);
      }
      sum += partial_matchings(g1, x1) * partial_matchings(g2, x2);
    }
    REQUIRE(sum == perfect_matchings(glue(g1, g2).graph()));
  }
}

TEST_CASE("flow counts: spec examples") {
  const auto z2_nonzero = make_spec({2}, {{1}});
  CHECK(count_flows(cycle_graph(3), z2_nonzero) == 1);
  CHECK(count_flows(complete_graph(2), z2_nonzero) == 0);
  const auto z4_nowhere_zero = make_spec({4}, {{1}, {2}, {3}});
  CHECK(count_flows(complete_graph(4), z4_nowhere_zero) ==
        flows_bruteforce(complete_graph(4), z4_nowhere_zero));
}

TEST_CASE("flow counts match brute force and ignore orientation") {
  std::mt19937_64 rng(80);
  const auto specs = {make_spec({2}, {{1}}), make_spec({3}, {{1}, {2}}),
                      make_spec({4}, {{1}, {3}}),
                      make_spec({2, 2}, {{0, 1}, {1, 0}})};
  for (int t = 0; t < 25; ++t) {
    const MultiGraph g = random_multigraph(rng, 5, 6, true);
    for (const auto& spec : specs) {
      const Rational base = count_flows(g, spec);
      CHECK(base == flows_bruteforce(g, spec));
      for (int o = 0; o < 10; ++o) {
        std::vector<bool> flip(g.edge_count());
        for (std::size_t i = 0; i < flip.size(); ++i) flip[i] = rng() & 1;
        REQUIRE(count_flows(g, spec, &flip) == base);
      }
    }
  }
}

TEST_CASE("flow spec validation rejects a non-inversion-closed S") {
  FlowSpec bad;
  bad.group.moduli = {4};
  bad.s_elements = {1};  // inverse 3 missing
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
}

TEST_CASE("flow target: eulerian special case") {
  const auto h = flow_target(make_spec({2}, {{1}}));
  CHECK(h.d == 2);
  CHECK(h.alpha == std::vector<Rational>{Rational(1, 2), Rational(1, 2)});
  CHECK(h.beta[0][0] == 1);
  CHECK(h.beta[0][1] == -1);
  CHECK(h.beta[1][1] == 1);
}

TEST_CASE("flow target: full Z_2 counts eulerian subgraphs") {
  const auto h = flow_target(make_spec({2}, {{0}, {1}}));
  CHECK(h.beta[0][0] == 2);
  CHECK(h.beta[0][1] == 0);
  CHECK(h.beta[1][1] == 2);
  // hom counts eulerian subgraphs: C_3 has two (empty and full).
  CHECK(hom(cycle_graph(3), h) == 2);
}

TEST_CASE("flow representation: hom equals the flow count") {
  std::mt19937_64 rng(81);
  const auto specs = {make_spec({3}, {{1}, {2}}),
                      make_spec({4}, {{1}, {2}, {3}}),
                      make_spec({2, 2}, {{0, 1}, {1, 0}, {1, 1}})};
  for (const auto& spec : specs) {
    const auto h = flow_target(spec);
    for (int t = 0; t < 20; ++t) {
      const MultiGraph g = random_multigraph(rng, 5, 6, true);
      REQUIRE(hom_fast(g, h) == count_flows(g, spec));
    }
  }
}

TEST_CASE("chromatic: spec examples") {
  CHECK(chromatic(complete_graph(3), Rational(3)) == 6);
  for (int x = 0; x <= 3; ++x) {
    CHECK(chromatic(complete_graph(2), Rational(x)) ==
          Rational(x) * Rational(x - 1));
  }
  // Multiplicities are ignored.
  const MultiGraph doubled(2, {{0, 1}, {0, 1}});
  CHECK(chromatic(doubled, Rational(3)) == 6);
  // Rational evaluation points work too.
  CHECK(chromatic(complete_graph(2), Rational(5, 2)) ==
        Rational(5, 2) * Rational(3, 2));
}

TEST_CASE("chromatic equals hom into the complete target") {
  const auto graphs = enumerate_labeled({}, 5, 10, false);
  for (const auto& g : graphs) {
    for (std::uint32_t x : {1u, 2u, 3u}) {
      REQUIRE(chromatic(g.graph(), Rational(x)) ==
              hom_fast(g.graph(), complete_target(x)));
    }
  }
}

TEST_CASE("simple support parameter") {
  CHECK(simple_support_param(MultiGraph(0, std::vector<Edge>{})) == 1);
  const MultiGraph doubled(2, {{0, 1}, {0, 1}});
  CHECK(simple_support_param(doubled) == Rational(1, 2));
  CHECK(simple_support_param(complete_graph(3)) == Rational(1, 8));
}

TEST_CASE("named loop targets give the edge-power parameters") {
  const auto half = parameter_by_name("hom@:loop-half");
  const auto two = parameter_by_name("hom@:loop-two");
  const MultiGraph p3 = path_graph(3);  // two edges, simple
  CHECK(half(p3) == Rational(1, 4));
  CHECK(two(p3) == Rational(4));
  CHECK(two(MultiGraph(2, {{0, 1}, {0, 1}})) == Rational(4));
}

TEST_CASE("eulerian indicator") {
  CHECK(eulerian_indicator(cycle_graph(3)) == 1);
  CHECK(eulerian_indicator(complete_graph(2)) == 0);
  CHECK(eulerian_indicator(MultiGraph(0, std::vector<Edge>{})) == 1);
  // Equals hom into the flow target on everything small.
  const auto h = flow_target(make_spec({2}, {{1}}));
  for (const auto& g : enumerate_labeled({}, 4, 6, true)) {
    REQUIRE(eulerian_indicator(g.graph()) == hom_fast(g.graph(), h));
  }
}

TEST_CASE("bounded Bell numbers") {
  CHECK(bell_bounded(3, 2) == 4);
  CHECK(bell_bounded(3, 3) == 5);
  CHECK(bell_bounded(0, 5) == 1);
  for (std::uint32_t k = 0; k <= 6; ++k)
    for (std::uint32_t q = 0; q <= k + 1; ++q)
      CHECK(bell_bounded(k, q) == partitions_bruteforce(k, q));
}

TEST_CASE("catalog parameters are multiplicative over disjoint unions") {
  std::mt19937_64 rng(82);
  const std::vector<GraphParameter> params = {
      make_matchings_param(), make_eulerian_param(),
      make_simple_support_param(),
      make_flows_param(make_spec({3}, {{1}, {2}}))};
  for (const auto& f : params) {
    for (int t = 0; t < 15; ++t) {
      const MultiGraph g1 = random_multigraph(rng, 4, 5, true);
      const MultiGraph g2 = random_multigraph(rng, 4, 5, true);
      REQUIRE(f(g1.disjoint_union(g2)) == f(g1) * f(g2));
    }
  }
}

TEST_CASE("parameter registry") {
  CHECK(parameter_by_name("matchings").name == "matchings");
  CHECK(parameter_by_name("chromatic@5/2")(complete_graph(2)) ==
        Rational(5, 2) * Rational(3, 2));
  CHECK_THROWS_AS(parameter_by_name("nope"), std::invalid_argument);
  CHECK_THROWS_AS(parameter_by_name("hom@:nope"), std::invalid_argument);
}

TEST_CASE("flow spec text round trip") {
  const auto spec = parse_flow_spec("group 2,2\nS 0,1 1,0\n");
  CHECK(spec.group.order() == 4);
  CHECK(spec.s_elements.size() == 2);
  const auto again = parse_flow_spec(flow_spec_to_string(spec));
  CHECK(again.s_elements == spec.s_elements);
  CHECK(again.group.moduli == spec.group.moduli);
}
