#include <doctest.h>

#include <random>

#include "graphhom/enumerate.hpp"
#include "graphhom/random_gen.hpp"
#include "graphhom/reconstruct.hpp"

using namespace graphhom;

namespace {

GraphParameter twin_free_oracle() {
  WeightedTarget h;
  h.d = 2;
  h.alpha = {Rational(1, 3), Rational(1)};
  h.beta = {{Rational(1, 2), Rational(2)}, {Rational(2), Rational(3)}};
  return make_hom_param(h, "hom@twinfree");
}

ReconstructOptions default_options() {
  ReconstructOptions o;
  o.algebra.extra_nodes = 2;
  return o;
}

WeightedTarget eulerian_target() {
  WeightedTarget h;
  h.d = 2;
  h.alpha = {Rational(1, 2), Rational(1, 2)};
  h.beta = {{Rational(1), Rational(-1)}, {Rational(-1), Rational(1)}};
  return h;
}

}  // namespace

TEST_CASE("normalize leaves a unit-alphasum hom parameter alone") {
  const auto f = make_hom_param(eulerian_target(), "hom@eul");
  auto [fn, scale] = normalize(f);
  CHECK(scale == 1);
  CHECK(fn(cycle_graph(3)) == f(cycle_graph(3)));
}

TEST_CASE("normalize divides chromatic@2 by 2 per node") {
  const auto f = parameter_by_name("chromatic@2");
  auto [fn, scale] = normalize(f);
  CHECK(scale == 2);
  CHECK(fn(MultiGraph(1, std::vector<Edge>{})) == 1);
  CHECK(fn(complete_graph(2)) == Rational(1, 2));  // 2*1 / 2^2
  // Isolated nodes become invisible after normalization.
  const MultiGraph tri = cycle_graph(3);
  MultiGraph tri_iso(4, tri.edges());
  CHECK(fn(tri) == fn(tri_iso));
}

TEST_CASE("normalize rejects parameters that vanish on a point") {
  GraphParameter f;
  f.name = "point-killer";
  f.eval = [](const MultiGraph& g) {
    return g.node_count() == 0 ? Rational(1) : Rational(0);
  };
  CHECK_THROWS_WITH_AS(normalize(f).first(complete_graph(2)),
                       "non-normalizable: f(K_1) <= 0", std::runtime_error);
}

TEST_CASE("degree site: one-node oracle stabilizes immediately") {
  const auto f = parameter_by_name("hom@:loop-two");
  const auto site = find_max_degree_site(f, default_options().algebra, 2, 0);
  CHECK(site.stabilized);
  CHECK(site.labels.empty());
  CHECK(site.max_degree == 1);
}

TEST_CASE("degree site: eulerian stabilizes at one label with degree 2") {
  const auto f = make_eulerian_param();
  const auto site = find_max_degree_site(f, default_options().algebra, 2, 0);
  CHECK(site.stabilized);
  CHECK(site.labels == LabelSet{1});
  CHECK(site.max_degree == 2);
  // Level sequence: degree 1 at the empty level, then 2, then stable.
  REQUIRE(site.level_max_degrees.size() >= 2);
  CHECK(site.level_max_degrees[0] == 1);
  CHECK(site.level_max_degrees[1] == 2);
}

TEST_CASE("degree site: twin-free two-node oracle stabilizes at the root") {
  auto f = normalize(twin_free_oracle()).first;
  const auto site = find_max_degree_site(f, default_options().algebra, 2, 0);
  CHECK(site.stabilized);
  CHECK(site.labels.empty());
  CHECK(site.max_degree == 2);
}

TEST_CASE("build_target recovers the one-node loop target exactly") {
  const auto f = parameter_by_name("hom@:loop-two");
  const auto opts = default_options();
  const auto site = find_max_degree_site(f, opts.algebra, 2, 0);
  const auto build = build_target(f, site, opts.algebra, 0);
  CHECK(build.snapped);
  REQUIRE(build.target.d == 1);
  CHECK(build.target.alpha[0] == 1);
  CHECK(build.target.beta[0][0] == 2);
}

TEST_CASE("build_target recovers the eulerian target up to node order") {
  const auto f = make_eulerian_param();
  const auto opts = default_options();
  const auto site = find_max_degree_site(f, opts.algebra, 2, 0);
  const auto build = build_target(f, site, opts.algebra, 0);
  CHECK(build.snapped);
  CHECK(build.max_asymmetry < 1e-9);
  REQUIRE(build.target.d == 2);
  CHECK(build.target.alpha[0] == Rational(1, 2));
  CHECK(build.target.alpha[1] == Rational(1, 2));
  CHECK(build.target.beta[0][0] == 1);
  CHECK(build.target.beta[1][1] == 1);
  CHECK(build.target.beta[0][1] == -1);
  // All node weights positive, as the construction guarantees.
  for (const auto& a : build.target.alpha) CHECK(a > 0);
}

TEST_CASE("verify: exact self-consistency and a hopeless target") {
  const auto f = make_hom_param(eulerian_target(), "hom@eul");
  std::vector<MultiGraph> tests;
  std::mt19937_64 rng(1);
  for (int t = 0; t < 20; ++t)
    tests.push_back(random_multigraph(rng, 5, 7, true));
  for (double r : verify(f, eulerian_target(), tests)) CHECK(r == 0.0);

  // No target reproduces perfect matchings on {K_1, K_2, P_3}: matchings
  // of K_1 force a zero alpha-beta combination that K_2 contradicts.
  const auto matchings = make_matchings_param();
  std::vector<MultiGraph> small{complete_graph(1), complete_graph(2),
                                path_graph(3)};
  bool all_zero = true;
  for (double r : verify(matchings, eulerian_target(), small))
    if (r > 1e-9) all_zero = false;
  CHECK(!all_zero);
}

TEST_CASE("full pipeline: loop-two, eulerian, twin-free round trips") {
  ReconstructOptions opts = default_options();
  opts.verify_graphs = 30;

  SUBCASE("one-node loop target") {
    const auto report = reconstruct(parameter_by_name("hom@:loop-two"), opts);
    REQUIRE(report.success());
    CHECK(report.max_degree == 1);
    CHECK(report.max_residual == 0.0);
    CHECK(report.snapped);
  }
  SUBCASE("eulerian") {
    const auto report = reconstruct(make_eulerian_param(), opts);
    REQUIRE(report.success());
    CHECK(report.max_degree == 2);
    CHECK(report.max_residual == 0.0);
    CHECK(report.labels_used == LabelSet{1});
    CHECK(report.degree_bound_ok);
  }
  SUBCASE("twin-free rational target") {
    const auto report = reconstruct(twin_free_oracle(), opts);
    REQUIRE(report.success());
    CHECK(report.max_degree == 2);
    CHECK(report.max_residual == 0.0);
    CHECK(report.snapped);
    // The recovered weights reproduce the original up to node order.
    std::multiset<Rational> alphas(report.target->alpha.begin(),
                                   report.target->alpha.end());
    CHECK(alphas == std::multiset<Rational>{Rational(1, 3), Rational(1)});
  }
}

TEST_CASE("a three-node twin-free target round-trips exactly") {
  WeightedTarget h;
  h.d = 3;
  h.alpha = {Rational(1, 2), Rational(1), Rational(2)};
  h.beta = {{Rational(1), Rational(2), Rational(1, 2)},
            {Rational(2), Rational(3), Rational(1)},
            {Rational(1, 2), Rational(1), Rational(2)}};
  ReconstructOptions opts;
  opts.algebra.extra_nodes = 2;
  opts.verify_graphs = 30;
  const auto report = reconstruct(make_hom_param(h, "hom@d3"), opts);
  REQUIRE(report.success());
  CHECK(report.max_degree == 3);
  CHECK(report.max_residual == 0.0);
  CHECK(report.snapped);
  std::multiset<Rational> alphas(report.target->alpha.begin(),
                                 report.target->alpha.end());
  CHECK(alphas ==
        std::multiset<Rational>{Rational(1, 2), Rational(1), Rational(2)});
}

TEST_CASE("pipeline halts on matchings with a PSD certificate") {
  const auto report = reconstruct(make_matchings_param(), default_options());
  REQUIRE(report.status == ReconstructStatus::not_psd);
  REQUIRE(report.psd_certificate.has_value());
  CHECK(!report.target.has_value());
  CHECK(report.psd_certificate->witness_value < 0);
}

TEST_CASE("pipeline rejects non-multiplicative parameters up front") {
  GraphParameter f;
  f.name = "node-count";
  f.eval = [](const MultiGraph& g) { return Rational(g.node_count()); };
  const auto report = reconstruct(f, default_options());
  CHECK(report.status == ReconstructStatus::not_multiplicative);
}

TEST_CASE("scale reversal: chromatic@2 reconstructs the K_2 target") {
  ReconstructOptions opts = default_options();
  opts.algebra.multi = false;  // chromatic ignores multiplicities
  const auto report = reconstruct(parameter_by_name("chromatic@2"), opts);
  REQUIRE(report.success());
  CHECK(report.normalization == 2);
  REQUIRE(report.target->d == 2);
  CHECK(report.target->alpha[0] == 1);
  CHECK(report.target->alpha[1] == 1);
  CHECK(report.target->beta[0][1] == 1);
  CHECK(report.target->beta[0][0] == 0);
  CHECK(report.target->beta[1][1] == 0);
  CHECK(report.max_residual == 0.0);
}

TEST_CASE("reconstructing from the normalized oracle differs only in scale") {
  const auto f = parameter_by_name("chromatic@2");
  auto [fn, scale] = normalize(f);
  ReconstructOptions opts = default_options();
  opts.algebra.multi = false;
  const auto full = reconstruct(f, opts);
  const auto normed = reconstruct(fn, opts);
  REQUIRE(full.success());
  REQUIRE(normed.success());
  REQUIRE(full.target->d == normed.target->d);
  for (std::uint32_t i = 0; i < full.target->d; ++i) {
    CHECK(full.target->alpha[i] == normed.target->alpha[i] * scale);
    for (std::uint32_t j = 0; j < full.target->d; ++j)
      CHECK(full.target->beta[i][j] == normed.target->beta[i][j]);
  }
}

TEST_CASE("report serializes to JSON") {
  const auto report =
      reconstruct(parameter_by_name("hom@:loop-two"), default_options());
  const std::string json = report.to_json();
  CHECK(json.find("\"status\": \"success\"") != std::string::npos);
  CHECK(json.find("\"max_degree\": 1") != std::string::npos);
}
