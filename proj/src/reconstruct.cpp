#include "graphhom/reconstruct.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sstream>

#include <json.hpp>

#include "graphhom/random_gen.hpp"

namespace graphhom {

std::pair<GraphParameter, Rational> normalize(const GraphParameter& f) {
  const Rational at_empty = f(MultiGraph(0, std::vector<Edge>{}));
  if (at_empty != 1)
    throw std::runtime_error("non-normalizable: f(K_0) != 1");
  const Rational scale = f(MultiGraph(1, std::vector<Edge>{}));
  if (scale <= 0)
    throw std::runtime_error("non-normalizable: f(K_1) <= 0");
  if (scale == 1) return {f, scale};
  GraphParameter g = f;
  g.name = f.name + "#normalized";
  auto base = f.eval;
  g.eval = [base, scale](const MultiGraph& graph) {
    return base(graph) / rational_pow(scale, graph.node_count());
  };
  return {g, scale};
}

DegreeSite find_max_degree_site(const GraphParameter& f_normalized,
                                const AlgebraBudget& budget,
                                std::uint32_t max_levels, std::uint64_t seed) {
  // Level L is S = {1..L}; the degree of p in P_S counts the idempotents
  // of P_{S+{L+1}} resolving p, so level L needs the level-(L+1) basis.
  std::vector<AlgebraRep> algebras;
  std::vector<IdempotentBasis> bases;
  auto ensure_level = [&](std::uint32_t level) {
    while (algebras.size() <= level) {
      LabelSet s;
      for (std::uint32_t i = 1; i <= algebras.size(); ++i) s.insert(i);
      algebras.push_back(build_algebra(f_normalized, s, budget));
      bases.push_back(
          idempotent_basis(algebras.back(), seed + algebras.size()));
    }
  };

  DegreeSite best;
  std::uint32_t prev_max = 0;
  for (std::uint32_t level = 0; level <= max_levels; ++level) {
    ensure_level(level + 1);
    const auto& here = bases[level];
    const auto& above = algebras[level + 1];
    const auto& above_idem = bases[level + 1];

    std::uint32_t level_max = 0;
    std::size_t arg = 0;
    for (std::size_t i = 0; i < here.size(); ++i) {
      std::uint32_t deg = 0;
      for (const auto& q : above_idem.elements) {
        if (resolves(above, q, here.elements[i])) ++deg;
      }
      if (deg > level_max) {
        level_max = deg;
        arg = i;
      }
    }
    best.level_max_degrees.push_back(level_max);

    if (level > 0 && level_max == prev_max && level_max > 0) {
      // Stabilized: report the previous level's site.
      best.stabilized = true;
      break;
    }
    best.labels = algebras[level].labels();
    best.idempotent = here.elements[arg];
    best.max_degree = level_max;
    prev_max = level_max;
  }
  return best;
}

TargetBuild build_target(const GraphParameter& f_normalized,
                         const DegreeSite& site, const AlgebraBudget& budget,
                         std::uint64_t seed) {
  const LabelSet& s = site.labels;
  const QuantumGraph& p = site.idempotent;
  const std::uint32_t d = site.max_degree;

  LabelSet used = s;
  const Label u = fresh_label(used);
  used.insert(u);
  const Label v = fresh_label(used);

  LabelSet su = s;
  su.insert(u);
  AlgebraRep a_u = build_algebra(f_normalized, su, budget);
  IdempotentBasis idem_u = idempotent_basis(a_u, seed + 101);

  std::vector<QuantumGraph> q_u;
  for (const auto& q : idem_u.elements) {
    if (resolves(a_u, q, p)) q_u.push_back(q);
  }
  if (q_u.size() != d) {
    std::ostringstream msg;
    msg << "degree mismatch: expected " << d << " resolving idempotents, got "
        << q_u.size();
    throw std::runtime_error(msg.str());
  }

  const double f_p = qg_eval(f_normalized, p);
  if (std::fabs(f_p) < 1e-12)
    throw std::runtime_error("degenerate idempotent mass: f(p) ~ 0");

  TargetBuild out;
  out.alpha_raw.resize(d);
  for (std::uint32_t i = 0; i < d; ++i)
    out.alpha_raw[i] = qg_eval(f_normalized, q_u[i]) / f_p;

  // q_j^v by the label isomorphism u -> v.
  std::vector<QuantumGraph> q_v;
  for (const auto& q : q_u) q_v.push_back(qg_relabel(q, {{u, v}}));

  const QuantumGraph k_uv = QuantumGraph(edge_between_labels(u, v, s));
  const QuantumGraph pk = qg_product(p, k_uv);

  out.beta_raw.assign(d, std::vector<double>(d, 0.0));
  for (std::uint32_t i = 0; i < d; ++i) {
    for (std::uint32_t j = 0; j < d; ++j) {
      const QuantumGraph qq = qg_product(q_u[i], q_v[j]);
      const double mass = qg_eval(f_normalized, qq);
      if (std::fabs(mass) < 1e-12)
        throw std::runtime_error(
            "degenerate idempotent mass: f(q_i q_j) ~ 0");
      out.beta_raw[i][j] = qg_eval(f_normalized, qg_product(pk, qq)) / mass;
    }
  }
  for (std::uint32_t i = 0; i < d; ++i)
    for (std::uint32_t j = i + 1; j < d; ++j)
      out.max_asymmetry =
          std::max(out.max_asymmetry,
                   std::fabs(out.beta_raw[i][j] - out.beta_raw[j][i]));
  if (out.max_asymmetry > budget.identity_tol)
    throw std::runtime_error("recovered edge weights are not symmetric");

  // Snap to small rationals when possible, else keep the exact double.
  const Integer snap_den(10000);
  auto snap = [&](double x) -> Rational {
    auto r = snap_to_rational(x, snap_den, 1e-6);
    if (r) return *r;
    out.snapped = false;
    return rational_from_double(x);
  };
  out.target.d = d;
  out.target.alpha.resize(d);
  for (std::uint32_t i = 0; i < d; ++i)
    out.target.alpha[i] = snap(out.alpha_raw[i]);
  out.target.beta.assign(d, std::vector<Rational>(d, Rational(0)));
  for (std::uint32_t i = 0; i < d; ++i) {
    for (std::uint32_t j = i; j < d; ++j) {
      const Rational b = snap((out.beta_raw[i][j] + out.beta_raw[j][i]) / 2.0);
      out.target.beta[i][j] = b;
      out.target.beta[j][i] = b;
    }
  }
  out.target.validate();
  return out;
}

std::vector<double> verify(const GraphParameter& f, const WeightedTarget& h,
                           const std::vector<MultiGraph>& test_graphs) {
  std::vector<double> residuals;
  residuals.reserve(test_graphs.size());
  for (const auto& g : test_graphs) {
    const Rational want = f(g);
    const Rational got = hom_fast(g, h);
    const Rational err = boost::multiprecision::abs(want - got);
    Rational denom = boost::multiprecision::abs(want);
    if (denom < 1) denom = 1;
    residuals.push_back(rational_to_double(err / denom));
  }
  return residuals;
}

ReconstructionReport reconstruct(const GraphParameter& f,
                                 const ReconstructOptions& options) {
  ReconstructionReport report;

  // Multiplicativity gate: rank-1 M(f,0) and f(K_0) = 1.
  const Rational at_empty = f(MultiGraph(0, std::vector<Edge>{}));
  if (at_empty != 1) {
    report.status = ReconstructStatus::not_multiplicative;
    report.message = "f(K_0) = " + rational_to_string(at_empty) + ", not 1";
    return report;
  }
  {
    SliceBudget gate{2, 3, f.multiplicity_sensitive, 1};
    auto slice0 = build_slice(f, 0, gate);
    if (exact_rank(slice0.entries) > 1) {
      report.status = ReconstructStatus::not_multiplicative;
      report.message = "M(f,0) has rank > 1";
      return report;
    }
  }

  // Reflection-positivity gate on small slices.
  for (std::uint32_t k = 0; k <= options.psd_gate_k; ++k) {
    SliceBudget gate{k + 2, k + 3, f.multiplicity_sensitive, 1};
    auto slice = build_slice(f, k, gate);
    auto verdict = psd_check(slice.entries);
    if (!verdict.psd) {
      report.status = ReconstructStatus::not_psd;
      report.psd_fail_k = k;
      report.psd_certificate = verdict;
      report.psd_fail_rows = slice.row_codes;
      report.message = "M(f," + std::to_string(k) + ") is not positive "
                       "semidefinite";
      return report;
    }
  }

  auto [fn, scale] = normalize(f);
  report.normalization = scale;

  DegreeSite site =
      find_max_degree_site(fn, options.algebra, options.max_levels,
                           options.seed);
  report.labels_used = site.labels;
  report.max_degree = site.max_degree;
  report.degree_stabilized = site.stabilized;

  // Cross-check D against the exponential bound suggested by the observed
  // slice ranks: degrees cannot exceed ceil(r_k^(1/k)).
  {
    const auto profile = rank_profile(f, 2, 2, 1, 120);
    std::uint32_t q_obs = 1;
    for (const auto& e : profile) {
      if (e.k == 0 || e.rank == 0) continue;
      const auto root = static_cast<std::uint32_t>(
          std::ceil(std::pow(double(e.rank), 1.0 / e.k) - 1e-9));
      q_obs = std::max(q_obs, root);
    }
    report.degree_bound_ok = site.max_degree <= q_obs;
  }
  if (!site.stabilized) {
    report.status = ReconstructStatus::unsaturated;
    report.message = "maximum idempotent degree still growing at the level "
                     "budget";
    return report;
  }

  TargetBuild build;
  try {
    build = build_target(fn, site, options.algebra, options.seed);
  } catch (const std::runtime_error& e) {
    report.status = ReconstructStatus::degenerate;
    report.message = e.what();
    return report;
  }
  report.snapped = build.snapped;

  // Undo the normalization on the node weights.
  WeightedTarget target = build.target;
  for (auto& a : target.alpha) a *= scale;
  report.target = target;

  std::mt19937_64 rng(options.seed * 9176 + 13);
  std::vector<MultiGraph> tests;
  tests.push_back(MultiGraph(0, std::vector<Edge>{}));
  while (tests.size() < options.verify_graphs) {
    tests.push_back(random_multigraph(rng, options.verify_max_nodes,
                                      options.verify_max_edges, true));
  }
  report.residuals = verify(f, target, tests);
  for (double r : report.residuals)
    report.max_residual = std::max(report.max_residual, r);
  if (report.max_residual >= options.tol) {
    report.status = ReconstructStatus::degenerate;
    report.message = "verification residual " +
                     std::to_string(report.max_residual) + " above tolerance";
    return report;
  }
  report.status = ReconstructStatus::success;
  return report;
}

namespace {

// Report floats carry 12 significant digits.
double sig12(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", x);
  return std::strtod(buf, nullptr);
}

}  // namespace

std::string ReconstructionReport::to_json() const {
  nlohmann::json j;
  const char* names[] = {"success", "not_psd", "not_multiplicative",
                         "unsaturated", "degenerate"};
  j["status"] = names[static_cast<int>(status)];
  j["message"] = message;
  j["max_degree"] = max_degree;
  j["normalization"] = rational_to_string(normalization);
  j["labels_used"] = std::vector<Label>(labels_used.begin(),
                                        labels_used.end());
  j["degree_stabilized"] = degree_stabilized;
  j["degree_bound_ok"] = degree_bound_ok;
  j["snapped"] = snapped;
  if (target) {
    j["target"] = nlohmann::json::parse(target_to_json(*target));
  }
  std::vector<double> rounded;
  rounded.reserve(residuals.size());
  for (double r : residuals) rounded.push_back(sig12(r));
  j["residuals"] = std::move(rounded);
  j["max_residual"] = sig12(max_residual);
  if (psd_certificate) {
    nlohmann::json cert;
    cert["k"] = psd_fail_k;
    std::vector<std::string> wit;
    for (const auto& x : psd_certificate->witness)
      wit.push_back(rational_to_string(x));
    cert["witness"] = std::move(wit);
    cert["witness_value"] =
        rational_to_string(psd_certificate->witness_value);
    std::vector<std::string> rows;
    for (const auto& c : psd_fail_rows) rows.push_back(c.hex());
    cert["rows"] = std::move(rows);
    j["psd_certificate"] = std::move(cert);
  }
  return j.dump(2);
}

}  // namespace graphhom
