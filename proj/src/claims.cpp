#include "graphhom/claims.hpp"

#include <cmath>
#include <initializer_list>
#include <limits>
#include <random>

#include "graphhom/reconstruct.hpp"

namespace graphhom {

namespace {

double pm1(std::mt19937_64& rng) {
  return double(rng() >> 11) * (2.0 / 9007199254740992.0) - 1.0;
}

QuantumGraph random_element(const AlgebraRep& a, std::mt19937_64& rng) {
  QuantumGraph x = QuantumGraph::zero(a.labels());
  for (const auto& b : a.basis()) x += QuantumGraph(b, pm1(rng));
  return x;
}

struct Suite {
  const GraphParameter& f;
  const AlgebraBudget& budget;
  std::uint64_t seed;
  std::vector<ClaimResult> results;

  // Cached algebras and idempotent bases keyed by label set.
  std::map<LabelSet, AlgebraRep> algebras;
  std::map<LabelSet, IdempotentBasis> bases;

  const AlgebraRep& algebra(const LabelSet& s) {
    auto it = algebras.find(s);
    if (it == algebras.end())
      it = algebras.emplace(s, build_algebra(f, s, budget)).first;
    return it->second;
  }
  const IdempotentBasis& idem(const LabelSet& s) {
    auto it = bases.find(s);
    if (it == bases.end()) {
      it = bases
               .emplace(s, idempotent_basis(algebra(s),
                                            seed + 31 * (s.size() + 1)))
               .first;
    }
    return it->second;
  }

  void record(const std::string& name, double residual, double bound) {
    results.push_back({name, residual < bound, residual});
  }
  void record_pass(const std::string& name, bool pass, double residual) {
    results.push_back({name, pass, residual});
  }
};

LabelSet make_set(std::initializer_list<Label> ls) { return LabelSet(ls); }

void claim_resolve_sum(Suite& st) {
  double worst = 0.0;
  for (const LabelSet& s : {make_set({1}), make_set({1, 2})}) {
    const auto& a = st.algebra(s);
    const auto& p_s = st.idem(s);
    // Idempotents of the algebra are exactly the subset sums of P_S; check
    // the unit, singletons, and a leading pair.
    std::vector<std::vector<std::size_t>> subsets;
    std::vector<std::size_t> all;
    for (std::size_t i = 0; i < p_s.size(); ++i) {
      subsets.push_back({i});
      all.push_back(i);
    }
    subsets.push_back(all);
    if (p_s.size() >= 2) subsets.push_back({0, 1});
    for (const auto& subset : subsets) {
      QuantumGraph r = QuantumGraph::zero(s);
      for (std::size_t i : subset) r += p_s.elements[i];
      QuantumGraph sum = QuantumGraph::zero(s);
      for (std::size_t i = 0; i < p_s.size(); ++i) {
        if (resolves(a, p_s.elements[i], r)) sum += p_s.elements[i];
      }
      worst = std::max(worst, qg_norm(st.f, r - sum));
    }
  }
  st.record("resolve-sum", worst, 1e-6);
}

void claim_resolve_partition(Suite& st) {
  bool ok = true;
  for (const auto& [s, t] :
       std::vector<std::pair<LabelSet, LabelSet>>{
           {make_set({}), make_set({1})},
           {make_set({1}), make_set({1, 2})},
           {make_set({1, 2}), make_set({1, 2, 3})}}) {
    const auto& a_t = st.algebra(t);
    const auto& p_s = st.idem(s);
    const auto& p_t = st.idem(t);
    for (const auto& q : p_t.elements) {
      int count = 0;
      for (const auto& p : p_s.elements) {
        if (resolves(a_t, q, p)) ++count;
      }
      if (count != 1) ok = false;
    }
  }
  st.record_pass("resolve-partition", ok, ok ? 0.0 : 1.0);
}

void claim_unlabel(Suite& st) {
  const LabelSet t = make_set({1, 2}), u = make_set({1, 3}),
                 s = make_set({1});
  const auto& a_t = st.algebra(t);
  const auto& a_u = st.algebra(u);
  std::mt19937_64 rng(st.seed + 401);
  double worst = 0.0;
  for (int trial = 0; trial < 5; ++trial) {
    const QuantumGraph x = random_element(a_t, rng);
    const QuantumGraph y = random_element(a_u, rng);
    const double lhs = qg_eval(st.f, qg_product(x, y));
    const double rhs = qg_eval(st.f, qg_product(qg_project(x, s), y));
    worst = std::max(worst,
                     std::fabs(lhs - rhs) / std::max(1.0, std::fabs(lhs)));
  }
  st.record("unlabel", worst, 1e-6);
}

void claim_resolve_proj(Suite& st) {
  double worst = 0.0;
  for (const auto& [s, t] :
       std::vector<std::pair<LabelSet, LabelSet>>{
           {make_set({1}), make_set({1, 2})},
           {make_set({1, 2}), make_set({1, 2, 3})}}) {
    const auto& a_t = st.algebra(t);
    const auto& p_s = st.idem(s);
    const auto& p_t = st.idem(t);
    for (const auto& q : p_t.elements) {
      for (std::size_t i = 0; i < p_s.size(); ++i) {
        if (!resolves(a_t, q, p_s.elements[i])) continue;
        const double fq = qg_eval(st.f, q);
        const double fp = p_s.f_values[i];
        QuantumGraph diff =
            qg_project(q, s) - (fq / fp) * p_s.elements[i];
        worst = std::max(worst, qg_norm(st.f, diff));
      }
    }
  }
  st.record("resolve-projection", worst, 1e-6);
}

void claim_resolve_f(Suite& st) {
  const LabelSet s = make_set({1}), t = make_set({1, 2}), u = make_set({1, 3});
  const auto& a_t = st.algebra(t);
  const auto& a_u = st.algebra(u);
  const auto& p_s = st.idem(s);
  const auto& p_t = st.idem(t);
  std::mt19937_64 rng(st.seed + 402);
  double worst = 0.0;
  for (std::size_t i = 0; i < p_s.size(); ++i) {
    const QuantumGraph& p = p_s.elements[i];
    for (const auto& q : p_t.elements) {
      if (!resolves(a_t, q, p)) continue;
      for (int trial = 0; trial < 3; ++trial) {
        const QuantumGraph r = random_element(a_u, rng);
        const double lhs = p_s.f_values[i] * qg_eval(st.f, qg_product(q, r));
        const double rhs =
            qg_eval(st.f, q) * qg_eval(st.f, qg_product(p, r));
        worst = std::max(
            worst, std::fabs(lhs - rhs) / std::max(1.0, std::fabs(lhs)));
      }
    }
  }
  st.record("resolve-f", worst, 1e-6);
}

void claim_resolve_prod(Suite& st) {
  double min_mass = std::numeric_limits<double>::infinity();
  struct Case {
    LabelSet s, t, u;
  };
  for (const Case& c : {Case{make_set({}), make_set({1}), make_set({2})},
                        Case{make_set({1}), make_set({1, 2}),
                             make_set({1, 3})}}) {
    const auto& a_t = st.algebra(c.t);
    const auto& a_u = st.algebra(c.u);
    const auto& p_s = st.idem(c.s);
    const auto& p_t = st.idem(c.t);
    const auto& p_u = st.idem(c.u);
    for (const auto& p : p_s.elements) {
      for (const auto& q : p_t.elements) {
        if (!resolves(a_t, q, p)) continue;
        for (const auto& r : p_u.elements) {
          if (!resolves(a_u, r, p)) continue;
          min_mass = std::min(min_mass, qg_norm(st.f, qg_product(q, r)));
        }
      }
    }
  }
  // Residual semantics: violation size, zero when every product has mass.
  st.record_pass("resolve-product", min_mass > 1e-6,
                 min_mass > 1e-6 ? 0.0 : 1.0);
}

void claim_resolve_deg(Suite& st) {
  bool ok = true;
  for (const auto& [s, t] :
       std::vector<std::pair<LabelSet, LabelSet>>{
           {make_set({}), make_set({1})},
           {make_set({1}), make_set({1, 2})}}) {
    const auto& a_t = st.algebra(t);
    const auto& p_s = st.idem(s);
    const auto& p_t = st.idem(t);
    for (std::size_t i = 0; i < p_s.size(); ++i) {
      LabelSet used = t;
      const Label w = fresh_label(used);
      const auto dp = degree(st.f, p_s.elements[i], w, st.budget,
                             st.seed + 71);
      for (const auto& q : p_t.elements) {
        if (!resolves(a_t, q, p_s.elements[i])) continue;
        const auto dq =
            degree(st.f, q, w, st.budget, st.seed + 72);
        if (dq.degree < dp.degree) ok = false;
      }
    }
  }
  st.record_pass("resolve-degree", ok, ok ? 0.0 : 1.0);
}

void claim_unit(Suite& st) {
  double worst = 0.0;
  for (const LabelSet& s : {make_set({1}), make_set({1, 2})}) {
    const auto& a = st.algebra(s);
    const auto& p_s = st.idem(s);
    QuantumGraph sum = QuantumGraph::zero(s);
    for (const auto& p : p_s.elements) sum += p;
    worst = std::max(worst, qg_norm(st.f, sum - a.unit()));
  }
  st.record("unit-decomposition", worst, 1e-6);
}

// The q_i over the max-degree site: q^v decomposes as the sum of the
// pair-products with matching v-index, and the masses factorize.
void claim_qisum_and_mass(Suite& st) {
  DegreeSite site = find_max_degree_site(st.f, st.budget, 2, st.seed + 500);
  const LabelSet& s = site.labels;
  LabelSet used = s;
  const Label u = fresh_label(used);
  used.insert(u);
  const Label v = fresh_label(used);

  LabelSet su = s;
  su.insert(u);
  const auto& a_u = st.algebra(su);
  const auto& idem_u = st.idem(su);
  std::vector<QuantumGraph> q_u;
  for (const auto& q : idem_u.elements) {
    if (resolves(a_u, q, site.idempotent)) q_u.push_back(q);
  }
  std::vector<QuantumGraph> q_v;
  for (const auto& q : q_u) q_v.push_back(qg_relabel(q, {{u, v}}));
  const std::size_t d = q_u.size();
  const double fp = qg_eval(st.f, site.idempotent);

  double worst_qisum = 0.0, worst_mass = 0.0;
  bool mass_nonzero = true;
  for (std::size_t i = 0; i < d; ++i) {
    LabelSet suv = su;
    suv.insert(v);
    QuantumGraph sum = QuantumGraph::zero(suv);
    for (std::size_t j = 0; j < d; ++j) {
      const QuantumGraph q_phi = qg_product(q_u[j], q_v[i]);
      sum += q_phi;
      const double mass = qg_eval(st.f, q_phi);
      if (std::fabs(mass) < 1e-9) mass_nonzero = false;
      const double predicted = qg_eval(st.f, q_u[j]) *
                               qg_eval(st.f, q_v[i]) / fp;
      worst_mass = std::max(worst_mass, std::fabs(mass - predicted) /
                                            std::max(1.0, std::fabs(mass)));
    }
    const QuantumGraph qv_embedded = qg_embed(q_v[i], suv);
    worst_qisum = std::max(worst_qisum, qg_norm(st.f, qv_embedded - sum));
  }
  st.record("qphi-sum", worst_qisum, 1e-6);
  st.record_pass("mass-factorization",
                 mass_nonzero && worst_mass < 1e-6, worst_mass);
}

}  // namespace

std::vector<ClaimResult> run_section4_claims(
    const GraphParameter& f_normalized, const AlgebraBudget& budget,
    std::uint64_t seed) {
  Suite st{f_normalized, budget, seed, {}, {}, {}};
  claim_resolve_sum(st);
  claim_resolve_partition(st);
  claim_unlabel(st);
  claim_resolve_proj(st);
  claim_resolve_f(st);
  claim_resolve_prod(st);
  claim_resolve_deg(st);
  claim_unit(st);
  claim_qisum_and_mass(st);
  return std::move(st.results);
}

bool all_pass(const std::vector<ClaimResult>& results) {
  for (const auto& r : results)
    if (!r.pass) return false;
  return true;
}

}  // namespace graphhom
