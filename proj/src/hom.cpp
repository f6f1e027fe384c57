#include "graphhom/hom.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace graphhom {

namespace {

Rational beta_power(const WeightedTarget& h, std::uint32_t i, std::uint32_t j,
                    std::uint32_t mult) {
  Rational b = h.b(i, j);
  if (mult == 1) return b;
  if (b == 0) return Rational(0);
  return rational_pow(b, mult);
}

// Direct sum over assignments; `fixed` pins node -> state.
Rational hom_bruteforce(const MultiGraph& g, const WeightedTarget& h,
                        const std::map<std::uint32_t, std::uint32_t>& fixed) {
  const std::uint32_t n = g.node_count();
  std::vector<std::uint32_t> state(n, 0);
  std::vector<bool> pinned(n, false);
  for (const auto& [v, s] : fixed) {
    if (v >= n) throw std::invalid_argument("pinned node out of range");
    if (s >= h.d) throw std::invalid_argument("pinned state out of range");
    state[v] = s;
    pinned[v] = true;
  }
  std::vector<std::uint32_t> free_nodes;
  for (std::uint32_t v = 0; v < n; ++v)
    if (!pinned[v]) free_nodes.push_back(v);

  Rational total(0);
  while (true) {
    Rational w(1);
    for (std::uint32_t v = 0; v < n && w != 0; ++v) w *= h.alpha[state[v]];
    for (const auto& e : g.edges()) {
      if (w == 0) break;
      w *= beta_power(h, state[e.a], state[e.b], e.mult);
    }
    total += w;
    // Mixed-radix increment over the free nodes.
    std::size_t pos = 0;
    while (pos < free_nodes.size()) {
      std::uint32_t v = free_nodes[pos];
      if (++state[v] < h.d) break;
      state[v] = 0;
      ++pos;
    }
    if (pos == free_nodes.size()) break;
  }
  return total;
}

struct Factor {
  std::vector<std::uint32_t> scope;  // sorted node ids
  std::vector<Rational> table;       // row-major over scope, d per slot
};

std::uint64_t table_size(std::size_t scope_len, std::uint32_t d) {
  std::uint64_t s = 1;
  for (std::size_t i = 0; i < scope_len; ++i) {
    s *= d;
    if (s > (std::uint64_t(1) << 62) / d) return std::uint64_t(-1);
  }
  return s;
}

}  // namespace

Rational hom(const MultiGraph& g, const WeightedTarget& h) {
  h.validate();
  return hom_bruteforce(g, h, {});
}

Rational hom_pinned(const LabeledGraph& g, const WeightedTarget& h,
                    const Assignment& phi) {
  h.validate();
  if (phi.size() != g.labels().size())
    throw std::invalid_argument("assignment must pin exactly the labels");
  std::map<std::uint32_t, std::uint32_t> fixed;
  for (const auto& [l, s] : phi) {
    if (!g.has_label(l))
      throw std::invalid_argument("assignment pins an absent label");
    fixed[g.node_of(l)] = s;
  }
  return hom_bruteforce(g.graph(), h, fixed);
}

Rational hom_fast(const MultiGraph& g, const WeightedTarget& h,
                  std::uint64_t table_cap) {
  h.validate();
  const std::uint32_t n = g.node_count();
  const std::uint32_t d = h.d;
  if (n == 0) return Rational(1);

  // Factor list: alpha per node, beta^mult per edge pair.
  std::vector<Factor> factors;
  for (std::uint32_t v = 0; v < n; ++v) {
    Factor f;
    f.scope = {v};
    f.table.reserve(d);
    for (std::uint32_t s = 0; s < d; ++s) f.table.push_back(h.alpha[s]);
    factors.push_back(std::move(f));
  }
  for (const auto& e : g.edges()) {
    Factor f;
    f.scope = {e.a, e.b};
    f.table.reserve(std::size_t(d) * d);
    for (std::uint32_t s = 0; s < d; ++s)
      for (std::uint32_t t = 0; t < d; ++t)
        f.table.push_back(beta_power(h, s, t, e.mult));
    factors.push_back(std::move(f));
  }

  // Elimination graph adjacency for the min-degree heuristic.
  std::vector<std::set<std::uint32_t>> nbrs(n);
  for (const auto& e : g.edges()) {
    nbrs[e.a].insert(e.b);
    nbrs[e.b].insert(e.a);
  }
  std::vector<bool> eliminated(n, false);

  Rational scalar(1);
  for (std::uint32_t step = 0; step < n; ++step) {
    std::uint32_t v = n;
    std::size_t best_deg = std::size_t(-1);
    for (std::uint32_t u = 0; u < n; ++u) {
      if (eliminated[u]) continue;
      std::size_t deg = 0;
      for (std::uint32_t w : nbrs[u])
        if (!eliminated[w]) ++deg;
      if (deg < best_deg) {
        best_deg = deg;
        v = u;
      }
    }

    // Collect and multiply all factors whose scope contains v.
    std::vector<Factor> involved;
    std::vector<Factor> rest;
    for (auto& f : factors) {
      if (std::binary_search(f.scope.begin(), f.scope.end(), v))
        involved.push_back(std::move(f));
      else
        rest.push_back(std::move(f));
    }
    std::set<std::uint32_t> scope_set;
    for (const auto& f : involved)
      scope_set.insert(f.scope.begin(), f.scope.end());
    std::vector<std::uint32_t> scope(scope_set.begin(), scope_set.end());

    const std::uint64_t joint_size = table_size(scope.size(), d);
    if (joint_size == std::uint64_t(-1) || joint_size > table_cap)
      return hom_bruteforce(g, h, {});

    // Joint product table, then sum out v.
    std::vector<std::uint32_t> assign(scope.size(), 0);
    std::vector<std::uint32_t> out_scope;
    for (std::uint32_t u : scope)
      if (u != v) out_scope.push_back(u);
    std::vector<Rational> out_table(table_size(out_scope.size(), d),
                                    Rational(0));

    auto position_in = [](const std::vector<std::uint32_t>& sc,
                          std::uint32_t node) {
      return std::size_t(std::lower_bound(sc.begin(), sc.end(), node) -
                         sc.begin());
    };
    std::vector<std::vector<std::size_t>> idx_maps;  // factor -> scope slots
    for (const auto& f : involved) {
      std::vector<std::size_t> m;
      for (std::uint32_t u : f.scope) m.push_back(position_in(scope, u));
      idx_maps.push_back(std::move(m));
    }
    std::vector<std::size_t> out_map;
    for (std::uint32_t u : out_scope) out_map.push_back(position_in(scope, u));

    for (std::uint64_t code = 0; code < joint_size; ++code) {
      std::uint64_t c = code;
      for (std::size_t i = scope.size(); i-- > 0;) {
        assign[i] = c % d;
        c /= d;
      }
      Rational val(1);
      for (std::size_t fi = 0; fi < involved.size() && val != 0; ++fi) {
        std::size_t pos = 0;
        for (std::size_t s : idx_maps[fi]) pos = pos * d + assign[s];
        val *= involved[fi].table[pos];
      }
      if (val == 0) continue;
      std::size_t pos = 0;
      for (std::size_t s : out_map) pos = pos * d + assign[s];
      out_table[pos] += val;
    }

    factors = std::move(rest);
    if (out_scope.empty()) {
      scalar *= out_table[0];
      if (scalar == 0) {
        // A zero component annihilates the product, but remaining
        // components still need elimination bookkeeping; short-circuit.
        return Rational(0);
      }
    } else {
      factors.push_back(Factor{std::move(out_scope), std::move(out_table)});
    }

    eliminated[v] = true;
    for (std::uint32_t a : scope_set)
      for (std::uint32_t b : scope_set)
        if (a != b && a != v && b != v) nbrs[a].insert(b);
  }

  for (const auto& f : factors) {
    if (!f.scope.empty()) throw std::logic_error("unswept factor scope");
    scalar *= f.table[0];
  }
  return scalar;
}

}  // namespace graphhom
