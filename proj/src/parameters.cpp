#include "graphhom/parameters.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

#include "graphhom/canonical.hpp"

namespace graphhom {

std::uint64_t FiniteAbelianGroup::order() const {
  std::uint64_t o = 1;
  for (std::uint32_t m : moduli) o *= m;
  return o;
}

std::vector<std::uint32_t> FiniteAbelianGroup::element(
    std::uint64_t index) const {
  std::vector<std::uint32_t> t(moduli.size());
  for (std::size_t i = moduli.size(); i-- > 0;) {
    t[i] = index % moduli[i];
    index /= moduli[i];
  }
  return t;
}

std::uint64_t FiniteAbelianGroup::index_of(
    const std::vector<std::uint32_t>& tuple) const {
  if (tuple.size() != moduli.size())
    throw std::invalid_argument("group element arity mismatch");
  std::uint64_t idx = 0;
  for (std::size_t i = 0; i < moduli.size(); ++i) {
    if (tuple[i] >= moduli[i])
      throw std::invalid_argument("group element component out of range");
    idx = idx * moduli[i] + tuple[i];
  }
  return idx;
}

std::uint64_t FiniteAbelianGroup::add(std::uint64_t x, std::uint64_t y) const {
  auto a = element(x), b = element(y);
  for (std::size_t i = 0; i < moduli.size(); ++i)
    a[i] = (a[i] + b[i]) % moduli[i];
  return index_of(a);
}

std::uint64_t FiniteAbelianGroup::neg(std::uint64_t x) const {
  auto a = element(x);
  for (std::size_t i = 0; i < moduli.size(); ++i)
    a[i] = (moduli[i] - a[i]) % moduli[i];
  return index_of(a);
}

void FlowSpec::validate() const {
  for (std::uint32_t m : group.moduli) {
    if (m < 2) throw std::invalid_argument("group moduli must be >= 2");
  }
  for (std::uint64_t s : s_elements) {
    if (s >= group.order())
      throw std::invalid_argument("S element out of range");
    if (!std::binary_search(s_elements.begin(), s_elements.end(),
                            group.neg(s)))
      throw std::invalid_argument("S is not closed under inversion");
  }
}

namespace {

// Matchings covering exactly `must_cover`; nodes outside stay unmatched.
Integer count_exact_matchings(const MultiGraph& g,
                              const std::vector<bool>& must_cover) {
  const std::uint32_t n = g.node_count();
  std::vector<bool> covered(n, false);
  auto rec = [&](auto&& self) -> Integer {
    std::uint32_t v = n;
    for (std::uint32_t u = 0; u < n; ++u) {
      if (must_cover[u] && !covered[u]) {
        v = u;
        break;
      }
    }
    if (v == n) return Integer(1);
    Integer total(0);
    for (const auto& e : g.edges()) {
      std::uint32_t other;
      if (e.a == v)
        other = e.b;
      else if (e.b == v)
        other = e.a;
      else
        continue;
      if (covered[other] || !must_cover[other]) continue;
      covered[v] = covered[other] = true;
      total += Integer(e.mult) * self(self);
      covered[v] = covered[other] = false;
    }
    return total;
  };
  return rec(rec);
}

}  // namespace

Rational perfect_matchings(const MultiGraph& g) {
  std::vector<bool> all(g.node_count(), true);
  return Rational(count_exact_matchings(g, all));
}

Rational partial_matchings(const LabeledGraph& g, const LabelSet& X) {
  for (Label l : X) {
    if (!g.has_label(l))
      throw std::invalid_argument("X is not a subset of the labels");
  }
  std::vector<bool> must_cover(g.graph().node_count(), true);
  for (const auto& [l, v] : g.labels()) {
    must_cover[v] = X.count(l) != 0;
  }
  return Rational(count_exact_matchings(g.graph(), must_cover));
}

Rational count_flows(const MultiGraph& g, const FlowSpec& spec,
                     const std::vector<bool>* flip) {
  spec.validate();
  // Expand multiplicities: each parallel copy is its own flow variable.
  struct Instance {
    std::uint32_t tail, head;
  };
  std::vector<Instance> inst;
  for (const auto& e : g.edges()) {
    for (std::uint32_t i = 0; i < e.mult; ++i)
      inst.push_back({e.a, e.b});
  }
  if (flip) {
    if (flip->size() != inst.size())
      throw std::invalid_argument("orientation mask size mismatch");
    for (std::size_t i = 0; i < inst.size(); ++i)
      if ((*flip)[i]) std::swap(inst[i].tail, inst[i].head);
  }
  if (spec.s_elements.empty()) return Rational(inst.empty() ? 1 : 0);

  const std::uint32_t n = g.node_count();
  // Order instances so nodes complete early, for pruning.
  std::vector<std::uint32_t> remaining(n, 0);
  for (const auto& e : inst) {
    ++remaining[e.tail];
    ++remaining[e.head];
  }
  std::vector<std::size_t> order;
  {
    std::vector<bool> used(inst.size(), false);
    std::vector<std::uint32_t> rem = remaining;
    for (std::size_t step = 0; step < inst.size(); ++step) {
      std::size_t best = inst.size();
      std::uint32_t best_key = std::uint32_t(-1);
      for (std::size_t i = 0; i < inst.size(); ++i) {
        if (used[i]) continue;
        std::uint32_t key = std::min(rem[inst[i].tail], rem[inst[i].head]);
        if (key < best_key) {
          best_key = key;
          best = i;
        }
      }
      used[best] = true;
      order.push_back(best);
      --rem[inst[best].tail];
      --rem[inst[best].head];
    }
  }

  std::vector<std::uint64_t> boundary(n, 0);  // net inflow per node
  std::vector<std::uint32_t> left = remaining;
  const auto& grp = spec.group;
  Integer count(0);
  auto rec = [&](auto&& self, std::size_t pos) -> void {
    if (pos == order.size()) {
      count += 1;
      return;
    }
    const auto& e = inst[order[pos]];
    --left[e.tail];
    --left[e.head];
    for (std::uint64_t s : spec.s_elements) {
      boundary[e.head] = grp.add(boundary[e.head], s);
      boundary[e.tail] = grp.add(boundary[e.tail], grp.neg(s));
      const bool ok = (left[e.head] > 0 || boundary[e.head] == 0) &&
                      (left[e.tail] > 0 || boundary[e.tail] == 0);
      if (ok) self(self, pos + 1);
      boundary[e.head] = grp.add(boundary[e.head], grp.neg(s));
      boundary[e.tail] = grp.add(boundary[e.tail], s);
    }
    ++left[e.tail];
    ++left[e.head];
  };
  // Isolated nodes impose nothing; nodes with edges are checked on their
  // last incident instance.
  rec(rec, 0);
  return Rational(count);
}

WeightedTarget flow_target(const FlowSpec& spec) {
  spec.validate();
  const auto& grp = spec.group;
  const std::uint64_t m = grp.order();
  WeightedTarget h;
  h.d = static_cast<std::uint32_t>(m);
  h.alpha.assign(h.d, Rational(1, Integer(m)));
  h.beta.assign(h.d, std::vector<Rational>(h.d, Rational(0)));

  const bool all_two =
      std::all_of(grp.moduli.begin(), grp.moduli.end(),
                  [](std::uint32_t mod) { return mod == 2; });

  for (std::uint64_t x = 0; x < m; ++x) {
    const auto cx = grp.element(x);
    for (std::uint64_t y = x; y < m; ++y) {
      const auto cy = grp.element(y);
      Rational value;
      if (all_two) {
        // chi_a(s) = (-1)^(a.s); the sum is an exact integer.
        Integer sum(0);
        for (std::uint64_t s : spec.s_elements) {
          const auto es = grp.element(s);
          std::uint32_t dot = 0;
          for (std::size_t i = 0; i < es.size(); ++i)
            dot += (cy[i] + 2 - cx[i]) % 2 * es[i];
          sum += (dot % 2 == 0) ? 1 : -1;
        }
        value = Rational(sum);
      } else {
        std::complex<double> sum(0.0, 0.0);
        for (std::uint64_t s : spec.s_elements) {
          const auto es = grp.element(s);
          double angle = 0.0;
          for (std::size_t i = 0; i < es.size(); ++i) {
            const double delta =
                double(cy[i]) - double(cx[i]);  // chi_x^{-1} chi_y
            angle += 2.0 * M_PI * delta * es[i] / grp.moduli[i];
          }
          sum += std::complex<double>(std::cos(angle), std::sin(angle));
        }
        if (std::fabs(sum.imag()) > 1e-9)
          throw std::runtime_error(
              "character sum has nonzero imaginary part; S is not "
              "inversion-closed");
        auto snapped = snap_to_rational(sum.real(), Integer(m), 1e-9);
        if (!snapped)
          throw std::runtime_error(
              "character sum is not rational within tolerance; this flow "
              "alphabet has no exact-rational target");
        value = *snapped;
      }
      h.beta[x][y] = value;
      h.beta[y][x] = value;
    }
  }
  h.validate();
  return h;
}

namespace {

Rational chromatic_rec(const MultiGraph& simple, const Rational& x,
                       std::map<CanonicalCode, Rational>& memo) {
  if (simple.edges().empty())
    return rational_pow(x, simple.node_count());
  const CanonicalCode code = canonical(LabeledGraph(simple, {}));
  auto it = memo.find(code);
  if (it != memo.end()) return it->second;

  const Edge e = simple.edges().front();
  // Deletion.
  std::vector<Edge> rest(simple.edges().begin() + 1, simple.edges().end());
  MultiGraph deleted(simple.node_count(), rest);
  // Contraction: merge e.b into e.a, renumber, collapse parallels.
  std::vector<Edge> contracted;
  bool loop = false;
  auto remap = [&](std::uint32_t v) -> std::uint32_t {
    if (v == e.b) v = e.a;
    return v > e.b ? v - 1 : v;
  };
  for (const auto& f : rest) {
    std::uint32_t a = remap(f.a), b = remap(f.b);
    if (a == b) {
      loop = true;
      break;
    }
    contracted.push_back(Edge{std::min(a, b), std::max(a, b), 1});
  }
  Rational value = chromatic_rec(deleted.simple_support(), x, memo);
  if (!loop) {
    MultiGraph merged(simple.node_count() - 1, contracted);
    value -= chromatic_rec(merged.simple_support(), x, memo);
  }
  // A loop would mean no proper coloring: the contracted branch is 0.

  memo.emplace(code, value);
  return value;
}

}  // namespace

Rational chromatic(const MultiGraph& g, const Rational& x) {
  std::map<CanonicalCode, Rational> memo;
  return chromatic_rec(g.simple_support(), x, memo);
}

Rational simple_support_param(const MultiGraph& g) {
  const std::uint64_t e = g.simple_support().edge_count();
  return Rational(Integer(1), Integer(1) << e);
}

Rational eulerian_indicator(const MultiGraph& g) {
  for (std::uint32_t v = 0; v < g.node_count(); ++v) {
    if (g.degree(v) % 2 != 0) return Rational(0);
  }
  return Rational(1);
}

Integer bell_bounded(std::uint32_t k, std::uint32_t q) {
  // Stirling second kind, summed over block counts <= q.
  std::vector<std::vector<Integer>> s(k + 1,
                                      std::vector<Integer>(k + 1, Integer(0)));
  s[0][0] = 1;
  for (std::uint32_t n = 1; n <= k; ++n)
    for (std::uint32_t j = 1; j <= n; ++j)
      s[n][j] = s[n - 1][j - 1] + Integer(j) * s[n - 1][j];
  Integer total(0);
  for (std::uint32_t j = 0; j <= std::min(k, q); ++j) total += s[k][j];
  return total;
}

GraphParameter make_matchings_param() {
  return GraphParameter{"matchings", perfect_matchings, true, true};
}

GraphParameter make_eulerian_param() {
  return GraphParameter{"eulerian", eulerian_indicator, true, true};
}

GraphParameter make_simple_support_param() {
  return GraphParameter{"simple-support", simple_support_param, true, true};
}

GraphParameter make_chromatic_param(const Rational& x) {
  return GraphParameter{
      "chromatic@" + rational_to_string(x),
      [x](const MultiGraph& g) { return chromatic(g, x); }, true, false};
}

GraphParameter make_hom_param(const WeightedTarget& h, std::string name) {
  h.validate();
  if (name.empty()) name = "hom@d" + std::to_string(h.d);
  return GraphParameter{
      std::move(name), [h](const MultiGraph& g) { return hom_fast(g, h); },
      true, true};
}

GraphParameter make_flows_param(const FlowSpec& spec) {
  spec.validate();
  return GraphParameter{
      "flows", [spec](const MultiGraph& g) { return count_flows(g, spec); },
      true, true};
}

GraphParameter parameter_by_name(const std::string& name) {
  if (name == "matchings") return make_matchings_param();
  if (name == "eulerian") return make_eulerian_param();
  if (name == "simple-support") return make_simple_support_param();
  if (name.rfind("chromatic@", 0) == 0)
    return make_chromatic_param(parse_rational(name.substr(10)));
  if (name.rfind("hom@", 0) == 0) {
    const std::string arg = name.substr(4);
    if (arg == ":loop-half")
      return make_hom_param(single_loop_target(Rational(1, 2)),
                            "hom@:loop-half");
    if (arg == ":loop-two")
      return make_hom_param(single_loop_target(Rational(2)), "hom@:loop-two");
    if (!arg.empty() && arg[0] == ':')
      throw std::invalid_argument("unknown built-in target: " + arg);
    return make_hom_param(read_target_file(arg), name);
  }
  if (name.rfind("flows@", 0) == 0)
    return make_flows_param(read_flow_spec_file(name.substr(6)));
  throw std::invalid_argument("unknown parameter: " + name);
}

FlowSpec parse_flow_spec(const std::string& text) {
  std::istringstream in(text);
  std::string word;
  if (!(in >> word) || word != "group")
    throw std::invalid_argument("flow spec must start with 'group'");
  std::string mods;
  if (!(in >> mods)) throw std::invalid_argument("missing group moduli");
  FlowSpec spec;
  {
    std::istringstream ms(mods);
    std::string tok;
    while (std::getline(ms, tok, ','))
      spec.group.moduli.push_back(std::stoul(tok));
  }
  if (!(in >> word) || word != "S")
    throw std::invalid_argument("flow spec needs an 'S' line");
  std::string tuple;
  while (in >> tuple) {
    std::vector<std::uint32_t> t;
    std::istringstream ts(tuple);
    std::string tok;
    while (std::getline(ts, tok, ',')) t.push_back(std::stoul(tok));
    spec.s_elements.push_back(spec.group.index_of(t));
  }
  std::sort(spec.s_elements.begin(), spec.s_elements.end());
  spec.s_elements.erase(
      std::unique(spec.s_elements.begin(), spec.s_elements.end()),
      spec.s_elements.end());
  spec.validate();
  return spec;
}

FlowSpec read_flow_spec_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open flow spec: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_flow_spec(buf.str());
}

std::string flow_spec_to_string(const FlowSpec& spec) {
  std::ostringstream out;
  out << "group ";
  for (std::size_t i = 0; i < spec.group.moduli.size(); ++i) {
    if (i) out << ',';
    out << spec.group.moduli[i];
  }
  out << "\nS";
  for (std::uint64_t s : spec.s_elements) {
    out << ' ';
    const auto t = spec.group.element(s);
    for (std::size_t i = 0; i < t.size(); ++i) {
      if (i) out << ',';
      out << t[i];
    }
  }
  out << '\n';
  return out.str();
}

}  // namespace graphhom
