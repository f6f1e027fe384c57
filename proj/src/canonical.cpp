#include "graphhom/canonical.hpp"

#include <algorithm>
#include <array>
#include <cstring>

namespace graphhom {

namespace {

void push_u32(std::string& out, std::uint32_t v) {
  out.push_back(char((v >> 24) & 0xff));
  out.push_back(char((v >> 16) & 0xff));
  out.push_back(char((v >> 8) & 0xff));
  out.push_back(char(v & 0xff));
}

// Multiplicity lookup table, dense, for the permutation inner loop.
struct AdjMatrix {
  std::uint32_t n;
  std::vector<std::uint32_t> m;  // n*n

  explicit AdjMatrix(const MultiGraph& g) : n(g.node_count()), m(n * n, 0) {
    for (const auto& e : g.edges()) {
      m[e.a * n + e.b] = e.mult;
      m[e.b * n + e.a] = e.mult;
    }
  }
  std::uint32_t at(std::uint32_t i, std::uint32_t j) const {
    return m[i * n + j];
  }
};

// Isomorphism-invariant signature of an unlabeled node: degree plus the
// multiset of (labeled-neighbor slot | unlabeled-neighbor degree, mult).
std::vector<std::uint32_t> node_invariant(
    const LabeledGraph& g, const AdjMatrix& adj,
    const std::vector<std::int32_t>& label_slot, std::uint32_t v) {
  std::vector<std::uint32_t> inv;
  inv.push_back(g.graph().degree(v));
  std::vector<std::array<std::uint32_t, 3>> nbrs;
  for (std::uint32_t u = 0; u < adj.n; ++u) {
    const std::uint32_t mult = adj.at(v, u);
    if (mult == 0) continue;
    if (label_slot[u] >= 0) {
      nbrs.push_back({0u, std::uint32_t(label_slot[u]), mult});
    } else {
      nbrs.push_back({1u, g.graph().degree(u), mult});
    }
  }
  std::sort(nbrs.begin(), nbrs.end());
  for (const auto& t : nbrs) {
    inv.push_back(t[0]);
    inv.push_back(t[1]);
    inv.push_back(t[2]);
  }
  return inv;
}

}  // namespace

std::string CanonicalCode::hex() const {
  static const char* digits = "0123456789abcdef";
  std::string out;
  out.reserve(bytes.size() * 2);
  for (unsigned char c : bytes) {
    out.push_back(digits[c >> 4]);
    out.push_back(digits[c & 0xf]);
  }
  return out;
}

CanonicalCode canonical(const LabeledGraph& g) {
  const std::uint32_t n = g.graph().node_count();
  const AdjMatrix adj(g.graph());

  // Slot assignment: labels in sorted order take positions 0..k-1.
  std::vector<std::int32_t> label_slot(n, -1);
  std::vector<Label> label_names;
  {
    std::int32_t slot = 0;
    for (const auto& [l, v] : g.labels()) {  // std::map: sorted by label
      label_slot[v] = slot++;
      label_names.push_back(l);
    }
  }
  const std::uint32_t k = label_names.size();

  // Unlabeled nodes grouped into cells of equal invariant, cells ordered
  // by invariant value. Only within-cell permutations can matter.
  std::vector<std::uint32_t> unlabeled;
  for (std::uint32_t v = 0; v < n; ++v) {
    if (label_slot[v] < 0) unlabeled.push_back(v);
  }
  std::vector<std::vector<std::uint32_t>> invs(n);
  for (std::uint32_t v : unlabeled) {
    invs[v] = node_invariant(g, adj, label_slot, v);
  }
  std::sort(unlabeled.begin(), unlabeled.end(),
            [&](std::uint32_t a, std::uint32_t b) {
              return invs[a] != invs[b] ? invs[a] < invs[b] : a < b;
            });
  std::vector<std::pair<std::size_t, std::size_t>> cells;  // [begin, end)
  for (std::size_t i = 0; i < unlabeled.size();) {
    std::size_t j = i + 1;
    while (j < unlabeled.size() && invs[unlabeled[j]] == invs[unlabeled[i]])
      ++j;
    cells.emplace_back(i, j);
    i = j;
  }

  // order[slot] = original node index; slots 0..k-1 fixed by labels.
  std::vector<std::uint32_t> order(n);
  for (std::uint32_t v = 0; v < n; ++v) {
    if (label_slot[v] >= 0) order[label_slot[v]] = v;
  }

  const std::size_t tri = std::size_t(n) * (n - 1) / 2;
  std::vector<std::uint32_t> best(tri, 0), cur(tri, 0);
  bool have_best = false;

  auto consider = [&]() {
    std::size_t idx = 0;
    for (std::uint32_t i = 0; i < n; ++i)
      for (std::uint32_t j = i + 1; j < n; ++j)
        cur[idx++] = adj.at(order[i], order[j]);
    if (!have_best || cur < best) {
      best = cur;
      have_best = true;
    }
  };

  // Recurse over within-cell permutations.
  std::vector<std::uint32_t> perm = unlabeled;
  auto fill_and_recurse = [&](auto&& self, std::size_t cell) -> void {
    if (cell == cells.size()) {
      for (std::size_t i = 0; i < perm.size(); ++i) order[k + i] = perm[i];
      consider();
      return;
    }
    auto [b, e] = cells[cell];
    std::sort(perm.begin() + b, perm.begin() + e);
    do {
      self(self, cell + 1);
    } while (std::next_permutation(perm.begin() + b, perm.begin() + e));
  };
  if (n == 0) {
    have_best = true;
  } else {
    fill_and_recurse(fill_and_recurse, 0);
  }

  CanonicalCode code;
  push_u32(code.bytes, n);
  push_u32(code.bytes, k);
  for (Label l : label_names) push_u32(code.bytes, l);
  for (std::uint32_t m : best) push_u32(code.bytes, m);
  return code;
}

}  // namespace graphhom
