#include "graphhom/connmat.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>
#include <thread>

#include "graphhom/enumerate.hpp"

namespace graphhom {

bool RatMatrix::is_symmetric() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i + 1; j < cols_; ++j)
      if (at(i, j) != at(j, i)) return false;
  return true;
}

RatMatrix RatMatrix::identity(std::size_t n) {
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

namespace {

void parallel_for(std::size_t count, int threads,
                  const std::function<void(std::size_t)>& fn) {
  if (threads <= 1 || count < 2) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  std::atomic<std::size_t> next{0};
  const int workers = std::min<int>(threads, static_cast<int>(count));
  for (int t = 0; t < workers; ++t) {
    pool.emplace_back([&]() {
      while (true) {
        const std::size_t i = next.fetch_add(1);
        if (i >= count) break;
        fn(i);
      }
    });
  }
  for (auto& th : pool) th.join();
}

}  // namespace

ConnectionSlice build_slice_rows(const GraphParameter& f, std::uint32_t k,
                                 const std::vector<LabeledGraph>& rows,
                                 int threads) {
  ConnectionSlice slice;
  slice.k = k;
  slice.rows = rows;
  std::set<CanonicalCode> distinct;
  for (const auto& g : rows) {
    slice.row_codes.push_back(canonical(g));
    if (!distinct.insert(slice.row_codes.back()).second)
      throw std::invalid_argument("slice rows must be pairwise non-isomorphic");
  }

  const std::size_t n = rows.size();
  // Distinct glued classes first: entries repeat isomorphic products, and
  // parameters like chromatic are much happier evaluating each class once.
  std::map<CanonicalCode, std::size_t> class_of;
  std::vector<LabeledGraph> glued;
  std::vector<std::size_t> entry_to_class;
  entry_to_class.reserve(n * (n + 1) / 2);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      LabeledGraph prod = glue(rows[i], rows[j]);
      CanonicalCode code = canonical(prod);
      auto [it, inserted] =
          class_of.emplace(std::move(code), glued.size());
      if (inserted) glued.push_back(std::move(prod));
      entry_to_class.push_back(it->second);
    }
  }

  std::vector<Rational> values(glued.size());
  parallel_for(glued.size(), threads,
               [&](std::size_t c) { values[c] = f(glued[c]); });

  slice.entries = RatMatrix(n, n);
  std::size_t idx = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      const Rational& v = values[entry_to_class[idx++]];
      slice.entries.at(i, j) = v;
      slice.entries.at(j, i) = v;
    }
  }
  return slice;
}

ConnectionSlice build_slice(const GraphParameter& f, std::uint32_t k,
                            const SliceBudget& budget) {
  if (budget.max_nodes < k)
    throw std::invalid_argument("slice budget below k nodes");
  LabelSet labels;
  for (std::uint32_t i = 1; i <= k; ++i) labels.insert(i);
  auto rows =
      enumerate_labeled(labels, budget.max_nodes, budget.max_edges,
                        budget.multi);
  if (rows.size() > budget.row_cap) rows.resize(budget.row_cap);
  return build_slice_rows(f, k, rows, budget.threads);
}

std::size_t exact_rank(const RatMatrix& m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  if (rows == 0 || cols == 0) return 0;

  // Clear denominators row by row; rank is unchanged.
  std::vector<std::vector<Integer>> a(rows, std::vector<Integer>(cols));
  for (std::size_t i = 0; i < rows; ++i) {
    Integer lcm(1);
    for (std::size_t j = 0; j < cols; ++j) {
      const Integer den = boost::multiprecision::denominator(m.at(i, j));
      lcm = boost::multiprecision::lcm(lcm, den);
    }
    for (std::size_t j = 0; j < cols; ++j) {
      const Rational scaled = m.at(i, j) * Rational(lcm);
      a[i][j] = boost::multiprecision::numerator(scaled);
    }
  }

  std::size_t rank = 0;
  Integer prev(1);
  std::vector<std::size_t> row_of(rows), col_of(cols);
  for (std::size_t i = 0; i < rows; ++i) row_of[i] = i;
  for (std::size_t j = 0; j < cols; ++j) col_of[j] = j;

  while (rank < rows && rank < cols) {
    // Any nonzero pivot works for Bareiss; take the first.
    std::size_t pi = rows, pj = cols;
    for (std::size_t i = rank; i < rows && pi == rows; ++i)
      for (std::size_t j = rank; j < cols; ++j)
        if (a[row_of[i]][col_of[j]] != 0) {
          pi = i;
          pj = j;
          break;
        }
    if (pi == rows) break;
    std::swap(row_of[rank], row_of[pi]);
    std::swap(col_of[rank], col_of[pj]);
    const Integer& pivot = a[row_of[rank]][col_of[rank]];
    for (std::size_t i = rank + 1; i < rows; ++i) {
      for (std::size_t j = rank + 1; j < cols; ++j) {
        Integer& x = a[row_of[i]][col_of[j]];
        x = (x * pivot -
             a[row_of[i]][col_of[rank]] * a[row_of[rank]][col_of[j]]) /
            prev;
      }
      a[row_of[i]][col_of[rank]] = 0;
    }
    prev = pivot;
    ++rank;
  }
  return rank;
}

Rational witness_quadratic_form(const RatMatrix& m,
                                const std::vector<Rational>& x) {
  if (x.size() != m.rows() || m.rows() != m.cols())
    throw std::invalid_argument("witness dimension mismatch");
  Rational total(0);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (x[j] == 0) continue;
      total += x[i] * m.at(i, j) * x[j];
    }
  }
  return total;
}

PsdVerdict psd_check(const RatMatrix& m) {
  if (!m.is_symmetric())
    throw std::invalid_argument("psd_check requires a symmetric matrix");
  const std::size_t n = m.rows();

  // Schur complements tracked together with the combination vectors that
  // express each active residual direction in original coordinates; a
  // negative diagonal (or a nonzero off-diagonal in an all-zero-diagonal
  // block) hands back an exact witness.
  RatMatrix s = m;
  std::vector<std::vector<Rational>> vecs(n, std::vector<Rational>(n, 0));
  for (std::size_t i = 0; i < n; ++i) vecs[i][i] = 1;
  std::vector<std::size_t> active;
  for (std::size_t i = 0; i < n; ++i) active.push_back(i);

  PsdVerdict verdict;
  while (!active.empty()) {
    std::size_t pivot = n;
    for (std::size_t i : active) {
      if (s.at(i, i) < 0) {
        verdict.psd = false;
        verdict.witness = vecs[i];
        verdict.witness_value = s.at(i, i);
        return verdict;
      }
      if (s.at(i, i) > 0 &&
          (pivot == n || s.at(i, i) > s.at(pivot, pivot)))
        pivot = i;
    }
    if (pivot == n) {
      // All remaining diagonals are zero; PSD iff the block vanishes.
      for (std::size_t i : active) {
        for (std::size_t j : active) {
          if (i >= j || s.at(i, j) == 0) continue;
          verdict.psd = false;
          const int sign = s.at(i, j) > 0 ? 1 : -1;
          verdict.witness = vecs[i];
          for (std::size_t t = 0; t < n; ++t)
            verdict.witness[t] -= Rational(sign) * vecs[j][t];
          verdict.witness_value = -Rational(2 * sign) * s.at(i, j);
          return verdict;
        }
      }
      break;
    }
    verdict.pivots.push_back(s.at(pivot, pivot));
    std::vector<std::size_t> next;
    for (std::size_t i : active)
      if (i != pivot) next.push_back(i);
    const Rational pv = s.at(pivot, pivot);
    for (std::size_t i : next) {
      const Rational c = s.at(i, pivot) / pv;
      if (c != 0) {
        for (std::size_t t = 0; t < n; ++t)
          vecs[i][t] -= c * vecs[pivot][t];
      }
    }
    for (std::size_t i : next) {
      const Rational ci = s.at(i, pivot);
      if (ci == 0) continue;
      for (std::size_t j : next) {
        if (j < i) continue;
        const Rational upd = s.at(i, j) - ci * s.at(pivot, j) / pv;
        s.at(i, j) = upd;
        s.at(j, i) = upd;
      }
    }
    active = std::move(next);
  }
  verdict.psd = true;
  return verdict;
}

std::vector<RankProfileEntry> rank_profile(const GraphParameter& f,
                                           std::uint32_t k_max,
                                           std::uint32_t max_level,
                                           int threads,
                                           std::size_t row_cap) {
  std::vector<RankProfileEntry> profile;
  for (std::uint32_t k = 0; k <= k_max; ++k) {
    LabelSet labels;
    for (std::uint32_t i = 1; i <= k; ++i) labels.insert(i);

    RankProfileEntry entry;
    entry.k = k;

    // Cumulative rows with a stable prefix: earlier levels stay in place,
    // each level appends only its new isomorphism classes. Keeping the
    // prefix makes the per-level ranks monotone and the saturation test
    // meaningful under the row cap.
    std::vector<LabeledGraph> rows;
    std::set<CanonicalCode> seen;
    RatMatrix m;
    std::map<CanonicalCode, Rational> glue_memo;

    std::size_t prev_rank = std::size_t(-1);
    for (std::uint32_t level = 0; level <= max_level; ++level) {
      const std::uint32_t max_nodes = k + level;
      const std::uint32_t max_edges = k + level + 1;
      std::vector<LabeledGraph> fresh;
      for (auto& g : enumerate_labeled(labels, max_nodes, max_edges,
                                       f.multiplicity_sensitive)) {
        if (rows.size() + fresh.size() >= row_cap) break;
        if (seen.insert(canonical(g)).second) fresh.push_back(std::move(g));
      }
      if (fresh.empty()) break;  // cap reached or nothing new: unsaturated

      // Extend the slice in place; only new pairs are evaluated.
      const std::size_t old_n = rows.size();
      for (auto& g : fresh) rows.push_back(std::move(g));
      const std::size_t n = rows.size();
      RatMatrix grown(n, n);
      for (std::size_t i = 0; i < old_n; ++i)
        for (std::size_t j = 0; j < old_n; ++j)
          grown.at(i, j) = m.at(i, j);
      std::vector<std::tuple<std::size_t, std::size_t, CanonicalCode>> pend;
      std::map<CanonicalCode, LabeledGraph> reps;
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = std::max(i, old_n); j < n; ++j) {
          LabeledGraph prod = glue(rows[i], rows[j]);
          CanonicalCode code = canonical(prod);
          if (!glue_memo.count(code)) reps.emplace(code, std::move(prod));
          pend.emplace_back(i, j, std::move(code));
        }
      }
      std::vector<std::pair<const CanonicalCode*, const LabeledGraph*>> work;
      for (const auto& [code, rep] : reps) work.push_back({&code, &rep});
      std::vector<Rational> results(work.size());
      parallel_for(work.size(), threads, [&](std::size_t t) {
        results[t] = f(*work[t].second);
      });
      for (std::size_t t = 0; t < work.size(); ++t)
        glue_memo.emplace(*work[t].first, std::move(results[t]));
      for (const auto& [i, j, code] : pend) {
        const Rational& v = glue_memo.at(code);
        grown.at(i, j) = v;
        grown.at(j, i) = v;
      }
      m = std::move(grown);

      const std::size_t rank = exact_rank(m);
      entry.rank = rank;
      entry.rows_used = n;
      entry.max_nodes = max_nodes;
      entry.max_edges = max_edges;
      if (rank == prev_rank) {
        entry.saturated = true;
        break;
      }
      prev_rank = rank;
    }
    profile.push_back(entry);
  }
  return profile;
}

}  // namespace graphhom
