#pragma once

// Desk-scale K_Y slices, their order complexes and integer homology, and the
// bound functions nu, mu, alpha.

#include <algorithm>
#include <chrono>
#include <climits>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "brinv/boxes.hpp"
#include "brinv/brin_group.hpp"
#include "brinv/errors.hpp"
#include "brinv/fragments.hpp"

namespace brinv {

using BigInt = boost::multiprecision::cpp_int;

////////////////////////////////////////////////////////////////////////
// Poset slices
////////////////////////////////////////////////////////////////////////

struct SliceOptions {
  bool        box_only = false;
  std::size_t budget   = 20'000;
};

struct PosetSlice {
  std::shared_ptr<Pattern const>     y;
  std::vector<BelowSet>              vertices;
  std::vector<std::vector<uint32_t>> above;  // strict: above[v] = {w : v < w}

  std::size_t size() const { return vertices.size(); }
};

namespace detail {
  // Contractions of w that stay in the box world: geometric siblings only.
  inline std::vector<BelowSet> box_contractions_of(BelowSet const& w) {
    std::vector<BelowSet> out;
    std::vector<Box>      boxes;
    for (auto const& f : w.elems()) {
      boxes.push_back(*as_box(f, w.base()));
    }
    for (std::size_t i = 0; i < w.size(); ++i) {
      for (std::size_t j = 0; j < w.size(); ++j) {
        if (i == j) {
          continue;
        }
        if (auto c = sibling_colour(boxes[i], boxes[j])) {
          out.push_back(contract_elems(w, i, j, *c));
        }
      }
    }
    return out;
  }
}  // namespace detail

// All sets strictly below Y, by downward search over simple contractions.
inline PosetSlice k_y(std::shared_ptr<Pattern const> y, SliceOptions opts = {}) {
  PosetSlice slice;
  slice.y  = y;
  auto top = BelowSet::top(y);

  std::vector<BelowSet>                     order{top};
  std::unordered_map<BelowSet, uint32_t>    index{{top, 0}};
  std::vector<std::vector<uint32_t>>        covers_up(1);  // covers_up[v] = covers of v
  for (std::size_t head = 0; head < order.size(); ++head) {
    auto next = opts.box_only ? detail::box_contractions_of(order[head])
                              : contractions_of(order[head]);
    for (auto& n : next) {
      auto [it, fresh] = index.try_emplace(n, static_cast<uint32_t>(order.size()));
      if (fresh) {
        order.push_back(std::move(n));
        covers_up.emplace_back();
        if (order.size() > opts.budget + 1) {
          throw Error(ErrorKind::BudgetExceeded,
                      "slice exceeds " + std::to_string(opts.budget) + " vertices");
        }
      }
      covers_up[it->second].push_back(static_cast<uint32_t>(head));
    }
  }
  // Drop Y (index 0) and close the cover relation transitively.
  std::size_t const n = order.size() - 1;
  slice.vertices.assign(std::make_move_iterator(order.begin() + 1),
                        std::make_move_iterator(order.end()));
  slice.above.resize(n);
  // Vertices were discovered top-down, so every cover of v has a smaller
  // discovery index; process in discovery order.
  std::size_t const                  words = (n + 63) / 64;
  std::vector<std::vector<uint64_t>> reach(n, std::vector<uint64_t>(words, 0));
  for (std::size_t v = 0; v < n; ++v) {
    for (auto w : covers_up[v + 1]) {
      if (w == 0) {
        continue;
      }
      auto const wi = w - 1;
      reach[v][wi / 64] |= uint64_t{1} << (wi % 64);
      for (std::size_t k = 0; k < words; ++k) {
        reach[v][k] |= reach[wi][k];
      }
    }
    for (std::size_t k = 0; k < n; ++k) {
      if ((reach[v][k / 64] >> (k % 64)) & 1U) {
        slice.above[v].push_back(static_cast<uint32_t>(k));
      }
    }
  }
  return slice;
}

////////////////////////////////////////////////////////////////////////
// Order complexes
////////////////////////////////////////////////////////////////////////

using Simplex = std::vector<uint32_t>;  // chain from least vertex upward

struct OrderComplex {
  std::vector<std::vector<Simplex>> by_dim;

  std::size_t count(std::size_t d) const { return d < by_dim.size() ? by_dim[d].size() : 0; }
  std::size_t total() const {
    std::size_t n = 0;
    for (auto const& v : by_dim) {
      n += v.size();
    }
    return n;
  }
};

namespace detail {
  inline void grow_chains(PosetSlice const& slice, Simplex& chain, std::size_t max_dim,
                          OrderComplex& cx, std::size_t budget) {
    auto const d = chain.size() - 1;
    if (cx.by_dim.size() <= d) {
      cx.by_dim.resize(d + 1);
    }
    cx.by_dim[d].push_back(chain);
    if (cx.total() > budget) {
      throw Error(ErrorKind::BudgetExceeded,
                  "order complex exceeds " + std::to_string(budget) + " simplices");
    }
    if (d == max_dim) {
      return;
    }
    for (auto w : slice.above[chain.back()]) {
      chain.push_back(w);
      grow_chains(slice, chain, max_dim, cx, budget);
      chain.pop_back();
    }
  }
}  // namespace detail

// Chains of the slice up to dimension max_dim whose least vertex satisfies
// keep.
template <class Keep>
OrderComplex order_complex(PosetSlice const& slice, std::size_t max_dim, Keep&& keep,
                           std::size_t budget = 5'000'000) {
  OrderComplex cx;
  cx.by_dim.resize(1);
  for (uint32_t v = 0; v < slice.size(); ++v) {
    if (!keep(slice.vertices[v])) {
      continue;
    }
    Simplex chain{v};
    detail::grow_chains(slice, chain, max_dim, cx, budget);
  }
  for (auto& level : cx.by_dim) {
    std::sort(level.begin(), level.end());
  }
  return cx;
}

inline OrderComplex order_complex(PosetSlice const& slice, std::size_t max_dim,
                                  std::size_t budget = 5'000'000) {
  return order_complex(slice, max_dim, [](BelowSet const&) { return true; }, budget);
}

// Chains whose least vertex involves at most r leaves of Y.
inline OrderComplex sigma_r(PosetSlice const& slice, std::size_t r, std::size_t max_dim,
                            std::size_t budget = 5'000'000) {
  return order_complex(
      slice, max_dim, [r](BelowSet const& w) { return involves(w) <= r; }, budget);
}

////////////////////////////////////////////////////////////////////////
// Integer homology
////////////////////////////////////////////////////////////////////////

// Column-major sparse integer matrix.
struct SparseMatrix {
  std::size_t                                     rows = 0;
  std::vector<std::vector<std::pair<uint32_t, long long>>> cols;
};

// Boundary of dimension d: d-simplices to (d-1)-simplices.
inline SparseMatrix boundary(OrderComplex const& cx, std::size_t d) {
  SparseMatrix m;
  if (d == 0 || d >= cx.by_dim.size()) {
    m.rows = d == 0 ? 0 : cx.count(d - 1);
    return m;
  }
  auto const& faces = cx.by_dim[d - 1];
  m.rows            = faces.size();
  for (auto const& simplex : cx.by_dim[d]) {
    std::vector<std::pair<uint32_t, long long>> col;
    for (std::size_t i = 0; i < simplex.size(); ++i) {
      Simplex face;
      for (std::size_t k = 0; k < simplex.size(); ++k) {
        if (k != i) {
          face.push_back(simplex[k]);
        }
      }
      auto it = std::lower_bound(faces.begin(), faces.end(), face);
      if (it == faces.end() || *it != face) {
        throw Error(ErrorKind::InvariantViolation, "complex is not closed under faces");
      }
      col.emplace_back(static_cast<uint32_t>(it - faces.begin()), i % 2 == 0 ? 1 : -1);
    }
    std::sort(col.begin(), col.end());
    m.cols.push_back(std::move(col));
  }
  return m;
}

// Checks that the composite of two consecutive boundary maps vanishes.
inline bool boundary_squares_to_zero(SparseMatrix const& lower, SparseMatrix const& upper) {
  for (auto const& col : upper.cols) {
    std::map<uint32_t, long long> acc;
    for (auto const& [r, v] : col) {
      for (auto const& [r2, v2] : lower.cols[r]) {
        acc[r2] += v * v2;
      }
    }
    for (auto const& [r, v] : acc) {
      if (v != 0) {
        return false;
      }
    }
  }
  return true;
}

// Nonzero invariant factors of a dense integer matrix.
inline std::vector<BigInt> smith_invariants(std::vector<std::vector<BigInt>> a) {
  std::vector<BigInt> out;
  std::size_t const   rows = a.size();
  std::size_t const   cols = rows ? a[0].size() : 0;
  std::size_t         t    = 0;
  while (t < rows && t < cols) {
    // Pivot: the nonzero entry of least magnitude in the remaining block.
    std::optional<std::pair<std::size_t, std::size_t>> piv;
    for (std::size_t i = t; i < rows; ++i) {
      for (std::size_t j = t; j < cols; ++j) {
        if (a[i][j] != 0 && (!piv || abs(a[i][j]) < abs(a[piv->first][piv->second]))) {
          piv = {i, j};
        }
      }
    }
    if (!piv) {
      break;
    }
    std::swap(a[t], a[piv->first]);
    for (auto& row : a) {
      std::swap(row[t], row[piv->second]);
    }
    bool clean = false;
    while (!clean) {
      clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (a[i][t] == 0) {
          continue;
        }
        BigInt q = a[i][t] / a[t][t];
        for (std::size_t j = t; j < cols; ++j) {
          a[i][j] -= q * a[t][j];
        }
        if (a[i][t] != 0) {
          std::swap(a[t], a[i]);
          clean = false;
        }
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (a[t][j] == 0) {
          continue;
        }
        BigInt q = a[t][j] / a[t][t];
        for (std::size_t i = t; i < rows; ++i) {
          a[i][j] -= q * a[i][t];
        }
        if (a[t][j] != 0) {
          for (auto& row : a) {
            std::swap(row[t], row[j]);
          }
          clean = false;
        }
      }
      if (clean) {
        // Divisibility: fold a non-multiple from the block into row t.
        for (std::size_t i = t + 1; i < rows && clean; ++i) {
          for (std::size_t j = t + 1; j < cols && clean; ++j) {
            if (a[i][j] % a[t][t] != 0) {
              for (std::size_t k = t; k < cols; ++k) {
                a[t][k] += a[i][k];
              }
              clean = false;
            }
          }
        }
      }
    }
    out.push_back(abs(a[t][t]));
    ++t;
  }
  return out;
}

struct RankInfo {
  std::size_t         rank = 0;
  std::vector<BigInt> torsion;  // invariant factors > 1
};

// Rank and torsion of an integer matrix: unit pivots are eliminated sparsely,
// the remainder goes through a dense Smith normal form.
inline RankInfo integer_rank(SparseMatrix m, std::size_t dense_budget = 4'000'000) {
  RankInfo info;
  // Row index -> columns holding an entry there.
  std::vector<std::vector<uint32_t>> row_cols(m.rows);
  for (uint32_t c = 0; c < m.cols.size(); ++c) {
    for (auto const& [r, v] : m.cols[c]) {
      row_cols[r].push_back(c);
    }
  }
  std::vector<bool> col_dead(m.cols.size(), false), row_dead(m.rows, false);
  auto entry = [&m](uint32_t c, uint32_t r) -> long long {
    auto const& col = m.cols[c];
    auto it = std::lower_bound(col.begin(), col.end(), std::pair<uint32_t, long long>{r, LLONG_MIN});
    return it != col.end() && it->first == r ? it->second : 0;
  };
  bool overflow = false;
  bool progress = true;
  while (progress && !overflow) {
    progress = false;
    for (uint32_t c = 0; c < m.cols.size() && !overflow; ++c) {
      if (col_dead[c]) {
        continue;
      }
      std::optional<std::pair<uint32_t, long long>> piv;
      for (auto const& [r, v] : m.cols[c]) {
        if (!row_dead[r] && (v == 1 || v == -1)) {
          piv = {r, v};
          break;
        }
      }
      if (!piv) {
        continue;
      }
      auto const [pr, pv] = *piv;
      auto const targets  = row_cols[pr];
      for (auto c2 : targets) {
        if (c2 == c || col_dead[c2]) {
          continue;
        }
        long long const a = entry(c2, pr);
        if (a == 0) {
          continue;
        }
        long long const q = a * pv;  // pv is a unit
        std::map<uint32_t, long long> merged;
        for (auto const& [r, v] : m.cols[c2]) {
          merged[r] += v;
        }
        for (auto const& [r, v] : m.cols[c]) {
          long long prod = 0;
          if (__builtin_mul_overflow(q, v, &prod)
              || __builtin_sub_overflow(merged[r], prod, &merged[r])) {
            overflow = true;
          }
        }
        std::vector<std::pair<uint32_t, long long>> col;
        for (auto const& [r, v] : merged) {
          if (v != 0) {
            col.emplace_back(r, v);
            if (std::find(row_cols[r].begin(), row_cols[r].end(), c2) == row_cols[r].end()) {
              row_cols[r].push_back(c2);
            }
          }
        }
        m.cols[c2] = std::move(col);
      }
      col_dead[c] = true;
      row_dead[pr] = true;
      ++info.rank;
      progress = true;
    }
  }
  // Remaining block, restricted to live rows and columns.
  std::vector<uint32_t> live_rows, live_cols;
  for (uint32_t r = 0; r < m.rows; ++r) {
    if (!row_dead[r]) {
      live_rows.push_back(r);
    }
  }
  for (uint32_t c = 0; c < m.cols.size(); ++c) {
    if (col_dead[c]) {
      continue;
    }
    bool any = false;
    for (auto const& [r, v] : m.cols[c]) {
      if (!row_dead[r] && v != 0) {
        any = true;
      }
    }
    if (any) {
      live_cols.push_back(c);
    }
  }
  if (overflow) {
    throw Error(ErrorKind::BudgetExceeded, "sparse elimination overflowed 64 bits");
  }
  if (live_cols.empty()) {
    return info;
  }
  if (live_rows.size() * live_cols.size() > dense_budget) {
    throw Error(ErrorKind::BudgetExceeded, "dense Smith block too large");
  }
  std::vector<std::vector<BigInt>> dense(live_rows.size(),
                                         std::vector<BigInt>(live_cols.size(), 0));
  for (std::size_t j = 0; j < live_cols.size(); ++j) {
    for (auto const& [r, v] : m.cols[live_cols[j]]) {
      if (row_dead[r]) {
        continue;
      }
      auto i = std::lower_bound(live_rows.begin(), live_rows.end(), r) - live_rows.begin();
      dense[i][j] = v;
    }
  }
  for (auto const& f : smith_invariants(std::move(dense))) {
    ++info.rank;
    if (f > 1) {
      info.torsion.push_back(f);
    }
  }
  return info;
}

struct Homology {
  std::vector<std::size_t>         betti;
  std::vector<std::vector<BigInt>> torsion;  // torsion[d] = factors of H_d
};

// Betti numbers up to max_dim; cx must contain simplices up to max_dim + 1.
inline Homology homology(OrderComplex const& cx, std::size_t max_dim) {
  Homology              h;
  std::vector<RankInfo> ranks(max_dim + 3);
  for (std::size_t d = 1; d <= max_dim + 1; ++d) {
    auto lower = boundary(cx, d);
    if (d >= 2 && !boundary_squares_to_zero(boundary(cx, d - 1), lower)) {
      throw Error(ErrorKind::InvariantViolation, "boundary of boundary is nonzero");
    }
    ranks[d] = integer_rank(std::move(lower));
  }
  for (std::size_t d = 0; d <= max_dim; ++d) {
    std::size_t const n = cx.count(d);
    h.betti.push_back(n - ranks[d].rank - ranks[d + 1].rank);
    h.torsion.push_back(ranks[d + 1].torsion);
  }
  return h;
}

inline std::vector<std::size_t> betti(OrderComplex const& cx, std::size_t max_dim) {
  return homology(cx, max_dim).betti;
}

////////////////////////////////////////////////////////////////////////
// Bound functions
////////////////////////////////////////////////////////////////////////

struct Bounds {
  BigInt nu;
  BigInt mu;
  BigInt alpha;
};

inline BigInt mu(std::size_t r, std::size_t t) {
  BigInt m = r + 4;
  for (std::size_t k = 1; k <= t; ++k) {
    m = 2 + BigInt(k + 1) * m;
  }
  return m;
}

inline BigInt nu(std::size_t r, std::size_t t) { return mu(r, t); }

inline BigInt alpha(std::size_t t) { return nu(4 * t, t); }

inline Bounds nu_mu_alpha(std::size_t r, std::size_t t) {
  return {nu(r, t), mu(r, t), alpha(t)};
}

////////////////////////////////////////////////////////////////////////
// Filtration statistics
////////////////////////////////////////////////////////////////////////

struct FiltrationRow {
  std::size_t size      = 0;
  std::size_t patterns  = 0;
  std::size_t pairs     = 0;  // same-size pairs joined by an element
  bool        one_orbit = true;
};

// Per size: number of hierarchical patterns, and a check that consecutive
// same-size patterns are joined by a group element (up to pair_budget pairs).
inline std::vector<FiltrationRow>
filtration_stats(int s, std::size_t n, std::size_t pair_budget = 2000,
                 std::size_t budget = 2'000'000) {
  auto const all = enumerate_patterns(s, n, budget);
  std::vector<FiltrationRow> rows(n);
  std::vector<std::vector<Pattern const*>> by_size(n + 1);
  for (auto const& p : all) {
    by_size[p.size()].push_back(&p);
  }
  for (std::size_t k = 1; k <= n; ++k) {
    auto& row    = rows[k - 1];
    row.size     = k;
    row.patterns = by_size[k].size();
    auto const& v = by_size[k];
    std::vector<std::size_t> sigma(k);
    std::iota(sigma.begin(), sigma.end(), 0);
    for (std::size_t i = 1; i < v.size() && row.pairs < pair_budget; ++i) {
      auto g = transitive_element(*v[0], *v[i], sigma);
      for (std::size_t b = 0; b < k; ++b) {
        if (g.apply_box((*v[0])[b]) != (*v[i])[b]) {
          row.one_orbit = false;
        }
      }
      ++row.pairs;
    }
  }
  return rows;
}

}  // namespace brinv
