#pragma once

// Brute-force reference computations. These deliberately take different
// routes from the main algorithms: grid filling instead of free cuts,
// downward interval search instead of upward climbing, exhaustive order
// checks instead of intersections, closed forms instead of recurrences.

#include <algorithm>
#include <optional>
#include <set>
#include <vector>

#include "brinv/boxes.hpp"
#include "brinv/complex_lab.hpp"
#include "brinv/fragments.hpp"
#include "brinv/gamma.hpp"

namespace brinv::oracle {

////////////////////////////////////////////////////////////////////////
// Tilings by grid filling
////////////////////////////////////////////////////////////////////////

namespace detail {
  struct Grid {
    int               s;
    int               depth;  // cells per side = 2^depth
    std::vector<char> used;

    std::size_t side() const { return std::size_t{1} << depth; }
    std::size_t index(std::array<std::size_t, 3> const& p) const {
      std::size_t k = 0;
      for (int c = 0; c < s; ++c) {
        k = k * side() + p[c];
      }
      return k;
    }
  };

  inline void for_cells(Grid const& g, std::array<std::size_t, 3> lo,
                        std::array<std::size_t, 3> size, auto&& f) {
    std::array<std::size_t, 3> p{};
    std::array<std::size_t, 3> hi{1, 1, 1};
    for (int c = 0; c < g.s; ++c) {
      hi[c] = size[c];
    }
    for (p[0] = 0; p[0] < hi[0]; ++p[0]) {
      for (p[1] = 0; p[1] < hi[1]; ++p[1]) {
        for (p[2] = 0; p[2] < hi[2]; ++p[2]) {
          std::array<std::size_t, 3> q{lo[0] + p[0], lo[1] + p[1], lo[2] + p[2]};
          if (!f(q)) {
            return;
          }
        }
      }
    }
  }

  inline void fill(Grid& g, std::vector<Box>& current, std::size_t max_boxes,
                   std::set<std::vector<Box>>& out) {
    // First free cell in lexicographic order; it must be the low corner of
    // the box covering it.
    std::size_t const total = g.used.size();
    std::size_t       first = 0;
    while (first < total && g.used[first]) {
      ++first;
    }
    if (first == total) {
      auto sorted = current;
      std::sort(sorted.begin(), sorted.end());
      out.insert(sorted);
      return;
    }
    if (current.size() == max_boxes) {
      return;
    }
    std::array<std::size_t, 3> corner{};
    std::size_t                rest = first;
    for (int c = g.s - 1; c >= 0; --c) {
      corner[c] = rest % g.side();
      rest /= g.side();
    }
    std::array<int, 3> len{0, 0, 0};
    auto               try_box = [&](auto&& self, int c) -> void {
      if (c == g.s) {
        std::array<std::size_t, 3> size{1, 1, 1};
        Box                        b(g.s);
        for (int k = 0; k < g.s; ++k) {
          size[k] = std::size_t{1} << (g.depth - len[k]);
          b       = b.with(k + 1, Address(corner[k] >> (g.depth - len[k]), len[k]));
        }
        bool free = true;
        for_cells(g, corner, size, [&](auto const& q) {
          free = !g.used[g.index(q)];
          return free;
        });
        if (!free) {
          return;
        }
        for_cells(g, corner, size, [&](auto const& q) {
          g.used[g.index(q)] = 1;
          return true;
        });
        current.push_back(b);
        fill(g, current, max_boxes, out);
        current.pop_back();
        for_cells(g, corner, size, [&](auto const& q) {
          g.used[g.index(q)] = 0;
          return true;
        });
        return;
      }
      for (int l = 0; l <= g.depth; ++l) {
        std::size_t const step = std::size_t{1} << (g.depth - l);
        if (corner[c] % step == 0) {
          len[c] = l;
          self(self, c + 1);
        }
      }
    };
    try_box(try_box, 0);
  }
}  // namespace detail

// Every tiling of the unit cube by at most n dyadic boxes whose addresses
// have length at most depth.
inline std::vector<Pattern> all_tilings(int s, std::size_t n, int depth) {
  detail::Grid g{s, depth, {}};
  std::size_t  cells = 1;
  for (int c = 0; c < s; ++c) {
    cells *= g.side();
  }
  g.used.assign(cells, 0);
  std::set<std::vector<Box>> found;
  std::vector<Box>           current;
  detail::fill(g, current, n, found);
  std::vector<Pattern> out;
  for (auto const& v : found) {
    out.emplace_back(unchecked, s, v);
  }
  return out;
}

////////////////////////////////////////////////////////////////////////
// glb and lub
////////////////////////////////////////////////////////////////////////

// Sets N with A <= N <= every member of omega, from the downward interval.
inline std::vector<BelowSet> common_lower_bounds(BelowSet const& a,
                                                 std::span<BelowSet const> omega,
                                                 std::size_t budget = 200'000) {
  std::vector<BelowSet> out;
  for (auto& n : interval(a, budget)) {
    if (std::all_of(omega.begin(), omega.end(),
                    [&n](BelowSet const& b) { return below_leq(n, b); })) {
      out.push_back(std::move(n));
    }
  }
  return out;
}

// The maximum of the common lower bounds above a, if there is one.
inline std::optional<BelowSet> interval_max(BelowSet const& a, std::span<BelowSet const> omega,
                                            std::size_t budget = 200'000) {
  auto lows = common_lower_bounds(a, omega, budget);
  if (lows.empty()) {
    return std::nullopt;
  }
  auto best = std::max_element(lows.begin(), lows.end(),
                               [](BelowSet const& x, BelowSet const& y) {
                                 return x.size() < y.size();
                               });
  for (auto const& n : lows) {
    if (!below_leq(n, *best)) {
      return std::nullopt;
    }
  }
  return *best;
}

// Least common upper bound of p and q within universe, found by checking the
// order against every member; nullopt when there is none or it is not unique.
inline std::optional<Pattern> least_upper_bound_in(Pattern const& p, Pattern const& q,
                                                   std::span<Pattern const> universe) {
  std::vector<Pattern const*> ups;
  for (auto const& s : universe) {
    if (leq(p, s) && leq(q, s)) {
      ups.push_back(&s);
    }
  }
  for (auto const* cand : ups) {
    if (std::all_of(ups.begin(), ups.end(),
                    [cand](Pattern const* s) { return leq(*cand, *s); })) {
      return *cand;
    }
  }
  return std::nullopt;
}

////////////////////////////////////////////////////////////////////////
// Graphs
////////////////////////////////////////////////////////////////////////

// Γ_A read off the interval: its members one step below Y.
inline std::vector<Edge> gamma_edges(BelowSet const& a, std::size_t budget = 200'000) {
  std::vector<Edge> out;
  auto const        n = a.base().size();
  for (auto const& z : interval(a, budget)) {
    if (z.size() + 1 != n) {
      continue;
    }
    for (auto const& f : z.elems()) {
      if (f.is_trivial()) {
        continue;
      }
      LeafIndex low = 0, high = 0;
      Colour    colour = 0;
      for (auto const& c : f.cells()) {
        for (Colour k = 1; k <= a.colours(); ++k) {
          if (!c.formal.addr(k).empty()) {
            colour = k;
            (c.formal.addr(k).bit(0) == 0 ? low : high) = c.leaf;
          }
        }
      }
      out.push_back({std::min(low, high), std::max(low, high), colour, low < high});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Witness for *-connectivity by scanning the whole interval [A, Y).
inline bool star_connected_exhaustive(BelowSet const& a, Component const& d,
                                      std::size_t budget = 200'000) {
  if (d.edges.empty()) {
    return true;
  }
  auto const omega = edge_contractions(a, d);
  auto const top   = a.base().size();
  for (auto const& c : interval(a, budget)) {
    if (c.size() == top) {
      continue;
    }
    bool below = std::all_of(omega.begin(), omega.end(),
                             [&c](BelowSet const& z) { return below_leq(c, z); });
    if (below && all_locally_maximal(c, d)) {
      return true;
    }
  }
  return false;
}

////////////////////////////////////////////////////////////////////////
// Bound functions
////////////////////////////////////////////////////////////////////////

// mu_r(t) = (t+1)! (r+4) + 2 * sum_{k=1..t} (t+1)!/(k+1)!
inline BigInt mu_closed_form(std::size_t r, std::size_t t) {
  BigInt fact = 1;
  for (std::size_t k = 2; k <= t + 1; ++k) {
    fact *= k;
  }
  BigInt sum  = 0;
  BigInt part = 1;  // (k+1)! as k runs
  for (std::size_t k = 1; k <= t; ++k) {
    part *= (k + 1);
    sum += fact / part;
  }
  return fact * (r + 4) + 2 * sum;
}

}  // namespace brinv::oracle
