#pragma once

// Seeded generators for patterns, below-sets, chains and group elements.

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "brinv/boxes.hpp"
#include "brinv/brin_group.hpp"
#include "brinv/fragments.hpp"
#include "brinv/pushing.hpp"

namespace brinv {

using Rng = std::mt19937_64;

inline std::size_t pick(Rng& rng, std::size_t n) {
  return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
}

inline bool coin(Rng& rng, double p) { return std::bernoulli_distribution(p)(rng); }

// n boxes reached from the root by uniformly chosen expansions.
inline Pattern random_pattern(int s, std::size_t n, Rng& rng, int max_len = 8) {
  auto p = root_pattern(s);
  while (p.size() < n) {
    auto const& b = p[pick(rng, p.size())];
    Colour      c = static_cast<Colour>(1 + pick(rng, static_cast<std::size_t>(s)));
    if (b.addr(c).length() < max_len) {
      p = expand(p, b, c);
    }
  }
  return p;
}

// One random contraction of w. With probability box_bias a geometric
// sibling contraction is used when available; otherwise any ordered pair in
// any colour.
inline BelowSet random_contraction(BelowSet const& w, Rng& rng, double box_bias) {
  if (coin(rng, box_bias)) {
    std::vector<std::tuple<std::size_t, std::size_t, Colour>> moves;
    std::vector<std::optional<Box>> boxes;
    for (auto const& f : w.elems()) {
      boxes.push_back(as_box(f, w.base()));
    }
    for (std::size_t i = 0; i < w.size(); ++i) {
      for (std::size_t j = 0; j < w.size(); ++j) {
        if (i != j && boxes[i] && boxes[j]) {
          if (auto c = sibling_colour(*boxes[i], *boxes[j])) {
            moves.emplace_back(i, j, *c);
          }
        }
      }
    }
    if (!moves.empty()) {
      auto [i, j, c] = moves[pick(rng, moves.size())];
      return contract_elems(w, i, j, c);
    }
  }
  std::size_t i = pick(rng, w.size());
  std::size_t j = pick(rng, w.size() - 1);
  if (j >= i) {
    ++j;
  }
  Colour c = static_cast<Colour>(1 + pick(rng, static_cast<std::size_t>(w.colours())));
  return contract_elems(w, i, j, c);
}

// A set obtained from Y by `steps` random contractions (at least one).
inline BelowSet random_below(std::shared_ptr<Pattern const> const& y, std::size_t steps,
                             Rng& rng, double box_bias) {
  auto w = BelowSet::top(y);
  steps  = std::clamp<std::size_t>(steps, 1, y->size() - 1);
  for (std::size_t k = 0; k < steps; ++k) {
    w = random_contraction(w, rng, box_bias);
  }
  return w;
}

// A random set in [a, Y]: a followed by random expansions.
inline BelowSet random_above(BelowSet const& a, Rng& rng, std::size_t max_steps) {
  auto w     = a;
  auto steps = pick(rng, max_steps + 1);
  for (std::size_t k = 0; k < steps; ++k) {
    auto next = expansions_of(w);
    if (next.empty()) {
      break;
    }
    w = next[pick(rng, next.size())];
  }
  return w;
}

// A chain A_t < ... < A_0 < Y, least vertex first.
inline Chain random_chain(std::shared_ptr<Pattern const> const& y, std::size_t t, Rng& rng,
                          double box_bias) {
  Chain c;
  auto  w = BelowSet::top(y);
  std::vector<BelowSet> top_down;
  for (std::size_t k = 0; k <= t && w.size() > 1; ++k) {
    auto steps = 1 + pick(rng, 2);
    for (std::size_t m = 0; m < steps && w.size() > 1; ++m) {
      w = random_contraction(w, rng, box_bias);
    }
    top_down.push_back(w);
  }
  c.vertices.assign(top_down.rbegin(), top_down.rend());
  return c;
}

inline GroupElement random_element(int s, std::size_t n, Rng& rng, int max_len = 6) {
  auto d = random_pattern(s, n, rng, max_len);
  auto r = random_pattern(s, n, rng, max_len);
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<std::pair<Box, Box>> pairs;
  for (std::size_t i = 0; i < n; ++i) {
    pairs.emplace_back(d[i], r[perm[i]]);
  }
  return make_element(d, r, pairs);
}

}  // namespace brinv
