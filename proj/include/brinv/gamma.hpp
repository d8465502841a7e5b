#pragma once

// The coloured contraction graph on the leaves of Y above a set A, its
// components, *-connectivity and shape classification.

#include <algorithm>
#include <array>
#include <deque>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "brinv/boxes.hpp"
#include "brinv/errors.hpp"
#include "brinv/fragments.hpp"

namespace brinv {

// Unordered edge u < v. low_is_u records which orientation of the
// contraction lies above A.
struct Edge {
  LeafIndex u;
  LeafIndex v;
  Colour    colour;
  bool      low_is_u = true;

  SimpleContraction contraction() const {
    return low_is_u ? SimpleContraction{u, v, colour} : SimpleContraction{v, u, colour};
  }

  friend bool operator==(Edge const& a, Edge const& b) {
    return a.u == b.u && a.v == b.v && a.colour == b.colour;
  }
  // Canonical order: colour, then vertex pair.
  friend bool operator<(Edge const& a, Edge const& b) {
    return std::tie(a.colour, a.u, a.v) < std::tie(b.colour, b.u, b.v);
  }
};

struct ColouredGraph {
  std::shared_ptr<Pattern const> y;
  std::vector<Edge>              edges;  // sorted

  std::size_t vertex_count() const { return y->size(); }

  bool has_edge(LeafIndex a, LeafIndex b, Colour c) const {
    Edge e{std::min(a, b), std::max(a, b), c};
    return std::binary_search(edges.begin(), edges.end(), e);
  }

  std::optional<Edge> find(LeafIndex a, LeafIndex b) const {
    for (auto const& e : edges) {
      if (e.u == std::min(a, b) && e.v == std::max(a, b)) {
        return e;
      }
    }
    return std::nullopt;
  }
};

inline ColouredGraph gamma(BelowSet const& a) {
  ColouredGraph g{a.base_ptr(), {}};
  auto const    owner = a.owners();
  auto const&   y     = a.base_ptr();
  for (std::size_t i = 0; i < y->size(); ++i) {
    for (std::size_t j = i + 1; j < y->size(); ++j) {
      if (owner[i] != owner[j]) {
        continue;
      }
      auto const li = static_cast<LeafIndex>(i);
      auto const lj = static_cast<LeafIndex>(j);
      if (length(a, li) != length(a, lj)) {
        continue;
      }
      for (Colour c = 1; c <= y->colours(); ++c) {
        if (below_leq(a, simple_contraction(y, {li, lj, c}))) {
          g.edges.push_back({li, lj, c, true});
        } else if (below_leq(a, simple_contraction(y, {lj, li, c}))) {
          g.edges.push_back({li, lj, c, false});
        }
      }
    }
  }
  std::sort(g.edges.begin(), g.edges.end());
  return g;
}

struct Component {
  std::vector<LeafIndex> vertices;  // sorted
  std::vector<Edge>      edges;     // sorted

  bool contains(LeafIndex v) const {
    return std::binary_search(vertices.begin(), vertices.end(), v);
  }
  bool contains(Edge const& e) const {
    return std::binary_search(edges.begin(), edges.end(), e);
  }
};

// Connected components, ordered by least vertex; isolated vertices included.
inline std::vector<Component> components(ColouredGraph const& g) {
  std::vector<std::size_t> parent(g.vertex_count());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) {
      x = parent[x] = parent[parent[x]];
    }
    return x;
  };
  for (auto const& e : g.edges) {
    auto a = find(e.u), b = find(e.v);
    if (a != b) {
      parent[std::max(a, b)] = std::min(a, b);
    }
  }
  std::vector<Component>   out;
  std::vector<std::size_t> slot(g.vertex_count(), SIZE_MAX);
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    auto r = find(v);
    if (slot[r] == SIZE_MAX) {
      slot[r] = out.size();
      out.emplace_back();
    }
    out[slot[r]].vertices.push_back(static_cast<LeafIndex>(v));
  }
  for (auto const& e : g.edges) {
    out[slot[find(e.u)]].edges.push_back(e);
  }
  return out;
}

inline std::vector<BelowSet> edge_contractions(BelowSet const& a, Component const& d) {
  std::vector<BelowSet> out;
  for (auto const& e : d.edges) {
    out.push_back(simple_contraction(a.base_ptr(), e.contraction()));
  }
  return out;
}

inline BelowSet glb_of_component(BelowSet const& a, Component const& d) {
  auto omega = edge_contractions(a, d);
  return glb_above(a, omega);
}

////////////////////////////////////////////////////////////////////////
// *-connectivity
////////////////////////////////////////////////////////////////////////

struct StarResult {
  bool                    star       = false;
  bool                    degenerate = false;  // no edges
  std::optional<BelowSet> witness;
};

inline bool all_locally_maximal(BelowSet const& c, Component const& d) {
  return std::all_of(d.vertices.begin(), d.vertices.end(),
                     [&c](LeafIndex v) { return locally_maximal(c, v); });
}

// Looks for C with A <= C below every edge contraction of the component such
// that all its vertices are locally maximal with respect to C. Candidates
// are visited upward from A in breadth-first order.
inline StarResult
star_connected(BelowSet const& a, Component const& d, std::size_t budget = 100'000) {
  StarResult res;
  if (d.edges.empty()) {
    res.star       = true;
    res.degenerate = true;
    res.witness    = a;
    return res;
  }
  if (all_locally_maximal(a, d)) {
    res.star    = true;
    res.witness = a;
    return res;
  }
  // Local maximality is inherited upward, so the top of the search range
  // decides existence.
  auto const top = glb_of_component(a, d);
  if (!all_locally_maximal(top, d)) {
    return res;
  }
  std::vector<BelowSet> order{a};
  BelowSetSet           seen{a};
  for (std::size_t head = 0; head < order.size(); ++head) {
    for (auto& n : expansions_of(order[head])) {
      if (seen.contains(n) || !below_leq(n, top)) {
        continue;
      }
      if (all_locally_maximal(n, d)) {
        res.star    = true;
        res.witness = std::move(n);
        return res;
      }
      seen.insert(n);
      order.push_back(std::move(n));
      if (order.size() > budget) {
        throw Error(ErrorKind::StarSearchBudgetExceeded,
                    "witness search exceeds " + std::to_string(budget));
      }
    }
  }
  throw Error(ErrorKind::InvariantViolation, "witness search missed the range top");
}

// Decision only: existence of a witness, via the top of the search range.
inline bool is_star_connected(BelowSet const& a, Component const& d) {
  if (d.edges.empty() || all_locally_maximal(a, d)) {
    return true;
  }
  return all_locally_maximal(glb_of_component(a, d), d);
}

////////////////////////////////////////////////////////////////////////
// Shapes
////////////////////////////////////////////////////////////////////////

enum class ShapeTag { Edge, Square, OpenBook, Cube, Other };

inline char const* to_string(ShapeTag t) {
  switch (t) {
    case ShapeTag::Edge: return "Edge";
    case ShapeTag::Square: return "Square";
    case ShapeTag::OpenBook: return "OpenBook";
    case ShapeTag::Cube: return "Cube";
    case ShapeTag::Other: return "Other";
  }
  return "?";
}

struct ComponentShape {
  ShapeTag            tag = ShapeTag::Other;
  std::optional<Edge> middle;  // open books only
};

namespace detail {
  struct TemplateEdge {
    int a, b, colour;
  };

  struct ShapeTemplate {
    ShapeTag                  tag;
    int                       nv;
    std::vector<TemplateEdge> edges;
    int                       middle = -1;  // index into edges
  };

  inline std::vector<ShapeTemplate> const& shape_templates() {
    static std::vector<ShapeTemplate> const t = [] {
      std::vector<ShapeTemplate> v;
      v.push_back({ShapeTag::Edge, 2, {{0, 1, 0}}});
      v.push_back({ShapeTag::Square, 4, {{0, 1, 0}, {1, 2, 1}, {2, 3, 0}, {3, 0, 1}}});
      // Two squares sharing the edge {1,4}.
      v.push_back({ShapeTag::OpenBook,
                   6,
                   {{0, 1, 1}, {1, 2, 0}, {3, 4, 0}, {4, 5, 1}, {2, 3, 2}, {1, 4, 2}, {0, 5, 2}},
                   5});
      ShapeTemplate cube{ShapeTag::Cube, 8, {}};
      for (int x = 0; x < 8; ++x) {
        for (int k = 0; k < 3; ++k) {
          if ((x & (1 << k)) == 0) {
            cube.edges.push_back({x, x | (1 << k), k});
          }
        }
      }
      v.push_back(cube);
      return v;
    }();
    return t;
  }

  struct Matcher {
    ShapeTemplate const&           tpl;
    std::vector<LeafIndex> const&  verts;
    std::vector<std::vector<int>>  colour_of;  // target adjacency, 0 = none
    std::vector<int>               phi;        // template vertex -> target slot
    std::vector<bool>              used;
    std::array<int, 4>             kappa{-1, -1, -1, -1};  // template colour -> colour

    bool extend(int x) {
      if (x == tpl.nv) {
        return true;
      }
      for (std::size_t slot = 0; slot < verts.size(); ++slot) {
        if (used[slot]) {
          continue;
        }
        phi[x]     = static_cast<int>(slot);
        auto saved = kappa;
        if (consistent(x) && (used[slot] = true, extend(x + 1))) {
          return true;
        }
        used[slot] = false;
        kappa      = saved;
      }
      return false;
    }

    // Checks template edges between x and earlier vertices, and the absence
    // of target edges between images of non-adjacent template vertices.
    bool consistent(int x) {
      for (int w = 0; w < x; ++w) {
        int tc = -1;
        for (auto const& e : tpl.edges) {
          if ((e.a == x && e.b == w) || (e.a == w && e.b == x)) {
            tc = e.colour;
          }
        }
        int const have = colour_of[phi[x]][phi[w]];
        if (tc < 0) {
          if (have != 0) {
            return false;
          }
          continue;
        }
        if (have == 0) {
          return false;
        }
        if (kappa[tc] < 0) {
          for (int k = 0; k < 4; ++k) {
            if (kappa[k] == have) {
              return false;
            }
          }
          kappa[tc] = have;
        } else if (kappa[tc] != have) {
          return false;
        }
      }
      return true;
    }
  };
}  // namespace detail

// Template match up to an injective renaming of colours.
inline ComponentShape classify(Component const& d) {
  auto const n = d.vertices.size();
  std::vector<std::vector<int>> colour_of(n, std::vector<int>(n, 0));
  auto slot = [&d](LeafIndex v) {
    return static_cast<std::size_t>(
        std::lower_bound(d.vertices.begin(), d.vertices.end(), v) - d.vertices.begin());
  };
  for (auto const& e : d.edges) {
    auto a = slot(e.u), b = slot(e.v);
    if (colour_of[a][b] != 0) {
      return {};  // parallel edges of different colours
    }
    colour_of[a][b] = colour_of[b][a] = e.colour;
  }
  for (auto const& tpl : detail::shape_templates()) {
    if (static_cast<std::size_t>(tpl.nv) != n || tpl.edges.size() != d.edges.size()) {
      continue;
    }
    detail::Matcher m{tpl, d.vertices, colour_of, std::vector<int>(n, -1),
                      std::vector<bool>(n, false)};
    if (!m.extend(0)) {
      continue;
    }
    ComponentShape shape{tpl.tag, std::nullopt};
    if (tpl.middle >= 0) {
      auto const& te = tpl.edges[tpl.middle];
      LeafIndex   a  = d.vertices[m.phi[te.a]];
      LeafIndex   b  = d.vertices[m.phi[te.b]];
      for (auto const& e : d.edges) {
        if (e.u == std::min(a, b) && e.v == std::max(a, b)) {
          shape.middle = e;
        }
      }
    }
    return shape;
  }
  return {};
}

// The smallest sub-stack of the 8-box stack around the component whose
// union is a box. Three colours only.
inline std::vector<Box> enveloping_stack(Component const& d, Pattern const& y) {
  if (y.colours() != 3) {
    throw Error(ErrorKind::NotBoxWorld, "stacks need three colours");
  }
  std::array<std::vector<Address>, 3> choices;
  for (Colour c = 1; c <= 3; ++c) {
    Address const first = y[d.vertices.front()].addr(c);
    bool          split = false;
    for (auto v : d.vertices) {
      auto const& a = y[v].addr(c);
      if (a == first) {
        continue;
      }
      if (first.empty() || a != first.sibling()) {
        throw Error(ErrorKind::NotBoxWorld,
                    "component does not fit in a stack of 8 boxes");
      }
      split = true;
    }
    if (split) {
      choices[c - 1] = {std::min(first, first.sibling()), std::max(first, first.sibling())};
    } else {
      choices[c - 1] = {first};
    }
  }
  std::vector<Box> out;
  for (auto const& x : choices[0]) {
    for (auto const& yy : choices[1]) {
      for (auto const& z : choices[2]) {
        out.push_back(Box{x, yy, z});
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace brinv
