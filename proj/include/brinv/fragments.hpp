#pragma once

// Elements and admissible sets below a fixed pattern Y.
//
// An element w with Y-leaves below it is stored by where each of its leaves
// sits inside w: a cell (formal box of the unit cube, leaf of Y). The leaf's
// position is the word of halvings taking w to the leaf, modulo commutation,
// which is a box address. The cells of a fragment hierarchically tile the
// formal cube. This leaf-level description is unique for a given element, so
// it is used as the canonical form; merging sibling cells whose labels are
// geometric siblings gives a coarser presentation (see merge_cells) which is
// not unique in general.

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <queue>
#include <random>
#include <set>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "brinv/boxes.hpp"
#include "brinv/errors.hpp"

namespace brinv {

// Index of a box in the sorted box list of the base pattern.
using LeafIndex = std::uint8_t;

inline constexpr std::size_t kMaxLeaves = 255;

struct Cell {
  LeafIndex leaf;
  Box       formal;

  friend bool operator==(Cell const&, Cell const&) = default;
  friend auto operator<=>(Cell const& a, Cell const& b) {
    if (auto c = a.leaf <=> b.leaf; c != 0) {
      return c;
    }
    return a.formal <=> b.formal;
  }
};

////////////////////////////////////////////////////////////////////////
// Fragment
////////////////////////////////////////////////////////////////////////

class Fragment {
 public:
  Fragment() = default;

  // Validates distinct leaves and a hierarchical formal tiling.
  Fragment(int s, std::vector<Cell> cells) : _cells(std::move(cells)) {
    std::sort(_cells.begin(), _cells.end());
    if (_cells.empty()) {
      throw Error(ErrorKind::InvariantViolation, "empty fragment");
    }
    for (std::size_t i = 1; i < _cells.size(); ++i) {
      if (_cells[i].leaf == _cells[i - 1].leaf) {
        throw Error(ErrorKind::InvariantViolation, "repeated leaf in fragment");
      }
    }
    std::vector<Box> formal;
    formal.reserve(_cells.size());
    for (auto const& c : _cells) {
      if (c.formal.colours() != s) {
        throw Error(ErrorKind::InvariantViolation, "formal cell colour count");
      }
      formal.push_back(c.formal);
    }
    if (!is_hierarchical_tiling(formal, Box(s))) {
      throw Error(ErrorKind::NonHierarchicalFrame,
                  "formal cells do not form a hierarchical partition");
    }
  }

  Fragment(unchecked_t, std::vector<Cell> cells) : _cells(std::move(cells)) {
    std::sort(_cells.begin(), _cells.end());
  }

  static Fragment leaf(LeafIndex i, int s) {
    return Fragment(unchecked, {Cell{i, Box(s)}});
  }

  std::vector<Cell> const& cells() const noexcept { return _cells; }
  std::size_t              size() const noexcept { return _cells.size(); }
  bool                     is_trivial() const noexcept { return _cells.size() == 1; }
  LeafIndex                first_leaf() const noexcept { return _cells.front().leaf; }
  int colours() const noexcept { return _cells.front().formal.colours(); }

  Cell const* find(LeafIndex leaf) const noexcept {
    auto it = std::lower_bound(
        _cells.begin(), _cells.end(), leaf,
        [](Cell const& c, LeafIndex l) { return c.leaf < l; });
    return it != _cells.end() && it->leaf == leaf ? &*it : nullptr;
  }

  friend bool operator==(Fragment const&, Fragment const&) = default;
  friend auto operator<=>(Fragment const& a, Fragment const& b) {
    return std::lexicographical_compare_three_way(
        a._cells.begin(), a._cells.end(), b._cells.begin(), b._cells.end());
  }

  std::size_t hash() const noexcept {
    std::size_t seed = _cells.size();
    for (auto const& c : _cells) {
      detail::hash_combine(seed, c.leaf);
      detail::hash_combine(seed, c.formal.hash());
    }
    return seed;
  }

 private:
  std::vector<Cell> _cells;
};

// The ascending operation on an ordered pair: lo becomes the low c-half of
// the new formal cube and hi the high one.
inline Fragment contract_fragments(Fragment const& lo, Fragment const& hi, Colour c) {
  std::vector<Cell> cells;
  cells.reserve(lo.size() + hi.size());
  for (auto const& x : lo.cells()) {
    cells.push_back({x.leaf, x.formal.with(c, x.formal.addr(c).prepend(0))});
  }
  for (auto const& x : hi.cells()) {
    cells.push_back({x.leaf, x.formal.with(c, x.formal.addr(c).prepend(1))});
  }
  return Fragment(unchecked, std::move(cells));
}

// Colours whose mid-hyperplane of the formal cube cuts no cell.
inline std::vector<Colour> free_cuts(Fragment const& f) {
  std::vector<Colour> out;
  if (f.is_trivial()) {
    return out;
  }
  for (Colour c = 1; c <= f.colours(); ++c) {
    bool ok = std::all_of(f.cells().begin(), f.cells().end(),
                          [c](Cell const& x) { return !x.formal.addr(c).empty(); });
    if (ok) {
      out.push_back(c);
    }
  }
  return out;
}

// The descending operation: the two c-halves of f. Requires a free cut.
inline std::pair<Fragment, Fragment> split_fragment(Fragment const& f, Colour c) {
  std::vector<Cell> lo, hi;
  for (auto const& x : f.cells()) {
    auto const& a = x.formal.addr(c);
    if (a.empty()) {
      throw Error(ErrorKind::PreconditionViolated,
                  "colour " + std::to_string(c) + " is not a free cut");
    }
    Cell y{x.leaf, x.formal.with(c, a.drop_first())};
    (a.bit(0) == 0 ? lo : hi).push_back(y);
  }
  return {Fragment(unchecked, std::move(lo)), Fragment(unchecked, std::move(hi))};
}

// The geometric box of f, when f is an ordinary box of the cube.
inline std::optional<Box> as_box(Fragment const& f, Pattern const& y) {
  std::optional<Box> out;
  for (auto const& x : f.cells()) {
    auto b = y[x.leaf].strip_suffix(x.formal);
    if (!b || (out && *out != *b)) {
      return std::nullopt;
    }
    out = b;
  }
  return out;
}

////////////////////////////////////////////////////////////////////////
// Merged presentations
////////////////////////////////////////////////////////////////////////

// A labelled partition of the formal cube: each formal cell carries a box of
// the unit cube that is a union of Y-leaves.
struct LabelledCell {
  Box formal;
  Box label;

  friend bool operator==(LabelledCell const&, LabelledCell const&) = default;
  friend auto operator<=>(LabelledCell const&, LabelledCell const&) = default;
};

using RawFragment = std::vector<LabelledCell>;

// Leaf-level form of a labelled partition.
inline Fragment canonicalize(RawFragment const& raw, Pattern const& y) {
  if (raw.empty()) {
    throw Error(ErrorKind::InvariantViolation, "empty labelled partition");
  }
  int const        s = y.colours();
  std::vector<Box> formal;
  for (auto const& c : raw) {
    formal.push_back(c.formal);
  }
  if (!is_hierarchical_tiling(formal, Box(s))) {
    throw Error(ErrorKind::NonHierarchicalFrame,
                "formal cells do not form a hierarchical partition");
  }
  std::vector<Cell> cells;
  for (auto const& c : raw) {
    std::vector<Box> inside;
    for (std::size_t i = 0; i < y.size(); ++i) {
      if (c.label.contains(y[i])) {
        inside.push_back(y[i]);
        auto rel = y[i].relative_to(c.label);
        cells.push_back({static_cast<LeafIndex>(i), c.formal.concat(*rel)});
      }
    }
    if (!is_hierarchical_tiling(inside, c.label)) {
      throw Error(ErrorKind::NonHierarchicalFrame,
                  "label " + c.label.str() + " is not a hierarchical union of leaves");
    }
  }
  return Fragment(s, std::move(cells));
}

inline RawFragment raw_form(Fragment const& f, Pattern const& y) {
  RawFragment out;
  for (auto const& c : f.cells()) {
    out.push_back({c.formal, y[c.leaf]});
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace detail {
  inline std::optional<std::pair<std::size_t, std::size_t>>
  mergeable(RawFragment const& raw, std::size_t i, std::size_t j, Colour& colour) {
    auto fc = sibling_colour(raw[i].formal, raw[j].formal);
    if (!fc) {
      return std::nullopt;
    }
    if (sibling_colour(raw[i].label, raw[j].label) != fc) {
      return std::nullopt;
    }
    colour = *fc;
    return std::pair{i, j};
  }

  template <class Pick>
  RawFragment merge_loop(RawFragment raw, Pick&& pick) {
    while (true) {
      std::vector<std::tuple<std::size_t, std::size_t, Colour>> moves;
      for (std::size_t i = 0; i < raw.size(); ++i) {
        for (std::size_t j = 0; j < raw.size(); ++j) {
          Colour c = 0;
          if (i != j && mergeable(raw, i, j, c)) {
            moves.emplace_back(i, j, c);
          }
        }
      }
      if (moves.empty()) {
        break;
      }
      auto [i, j, c] = moves[pick(moves.size())];
      LabelledCell merged{parent_of(raw[i].formal, c), parent_of(raw[i].label, c)};
      RawFragment  next;
      for (std::size_t k = 0; k < raw.size(); ++k) {
        if (k != i && k != j) {
          next.push_back(raw[k]);
        }
      }
      next.push_back(merged);
      raw = std::move(next);
    }
    std::sort(raw.begin(), raw.end());
    return raw;
  }
}  // namespace detail

// Repeatedly merges two formal c-siblings whose labels are c-siblings in the
// same orientation. Always takes the first available merge.
inline RawFragment merge_cells(Fragment const& f, Pattern const& y) {
  return detail::merge_loop(raw_form(f, y), [](std::size_t) { return 0; });
}

// Same, with the merge order drawn from rng.
template <class Rng>
RawFragment merge_cells(Fragment const& f, Pattern const& y, Rng& rng) {
  return detail::merge_loop(raw_form(f, y), [&rng](std::size_t n) {
    return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
  });
}

////////////////////////////////////////////////////////////////////////
// BelowSet
////////////////////////////////////////////////////////////////////////

class BelowSet {
 public:
  BelowSet() = default;

  BelowSet(std::shared_ptr<Pattern const> base, std::vector<Fragment> elems)
      : _base(std::move(base)), _elems(std::move(elems)) {
    if (!_base) {
      throw Error(ErrorKind::InvariantViolation, "missing base pattern");
    }
    if (_base->size() > kMaxLeaves) {
      throw Error(ErrorKind::InvariantViolation, "base pattern too large");
    }
    std::vector<int> seen(_base->size(), 0);
    for (auto const& f : _elems) {
      if (f.size() == 0 || f.colours() != _base->colours()) {
        throw Error(ErrorKind::InvariantViolation, "fragment colour count");
      }
      for (auto const& c : f.cells()) {
        if (c.leaf >= _base->size() || seen[c.leaf]++ != 0) {
          throw Error(ErrorKind::InvariantViolation,
                      "fragment leaves do not partition the base");
        }
      }
    }
    if (std::find(seen.begin(), seen.end(), 0) != seen.end()) {
      throw Error(ErrorKind::InvariantViolation,
                  "fragment leaves do not cover the base");
    }
    normalize();
  }

  BelowSet(unchecked_t, std::shared_ptr<Pattern const> base,
           std::vector<Fragment> elems)
      : _base(std::move(base)), _elems(std::move(elems)) {
    normalize();
  }

  // Y itself, every leaf a trivial fragment.
  static BelowSet top(std::shared_ptr<Pattern const> y) {
    std::vector<Fragment> elems;
    for (std::size_t i = 0; i < y->size(); ++i) {
      elems.push_back(Fragment::leaf(static_cast<LeafIndex>(i), y->colours()));
    }
    return BelowSet(unchecked, std::move(y), std::move(elems));
  }

  // A geometric pattern a with a <= y, seen below y.
  static BelowSet from_pattern(Pattern const& a, std::shared_ptr<Pattern const> y) {
    if (!leq(a, *y)) {
      throw Error(ErrorKind::PreconditionViolated, "pattern is not below the base");
    }
    std::vector<std::vector<Cell>> cells(a.size());
    for (std::size_t i = 0; i < y->size(); ++i) {
      for (std::size_t k = 0; k < a.size(); ++k) {
        if (auto rel = (*y)[i].relative_to(a[k])) {
          cells[k].push_back({static_cast<LeafIndex>(i), *rel});
          break;
        }
      }
    }
    std::vector<Fragment> elems;
    for (auto& c : cells) {
      elems.emplace_back(unchecked, std::move(c));
    }
    return BelowSet(unchecked, std::move(y), std::move(elems));
  }

  Pattern const&                        base() const noexcept { return *_base; }
  std::shared_ptr<Pattern const> const& base_ptr() const noexcept { return _base; }
  std::vector<Fragment> const&          elems() const noexcept { return _elems; }
  std::size_t                           size() const noexcept { return _elems.size(); }
  int colours() const noexcept { return _base->colours(); }

  // Index of the element containing a leaf.
  std::vector<int> owners() const {
    std::vector<int> out(_base->size(), -1);
    for (std::size_t k = 0; k < _elems.size(); ++k) {
      for (auto const& c : _elems[k].cells()) {
        out[c.leaf] = static_cast<int>(k);
      }
    }
    return out;
  }

  std::size_t owner_of(LeafIndex leaf) const {
    for (std::size_t k = 0; k < _elems.size(); ++k) {
      if (_elems[k].find(leaf)) {
        return k;
      }
    }
    throw Error(ErrorKind::BoxNotInPattern, "leaf index " + std::to_string(leaf));
  }

  bool same_base(BelowSet const& o) const noexcept {
    return _base == o._base || *_base == *o._base;
  }

  friend bool operator==(BelowSet const& a, BelowSet const& b) noexcept {
    return a.same_base(b) && a._elems == b._elems;
  }

  std::size_t hash() const noexcept {
    std::size_t seed = _elems.size();
    for (auto const& f : _elems) {
      detail::hash_combine(seed, f.hash());
    }
    return seed;
  }

 private:
  void normalize() {
    std::sort(_elems.begin(), _elems.end(),
              [](Fragment const& a, Fragment const& b) {
                return a.first_leaf() < b.first_leaf();
              });
  }

  std::shared_ptr<Pattern const> _base;
  std::vector<Fragment>          _elems;
};

}  // namespace brinv

template <>
struct std::hash<brinv::Fragment> {
  std::size_t operator()(brinv::Fragment const& f) const noexcept {
    return f.hash();
  }
};

template <>
struct std::hash<brinv::BelowSet> {
  std::size_t operator()(brinv::BelowSet const& w) const noexcept {
    return w.hash();
  }
};

namespace brinv {

using BelowSetSet = std::unordered_set<BelowSet>;

inline std::shared_ptr<Pattern const> share(Pattern p) {
  return std::make_shared<Pattern const>(std::move(p));
}

struct SimpleContraction {
  LeafIndex low;
  LeafIndex high;
  Colour    colour;

  friend bool operator==(SimpleContraction const&, SimpleContraction const&) = default;
};

// Contracts elements i (low) and j (high) of w in colour c.
inline BelowSet contract_elems(BelowSet const& w, std::size_t i, std::size_t j, Colour c) {
  if (i == j || i >= w.size() || j >= w.size()) {
    throw Error(ErrorKind::PreconditionViolated, "bad element indices");
  }
  std::vector<Fragment> elems;
  elems.reserve(w.size() - 1);
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (k != i && k != j) {
      elems.push_back(w.elems()[k]);
    }
  }
  elems.push_back(contract_fragments(w.elems()[i], w.elems()[j], c));
  return BelowSet(unchecked, w.base_ptr(), std::move(elems));
}

inline BelowSet simple_contraction(std::shared_ptr<Pattern const> const& y,
                                   SimpleContraction const& sc) {
  if (sc.low == sc.high || sc.low >= y->size() || sc.high >= y->size()) {
    throw Error(ErrorKind::PreconditionViolated, "bad contraction leaves");
  }
  if (sc.colour < 1 || sc.colour > y->colours()) {
    throw Error(ErrorKind::PreconditionViolated, "bad colour");
  }
  auto top = BelowSet::top(y);
  return contract_elems(top, sc.low, sc.high, sc.colour);
}

// W1 <= W2: each element of W2 is a formal sub-box of an element of W1 and,
// inside each element of W1, those sub-boxes form a hierarchical partition.
inline bool below_leq(BelowSet const& w1, BelowSet const& w2) {
  if (!w1.same_base(w2)) {
    throw Error(ErrorKind::BaseMismatch, "below-sets over different patterns");
  }
  if (w1.size() > w2.size()) {
    return false;
  }
  auto const                    owner = w1.owners();
  std::vector<std::vector<Box>> regions(w1.size());
  std::vector<std::size_t>      covered(w1.size(), 0);
  for (auto const& f : w2.elems()) {
    int const       k  = owner[f.first_leaf()];
    auto const&     up = w1.elems()[k];
    std::optional<Box> region;
    for (auto const& c : f.cells()) {
      if (owner[c.leaf] != k) {
        return false;
      }
      auto r = up.find(c.leaf)->formal.strip_suffix(c.formal);
      if (!r || (region && *r != *region)) {
        return false;
      }
      region = r;
    }
    regions[k].push_back(*region);
    covered[k] += f.size();
  }
  for (std::size_t k = 0; k < w1.size(); ++k) {
    if (covered[k] != w1.elems()[k].size()
        || !detail::hierarchical_rec(regions[k], Box(w1.colours()))) {
      return false;
    }
  }
  return true;
}

inline bool below_less(BelowSet const& w1, BelowSet const& w2) {
  return w1.size() < w2.size() && below_leq(w1, w2);
}

// One-step expansions: split one element at a free cut.
inline std::vector<BelowSet> expansions_of(BelowSet const& w) {
  std::vector<BelowSet> out;
  for (std::size_t k = 0; k < w.size(); ++k) {
    for (Colour c : free_cuts(w.elems()[k])) {
      auto [lo, hi] = split_fragment(w.elems()[k], c);
      std::vector<Fragment> elems;
      for (std::size_t m = 0; m < w.size(); ++m) {
        if (m != k) {
          elems.push_back(w.elems()[m]);
        }
      }
      elems.push_back(std::move(lo));
      elems.push_back(std::move(hi));
      out.emplace_back(unchecked, w.base_ptr(), std::move(elems));
    }
  }
  return out;
}

// All one-step contractions of w (every ordered pair, every colour).
inline std::vector<BelowSet> contractions_of(BelowSet const& w) {
  std::vector<BelowSet> out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    for (std::size_t j = 0; j < w.size(); ++j) {
      if (i == j) {
        continue;
      }
      for (Colour c = 1; c <= w.colours(); ++c) {
        out.push_back(contract_elems(w, i, j, c));
      }
    }
  }
  return out;
}

// The interval [A, Y] by downward search from Y, keeping only sets above A.
inline std::vector<BelowSet> interval(BelowSet const& a, std::size_t budget = 200'000) {
  auto                  top = BelowSet::top(a.base_ptr());
  std::vector<BelowSet> order{top};
  BelowSetSet           seen{top};
  if (!below_leq(a, top)) {
    throw Error(ErrorKind::InvariantViolation, "A is not below its base");
  }
  for (std::size_t head = 0; head < order.size(); ++head) {
    if (order[head].size() == a.size()) {
      continue;
    }
    for (auto& next : contractions_of(order[head])) {
      if (!seen.contains(next) && below_leq(a, next)) {
        seen.insert(next);
        order.push_back(std::move(next));
        if (order.size() > budget) {
          throw Error(ErrorKind::BudgetExceeded,
                      "interval exceeds " + std::to_string(budget) + " sets");
        }
      }
    }
  }
  return order;
}

////////////////////////////////////////////////////////////////////////
// glb and the involvement calculus
////////////////////////////////////////////////////////////////////////

namespace detail {
  inline bool below_all(BelowSet const& n, std::span<BelowSet const> omega) {
    return std::all_of(omega.begin(), omega.end(),
                       [&n](BelowSet const& b) { return below_leq(n, b); });
  }

  template <class Order>
  BelowSet climb(BelowSet const& a, std::span<BelowSet const> omega, Order&& order) {
    for (auto const& b : omega) {
      if (!below_leq(a, b)) {
        throw Error(ErrorKind::PreconditionViolated,
                    "A is not below every member of the family");
      }
    }
    BelowSet m = a;
    while (true) {
      auto next = expansions_of(m);
      order(next);
      auto it = std::find_if(next.begin(), next.end(), [&](BelowSet const& n) {
        return below_all(n, omega);
      });
      if (it == next.end()) {
        return m;
      }
      m = std::move(*it);
    }
  }
}  // namespace detail

// Greatest lower bound of omega above a, by greedy climbing from a.
inline BelowSet glb_above(BelowSet const& a, std::span<BelowSet const> omega) {
  return detail::climb(a, omega, [](std::vector<BelowSet>&) {});
}

template <class Rng>
BelowSet glb_above(BelowSet const& a, std::span<BelowSet const> omega, Rng& rng) {
  return detail::climb(a, omega, [&rng](std::vector<BelowSet>& v) {
    std::shuffle(v.begin(), v.end(), rng);
  });
}

inline std::vector<LeafIndex> involved_leaves(BelowSet const& w) {
  std::vector<LeafIndex> out;
  for (auto const& f : w.elems()) {
    if (!f.is_trivial()) {
      for (auto const& c : f.cells()) {
        out.push_back(c.leaf);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline std::size_t involves(BelowSet const& w) {
  std::size_t n = 0;
  for (auto const& f : w.elems()) {
    if (!f.is_trivial()) {
      n += f.size();
    }
  }
  return n;
}

inline bool in_C_r(BelowSet const& w, std::size_t r) { return involves(w) <= r; }

// Performs pairwise disjoint contractions of Y together.
inline BelowSet gglb(std::shared_ptr<Pattern const> const& y,
                     std::span<BelowSet const>             ms) {
  std::vector<int>      used(y->size(), 0);
  std::vector<Fragment> elems;
  std::size_t           expected = 0;
  for (auto const& m : ms) {
    if (!(m.base() == *y)) {
      throw Error(ErrorKind::BaseMismatch, "contraction over another pattern");
    }
    expected += involves(m);
    for (auto const& f : m.elems()) {
      if (f.is_trivial()) {
        continue;
      }
      for (auto const& c : f.cells()) {
        if (used[c.leaf]++ != 0) {
          throw Error(ErrorKind::NotDisjoint,
                      "leaf " + (*y)[c.leaf].str() + " involved twice");
        }
      }
      elems.push_back(f);
    }
  }
  for (std::size_t i = 0; i < y->size(); ++i) {
    if (used[i] == 0) {
      elems.push_back(Fragment::leaf(static_cast<LeafIndex>(i), y->colours()));
    }
  }
  BelowSet out(unchecked, y, std::move(elems));
  if (involves(out) != expected) {
    throw Error(ErrorKind::InvariantViolation, "involvement count mismatch");
  }
  return out;
}

inline int length(BelowSet const& a, LeafIndex i) {
  return a.elems()[a.owner_of(i)].find(i)->formal.depth();
}

// Smallest colour c such that contracting i, j (either order) in colour c
// stays above a.
inline std::optional<Colour> glueable(BelowSet const& a, LeafIndex i, LeafIndex j) {
  if (i == j) {
    return std::nullopt;
  }
  if (a.owner_of(i) != a.owner_of(j)) {
    return std::nullopt;
  }
  for (Colour c = 1; c <= a.colours(); ++c) {
    if (below_leq(a, simple_contraction(a.base_ptr(), {i, j, c}))
        || below_leq(a, simple_contraction(a.base_ptr(), {j, i, c}))) {
      return c;
    }
  }
  return std::nullopt;
}

inline bool locally_maximal(BelowSet const& a, LeafIndex i) {
  auto const& f = a.elems()[a.owner_of(i)];
  int const   l = f.find(i)->formal.depth();
  return std::all_of(f.cells().begin(), f.cells().end(),
                     [l](Cell const& c) { return c.formal.depth() <= l; });
}

inline bool is_box_world(BelowSet const& w) {
  return std::all_of(w.elems().begin(), w.elems().end(), [&w](Fragment const& f) {
    return as_box(f, w.base()).has_value();
  });
}

// The geometric pattern of a box-world set.
inline std::optional<Pattern> to_pattern(BelowSet const& w) {
  std::vector<Box> boxes;
  for (auto const& f : w.elems()) {
    auto b = as_box(f, w.base());
    if (!b) {
      return std::nullopt;
    }
    boxes.push_back(*b);
  }
  return Pattern(unchecked, w.colours(), std::move(boxes));
}

inline LeafIndex leaf_of(Pattern const& y, Box const& b) {
  auto i = y.index_of(b);
  if (!i) {
    throw Error(ErrorKind::BoxNotInPattern, b.str());
  }
  return static_cast<LeafIndex>(*i);
}

}  // namespace brinv
