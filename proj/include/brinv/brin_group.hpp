#pragma once

// Elements of sV as pattern pairs. An element sends each domain box
// affinely onto its image box; sub-boxes follow by appending relative
// addresses. Elements act on the right: compose(g, h) applies g first.

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "brinv/boxes.hpp"
#include "brinv/errors.hpp"

namespace brinv {

class GroupElement {
 public:
  GroupElement() = default;

  // pairs maps domain boxes to range boxes; stored after greedy reduction.
  GroupElement(Pattern dom, Pattern ran, std::vector<std::pair<Box, Box>> const& pairs)
      : GroupElement(unreduced(std::move(dom), std::move(ran), pairs)) {
    reduce();
  }

  // Keeps the given pattern pair as is.
  static GroupElement
  unreduced(Pattern dom, Pattern ran, std::vector<std::pair<Box, Box>> const& pairs) {
    if (dom.colours() != ran.colours()) {
      throw Error(ErrorKind::SizeMismatch, "colour counts differ");
    }
    if (dom.size() != ran.size() || pairs.size() != dom.size()) {
      throw Error(ErrorKind::SizeMismatch,
                  std::to_string(dom.size()) + " domain boxes, "
                      + std::to_string(ran.size()) + " range boxes, "
                      + std::to_string(pairs.size()) + " pairs");
    }
    if (!is_hierarchical(dom) || !is_hierarchical(ran)) {
      throw Error(ErrorKind::InvariantViolation,
                  "domain and range must be expansion-reachable");
    }
    GroupElement      g;
    std::vector<int>  dom_hit(dom.size(), 0), ran_hit(ran.size(), 0);
    g._image.resize(dom.size());
    for (auto const& [d, r] : pairs) {
      auto i = dom.index_of(d);
      auto j = ran.index_of(r);
      if (!i || !j || dom_hit[*i]++ != 0 || ran_hit[*j]++ != 0) {
        throw Error(ErrorKind::NotBijective, d.str() + " -> " + r.str());
      }
      g._image[*i] = r;
    }
    g._dom = std::move(dom);
    g._ran = std::move(ran);
    return g;
  }

  static GroupElement identity(int s) {
    auto root = root_pattern(s);
    return unreduced(root, root, {{Box(s), Box(s)}});
  }

  Pattern const& dom() const noexcept { return _dom; }
  Pattern const& ran() const noexcept { return _ran; }
  int            colours() const noexcept { return _dom.colours(); }
  std::size_t    size() const noexcept { return _dom.size(); }

  // Image of the i-th domain box.
  Box const& image(std::size_t i) const { return _image[i]; }

  std::vector<std::pair<Box, Box>> pairs() const {
    std::vector<std::pair<Box, Box>> out;
    for (std::size_t i = 0; i < _dom.size(); ++i) {
      out.emplace_back(_dom[i], _image[i]);
    }
    return out;
  }

  Box apply_box(Box const& b) const {
    for (std::size_t i = 0; i < _dom.size(); ++i) {
      if (auto rel = b.relative_to(_dom[i])) {
        return _image[i].concat(*rel);
      }
    }
    throw Error(ErrorKind::BoxNotBelowDomain, b.str());
  }

  // Rewrites g over a finer domain t with dom <= t.
  GroupElement refine(Pattern const& t) const {
    if (!leq(_dom, t)) {
      throw Error(ErrorKind::PreconditionViolated, "refinement is not above the domain");
    }
    std::vector<Box> img;
    for (auto const& b : t) {
      img.push_back(apply_box(b));
    }
    GroupElement g;
    g._dom   = t;
    g._image = img;
    g._ran   = Pattern(unchecked, colours(), std::move(img));
    return g;
  }

 private:
  // Removes matched sibling pairs while the patterns stay reachable.
  void reduce() {
    bool changed = true;
    while (changed && _dom.size() > 1) {
      changed = false;
      for (std::size_t i = 0; i < _dom.size() && !changed; ++i) {
        for (std::size_t j = 0; j < _dom.size() && !changed; ++j) {
          auto c = sibling_colour(_dom[i], _dom[j]);
          if (!c || sibling_colour(_image[i], _image[j]) != c) {
            continue;
          }
          auto nd = contract(_dom, _dom[i], _dom[j], *c);
          auto nr = contract(_ran, _image[i], _image[j], *c);
          if (!is_hierarchical(nd) || !is_hierarchical(nr)) {
            continue;
          }
          std::vector<std::pair<Box, Box>> pairs;
          for (std::size_t k = 0; k < _dom.size(); ++k) {
            if (k != i && k != j) {
              pairs.emplace_back(_dom[k], _image[k]);
            }
          }
          pairs.emplace_back(parent_of(_dom[i], *c), parent_of(_image[i], *c));
          *this   = unreduced(std::move(nd), std::move(nr), pairs);
          changed = true;
        }
      }
    }
  }

  Pattern          _dom;
  Pattern          _ran;
  std::vector<Box> _image;
};

inline GroupElement make_element(Pattern dom, Pattern ran,
                                 std::vector<std::pair<Box, Box>> const& pairs) {
  return GroupElement(std::move(dom), std::move(ran), pairs);
}

inline Box apply_box(GroupElement const& g, Box const& b) { return g.apply_box(b); }

inline GroupElement inverse(GroupElement const& g) {
  std::vector<std::pair<Box, Box>> pairs;
  for (auto const& [d, r] : g.pairs()) {
    pairs.emplace_back(r, d);
  }
  return GroupElement(g.ran(), g.dom(), pairs);
}

// Apply g, then h.
inline GroupElement compose(GroupElement const& g, GroupElement const& h) {
  if (g.colours() != h.colours()) {
    throw Error(ErrorKind::SizeMismatch, "colour counts differ");
  }
  auto const t  = lub(g.ran(), h.dom());
  auto const gi = inverse(g);
  std::vector<std::pair<Box, Box>> pairs;
  std::vector<Box>                 dom, ran;
  for (auto const& b : t) {
    auto d = gi.apply_box(b);
    auto r = h.apply_box(b);
    dom.push_back(d);
    ran.push_back(r);
    pairs.emplace_back(d, r);
  }
  return GroupElement(Pattern(unchecked, g.colours(), std::move(dom)),
                      Pattern(unchecked, g.colours(), std::move(ran)), pairs);
}

inline bool equal(GroupElement const& g, GroupElement const& h) {
  if (g.colours() != h.colours()) {
    return false;
  }
  auto const t = lub(g.dom(), h.dom());
  return g.refine(t).pairs() == h.refine(t).pairs();
}

// The element with domain y, range z, sending y[i] to z[sigma[i]].
inline GroupElement transitive_element(Pattern const& y, Pattern const& z,
                                       std::vector<std::size_t> const& sigma) {
  if (y.size() != z.size() || sigma.size() != y.size()) {
    throw Error(ErrorKind::SizeMismatch, "patterns of different sizes");
  }
  std::vector<std::pair<Box, Box>> pairs;
  for (std::size_t i = 0; i < y.size(); ++i) {
    if (sigma[i] >= z.size()) {
      throw Error(ErrorKind::NotBijective, "permutation index out of range");
    }
    pairs.emplace_back(y[i], z[sigma[i]]);
  }
  return GroupElement::unreduced(y, z, pairs);
}

// If g maps every box of y affinely onto a box of y, the induced
// permutation (image index per box).
inline std::optional<std::vector<std::size_t>>
induced_permutation(GroupElement const& g, Pattern const& y) {
  auto const               r = g.refine(lub(g.dom(), y));
  std::vector<std::size_t> perm;
  std::vector<int>         hit(y.size(), 0);
  for (auto const& b : y) {
    std::optional<Box> img;
    for (std::size_t i = 0; i < r.size(); ++i) {
      auto rel = r.dom()[i].relative_to(b);
      if (!rel) {
        continue;
      }
      auto cand = r.image(i).strip_suffix(*rel);
      if (!cand || (img && *img != *cand)) {
        return std::nullopt;
      }
      img = cand;
    }
    auto k = img ? y.index_of(*img) : std::nullopt;
    if (!k || hit[*k]++ != 0) {
      return std::nullopt;
    }
    perm.push_back(*k);
  }
  return perm;
}

inline bool stabilizes(GroupElement const& g, Pattern const& y) {
  return induced_permutation(g, y).has_value();
}

}  // namespace brinv
