#pragma once

// Named instances used by suites, tests and the golden fixture files.

#include <string>
#include <vector>

#include "brinv/boxes.hpp"
#include "brinv/brin_group.hpp"
#include "brinv/fragments.hpp"

namespace brinv::fixtures {

inline Pattern quadrants() { return make_pattern(2, {"0:0", "0:1", "1:0", "1:1"}); }

inline Pattern octants() {
  return make_pattern(3, {"0:0:0", "0:0:1", "0:1:0", "0:1:1", "1:0:0", "1:0:1", "1:1:0",
                          "1:1:1"});
}

// A five-box tiling of the cube that no sequence of halvings produces.
inline std::vector<Box> twisted_boxes() {
  return {Box::parse("e:0:0"), Box::parse("0:e:1"), Box::parse("1:1:e"),
          Box::parse("0:1:0"), Box::parse("1:0:1")};
}

// Open book instance, colours a=1, b=2, c=3. Labels 1..7 in order.
inline std::vector<std::string> open_book_labels() {
  return {"1:1:0", "1:0:0", "0:0:0", "0:0:1", "1:0:1", "1:1:1", "0:1:e"};
}

struct OpenBook {
  std::shared_ptr<Pattern const> y;
  std::vector<Box>               label;  // label[k] is leaf k+1 of the instance
  BelowSet                       y0;     // {1,2} glued in colour b
  BelowSet                       y1;     // {2,3} glued in colour a
  std::size_t                    expected_involves;
};

inline OpenBook make_open_book(std::vector<Box> leaves, Box one, Box two, Box three,
                               std::vector<Box> label, std::size_t expected) {
  OpenBook ob;
  ob.y     = share(Pattern(3, std::move(leaves)));
  ob.label = std::move(label);
  auto l   = [&](Box const& b) { return leaf_of(*ob.y, b); };
  ob.y0    = simple_contraction(ob.y, {l(two), l(one), 2});
  ob.y1    = simple_contraction(ob.y, {l(three), l(two), 1});
  ob.expected_involves = expected;
  return ob;
}

inline OpenBook open_book_7() {
  std::vector<Box> label;
  for (auto const& t : open_book_labels()) {
    label.push_back(Box::parse(t));
  }
  return make_open_book(label, label[0], label[1], label[2], label, 7);
}

inline OpenBook open_book_8() {
  std::vector<Box> label;
  for (auto const& t : open_book_labels()) {
    label.push_back(Box::parse(t));
  }
  auto leaves = label;
  leaves.pop_back();
  leaves.push_back(Box::parse("00:1:e"));
  leaves.push_back(Box::parse("01:1:e"));
  return make_open_book(leaves, label[0], label[1], label[2], label, 8);
}

// Leaves 1..6 halved in colour c, leaf 7 kept; gluings act on the low halves.
inline OpenBook open_book_13() {
  std::vector<Box> label;
  for (auto const& t : open_book_labels()) {
    label.push_back(Box::parse(t));
  }
  std::vector<Box> leaves;
  for (std::size_t k = 0; k < 6; ++k) {
    leaves.push_back(label[k].half(3, 0));
    leaves.push_back(label[k].half(3, 1));
  }
  leaves.push_back(label[6]);
  return make_open_book(leaves, label[0].half(3, 0), label[1].half(3, 0),
                        label[2].half(3, 0), label, 13);
}

// Two-colour example with a three-element A. Labels 1..6 for Y, a..c for A.
struct LengthExample {
  std::shared_ptr<Pattern const> y;
  Pattern                        a_pattern;
  BelowSet                       a;
  std::vector<Box>               label;  // label[k] is leaf k+1
  LeafIndex leaf(int k) const { return leaf_of(*y, label[k - 1]); }
};

inline LengthExample length_example() {
  LengthExample f;
  f.label = {Box::parse("00:e"), Box::parse("01:e"), Box::parse("1:1"),
             Box::parse("10:0"), Box::parse("11:01"), Box::parse("11:00")};
  f.y         = share(Pattern(2, f.label));
  f.a_pattern = make_pattern(2, {"0:e", "1:1", "1:0"});
  f.a         = BelowSet::from_pattern(f.a_pattern, f.y);
  return f;
}

// Element with labelled leaves 1=(0,0)->(e,0), 2=(0,1)->(e,11), 3=(1,e)->(e,10).
inline GroupElement three_leaf_element() {
  auto d = make_pattern(2, {"0:0", "0:1", "1:e"});
  auto r = make_pattern(2, {"e:0", "e:11", "e:10"});
  return make_element(d, r,
                      {{Box::parse("0:0"), Box::parse("e:0")},
                       {Box::parse("0:1"), Box::parse("e:11")},
                       {Box::parse("1:e"), Box::parse("e:10")}});
}

}  // namespace brinv::fixtures
