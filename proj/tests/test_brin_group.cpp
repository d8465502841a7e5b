#include <catch_amalgamated.hpp>

#include <numeric>

#include "brinv/brin_group.hpp"
#include "brinv/fixtures.hpp"
#include "brinv/random.hpp"

using namespace brinv;

namespace {

GroupElement half_swap() {
  auto const h = make_pattern(2, {"0:e", "1:e"});
  return make_element(h, h, {{Box::parse("0:e"), Box::parse("1:e")},
                             {Box::parse("1:e"), Box::parse("0:e")}});
}

}  // namespace

TEST_CASE("the three-leaf example element", "[group]") {
  auto const g = fixtures::three_leaf_element();
  CHECK(g.apply_box(Box::parse("0:0")) == Box::parse("e:0"));
  CHECK(g.apply_box(Box::parse("0:1")) == Box::parse("e:11"));
  CHECK(g.apply_box(Box::parse("1:e")) == Box::parse("e:10"));
  CHECK(g.apply_box(Box::parse("00:0")) == Box::parse("0:0"));
  CHECK(equal(compose(g, inverse(g)), GroupElement::identity(2)));
  CHECK(equal(inverse(inverse(g)), g));
  CHECK_FALSE(stabilizes(g, make_pattern(2, {"0:0", "0:1", "1:e"})));
  try {
    (void)g.apply_box(Box::parse("e:0"));
    FAIL("expected BoxNotBelowDomain");
  } catch (Error const& e) {
    CHECK(e.kind() == ErrorKind::BoxNotBelowDomain);
  }
}

TEST_CASE("identity and the half swap", "[group]") {
  auto const e = GroupElement::identity(2);
  CHECK(e.dom() == root_pattern(2));
  CHECK(e.apply_box(Box::parse("01:1")) == Box::parse("01:1"));
  auto const w = half_swap();
  CHECK(equal(compose(w, w), e));
  CHECK_FALSE(equal(w, e));
  CHECK(stabilizes(w, make_pattern(2, {"0:e", "1:e"})));
  for (auto const& p : enumerate_patterns(2, 3)) {
    CHECK(stabilizes(e, p));
  }
}

TEST_CASE("construction errors", "[group]") {
  auto const h = make_pattern(2, {"0:e", "1:e"});
  try {
    (void)make_element(h, root_pattern(2), {{Box::parse("0:e"), Box(2)}});
    FAIL("expected SizeMismatch");
  } catch (Error const& e) {
    CHECK(e.kind() == ErrorKind::SizeMismatch);
  }
  try {
    (void)make_element(h, h, {{Box::parse("0:e"), Box::parse("0:e")},
                              {Box::parse("1:e"), Box::parse("0:e")}});
    FAIL("expected NotBijective");
  } catch (Error const& e) {
    CHECK(e.kind() == ErrorKind::NotBijective);
  }
}

TEST_CASE("reduction keeps the element", "[group]") {
  auto const q = fixtures::quadrants();
  std::vector<std::pair<Box, Box>> pairs;
  for (auto const& b : q) {
    pairs.emplace_back(b, b);
  }
  auto const g = make_element(q, q, pairs);
  CHECK(g.dom().size() == 1);
  CHECK(equal(g, GroupElement::identity(2)));
  auto const u = GroupElement::unreduced(q, q, pairs);
  CHECK(u.dom().size() == 4);
  CHECK(equal(u, g));
}

TEST_CASE("transitive elements", "[group]") {
  auto const y = make_pattern(2, {"0:e", "1:e"});
  auto const z = make_pattern(2, {"e:0", "e:1"});
  auto const g = transitive_element(y, z, {0, 1});
  CHECK(g.apply_box(Box::parse("0:e")) == Box::parse("e:0"));
  CHECK(g.apply_box(Box::parse("1:e")) == Box::parse("e:1"));
  CHECK(stabilizes(transitive_element(y, y, {0, 1}), y));

  auto const all = enumerate_patterns(3, 4);
  Rng        rng(9);
  for (int k = 0; k < 200; ++k) {
    auto const& a = all[pick(rng, all.size())];
    std::vector<Pattern const*> same;
    for (auto const& b : all) {
      if (b.size() == a.size()) {
        same.push_back(&b);
      }
    }
    auto const& b = *same[pick(rng, same.size())];
    std::vector<std::size_t> sigma(a.size());
    std::iota(sigma.begin(), sigma.end(), 0);
    std::shuffle(sigma.begin(), sigma.end(), rng);
    auto const t = transitive_element(a, b, sigma);
    for (std::size_t i = 0; i < a.size(); ++i) {
      CHECK(t.apply_box(a[i]) == b[sigma[i]]);
    }
  }
}

TEST_CASE("group axioms on random triples", "[group]") {
  Rng rng(17);
  for (int k = 0; k < 300; ++k) {
    int const s = 1 + static_cast<int>(pick(rng, 3));
    auto g = random_element(s, 1 + pick(rng, 5), rng);
    auto h = random_element(s, 1 + pick(rng, 5), rng);
    auto f = random_element(s, 1 + pick(rng, 5), rng);
    auto e = GroupElement::identity(s);
    CHECK(equal(compose(compose(g, h), f), compose(g, compose(h, f))));
    CHECK(equal(compose(g, e), g));
    CHECK(equal(compose(inverse(g), g), e));
    // Equality does not depend on the representative.
    CHECK(equal(g.refine(expand(g.dom(), g.dom()[0], 1)), g));
  }
}

TEST_CASE("action commutes with halving", "[group]") {
  Rng rng(4);
  for (int k = 0; k < 200; ++k) {
    int const  s = 2 + static_cast<int>(pick(rng, 2));
    auto const g = random_element(s, 1 + pick(rng, 6), rng);
    for (auto const& d : g.dom()) {
      for (Colour c = 1; c <= s; ++c) {
        auto const img = g.apply_box(d);
        CHECK(g.apply_box(d.half(c, 0)) == img.half(c, 0));
        CHECK(g.apply_box(d.half(c, 1)) == img.half(c, 1));
      }
    }
  }
}

TEST_CASE("stabilizers are the permutations of Y", "[group]") {
  for (auto const& y : enumerate_patterns(2, 4)) {
    std::vector<std::size_t> perm(y.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<GroupElement> perms;
    do {
      perms.push_back(transitive_element(y, y, perm));
    } while (std::next_permutation(perm.begin(), perm.end()));
    for (auto const& p : perms) {
      CHECK(stabilizes(p, y));
      auto const induced = induced_permutation(p, y);
      REQUIRE(induced);
      CHECK(equal(transitive_element(y, y, *induced), p));
    }
  }
}
