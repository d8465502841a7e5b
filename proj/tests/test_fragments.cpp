#include <catch_amalgamated.hpp>

#include <set>

#include "brinv/fixtures.hpp"
#include "brinv/fragments.hpp"
#include "brinv/oracles.hpp"
#include "brinv/random.hpp"
#include "brinv/text_io.hpp"

using namespace brinv;

namespace {

std::shared_ptr<Pattern const> halves() { return share(make_pattern(2, {"0:e", "1:e"})); }

BelowSet one_element(std::shared_ptr<Pattern const> const& y, std::size_t lo, std::size_t hi,
                     Colour c) {
  return contract_elems(BelowSet::top(y), lo, hi, c);
}

}  // namespace

TEST_CASE("a sibling pair in order merges to its parent box", "[fragments]") {
  auto const y = halves();
  auto const w = one_element(y, 0, 1, 1);
  REQUIRE(w.size() == 1);
  auto const& f = w.elems()[0];
  CHECK(as_box(f, *y) == Box(2));
  auto const merged = merge_cells(f, *y);
  REQUIRE(merged.size() == 1);
  CHECK(merged[0].formal == Box(2));
  CHECK(merged[0].label == Box(2));
  CHECK(w == BelowSet::from_pattern(root_pattern(2), y));
}

TEST_CASE("a swapped pair stays exotic", "[fragments]") {
  auto const y = halves();
  auto const w = one_element(y, 1, 0, 1);
  auto const& f = w.elems()[0];
  CHECK_FALSE(as_box(f, *y));
  CHECK(merge_cells(f, *y).size() == 2);
  CHECK_FALSE(is_box_world(w));
  // No expansion chain from the root pattern reaches it.
  for (auto const& p : enumerate_patterns(2, 2)) {
    if (leq(p, *y)) {
      CHECK_FALSE(BelowSet::from_pattern(p, y) == w);
    }
  }
}

TEST_CASE("both bracketings of the quadrants give the root", "[fragments]") {
  auto const y  = share(fixtures::quadrants());
  auto       l  = [&](char const* b) { return leaf_of(*y, Box::parse(b)); };
  auto const top = BelowSet::top(y);
  auto idx = [](BelowSet const& w, LeafIndex leaf) {
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (w.elems()[i].find(leaf)) {
        return i;
      }
    }
    return std::size_t{0};
  };
  // Colour 1 first, then colour 2.
  auto a = contract_elems(top, idx(top, l("0:0")), idx(top, l("1:0")), 1);
  a      = contract_elems(a, idx(a, l("0:1")), idx(a, l("1:1")), 1);
  a      = contract_elems(a, idx(a, l("0:0")), idx(a, l("0:1")), 2);
  // Colour 2 first, then colour 1.
  auto b = contract_elems(top, idx(top, l("0:0")), idx(top, l("0:1")), 2);
  b      = contract_elems(b, idx(b, l("1:0")), idx(b, l("1:1")), 2);
  b      = contract_elems(b, idx(b, l("0:0")), idx(b, l("1:0")), 1);
  CHECK(a == b);
  REQUIRE(a.size() == 1);
  CHECK(as_box(a.elems()[0], *y) == Box(2));
}

TEST_CASE("merged forms are not unique but the leaf-level form is", "[fragments]") {
  auto const y = share(make_pattern(2, {"0:0", "0:1", "1:0", "1:10", "1:11"}));
  auto       l = [&](char const* b) { return leaf_of(*y, Box::parse(b)); };
  Fragment const f(2, {{l("0:0"), Box::parse("0:0")},
                       {l("0:1"), Box::parse("0:1")},
                       {l("1:0"), Box::parse("1:0")},
                       {l("1:10"), Box::parse("1:1")}});
  RawFragment const by_rows{{Box::parse("e:0"), Box::parse("e:0")},
                            {Box::parse("0:1"), Box::parse("0:1")},
                            {Box::parse("1:1"), Box::parse("1:10")}};
  RawFragment const by_columns{{Box::parse("0:e"), Box::parse("0:e")},
                               {Box::parse("1:0"), Box::parse("1:0")},
                               {Box::parse("1:1"), Box::parse("1:10")}};
  CHECK(canonicalize(by_rows, *y) == f);
  CHECK(canonicalize(by_columns, *y) == f);

  Rng                   rng(5);
  std::set<RawFragment> forms;
  for (int k = 0; k < 40; ++k) {
    auto const m = merge_cells(f, *y, rng);
    CHECK(canonicalize(m, *y) == f);
    forms.insert(m);
  }
  CHECK(forms.size() == 2);
}

TEST_CASE("fragment invariants are enforced", "[fragments]") {
  CHECK_THROWS_AS(Fragment(2, {{0, Box::parse("0:e")}, {1, Box::parse("0:e")}}), Error);
  CHECK_THROWS_AS(Fragment(2, {{0, Box::parse("0:e")}, {0, Box::parse("1:e")}}), Error);
  try {
    (void)Fragment(3, {{0, Box::parse("e:0:0")}, {1, Box::parse("0:e:1")}, {2, Box::parse("1:1:e")},
                       {3, Box::parse("0:1:0")}, {4, Box::parse("1:0:1")}});
    FAIL("expected NonHierarchicalFrame");
  } catch (Error const& e) {
    CHECK(e.kind() == ErrorKind::NonHierarchicalFrame);
  }
}

TEST_CASE("order below Y", "[fragments]") {
  auto const y   = halves();
  auto const top = BelowSet::top(y);
  std::vector<BelowSet> singles{one_element(y, 0, 1, 1), one_element(y, 1, 0, 1),
                                one_element(y, 0, 1, 2), one_element(y, 1, 0, 2)};
  for (std::size_t i = 0; i < singles.size(); ++i) {
    CHECK(below_leq(singles[i], top));
    CHECK(below_leq(singles[i], singles[i]));
    for (std::size_t j = 0; j < singles.size(); ++j) {
      if (i != j) {
        CHECK(singles[i] != singles[j]);
        CHECK_FALSE(below_leq(singles[i], singles[j]));
      }
    }
  }
  CHECK(below_leq(top, top));
  CHECK_FALSE(below_less(top, top));
}

TEST_CASE("expansions", "[fragments]") {
  auto const q    = share(fixtures::quadrants());
  auto const root = BelowSet::from_pattern(root_pattern(2), q);
  auto const ex   = expansions_of(root);
  CHECK(ex.size() == 2);
  for (auto const& e : ex) {
    CHECK(is_box_world(e));
    CHECK(e.size() == 2);
  }
  auto const swapped = one_element(halves(), 1, 0, 2);
  CHECK(expansions_of(swapped).size() == 1);
  CHECK(expansions_of(swapped)[0] == BelowSet::top(halves()));
  CHECK(expansions_of(BelowSet::top(q)).empty());
}

TEST_CASE("the order agrees with reachability by contractions", "[fragments][oracle]") {
  for (auto const& p : enumerate_patterns(2, 3)) {
    if (p.size() < 2) {
      continue;
    }
    auto const y = share(p);
    std::vector<BelowSet> all{BelowSet::top(y)};
    BelowSetSet           seen{all[0]};
    for (std::size_t h = 0; h < all.size(); ++h) {
      for (auto& n : contractions_of(all[h])) {
        if (seen.insert(n).second) {
          all.push_back(n);
        }
      }
    }
    // Upward closure by expansions, independent of below_leq.
    for (auto const& a : all) {
      BelowSetSet           up{a};
      std::vector<BelowSet> queue{a};
      for (std::size_t h = 0; h < queue.size(); ++h) {
        for (auto& n : expansions_of(queue[h])) {
          if (up.insert(n).second) {
            queue.push_back(n);
          }
        }
      }
      for (auto const& b : all) {
        CHECK(below_leq(a, b) == up.contains(b));
      }
    }
  }
}

TEST_CASE("glb above a base", "[fragments]") {
  auto const f = fixtures::length_example();
  std::vector<BelowSet> only_top{BelowSet::top(f.y)};
  CHECK(glb_above(f.a, only_top) == BelowSet::top(f.y));

  auto const ob   = fixtures::open_book_7();
  auto const root = BelowSet::from_pattern(root_pattern(3), ob.y);
  std::vector<BelowSet> omega{ob.y0, ob.y1};
  CHECK(glb_above(root, omega) == root);
  CHECK(involves(glb_above(root, omega)) == 7);

  auto const ob13   = fixtures::open_book_13();
  auto const root13 = BelowSet::from_pattern(root_pattern(3), ob13.y);
  std::vector<BelowSet> omega13{ob13.y0, ob13.y1};
  CHECK(involves(glb_above(root13, omega13)) == 13);

  std::vector<BelowSet> not_above{ob.y0};
  try {
    (void)glb_above(ob.y1, not_above);
    FAIL("expected PreconditionViolated");
  } catch (Error const& e) {
    CHECK(e.kind() == ErrorKind::PreconditionViolated);
  }
}

TEST_CASE("greedy glb equals the interval maximum on random instances", "[fragments][oracle]") {
  Rng rng(21);
  for (int k = 0; k < 150; ++k) {
    int const  s = 2 + static_cast<int>(pick(rng, 2));
    auto const y = share(random_pattern(s, 2 + pick(rng, 4), rng));
    auto const a = random_below(y, 1 + pick(rng, y->size() - 1), rng, 0.5);
    std::vector<BelowSet> omega{random_above(a, rng, 4), random_above(a, rng, 4)};
    auto const m  = glb_above(a, omega);
    auto const mo = oracle::interval_max(a, omega);
    REQUIRE(mo);
    CHECK(*mo == m);
    CHECK(glb_above(a, omega, rng) == m);
  }
}

TEST_CASE("global glb of disjoint contractions", "[fragments]") {
  auto const q = share(fixtures::quadrants());
  auto       l = [&](char const* b) { return leaf_of(*q, Box::parse(b)); };
  std::vector<BelowSet> ms{simple_contraction(q, {l("0:0"), l("1:0"), 1}),
                           simple_contraction(q, {l("0:1"), l("1:1"), 1})};
  auto const g = gglb(q, ms);
  CHECK(g == BelowSet::from_pattern(make_pattern(2, {"e:0", "e:1"}), q));
  CHECK(involves(g) == 4);

  std::vector<BelowSet> one{ms[0]};
  CHECK(gglb(q, one) == ms[0]);

  Rng        rng(2);
  auto const y5 = share(random_pattern(2, 5, rng));
  std::vector<BelowSet> exotic{simple_contraction(y5, {1, 0, 2}), simple_contraction(y5, {3, 2, 2})};
  CHECK(involves(gglb(y5, exotic)) == 4);

  std::vector<BelowSet> overlapping{simple_contraction(y5, {1, 0, 2}),
                                    simple_contraction(y5, {1, 2, 1})};
  try {
    (void)gglb(y5, overlapping);
    FAIL("expected NotDisjoint");
  } catch (Error const& e) {
    CHECK(e.kind() == ErrorKind::NotDisjoint);
  }
}

TEST_CASE("involvement counts", "[fragments]") {
  auto const ob = fixtures::open_book_7();
  CHECK(involves(BelowSet::top(ob.y)) == 0);
  CHECK(involves(ob.y0) == 2);
  CHECK(involves(ob.y1) == 2);
  CHECK(involves(BelowSet::from_pattern(root_pattern(3), ob.y)) == 7);
  CHECK(in_C_r(ob.y0, 2));
  CHECK_FALSE(in_C_r(ob.y0, 1));
}

TEST_CASE("length, glueable and locally maximal on the two-colour example", "[fragments]") {
  auto const f = fixtures::length_example();
  CHECK(length(f.a, f.leaf(5)) == 2);
  CHECK(glueable(f.a, f.leaf(5), f.leaf(6)) == 2);
  CHECK(glueable(f.a, f.leaf(6), f.leaf(5)) == 2);
  CHECK(glueable(f.a, f.leaf(1), f.leaf(2)) == 1);
  CHECK_FALSE(glueable(f.a, f.leaf(3), f.leaf(4)));
  for (int k = 1; k <= 6; ++k) {
    CHECK(locally_maximal(f.a, f.leaf(k)) == (k != 4));
  }
}

TEST_CASE("text round trip of every set below small patterns", "[fragments]") {
  for (auto const& p : enumerate_patterns(2, 3)) {
    auto const y = share(p);
    std::vector<BelowSet> all{BelowSet::top(y)};
    BelowSetSet           seen{all[0]};
    for (std::size_t h = 0; h < all.size(); ++h) {
      for (auto& n : contractions_of(all[h])) {
        if (seen.insert(n).second) {
          all.push_back(n);
        }
      }
    }
    for (auto const& w : all) {
      CHECK(parse_below_set(to_text(w)) == w);
      CHECK(to_text(parse_below_set(to_text(w))) == to_text(w));
    }
  }
}
