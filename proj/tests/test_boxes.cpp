#include <catch_amalgamated.hpp>

#include <algorithm>
#include <set>

#include "brinv/boxes.hpp"
#include "brinv/fixtures.hpp"
#include "brinv/oracles.hpp"
#include "brinv/random.hpp"

using namespace brinv;

TEST_CASE("address parsing and arithmetic", "[boxes]") {
  auto a = Address::parse("0110");
  CHECK(a.length() == 4);
  CHECK(a.str() == "0110");
  CHECK(a.bit(0) == 0);
  CHECK(a.bit(1) == 1);
  CHECK(a.last_bit() == 0);
  CHECK(a.parent().str() == "011");
  CHECK(a.sibling().str() == "0111");
  CHECK(a.drop_first().str() == "110");
  CHECK(a.child(1).str() == "01101");
  CHECK(a.prepend(1).str() == "10110");
  CHECK(Address::parse("01").is_prefix_of(a));
  CHECK_FALSE(Address::parse("1").is_prefix_of(a));
  CHECK(a.strip_prefix(Address::parse("01"))->str() == "10");
  CHECK(a.strip_suffix(Address::parse("10"))->str() == "01");
  CHECK(Address::parse("e").empty());
  CHECK(Address::parse("e").str() == "e");
  CHECK(Address::parse("1") < Address::parse("00"));
  CHECK_THROWS_AS(Address::parse("012"), Error);
}

TEST_CASE("depth cap is an explicit error", "[boxes]") {
  auto q = root_pattern(2);
  for (int i = 0; i < kDefaultDepthCap; ++i) {
    q = expand(q, q[q.size() - 1], 1);
  }
  try {
    (void)expand(q, q[q.size() - 1], 1);
    FAIL("expected DepthCapExceeded");
  } catch (Error const& e) {
    CHECK(e.kind() == ErrorKind::DepthCapExceeded);
  }
}

TEST_CASE("box geometry", "[boxes]") {
  auto b = Box::parse("01:e");
  CHECK(b.str() == "01:e");
  CHECK(b.colours() == 2);
  CHECK(b.depth() == 2);
  CHECK(Box(2).contains(b));
  CHECK(Box::parse("0:e").contains(b));
  CHECK_FALSE(b.contains(Box::parse("0:e")));
  CHECK(b.overlaps(Box::parse("e:1")));
  CHECK_FALSE(b.overlaps(Box::parse("1:e")));
  CHECK(b.intersect(Box::parse("e:1"))->str() == "01:1");
  CHECK(b.half(2, 1).str() == "01:1");
  CHECK(Box::parse("011:10").relative_to(b)->str() == "1:10");
  CHECK(b.concat(Box::parse("1:10")).str() == "011:10");
  CHECK(sibling_colour(Box::parse("0:1"), Box::parse("1:1")) == 1);
  CHECK_FALSE(sibling_colour(Box::parse("1:1"), Box::parse("0:1")));
  CHECK_FALSE(sibling_colour(Box::parse("0:0"), Box::parse("1:1")));
  CHECK(parent_of(Box::parse("1:01"), 2).str() == "1:0");
  CHECK_THROWS_AS(Box::parse("0:"), Error);
}

TEST_CASE("box order is colour-major on length then bits", "[boxes]") {
  std::vector<Box> v{Box::parse("00:e"), Box::parse("1:1"), Box::parse("1:0"),
                     Box::parse("0:e")};
  std::sort(v.begin(), v.end());
  CHECK(v[0].str() == "0:e");
  CHECK(v[1].str() == "1:0");
  CHECK(v[2].str() == "1:1");
  CHECK(v[3].str() == "00:e");
}

TEST_CASE("root patterns", "[boxes]") {
  CHECK(root_pattern(1)[0].str() == "e");
  CHECK(root_pattern(2)[0].str() == "e:e");
  CHECK(root_pattern(3)[0].str() == "e:e:e");
  CHECK(root_pattern(2).size() == 1);
}

TEST_CASE("expand and contract", "[boxes]") {
  auto halves = make_pattern(2, {"0:e", "1:e"});
  CHECK(expand(root_pattern(2), Box(2), 1) == halves);
  CHECK(expand(halves, Box::parse("1:e"), 2) == make_pattern(2, {"0:e", "1:0", "1:1"}));

  auto q  = fixtures::quadrants();
  auto v1 = expand(expand(expand(root_pattern(2), Box(2), 1), Box::parse("0:e"), 2),
                   Box::parse("1:e"), 2);
  auto v2 = expand(expand(expand(root_pattern(2), Box(2), 2), Box::parse("e:0"), 1),
                   Box::parse("e:1"), 1);
  CHECK(v1 == q);
  CHECK(v2 == q);

  CHECK(contract(halves, Box::parse("0:e"), Box::parse("1:e"), 1) == root_pattern(2));
  CHECK(contract(q, Box::parse("0:0"), Box::parse("1:0"), 1)
        == make_pattern(2, {"e:0", "0:1", "1:1"}));
  try {
    (void)contract(halves, Box::parse("0:e"), Box::parse("1:e"), 2);
    FAIL("expected NotSiblings");
  } catch (Error const& e) {
    CHECK(e.kind() == ErrorKind::NotSiblings);
  }
  try {
    (void)expand(halves, Box::parse("e:0"), 1);
    FAIL("expected BoxNotInPattern");
  } catch (Error const& e) {
    CHECK(e.kind() == ErrorKind::BoxNotInPattern);
  }
}

TEST_CASE("size law on random operation sequences", "[boxes]") {
  Rng rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    int  s = 1 + static_cast<int>(pick(rng, 3));
    auto p = root_pattern(s);
    for (int step = 0; step < 12; ++step) {
      auto const before = p.size();
      if (p.size() > 1 && coin(rng, 0.3)) {
        std::vector<std::tuple<Box, Box, Colour>> moves;
        for (auto const& a : p) {
          for (auto const& b : p) {
            if (auto c = sibling_colour(a, b)) {
              moves.emplace_back(a, b, *c);
            }
          }
        }
        if (!moves.empty()) {
          auto [a, b, c] = moves[pick(rng, moves.size())];
          p              = contract(p, a, b, c);
          REQUIRE(p.size() == before - 1);
          continue;
        }
      }
      auto c = static_cast<Colour>(1 + pick(rng, static_cast<std::size_t>(s)));
      p      = expand(p, p[pick(rng, p.size())], c);
      REQUIRE(p.size() == before + 1);
    }
  }
}

TEST_CASE("hierarchical tilings", "[boxes]") {
  CHECK(is_hierarchical(std::vector<Box>{Box(3)}, Box(3)));
  auto tw = fixtures::twisted_boxes();
  CHECK(tiles(tw, Box(3)));
  CHECK_FALSE(is_hierarchical(tw, Box(3)));
  CHECK_FALSE(is_hierarchical(Pattern(3, tw)));
  CHECK_THROWS_AS(is_hierarchical(std::vector<Box>{Box::parse("0:e")}, Box(2)), Error);

  // The twisted tiling is absent from the expansion-reachable 5-box patterns.
  std::vector<Box> sorted = tw;
  std::sort(sorted.begin(), sorted.end());
  for (auto const& p : enumerate_patterns(3, 5)) {
    CHECK_FALSE(std::equal(p.begin(), p.end(), sorted.begin(), sorted.end()));
  }
}

TEST_CASE("every two-colour tiling with at most six boxes is hierarchical", "[boxes][oracle]") {
  auto const tilings = oracle::all_tilings(2, 6, 5);
  auto const reached = enumerate_patterns(2, 6);
  REQUIRE(tilings.size() == reached.size());
  for (std::size_t i = 0; i < tilings.size(); ++i) {
    CHECK(is_hierarchical(tilings[i]));
  }
  std::set<Pattern> a(tilings.begin(), tilings.end());
  std::set<Pattern> b(reached.begin(), reached.end());
  CHECK(a == b);
}

TEST_CASE("three-colour tilings of depth two", "[boxes][oracle]") {
  auto const tilings = oracle::all_tilings(3, 5, 2);
  std::set<Pattern> reached;
  for (auto const& p : enumerate_patterns(3, 5)) {
    if (std::all_of(p.begin(), p.end(), [](Box const& b) { return b.max_address_length() <= 2; })) {
      reached.insert(p);
    }
  }
  std::size_t hierarchical = 0;
  for (auto const& t : tilings) {
    if (is_hierarchical_tiling(t.boxes(), Box(3))) {
      ++hierarchical;
      CHECK(reached.contains(t));
    }
  }
  CHECK(hierarchical == reached.size());
  CHECK(hierarchical < tilings.size());
}

TEST_CASE("order", "[boxes]") {
  auto const tw = fixtures::twisted_boxes();
  CHECK(leq(root_pattern(3), root_pattern(3)));
  CHECK(leq(fixtures::quadrants(), fixtures::quadrants()));
  for (auto const& p : enumerate_patterns(2, 5)) {
    CHECK(leq(root_pattern(2), p));
  }
  Pattern const z(unchecked, 3, tw);
  CHECK_FALSE(leq(root_pattern(3), z));
  CHECK(leq(z, fixtures::octants()));

  Rng rng(3);
  auto const all = enumerate_patterns(2, 4);
  for (int k = 0; k < 2000; ++k) {
    auto const& a = all[pick(rng, all.size())];
    auto const& b = all[pick(rng, all.size())];
    auto const& c = all[pick(rng, all.size())];
    if (leq(a, b) && leq(b, a)) {
      CHECK(a == b);
    }
    if (leq(a, b) && leq(b, c)) {
      CHECK(leq(a, c));
    }
  }
}

TEST_CASE("lub", "[boxes]") {
  auto const halves_x = make_pattern(2, {"0:e", "1:e"});
  auto const halves_y = make_pattern(2, {"e:0", "e:1"});
  CHECK(lub(halves_x, halves_y) == fixtures::quadrants());
  CHECK(lub(halves_x, halves_x) == halves_x);
  CHECK(lub(halves_x, root_pattern(2)) == halves_x);

  auto const universe = enumerate_patterns(2, 5);
  Rng        rng(11);
  for (int k = 0; k < 400; ++k) {
    auto const& p = universe[pick(rng, universe.size())];
    auto const& q = universe[pick(rng, universe.size())];
    auto const  l = lub(p, q);
    CHECK(leq(p, l));
    CHECK(leq(q, l));
    if (l.size() <= 5) {
      CHECK(oracle::least_upper_bound_in(p, q, universe) == l);
    }
  }
}

TEST_CASE("enumeration counts", "[boxes]") {
  auto count = [](int s, std::size_t n) {
    std::vector<std::size_t> by(n + 1, 0);
    for (auto const& p : enumerate_patterns(s, n)) {
      ++by[p.size()];
    }
    return by;
  };
  CHECK(enumerate_patterns(2, 2).size() == 3);
  CHECK(count(2, 3)[3] == 8);
  auto const one = enumerate_patterns(1, 3);
  CHECK(one.size() == 4);
  CHECK(std::find(one.begin(), one.end(), make_pattern(1, {"00", "01", "1"})) != one.end());
  CHECK(std::find(one.begin(), one.end(), make_pattern(1, {"0", "10", "11"})) != one.end());
  // Binary trees with k leaves.
  CHECK(count(1, 6) == std::vector<std::size_t>{0, 1, 1, 2, 5, 14, 42});
}

TEST_CASE("expansion commutes across colours to depth three", "[boxes]") {
  for (int s = 2; s <= 3; ++s) {
    for (auto const& p : enumerate_patterns(s, 3)) {
      for (auto const& b : p) {
        for (Colour i = 1; i <= s; ++i) {
          for (Colour j = 1; j <= s; ++j) {
            if (i == j) {
              continue;
            }
            auto pi = expand(p, b, i);
            auto ij = expand(expand(pi, b.half(i, 0), j), b.half(i, 1), j);
            auto pj = expand(p, b, j);
            auto ji = expand(expand(pj, b.half(j, 0), i), b.half(j, 1), i);
            CHECK(ij == ji);
          }
        }
      }
    }
  }
}
