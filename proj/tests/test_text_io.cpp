#include <catch_amalgamated.hpp>

#include <fstream>
#include <sstream>

#include "brinv/fixtures.hpp"
#include "brinv/random.hpp"
#include "brinv/text_io.hpp"

using namespace brinv;

namespace {

std::string slurp(std::string const& name) {
  std::ifstream in(std::string(BRINV_FIXTURE_DIR) + "/" + name);
  REQUIRE(in);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void expect_syntax_error(std::string_view text, std::string const& where) {
  try {
    (void)parse_below_set(text);
    FAIL("expected SyntaxError");
  } catch (Error const& e) {
    CHECK(e.kind() == ErrorKind::SyntaxError);
    CHECK_THAT(e.what(), Catch::Matchers::ContainsSubstring(where));
  }
}

}  // namespace

TEST_CASE("golden fixtures round trip", "[text]") {
  for (auto name : {"open_book_7.txt", "open_book_8.txt", "open_book_13.txt", "root3.txt",
                    "lengths_y.txt"}) {
    auto const text = slurp(name);
    CHECK(to_text(parse_pattern(text)) == text);
  }
  for (auto name : {"open_book_7_y0.txt", "open_book_7_y1.txt", "open_book_13_y0.txt",
                    "open_book_13_y1.txt", "lengths_a.txt"}) {
    auto const text = slurp(name);
    CHECK(to_text(parse_below_set(text)) == text);
  }
  auto const chain = slurp("quadrant_chain.txt");
  CHECK(to_text(parse_chain(chain)) == chain);
  auto const elem = slurp("three_leaf_element.txt");
  CHECK(to_text(parse_element(elem)) == elem);
}

TEST_CASE("fixtures match the built-in instances", "[text]") {
  auto const ob = fixtures::open_book_7();
  auto const y  = parse_pattern(slurp("open_book_7.txt"));
  CHECK(y.size() == 7);
  CHECK(y == *ob.y);
  CHECK(parse_below_set(slurp("open_book_7_y0.txt")) == ob.y0);
  CHECK(parse_below_set(slurp("open_book_7_y1.txt")) == ob.y1);
  CHECK(parse_pattern(slurp("open_book_13.txt")) == *fixtures::open_book_13().y);
  CHECK(parse_below_set(slurp("lengths_a.txt")) == fixtures::length_example().a);
  CHECK(equal(parse_element(slurp("three_leaf_element.txt")), fixtures::three_leaf_element()));
}

TEST_CASE("minimal pattern text", "[text]") {
  auto const p = parse_pattern("s=2\n0:e\n1:e\n");
  CHECK(p == make_pattern(2, {"0:e", "1:e"}));
  auto const q = parse_pattern("# halves\ns=2\n\n1:e\n0:e\n");
  CHECK(q == p);
}

TEST_CASE("syntax errors carry positions", "[text]") {
  expect_syntax_error("s=2\n0:\n---\n", "line 2");
  expect_syntax_error("s=2\n0:e:1\n---\n", "line 2");
  expect_syntax_error("s=x\n---\n", "line 1");
  expect_syntax_error("s=2\n0:e\n1:e\n", "---");
  try {
    (void)parse_element("s=2\n0:e 1:e\n");
    FAIL("expected SyntaxError");
  } catch (Error const& e) {
    CHECK(e.kind() == ErrorKind::SyntaxError);
  }
}

TEST_CASE("random round trips", "[text]") {
  Rng rng(5);
  for (int k = 0; k < 200; ++k) {
    int const  s = 1 + static_cast<int>(pick(rng, 3));
    auto const y = share(random_pattern(s, 1 + pick(rng, 7), rng));
    CHECK(parse_pattern(to_text(*y)) == *y);
    if (y->size() >= 2) {
      auto const a = random_below(y, 1 + pick(rng, y->size() - 1), rng, 0.5);
      CHECK(parse_below_set(to_text(a)) == a);
      CHECK(to_text(parse_below_set(to_text(a))) == to_text(a));
    }
    auto const g = random_element(s, 1 + pick(rng, 5), rng);
    CHECK(equal(parse_element(to_text(g)), g));
  }
}

TEST_CASE("graph text and dot", "[text]") {
  auto const q = share(fixtures::quadrants());
  auto const g = gamma(BelowSet::from_pattern(root_pattern(2), q));
  auto const t = to_text(g);
  CHECK(t.find("0:0 <-> 1:0 : 1") != std::string::npos);
  auto const dot = to_dot(g);
  CHECK(dot.rfind("graph gamma {", 0) == 0);
  CHECK(dot.find("[label=2]") != std::string::npos);
}
