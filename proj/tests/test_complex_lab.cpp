#include <catch_amalgamated.hpp>

#include "brinv/complex_lab.hpp"
#include "brinv/fixtures.hpp"
#include "brinv/oracles.hpp"

using namespace brinv;

TEST_CASE("two-box slice", "[complex]") {
  auto const slice = k_y(share(make_pattern(2, {"0:e", "1:e"})));
  CHECK(slice.size() == 4);
  std::size_t boxes = 0;
  for (std::size_t v = 0; v < slice.size(); ++v) {
    CHECK(slice.above[v].empty());
    boxes += is_box_world(slice.vertices[v]);
  }
  CHECK(boxes == 1);
  auto const cx = order_complex(slice, 1);
  CHECK(cx.count(0) == 4);
  CHECK(cx.count(1) == 0);
  CHECK(betti(cx, 0)[0] == 4);
}

TEST_CASE("box-only slices are cones", "[complex]") {
  auto const q     = share(fixtures::quadrants());
  auto const slice = k_y(q, {.box_only = true});
  CHECK(slice.size() == 7);
  for (auto const& p : enumerate_patterns(2, 5)) {
    if (p.size() < 2) {
      continue;
    }
    auto const s = k_y(share(p), {.box_only = true});
    auto const h = homology(order_complex(s, 3), 2);
    CHECK(h.betti == std::vector<std::size_t>{1, 0, 0});
  }
}

TEST_CASE("sigma_r filtration", "[complex]") {
  auto const slice = k_y(share(fixtures::quadrants()));
  auto const whole = order_complex(slice, 2);
  CHECK(sigma_r(slice, 4, 2).total() == whole.total());
  CHECK(sigma_r(slice, 0, 2).total() == 0);
  auto const two = sigma_r(slice, 2, 2);
  for (auto const& level : two.by_dim) {
    for (auto const& simplex : level) {
      CHECK(involves(slice.vertices[simplex.front()]) == 2);
    }
  }
}

TEST_CASE("boundary of boundary vanishes", "[complex]") {
  auto const slice = k_y(share(fixtures::quadrants()));
  auto const cx    = order_complex(slice, 3);
  for (std::size_t d = 2; d <= 3; ++d) {
    CHECK(boundary_squares_to_zero(boundary(cx, d - 1), boundary(cx, d)));
  }
}

TEST_CASE("homology of small complexes", "[complex]") {
  // A hollow triangle from three incomparable points and their pairwise joins
  // is modelled directly as an order complex.
  OrderComplex circle;
  circle.by_dim = {{{0}, {1}, {2}}, {{0, 1}, {0, 2}, {1, 2}}};
  auto const h = homology(circle, 1);
  CHECK(h.betti == std::vector<std::size_t>{1, 1});

  OrderComplex point;
  point.by_dim = {{{0}}};
  CHECK(homology(point, 0).betti == std::vector<std::size_t>{1});
}

TEST_CASE("Smith invariants", "[complex]") {
  std::vector<std::vector<BigInt>> m{{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}};
  auto const inv = smith_invariants(m);
  CHECK(inv == std::vector<BigInt>{2, 6, 12});
  std::vector<std::vector<BigInt>> z{{0, 0}, {0, 0}};
  CHECK(smith_invariants(z).empty());
}

TEST_CASE("bound functions", "[complex]") {
  CHECK(nu(0, 0) == 4);
  CHECK(alpha(0) == 4);
  CHECK(mu(4, 0) == 8);
  CHECK(alpha(1) == 18);
  for (std::size_t r = 0; r <= 8; ++r) {
    for (std::size_t t = 0; t <= 4; ++t) {
      CHECK(mu(r, t) == oracle::mu_closed_form(r, t));
      if (t > 0) {
        CHECK(mu(r, t) == 2 + BigInt(t + 1) * mu(r, t - 1));
      }
    }
  }
  auto const b = nu_mu_alpha(4, 1);
  CHECK(b.nu == b.mu);
  CHECK(b.alpha == 18);
}

TEST_CASE("filtration counts", "[complex]") {
  auto const two = filtration_stats(2, 3);
  CHECK(two[0].patterns == 1);
  CHECK(two[1].patterns == 2);
  CHECK(two[2].patterns == 8);
  auto const one = filtration_stats(1, 6);
  std::vector<std::size_t> catalan{1, 1, 2, 5, 14, 42};
  for (std::size_t k = 0; k < 6; ++k) {
    CHECK(one[k].patterns == catalan[k]);
    CHECK(one[k].one_orbit);
  }
  for (auto const& row : filtration_stats(3, 4)) {
    CHECK(row.one_orbit);
  }
}

TEST_CASE("slice budget", "[complex]") {
  try {
    (void)k_y(share(fixtures::octants()), {.box_only = false, .budget = 100});
    FAIL("expected BudgetExceeded");
  } catch (Error const& e) {
    CHECK(is_budget_error(e));
  }
}
