// Acceptance run: one PASS/FAIL line per criterion.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "brinv/complex_lab.hpp"
#include "brinv/fixtures.hpp"
#include "brinv/oracles.hpp"
#include "brinv/pushing.hpp"
#include "brinv/suites.hpp"

using namespace brinv;

namespace {

struct Outcome {
  bool        ok = true;
  std::string detail;

  void require(bool cond, std::string const& what) {
    if (!cond) {
      ok = false;
      if (!detail.empty()) {
        detail += "; ";
      }
      detail += what;
    }
  }
  void suite(SuiteReport const& r) {
    std::string line = r.name + " " + std::to_string(r.cases) + " cases, "
                       + std::to_string(r.failure_count()) + " failures";
    if (!r.failures.empty()) {
      line += " (first: " + r.failures.front().what + ")";
    }
    if (r.budget_exceeded) {
      line += " (budget exceeded)";
    }
    require(r.pass, line);
    if (r.pass) {
      notes.push_back(r.name + " " + std::to_string(r.cases) + " cases");
    }
  }
  std::vector<std::string> notes;
};

using Clock = std::chrono::steady_clock;

int failures = 0;

void criterion(int n, char const* title, double limit_s, std::function<void(Outcome&)> body) {
  Outcome    out;
  auto const start = Clock::now();
  try {
    body(out);
  } catch (std::exception const& e) {
    out.require(false, std::string("exception: ") + e.what());
  }
  double const secs = std::chrono::duration<double>(Clock::now() - start).count();
  if (limit_s > 0) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.2f s exceeds %.0f s", secs, limit_s);
    out.require(secs < limit_s, buf);
  }
  std::string info = out.detail;
  if (out.ok) {
    for (auto const& s : out.notes) {
      info += (info.empty() ? "" : "; ") + s;
    }
  }
  std::printf("%s [%d] %s (%.2f s)%s%s\n", out.ok ? "PASS" : "FAIL", n, title, secs,
              info.empty() ? "" : ": ", info.c_str());
  std::fflush(stdout);
  failures += !out.ok;
}

}  // namespace

int main() {
  criterion(1, "open-book glb involves 7, 8 and 13", 10, [](Outcome& o) {
    for (auto const& ob :
         {fixtures::open_book_7(), fixtures::open_book_8(), fixtures::open_book_13()}) {
      auto const            root = BelowSet::from_pattern(root_pattern(3), ob.y);
      std::vector<BelowSet> omega{ob.y0, ob.y1};
      auto const            n    = std::to_string(ob.y->size());
      auto const            m    = glb_above(root, omega);
      o.require(involves(m) == ob.expected_involves,
                n + "-leaf glb involves " + std::to_string(involves(m)));
      auto const lows = oracle::common_lower_bounds(root, omega);
      o.require(lows.size() == 1 && lows.front() == root,
                n + "-leaf oracle finds " + std::to_string(lows.size()) + " lower bounds");
    }
  });

  criterion(2, "open-book graph and middle edge", 1, [](Outcome& o) {
    auto const ob   = fixtures::open_book_7();
    auto const root = BelowSet::from_pattern(root_pattern(3), ob.y);
    auto const g    = gamma(root);
    auto       l    = [&](int k) { return leaf_of(*ob.y, ob.label[k - 1]); };
    std::vector<std::tuple<int, int, int>> expected{{1, 2, 2}, {2, 3, 1}, {4, 5, 1}, {5, 6, 2},
                                                    {3, 4, 3}, {2, 5, 3}, {1, 6, 3}};
    o.require(g.edges.size() == 7, std::to_string(g.edges.size()) + " edges");
    for (auto [i, j, c] : expected) {
      o.require(g.has_edge(l(i), l(j), c), "missing {" + std::to_string(i) + ","
                                               + std::to_string(j) + "}");
    }
    std::size_t isolated = 0;
    for (auto const& d : components(g)) {
      if (d.edges.empty()) {
        ++isolated;
        o.require(d.vertices == std::vector<LeafIndex>{l(7)}, "wrong isolated vertex");
      } else {
        auto const shape = classify(d);
        Edge const mid{std::min(l(2), l(5)), std::max(l(2), l(5)), 3};
        o.require(shape.tag == ShapeTag::OpenBook, "not an open book");
        o.require(shape.middle && *shape.middle == mid, "wrong middle edge");
      }
    }
    o.require(isolated == 1, std::to_string(isolated) + " isolated vertices");
    o.require(choose_edge_3v(root) == Edge{std::min(l(2), l(5)), std::max(l(2), l(5)), 3},
              "choose_edge_3v");
  });

  criterion(3, "lengths, glueable pairs and local maximality", 1, [](Outcome& o) {
    auto const f = fixtures::length_example();
    o.require(length(f.a, f.leaf(5)) == 2, "l(A,5) = " + std::to_string(length(f.a, f.leaf(5))));
    for (int i = 1; i <= 6; ++i) {
      for (int j = i + 1; j <= 6; ++j) {
        auto const c = glueable(f.a, f.leaf(i), f.leaf(j));
        std::optional<Colour> want;
        if (i == 1 && j == 2) {
          want = 1;
        } else if (i == 5 && j == 6) {
          want = 2;
        }
        o.require(c == want, "pair {" + std::to_string(i) + "," + std::to_string(j) + "}");
      }
      o.require(locally_maximal(f.a, f.leaf(i)) == (i != 4),
                "local maximality of " + std::to_string(i));
    }
  });

  criterion(4, "two-colour edge and square scans", 0, [](Outcome& o) {
    o.suite(run_suite("tec2a"));
    o.suite(run_suite("tec2"));
  });

  criterion(5, "three-colour component scan", 0, [](Outcome& o) {
    o.suite(run_suite("graphs"));
  });

  criterion(6, "pushing certificates", 0, [](Outcome& o) {
    o.suite(run_suite("pushing_2v"));
    o.suite(run_suite("pushing_3v"));
  });

  criterion(7, "connectivity of four-leaf slices", 300, [](Outcome& o) {
    o.require(alpha(0) == 4 && nu(0, 0) == 4, "alpha(0)");
    for (auto const& p : enumerate_patterns(2, 4)) {
      if (p.size() != 4) {
        continue;
      }
      auto const b0 = betti(order_complex(k_y(share(p)), 1), 0)[0];
      o.require(b0 == 1, "beta_0 = " + std::to_string(b0) + " for a four-leaf pattern");
    }
    auto const two = k_y(share(make_pattern(2, {"0:e", "1:e"})));
    auto const b0  = betti(order_complex(two, 1), 0)[0];
    o.require(b0 == 4, "two-leaf beta_0 = " + std::to_string(b0));
  });

  criterion(8, "bound functions", 0, [](Outcome& o) {
    o.require(nu(0, 0) == 4, "nu_0(0)");
    o.require(mu(4, 0) == 8, "mu_4(0)");
    o.require(alpha(1) == 18, "alpha(1)");
    for (std::size_t r = 0; r <= 8; ++r) {
      for (std::size_t t = 0; t <= 4; ++t) {
        o.require(mu(r, t) == oracle::mu_closed_form(r, t), "closed form disagrees");
        if (t > 0) {
          o.require(mu(r, t) == 2 + BigInt(t + 1) * mu(r, t - 1), "recurrence");
        }
      }
    }
  });

  criterion(9, "group and expansion laws", 0, [](Outcome& o) {
    o.suite(run_suite("group_axioms"));
    o.suite(run_suite("fragment_canonical"));
    std::size_t checked = 0;
    for (int s = 1; s <= 3; ++s) {
      for (auto const& p : enumerate_patterns(s, s == 3 ? 5 : 6)) {
        for (auto const& b : p) {
          for (Colour c = 1; c <= s; ++c) {
            o.require(expand(p, b, c).size() == p.size() + 1, "size law");
            ++checked;
          }
        }
      }
    }
    o.notes.push_back("size law " + std::to_string(checked) + " expansions");
  });

  criterion(10, "greedy glb and lub against brute force", 0, [](Outcome& o) {
    o.suite(run_suite("glb_laws"));
    o.suite(run_suite("lub_minimality"));
  });

  return failures == 0 ? 0 : 1;
}
