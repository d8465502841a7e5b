#pragma once

// Verification suites. Each suite runs an exhaustive scan up to a stated
// size plus a seeded random campaign, and reports every failure with a
// reproduction block.

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "brinv/boxes.hpp"
#include "brinv/brin_group.hpp"
#include "brinv/complex_lab.hpp"
#include "brinv/errors.hpp"
#include "brinv/fixtures.hpp"
#include "brinv/fragments.hpp"
#include "brinv/gamma.hpp"
#include "brinv/oracles.hpp"
#include "brinv/pushing.hpp"
#include "brinv/random.hpp"
#include "brinv/text_io.hpp"

namespace brinv {

struct SuiteOptions {
  int           s        = 0;  // 0: suite default
  std::size_t   max_size = 0;  // 0: suite default
  std::uint64_t seed     = 1;
  std::size_t   budget   = 0;  // 0: suite default; number of sampled cases
};

struct Failure {
  std::string what;
  std::string repro;
};

struct SuiteReport {
  std::string                        name;
  std::size_t                        cases = 0;
  std::vector<Failure>               failures;
  std::uint64_t                      seed    = 0;
  double                             elapsed = 0;
  bool                               pass    = false;
  bool                               budget_exceeded = false;
  std::map<std::string, std::size_t> counters;

  void fail(std::string what, std::string repro = {}) {
    if (failures.size() < 50) {
      failures.push_back({std::move(what), std::move(repro)});
    } else {
      ++counters["failures_not_recorded"];
    }
  }
  void check(bool ok, std::string const& what, std::string const& repro = {}) {
    if (!ok) {
      fail(what, repro);
    }
  }
  std::size_t failure_count() const {
    auto it = counters.find("failures_not_recorded");
    return failures.size() + (it == counters.end() ? 0 : it->second);
  }
};

inline std::vector<std::string> const& suite_names() {
  static std::vector<std::string> const names{
      "tec2a",        "tec2",          "graphs",        "general_2v",
      "pushing_2v",   "pushing_3v",    "openbook_regression", "group_axioms",
      "glb_laws",     "lub_minimality", "connectivity_scan",   "fragment_canonical"};
  return names;
}

namespace suite_detail {

  inline std::size_t or_default(std::size_t v, std::size_t d) { return v ? v : d; }

  // Box-world sets strictly below Y.
  inline std::vector<BelowSet> box_coarsenings(std::shared_ptr<Pattern const> const& y) {
    auto                  top = BelowSet::top(y);
    std::vector<BelowSet> order{top};
    BelowSetSet           seen{top};
    for (std::size_t head = 0; head < order.size(); ++head) {
      for (auto& n : detail::box_contractions_of(order[head])) {
        if (seen.insert(n).second) {
          order.push_back(std::move(n));
        }
      }
    }
    order.erase(order.begin());
    return order;
  }

  inline std::vector<BelowSet> full_slice(std::shared_ptr<Pattern const> const& y,
                                          std::size_t budget = 200'000) {
    auto                  top = BelowSet::top(y);
    std::vector<BelowSet> order{top};
    BelowSetSet           seen{top};
    for (std::size_t head = 0; head < order.size(); ++head) {
      for (auto& n : contractions_of(order[head])) {
        if (seen.insert(n).second) {
          order.push_back(std::move(n));
          if (order.size() > budget) {
            throw Error(ErrorKind::BudgetExceeded, "slice exceeds budget");
          }
        }
      }
    }
    order.erase(order.begin());
    return order;
  }

  // Visits (Y, A) instances: all box-world A for hierarchical Y with
  // 2 <= |Y| <= box_max, every A for |Y| <= exotic_max, and `samples`
  // random instances with |Y| <= sample_max mixing both worlds.
  struct InstancePlan {
    int         s;
    std::size_t box_max;
    std::size_t exotic_max;
    std::size_t sample_max;
    std::size_t samples;
  };

  inline void for_instances(InstancePlan const& plan, Rng& rng, SuiteReport& rep,
                            std::function<void(BelowSet const&)> const& visit) {
    auto const patterns = enumerate_patterns(plan.s, std::max(plan.box_max, plan.exotic_max));
    for (auto const& p : patterns) {
      if (p.size() < 2) {
        continue;
      }
      auto y = share(p);
      if (p.size() <= plan.box_max) {
        for (auto const& a : box_coarsenings(y)) {
          ++rep.counters["box_instances"];
          visit(a);
        }
      }
      if (p.size() <= plan.exotic_max) {
        for (auto const& a : full_slice(y)) {
          if (is_box_world(a) && p.size() <= plan.box_max) {
            continue;
          }
          ++rep.counters["exotic_instances"];
          visit(a);
        }
      }
    }
    for (std::size_t k = 0; k < plan.samples; ++k) {
      auto n = 2 + pick(rng, plan.sample_max - 1);
      auto y = share(random_pattern(plan.s, n, rng));
      auto a = random_below(y, 1 + pick(rng, n - 1), rng, 0.6);
      ++rep.counters["sampled_instances"];
      visit(a);
    }
  }

  inline std::string repro(BelowSet const& a) { return to_text(a); }

  inline std::string edge_text(Pattern const& y, Edge const& e) {
    return y[e.u].str() + " <-> " + y[e.v].str() + " : " + std::to_string(e.colour);
  }

  ////////////////////////////////////////////////////////////////////
  // Pairs of contractions above A
  ////////////////////////////////////////////////////////////////////

  inline void check_tec2a(BelowSet const& a, ColouredGraph const& g, SuiteReport& rep) {
    auto const& y = a.base();
    for (std::size_t i = 0; i < g.edges.size(); ++i) {
      for (std::size_t j = i + 1; j < g.edges.size(); ++j) {
        auto const& e0 = g.edges[i];
        auto const& e1 = g.edges[j];
        bool share = e0.u == e1.u || e0.u == e1.v || e0.v == e1.u || e0.v == e1.v;
        if (!share) {
          continue;
        }
        ++rep.cases;
        bool same_pair = e0.u == e1.u && e0.v == e1.v;
        rep.check(e0.colour != e1.colour && !same_pair,
                  "non-disjoint contractions " + edge_text(y, e0) + " and " + edge_text(y, e1),
                  repro(a));
      }
    }
    std::vector<std::size_t> degree(y.size(), 0);
    for (auto const& e : g.edges) {
      ++degree[e.u];
      ++degree[e.v];
    }
    for (std::size_t v = 0; v < y.size(); ++v) {
      rep.check(degree[v] <= static_cast<std::size_t>(2 * (y.colours() - 1)),
                "vertex " + y[v].str() + " has " + std::to_string(degree[v]) + " partners",
                repro(a));
    }
  }

  inline void check_tec2(BelowSet const& a, ColouredGraph const& g, SuiteReport& rep) {
    auto const& y     = a.base();
    auto const  comps = components(g);
    for (std::size_t i = 0; i < g.edges.size(); ++i) {
      for (std::size_t j = i + 1; j < g.edges.size(); ++j) {
        auto const& e0 = g.edges[i];
        auto const& e1 = g.edges[j];
        bool share = e0.u == e1.u || e0.u == e1.v || e0.v == e1.u || e0.v == e1.v;
        if (!share) {
          continue;
        }
        std::vector<BelowSet> omega{chosen_contraction(a, e0), chosen_contraction(a, e1)};
        auto const m = glb_above(a, omega);
        std::vector<LeafIndex> verts{e0.u, e0.v, e1.u, e1.v};
        bool hyp = std::all_of(verts.begin(), verts.end(),
                               [&m](LeafIndex v) { return locally_maximal(m, v); });
        if (!hyp) {
          ++rep.counters["pairs_without_hypothesis"];
          continue;
        }
        ++rep.cases;
        auto const& comp = *std::find_if(comps.begin(), comps.end(),
                                         [&](Component const& c) { return c.contains(e0.u); });
        auto const shape = classify(comp);
        rep.check(shape.tag == ShapeTag::Square,
                  std::string("component is ") + to_string(shape.tag) + " for "
                      + edge_text(y, e0) + ", " + edge_text(y, e1),
                  repro(a));
        rep.check(involved_leaves(m) == comp.vertices && involves(m) <= 4,
                  "glb involves " + std::to_string(involves(m)) + " leaves for "
                      + edge_text(y, e0) + ", " + edge_text(y, e1),
                  repro(a));
      }
    }
  }

  // Shapes of *-connected components, three colours.
  inline void check_graphs(BelowSet const& a, SuiteReport& rep, bool cross_check) {
    auto const& y = a.base();
    for (auto const& d : components(gamma(a))) {
      if (d.edges.empty()) {
        continue;
      }
      bool const star = is_star_connected(a, d);
      if (cross_check) {
        auto const res = star_connected(a, d);
        rep.check(res.star == star, "witness search disagrees with range-top test", repro(a));
        if (res.witness) {
          rep.check(below_leq(a, *res.witness) && all_locally_maximal(*res.witness, d),
                    "witness fails its own conditions", repro(a));
        }
        if (y.size() <= 5) {
          rep.check(oracle::star_connected_exhaustive(a, d) == star,
                    "exhaustive witness scan disagrees", repro(a));
        }
      }
      if (!star) {
        ++rep.counters["components_not_star"];
        continue;
      }
      ++rep.cases;
      auto const shape = classify(d);
      ++rep.counters[std::string("shape_") + to_string(shape.tag)];
      rep.check(shape.tag != ShapeTag::Other,
                "*-connected component with " + std::to_string(d.vertices.size())
                    + " vertices and " + std::to_string(d.edges.size())
                    + " edges is not one of the four shapes",
                repro(a));
      if (shape.tag == ShapeTag::Other) {
        continue;
      }
      if (shape.tag != ShapeTag::OpenBook) {
        auto const m   = glb_of_component(a, d);
        auto const inv = involved_leaves(m);
        rep.check(std::includes(d.vertices.begin(), d.vertices.end(), inv.begin(), inv.end())
                      && inv.size() <= 8,
                  "glb of a " + std::string(to_string(shape.tag)) + " involves "
                      + std::to_string(inv.size()) + " leaves, some outside the component",
                  repro(a));
      }
      if (!is_box_world(a)) {
        continue;
      }
      auto const stack = enveloping_stack(d, y);
      rep.check(stack.size() == d.vertices.size()
                    || (shape.tag == ShapeTag::OpenBook && stack.size() == 8),
                "enveloping stack of size " + std::to_string(stack.size()), repro(a));
    }
  }

  // gh(b) == h(g(b)), splitting b where g(b) straddles boxes of dom h.
  inline bool composite_acts(GroupElement const& gh, GroupElement const& g,
                             GroupElement const& h, Box const& b, int depth) {
    try {
      return gh.apply_box(b) == h.apply_box(g.apply_box(b));
    } catch (Error const& e) {
      if (e.kind() != ErrorKind::BoxNotBelowDomain || depth == 0) {
        throw;
      }
    }
    Colour c = static_cast<Colour>(1 + depth % b.colours());
    return composite_acts(gh, g, h, b.half(c, 0), depth - 1)
           && composite_acts(gh, g, h, b.half(c, 1), depth - 1);
  }

  // Maximum of the members of `up` below every member of omega, when unique.
  inline std::optional<BelowSet> max_below_all(std::vector<BelowSet> const& up,
                                               std::vector<BelowSet> const& omega) {
    std::vector<BelowSet const*> lows;
    for (auto const& n : up) {
      if (std::all_of(omega.begin(), omega.end(),
                      [&n](BelowSet const& b) { return below_leq(n, b); })) {
        lows.push_back(&n);
      }
    }
    if (lows.empty()) {
      return std::nullopt;
    }
    auto best = *std::max_element(lows.begin(), lows.end(),
                                  [](BelowSet const* x, BelowSet const* y) {
                                    return x->size() < y->size();
                                  });
    for (auto const* n : lows) {
      if (!below_leq(*n, *best)) {
        return std::nullopt;
      }
    }
    return *best;
  }

  ////////////////////////////////////////////////////////////////////
  // Chains
  ////////////////////////////////////////////////////////////////////

  inline std::vector<Chain> sub_chains(Chain const& c) {
    std::vector<Chain> out;
    auto const         n = c.vertices.size();
    for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
      Chain sub;
      for (std::size_t k = 0; k < n; ++k) {
        if (mask & (std::size_t{1} << k)) {
          sub.vertices.push_back(c.vertices[k]);
        }
      }
      out.push_back(std::move(sub));
    }
    return out;
  }

  inline void run_chain_campaign(int s, std::size_t max_leaves, std::size_t count,
                                 Rng& rng, SuiteReport& rep, bool componentwise_only) {
    for (std::size_t k = 0; k < count; ++k) {
      auto const n     = 2 + pick(rng, max_leaves - 1);
      auto const y     = share(random_pattern(s, n, rng));
      auto const t     = pick(rng, 4);
      auto const bias  = coin(rng, 0.5) ? 1.0 : 0.5;
      auto const chain = random_chain(y, t, rng, bias);
      ++rep.cases;
      try {
        auto const res = push_chain(chain);
        ++rep.counters["t=" + std::to_string(res.cert.t)];
        if (componentwise_only) {
          rep.check(res.cert.ok, "certificate: "
                                     + (res.cert.notes.empty() ? "" : res.cert.notes.front()),
                    to_text(chain));
          continue;
        }
        rep.check(res.cert.ok,
                  "certificate: " + (res.cert.notes.empty() ? "" : res.cert.notes.front()),
                  to_text(chain));
        auto const again = push_chain(chain);
        rep.check(again.m == res.m, "M(sigma) is not reproducible", to_text(chain));
        for (auto const& tau : sub_chains(chain)) {
          auto const mt = push_chain(tau);
          rep.check(mt.cert.ok, "sub-chain certificate failed", to_text(tau));
          rep.check(below_leq(res.m, mt.m), "order reversal fails on a sub-chain",
                    to_text(chain) + "# sub-chain\n" + to_text(tau));
        }
      } catch (Error const& e) {
        if (e.kind() == ErrorKind::StarSearchBudgetExceeded) {
          rep.budget_exceeded = true;
        }
        rep.fail(std::string("error: ") + e.what(), to_text(chain));
      }
    }
  }

}  // namespace suite_detail

////////////////////////////////////////////////////////////////////////
// Suites
////////////////////////////////////////////////////////////////////////

inline void suite_tec2a(SuiteOptions const& o, Rng& rng, SuiteReport& rep) {
  int const   s   = o.s ? o.s : 2;
  std::size_t max = suite_detail::or_default(o.max_size, s == 2 ? 7 : 5);
  suite_detail::InstancePlan plan{s, max, s == 2 ? 4u : 3u, max + 1,
                                  suite_detail::or_default(o.budget, 2000)};
  suite_detail::for_instances(plan, rng, rep, [&](BelowSet const& a) {
    suite_detail::check_tec2a(a, gamma(a), rep);
  });
}

inline void suite_tec2(SuiteOptions const& o, Rng& rng, SuiteReport& rep) {
  std::size_t max = suite_detail::or_default(o.max_size, 7);
  suite_detail::InstancePlan plan{2, max, 4, max + 1, suite_detail::or_default(o.budget, 2000)};
  suite_detail::for_instances(plan, rng, rep, [&](BelowSet const& a) {
    suite_detail::check_tec2(a, gamma(a), rep);
  });
}

inline void suite_graphs(SuiteOptions const& o, Rng& rng, SuiteReport& rep) {
  std::size_t max = suite_detail::or_default(o.max_size, 8);
  suite_detail::InstancePlan plan{3, std::min<std::size_t>(max, 7), 4, max,
                                  suite_detail::or_default(o.budget, 3000)};
  suite_detail::for_instances(plan, rng, rep, [&](BelowSet const& a) {
    suite_detail::check_graphs(a, rep, a.base().size() <= 4);
  });
  // Fixed instances for the larger shapes.
  auto const cube = BelowSet::from_pattern(root_pattern(3), share(fixtures::octants()));
  suite_detail::check_graphs(cube, rep, true);
  auto const comps = components(gamma(cube));
  rep.check(comps.size() == 1 && classify(comps[0]).tag == ShapeTag::Cube,
            "octants over the root are not a cube", to_text(cube));
  for (auto const& ob : {fixtures::open_book_7(), fixtures::open_book_8()}) {
    suite_detail::check_graphs(BelowSet::from_pattern(root_pattern(3), ob.y), rep, true);
  }
}

inline void suite_general_2v(SuiteOptions const& o, Rng& rng, SuiteReport& rep) {
  suite_detail::run_chain_campaign(2, suite_detail::or_default(o.max_size, 8),
                                   suite_detail::or_default(o.budget, 2000), rng, rep, true);
}

inline void suite_pushing(int s, SuiteOptions const& o, Rng& rng, SuiteReport& rep) {
  suite_detail::run_chain_campaign(s, suite_detail::or_default(o.max_size, s == 2 ? 8 : 9),
                                   suite_detail::or_default(o.budget, 10'000), rng, rep, false);
  // Fixed instances.
  auto const q    = share(fixtures::quadrants());
  auto const root = BelowSet::from_pattern(root_pattern(2), q);
  auto const a0   = BelowSet::from_pattern(make_pattern(2, {"e:0", "0:1", "1:1"}), q);
  if (s == 2) {
    auto const res = push_chain({{root, a0}});
    ++rep.cases;
    rep.check(res.m == a0 && res.cert.involves == 2 && res.cert.ok,
              "two-vertex quadrant chain", to_text(Chain{{root, a0}}));
    rep.check(check_order_reversing({{root, a0}}, {{a0}}), "quadrant order reversal");
  }
}

inline void suite_openbook(SuiteOptions const&, Rng&, SuiteReport& rep) {
  for (auto const& ob :
       {fixtures::open_book_7(), fixtures::open_book_8(), fixtures::open_book_13()}) {
    auto const            root = BelowSet::from_pattern(root_pattern(3), ob.y);
    std::vector<BelowSet> omega{ob.y0, ob.y1};
    auto const            m    = glb_above(root, omega);
    auto const            tag  = std::to_string(ob.y->size()) + "-leaf: ";
    ++rep.cases;
    rep.check(involves(m) == ob.expected_involves,
              tag + "glb involves " + std::to_string(involves(m)), to_text(*ob.y));
    auto const lows = oracle::common_lower_bounds(root, omega);
    rep.check(lows.size() == 1 && lows.front() == root,
              tag + std::to_string(lows.size()) + " common lower bounds", to_text(*ob.y));
    auto const g     = gamma(root);
    auto const comps = components(g);
    auto const e0    = *g.find(ob.y0.elems().back().cells()[0].leaf,
                               ob.y0.elems().back().cells()[1].leaf);
    auto const e1    = *g.find(ob.y1.elems().back().cells()[0].leaf,
                               ob.y1.elems().back().cells()[1].leaf);
    for (auto const& d : comps) {
      if (d.contains(e0) && d.contains(e1)) {
        rep.check(classify(d).tag == ShapeTag::OpenBook, tag + "component is not an open book");
      }
    }
    // No 4-cycle of Γ through both gluings.
    bool square = false;
    for (auto const& a : g.edges) {
      for (auto const& b : g.edges) {
        auto touches = [](Edge const& x, LeafIndex v) { return x.u == v || x.v == v; };
        LeafIndex p  = e0.u == e1.u || e0.u == e1.v ? e0.v : e0.u;  // end of e0
        LeafIndex r  = e1.u == e0.u || e1.u == e0.v ? e1.v : e1.u;  // end of e1
        for (std::size_t w = 0; w < ob.y->size(); ++w) {
          auto lw = static_cast<LeafIndex>(w);
          if (a == b || !touches(a, p) || !touches(a, lw) || !touches(b, r) || !touches(b, lw)
              || lw == p || lw == r) {
            continue;
          }
          square = true;
        }
      }
    }
    rep.check(!square, tag + "a square contains both gluings");
  }
  // The seven-leaf graph in full.
  auto const ob   = fixtures::open_book_7();
  auto const root = BelowSet::from_pattern(root_pattern(3), ob.y);
  auto const g    = gamma(root);
  auto       l    = [&](int k) { return leaf_of(*ob.y, ob.label[k - 1]); };
  std::vector<std::tuple<int, int, int>> expected{{1, 2, 2}, {2, 3, 1}, {4, 5, 1}, {5, 6, 2},
                                                  {3, 4, 3}, {2, 5, 3}, {1, 6, 3}};
  ++rep.cases;
  rep.check(g.edges.size() == expected.size(), "open book has "
                                                   + std::to_string(g.edges.size()) + " edges");
  for (auto [i, j, c] : expected) {
    rep.check(g.has_edge(l(i), l(j), c),
              "missing edge {" + std::to_string(i) + "," + std::to_string(j) + "}");
  }
  auto const chosen = choose_edge_3v(root);
  rep.check(chosen == Edge{std::min(l(2), l(5)), std::max(l(2), l(5)), 3},
            "choose_edge_3v does not pick the middle edge");
}

inline void suite_group_axioms(SuiteOptions const& o, Rng& rng, SuiteReport& rep) {
  std::size_t const n = suite_detail::or_default(o.budget, 1000);
  for (std::size_t k = 0; k < n; ++k) {
    int const s = o.s ? o.s : static_cast<int>(2 + pick(rng, 2));
    auto g = random_element(s, 1 + pick(rng, 5), rng);
    auto h = random_element(s, 1 + pick(rng, 5), rng);
    auto f = random_element(s, 1 + pick(rng, 5), rng);
    auto e = GroupElement::identity(s);
    ++rep.cases;
    auto const repro = to_text(g) + to_text(h) + to_text(f);
    rep.check(equal(compose(compose(g, h), f), compose(g, compose(h, f))), "associativity", repro);
    rep.check(equal(compose(g, e), g) && equal(compose(e, g), g), "identity", repro);
    rep.check(equal(compose(g, inverse(g)), e) && equal(compose(inverse(g), g), e), "inverse",
              repro);
    rep.check(equal(inverse(inverse(g)), g), "double inverse", repro);
    // The action is compatible with composition.
    auto const gh = compose(g, h);
    for (auto const& b : gh.dom()) {
      rep.check(suite_detail::composite_acts(gh, g, h, b, 12), "action of a composite", repro);
    }
    // Halving commutes with the action.
    for (auto const& d : g.dom()) {
      for (Colour c = 1; c <= s; ++c) {
        auto img = g.apply_box(d);
        rep.check(g.apply_box(d.half(c, 0)) == img.half(c, 0)
                      && g.apply_box(d.half(c, 1)) == img.half(c, 1),
                  "halving does not commute with the action", repro);
      }
    }
  }
  // Expansion commutation and size law to depth 3.
  for (int s = 1; s <= 3; ++s) {
    for (auto const& p : enumerate_patterns(s, s == 3 ? 3 : 4)) {
      for (auto const& b : p) {
        for (Colour i = 1; i <= s; ++i) {
          auto const pi = expand(p, b, i);
          rep.check(pi.size() == p.size() + 1, "size law");
          rep.check(contract(pi, b.half(i, 0), b.half(i, 1), i) == p, "contract undoes expand");
          for (Colour j = 1; j <= s; ++j) {
            if (i == j) {
              continue;
            }
            ++rep.cases;
            auto ij = expand(expand(pi, b.half(i, 0), j), b.half(i, 1), j);
            auto pj = expand(p, b, j);
            auto ji = expand(expand(pj, b.half(j, 0), i), b.half(j, 1), i);
            rep.check(ij == ji, "halvings in colours " + std::to_string(i) + ", "
                                    + std::to_string(j) + " do not commute at " + b.str());
          }
        }
      }
    }
  }
  // Stabilizers are exactly the permutations of Y.
  for (int s = 2; s <= 3; ++s) {
    for (auto const& y : enumerate_patterns(s, s == 2 ? 4 : 3)) {
      std::vector<std::size_t> perm(y.size());
      std::iota(perm.begin(), perm.end(), 0);
      std::vector<GroupElement> perms;
      do {
        perms.push_back(transitive_element(y, y, perm));
        ++rep.cases;
        rep.check(stabilizes(perms.back(), y), "permutation does not stabilize", to_text(y));
      } while (std::next_permutation(perm.begin(), perm.end()));
      for (int k = 0; k < 20; ++k) {
        auto g        = random_element(s, 1 + pick(rng, 4), rng);
        bool stab     = stabilizes(g, y);
        bool matching = std::any_of(perms.begin(), perms.end(),
                                    [&g](GroupElement const& p) { return equal(g, p); });
        ++rep.cases;
        rep.check(stab == matching, "stabilizer characterization", to_text(y) + to_text(g));
      }
      for (auto const& p : perms) {
        auto g = compose(p, random_element(s, 1, rng));  // identity-sized noise
        rep.check(stabilizes(g, y) == std::any_of(perms.begin(), perms.end(),
                                                  [&g](GroupElement const& q) {
                                                    return equal(g, q);
                                                  }),
                  "stabilizer characterization", to_text(y));
      }
    }
  }
}

inline void suite_glb_laws(SuiteOptions const& o, Rng& rng, SuiteReport& rep) {
  std::size_t const n = suite_detail::or_default(o.budget, 600);
  for (std::size_t k = 0; k < n; ++k) {
    int const   s    = o.s ? o.s : static_cast<int>(2 + pick(rng, 2));
    std::size_t ymax = suite_detail::or_default(o.max_size, s == 2 ? 6 : 5);
    auto const  y    = share(random_pattern(s, 2 + pick(rng, ymax - 1), rng));
    auto const  a    = random_below(y, 1 + pick(rng, y->size() - 1), rng, 0.6);
    std::vector<BelowSet> omega;
    auto const count = 1 + pick(rng, 3);
    for (std::size_t i = 0; i < count; ++i) {
      omega.push_back(random_above(a, rng, y->size()));
    }
    ++rep.cases;
    auto const repro = to_text(a);
    auto const m     = glb_above(a, omega);
    auto const mo    = oracle::interval_max(a, omega);
    rep.check(mo && *mo == m, "greedy glb differs from the interval maximum", repro);
    rep.check(glb_above(a, omega, rng) == m, "glb depends on the climb order", repro);
    // Subset and rebase law.
    std::vector<BelowSet> lambda(omega.begin(), omega.begin() + 1 + pick(rng, omega.size()));
    auto const ml = glb_above(a, lambda);
    auto const b  = random_above(a, rng, 3);
    rep.check(below_leq(m, ml), "glb over the larger family is not lower", repro);
    if (std::all_of(lambda.begin(), lambda.end(),
                    [&b](BelowSet const& x) { return below_leq(b, x); })) {
      ++rep.counters["rebase_checks"];
      rep.check(glb_above(b, lambda) == ml, "glb changes when the base moves up", repro);
    }
    // Disjoint contractions combine additively.
    std::vector<BelowSet> disjoint;
    std::vector<int>      used(y->size(), 0);
    for (std::size_t i = 0; i + 1 < y->size(); i += 2) {
      if (coin(rng, 0.5)) {
        Colour c = static_cast<Colour>(1 + pick(rng, static_cast<std::size_t>(s)));
        disjoint.push_back(simple_contraction(
            y, {static_cast<LeafIndex>(i), static_cast<LeafIndex>(i + 1), c}));
      }
    }
    if (!disjoint.empty()) {
      auto const g = gglb(y, disjoint);
      rep.check(involves(g) == 2 * disjoint.size(), "gglb involvement is not additive", repro);
      for (auto const& d : disjoint) {
        rep.check(below_leq(g, d), "gglb is not below a contraction", repro);
      }
    }
    // Size law for expansions of below-sets.
    for (auto const& e : expansions_of(a)) {
      rep.check(e.size() == a.size() + 1 && below_leq(a, e), "expansion size law", repro);
    }
  }
  // Exhaustive: every box-world A up to the scan size, every A of the full
  // slice for the smallest bases; Omega runs over pairs of Γ_A contractions
  // and a spread of pairs from [A, Y].
  for (int s = 2; s <= 3; ++s) {
    if (o.s && o.s != s) {
      continue;
    }
    std::size_t const box_max = suite_detail::or_default(o.max_size, s == 2 ? 6 : 5);
    std::size_t const exo_max = s == 2 ? 4 : 3;
    for (auto const& p : enumerate_patterns(s, std::max(box_max, exo_max))) {
      if (p.size() < 2) {
        continue;
      }
      auto const y = share(p);
      std::vector<BelowSet> bases;
      if (p.size() <= exo_max) {
        bases = suite_detail::full_slice(y);
      } else if (p.size() <= box_max) {
        bases = suite_detail::box_coarsenings(y);
      }
      for (auto const& a : bases) {
        auto const up = interval(a);
        auto const check = [&](std::vector<BelowSet> const& omega) {
          ++rep.cases;
          auto mo = suite_detail::max_below_all(up, omega);
          rep.check(mo && *mo == glb_above(a, omega),
                    "greedy glb differs from the interval maximum", to_text(a));
        };
        auto const g = gamma(a);
        std::vector<BelowSet> tops;
        for (auto const& e : g.edges) {
          tops.push_back(chosen_contraction(a, e));
        }
        for (std::size_t i = 0; i < tops.size(); ++i) {
          for (std::size_t j = i; j < tops.size(); ++j) {
            check({tops[i], tops[j]});
          }
        }
        for (std::size_t j = 0; j < up.size(); j += 1 + up.size() / 8) {
          check({up[j], up[(j * 7 + 3) % up.size()]});
        }
      }
    }
  }
}

inline void suite_lub(SuiteOptions const& o, Rng&, SuiteReport& rep) {
  for (int s = 2; s <= 3; ++s) {
    if (o.s && o.s != s) {
      continue;
    }
    std::size_t const max   = suite_detail::or_default(o.max_size, s == 2 ? 6 : 5);
    auto const        univ  = enumerate_patterns(s, max);
    std::size_t const n     = univ.size();
    // up[i]: indices of patterns above univ[i].
    std::vector<std::vector<uint32_t>> up(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (univ[j].size() >= univ[i].size() && leq(univ[i], univ[j])) {
          up[i].push_back(static_cast<uint32_t>(j));
        }
      }
    }
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i; j < n; ++j) {
        std::vector<uint32_t> common;
        std::set_intersection(up[i].begin(), up[i].end(), up[j].begin(), up[j].end(),
                              std::back_inserter(common));
        auto const l = lub(univ[i], univ[j]);
        ++rep.cases;
        if (common.empty()) {
          rep.check(l.size() > max, "no common upper bound found below the lub size",
                    to_text(univ[i]) + to_text(univ[j]));
          continue;
        }
        // The least common upper bound: the member below all the others.
        std::optional<uint32_t> least;
        for (auto c : common) {
          if (std::all_of(common.begin(), common.end(), [&](uint32_t d) {
                return std::binary_search(up[c].begin(), up[c].end(), d);
              })) {
            least = c;
            break;
          }
        }
        rep.check(least && univ[*least] == l, "lub differs from the least common upper bound",
                  to_text(univ[i]) + to_text(univ[j]));
      }
    }
  }
  // Instance from the module contract.
  auto const l = lub(make_pattern(2, {"0:e", "1:e"}), make_pattern(2, {"e:0", "e:1"}));
  rep.check(l == fixtures::quadrants(), "halves do not meet in the quadrants");
}

inline void suite_connectivity(SuiteOptions const& o, Rng&, SuiteReport& rep) {
  int const s = o.s ? o.s : 2;
  if (s == 2) {
    for (auto const& p : enumerate_patterns(2, 4)) {
      if (p.size() != 4) {
        continue;
      }
      ++rep.cases;
      auto const slice = k_y(share(p));
      auto const h     = homology(order_complex(slice, 1), 0);
      ++rep.counters["full_slice_vertices_" + std::to_string(slice.size())];
      rep.check(h.betti[0] == 1, "beta_0 = " + std::to_string(h.betti[0]) + " for |Y| = 4",
                to_text(p));
    }
    auto const two = k_y(share(make_pattern(2, {"0:e", "1:e"})));
    ++rep.cases;
    rep.check(two.size() == 4 && betti(order_complex(two, 1), 0)[0] == 4,
              "the two-box slice does not have four components");
  }
  std::size_t const box_max = suite_detail::or_default(o.max_size, s == 2 ? 5 : 4);
  for (auto const& p : enumerate_patterns(s, box_max)) {
    if (p.size() < 2) {
      continue;
    }
    ++rep.cases;
    auto const slice = k_y(share(p), {.box_only = true});
    auto const h     = homology(order_complex(slice, 2), 1);
    if (s == 2) {
      rep.check(h.betti[0] == 1 && h.betti[1] == 0, "box-only slice is not acyclic", to_text(p));
    } else {
      ++rep.counters["box_only_beta0_" + std::to_string(h.betti[0])];
    }
  }
  // Bound functions.
  rep.check(nu(0, 0) == 4 && alpha(0) == 4 && mu(4, 0) == 8 && alpha(1) == 18,
            "bound function values");
  for (std::size_t r = 0; r <= 8; ++r) {
    for (std::size_t t = 0; t <= 4; ++t) {
      ++rep.cases;
      rep.check(mu(r, t) == oracle::mu_closed_form(r, t),
                "mu_" + std::to_string(r) + "(" + std::to_string(t) + ")");
    }
  }
}

inline void suite_fragment_canonical(SuiteOptions const& o, Rng& rng, SuiteReport& rep) {
  std::size_t const max = suite_detail::or_default(o.max_size, 4);
  for (int s = 2; s <= 3; ++s) {
    if (o.s && o.s != s) {
      continue;
    }
    for (auto const& p : enumerate_patterns(s, s == 2 ? max : std::min<std::size_t>(max, 3))) {
      if (p.size() < 2) {
        continue;
      }
      auto const y = share(p);
      for (auto const& w : suite_detail::full_slice(y)) {
        ++rep.cases;
        auto const repro = to_text(w);
        rep.check(parse_below_set(repro) == w, "text round trip", repro);
        for (auto const& f : w.elems()) {
          auto const merged = merge_cells(f, *y);
          rep.check(canonicalize(merged, *y) == f, "merged form does not canonicalize back",
                    repro);
          auto const shuffled = merge_cells(f, *y, rng);
          rep.check(canonicalize(shuffled, *y) == f, "random merge order changes the element",
                    repro);
          auto const b = as_box(f, *y);
          rep.check(b.has_value() == (merged.size() == 1 && merged[0].formal == Box(s)),
                    "box detection disagrees with full merging", repro);
        }
        for (auto const& e : expansions_of(w)) {
          rep.check(e.size() == w.size() + 1 && below_leq(w, e) && !below_leq(e, w),
                    "expansion order", repro);
        }
      }
    }
  }
}

inline SuiteReport run_suite(std::string const& name, SuiteOptions const& o = {}) {
  auto const start = std::chrono::steady_clock::now();
  SuiteReport rep;
  rep.name = name;
  rep.seed = o.seed;
  Rng rng(o.seed);
  try {
    if (name == "tec2a") {
      suite_tec2a(o, rng, rep);
    } else if (name == "tec2") {
      suite_tec2(o, rng, rep);
    } else if (name == "graphs") {
      suite_graphs(o, rng, rep);
    } else if (name == "general_2v") {
      suite_general_2v(o, rng, rep);
    } else if (name == "pushing_2v") {
      suite_pushing(2, o, rng, rep);
    } else if (name == "pushing_3v") {
      suite_pushing(3, o, rng, rep);
    } else if (name == "openbook_regression") {
      suite_openbook(o, rng, rep);
    } else if (name == "group_axioms") {
      suite_group_axioms(o, rng, rep);
    } else if (name == "glb_laws") {
      suite_glb_laws(o, rng, rep);
    } else if (name == "lub_minimality") {
      suite_lub(o, rng, rep);
    } else if (name == "connectivity_scan") {
      suite_connectivity(o, rng, rep);
    } else if (name == "fragment_canonical") {
      suite_fragment_canonical(o, rng, rep);
    } else {
      throw Error(ErrorKind::UnknownSuite, name);
    }
  } catch (Error const& e) {
    if (e.kind() == ErrorKind::UnknownSuite) {
      throw;
    }
    rep.budget_exceeded = is_budget_error(e);
    rep.fail(std::string("aborted: ") + e.what());
  }
  rep.elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  rep.pass    = rep.failures.empty();
  return rep;
}

}  // namespace brinv
