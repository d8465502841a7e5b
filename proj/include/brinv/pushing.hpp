#pragma once

// Pushing maps on chains A_t < ... < A_0 below Y. Each vertex gets a chosen
// simple contraction M(A); a chain gets the glb of those above its least
// vertex, together with a certificate bounding how many leaves it involves.

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "brinv/errors.hpp"
#include "brinv/fragments.hpp"
#include "brinv/gamma.hpp"

namespace brinv {

// Chain vertices listed from the least one up: front() is A_t, back() is A_0.
struct Chain {
  std::vector<BelowSet> vertices;

  std::size_t t() const { return vertices.empty() ? 0 : vertices.size() - 1; }

  void validate() const {
    if (vertices.empty()) {
      throw Error(ErrorKind::PreconditionViolated, "empty chain");
    }
    auto const top = BelowSet::top(vertices.front().base_ptr());
    for (std::size_t i = 0; i < vertices.size(); ++i) {
      if (!below_less(vertices[i], top)) {
        throw Error(ErrorKind::PreconditionViolated, "chain vertex is not below Y");
      }
      if (i > 0 && !below_less(vertices[i - 1], vertices[i])) {
        throw Error(ErrorKind::PreconditionViolated, "chain is not strictly ascending");
      }
    }
  }
};

inline BelowSet chosen_contraction(BelowSet const& a, Edge const& e) {
  return simple_contraction(a.base_ptr(), e.contraction());
}

// Least edge of Γ_A in (colour, vertex) order whose endpoints are locally
// maximal with respect to A.
inline Edge choose_edge_2v(BelowSet const& a) {
  for (auto const& e : gamma(a).edges) {
    if (locally_maximal(a, e.u) && locally_maximal(a, e.v)) {
      return e;
    }
  }
  throw Error(ErrorKind::NoEdge, "no edge with locally maximal endpoints");
}

struct StarComponent {
  Component      comp;
  ComponentShape shape;
};

// Components of Γ_A with edges that admit a *-witness.
inline std::vector<StarComponent> star_components(BelowSet const& a,
                                                  std::size_t budget = 100'000) {
  std::vector<StarComponent> out;
  for (auto& d : components(gamma(a))) {
    if (d.edges.empty()) {
      continue;
    }
    if (star_connected(a, d, budget).star) {
      auto shape = classify(d);
      out.push_back({std::move(d), shape});
    }
  }
  return out;
}

struct Choice3 {
  Edge      edge;
  Component delta;  // the *-component containing the edge
  ShapeTag  shape;
};

inline Choice3 choose_edge_3v_full(BelowSet const& a, std::size_t budget = 100'000) {
  auto const stars = star_components(a, budget);
  std::optional<Choice3> best;
  auto better = [](Edge const& x, std::optional<Choice3> const& b) {
    return !b || x < b->edge;
  };
  for (auto const& sc : stars) {
    if (sc.shape.tag == ShapeTag::OpenBook && better(*sc.shape.middle, best)) {
      best = Choice3{*sc.shape.middle, sc.comp, sc.shape.tag};
    }
  }
  if (!best) {
    for (auto const& sc : stars) {
      if (sc.shape.tag == ShapeTag::Edge && better(sc.comp.edges.front(), best)) {
        best = Choice3{sc.comp.edges.front(), sc.comp, sc.shape.tag};
      }
    }
  }
  if (!best) {
    for (auto const& sc : stars) {
      if (better(sc.comp.edges.front(), best)) {
        best = Choice3{sc.comp.edges.front(), sc.comp, sc.shape.tag};
      }
    }
  }
  if (!best) {
    throw Error(ErrorKind::NoEdge, "no *-connected component with an edge");
  }
  return *best;
}

inline Edge choose_edge_3v(BelowSet const& a, std::size_t budget = 100'000) {
  return choose_edge_3v_full(a, budget).edge;
}

inline Edge choose_edge(BelowSet const& a, std::size_t budget = 100'000) {
  switch (a.colours()) {
    case 2: return choose_edge_2v(a);
    case 3: return choose_edge_3v(a, budget);
    default:
      throw Error(ErrorKind::PreconditionViolated, "pushing needs 2 or 3 colours");
  }
}

////////////////////////////////////////////////////////////////////////
// Chains
////////////////////////////////////////////////////////////////////////

struct StackPart {
  std::size_t            alpha;  // chain index from the top: A_alpha
  std::vector<Edge>      omega;
  std::vector<LeafIndex> delta_vertices;
  ShapeTag               shape = ShapeTag::Other;
  std::size_t            involves = 0;
  std::vector<LeafIndex> involved;
};

struct Certificate {
  std::size_t t        = 0;
  std::size_t involves = 0;
  std::size_t bound    = 0;
  bool        above    = false;  // A_t <= M(sigma)
  bool        ok       = false;
  std::vector<std::string> notes;  // one line per failed check

  // Componentwise bound for two colours.
  std::size_t components = 0;
  // Partition for three colours.
  std::vector<StackPart> parts;
};

struct PushResult {
  BelowSet          m;
  std::vector<Edge> chosen;  // M(A_i) in chain order, index 0 = A_t
  Certificate       cert;
};

namespace detail {
  inline std::vector<BelowSet> contractions_for(BelowSet const& a,
                                                std::vector<Edge> const& edges) {
    std::vector<BelowSet> out;
    for (auto const& e : edges) {
      auto z = chosen_contraction(a, e);
      if (std::find(out.begin(), out.end(), z) == out.end()) {
        out.push_back(std::move(z));
      }
    }
    return out;
  }

  inline bool subset(std::vector<LeafIndex> const& a, std::vector<LeafIndex> const& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
  }

  // Connected components of the subgraph spanned by the given edges.
  inline std::vector<std::vector<Edge>> edge_components(std::vector<Edge> const& edges) {
    std::vector<std::vector<Edge>> out;
    std::vector<std::set<LeafIndex>> verts;
    for (auto const& e : edges) {
      std::vector<std::size_t> hits;
      for (std::size_t k = 0; k < out.size(); ++k) {
        if (verts[k].contains(e.u) || verts[k].contains(e.v)) {
          hits.push_back(k);
        }
      }
      if (hits.empty()) {
        out.push_back({e});
        verts.push_back({e.u, e.v});
        continue;
      }
      auto first = hits.front();
      out[first].push_back(e);
      verts[first].insert({e.u, e.v});
      for (auto it = hits.rbegin(); it != hits.rend() && *it != first; ++it) {
        out[first].insert(out[first].end(), out[*it].begin(), out[*it].end());
        verts[first].insert(verts[*it].begin(), verts[*it].end());
        out.erase(out.begin() + static_cast<std::ptrdiff_t>(*it));
        verts.erase(verts.begin() + static_cast<std::ptrdiff_t>(*it));
      }
    }
    return out;
  }
}  // namespace detail

inline PushResult push_chain(Chain const& sigma, std::size_t budget = 100'000) {
  sigma.validate();
  auto const& vs = sigma.vertices;
  auto const& at = vs.front();
  int const   s  = at.colours();
  if (s != 2 && s != 3) {
    throw Error(ErrorKind::PreconditionViolated, "pushing needs 2 or 3 colours");
  }

  PushResult           res;
  std::vector<Choice3> choices;
  for (auto const& a : vs) {
    if (s == 2) {
      res.chosen.push_back(choose_edge_2v(a));
    } else {
      choices.push_back(choose_edge_3v_full(a, budget));
      res.chosen.push_back(choices.back().edge);
    }
  }
  auto const omega = detail::contractions_for(at, res.chosen);
  res.m            = glb_above(at, omega);

  auto& cert    = res.cert;
  cert.t        = sigma.t();
  cert.involves = involves(res.m);
  cert.bound    = std::max<std::size_t>((s == 2 ? 4 : 8) * cert.t, 2);
  cert.above    = below_leq(at, res.m);
  if (!cert.above) {
    cert.notes.push_back("A_t is not below M(sigma)");
  }
  if (cert.involves > cert.bound) {
    cert.notes.push_back("involves " + std::to_string(cert.involves) + " > bound "
                         + std::to_string(cert.bound));
  }

  if (s == 2 && cert.t >= 1) {
    std::vector<Edge> distinct = res.chosen;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    auto const comps = detail::edge_components(distinct);
    cert.components  = comps.size();
    std::size_t sum  = 0;
    for (auto const& part : comps) {
      auto const mi = glb_above(at, detail::contractions_for(at, part));
      auto const k  = involves(mi);
      sum += k;
      if (k > (part.size() == 1 ? 2u : 4u)) {
        cert.notes.push_back("component glb involves " + std::to_string(k));
      }
    }
    if (cert.involves > sum) {
      cert.notes.push_back("glb involves more than its components");
    }
    if (comps.size() == cert.t + 1 && cert.involves > 2 * cert.t + 2) {
      cert.notes.push_back("disjoint case exceeds 2t+2");
    }
  }

  if (s == 3 && cert.t >= 1) {
    // Index i in `vs` is A_{t-i}; the construction walks from A_t upward.
    std::vector<bool> covered(vs.size(), false);
    std::size_t       alpha_pos = 0;
    while (true) {
      auto const&   delta = choices[alpha_pos].delta;
      StackPart     part;
      part.alpha          = cert.t - alpha_pos;
      part.delta_vertices = delta.vertices;
      part.shape          = choices[alpha_pos].shape;
      for (std::size_t k = 0; k < vs.size(); ++k) {
        if (delta.contains(res.chosen[k])) {
          if (covered[k]) {
            cert.notes.push_back("partition blocks overlap at A_"
                                 + std::to_string(cert.t - k));
          }
          covered[k] = true;
          if (std::find(part.omega.begin(), part.omega.end(), res.chosen[k])
              == part.omega.end()) {
            part.omega.push_back(res.chosen[k]);
          }
        }
      }
      auto const& base = vs[alpha_pos];
      auto const  ni   = glb_above(base, detail::contractions_for(base, part.omega));
      part.involves    = involves(ni);
      part.involved    = involved_leaves(ni);
      if (part.involves > 8) {
        cert.notes.push_back("N_i involves " + std::to_string(part.involves));
      }
      if (!detail::subset(part.involved, part.delta_vertices)) {
        cert.notes.push_back("N_i involves leaves outside its component");
      }
      if (part.shape == ShapeTag::OpenBook && part.involves > 6) {
        cert.notes.push_back("open-book N_i involves " + std::to_string(part.involves));
      }
      cert.parts.push_back(std::move(part));
      // Next: the largest j with M(A_j) not yet covered, i.e. nearest A_t.
      std::optional<std::size_t> next;
      for (std::size_t k = 0; k < vs.size() && !next; ++k) {
        if (!covered[k]) {
          next = k;
        }
      }
      if (!next) {
        break;
      }
      alpha_pos = *next;
    }
    for (std::size_t i = 0; i < cert.parts.size(); ++i) {
      for (std::size_t j = i + 1; j < cert.parts.size(); ++j) {
        auto const& x = cert.parts[i].involved;
        auto const& y = cert.parts[j].involved;
        std::vector<LeafIndex> common;
        std::set_intersection(x.begin(), x.end(), y.begin(), y.end(),
                              std::back_inserter(common));
        if (!common.empty()) {
          cert.notes.push_back("N_" + std::to_string(i + 1) + " and N_"
                               + std::to_string(j + 1) + " overlap");
        }
      }
    }
  }
  cert.ok = cert.notes.empty();
  return res;
}

// Like push_chain, throwing on a failed certificate.
inline PushResult push_chain_checked(Chain const& sigma, std::size_t budget = 100'000) {
  auto res = push_chain(sigma, budget);
  if (!res.cert.ok) {
    std::string msg;
    for (auto const& n : res.cert.notes) {
      msg += n + "; ";
    }
    throw Error(ErrorKind::CertificateViolation, msg);
  }
  return res;
}

// tau is a sub-chain of sigma; checks M(sigma) <= M(tau).
inline bool check_order_reversing(Chain const& sigma, Chain const& tau,
                                  std::size_t budget = 100'000) {
  for (auto const& v : tau.vertices) {
    if (std::find(sigma.vertices.begin(), sigma.vertices.end(), v)
        == sigma.vertices.end()) {
      throw Error(ErrorKind::PreconditionViolated, "not a sub-chain");
    }
  }
  return below_leq(push_chain(sigma, budget).m, push_chain(tau, budget).m);
}

}  // namespace brinv
