#pragma once

// JSON forms of suite reports and push certificates.

#include <json.hpp>

#include "brinv/complex_lab.hpp"
#include "brinv/pushing.hpp"
#include "brinv/suites.hpp"

namespace brinv {

inline nlohmann::json to_json(SuiteReport const& r) {
  nlohmann::json failures = nlohmann::json::array();
  for (auto const& f : r.failures) {
    failures.push_back({{"what", f.what}, {"repro", f.repro}});
  }
  nlohmann::json counters = nlohmann::json::object();
  for (auto const& [k, v] : r.counters) {
    counters[k] = v;
  }
  return {{"schema", 1},
          {"suite", r.name},
          {"cases", r.cases},
          {"failure_count", r.failure_count()},
          {"failures", failures},
          {"seed", r.seed},
          {"elapsed", r.elapsed},
          {"pass", r.pass},
          {"budget_exceeded", r.budget_exceeded},
          {"counters", counters}};
}

inline nlohmann::json to_json(Certificate const& c) {
  nlohmann::json parts = nlohmann::json::array();
  for (auto const& p : c.parts) {
    parts.push_back({{"alpha", p.alpha},
                     {"shape", to_string(p.shape)},
                     {"edges", p.omega.size()},
                     {"involves", p.involves}});
  }
  nlohmann::json j{{"t", c.t},         {"involves", c.involves}, {"bound", c.bound},
                   {"ok", c.ok},       {"above", c.above},       {"notes", c.notes}};
  if (c.components) {
    j["components"] = c.components;
  }
  if (!c.parts.empty()) {
    j["parts"] = parts;
  }
  return j;
}

inline std::string big_string(BigInt const& v) { return v.str(); }

}  // namespace brinv
