// brinv: suites, homology of K_Y slices, pushing, Γ_A and group arithmetic.
//
// Exit status: 0 pass, 1 failure, 2 budget or usage error.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "brinv/complex_lab.hpp"
#include "brinv/gamma.hpp"
#include "brinv/pushing.hpp"
#include "brinv/report_json.hpp"
#include "brinv/suites.hpp"
#include "brinv/text_io.hpp"

namespace {

using namespace brinv;
using nlohmann::json;

constexpr int kPass  = 0;
constexpr int kFail  = 1;
constexpr int kUsage = 2;

std::string slurp(std::string const& path) {
  std::ifstream in(path);
  if (!in) {
    throw CLI::ValidationError("cannot read " + path);
  }
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_json(std::string const& path, json const& j) {
  if (path.empty()) {
    return;
  }
  if (path == "-") {
    std::cout << j.dump(2) << "\n";
    return;
  }
  std::ofstream out(path);
  out << j.dump(2) << "\n";
}

bool has_separator(std::string const& text) {
  for (auto const& l : brinv::detail::split_lines(text)) {
    if (l.text == "---") {
      return true;
    }
  }
  return false;
}

int run_verify(std::string const& name, SuiteOptions const& opts, std::string const& json_path) {
  auto const rep = run_suite(name, opts);
  std::cout << rep.name << ": " << (rep.pass ? "pass" : "FAIL") << ", " << rep.cases
            << " cases, " << rep.failure_count() << " failures, seed " << rep.seed << ", "
            << rep.elapsed << " s\n";
  for (auto const& [k, v] : rep.counters) {
    std::cout << "  " << k << " = " << v << "\n";
  }
  for (auto const& f : rep.failures) {
    std::cout << "failure: " << f.what << "\n" << f.repro;
  }
  write_json(json_path, to_json(rep));
  if (rep.budget_exceeded) {
    return kUsage;
  }
  return rep.pass ? kPass : kFail;
}

int run_homology(std::string const& file, bool box_only, std::size_t max_dim,
                 std::size_t budget, std::string const& json_path) {
  auto const start = std::chrono::steady_clock::now();
  auto const y     = share(parse_pattern(slurp(file)));
  SliceOptions opts;
  opts.box_only = box_only;
  if (budget) {
    opts.budget = budget;
  }
  auto const slice = k_y(y, opts);
  auto const cx    = order_complex(slice, max_dim + 1);
  auto const h     = homology(cx, max_dim);
  json by_dim = json::array();
  for (std::size_t d = 0; d <= max_dim; ++d) {
    by_dim.push_back(cx.count(d));
  }
  json torsion = json::array();
  for (auto const& t : h.torsion) {
    json row = json::array();
    for (auto const& v : t) {
      row.push_back(big_string(v));
    }
    torsion.push_back(row);
  }
  double const elapsed =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  json j{{"vertices", slice.size()}, {"simplices_by_dim", by_dim}, {"betti", h.betti},
         {"torsion", torsion},       {"elapsed", elapsed}};
  std::cout << "vertices " << slice.size() << ", betti";
  for (auto b : h.betti) {
    std::cout << " " << b;
  }
  std::cout << "\n";
  write_json(json_path, j);
  return kPass;
}

int run_push(std::string const& file, std::string const& json_path) {
  auto const chain = parse_chain(slurp(file));
  auto const res   = push_chain(chain);
  std::cout << to_text(res.m);
  auto const cert = to_json(res.cert);
  if (json_path.empty()) {
    std::cout << cert.dump() << "\n";
  }
  write_json(json_path, cert);
  return res.cert.ok ? kPass : kFail;
}

int run_gamma(std::string const& base_file, std::string const& target_file, bool dot) {
  auto const y    = share(parse_pattern(slurp(target_file)));
  auto const text = slurp(base_file);
  auto const a    = has_separator(text) ? parse_below_set(text, y)
                                        : BelowSet::from_pattern(parse_pattern(text), y);
  auto const g    = gamma(a);
  if (dot) {
    std::cout << to_dot(g);
    return kPass;
  }
  std::cout << to_text(g);
  for (auto const& d : components(g)) {
    if (d.edges.empty()) {
      continue;
    }
    auto const shape = classify(d);
    std::cout << "# component of " << d.vertices.size() << " vertices: "
              << to_string(shape.tag) << (is_star_connected(a, d) ? ", *-connected" : "")
              << "\n";
  }
  return kPass;
}

int run_group(std::string const& op, std::vector<std::string> const& files,
              std::string const& box) {
  auto need = [&](std::size_t n) {
    if (files.size() != n) {
      throw CLI::ValidationError(op + " takes " + std::to_string(n) + " element files");
    }
  };
  if (op == "compose") {
    need(2);
    std::cout << to_text(compose(parse_element(slurp(files[0])), parse_element(slurp(files[1]))));
  } else if (op == "inverse") {
    need(1);
    std::cout << to_text(inverse(parse_element(slurp(files[0]))));
  } else if (op == "equal") {
    need(2);
    bool const same = equal(parse_element(slurp(files[0])), parse_element(slurp(files[1])));
    std::cout << (same ? "equal" : "different") << "\n";
    return same ? kPass : kFail;
  } else if (op == "apply") {
    need(1);
    if (box.empty()) {
      throw CLI::ValidationError("apply needs --box");
    }
    std::cout << parse_element(slurp(files[0])).apply_box(Box::parse(box)).str() << "\n";
  } else {
    throw CLI::ValidationError("unknown group operation " + op);
  }
  return kPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"brinv"};
  app.require_subcommand(1);

  std::string  suite, json_path;
  SuiteOptions opts;
  auto*        verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("suite", suite)->required();
  verify->add_option("--s", opts.s)->check(CLI::Range(1, 3));
  verify->add_option("--max-size", opts.max_size);
  verify->add_option("--seed", opts.seed);
  verify->add_option("--budget", opts.budget);
  verify->add_option("--json", json_path);

  std::string hom_file;
  bool        box_only = false;
  std::size_t max_dim = 1, hom_budget = 0;
  auto*       hom = app.add_subcommand("homology", "homology of the order complex of K_Y");
  hom->add_option("--pattern", hom_file)->required();
  hom->add_flag("--box-only", box_only);
  hom->add_option("--max-dim", max_dim);
  hom->add_option("--budget", hom_budget);
  hom->add_option("--json", json_path);

  std::string chain_file;
  auto*       push = app.add_subcommand("push", "pushing map of a chain");
  push->add_option("--chain", chain_file)->required();
  push->add_option("--json", json_path);

  std::string base_file, target_file;
  bool        dot = false;
  auto*       gam = app.add_subcommand("gamma", "coloured graph of a set below a pattern");
  gam->add_option("--base", base_file, "pattern or below-set file for A")->required();
  gam->add_option("--target", target_file, "pattern file for Y")->required();
  gam->add_flag("--dot", dot);

  std::string              group_op, box;
  std::vector<std::string> group_files;
  auto*                    grp = app.add_subcommand("group", "group element arithmetic");
  grp->add_option("op", group_op, "compose, inverse, equal or apply")->required();
  grp->add_option("files", group_files)->required();
  grp->add_option("--box", box);

  try {
    app.parse(argc, argv);
    if (*verify) {
      return run_verify(suite, opts, json_path);
    }
    if (*hom) {
      return run_homology(hom_file, box_only, max_dim, hom_budget, json_path);
    }
    if (*push) {
      return run_push(chain_file, json_path);
    }
    if (*gam) {
      return run_gamma(base_file, target_file, dot);
    }
    if (*grp) {
      return run_group(group_op, group_files, box);
    }
  } catch (CLI::CallForHelp const& e) {
    return app.exit(e);
  } catch (CLI::ParseError const& e) {
    app.exit(e);
    return kUsage;
  } catch (brinv::Error const& e) {
    std::cerr << "error: " << e.what() << "\n";
    bool const usage = is_budget_error(e) || e.kind() == ErrorKind::UnknownSuite
                       || e.kind() == ErrorKind::SyntaxError;
    return usage ? kUsage : kFail;
  }
  return kUsage;
}
