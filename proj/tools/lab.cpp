// Command line front end: invariants, catalog, verification suites, generators.

#include <cstdint>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "knotlab/knotlab.hpp"

namespace {

using namespace knotlab;
using namespace knotlab::lab;

struct Globals {
  bool json = false;
  int state_cap = kDefaultStateCap;
  std::size_t skein_budget = SkeinConfig{}.node_budget;
};

SkeinConfig skein_config(const Globals& g) {
  SkeinConfig c;
  c.node_budget = g.skein_budget;
  return c;
}

int cmd_invariants(const Globals& g, const std::string& input) {
  Input in = parse_input(input);
  InvariantReport r = invariants(in, {g.state_cap, skein_config(g)});
  if (g.json) {
    std::cout << to_json(r).dump(2) << "\n";
  } else {
    std::cout << to_text(r);
  }
  return r.ok() ? 0 : 1;
}

int cmd_catalog(const Globals& g, bool run) {
  bool ok = true;
  nlohmann::json j;
  j["schema"] = kSchemaVersion;
  j["entries"] = nlohmann::json::array();
  for (const auto& e : catalog()) {
    nlohmann::json ej = to_json(e);
    if (run) {
      CatalogRun r = run_entry(e, g.state_cap, skein_config(g));
      ok = ok && r.ok();
      ej["run"] = to_json(r);
      if (!g.json) {
        std::cout << e.label << " (" << r.chirality << ", " << r.seconds << "s): " << (r.ok() ? "ok" : "MISMATCH")
                  << "\n";
        for (const auto& v : r.values)
          std::cout << "  " << v.quantity << " expected " << v.expected << " got " << v.actual << " [" << v.source
                    << "]\n";
        if (r.bracket_checked) std::cout << "  bracket Jones " << (r.bracket_agrees ? "agrees" : "DIFFERS") << "\n";
      }
    } else if (!g.json) {
      std::cout << e.label << ": " << (e.braid.empty() ? "pretzel family" : e.braid) << "\n";
      for (const auto& x : e.expected) std::cout << "  " << x.quantity << " = " << x.value << " [" << x.source << "]\n";
    }
    j["entries"].push_back(ej);
  }
  j["ok"] = ok;
  if (g.json) std::cout << j.dump(2) << "\n";
  return ok ? 0 : 1;
}

int cmd_verify(const Globals& g, const std::string& suite, std::uint64_t seed, int trials, int n_max,
               unsigned threads) {
  if (suite == "list") {
    for (const auto& s : suite_list()) std::cout << s.id << "  " << s.summary << "\n";
    return 0;
  }
  SuiteOptions o;
  o.state_cap = g.state_cap;
  o.skein = skein_config(g);
  o.n_max = n_max;
  o.threads = threads;
  SuiteResult r = run_suite(suite, seed, trials, o);
  if (g.json) {
    std::cout << to_json(r).dump(2) << "\n";
  } else {
    std::cout << r.id << ": " << r.passes << " passed, " << r.failures.size() << " failed, " << r.not_applicable
              << " n/a of " << r.trials << " (" << r.seconds << "s)\n";
    for (const auto& [k, v] : r.counters) std::cout << "  " << k << ": " << v << "\n";
    for (const auto& [k, v] : r.findings) std::cout << "  finding " << k << ": " << v << "\n";
    for (const auto& f : r.failures) {
      std::cout << "  FAIL " << f.where << ": " << f.detail << "\n";
      if (!f.diagram.is_null()) std::cout << "    " << f.diagram.value("pd", "") << "\n";
    }
  }
  return r.ok() ? 0 : 1;
}

int cmd_generate(const Globals& g, const std::string& kind, std::uint64_t seed, int crossings) {
  Diagram d;
  Rng rng(seed);
  if (kind == "random") {
    d = random_diagram(seed, crossings);
  } else if (kind == "positive") {
    d = random_positive_diagram(seed, crossings);
  } else if (kind == "almost-positive") {
    d = random_almost_positive_diagram(seed, crossings, false);
  } else if (kind == "almost-positive-parallel") {
    d = random_almost_positive_diagram(seed, crossings, true);
  } else if (kind == "positive-braid") {
    int strands = rng.range(2, std::max(2, std::min(5, crossings / 2 + 1)));
    d = braid_closure(random_positive_braid(rng, strands, crossings));
  } else if (kind == "special") {
    d = diagram_from_evgraph(random_even_valence_graph(rng, crossings));
  } else if (kind == "chain-cell") {
    d = diagram_from_evgraph(random_chain_cell_graph(rng, crossings));
  } else if (kind == "pretzel-family") {
    d = pretzel_family_reduced(crossings / 3);
  } else {
    throw PreconditionError("unknown kind '" + kind +
                            "' (random, positive, almost-positive, almost-positive-parallel, positive-braid, special, "
                            "chain-cell, pretzel-family)");
  }
  if (g.json) {
    nlohmann::json j = to_json(d);
    j["schema"] = kSchemaVersion;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << to_pd(d) << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"knot diagram invariants and property checks"};
  app.require_subcommand(1);
  Globals g;
  app.add_flag("--json", g.json, "JSON output");
  app.add_option("--state-cap", g.state_cap, "largest crossing count for the bracket state sum")->check(CLI::Range(0, 30));
  app.add_option("--skein-budget", g.skein_budget, "node budget of the skein resolution")->check(CLI::PositiveNumber);

  auto* inv = app.add_subcommand("invariants", "report invariants and checks for one diagram");
  std::string input;
  inv->add_option("input", input, "catalog label, braid \"s: l1 l2 ...\", PD code, or file")->required();

  auto* cat = app.add_subcommand("catalog", "list the example catalog");
  bool run = false;
  cat->add_flag("--run", run, "compute every entry and compare with its expected values");

  auto* ver = app.add_subcommand("verify", "run a property suite ('list' shows them)");
  std::string suite;
  std::uint64_t seed = 1;
  int trials = 100, n_max = 5;
  unsigned threads = 0;
  ver->add_option("suite", suite, "suite id")->required();
  ver->add_option("--seed", seed, "seed of the first trial");
  ver->add_option("--trials", trials, "number of random trials")->check(CLI::PositiveNumber);
  ver->add_option("--n-max", n_max, "largest family member for pretzel-span")->check(CLI::Range(3, 6));
  ver->add_option("--threads", threads, "worker threads (0: all cores)");

  auto* gen = app.add_subcommand("generate", "print a generated diagram as PD code");
  std::string kind;
  int crossings = 8;
  gen->add_option("kind", kind, "diagram family")->required();
  gen->add_option("--seed", seed, "generator seed")->required();
  gen->add_option("--crossings", crossings, "target crossing count")->required()->check(CLI::Range(2, 40));

  for (auto* sub : {inv, cat, ver, gen}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }
  try {
    if (*inv) return cmd_invariants(g, input);
    if (*cat) return cmd_catalog(g, run);
    if (*ver) return cmd_verify(g, suite, seed, trials, n_max, threads);
    if (*gen) return cmd_generate(g, kind, seed, crossings);
  } catch (const knotlab::Error& e) {
    std::cerr << "lab: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
