#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <nlohmann/json.hpp>

#include "knotlab/bracket.hpp"
#include "knotlab/diagram.hpp"
#include "knotlab/evgraph.hpp"
#include "knotlab/generate.hpp"
#include "knotlab/lab/catalog.hpp"
#include "knotlab/lab/checks.hpp"
#include "knotlab/skein.hpp"

namespace knotlab::lab {

struct Failure {
  std::string where;  // "seed N" or the name of a fixed case
  std::uint64_t seed = 0;
  nlohmann::json diagram;  // null if generation itself failed
  std::string detail;
};

struct SuiteResult {
  std::string id;
  std::uint64_t seed = 0;
  int trials = 0;  // cases run, fixed ones included
  int passes = 0;
  int not_applicable = 0;
  std::vector<Failure> failures;
  std::map<std::string, long> counters;          // tallies such as "parallel"
  std::map<std::string, std::string> findings;  // statistics, never asserted
  double seconds = 0;
  bool ok() const { return failures.empty(); }
};

inline nlohmann::json to_json(const SuiteResult& r) {
  nlohmann::json j;
  j["schema"] = kSchemaVersion;
  j["suite"] = r.id;
  j["seed"] = r.seed;
  j["trials"] = r.trials;
  j["passes"] = r.passes;
  j["not_applicable"] = r.not_applicable;
  j["ok"] = r.ok();
  j["failures"] = nlohmann::json::array();
  for (const auto& f : r.failures)
    j["failures"].push_back({{"where", f.where}, {"seed", f.seed}, {"diagram", f.diagram}, {"detail", f.detail}});
  j["counters"] = r.counters;
  j["findings"] = r.findings;
  j["seconds"] = r.seconds;
  return j;
}

struct SuiteOptions {
  int state_cap = kDefaultStateCap;
  SkeinConfig skein;
  int max_crossings = 14;
  int n_max = 5;  // pretzel-span
  unsigned threads = 0;  // 0: hardware concurrency
};

// Outcome of one case. Verdicts are combined: any fail fails the case, all
// n/a makes it n/a.
struct CaseOutcome {
  std::optional<Diagram> diagram;
  std::vector<Verdict> verdicts;
  std::vector<std::string> tags;  // counter keys
  std::map<std::string, bool> flags;  // per-case booleans feeding findings
  std::string error;  // exception text, counted as a failure
};

using CaseFn = std::function<CaseOutcome(std::uint64_t)>;

namespace detail {

inline void fold(SuiteResult& r, const CaseOutcome& c, const std::string& where, std::uint64_t seed,
                 std::map<std::string, std::pair<long, long>>& flag_counts) {
  ++r.trials;
  for (const auto& t : c.tags) ++r.counters[t];
  for (const auto& [k, v] : c.flags) {
    ++flag_counts[k].second;
    flag_counts[k].first += v;
  }
  nlohmann::json dj = c.diagram ? to_json(*c.diagram) : nlohmann::json();
  if (!c.error.empty()) {
    r.failures.push_back({where, seed, dj, c.error});
    return;
  }
  bool any_fail = false, any_pass = false;
  std::string detail;
  for (const auto& v : c.verdicts) {
    if (v.status == Status::Fail) {
      any_fail = true;
      detail += (detail.empty() ? "" : "; ") + v.id + ": " + v.detail;
    }
    if (v.status == Status::Pass) any_pass = true;
  }
  if (any_fail) {
    r.failures.push_back({where, seed, dj, detail});
  } else if (any_pass) {
    ++r.passes;
  } else {
    ++r.not_applicable;
  }
}

inline CaseOutcome guarded(const CaseFn& fn, std::uint64_t seed) {
  try {
    return fn(seed);
  } catch (const GenerationError& e) {
    CaseOutcome c;
    c.verdicts.push_back({"generation", Status::NotApplicable, e.what()});
    c.tags.push_back("generation-skipped");
    return c;
  } catch (const std::exception& e) {
    CaseOutcome c;
    c.error = e.what();
    return c;
  }
}

}  // namespace detail

// Runs fixed cases, then trials with seeds seed, seed+1, ... concurrently.
// Trial i depends only on its own seed, so `--seed s+i --trials 1` replays it.
inline SuiteResult run_cases(const std::string& id, std::uint64_t seed, int trials, const CaseFn& fn,
                             const std::vector<std::pair<std::string, std::function<CaseOutcome()>>>& fixed,
                             unsigned threads) {
  auto t0 = std::chrono::steady_clock::now();
  SuiteResult r;
  r.id = id;
  r.seed = seed;
  std::map<std::string, std::pair<long, long>> flag_counts;
  for (const auto& [name, f] : fixed) {
    CaseOutcome c = detail::guarded([&](std::uint64_t) { return f(); }, 0);
    detail::fold(r, c, name, 0, flag_counts);
  }
  std::vector<CaseOutcome> out(std::max(trials, 0));
  std::atomic<int> next{0};
  auto worker = [&] {
    for (int i = next++; i < trials; i = next++) out[i] = detail::guarded(fn, seed + static_cast<std::uint64_t>(i));
  };
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, std::max(trials, 1));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  for (int i = 0; i < trials; ++i)
    detail::fold(r, out[i], "seed " + std::to_string(seed + i), seed + static_cast<std::uint64_t>(i), flag_counts);
  for (const auto& [k, ct] : flag_counts)
    r.findings[k] = std::to_string(ct.first) + "/" + std::to_string(ct.second);
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

namespace detail {

// Crossing count in [lo, hi] drawn from the seed.
inline int crossings_for(std::uint64_t seed, int lo, int hi) {
  Rng rng(seed ^ 0x5EEDull);
  return rng.range(lo, hi);
}

inline Diagram positive_braid_closure(std::uint64_t seed, int max_c, BraidWord* out = nullptr) {
  Rng rng(seed);
  int strands = rng.range(2, std::min(5, max_c / 2 + 1));
  int len = rng.range(2 * (strands - 1), max_c);
  BraidWord b = random_positive_braid(rng, strands, len);
  if (out) *out = b;
  return braid_closure(b);
}

}  // namespace detail

inline SuiteResult verify_jones_oracle(std::uint64_t seed, int trials, const SuiteOptions& o = {}) {
  auto fn = [&](std::uint64_t s) {
    CaseOutcome c;
    Diagram d = random_diagram(s, detail::crossings_for(s, 3, o.max_crossings));
    c.diagram = d;
    c.verdicts.push_back(check_jones_oracle(jones(d, o.state_cap), jones_from_homfly(homfly(d, o.skein))));
    return c;
  };
  return run_cases("jones-oracle", seed, trials, fn, {}, o.threads);
}

inline SuiteResult verify_positive_low(std::uint64_t seed, int trials, const SuiteOptions& o = {}) {
  auto fn = [&](std::uint64_t s) {
    CaseOutcome c;
    Diagram d = detail::positive_braid_closure(s, o.max_crossings);
    c.diagram = d;
    Verdict v = check_positive_low(d, jones(d, o.state_cap));
    c.verdicts.push_back(v);
    c.tags.push_back("prime factors " + std::to_string(prime_factor_count(d)));
    return c;
  };
  return run_cases("positive-low-coefficients", seed, trials, fn, {}, o.threads);
}

// Even seeds draw a diagram whose negative crossing has a parallel partner,
// odd seeds one without.
inline SuiteResult verify_ap_leading(std::uint64_t seed, int trials, const SuiteOptions& o = {}) {
  auto fn = [&](std::uint64_t s) {
    CaseOutcome c;
    bool parallel = s % 2 == 0;
    Diagram d = random_almost_positive_diagram(s, detail::crossings_for(s, 4, o.max_crossings), parallel);
    c.diagram = d;
    c.verdicts.push_back(check_ap_leading(d, jones(d, o.state_cap)));
    c.tags.push_back(parallel ? "parallel" : "no-parallel");
    return c;
  };
  auto demo = [&] {
    CaseOutcome c;
    Diagram d = braid_closure(parse_braid("2: -1 1 1 1 1"));
    c.diagram = d;
    c.verdicts.push_back(check_ap_leading(d, jones(d, o.state_cap)));
    c.tags.push_back("parallel");
    return c;
  };
  return run_cases("almost-positive-jones-leading", seed, trials, fn, {{"2: -1 1 1 1 1", demo}}, o.threads);
}

inline SuiteResult verify_positive_second(std::uint64_t seed, int trials, const SuiteOptions& o = {}) {
  auto fn = [&](std::uint64_t s) {
    CaseOutcome c;
    Diagram d = random_positive_diagram(s, detail::crossings_for(s, 3, o.max_crossings));
    c.diagram = d;
    c.verdicts.push_back(check_positive_second(d, jones(d, o.state_cap)));
    c.tags.push_back("b1 " + std::to_string(betti1(reduced_seifert_graph(d))));
    return c;
  };
  return run_cases("positive-second-coefficient", seed, trials, fn, {}, o.threads);
}

// Even seeds use positive braid closures (always a tree), odd seeds random
// positive diagrams, which count as n/a unless their graph is a tree.
inline SuiteResult verify_tree_vanishing(std::uint64_t seed, int trials, const SuiteOptions& o = {}) {
  auto fn = [&](std::uint64_t s) {
    CaseOutcome c;
    Diagram d = s % 2 == 0 ? detail::positive_braid_closure(s, o.max_crossings)
                           : random_positive_diagram(s, detail::crossings_for(s, 3, o.max_crossings));
    c.diagram = d;
    c.verdicts.push_back(check_tree_vanishing(d, jones(d, o.state_cap)));
    c.tags.push_back(s % 2 == 0 ? "braid" : "medial");
    return c;
  };
  return run_cases("tree-coefficient-vanishing", seed, trials, fn, {}, o.threads);
}

inline SuiteResult verify_ap_degrees(std::uint64_t seed, int trials, const SuiteOptions& o = {}) {
  auto fn = [&](std::uint64_t s) {
    CaseOutcome c;
    bool parallel = s % 2 == 0;
    Diagram d = random_almost_positive_diagram(s, detail::crossings_for(s, 4, o.max_crossings), parallel);
    c.diagram = d;
    ApDegrees a = check_ap_degrees(d, jones(d, o.state_cap), homfly(d, o.skein));
    c.verdicts.push_back(a.verdict);
    if (a.mindeg_l_sharp) c.flags["min_deg_l_P_equals_one_minus_chi"] = *a.mindeg_l_sharp;
    c.tags.push_back(parallel ? "parallel" : "no-parallel");
    return c;
  };
  auto demo = [&] {
    CaseOutcome c;
    BraidWord b = parse_braid("2: -1 1 1 1 1");
    Diagram d = braid_closure(b);
    c.diagram = d;
    ApDegrees a = check_ap_degrees(d, jones(d, o.state_cap), homfly_braid(b, o.skein));
    c.verdicts.push_back(a.verdict);
    if (a.mindeg_l_sharp) c.flags["min_deg_l_P_equals_one_minus_chi"] = *a.mindeg_l_sharp;
    c.tags.push_back("parallel");
    return c;
  };
  return run_cases("almost-positive-degrees", seed, trials, fn, {{"2: -1 1 1 1 1", demo}}, o.threads);
}

// Special almost positive diagram from a random positive even valence graph
// with one edge made negative.
inline Diagram random_special_almost_positive(std::uint64_t seed, int max_c) {
  Rng rng(seed);
  for (int attempt = 0; attempt < 50; ++attempt) {
    EvenValenceGraph g = random_even_valence_graph(rng, max_c);
    if (g.edge_count() < 3) continue;
    g.edges[rng.below(g.edge_count())].sign = -1;
    return diagram_from_evgraph(g);
  }
  throw GenerationError("no special almost positive diagram drawn");
}

// Seeds cycle through five sources: switched random positive diagrams,
// chain-with-cell graphs, doubled rings, random special diagrams, and
// connected sums of the last kind with a positive (2,k)-torus closure.
inline SuiteResult verify_fiber_shape(std::uint64_t seed, int trials, const SuiteOptions& o = {}) {
  auto fn = [&](std::uint64_t s) {
    CaseOutcome c;
    Rng rng(s);
    Diagram d;
    switch (s % 5) {
      case 0:
        d = random_almost_positive_diagram(s, detail::crossings_for(s, 4, o.max_crossings), (s / 4) % 2 == 0);
        c.tags.push_back("switched positive");
        break;
      case 1:
        d = diagram_from_evgraph(random_chain_cell_graph(rng, o.max_crossings));
        c.tags.push_back("chain with cell");
        break;
      case 2: {
        int n = rng.range(2, std::min(7, o.max_crossings / 2));
        d = diagram_from_evgraph(doubled_ring_graph(n, static_cast<int>(rng.below(n))));
        c.tags.push_back("doubled ring");
        break;
      }
      case 3:
        d = random_special_almost_positive(s, o.max_crossings);
        c.tags.push_back("special");
        break;
      default: {
        int k = rng.range(2, 4);
        Diagram a = random_special_almost_positive(s, std::max(3, o.max_crossings - k));
        Diagram t = braid_closure(BraidWord{2, std::vector<int>(k, 1)});
        d = connected_sum(a, static_cast<int>(rng.below(a.edge_count())), t, 0);
        c.tags.push_back("connected sum");
      }
    }
    c.diagram = d;
    Verdict v = check_fiber_shape(d, homfly(d, o.skein));
    c.verdicts.push_back(v);
    if (v.status != Status::NotApplicable)
      c.tags.push_back(v.detail.find("Alexander criterion fibered") != std::string::npos ? "fibered" : "not fibered");
    return c;
  };
  auto fig = [&] {
    CaseOutcome c;
    Diagram d = diagram_from_evgraph(chain_cell_example_graph());
    c.diagram = d;
    c.verdicts.push_back(check_fiber_shape(d, homfly(d, o.skein)));
    c.tags.push_back("chain with cell");
    return c;
  };
  std::vector<std::pair<std::string, std::function<CaseOutcome()>>> fixed{{"four-loop chain with cell", fig}};
  for (int n = 3; n <= o.n_max; ++n) {
    for (bool reduced : {false, true}) {
      fixed.emplace_back((reduced ? "D" : "L") + std::to_string(n), [n, reduced, &o] {
        CaseOutcome c;
        Diagram d = reduced ? pretzel_family_reduced(n) : pretzel_family_diagram(n);
        c.diagram = d;
        c.verdicts.push_back(check_fiber_shape(d, homfly(d, o.skein)));
        c.tags.push_back("pretzel family");
        return c;
      });
    }
  }
  return run_cases("fiber-shape", seed, trials, fn, fixed, o.threads);
}

// Arborescence count of the even valence graph against the skein-side
// Delta(0), root independence, and strict decrease under contraction of a
// crossing without parallel partner.
inline CaseOutcome matrix_tree_case(const Diagram& d, const SkeinConfig& cfg) {
  CaseOutcome c;
  c.diagram = d;
  EvenValenceGraph g = evgraph_from_special(d);
  BigInt at0 = arborescence_count(g, 0).count;
  BigInt skein0 = alexander_nonneg(d, cfg).min_cf();
  c.verdicts.push_back(detail::judge("matrix-tree", at0 == skein0,
                                     "arborescences " + at0.str() + ", skein Delta(0) " + skein0.str()));
  bool same = true;
  for (int r = 1; r < g.vertices; ++r) same = same && arborescence_count(g, r).count == at0;
  c.verdicts.push_back(detail::judge("root-independence", same, std::to_string(g.vertices) + " roots"));
  if (is_reduced(d)) {
    SeifertData sd = seifert(d);
    for (int p = 0; p < d.crossing_count(); ++p) {
      if (!parallel_partners(sd, p).empty()) continue;
      ContractionCheck t = contraction_check(d, p);
      c.verdicts.push_back(detail::judge("contraction-decrease", t.verdict,
                                         "crossing " + std::to_string(p) + ": " + t.lhs.str() + " < " + t.rhs.str()));
    }
  }
  return c;
}

inline SuiteResult verify_matrix_tree(std::uint64_t seed, int trials, const SuiteOptions& o = {}) {
  auto fn = [&](std::uint64_t s) {
    Rng rng(s);
    Diagram d = diagram_from_evgraph(random_even_valence_graph(rng, o.max_crossings));
    CaseOutcome c = matrix_tree_case(d, o.skein);
    c.tags.push_back("crossings " + std::to_string(d.crossing_count()));
    return c;
  };
  return run_cases("matrix-tree", seed, trials, fn, {}, o.threads);
}

// For n = 3..n_max: the pretzel family member and its one-crossing-smaller
// diagram share V; the degrees follow 1 - chi = n and the smaller diagram is
// B-semiadequate.
inline SuiteResult verify_pretzel_span(const SuiteOptions& o = {}) {
  std::vector<std::pair<std::string, std::function<CaseOutcome()>>> fixed;
  for (int n = 3; n <= o.n_max; ++n) {
    fixed.emplace_back("L" + std::to_string(n), [n, &o] {
      CaseOutcome c;
      Diagram big = pretzel_family_diagram(n);
      Diagram small = pretzel_family_reduced(n);
      c.diagram = small;
      LaurentPoly1 v = jones(small, o.state_cap);
      const int omc = *one_minus_chi_link(small);
      std::ostringstream os;
      os << "n=" << n << " 1-chi=" << omc << " V=" << v.to_string();
      bool same = big.crossing_count() > o.state_cap || jones(big, o.state_cap) == v;
      bool ok = same && v.min_deg() == Exp4::half(omc) && v.max_deg() == Exp4::half(7 * omc) - Exp4::whole(2) &&
                v.span() == Exp4::whole(3 * omc - 2) && 3 * omc - 2 > 2 * omc && is_b_adequate(small) &&
                small.crossing_count() == 3 * n;
      c.verdicts.push_back(detail::judge("pretzel-span", ok, os.str()));
      return c;
    });
  }
  return run_cases("pretzel-span", 0, 0, [](std::uint64_t) { return CaseOutcome{}; }, fixed, o.threads);
}

struct SuiteInfo {
  std::string id;
  std::string summary;
};

inline std::vector<SuiteInfo> suite_list() {
  return {{"jones-oracle", "bracket Jones equals skein Jones on random diagrams"},
          {"positive-low-coefficients", "low Jones coefficients of positive braid closures"},
          {"almost-positive-jones-leading", "lowest Jones term of almost positive diagrams"},
          {"positive-second-coefficient", "second Jones coefficient equals b1 of the reduced Seifert graph"},
          {"tree-coefficient-vanishing", "that coefficient vanishes when the reduced Seifert graph is a tree"},
          {"almost-positive-degrees", "Alexander, skein and Jones degrees of almost positive diagrams"},
          {"fiber-shape", "shape classifier agrees with the Alexander fibering criterion"},
          {"matrix-tree", "arborescence counts against the skein-side Delta(0)"},
          {"pretzel-span", "Jones span of the (3,...,3,-1)-pretzel family (uses --n-max)"}};
}

inline SuiteResult run_suite(const std::string& id, std::uint64_t seed, int trials, const SuiteOptions& o = {}) {
  if (id == "jones-oracle") return verify_jones_oracle(seed, trials, o);
  if (id == "positive-low-coefficients") return verify_positive_low(seed, trials, o);
  if (id == "almost-positive-jones-leading") return verify_ap_leading(seed, trials, o);
  if (id == "positive-second-coefficient") return verify_positive_second(seed, trials, o);
  if (id == "tree-coefficient-vanishing") return verify_tree_vanishing(seed, trials, o);
  if (id == "almost-positive-degrees") return verify_ap_degrees(seed, trials, o);
  if (id == "fiber-shape") return verify_fiber_shape(seed, trials, o);
  if (id == "matrix-tree") return verify_matrix_tree(seed, trials, o);
  if (id == "pretzel-span") return verify_pretzel_span(o);
  throw PreconditionError("unknown suite '" + id + "'");
}

}  // namespace knotlab::lab
