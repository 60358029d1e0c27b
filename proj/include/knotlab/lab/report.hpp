#pragma once

#include <chrono>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "knotlab/bracket.hpp"
#include "knotlab/diagram.hpp"
#include "knotlab/evgraph.hpp"
#include "knotlab/lab/catalog.hpp"
#include "knotlab/lab/checks.hpp"
#include "knotlab/seifert.hpp"
#include "knotlab/skein.hpp"

namespace knotlab::lab {

struct Input {
  Diagram diagram;
  std::optional<BraidWord> braid;
  std::string description;
  std::optional<CatalogEntry> entry;
};

// Accepts a catalog label, a braid "s: l1 l2 ...", PD text "X[...]...", JSON
// diagram text, or a path to a file holding any of the last three.
inline Input parse_input(const std::string& arg) {
  if (auto e = find_entry(arg)) {
    Input in{e->diagram(), std::nullopt, "catalog entry " + arg, e};
    if (!e->braid.empty()) in.braid = parse_braid(e->braid);
    return in;
  }
  std::string text = arg;
  std::string what = "literal";
  if (arg.find_first_of(":[{") == std::string::npos) {
    std::ifstream f(arg);
    if (!f) throw ParseError("'" + arg + "' is not a catalog label, braid, PD code or readable file");
    std::stringstream ss;
    ss << f.rdbuf();
    text = ss.str();
    what = "file " + arg;
  }
  auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) throw ParseError("empty input");
  if (text[first] == '{') {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(std::string("bad JSON diagram: ") + e.what());
    }
    if (j.contains("braid")) {
      BraidWord b = parse_braid(j.at("braid").get<std::string>());
      return {braid_closure(b), b, what + " (braid)", std::nullopt};
    }
    if (j.contains("pd")) return {parse_pd(j.at("pd").get<std::string>()), std::nullopt, what + " (PD)", std::nullopt};
    return {diagram_from_json(j), std::nullopt, what + " (JSON diagram)", std::nullopt};
  }
  if (text.find('X') != std::string::npos) return {parse_pd(text), std::nullopt, what + " (PD)", std::nullopt};
  BraidWord b = parse_braid(text);
  return {braid_closure(b), b, what + " (braid)", std::nullopt};
}

struct InvariantReport {
  std::string input;
  // diagram statistics
  int crossings = 0, seifert_circles = 0, writhe = 0, euler = 0, components = 0;
  int positivity_class = 0, bennequin = 0, rudolph_bennequin = 0;
  std::optional<int> prime_factors;  // needs a connected reduced diagram
  // polynomials
  std::optional<std::string> bracket;  // above the state-sum cap: absent
  std::string jones, homfly, alexander_symmetric, alexander_nonneg;
  // graph data
  int b1_reduced = 0;
  std::vector<std::optional<std::string>> arborescences;  // per special summand
  std::vector<Verdict> verdicts;
  std::vector<CatalogRun> catalog;  // filled for catalog labels
  std::vector<std::pair<std::string, double>> timing;

  bool ok() const {
    for (const auto& v : verdicts)
      if (v.status == Status::Fail) return false;
    for (const auto& c : catalog)
      if (!c.ok()) return false;
    return true;
  }
};

struct ReportOptions {
  int state_cap = kDefaultStateCap;
  SkeinConfig skein;
};

inline InvariantReport invariants(const Input& in, const ReportOptions& opt = {}) {
  using clock = std::chrono::steady_clock;
  auto lap = [](clock::time_point t0) { return std::chrono::duration<double>(clock::now() - t0).count(); };
  const Diagram& d = in.diagram;
  InvariantReport r;
  r.input = in.description;
  auto t0 = clock::now();
  r.crossings = d.crossing_count();
  r.seifert_circles = seifert_circle_count(d);
  r.writhe = writhe(d);
  r.euler = canonical_euler(d);
  r.components = component_count(d);
  r.positivity_class = positivity_class(d);
  r.bennequin = bennequin(d);
  r.rudolph_bennequin = rudolph_bennequin(d);
  if (d.crossing_count() == 0 || (is_connected(d) && is_reduced(d))) r.prime_factors = prime_factor_count(d);
  r.b1_reduced = betti1(reduced_seifert_graph(d));
  if (d.crossing_count() > 0 && is_connected(d)) {
    for (const auto& s : special_summands(d).summands) {
      try {
        EvenValenceGraph g = evgraph_from_special(s);
        r.arborescences.push_back(arborescence_count(g, 0).count.str());
      } catch (const Error&) {
        r.arborescences.push_back(std::nullopt);
      }
    }
  }
  r.timing.emplace_back("diagram", lap(t0));

  t0 = clock::now();
  std::optional<LaurentPoly1> bracket_v;
  if (d.crossing_count() <= opt.state_cap) {
    LaurentPoly1 br = kauffman_bracket(d, opt.state_cap);
    r.bracket = br.to_string();
    bracket_v = jones_from_bracket(br, r.writhe);
  }
  r.timing.emplace_back("bracket", lap(t0));

  t0 = clock::now();
  LaurentPoly2 p = in.braid ? homfly_braid(*in.braid, opt.skein) : homfly(d, opt.skein);
  LaurentPoly1 v = jones_from_homfly(p);
  LaurentPoly1 a = alexander_symmetric_from_homfly(p, r.components);
  r.homfly = p.to_string();
  r.jones = v.to_string();
  r.alexander_symmetric = a.to_string();
  r.alexander_nonneg = alexander_nonneg_from_symmetric(a).to_string();
  r.timing.emplace_back("skein", lap(t0));

  t0 = clock::now();
  r.verdicts.push_back(check_jones_oracle(bracket_v, v));
  r.verdicts.push_back(check_skein_bounds(d, p));
  r.verdicts.push_back(check_positive_low(d, v));
  r.verdicts.push_back(check_positive_second(d, v));
  r.verdicts.push_back(check_tree_vanishing(d, v));
  r.verdicts.push_back(check_ap_leading(d, v));
  ApDegrees apd = check_ap_degrees(d, v, p);
  r.verdicts.push_back(apd.verdict);
  if (apd.mindeg_l_sharp)
    r.verdicts.push_back({"mindeg-l-equals-one-minus-chi", Status::Finding, *apd.mindeg_l_sharp ? "true" : "false"});
  r.verdicts.push_back(check_fiber_shape(d, p));
  r.verdicts.push_back(finding_alexander_fibered(d, p));
  r.timing.emplace_back("verdicts", lap(t0));

  if (in.entry) {
    t0 = clock::now();
    r.catalog.push_back(run_entry(*in.entry, opt.state_cap, opt.skein));
    r.timing.emplace_back("catalog", lap(t0));
  }
  return r;
}

inline nlohmann::json to_json(const InvariantReport& r) {
  nlohmann::json j;
  j["schema"] = kSchemaVersion;
  j["input"] = r.input;
  j["ok"] = r.ok();
  j["diagram"] = {{"crossings", r.crossings},
                  {"seifert_circles", r.seifert_circles},
                  {"writhe", r.writhe},
                  {"euler", r.euler},
                  {"components", r.components},
                  {"positivity_class", r.positivity_class},
                  {"bennequin", r.bennequin},
                  {"rudolph_bennequin", r.rudolph_bennequin},
                  {"prime_factors", r.prime_factors ? nlohmann::json(*r.prime_factors) : nlohmann::json()}};
  j["polynomials"] = {{"bracket", r.bracket ? nlohmann::json(*r.bracket) : nlohmann::json()},
                      {"jones", r.jones},
                      {"homfly", r.homfly},
                      {"alexander_symmetric", r.alexander_symmetric},
                      {"alexander_nonneg", r.alexander_nonneg}};
  nlohmann::json arb = nlohmann::json::array();
  for (const auto& a : r.arborescences) arb.push_back(a ? nlohmann::json(*a) : nlohmann::json());
  j["graphs"] = {{"b1_reduced", r.b1_reduced}, {"arborescences", arb}};
  j["verdicts"] = nlohmann::json::array();
  for (const auto& v : r.verdicts) j["verdicts"].push_back(to_json(v));
  if (!r.catalog.empty()) {
    j["catalog"] = nlohmann::json::array();
    for (const auto& c : r.catalog) j["catalog"].push_back(to_json(c));
  }
  j["timing"] = nlohmann::json::object();
  for (const auto& [k, s] : r.timing) j["timing"][k] = s;
  return j;
}

inline std::string to_text(const InvariantReport& r) {
  std::ostringstream os;
  os << "input: " << r.input << "\n";
  os << "crossings " << r.crossings << ", Seifert circles " << r.seifert_circles << ", writhe " << r.writhe
     << ", chi " << r.euler << ", components " << r.components << "\n";
  os << "negative crossings " << r.positivity_class << ", b " << r.bennequin << ", rb " << r.rudolph_bennequin
     << ", prime factors " << (r.prime_factors ? std::to_string(*r.prime_factors) : "-") << "\n";
  os << "bracket: " << (r.bracket ? *r.bracket : "(above state-sum cap)") << "\n";
  os << "V: " << r.jones << "\n";
  os << "P: " << r.homfly << "\n";
  os << "Delta (symmetric): " << r.alexander_symmetric << "\n";
  os << "Delta (nonnegative): " << r.alexander_nonneg << "\n";
  os << "b1 of reduced Seifert graph: " << r.b1_reduced << "\n";
  if (!r.arborescences.empty()) {
    os << "arborescences per summand:";
    for (const auto& a : r.arborescences) os << " " << (a ? *a : "-");
    os << "\n";
  }
  for (const auto& v : r.verdicts) os << "[" << to_string(v.status) << "] " << v.id << ": " << v.detail << "\n";
  for (const auto& c : r.catalog) {
    os << "catalog " << c.label << " (" << c.chirality << "): " << (c.ok() ? "ok" : "MISMATCH") << "\n";
    for (const auto& x : c.values)
      os << "  " << x.quantity << " expected " << x.expected << " got " << x.actual << (x.ok ? "" : "  <-- differs")
         << "\n";
  }
  os << "time:";
  for (const auto& [k, s] : r.timing) os << " " << k << " " << s << "s";
  os << "\n";
  return os.str();
}

}  // namespace knotlab::lab
