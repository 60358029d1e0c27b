#pragma once

#include <chrono>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "knotlab/bracket.hpp"
#include "knotlab/diagram.hpp"
#include "knotlab/seifert.hpp"
#include "knotlab/shadow.hpp"
#include "knotlab/skein.hpp"

namespace knotlab::lab {

// (3, ..., 3, -1)-pretzel diagram with n threes, every column reverse-oriented.
inline Diagram pretzel_family_diagram(int n) {
  if (n < 1) throw PreconditionError("pretzel family needs n >= 1");
  std::vector<int> tw(n, 3);
  tw.push_back(-1);
  return pretzel_diagram(tw);
}

// The same link with one crossing fewer: a three-crossing rational tangle
// (two horizontal twists, then one vertical) next to n - 1 columns of three.
inline Diagram pretzel_family_reduced(int n) {
  if (n < 2) throw PreconditionError("reduced pretzel family needs n >= 2");
  Tangle t = Tangle::zero();
  t.twist_right(0);
  t.twist_right(0);
  t.twist_bottom(0);
  std::vector<Tangle> cols{t};
  std::vector<std::optional<Band>> scheme{std::nullopt};
  for (int i = 1; i < n; ++i) {
    cols.push_back(Tangle::column(3));
    scheme.emplace_back(Band::Reverse);
  }
  return montesinos_diagram(cols, scheme);
}

struct Expected {
  std::string quantity;  // "min_deg_V", "max_deg_V", "span_V", "min_deg_l_P", "bands_genus"
  std::string value;     // exact value as text (exponents may be halves)
  std::string source;    // where the value comes from
};

struct CatalogEntry {
  std::string label;
  std::string braid;                  // braid word, if given as one
  std::vector<std::string> bands;     // optional band factorization of the word
  std::optional<int> pretzel_threes;  // (3,...,3,-1)-pretzel family member
  std::vector<Expected> expected;
  std::string chirality_note;
  bool try_mirror = false;  // match either chirality

  Diagram diagram() const {
    if (pretzel_threes) return pretzel_family_diagram(*pretzel_threes);
    return braid_closure(parse_braid(braid));
  }
};

// A band is w s_i^{+-1} w^{-1}: odd length, mirrored around the middle letter.
inline bool is_band(const std::vector<int>& w) {
  if (w.size() % 2 == 0) return false;
  const std::size_t n = w.size();
  for (std::size_t i = 0; i < n / 2; ++i)
    if (w[i] != -w[n - 1 - i]) return false;
  return true;
}

// Number of bands, after checking that they multiply out to the word.
inline int band_count(const CatalogEntry& e) {
  if (e.bands.empty()) throw PreconditionError("entry " + e.label + " has no band factorization");
  BraidWord b = parse_braid(e.braid);
  std::vector<int> joined;
  for (const auto& t : e.bands) {
    BraidWord piece = parse_braid(std::to_string(b.strands) + ": " + t);
    if (!is_band(piece.letters)) throw PreconditionError("'" + t + "' is not a band");
    joined.insert(joined.end(), piece.letters.begin(), piece.letters.end());
  }
  if (joined != b.letters) throw PreconditionError("bands of " + e.label + " do not multiply to its word");
  return static_cast<int>(e.bands.size());
}

inline std::vector<CatalogEntry> catalog() {
  std::vector<CatalogEntry> out;
  out.push_back({"15_162508",
                 "5: -1 -2 3 4 -3 2 1 -2 1 2 2 -3 4 3 -2 3",
                 {"-1 -2 3 4 -3 2 1", "-2 1 2", "2 -3 4 3 -2", "3"},
                 std::nullopt,
                 {{"min_deg_V", "1", "reference"}},
                 "either chirality; the matching one is recorded",
                 true});
  out.push_back({"braid21",
                 "4: 1 1 1 2 -1 2 1 3 1 2 -1 2 2 3 -2 1 2 -1 2 3 -2",
                 {"1", "1", "1 2 -1", "2", "1", "3", "1 2 -1", "2", "2 3 -2", "1 2 -1", "2 3 -2"},
                 std::nullopt,
                 {{"min_deg_V", "5", "reference"}, {"min_deg_l_P", "10", "reference"}},
                 "either chirality; the matching one is recorded",
                 true});
  out.push_back({"braid19",
                 "4: 2 3 -2 1 2 -1 2 3 -2 1 2 -1 2 3 -2 1 2 -1 1",
                 {"2 3 -2", "1 2 -1", "2 3 -2", "1 2 -1", "2 3 -2", "1 2 -1", "1"},
                 std::nullopt,
                 {{"min_deg_V", "3", "reference"},
                  {"min_deg_l_P", "4", "reference"},
                  {"bands_genus", "2", "reference: 7 bands on 4 strands"}},
                 "either chirality; the matching one is recorded",
                 true});
  for (int n = 3; n <= 5; ++n) {
    // 1 - chi = n for this family.
    Exp4 lo = Exp4::half(n);
    Exp4 hi = Exp4::half(7 * n) - Exp4::whole(2);
    out.push_back({"L" + std::to_string(n),
                   "",
                   {},
                   n,
                   {{"min_deg_V", lo.to_string(), "formula (1-chi)/2"},
                    {"max_deg_V", hi.to_string(), "formula 7(1-chi)/2 - 2"},
                    {"span_V", std::to_string(3 * n - 2), "formula 3(1-chi) - 2"}},
                   "threes reverse-oriented",
                   false});
  }
  return out;
}

inline std::optional<CatalogEntry> find_entry(const std::string& label) {
  for (auto& e : catalog())
    if (e.label == label) return e;
  return std::nullopt;
}

struct CheckedValue {
  std::string quantity, expected, actual, source;
  bool ok = false;
};

struct CatalogRun {
  std::string label;
  std::string chirality;  // "as given" or "mirror"
  std::vector<CheckedValue> values;
  std::string jones, homfly;
  bool bracket_agrees = true;  // bracket Jones equals skein Jones when under the cap
  bool bracket_checked = false;
  double seconds = 0;
  bool ok() const {
    if (!bracket_agrees) return false;
    for (const auto& v : values)
      if (!v.ok) return false;
    return true;
  }
};

namespace detail {

inline std::string actual_value(const CatalogEntry& e, const std::string& q, const Diagram& d, const LaurentPoly1& v,
                                const LaurentPoly2& p) {
  if (q == "min_deg_V") return v.min_deg().to_string();
  if (q == "max_deg_V") return v.max_deg().to_string();
  if (q == "span_V") return v.span().to_string();
  if (q == "min_deg_l_P") return p.min_deg(0).to_string();
  if (q == "bands_genus") {
    // (bands - strands + 1) / 2; the strands are the Seifert circles of the closure.
    int s = seifert_circle_count(d);
    return std::to_string((band_count(e) - s + 1) / 2);
  }
  throw PreconditionError("unknown catalog quantity " + q);
}

}  // namespace detail

// Runs one entry: skein polynomial (braid path when a word is given), Jones
// from it, bracket cross-check under the cap, and the expected values. With
// try_mirror, the mirror is used if it matches and the given one does not.
inline CatalogRun run_entry(const CatalogEntry& e, int state_cap = kDefaultStateCap, SkeinConfig cfg = {}) {
  auto t0 = std::chrono::steady_clock::now();
  auto attempt = [&](bool mirrored) {
    CatalogRun r;
    r.label = e.label;
    r.chirality = mirrored ? "mirror" : "as given";
    Diagram d = e.diagram();
    LaurentPoly2 p;
    if (!e.braid.empty()) {
      BraidWord b = parse_braid(e.braid);
      if (mirrored)
        for (auto& l : b.letters) l = -l;
      d = braid_closure(b);
      p = homfly_braid(b, cfg);
    } else {
      if (mirrored) d = mirror(d);
      p = homfly(d, cfg);
    }
    LaurentPoly1 v = jones_from_homfly(p);
    if (d.crossing_count() <= state_cap) {
      r.bracket_checked = true;
      r.bracket_agrees = jones(d, state_cap) == v;
    }
    r.jones = v.to_string();
    r.homfly = p.to_string();
    for (const auto& x : e.expected) {
      std::string a = detail::actual_value(e, x.quantity, d, v, p);
      r.values.push_back({x.quantity, x.value, a, x.source, a == x.value});
    }
    return r;
  };
  CatalogRun r = attempt(false);
  if (!r.ok() && e.try_mirror) {
    CatalogRun m = attempt(true);
    if (m.ok()) r = m;
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

inline nlohmann::json to_json(const CatalogEntry& e) {
  nlohmann::json j;
  j["label"] = e.label;
  if (!e.braid.empty()) j["braid"] = e.braid;
  if (e.pretzel_threes) j["pretzel_threes"] = *e.pretzel_threes;
  j["expected"] = nlohmann::json::array();
  for (const auto& x : e.expected) j["expected"].push_back({{"quantity", x.quantity}, {"value", x.value}, {"source", x.source}});
  j["chirality_note"] = e.chirality_note;
  return j;
}

inline nlohmann::json to_json(const CatalogRun& r) {
  nlohmann::json j;
  j["label"] = r.label;
  j["chirality"] = r.chirality;
  j["ok"] = r.ok();
  j["jones"] = r.jones;
  j["homfly"] = r.homfly;
  j["bracket_checked"] = r.bracket_checked;
  j["bracket_agrees"] = r.bracket_agrees;
  j["seconds"] = r.seconds;
  j["values"] = nlohmann::json::array();
  for (const auto& v : r.values)
    j["values"].push_back(
        {{"quantity", v.quantity}, {"expected", v.expected}, {"actual", v.actual}, {"source", v.source}, {"ok", v.ok}});
  return j;
}

}  // namespace knotlab::lab
