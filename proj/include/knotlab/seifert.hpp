#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "knotlab/diagram.hpp"

namespace knotlab {

// Result of Seifert's algorithm. At each crossing, circle a carries the
// incoming under-strand and circle b the incoming over-strand. At a positive
// crossing b lies to the left of a (and a to the right of b); at a negative
// crossing the sides are exchanged.
struct SeifertData {
  std::vector<std::vector<int>> circles;  // edge cycles; free loops are empty lists
  std::vector<int> circle_of_edge;
  std::vector<std::pair<int, int>> crossing_circles;  // (a, b) per crossing
  std::vector<int> valency;
  std::vector<std::vector<int>> left, right;  // crossings attached on each side of a circle

  int count() const { return static_cast<int>(circles.size()); }
};

inline SeifertData seifert(const Diagram& d) {
  SeifertData sd;
  const int ne = d.edge_count();
  sd.circle_of_edge.assign(ne, -1);
  auto smooth_next = [&](int e) {
    Slot h = d.edge(e).head;
    int s = d.sign(h.x);
    int out = h.pos == 0 ? over_out_pos(s) : 2;
    return d.crossing(h.x).edge[out];
  };
  for (int e = 0; e < ne; ++e) {
    if (sd.circle_of_edge[e] >= 0) continue;
    int id = sd.count();
    sd.circles.emplace_back();
    for (int f = e; sd.circle_of_edge[f] < 0; f = smooth_next(f)) {
      sd.circle_of_edge[f] = id;
      sd.circles.back().push_back(f);
    }
  }
  for (int i = 0; i < d.free_loops(); ++i) sd.circles.emplace_back();
  const int s = sd.count();
  sd.valency.assign(s, 0);
  sd.left.assign(s, {});
  sd.right.assign(s, {});
  for (int x = 0; x < d.crossing_count(); ++x) {
    const auto& c = d.crossing(x);
    int a = sd.circle_of_edge[c.edge[0]];
    int b = sd.circle_of_edge[c.edge[over_in_pos(c.sign)]];
    sd.crossing_circles.emplace_back(a, b);
    ++sd.valency[a];
    ++sd.valency[b];
    if (c.sign > 0) {
      sd.left[a].push_back(x);
      sd.right[b].push_back(x);
    } else {
      sd.right[a].push_back(x);
      sd.left[b].push_back(x);
    }
  }
  return sd;
}

inline int seifert_circle_count(const Diagram& d) { return seifert(d).count(); }

// chi(D) = s(D) - c(D).
inline int canonical_euler(const Diagram& d) { return seifert_circle_count(d) - d.crossing_count(); }

struct SeifertGraph {
  struct E {
    int a, b, sign, crossing;
  };
  int vertices = 0;
  std::vector<E> edges;
  bool reduced = false;
};

inline SeifertGraph seifert_graph(const Diagram& d) {
  SeifertData sd = seifert(d);
  SeifertGraph g;
  g.vertices = sd.count();
  for (int x = 0; x < d.crossing_count(); ++x)
    g.edges.push_back({sd.crossing_circles[x].first, sd.crossing_circles[x].second, d.sign(x), x});
  return g;
}

inline SeifertGraph reduced_seifert_graph(const Diagram& d) {
  SeifertGraph g = seifert_graph(d);
  SeifertGraph r;
  r.vertices = g.vertices;
  r.reduced = true;
  std::set<std::pair<int, int>> seen;
  for (const auto& e : g.edges)
    if (seen.insert(std::minmax(e.a, e.b)).second) r.edges.push_back(e);
  return r;
}

inline int betti1(const SeifertGraph& g) {
  std::vector<int> parent(g.vertices);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  int comps = g.vertices;
  for (const auto& e : g.edges) {
    int ra = find(e.a), rb = find(e.b);
    if (ra != rb) {
      parent[ra] = rb;
      --comps;
    }
  }
  return static_cast<int>(g.edges.size()) - g.vertices + comps;
}

inline bool is_tree(const SeifertGraph& g) {
  return betti1(g) == 0 && static_cast<int>(g.edges.size()) == g.vertices - 1;
}

inline int positivity_class(const Diagram& d) {
  int k = 0;
  for (const auto& c : d.crossings()) k += c.sign < 0;
  return k;
}

inline std::vector<int> negative_crossings(const Diagram& d) {
  std::vector<int> out;
  for (int x = 0; x < d.crossing_count(); ++x)
    if (d.sign(x) < 0) out.push_back(x);
  return out;
}

// Crossings other than x joining the same two Seifert circles as x.
inline std::vector<int> parallel_partners(const SeifertData& sd, int x) {
  auto key = std::minmax(sd.crossing_circles[x].first, sd.crossing_circles[x].second);
  std::vector<int> out;
  for (int y = 0; y < static_cast<int>(sd.crossing_circles.size()); ++y)
    if (y != x && std::minmax(sd.crossing_circles[y].first, sd.crossing_circles[y].second) == key)
      out.push_back(y);
  return out;
}

// b(D) = w(D) - s(D) + 1.
inline int bennequin(const Diagram& d) { return writhe(d) - seifert_circle_count(d) + 1; }

// Circles of valency >= 2 to which only negative non-nugatory crossings are attached.
inline int negative_circle_count(const Diagram& d) {
  SeifertData sd = seifert(d);
  auto nug = nugatory_crossings(d);
  std::set<int> nugatory(nug.begin(), nug.end());
  int cnt = 0;
  for (int c = 0; c < sd.count(); ++c) {
    if (sd.valency[c] < 2) continue;
    bool ok = true;
    for (const auto* side : {&sd.left[c], &sd.right[c]})
      for (int x : *side)
        if (d.sign(x) > 0 || nugatory.count(x)) ok = false;
    cnt += ok;
  }
  return cnt;
}

// rb(D) = b(D) + 2 s_-(D).
inline int rudolph_bennequin(const Diagram& d) { return bennequin(d) + 2 * negative_circle_count(d); }

inline std::vector<int> separating_circles(const SeifertData& sd) {
  std::vector<int> out;
  for (int c = 0; c < sd.count(); ++c)
    if (!sd.left[c].empty() && !sd.right[c].empty()) out.push_back(c);
  return out;
}

inline std::vector<int> separating_circles(const Diagram& d) { return separating_circles(seifert(d)); }

inline bool is_special(const Diagram& d) { return separating_circles(d).empty(); }

inline bool is_special_alternating(const Diagram& d) { return positivity_class(d) == 0 && is_special(d); }

struct SpecialDecomposition {
  struct Join {
    int circle;                 // separating circle of the input diagram
    std::vector<int> summands;  // summands containing crossings attached to it
  };
  std::vector<Diagram> summands;
  std::vector<std::vector<int>> crossing_sets;  // input crossing ids per summand
  std::vector<Join> joins;
};

// Cuts along every separating circle. Two crossings attached to a common circle
// stay together unless that circle separates them. Each summand keeps its own
// crossings; all others are smoothed and the resulting free loops discarded.
inline SpecialDecomposition special_summands(const Diagram& d) {
  SeifertData sd = seifert(d);
  const int n = d.crossing_count();
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  auto unite_all = [&](const std::vector<int>& v) {
    for (std::size_t i = 1; i < v.size(); ++i) parent[find(v[i])] = find(v[0]);
  };
  for (int c = 0; c < sd.count(); ++c) {
    bool sep = !sd.left[c].empty() && !sd.right[c].empty();
    if (sep) {
      unite_all(sd.left[c]);
      unite_all(sd.right[c]);
    } else {
      std::vector<int> all = sd.left[c];
      all.insert(all.end(), sd.right[c].begin(), sd.right[c].end());
      unite_all(all);
    }
  }
  std::map<int, int> group_id;
  SpecialDecomposition md;
  std::vector<int> group(n);
  for (int x = 0; x < n; ++x) {
    auto it = group_id.try_emplace(find(x), static_cast<int>(group_id.size())).first;
    group[x] = it->second;
    if (static_cast<int>(md.crossing_sets.size()) <= it->second) md.crossing_sets.emplace_back();
    md.crossing_sets[it->second].push_back(x);
  }
  for (const auto& set : md.crossing_sets) {
    std::vector<std::pair<int, Resolution>> smooth;
    std::vector<char> keep(n, 0);
    for (int x : set) keep[x] = 1;
    for (int x = 0; x < n; ++x)
      if (!keep[x]) smooth.emplace_back(x, Resolution::Smooth);
    Diagram s = resolve(d, smooth);
    md.summands.push_back(Diagram(s.crossings(), s.edges(), 0));
  }
  for (int c : separating_circles(sd)) {
    std::set<int> gs;
    for (int x : sd.left[c]) gs.insert(group[x]);
    for (int x : sd.right[c]) gs.insert(group[x]);
    md.joins.push_back({c, std::vector<int>(gs.begin(), gs.end())});
  }
  return md;
}

inline nlohmann::json to_json(const SeifertData& sd) {
  nlohmann::json j;
  j["s"] = sd.count();
  j["valency"] = sd.valency;
  j["crossing_circles"] = nlohmann::json::array();
  for (auto [a, b] : sd.crossing_circles) j["crossing_circles"].push_back({a, b});
  j["separating"] = separating_circles(sd);
  return j;
}

inline nlohmann::json to_json(const SpecialDecomposition& md) {
  nlohmann::json j;
  j["summands"] = nlohmann::json::array();
  for (std::size_t i = 0; i < md.summands.size(); ++i)
    j["summands"].push_back({{"crossings", md.crossing_sets[i]},
                             {"chi", canonical_euler(md.summands[i])}});
  j["joins"] = nlohmann::json::array();
  for (const auto& jn : md.joins) j["joins"].push_back({{"circle", jn.circle}, {"summands", jn.summands}});
  return j;
}

}  // namespace knotlab
