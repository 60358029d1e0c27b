#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <regex>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "knotlab/error.hpp"

namespace knotlab {

// A crossing has four edge ends in counterclockwise order. Position 0 is the
// incoming under-strand and position 2 the outgoing under-strand. For a
// positive crossing the over-strand runs 3 -> 1, for a negative one 1 -> 3.
struct Slot {
  int x = -1;
  int pos = -1;
  bool operator==(const Slot&) const = default;
  auto operator<=>(const Slot&) const = default;
};

struct Crossing {
  std::array<int, 4> edge{-1, -1, -1, -1};
  int sign = 1;
};

// Oriented edge from an outgoing slot (tail) to an incoming slot (head).
struct Edge {
  Slot tail;
  Slot head;
};

constexpr int over_in_pos(int sign) { return sign > 0 ? 3 : 1; }
constexpr int over_out_pos(int sign) { return sign > 0 ? 1 : 3; }
constexpr bool slot_is_incoming(int sign, int pos) { return pos == 0 || pos == over_in_pos(sign); }

class Diagram {
 public:
  Diagram() = default;

  Diagram(std::vector<Crossing> xs, std::vector<Edge> es, int free_loops = 0)
      : crossings_(std::move(xs)), edges_(std::move(es)), free_loops_(free_loops) {
    validate();
  }

  static Diagram unknot(int loops = 1) { return Diagram({}, {}, loops); }

  int crossing_count() const { return static_cast<int>(crossings_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  int free_loops() const { return free_loops_; }
  const std::vector<Crossing>& crossings() const { return crossings_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const Crossing& crossing(int x) const { return crossings_.at(x); }
  const Edge& edge(int e) const { return edges_.at(e); }
  int sign(int x) const { return crossings_.at(x).sign; }

  int edge_at(Slot s) const { return crossings_[s.x].edge[s.pos]; }
  bool incoming(Slot s) const { return slot_is_incoming(crossings_[s.x].sign, s.pos); }

  Slot other_end(Slot s) const {
    const Edge& e = edges_[edge_at(s)];
    return incoming(s) ? e.tail : e.head;
  }

  // The edge that continues straight through the head crossing of e.
  int next_edge(int e) const {
    Slot h = edges_[e].head;
    return crossings_[h.x].edge[(h.pos + 2) % 4];
  }

  void check_crossing(int x) const {
    if (x < 0 || x >= crossing_count())
      throw PreconditionError("invalid crossing id " + std::to_string(x));
  }

 private:
  void validate() const {
    const int n = crossing_count();
    if (free_loops_ < 0) throw Error("negative free loop count");
    if (edges_.size() != 2 * crossings_.size()) throw Error("edge count must be twice the crossing count");
    for (int x = 0; x < n; ++x) {
      const auto& c = crossings_[x];
      if (c.sign != 1 && c.sign != -1) throw Error("crossing sign must be +1 or -1");
      for (int p = 0; p < 4; ++p) {
        int e = c.edge[p];
        if (e < 0 || e >= edge_count()) throw Error("slot refers to a missing edge");
        Slot s{x, p};
        const Edge& ed = edges_[e];
        if (slot_is_incoming(c.sign, p) ? !(ed.head == s) : !(ed.tail == s))
          throw Error("edge orientation is inconsistent with the crossing at slot " +
                      std::to_string(x) + ":" + std::to_string(p));
      }
    }
  }

  std::vector<Crossing> crossings_;
  std::vector<Edge> edges_;
  int free_loops_ = 0;
};

// ---------------------------------------------------------------- basic stats

inline int writhe(const Diagram& d) {
  int w = 0;
  for (const auto& c : d.crossings()) w += c.sign;
  return w;
}

inline int crossing_number(const Diagram& d) { return d.crossing_count(); }

// Link component of every edge; free loops are extra components.
inline std::vector<int> edge_components(const Diagram& d, int* count = nullptr) {
  std::vector<int> comp(d.edge_count(), -1);
  int k = 0;
  for (int e = 0; e < d.edge_count(); ++e) {
    if (comp[e] >= 0) continue;
    for (int f = e; comp[f] < 0; f = d.next_edge(f)) comp[f] = k;
    ++k;
  }
  if (count) *count = k;
  return comp;
}

inline int component_count(const Diagram& d) {
  int k = 0;
  edge_components(d, &k);
  return k + d.free_loops();
}

// ---------------------------------------------------------------- moves

inline Diagram switch_crossing(const Diagram& d, int x) {
  d.check_crossing(x);
  auto xs = d.crossings();
  auto es = d.edges();
  const Crossing old = xs[x];
  // The old over-strand becomes the under-strand; renumber positions so that
  // position 0 is again the incoming under slot.
  const int shift = over_in_pos(old.sign);  // new pos k = old pos (k + shift) % 4
  Crossing nc;
  nc.sign = -old.sign;
  for (int k = 0; k < 4; ++k) nc.edge[k] = old.edge[(k + shift) % 4];
  xs[x] = nc;
  for (int k = 0; k < 4; ++k) {
    Edge& e = es[nc.edge[k]];
    Slot s{x, k};
    if (slot_is_incoming(nc.sign, k)) {
      e.head = s;
    } else {
      e.tail = s;
    }
  }
  return Diagram(std::move(xs), std::move(es), d.free_loops());
}

inline Diagram mirror(const Diagram& d) {
  Diagram r = d;
  for (int x = 0; x < d.crossing_count(); ++x) r = switch_crossing(r, x);
  return r;
}

enum class Resolution { Smooth, Straight };

// Removes the listed crossings. Smooth applies the oriented smoothing; Straight
// lets both strands pass through (only meaningful when the result stays planar,
// e.g. for a Reidemeister II pair). Remaining crossings keep their relative order;
// crossing_map[old] receives the new id or -1.
inline Diagram resolve(const Diagram& d, const std::vector<std::pair<int, Resolution>>& which,
                       std::vector<int>* crossing_map = nullptr) {
  const int n = d.crossing_count();
  std::vector<int> kind(n, -1);
  for (auto [x, r] : which) {
    d.check_crossing(x);
    kind[x] = static_cast<int>(r);
  }
  std::vector<int> map(n, -1);
  int next = 0;
  for (int x = 0; x < n; ++x)
    if (kind[x] < 0) map[x] = next++;

  auto continue_at = [&](int x, int pos) {  // incoming pos at removed x -> outgoing pos
    int s = d.sign(x);
    if (kind[x] == static_cast<int>(Resolution::Smooth)) return pos == 0 ? over_out_pos(s) : 2;
    return (pos + 2) % 4;
  };

  std::vector<Crossing> xs(next);
  std::vector<Edge> es;
  std::vector<char> used(d.edge_count(), 0);
  for (int x = 0; x < n; ++x) {
    if (kind[x] >= 0) continue;
    xs[map[x]].sign = d.sign(x);
    for (int p = 0; p < 4; ++p) {
      if (d.incoming({x, p})) continue;
      int e = d.crossing(x).edge[p];
      used[e] = 1;
      Slot h = d.edge(e).head;
      while (kind[h.x] >= 0) {
        int f = d.crossing(h.x).edge[continue_at(h.x, h.pos)];
        used[f] = 1;
        h = d.edge(f).head;
      }
      Edge ne{{map[x], p}, {map[h.x], h.pos}};
      es.push_back(ne);
    }
  }
  int loops = d.free_loops();
  for (int e = 0; e < d.edge_count(); ++e) {
    if (used[e]) continue;
    ++loops;
    int f = e;
    while (!used[f]) {
      used[f] = 1;
      Slot h = d.edge(f).head;
      f = d.crossing(h.x).edge[continue_at(h.x, h.pos)];
    }
  }
  for (int i = 0; i < static_cast<int>(es.size()); ++i) {
    xs[es[i].tail.x].edge[es[i].tail.pos] = i;
    xs[es[i].head.x].edge[es[i].head.pos] = i;
  }
  if (crossing_map) *crossing_map = map;
  return Diagram(std::move(xs), std::move(es), loops);
}

inline Diagram smooth_oriented(const Diagram& d, int x) {
  return resolve(d, {{x, Resolution::Smooth}});
}

// ---------------------------------------------------------------- faces

// Corner k of crossing x lies between positions k and k+1.
struct FaceMap {
  std::vector<std::vector<Slot>> faces;       // corners in boundary order (face on the right)
  std::vector<std::array<int, 4>> face_of;    // crossing x, corner k -> face id
  int count() const { return static_cast<int>(faces.size()); }
};

inline FaceMap faces(const Diagram& d) {
  FaceMap fm;
  const int n = d.crossing_count();
  fm.face_of.assign(n, {-1, -1, -1, -1});
  for (int x = 0; x < n; ++x) {
    for (int k = 0; k < 4; ++k) {
      if (fm.face_of[x][k] >= 0) continue;
      int id = fm.count();
      fm.faces.emplace_back();
      Slot c{x, k};
      while (fm.face_of[c.x][c.pos] < 0) {
        fm.face_of[c.x][c.pos] = id;
        fm.faces.back().push_back(c);
        c = d.other_end({c.x, (c.pos + 1) % 4});
      }
    }
  }
  return fm;
}

// Faces on either side of edge e, read at its tail.
inline std::pair<int, int> edge_faces(const Diagram& d, const FaceMap& fm, int e) {
  Slot t = d.edge(e).tail;
  return {fm.face_of[t.x][t.pos], fm.face_of[t.x][(t.pos + 3) % 4]};
}

// ---------------------------------------------------------------- connectivity

// Component id of each crossing in the underlying 4-valent graph.
inline std::vector<int> crossing_components(const Diagram& d, int* count = nullptr) {
  const int n = d.crossing_count();
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  for (const auto& e : d.edges()) parent[find(e.tail.x)] = find(e.head.x);
  std::vector<int> id(n, -1);
  std::map<int, int> root_id;
  for (int x = 0; x < n; ++x) {
    int r = find(x);
    auto it = root_id.try_emplace(r, static_cast<int>(root_id.size())).first;
    id[x] = it->second;
  }
  if (count) *count = static_cast<int>(root_id.size());
  return id;
}

// Number of split pieces: crossing components plus free loops.
inline int piece_count(const Diagram& d) {
  int k = 0;
  crossing_components(d, &k);
  return k + d.free_loops();
}

inline bool is_connected(const Diagram& d) { return piece_count(d) == 1; }
inline bool is_split_diagram(const Diagram& d) { return piece_count(d) > 1; }

// Sub-diagram on a set of crossings (ascending ids), keeping internal edges and
// adding the listed (tail, head) edges between slots of those crossings.
inline Diagram induced(const Diagram& d, const std::vector<int>& keep,
                       const std::vector<std::pair<Slot, Slot>>& extra, int free_loops = 0) {
  std::vector<int> map(d.crossing_count(), -1);
  for (int i = 0; i < static_cast<int>(keep.size()); ++i) map[keep[i]] = i;
  std::vector<Crossing> xs(keep.size());
  std::vector<Edge> es;
  for (int e = 0; e < d.edge_count(); ++e) {
    const Edge& ed = d.edge(e);
    if (map[ed.tail.x] < 0 || map[ed.head.x] < 0) continue;
    es.push_back({{map[ed.tail.x], ed.tail.pos}, {map[ed.head.x], ed.head.pos}});
  }
  for (auto [t, h] : extra) es.push_back({{map[t.x], t.pos}, {map[h.x], h.pos}});
  for (int i = 0; i < static_cast<int>(keep.size()); ++i) xs[i].sign = d.sign(keep[i]);
  for (int i = 0; i < static_cast<int>(es.size()); ++i) {
    xs[es[i].tail.x].edge[es[i].tail.pos] = i;
    xs[es[i].head.x].edge[es[i].head.pos] = i;
  }
  return Diagram(std::move(xs), std::move(es), free_loops);
}

// Connected crossing components as separate diagrams, followed by one
// crossingless unknot per free loop.
inline std::vector<Diagram> split_pieces(const Diagram& d) {
  int k = 0;
  auto id = crossing_components(d, &k);
  std::vector<std::vector<int>> groups(k);
  for (int x = 0; x < d.crossing_count(); ++x) groups[id[x]].push_back(x);
  std::vector<Diagram> out;
  for (const auto& g : groups) out.push_back(induced(d, g, {}));
  for (int i = 0; i < d.free_loops(); ++i) out.push_back(Diagram::unknot());
  return out;
}

inline Diagram disjoint_union(const Diagram& a, const Diagram& b) {
  auto xs = a.crossings();
  auto es = a.edges();
  const int xo = a.crossing_count();
  const int eo = a.edge_count();
  for (auto c : b.crossings()) {
    for (auto& e : c.edge) e += eo;
    xs.push_back(c);
  }
  for (auto e : b.edges()) {
    e.tail.x += xo;
    e.head.x += xo;
    es.push_back(e);
  }
  return Diagram(std::move(xs), std::move(es), a.free_loops() + b.free_loops());
}

// Connected sum: cut edge ea of a and edge eb of b and reconnect across.
inline Diagram connected_sum(const Diagram& a, int ea, const Diagram& b, int eb) {
  Diagram u = disjoint_union(a, b);
  const int ebu = eb + a.edge_count();
  auto xs = u.crossings();
  auto es = u.edges();
  Edge e1 = es[ea];
  Edge e2 = es[ebu];
  es[ea] = {e1.tail, e2.head};
  es[ebu] = {e2.tail, e1.head};
  xs[e2.head.x].edge[e2.head.pos] = ea;
  xs[e1.head.x].edge[e1.head.pos] = ebu;
  return Diagram(std::move(xs), std::move(es), u.free_loops());
}

// ---------------------------------------------------------------- nugatory and composite

inline std::vector<int> nugatory_crossings(const Diagram& d, const FaceMap& fm) {
  std::vector<int> out;
  for (int x = 0; x < d.crossing_count(); ++x) {
    const auto& f = fm.face_of[x];
    if (f[0] == f[2] || f[1] == f[3]) out.push_back(x);
  }
  return out;
}

inline std::vector<int> nugatory_crossings(const Diagram& d) { return nugatory_crossings(d, faces(d)); }

inline bool is_reduced(const Diagram& d) { return nugatory_crossings(d).empty(); }

// Two distinct edges bounding the same two faces; cutting both separates the
// crossings of a connected diagram into two nonempty sides.
inline std::optional<std::pair<int, int>> find_decomposing_pair(const Diagram& d, const FaceMap& fm) {
  std::map<std::pair<int, int>, int> seen;
  for (int e = 0; e < d.edge_count(); ++e) {
    auto [f, g] = edge_faces(d, fm, e);
    if (f == g) continue;
    auto key = std::minmax(f, g);
    auto [it, fresh] = seen.try_emplace(key, e);
    if (!fresh) return std::make_pair(it->second, e);
  }
  return std::nullopt;
}

// Splits a connected diagram along a decomposing edge pair into two diagrams,
// each closed by a single new edge.
inline std::pair<Diagram, Diagram> split_at_pair(const Diagram& d, int e1, int e2) {
  const int n = d.crossing_count();
  std::vector<int> side(n, -1);
  std::vector<int> stack{d.edge(e1).tail.x};
  side[stack[0]] = 0;
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    for (int p = 0; p < 4; ++p) {
      int e = d.crossing(x).edge[p];
      if (e == e1 || e == e2) continue;
      int y = d.other_end({x, p}).x;
      if (side[y] < 0) {
        side[y] = 0;
        stack.push_back(y);
      }
    }
  }
  std::vector<int> a, b;
  for (int x = 0; x < n; ++x) (side[x] == 0 ? a : b).push_back(x);
  if (a.empty() || b.empty()) throw Error("edge pair does not separate the diagram");
  const Edge& x1 = d.edge(e1);
  const Edge& x2 = d.edge(e2);
  // In side A, e1 leaves through its tail, so the strand re-enters A along e2's head.
  if (side[x2.head.x] != 0 || side[x1.head.x] == 0)
    throw Error("edge pair does not cut a single strand pair");
  Diagram da = induced(d, a, {{x1.tail, x2.head}});
  Diagram db = induced(d, b, {{x2.tail, x1.head}});
  return {da, db};
}

// Prime factor diagrams of a connected reduced diagram (recursive splitting).
inline std::vector<Diagram> prime_factors(const Diagram& d) {
  if (!is_connected(d)) throw PreconditionError("prime factorization requires a connected diagram");
  FaceMap fm = faces(d);
  if (!nugatory_crossings(d, fm).empty())
    throw PreconditionError("prime factorization requires a reduced diagram (nugatory crossing present)");
  std::vector<Diagram> out;
  std::vector<Diagram> work{d};
  while (!work.empty()) {
    Diagram cur = std::move(work.back());
    work.pop_back();
    FaceMap f = faces(cur);
    auto pair = find_decomposing_pair(cur, f);
    if (!pair) {
      out.push_back(std::move(cur));
      continue;
    }
    auto [a, b] = split_at_pair(cur, pair->first, pair->second);
    work.push_back(std::move(a));
    work.push_back(std::move(b));
  }
  return out;
}

inline int prime_factor_count(const Diagram& d) {
  if (d.crossing_count() == 0) return 0;
  return static_cast<int>(prime_factors(d).size());
}

// ---------------------------------------------------------------- braids

struct BraidWord {
  int strands = 1;
  std::vector<int> letters;

  std::string to_string() const {
    std::string s = std::to_string(strands) + ":";
    for (int l : letters) s += " " + std::to_string(l);
    return s;
  }
  bool operator==(const BraidWord&) const = default;
};

inline void check_braid(const BraidWord& b) {
  if (b.strands < 1) throw ParseError("braid needs at least one strand");
  for (int l : b.letters)
    if (l == 0 || std::abs(l) > b.strands - 1)
      throw ParseError("braid letter " + std::to_string(l) + " out of range for " +
                       std::to_string(b.strands) + " strands");
}

// Text form "s: l1 l2 ... lk".
inline BraidWord parse_braid(const std::string& text) {
  auto colon = text.find(':');
  if (colon == std::string::npos) throw ParseError("braid text must look like \"s: l1 l2 ...\"");
  BraidWord b;
  try {
    b.strands = std::stoi(text.substr(0, colon));
  } catch (const std::exception&) {
    throw ParseError("bad strand count in braid text");
  }
  std::istringstream is(text.substr(colon + 1));
  std::string tok;
  while (is >> tok) {
    try {
      std::size_t used = 0;
      int v = std::stoi(tok, &used);
      if (used != tok.size()) throw ParseError("bad braid letter '" + tok + "'");
      b.letters.push_back(v);
    } catch (const std::logic_error&) {
      throw ParseError("bad braid letter '" + tok + "'");
    }
  }
  check_braid(b);
  return b;
}

// Standard closure with strands running upward; crossing j is letter j.
inline Diagram braid_closure(const BraidWord& b) {
  check_braid(b);
  const int s = b.strands;
  const int n = static_cast<int>(b.letters.size());
  std::vector<Crossing> xs(n);
  std::vector<Edge> es;
  std::vector<std::optional<Slot>> first_in(s + 1), last_out(s + 1);
  auto attach = [&](int pos_strand, Slot in_slot, Slot out_slot) {
    if (last_out[pos_strand]) {
      es.push_back({*last_out[pos_strand], in_slot});
    } else {
      first_in[pos_strand] = in_slot;
    }
    last_out[pos_strand] = out_slot;
  };
  for (int j = 0; j < n; ++j) {
    int l = b.letters[j];
    int i = std::abs(l);
    xs[j].sign = l > 0 ? 1 : -1;
    if (l > 0) {
      // SE(0) in from strand i+1, NE(1) out to i+1, NW(2) out to i, SW(3) in from i.
      attach(i + 1, {j, 0}, {j, 1});
      attach(i, {j, 3}, {j, 2});
    } else {
      // SW(0) in from i, SE(1) in from i+1, NE(2) out to i+1, NW(3) out to i.
      attach(i, {j, 0}, {j, 3});
      attach(i + 1, {j, 1}, {j, 2});
    }
  }
  int loops = 0;
  for (int p = 1; p <= s; ++p) {
    if (!last_out[p]) {
      ++loops;
      continue;
    }
    es.push_back({*last_out[p], *first_in[p]});
  }
  for (int i = 0; i < static_cast<int>(es.size()); ++i) {
    xs[es[i].tail.x].edge[es[i].tail.pos] = i;
    xs[es[i].head.x].edge[es[i].head.pos] = i;
  }
  return Diagram(std::move(xs), std::move(es), loops);
}

inline Diagram torus_closure(int n) {
  if (n < 1) throw PreconditionError("torus_closure needs n >= 1");
  return braid_closure(BraidWord{2, std::vector<int>(n, 1)});
}

// ---------------------------------------------------------------- PD codes

inline bool faces_match_euler(const Diagram& d) {
  int k = 0;
  crossing_components(d, &k);
  return faces(d).count() == d.crossing_count() + 2 * k;
}

// Parses X[a,b,c,d] records (labels counterclockwise from the incoming under-strand).
inline Diagram parse_pd(const std::string& text) {
  static const std::regex rec(R"(X\s*\[\s*(-?\d+)\s*,\s*(-?\d+)\s*,\s*(-?\d+)\s*,\s*(-?\d+)\s*\])");
  std::vector<std::array<int, 4>> recs;
  for (auto it = std::sregex_iterator(text.begin(), text.end(), rec); it != std::sregex_iterator(); ++it) {
    std::array<int, 4> r;
    for (int k = 0; k < 4; ++k) r[k] = std::stoi((*it)[k + 1].str());
    recs.push_back(r);
  }
  if (recs.empty()) throw ParseError("empty PD code: no X[a,b,c,d] records found");
  const int n = static_cast<int>(recs.size());
  std::map<int, std::vector<Slot>> ends;
  for (int x = 0; x < n; ++x)
    for (int k = 0; k < 4; ++k) ends[recs[x][k]].push_back({x, k});
  for (const auto& [label, v] : ends) {
    if (v.size() == 1) throw ParseError("dangling edge label " + std::to_string(label));
    if (v.size() > 2) throw ParseError("edge label " + std::to_string(label) + " used more than twice");
  }
  // dir[x][k]: 1 incoming, 0 outgoing, -1 unknown.
  std::vector<std::array<int, 4>> dir(n, {-1, -1, -1, -1});
  std::vector<Slot> queue;
  auto assign = [&](Slot s, int v) {
    int& cur = dir[s.x][s.pos];
    if (cur == v) return;
    if (cur >= 0) throw ParseError("inconsistent orientation at crossing " + std::to_string(s.x));
    cur = v;
    queue.push_back(s);
  };
  auto partner = [&](Slot s) {
    const auto& v = ends[recs[s.x][s.pos]];
    return v[0] == s ? v[1] : v[0];
  };
  auto propagate = [&] {
    while (!queue.empty()) {
      Slot s = queue.back();
      queue.pop_back();
      int v = dir[s.x][s.pos];
      assign(partner(s), 1 - v);
      if (s.pos % 2 == 1) assign({s.x, (s.pos + 2) % 4}, 1 - v);
    }
  };
  for (int x = 0; x < n; ++x) {
    assign({x, 0}, 1);
    assign({x, 2}, 0);
  }
  propagate();
  for (int x = 0; x < n; ++x) {
    if (dir[x][1] >= 0) continue;
    // Over-only strand: follow label succession d -> b.
    int b = recs[x][1], dd = recs[x][3];
    bool d_to_b = (b == dd + 1) || (!(dd == b + 1) && b < dd);
    assign({x, 3}, d_to_b ? 1 : 0);
    propagate();
  }
  std::vector<Crossing> xs(n);
  std::map<int, int> label_edge;
  std::vector<Edge> es;
  for (int x = 0; x < n; ++x) xs[x].sign = dir[x][3] == 1 ? 1 : -1;
  for (const auto& [label, v] : ends) {
    Slot a = v[0], b = v[1];
    if (dir[a.x][a.pos] == 1) std::swap(a, b);
    int id = static_cast<int>(es.size());
    es.push_back({a, b});
    xs[a.x].edge[a.pos] = id;
    xs[b.x].edge[b.pos] = id;
  }
  Diagram d;
  try {
    d = Diagram(std::move(xs), std::move(es), 0);
  } catch (const Error& e) {
    throw ParseError(std::string("inconsistent orientation: ") + e.what());
  }
  if (!faces_match_euler(d))
    throw ParseError("inconsistent orientation or non-planar crossing records (face count violates Euler's formula)");
  return d;
}

// PD text with edges labelled consecutively along each component.
inline std::string to_pd(const Diagram& d) {
  std::vector<int> label(d.edge_count(), 0);
  int next = 1;
  for (int e = 0; e < d.edge_count(); ++e) {
    if (label[e]) continue;
    for (int f = e; !label[f]; f = d.next_edge(f)) label[f] = next++;
  }
  std::ostringstream os;
  for (int x = 0; x < d.crossing_count(); ++x) {
    if (x) os << " ";
    const auto& c = d.crossing(x);
    os << "X[" << label[c.edge[0]] << "," << label[c.edge[1]] << "," << label[c.edge[2]] << ","
       << label[c.edge[3]] << "]";
  }
  return os.str();
}

inline nlohmann::json to_json(const Diagram& d) {
  nlohmann::json j;
  j["crossings"] = nlohmann::json::array();
  for (const auto& c : d.crossings())
    j["crossings"].push_back({{"edges", c.edge}, {"sign", c.sign}});
  j["edges"] = nlohmann::json::array();
  for (const auto& e : d.edges())
    j["edges"].push_back({{"tail", {e.tail.x, e.tail.pos}}, {"head", {e.head.x, e.head.pos}}});
  j["free_loops"] = d.free_loops();
  j["components"] = component_count(d);
  j["pd"] = to_pd(d);
  return j;
}

inline Diagram diagram_from_json(const nlohmann::json& j) {
  std::vector<Crossing> xs;
  for (const auto& c : j.at("crossings")) {
    Crossing cr;
    cr.edge = c.at("edges").get<std::array<int, 4>>();
    cr.sign = c.at("sign").get<int>();
    xs.push_back(cr);
  }
  std::vector<Edge> es;
  for (const auto& e : j.at("edges")) {
    auto t = e.at("tail").get<std::array<int, 2>>();
    auto h = e.at("head").get<std::array<int, 2>>();
    es.push_back({{t[0], t[1]}, {h[0], h[1]}});
  }
  return Diagram(std::move(xs), std::move(es), j.value("free_loops", 0));
}

// ---------------------------------------------------------------- canonical code

namespace detail {

inline std::vector<int> code_from(const Diagram& d, int start, const std::vector<int>& members) {
  std::vector<int> order(d.crossing_count(), -1);
  std::vector<int> seq{start};
  order[start] = 0;
  std::vector<int> code;
  code.reserve(members.size() * 9);
  for (std::size_t i = 0; i < seq.size(); ++i) {
    int x = seq[i];
    code.push_back(d.sign(x));
    for (int p = 0; p < 4; ++p) {
      Slot o = d.other_end({x, p});
      if (order[o.x] < 0) {
        order[o.x] = static_cast<int>(seq.size());
        seq.push_back(o.x);
      }
      code.push_back(order[o.x] * 4 + o.pos);
    }
  }
  return code;
}

}  // namespace detail

// Isomorphism-invariant code of the oriented diagram map (labels forgotten).
inline std::string canonical_code(const Diagram& d) {
  int k = 0;
  auto comp = crossing_components(d, &k);
  std::vector<std::vector<int>> groups(k);
  for (int x = 0; x < d.crossing_count(); ++x) groups[comp[x]].push_back(x);
  std::vector<std::vector<int>> codes;
  for (const auto& g : groups) {
    std::vector<int> best;
    for (int s : g) {
      auto c = detail::code_from(d, s, g);
      if (best.empty() || c < best) best = std::move(c);
    }
    codes.push_back(std::move(best));
  }
  std::sort(codes.begin(), codes.end());
  std::string out = std::to_string(d.free_loops()) + "|";
  for (const auto& c : codes) {
    for (int v : c) {
      auto u = static_cast<std::uint32_t>(v + 2);
      out.push_back(static_cast<char>(u & 0xff));
      out.push_back(static_cast<char>((u >> 8) & 0xff));
    }
    out.push_back('#');
  }
  return out;
}

}  // namespace knotlab
