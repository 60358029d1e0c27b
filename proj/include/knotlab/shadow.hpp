#pragma once

#include <array>
#include <optional>
#include <vector>

#include "knotlab/diagram.hpp"

namespace knotlab {

// Crossing ends of an unoriented diagram, counterclockwise: 0 = NE, 1 = NW,
// 2 = SW, 3 = SE. Strands run 0-2 and 1-3.
enum End : int { NE = 0, NW = 1, SW = 2, SE = 3 };

struct EndRef {
  int x = -1;
  int end = -1;
  bool operator==(const EndRef&) const = default;
};

// Unoriented diagram: crossing ends glued in pairs plus the over-strand choice.
struct Shadow {
  std::vector<std::array<EndRef, 4>> link;
  std::vector<int> over_pair;  // 0: strand NE-SW is over, 1: strand NW-SE is over
  int free_loops = 0;

  int add_crossing(int over) {
    link.push_back({});
    over_pair.push_back(over);
    return static_cast<int>(link.size()) - 1;
  }
  void glue(EndRef a, EndRef b) {
    link[a.x][a.end] = b;
    link[b.x][b.end] = a;
  }
  int crossing_count() const { return static_cast<int>(link.size()); }
};

// Strand components of a shadow. Each component is the list of ends through
// which it enters crossings, in its base direction.
inline std::vector<std::vector<EndRef>> shadow_components(const Shadow& sh) {
  const int n = sh.crossing_count();
  std::vector<std::array<char, 4>> seen(n, {0, 0, 0, 0});
  std::vector<std::vector<EndRef>> comps;
  for (int x = 0; x < n; ++x) {
    for (int k = 0; k < 4; ++k) {
      if (seen[x][k]) continue;
      comps.emplace_back();
      EndRef cur{x, k};
      while (!seen[cur.x][cur.end]) {
        seen[cur.x][cur.end] = 1;
        EndRef out{cur.x, (cur.end + 2) % 4};
        seen[out.x][out.end] = 1;
        comps.back().push_back(cur);
        cur = sh.link[out.x][out.end];
      }
    }
  }
  return comps;
}

// Orients a shadow: component i runs in its base direction unless reversed[i].
// If want_sign is given, the over strand at each crossing is chosen to realize
// that sign instead of using over_pair.
inline Diagram shadow_to_diagram(const Shadow& sh, const std::vector<bool>& reversed,
                                 const std::vector<int>* want_sign = nullptr) {
  const int n = sh.crossing_count();
  auto comps = shadow_components(sh);
  if (reversed.size() != comps.size()) throw PreconditionError("orientation vector size mismatch");
  std::vector<std::array<int, 4>> in(n, {-1, -1, -1, -1});
  for (std::size_t c = 0; c < comps.size(); ++c) {
    for (EndRef e : comps[c]) {
      int entering = reversed[c] ? (e.end + 2) % 4 : e.end;
      in[e.x][entering] = 1;
      in[e.x][(entering + 2) % 4] = 0;
    }
  }
  std::vector<int> base(n);  // end at position 0
  std::vector<Crossing> xs(n);
  for (int x = 0; x < n; ++x) {
    int over = sh.over_pair[x];
    if (want_sign) {
      // Positive iff the over strand enters just clockwise of the under strand.
      int a = in[x][0] == 1 ? 0 : 2;  // entering end of strand 0-2
      int b = in[x][1] == 1 ? 1 : 3;  // entering end of strand 1-3
      bool under_is_02 = (b == (a + 3) % 4);
      if ((*want_sign)[x] < 0) under_is_02 = !under_is_02;
      over = under_is_02 ? 1 : 0;
    }
    int u = (over == 0) ? (in[x][1] == 1 ? 1 : 3) : (in[x][0] == 1 ? 0 : 2);
    base[x] = u;
    int over_in = (over == 0) ? (in[x][0] == 1 ? 0 : 2) : (in[x][1] == 1 ? 1 : 3);
    xs[x].sign = ((over_in - u + 4) % 4 == 3) ? 1 : -1;
  }
  std::vector<Edge> es;
  for (int x = 0; x < n; ++x) {
    for (int k = 0; k < 4; ++k) {
      if (in[x][k] != 0) continue;
      EndRef to = sh.link[x][k];
      if (in[to.x][to.end] != 1) throw Error("shadow gluing joins two outgoing ends");
      Slot t{x, (k - base[x] + 4) % 4};
      Slot h{to.x, (to.end - base[to.x] + 4) % 4};
      int id = static_cast<int>(es.size());
      es.push_back({t, h});
      xs[t.x].edge[t.pos] = id;
      xs[h.x].edge[h.pos] = id;
    }
  }
  return Diagram(std::move(xs), std::move(es), sh.free_loops);
}

// Four-ended tangle with ports NW, NE, SW, SE (indices as End). A port either
// leads to a crossing end or straight to another port.
class Tangle {
 public:
  struct Port {
    std::optional<EndRef> end;
    int arc_to = -1;
  };

  static Tangle infinity() {  // two vertical arcs
    Tangle t;
    t.ports_[NW].arc_to = SW;
    t.ports_[SW].arc_to = NW;
    t.ports_[NE].arc_to = SE;
    t.ports_[SE].arc_to = NE;
    return t;
  }

  static Tangle zero() {  // two horizontal arcs
    Tangle t;
    t.ports_[NW].arc_to = NE;
    t.ports_[NE].arc_to = NW;
    t.ports_[SW].arc_to = SE;
    t.ports_[SE].arc_to = SW;
    return t;
  }

  // Adds a crossing below, twisting the SW and SE ports.
  Tangle& twist_bottom(int over_pair) {
    int x = sh_.add_crossing(over_pair);
    attach(SW, {x, NW});
    attach(SE, {x, NE});
    ports_[SW] = Port{EndRef{x, SW}, -1};
    ports_[SE] = Port{EndRef{x, SE}, -1};
    return *this;
  }

  // Adds a crossing to the right, twisting the NE and SE ports.
  Tangle& twist_right(int over_pair) {
    int x = sh_.add_crossing(over_pair);
    attach(NE, {x, NW});
    attach(SE, {x, SW});
    ports_[NE] = Port{EndRef{x, NE}, -1};
    ports_[SE] = Port{EndRef{x, SE}, -1};
    return *this;
  }

  // Vertical column of |t| crossings (t > 0: NW-SE strand over).
  static Tangle column(int t) {
    if (t == 0) throw PreconditionError("twist count must be nonzero");
    Tangle tg = infinity();
    for (int i = 0; i < std::abs(t); ++i) tg.twist_bottom(t > 0 ? 1 : 0);
    return tg;
  }

  // Places b to the right of a.
  static Tangle sum(const Tangle& a, const Tangle& b) {
    Tangle r = a;
    const int off = a.sh_.crossing_count();
    for (int x = 0; x < b.sh_.crossing_count(); ++x) {
      auto l = b.sh_.link[x];
      for (auto& e : l)
        if (e.x >= 0) e.x += off;
      r.sh_.link.push_back(l);
      r.sh_.over_pair.push_back(b.sh_.over_pair[x]);
    }
    r.sh_.free_loops += b.sh_.free_loops;
    // Ports of b are renumbered 4..7 while joining.
    std::array<Port, 8> p;
    for (int i = 0; i < 4; ++i) p[i] = a.ports_[i];
    for (int i = 0; i < 4; ++i) {
      p[4 + i] = b.ports_[i];
      if (p[4 + i].end) p[4 + i].end->x += off;
      if (p[4 + i].arc_to >= 0) p[4 + i].arc_to += 4;
    }
    r.join_ports(p, NE, 4 + NW);
    r.join_ports(p, SE, 4 + SW);
    r.ports_ = {p[NE + 4], p[NW], p[SW], p[SE + 4]};
    for (auto& q : r.ports_) {
      if (q.arc_to == 4 + NE) q.arc_to = NE;
      else if (q.arc_to == 4 + SE) q.arc_to = SE;
      else if (q.arc_to >= 4) throw Error("tangle sum produced a dangling arc");
    }
    return r;
  }

  // Numerator closure: NW joined to NE over the top, SW to SE below.
  Shadow numerator_closure() const {
    Tangle t = *this;
    std::array<Port, 8> p;
    for (int i = 0; i < 4; ++i) p[i] = t.ports_[i];
    t.join_ports(p, NW, NE);
    t.join_ports(p, SW, SE);
    return t.sh_;
  }

  const Shadow& shadow() const { return sh_; }

 private:
  // Connects port i to crossing end e.
  void attach(int i, EndRef e) {
    Port& p = ports_[i];
    if (p.end) {
      sh_.glue(*p.end, e);
    } else {
      ports_[p.arc_to] = Port{e, -1};
    }
  }

  // Joins two ports of a port table by an arc.
  void join_ports(std::array<Port, 8>& p, int i, int j) {
    Port a = p[i];
    Port b = p[j];
    if (a.end && b.end) {
      sh_.glue(*a.end, *b.end);
    } else if (a.end) {
      p[b.arc_to] = Port{a.end, -1};
    } else if (b.end) {
      p[a.arc_to] = Port{b.end, -1};
    } else if (a.arc_to == j) {
      ++sh_.free_loops;
    } else {
      p[a.arc_to].arc_to = b.arc_to;
      p[b.arc_to].arc_to = a.arc_to;
    }
    p[i] = Port{};
    p[j] = Port{};
  }

  Shadow sh_;
  std::array<Port, 4> ports_;
};

enum class Band { Reverse, Parallel };

// Montesinos-style diagram: tangles side by side, numerator closure, then the
// component orientation is chosen so that each listed column has the requested
// band type (read at the top ports of that column). Columns whose entry is
// std::nullopt are unconstrained.
inline Diagram montesinos_diagram(const std::vector<Tangle>& cols,
                                  const std::vector<std::optional<Band>>& scheme) {
  if (cols.empty()) throw PreconditionError("need at least one tangle");
  if (scheme.size() != cols.size()) throw PreconditionError("orientation scheme size mismatch");
  // Record the top-left and top-right crossing ends of each column.
  Tangle all = cols[0];
  std::vector<int> offsets{0};
  for (std::size_t i = 1; i < cols.size(); ++i) {
    offsets.push_back(all.shadow().crossing_count());
    all = Tangle::sum(all, cols[i]);
  }
  Shadow sh = all.numerator_closure();
  auto comps = shadow_components(sh);
  const int nc = static_cast<int>(comps.size());
  if (nc > 20) throw PreconditionError("too many components to search orientations");
  // For each crossing end, which component passes it and whether the base
  // direction enters there.
  std::vector<std::array<std::pair<int, int>, 4>> info(sh.crossing_count());
  for (int c = 0; c < nc; ++c)
    for (EndRef e : comps[c]) {
      info[e.x][e.end] = {c, 1};
      info[e.x][(e.end + 2) % 4] = {c, 0};
    }
  // A column's band type: the first crossing of a vertical column is entered
  // from the top through NW and NE. Both entering (or both leaving) = parallel.
  auto band_of = [&](int col, const std::vector<bool>& rev) -> std::optional<Band> {
    int x = offsets[col];
    if (cols[col].shadow().crossing_count() == 0) return std::nullopt;
    auto [cn, en] = info[x][NW];
    auto [ce, ee] = info[x][NE];
    bool nw_in = (en == 1) != rev[cn];
    bool ne_in = (ee == 1) != rev[ce];
    return nw_in == ne_in ? Band::Parallel : Band::Reverse;
  };
  for (std::uint32_t mask = 0; mask < (1u << nc); mask += 2) {  // first component fixed
    std::vector<bool> rev(nc);
    for (int c = 0; c < nc; ++c) rev[c] = (mask >> c) & 1u;
    bool ok = true;
    for (std::size_t i = 0; i < cols.size() && ok; ++i)
      if (scheme[i] && band_of(static_cast<int>(i), rev) != scheme[i]) ok = false;
    if (ok) return shadow_to_diagram(sh, rev);
  }
  throw PreconditionError("orientation scheme cannot be realized consistently");
}

// Pretzel diagram with vertical twist columns. For t > 0 the twists are
// handed so that a reverse-oriented column has positive crossings.
inline Diagram pretzel_diagram(const std::vector<int>& twists, const std::vector<Band>& scheme) {
  if (twists.size() < 2) throw PreconditionError("pretzel diagram needs at least two columns");
  if (scheme.size() != twists.size()) throw PreconditionError("orientation scheme size mismatch");
  std::vector<Tangle> cols;
  std::vector<std::optional<Band>> sc;
  for (std::size_t i = 0; i < twists.size(); ++i) {
    cols.push_back(Tangle::column(twists[i]));
    sc.emplace_back(scheme[i]);
  }
  return montesinos_diagram(cols, sc);
}

inline Diagram pretzel_diagram(const std::vector<int>& twists) {
  return pretzel_diagram(twists, std::vector<Band>(twists.size(), Band::Reverse));
}

}  // namespace knotlab
