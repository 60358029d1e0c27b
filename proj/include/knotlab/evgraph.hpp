#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "knotlab/diagram.hpp"
#include "knotlab/generate.hpp"
#include "knotlab/laurent.hpp"
#include "knotlab/planar.hpp"
#include "knotlab/seifert.hpp"
#include "knotlab/skein.hpp"

namespace knotlab {

// Checkerboard graph of a special diagram on its non-Seifert regions. Edge ids
// equal crossing ids when built from a diagram.
struct EvenValenceGraph : PlaneGraph {
  int outer_dart = -1;  // a dart on the designated outer cell
};

inline bool is_even_valence(const PlaneGraph& g) {
  for (int v = 0; v < g.vertices; ++v)
    if (g.degree(v) % 2 != 0) return false;
  return true;
}

inline void flip_edge(PlaneGraph& g, int e) {
  std::swap(g.edges[e].tail, g.edges[e].head);
  for (auto& r : g.rot)
    for (auto& d : r)
      if ((d >> 1) == e) d ^= 1;
}

// Keeps the listed edges and the vertices they touch; rotations are restricted.
inline EvenValenceGraph edge_subgraph(const PlaneGraph& g, const std::vector<int>& keep_edges) {
  std::vector<int> emap(g.edge_count(), -1), vmap(g.vertices, -1);
  EvenValenceGraph s;
  for (int e : keep_edges) {
    if (emap[e] >= 0) continue;
    for (int v : {g.edges[e].tail, g.edges[e].head})
      if (vmap[v] < 0) vmap[v] = s.add_vertex();
    emap[e] = s.push_edge(vmap[g.edges[e].tail], vmap[g.edges[e].head], g.edges[e].sign, g.edges[e].tag);
  }
  for (int v = 0; v < g.vertices; ++v) {
    if (vmap[v] < 0) continue;
    for (int d : g.rot[v])
      if (emap[d >> 1] >= 0) s.rot[vmap[v]].push_back(2 * emap[d >> 1] + (d & 1));
  }
  return s;
}

// Removes edges and vertices not flagged, renumbering the rest in order.
inline EvenValenceGraph compact(const PlaneGraph& g, const std::vector<char>& keep_edge,
                                const std::vector<char>& keep_vertex) {
  std::vector<int> emap(g.edge_count(), -1), vmap(g.vertices, -1);
  EvenValenceGraph s;
  for (int v = 0; v < g.vertices; ++v)
    if (keep_vertex[v]) vmap[v] = s.add_vertex();
  for (int e = 0; e < g.edge_count(); ++e)
    if (keep_edge[e]) emap[e] = s.push_edge(vmap[g.edges[e].tail], vmap[g.edges[e].head], g.edges[e].sign, g.edges[e].tag);
  for (int v = 0; v < g.vertices; ++v) {
    if (vmap[v] < 0) continue;
    for (int d : g.rot[v])
      if (emap[d >> 1] >= 0) s.rot[vmap[v]].push_back(2 * emap[d >> 1] + (d & 1));
  }
  return s;
}

// Orients every edge so that each cell is bounded coherently. Within each
// connected component the lowest-numbered edge keeps its direction.
inline EvenValenceGraph canonical_orient(const PlaneGraph& g) {
  EvenValenceGraph out;
  static_cast<PlaneGraph&>(out) = g;
  if (g.edge_count() == 0) return out;
  auto fs = g.faces();
  std::vector<int> face_of(2 * g.edge_count());
  for (int f = 0; f < static_cast<int>(fs.size()); ++f)
    for (int d : fs[f]) face_of[d] = f;
  // Unknowns: flip bit per edge, coherence bit per face. Dart d in face f
  // requires flip(e) ^ (d & 1) == coherence(f).
  const int ne = g.edge_count();
  const int nf = static_cast<int>(fs.size());
  std::vector<int> val(ne + nf, -1);
  for (int start = 0; start < ne; ++start) {
    if (val[start] >= 0) continue;
    val[start] = 0;
    std::vector<int> queue{start};
    while (!queue.empty()) {
      int u = queue.back();
      queue.pop_back();
      std::vector<std::pair<int, int>> nbrs;  // (node, parity)
      if (u < ne) {
        for (int d : {2 * u, 2 * u + 1}) nbrs.emplace_back(ne + face_of[d], d & 1);
      } else {
        for (int d : fs[u - ne]) nbrs.emplace_back(d >> 1, d & 1);
      }
      for (auto [w, par] : nbrs) {
        int want = val[u] ^ par;
        if (val[w] < 0) {
          val[w] = want;
          queue.push_back(w);
        } else if (val[w] != want) {
          throw Error("graph admits no canonical orientation");
        }
      }
    }
  }
  for (int e = 0; e < ne; ++e)
    if (val[e]) flip_edge(out, e);
  // Outer cell: the largest one, first on ties.
  auto ofs = out.faces();
  std::size_t best = 0;
  for (std::size_t f = 1; f < ofs.size(); ++f)
    if (ofs[f].size() > ofs[best].size()) best = f;
  out.outer_dart = ofs[best].front();
  return out;
}

inline bool is_canonically_oriented(const PlaneGraph& g) {
  for (const auto& f : g.faces())
    for (int d : f)
      if ((d & 1) != (f.front() & 1)) return false;
  return true;
}

// Dual of the naturally embedded Seifert graph of a connected special diagram.
// Vertices are the regions whose corners see two incoming or two outgoing
// strands; crossing x becomes edge x.
inline EvenValenceGraph evgraph_from_special(const Diagram& d) {
  if (d.crossing_count() == 0) throw PreconditionError("even valence graph needs at least one crossing");
  if (!is_connected(d)) throw PreconditionError("even valence graph needs a connected diagram");
  if (!is_special(d)) throw PreconditionError("even valence graph needs a special diagram");
  FaceMap fm = faces(d);
  auto x_corner = [&](int x, int k) {
    int s = d.sign(x);
    return slot_is_incoming(s, k) == slot_is_incoming(s, (k + 1) % 4);
  };
  std::vector<int> vertex_of_face(fm.count(), -1);
  PlaneGraph g;
  for (int f = 0; f < fm.count(); ++f) {
    const auto& cs = fm.faces[f];
    bool x0 = x_corner(cs[0].x, cs[0].pos);
    for (const auto& c : cs)
      if (x_corner(c.x, c.pos) != x0) throw PreconditionError("diagram regions are not checkerboard-special");
    if (x0) vertex_of_face[f] = g.add_vertex();
  }
  for (int x = 0; x < d.crossing_count(); ++x) {
    // Tail at the corner where both strands enter, head where both leave.
    int kin = d.sign(x) > 0 ? 3 : 0;
    int kout = (kin + 2) % 4;
    g.push_edge(vertex_of_face[fm.face_of[x][kin]], vertex_of_face[fm.face_of[x][kout]], d.sign(x), x);
  }
  for (int f = 0; f < fm.count(); ++f) {
    int v = vertex_of_face[f];
    if (v < 0) continue;
    const auto& cs = fm.faces[f];
    // The boundary walk keeps the region on its right; reverse it to get
    // counterclockwise order around the dual vertex.
    for (auto it = cs.rbegin(); it != cs.rend(); ++it) {
      int kin = d.sign(it->x) > 0 ? 3 : 0;
      g.rot[v].push_back(2 * it->x + (it->pos == kin ? 0 : 1));
    }
  }
  if (!g.is_planar_embedding()) throw Error("dual rotation system is not planar");
  return canonical_orient(g);
}

// Exact determinant by fraction-free elimination.
inline BigInt bareiss_determinant(std::vector<std::vector<BigInt>> m) {
  const int n = static_cast<int>(m.size());
  if (n == 0) return 1;
  BigInt sign = 1, prev = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (m[k][k] == 0) {
      int r = k + 1;
      while (r < n && m[r][k] == 0) ++r;
      if (r == n) return 0;
      std::swap(m[k], m[r]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

struct ArborescenceCount {
  BigInt count = 0;
  bool disconnected = false;  // input was not connected; count forced to 0
};

// Spanning trees in which every edge, as oriented, points towards root:
// determinant of the out-degree Laplacian with the root row and column removed.
inline ArborescenceCount arborescence_count(const PlaneGraph& g, int root) {
  if (root < 0 || root >= g.vertices) throw PreconditionError("root vertex out of range");
  ArborescenceCount r;
  if (!g.connected()) {
    r.disconnected = true;
    return r;
  }
  const int n = g.vertices;
  std::vector<std::vector<BigInt>> lap(n, std::vector<BigInt>(n, 0));
  for (const auto& e : g.edges) {
    if (e.tail == e.head) continue;
    lap[e.tail][e.tail] += 1;
    lap[e.tail][e.head] -= 1;
  }
  std::vector<std::vector<BigInt>> minor;
  for (int i = 0; i < n; ++i) {
    if (i == root) continue;
    minor.emplace_back();
    for (int j = 0; j < n; ++j)
      if (j != root) minor.back().push_back(lap[i][j]);
  }
  r.count = bareiss_determinant(std::move(minor));
  return r;
}

// Alexander polynomial at 0 (normalized with min deg 0 and positive constant
// term) of a connected special positive diagram, as an arborescence count.
inline BigInt alexander_at_zero_special(const Diagram& d) {
  if (!is_special_alternating(d)) throw PreconditionError("diagram is not special alternating");
  EvenValenceGraph g = evgraph_from_special(d);
  return arborescence_count(g, 0).count;
}

// Contracts a non-loop edge, splicing the rotation of its head into its tail.
inline EvenValenceGraph contract_edge(const PlaneGraph& g, int e) {
  if (e < 0 || e >= g.edge_count()) throw PreconditionError("invalid edge " + std::to_string(e));
  const int u = g.edges[e].tail, v = g.edges[e].head;
  if (u == v) throw PreconditionError("cannot contract a loop edge");
  PlaneGraph h = g;
  const auto& rv = g.rot[v];
  int iv = g.index_in_rot(2 * e + 1);
  std::vector<int> spliced;
  for (int d : g.rot[u]) {
    if (d != 2 * e) {
      spliced.push_back(d);
      continue;
    }
    for (std::size_t k = 1; k < rv.size(); ++k) spliced.push_back(rv[(iv + k) % rv.size()]);
  }
  h.rot[u] = spliced;
  h.rot[v].clear();
  for (auto& ed : h.edges) {
    if (ed.tail == v) ed.tail = u;
    if (ed.head == v) ed.head = u;
  }
  std::vector<char> ke(g.edge_count(), 1), kv(g.vertices, 1);
  ke[e] = 0;
  kv[v] = 0;
  return compact(h, ke, kv);
}

// True if e together with some other edge disconnects the graph.
inline bool in_two_cut(const PlaneGraph& g, int e) {
  if (e < 0 || e >= g.edge_count()) throw PreconditionError("invalid edge " + std::to_string(e));
  auto connected_without = [&](int a, int b) {
    std::vector<int> parent(g.vertices);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
    int comps = g.vertices;
    for (int f = 0; f < g.edge_count(); ++f) {
      if (f == a || f == b) continue;
      int x = find(g.edges[f].tail), y = find(g.edges[f].head);
      if (x != y) {
        parent[x] = y;
        --comps;
      }
    }
    return comps == 1;
  };
  for (int f = 0; f < g.edge_count(); ++f)
    if (f != e && !connected_without(e, f)) return true;
  return false;
}

struct ContractionCheck {
  BigInt lhs;  // arborescences after smoothing p (contracting its edge)
  BigInt rhs;  // arborescences of the diagram's graph
  bool verdict = false;
};

inline ContractionCheck contraction_check(const Diagram& d, int p) {
  d.check_crossing(p);
  if (!is_special_alternating(d)) throw PreconditionError("contraction check: diagram is not special alternating");
  if (!is_reduced(d)) throw PreconditionError("contraction check: diagram is not reduced");
  SeifertData sd = seifert(d);
  if (!parallel_partners(sd, p).empty())
    throw PreconditionError("contraction check: crossing " + std::to_string(p) + " has a parallel partner");
  EvenValenceGraph g = evgraph_from_special(d);
  ContractionCheck r;
  r.rhs = arborescence_count(g, 0).count;
  r.lhs = arborescence_count(contract_edge(g, p), 0).count;
  r.verdict = r.lhs < r.rhs;
  return r;
}

inline std::string to_dot(const PlaneGraph& g, const std::string& name = "G") {
  std::ostringstream os;
  os << "digraph " << name << " {\n";
  for (int v = 0; v < g.vertices; ++v) os << "  v" << v << ";\n";
  for (int e = 0; e < g.edge_count(); ++e)
    os << "  v" << g.edges[e].tail << " -> v" << g.edges[e].head << " [label=\"e" << e
       << (g.edges[e].sign > 0 ? "+" : "-") << "\"" << (g.edges[e].sign < 0 ? ", style=bold" : "") << "];\n";
  auto fs = g.faces();
  for (std::size_t f = 0; f < fs.size(); ++f) {
    os << "  // cell " << f << ":";
    for (int d : fs[f]) os << " e" << (d >> 1);
    os << "\n";
  }
  os << "}\n";
  return os.str();
}

// Biconnected blocks as edge lists; every loop is a block of its own.
inline std::vector<std::vector<int>> blocks(const PlaneGraph& g) {
  std::vector<std::vector<int>> out;
  std::vector<int> disc(g.vertices, -1), low(g.vertices, 0);
  std::vector<int> stack;
  int timer = 0;
  std::function<void(int, int)> dfs = [&](int v, int parent_edge) {
    disc[v] = low[v] = timer++;
    for (int d : g.rot[v]) {
      int e = d >> 1;
      if (e == parent_edge) continue;
      const auto& ed = g.edges[e];
      if (ed.tail == ed.head) continue;
      int w = ed.tail == v ? ed.head : ed.tail;
      if (disc[w] < 0) {
        stack.push_back(e);
        dfs(w, e);
        low[v] = std::min(low[v], low[w]);
        if (low[w] >= disc[v]) {
          out.emplace_back();
          int f;
          do {
            f = stack.back();
            stack.pop_back();
            out.back().push_back(f);
          } while (f != e);
        }
      } else if (disc[w] < disc[v]) {
        stack.push_back(e);
        low[v] = std::min(low[v], disc[w]);
      }
    }
  };
  for (int v = 0; v < g.vertices; ++v)
    if (disc[v] < 0) dfs(v, -1);
  for (int e = 0; e < g.edge_count(); ++e)
    if (g.edges[e].tail == g.edges[e].head) out.push_back({e});
  for (auto& b : out) std::sort(b.begin(), b.end());
  std::sort(out.begin(), out.end());
  return out;
}

// Removes valence-2 vertices whose two edges are distinct and positive,
// merging the edges (the graph side of reducing a positive clasp).
inline EvenValenceGraph unbisect(const PlaneGraph& g0) {
  PlaneGraph g = g0;
  std::vector<char> ke(g.edge_count(), 1), kv(g.vertices, 1);
  bool changed = true;
  while (changed) {
    changed = false;
    for (int v = 0; v < g.vertices; ++v) {
      if (!kv[v] || g.rot[v].size() != 2) continue;
      int d1 = g.rot[v][0], d2 = g.rot[v][1];
      int e1 = d1 >> 1, e2 = d2 >> 1;
      if (e1 == e2 || g.edges[e1].sign < 0 || g.edges[e2].sign < 0) continue;
      // Keep e1 for whichever edge arrives at v, so the merged edge runs a -> b.
      if (!(d1 & 1) && (d2 & 1)) {
        std::swap(d1, d2);
        std::swap(e1, e2);
      }
      int b_dart = d2 ^ 1;  // e2's dart at its far end
      int b = g.dart_vertex(b_dart);
      int keep_dart = d1;  // e1's dart at v; moves to b
      std::replace(g.rot[b].begin(), g.rot[b].end(), b_dart, keep_dart);
      if (keep_dart & 1) {
        g.edges[e1].head = b;
      } else {
        g.edges[e1].tail = b;
      }
      g.rot[v].clear();
      kv[v] = 0;
      ke[e2] = 0;
      changed = true;
    }
  }
  return compact(g, ke, kv);
}

// Smooths one crossing of every positive parallel clasp (two positive
// crossings joined by a bigon whose edges both run from one to the other),
// until none is left.
inline Diagram reduce_clasps(const Diagram& d0) {
  Diagram d = d0;
  for (bool changed = true; changed;) {
    changed = false;
    FaceMap fm = faces(d);
    for (int y = 0; y < d.crossing_count() && !changed; ++y) {
      if (d.sign(y) < 0) continue;
      int a = d.crossing(y).edge[0], b = d.crossing(y).edge[over_in_pos(1)];
      int x = d.edge(a).tail.x;
      if (x == y || d.edge(b).tail.x != x || d.sign(x) < 0) continue;
      auto fa = edge_faces(d, fm, a), fb = edge_faces(d, fm, b);
      bool bigon = fa.first == fb.first || fa.first == fb.second || fa.second == fb.first || fa.second == fb.second;
      if (!bigon) continue;
      d = smooth_oriented(d, y);
      changed = true;
    }
  }
  return d;
}

// Special diagram whose even valence graph is g (canonically oriented). Edge
// signs become crossing signs.
inline Diagram diagram_from_evgraph(const PlaneGraph& g) {
  if (g.edge_count() == 0) return Diagram::unknot();
  if (!is_canonically_oriented(g)) throw PreconditionError("graph is not canonically oriented");
  Shadow sh = medial_shadow(g);
  auto comps = shadow_components(sh);
  std::vector<bool> rev(comps.size());
  for (std::size_t c = 0; c < comps.size(); ++c) {
    // Strands enter each crossing on the tail side (NW or SW).
    int e0 = comps[c][0].end;
    rev[c] = !(e0 == NW || e0 == SW);
    for (const auto& er : comps[c]) {
      int entering = rev[c] ? (er.end + 2) % 4 : er.end;
      if (entering != NW && entering != SW) throw Error("medial strands disagree with the edge orientation");
    }
  }
  std::vector<int> signs(g.edge_count());
  for (int e = 0; e < g.edge_count(); ++e) signs[e] = g.edges[e].sign;
  return shadow_to_diagram(sh, rev, &signs);
}

// ---------------------------------------------------------------- fiber shapes

enum class FiberVerdict { TorusChain, PretzelSwitched, TorusFactor, NotFiberedShape };

inline std::string to_string(FiberVerdict v) {
  switch (v) {
    case FiberVerdict::TorusChain: return "torus-chain";
    case FiberVerdict::PretzelSwitched: return "pretzel-switched";
    case FiberVerdict::TorusFactor: return "torus-factor";
    case FiberVerdict::NotFiberedShape: return "not-fibered-shape";
  }
  return "?";
}

struct FiberShape {
  FiberVerdict verdict = FiberVerdict::NotFiberedShape;
  std::string witness;        // shape parameters, or the first failing factor
  int summands = 0;           // special summands
  int factors = 0;            // prime factors (blocks) over all summands
  int chain_length = 0;       // loops in the chain, chain shape
  int cell_size = 0;          // edges of the attached cell, chain shape
  int pretzel_twos = 0;       // number of 2's, ring shape
  bool fibered() const { return verdict != FiberVerdict::NotFiberedShape; }
};

namespace detail {

inline std::vector<int> degrees_in(const PlaneGraph& g, const std::vector<int>& es) {
  std::vector<int> deg(g.vertices, 0);
  for (int e : es) {
    ++deg[g.edges[e].tail];
    ++deg[g.edges[e].head];
  }
  return deg;
}

inline bool edges_connect_all(const PlaneGraph& g, const std::vector<int>& es) {
  std::vector<int> parent(g.vertices);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  int comps = g.vertices;
  for (int e : es) {
    int a = find(g.edges[e].tail), b = find(g.edges[e].head);
    if (a != b) {
      parent[a] = b;
      --comps;
    }
  }
  return comps == 1;
}

inline bool is_cycle_graph(const PlaneGraph& g) {
  if (!g.connected() || g.edge_count() != g.vertices) return false;
  for (int v = 0; v < g.vertices; ++v)
    if (g.degree(v) != 2) return false;
  return true;
}

// A cell whose boundary is a simple cycle: distinct edges and vertices.
inline bool simple_cell(const PlaneGraph& g, const std::vector<int>& cell) {
  std::set<int> es, vs;
  for (int d : cell) {
    es.insert(d >> 1);
    vs.insert(g.dart_vertex(d));
  }
  return es.size() == cell.size() && vs.size() == cell.size();
}

// Ring shape: n >= 2 vertices, 2n edges, and a cell through p whose removal
// leaves one cycle through all vertices (a doubled ring).
inline bool match_doubled_ring(const PlaneGraph& b, int p, int* n_out) {
  const int n = b.vertices;
  if (n < 2 || b.edge_count() != 2 * n) return false;
  for (const auto& cell : b.faces()) {
    std::set<int> ce;
    for (int d : cell) ce.insert(d >> 1);
    if (!ce.count(p) || !simple_cell(b, cell)) continue;
    std::vector<int> rest;
    for (int e = 0; e < b.edge_count(); ++e)
      if (!ce.count(e)) rest.push_back(e);
    if (static_cast<int>(rest.size()) != n) continue;
    auto deg = degrees_in(b, rest);
    if (std::all_of(deg.begin(), deg.end(), [](int k) { return k == 2; }) && edges_connect_all(b, rest)) {
      *n_out = n;
      return true;
    }
  }
  return false;
}

// Chain shape: a cell E through p such that the other edges form a chain of at
// least two cycles covering every vertex, and p joins non-cut vertices of the
// two end loops.
inline bool match_chain_with_cell(const PlaneGraph& b, int p, int* k_out, int* cell_out) {
  for (const auto& cell : b.faces()) {
    std::set<int> ce;
    for (int d : cell) ce.insert(d >> 1);
    if (!ce.count(p) || !simple_cell(b, cell)) continue;
    std::vector<int> rest;
    for (int e = 0; e < b.edge_count(); ++e)
      if (!ce.count(e)) rest.push_back(e);
    auto deg = degrees_in(b, rest);
    if (std::any_of(deg.begin(), deg.end(), [](int k) { return k == 0; })) continue;
    if (!edges_connect_all(b, rest)) continue;
    // Every vertex keeps an edge, so compact preserves the vertex numbering.
    std::vector<char> keep_e(b.edge_count(), 0), keep_v(b.vertices, 1);
    for (int e : rest) keep_e[e] = 1;
    EvenValenceGraph h = compact(b, keep_e, keep_v);
    auto bl = blocks(h);
    if (bl.size() < 2) continue;
    std::vector<int> block_count(h.vertices, 0);
    std::vector<std::set<int>> block_vertices;
    bool all_cycles = true;
    for (const auto& bk : bl) {
      EvenValenceGraph sub = edge_subgraph(h, bk);
      if (!is_cycle_graph(sub)) all_cycles = false;
      std::set<int> vs;
      for (int e : bk) {
        vs.insert(h.edges[e].tail);
        vs.insert(h.edges[e].head);
      }
      for (int v : vs) ++block_count[v];
      block_vertices.push_back(vs);
    }
    if (!all_cycles) continue;
    // Path-like: every cut vertex lies in exactly two blocks, every block has
    // at most two cut vertices.
    bool path = true;
    std::vector<int> cuts_in_block(bl.size(), 0);
    for (std::size_t i = 0; i < bl.size(); ++i)
      for (int v : block_vertices[i]) {
        if (block_count[v] > 2) path = false;
        if (block_count[v] == 2) ++cuts_in_block[i];
      }
    for (int c : cuts_in_block)
      if (c > 2 || c == 0) path = false;
    if (!path) continue;
    int u = b.edges[p].tail, v = b.edges[p].head;
    if (block_count[u] != 1 || block_count[v] != 1) continue;
    int bu = -1, bv = -1;
    for (std::size_t i = 0; i < bl.size(); ++i) {
      if (block_vertices[i].count(u)) bu = static_cast<int>(i);
      if (block_vertices[i].count(v)) bv = static_cast<int>(i);
    }
    if (bu == bv || cuts_in_block[bu] != 1 || cuts_in_block[bv] != 1) continue;
    *k_out = static_cast<int>(bl.size());
    *cell_out = static_cast<int>(cell.size());
    return true;
  }
  return false;
}

}  // namespace detail

// Decomposes along separating Seifert circles, splits each special summand
// into prime factors (blocks of its even valence graph), merges bisected
// edges, and matches each factor against the fibered shapes.
inline FiberShape classify_fiber_shape(const Diagram& d) {
  if (!is_connected(d)) throw PreconditionError("classifier needs a connected diagram");
  if (positivity_class(d) != 1) throw PreconditionError("classifier needs an almost positive diagram");
  FiberShape out;
  SpecialDecomposition md = special_summands(d);
  out.summands = static_cast<int>(md.summands.size());
  FiberVerdict found = FiberVerdict::TorusFactor;
  for (std::size_t si = 0; si < md.summands.size(); ++si) {
    EvenValenceGraph g = evgraph_from_special(md.summands[si]);
    for (const auto& bk : blocks(g)) {
      ++out.factors;
      EvenValenceGraph b = unbisect(edge_subgraph(g, bk));
      int neg = -1;
      for (int e = 0; e < b.edge_count(); ++e)
        if (b.edges[e].sign < 0) neg = e;
      auto fail = [&](const std::string& why) {
        out.verdict = FiberVerdict::NotFiberedShape;
        out.witness = "summand " + std::to_string(si) + ", factor with " + std::to_string(bk.size()) +
                      " crossings: " + why;
        return out;
      };
      if (neg < 0) {
        if (!detail::is_cycle_graph(b)) return fail("positive factor is not a (2,n)-torus diagram");
        continue;
      }
      if (b.edge_count() == 1) continue;  // nugatory negative crossing
      int k = 0, cell = 0, n = 0;
      if (detail::match_doubled_ring(b, neg, &n)) {
        found = FiberVerdict::PretzelSwitched;
        out.pretzel_twos = n;
      } else if (detail::match_chain_with_cell(b, neg, &k, &cell)) {
        found = FiberVerdict::TorusChain;
        out.chain_length = k;
        out.cell_size = cell;
      } else {
        return fail("factor with the negative crossing matches neither shape");
      }
    }
  }
  out.verdict = found;
  switch (found) {
    case FiberVerdict::TorusChain:
      out.witness = "chain of " + std::to_string(out.chain_length) + " loops, cell of " +
                    std::to_string(out.cell_size) + " edges";
      break;
    case FiberVerdict::PretzelSwitched:
      out.witness = "(2,...,2)-pretzel with " + std::to_string(out.pretzel_twos) + " twos";
      break;
    default:
      out.witness = "all factors are (2,n)-torus diagrams";
  }
  return out;
}

struct AlexanderFiberCheck {
  bool fibered = false;    // both conditions hold
  bool heuristic = false;  // diagram is not connected almost positive
  int two_maxdeg = 0;      // 2 max deg of the symmetric Alexander polynomial
  int one_minus_chi = 0;
  BigInt min_cf = 0;       // lowest coefficient of the symmetric form
};

inline AlexanderFiberCheck is_fibered_alexander(const Diagram& d, SkeinConfig cfg = {}) {
  AlexanderFiberCheck r;
  r.heuristic = !(is_connected(d) && positivity_class(d) == 1);
  r.one_minus_chi = 1 - canonical_euler(d);
  LaurentPoly1 a = alexander_symmetric(d, cfg);
  if (a.is_zero()) return r;
  r.two_maxdeg = a.max_deg().doubled();
  r.min_cf = a.min_cf();
  r.fibered = r.two_maxdeg == r.one_minus_chi && abs(r.min_cf) == 1;
  return r;
}

// ---------------------------------------------------------------- graph families

namespace detail {

// Index of the face with the most distinct vertices.
inline int outer_face_index(const PlaneGraph& g, const std::vector<std::vector<int>>& fs) {
  int best = 0;
  std::size_t best_n = 0;
  for (std::size_t f = 0; f < fs.size(); ++f) {
    std::set<int> vs;
    for (int d : fs[f]) vs.insert(g.dart_vertex(d));
    if (vs.size() > best_n) {
      best_n = vs.size();
      best = static_cast<int>(f);
    }
  }
  return best;
}

inline PlaneGraph cycle_graph(int n) {
  PlaneGraph g;
  for (int i = 0; i < n; ++i) g.add_vertex();
  for (int i = 0; i < n; ++i) g.push_edge(i, (i + 1) % n);
  if (n == 1) {
    g.rot[0] = {0, 1};
  } else {
    for (int i = 0; i < n; ++i) g.rot[i] = {2 * ((i + n - 1) % n) + 1, 2 * i};
  }
  return g;
}

}  // namespace detail

// Chain of loops with the given lengths, each loop sharing one vertex with the
// next. loop_vertices[i] lists the vertices of loop i.
inline PlaneGraph loop_chain(const std::vector<int>& lengths, std::vector<std::vector<int>>* loop_vertices) {
  if (lengths.empty()) throw PreconditionError("empty chain");
  PlaneGraph g = detail::cycle_graph(lengths[0]);
  std::vector<std::vector<int>> lv{{}};
  for (int v = 0; v < g.vertices; ++v) lv[0].push_back(v);
  for (std::size_t i = 1; i < lengths.size(); ++i) {
    if (lengths[i] < 2) throw PreconditionError("chain loops need at least two edges");
    // Attach at a vertex of the previous loop that is not already shared.
    int at = lv.back().back();
    auto fs = g.faces();
    const auto& f = fs[detail::outer_face_index(g, fs)];
    int corner = -1;
    for (std::size_t c = 0; c < f.size(); ++c)
      if (g.dart_vertex(f[(c + 1) % f.size()]) == at) corner = static_cast<int>(c);
    int first_new = g.vertices;
    g.insert_cycle(f, {corner}, {lengths[i] - 1});
    lv.emplace_back();
    lv.back().push_back(at);
    for (int v = first_new; v < g.vertices; ++v) lv.back().push_back(v);
  }
  if (loop_vertices) *loop_vertices = lv;
  return g;
}

// Chain shape graph: a chain of loops plus a cell attached from outside through
// the listed chain vertices (in outer-face order, first on loop 0, last on the
// final loop). The edge closing the cell is the negative one.
inline EvenValenceGraph chain_cell_graph(const std::vector<int>& lengths, const std::vector<int>& cell_vertices,
                                         const std::vector<int>& new_between = {}) {
  PlaneGraph g = loop_chain(lengths, nullptr);
  auto fs = g.faces();
  auto f = fs[detail::outer_face_index(g, fs)];
  const int m = static_cast<int>(f.size());
  auto vertex_at = [&](int c) { return g.dart_vertex(f[(c + 1) % m]); };
  // Rotate so that the first cell vertex sits at corner 0.
  int c0 = -1;
  for (int c = 0; c < m && c0 < 0; ++c)
    if (vertex_at(c) == cell_vertices.front()) c0 = c;
  if (c0 < 0) throw PreconditionError("cell vertex not on the outer face");
  std::rotate(f.begin(), f.begin() + c0, f.end());
  auto corners_for = [&](const std::vector<int>& vs) {
    std::vector<int> cs;
    int pos = 0;
    for (int v : vs) {
      while (pos < m && vertex_at(pos) != v) ++pos;
      if (pos == m) return std::vector<int>{};
      cs.push_back(pos++);
    }
    return cs;
  };
  std::vector<int> corners = corners_for(cell_vertices);
  if (corners.empty()) {
    // The outer face may run the other way; start from the last vertex instead.
    std::vector<int> rev(cell_vertices.rbegin(), cell_vertices.rend());
    int c1 = -1;
    for (int c = 0; c < m && c1 < 0; ++c)
      if (vertex_at(c) == rev.front()) c1 = c;
    std::rotate(f.begin(), f.begin() + c1, f.end());
    corners = corners_for(rev);
  }
  if (corners.empty()) throw PreconditionError("cell vertices are not in outer-face order");
  std::vector<int> nb = new_between.empty() ? std::vector<int>(corners.size(), 0) : new_between;
  auto made = g.insert_cycle(f, corners, nb);
  g.edges[made.back()].sign = -1;
  return canonical_orient(g);
}

// Example of the chain shape: four loops, a cell through
// an interior point of the first loop, an interior point of the second loop,
// the junction of the last two loops and an interior point of the last loop.
inline EvenValenceGraph chain_cell_example_graph() {
  std::vector<std::vector<int>> lv;
  loop_chain({2, 3, 2, 2}, &lv);
  // lv[0] = {0, 1}; the junction of loops 0 and 1 is lv[1][0].
  int u = lv[0][0] == lv[1][0] ? lv[0][1] : lv[0][0];
  int w = lv[1].back();  // interior point of loop 1 (not shared with loop 2)
  if (w == lv[2][0]) w = lv[1][1];
  int junction = lv[3][0];
  int v = lv[3].back();
  return chain_cell_graph({2, 3, 2, 2}, {u, w, junction, v});
}

// Ring shape graph: a ring of n vertices with every edge doubled; edge `neg`
// of the outer ring is negative.
inline EvenValenceGraph doubled_ring_graph(int n, int neg = 0) {
  if (n < 2) throw PreconditionError("doubled ring needs n >= 2");
  PlaneGraph g = detail::cycle_graph(n);
  auto fs = g.faces();
  const auto& f = fs[0];
  std::vector<int> corners(f.size());
  std::iota(corners.begin(), corners.end(), 0);
  auto made = g.insert_cycle(f, corners, std::vector<int>(corners.size(), 0));
  g.edges[made[neg % made.size()]].sign = -1;
  return canonical_orient(g);
}

// Random connected even valence plane graph, all edges positive, with at most
// max_edges edges: a cycle grown by inserting cycles into random faces.
inline EvenValenceGraph random_even_valence_graph(Rng& rng, int max_edges) {
  if (max_edges < 2) throw PreconditionError("need at least two edges");
  PlaneGraph g = detail::cycle_graph(rng.range(2, std::min(4, max_edges)));
  for (int tries = 0; tries < 200 && g.edge_count() < max_edges; ++tries) {
    auto fs = g.faces();
    const auto& f = fs[rng.below(fs.size())];
    const int m = static_cast<int>(f.size());
    std::vector<int> corners;
    for (int i = 0; i < m; ++i)
      if (rng.below(3) == 0) corners.push_back(i);
    if (corners.empty()) corners.push_back(static_cast<int>(rng.below(m)));
    std::vector<int> nb(corners.size());
    int added = 0;
    for (auto& k : nb) {
      k = static_cast<int>(rng.below(2));
      added += k + 1;
    }
    if (corners.size() == 1 && nb[0] == 0) {
      nb[0] = 1;
      ++added;
    }
    if (g.edge_count() + added > max_edges) continue;
    PlaneGraph h = g;
    try {
      h.insert_cycle(f, corners, nb);
    } catch (const Error&) {
      continue;  // would have made a loop edge
    }
    g = h;
    if (rng.below(4) == 0) break;
  }
  return canonical_orient(g);
}

// Random graph of chain shape: a chain of 2 to 4 loops and a cell from a free
// vertex of the first loop, through some junctions, to a free vertex of the
// last loop. The closing edge of the cell is the negative one.
inline EvenValenceGraph random_chain_cell_graph(Rng& rng, int max_edges = 14) {
  for (int attempt = 0; attempt < 100; ++attempt) {
    int k = rng.range(2, 4);
    std::vector<int> lengths(k);
    int total = 0;
    for (auto& l : lengths) total += (l = rng.range(2, 3));
    std::vector<std::vector<int>> lv;
    loop_chain(lengths, &lv);
    auto free_vertex = [&](int i) {
      std::vector<int> c;
      for (int v : lv[i]) {
        bool shared = false;
        for (int j = 0; j < k; ++j)
          if (j != i && std::count(lv[j].begin(), lv[j].end(), v)) shared = true;
        if (!shared) c.push_back(v);
      }
      return c[rng.below(c.size())];
    };
    std::vector<int> cell{free_vertex(0)};
    for (int i = 1; i < k; ++i)
      if (rng.coin()) cell.push_back(lv[i][0]);
    cell.push_back(free_vertex(k - 1));
    std::vector<int> nb(cell.size(), 0);
    for (std::size_t j = 0; j + 1 < nb.size(); ++j) nb[j] = static_cast<int>(rng.below(2));
    int cell_edges = 0;
    for (int x : nb) cell_edges += x + 1;
    if (total + cell_edges > max_edges) continue;
    try {
      return chain_cell_graph(lengths, cell, nb);
    } catch (const Error&) {
      continue;
    }
  }
  throw GenerationError("no chain-with-cell graph found");
}

}  // namespace knotlab
