#pragma once

#include <algorithm>
#include <vector>

#include "knotlab/error.hpp"
#include "knotlab/shadow.hpp"

namespace knotlab {

struct PlaneEdge {
  int tail = -1;
  int head = -1;
  int sign = 1;
  int tag = -1;  // crossing id or other caller data
};

// Plane multigraph given by a rotation system. Dart 2e sits at the tail of
// edge e, dart 2e+1 at its head; rot[v] lists the darts at v counterclockwise.
struct PlaneGraph {
  int vertices = 0;
  std::vector<PlaneEdge> edges;
  std::vector<std::vector<int>> rot;

  static constexpr int twin(int d) { return d ^ 1; }
  static constexpr int edge_of(int d) { return d >> 1; }
  int dart_vertex(int d) const { return (d & 1) ? edges[d >> 1].head : edges[d >> 1].tail; }
  int edge_count() const { return static_cast<int>(edges.size()); }
  int degree(int v) const { return static_cast<int>(rot[v].size()); }

  int add_vertex() {
    rot.emplace_back();
    return vertices++;
  }

  // Appends an edge without touching rotations.
  int push_edge(int u, int v, int sign = 1, int tag = -1) {
    edges.push_back({u, v, sign, tag});
    return edge_count() - 1;
  }

  int index_in_rot(int d) const {
    const auto& r = rot[dart_vertex(d)];
    auto it = std::find(r.begin(), r.end(), d);
    if (it == r.end()) throw Error("dart missing from rotation");
    return static_cast<int>(it - r.begin());
  }

  int rot_next(int d) const {
    const auto& r = rot[dart_vertex(d)];
    return r[(index_in_rot(d) + 1) % r.size()];
  }

  int rot_prev(int d) const {
    const auto& r = rot[dart_vertex(d)];
    return r[(index_in_rot(d) + r.size() - 1) % r.size()];
  }

  // Inserts dart nd immediately counterclockwise after dart x at x's vertex.
  void insert_after(int x, int nd) {
    auto& r = rot[dart_vertex(x)];
    r.insert(r.begin() + index_in_rot(x) + 1, nd);
  }

  // Faces as dart cycles; the face lies to the right of each dart.
  std::vector<std::vector<int>> faces() const {
    std::vector<int> face(2 * edges.size(), -1);
    std::vector<std::vector<int>> out;
    for (int d = 0; d < 2 * edge_count(); ++d) {
      if (face[d] >= 0) continue;
      out.emplace_back();
      for (int c = d; face[c] < 0; c = rot_next(twin(c))) {
        face[c] = static_cast<int>(out.size()) - 1;
        out.back().push_back(c);
      }
    }
    return out;
  }

  bool connected() const {
    if (vertices == 0) return true;
    std::vector<std::vector<int>> adj(vertices);
    for (const auto& e : edges) {
      adj[e.tail].push_back(e.head);
      adj[e.head].push_back(e.tail);
    }
    std::vector<char> seen(vertices, 0);
    std::vector<int> st{0};
    seen[0] = 1;
    int cnt = 1;
    while (!st.empty()) {
      int v = st.back();
      st.pop_back();
      for (int w : adj[v])
        if (!seen[w]) {
          seen[w] = 1;
          ++cnt;
          st.push_back(w);
        }
    }
    return cnt == vertices;
  }

  // Euler check for a connected plane graph with at least one edge.
  bool is_planar_embedding() const {
    return vertices - edge_count() + static_cast<int>(faces().size()) == 2;
  }

  // Inserts a directed cycle inside the face given by its dart list. The cycle
  // visits the face corners with the listed indices (ascending); corner i sits
  // between twin(face[i]) and face[i+1]. new_between[j] fresh vertices are
  // placed between chosen corner j and the next one. Returns the new edge ids.
  std::vector<int> insert_cycle(const std::vector<int>& face, const std::vector<int>& corners,
                                const std::vector<int>& new_between, int sign = 1) {
    const int m = static_cast<int>(face.size());
    const int r = static_cast<int>(corners.size());
    if (r == 0 || static_cast<int>(new_between.size()) != r) throw Error("bad cycle insertion request");
    std::vector<int> corner_vertex(r), corner_after(r), arrive(r, -1), leave(r, -1);
    for (int j = 0; j < r; ++j) {
      int i = corners[j];
      if (i < 0 || i >= m) throw Error("corner index out of range");
      corner_after[j] = twin(face[i]);
      corner_vertex[j] = dart_vertex(face[(i + 1) % m]);
    }
    std::vector<int> made;
    for (int j = 0; j < r; ++j) {
      int from = corner_vertex[j];
      int to = corner_vertex[(j + 1) % r];
      int k = new_between[j];
      if (k == 0 && from == to) throw Error("cycle insertion would create a loop");
      int prev = from;
      int prev_dart = -1;
      for (int s = 0; s <= k; ++s) {
        int next = (s == k) ? to : add_vertex();
        int e = push_edge(prev, next, sign);
        made.push_back(e);
        if (s == 0) {
          leave[j] = 2 * e;
        } else {
          rot[prev] = {prev_dart, 2 * e};
        }
        prev_dart = 2 * e + 1;
        prev = next;
      }
      arrive[(j + 1) % r] = prev_dart;
    }
    for (int j = 0; j < r; ++j) {
      insert_after(corner_after[j], arrive[j]);
      insert_after(arrive[j], leave[j]);
    }
    return made;
  }

  // Adds a single edge through a face between corners i and j (distinct vertices).
  int insert_chord(const std::vector<int>& face, int i, int j, int sign = 1) {
    const int m = static_cast<int>(face.size());
    int ai = twin(face[i]);
    int aj = twin(face[j]);
    int u = dart_vertex(face[(i + 1) % m]);
    int v = dart_vertex(face[(j + 1) % m]);
    if (u == v) throw Error("chord would create a loop");
    int e = push_edge(u, v, sign);
    insert_after(ai, 2 * e);
    insert_after(aj, 2 * e + 1);
    return e;
  }

  // Splits edge e by a new vertex; returns the new edge (new vertex -> old head).
  int subdivide(int e) {
    int w = add_vertex();
    int v = edges[e].head;
    int ne = push_edge(w, v, edges[e].sign);
    auto& rv = rot[v];
    std::replace(rv.begin(), rv.end(), 2 * e + 1, 2 * ne + 1);
    edges[e].head = w;
    rot[w] = {2 * e + 1, 2 * ne};
    return ne;
  }
};

// Medial shadow of a plane graph: one crossing per edge. The edge is drawn
// tail (west) to head (east) through its crossing.
inline Shadow medial_shadow(const PlaneGraph& g) {
  Shadow sh;
  for (int e = 0; e < g.edge_count(); ++e) sh.add_crossing(0);
  auto end_after = [](int d) { return EndRef{d >> 1, (d & 1) ? SE : NW}; };
  auto end_before = [](int d) { return EndRef{d >> 1, (d & 1) ? NE : SW}; };
  for (int v = 0; v < g.vertices; ++v) {
    const auto& r = g.rot[v];
    for (std::size_t i = 0; i < r.size(); ++i) sh.glue(end_after(r[i]), end_before(r[(i + 1) % r.size()]));
  }
  return sh;
}

}  // namespace knotlab
