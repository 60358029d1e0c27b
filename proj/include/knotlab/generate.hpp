#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "knotlab/diagram.hpp"
#include "knotlab/planar.hpp"
#include "knotlab/seifert.hpp"
#include "knotlab/shadow.hpp"

namespace knotlab {

// Seeded generator with a platform-independent reduction to ranges.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : g_(seed * 0x9E3779B97F4A7C15ull + 0x632BE59BD9B4E019ull) {}
  std::uint64_t below(std::uint64_t n) { return n == 0 ? 0 : g_() % n; }
  int range(int lo, int hi) { return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo + 1))); }
  bool coin() { return (g_() >> 17) & 1u; }
  std::uint64_t next() { return g_(); }

 private:
  std::mt19937_64 g_;
};

// Random connected, loopless, 2-edge-connected plane multigraph with the
// given number of edges: a 2-cycle grown by subdivisions and face chords.
inline PlaneGraph random_tait_graph(Rng& rng, int edges) {
  if (edges < 2) throw PreconditionError("need at least two edges");
  PlaneGraph g;
  int u = g.add_vertex(), v = g.add_vertex();
  int e0 = g.push_edge(u, v), e1 = g.push_edge(u, v);
  g.rot[u] = {2 * e0, 2 * e1};
  g.rot[v] = {2 * e1 + 1, 2 * e0 + 1};
  while (g.edge_count() < edges) {
    if (rng.below(3) == 0) {
      g.subdivide(static_cast<int>(rng.below(g.edge_count())));
      continue;
    }
    auto fs = g.faces();
    const auto& f = fs[rng.below(fs.size())];
    const int m = static_cast<int>(f.size());
    int i = static_cast<int>(rng.below(m));
    int j = static_cast<int>(rng.below(m));
    if (i == j) continue;
    if (g.dart_vertex(f[(i + 1) % m]) == g.dart_vertex(f[(j + 1) % m])) continue;
    g.insert_chord(f, i, j);
  }
  return g;
}

// Orients each shadow component at random and sets all crossing signs.
inline Diagram orient_randomly(const Shadow& sh, Rng& rng, int sign) {
  auto comps = shadow_components(sh);
  std::vector<bool> rev(comps.size());
  for (std::size_t i = 0; i < rev.size(); ++i) rev[i] = rng.coin();
  std::vector<int> signs(sh.crossing_count(), sign);
  return shadow_to_diagram(sh, rev, &signs);
}

// Connected reduced positive diagram with target_c crossings (medial diagram of
// a random bridgeless loopless plane graph, strands randomly oriented).
inline Diagram random_positive_diagram(std::uint64_t seed, int target_c) {
  if (target_c < 2) throw PreconditionError("target crossing count must be >= 2");
  Rng rng(seed);
  PlaneGraph g = random_tait_graph(rng, target_c);
  Diagram d = orient_randomly(medial_shadow(g), rng, 1);
  if (!is_connected(d) || !is_reduced(d)) throw GenerationError("generated diagram is not connected and reduced");
  return d;
}

// Positive diagram with one crossing switched. The switched crossing has a
// parallel partner (another crossing joining the same two Seifert circles)
// exactly when force_parallel is set.
inline Diagram random_almost_positive_diagram(std::uint64_t seed, int target_c, bool force_parallel) {
  constexpr int kRetries = 200;
  for (int attempt = 0; attempt < kRetries; ++attempt) {
    std::uint64_t sub = seed * 1000003ull + static_cast<std::uint64_t>(attempt);
    Diagram d = random_positive_diagram(sub, target_c);
    SeifertData sd = seifert(d);
    std::vector<int> cand;
    for (int x = 0; x < d.crossing_count(); ++x)
      if (parallel_partners(sd, x).empty() != force_parallel) cand.push_back(x);
    if (cand.empty()) continue;
    Rng rng(sub ^ 0xA5A5A5A5ull);
    return switch_crossing(d, cand[rng.below(cand.size())]);
  }
  throw GenerationError("no almost positive diagram with parallel=" + std::string(force_parallel ? "true" : "false") +
                        " found after " + std::to_string(kRetries) + " attempts (seed " + std::to_string(seed) +
                        ", target " + std::to_string(target_c) + ")");
}

// Positive braid word on `strands` strands in which every generator occurs at
// least twice (closure is connected and reduced).
inline BraidWord random_positive_braid(Rng& rng, int strands, int length) {
  if (strands < 2 || length < 2 * (strands - 1)) throw PreconditionError("braid too short for a reduced closure");
  for (int attempt = 0; attempt < 1000; ++attempt) {
    BraidWord b{strands, {}};
    std::vector<int> count(strands, 0);
    for (int i = 0; i < length; ++i) {
      int l = 1 + static_cast<int>(rng.below(strands - 1));
      b.letters.push_back(l);
      ++count[l];
    }
    bool ok = true;
    for (int i = 1; i < strands; ++i) ok = ok && count[i] >= 2;
    if (ok) return b;
  }
  throw GenerationError("could not draw a reduced positive braid");
}

// Braid word with random letters and signs; every generator appears.
inline BraidWord random_braid(Rng& rng, int strands, int length) {
  for (int attempt = 0; attempt < 1000; ++attempt) {
    BraidWord b{strands, {}};
    std::vector<int> count(strands, 0);
    for (int i = 0; i < length; ++i) {
      int l = 1 + static_cast<int>(rng.below(strands - 1));
      ++count[l];
      b.letters.push_back(rng.coin() ? l : -l);
    }
    bool ok = true;
    for (int i = 1; i < strands; ++i) ok = ok && count[i] >= 1;
    if (ok) return b;
  }
  throw GenerationError("could not draw a braid using every generator");
}

// Connected diagram with crossing signs chosen at random.
inline Diagram random_diagram(std::uint64_t seed, int target_c) {
  Rng rng(seed);
  PlaneGraph g = random_tait_graph(rng, target_c);
  Shadow sh = medial_shadow(g);
  auto comps = shadow_components(sh);
  std::vector<bool> rev(comps.size());
  for (std::size_t i = 0; i < rev.size(); ++i) rev[i] = rng.coin();
  std::vector<int> signs(sh.crossing_count());
  for (auto& s : signs) s = rng.coin() ? 1 : -1;
  return shadow_to_diagram(sh, rev, &signs);
}

}  // namespace knotlab
