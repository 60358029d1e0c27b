#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "knotlab/diagram.hpp"
#include "knotlab/laurent.hpp"
#include "knotlab/seifert.hpp"

namespace knotlab {

struct SkeinConfig {
  std::size_t node_budget = 5'000'000;  // resolution nodes evaluated (memo hits are free)
  std::size_t memo_cap = 2'000'000;     // entries kept in the memo table
};

struct SkeinStats {
  std::size_t nodes = 0;
  std::size_t memo_hits = 0;
  int max_depth = 0;
};

namespace detail {

// Base points and component order for the descending resolution. Returns the
// crossings whose first visit is on the under-strand, in visit order.
inline std::vector<int> descending_plan(const Diagram& d) {
  int nc = 0;
  auto comp = edge_components(d, &nc);
  std::vector<std::vector<int>> cyc(nc);  // edges of each component in strand order
  {
    std::vector<char> seen(d.edge_count(), 0);
    for (int e = 0; e < d.edge_count(); ++e) {
      if (seen[e]) continue;
      for (int f = e; !seen[f]; f = d.next_edge(f)) {
        seen[f] = 1;
        cyc[comp[e]].push_back(f);
      }
    }
  }
  auto under_at_head = [&](int e) { return d.edge(e).head.pos == 0; };
  // Best start per component for its self-crossings.
  std::vector<int> start(nc, 0);
  for (int c = 0; c < nc; ++c) {
    const auto& v = cyc[c];
    const int L = static_cast<int>(v.size());
    int best = -1, best_bad = 1 << 30;
    for (int j = 0; j < L; ++j) {
      std::vector<char> seen(d.crossing_count(), 0);
      int bad = 0;
      for (int i = 0; i < L; ++i) {
        int e = v[(j + i) % L];
        int x = d.edge(e).head.x;
        if (seen[x]) continue;
        seen[x] = 1;
        // Self crossing: the other strand through x belongs to c too.
        int other = d.crossing(x).edge[under_at_head(e) ? over_in_pos(d.sign(x)) : 0];
        if (comp[other] == c && under_at_head(e)) ++bad;
      }
      if (bad < best_bad) {
        best_bad = bad;
        best = j;
      }
    }
    start[c] = best;
  }
  // Component order: under[i][j] counts crossings where i passes under j.
  std::vector<std::vector<int>> under(nc, std::vector<int>(nc, 0));
  for (int x = 0; x < d.crossing_count(); ++x) {
    const auto& cr = d.crossing(x);
    int cu = comp[cr.edge[0]];
    int co = comp[cr.edge[over_in_pos(cr.sign)]];
    if (cu != co) ++under[cu][co];
  }
  std::vector<int> order(nc);
  std::iota(order.begin(), order.end(), 0);
  auto cost = [&](const std::vector<int>& o) {
    int s = 0;
    for (int i = 0; i < nc; ++i)
      for (int j = i + 1; j < nc; ++j) s += under[o[i]][o[j]];
    return s;
  };
  if (nc <= 7) {
    std::vector<int> best = order, cur = order;
    int bc = cost(cur);
    while (std::next_permutation(cur.begin(), cur.end())) {
      int c = cost(cur);
      if (c < bc) {
        bc = c;
        best = cur;
      }
    }
    order = best;
  } else {
    std::vector<int> remaining = order;
    order.clear();
    while (!remaining.empty()) {
      // Pick the component passing under the fewest remaining others.
      auto it = std::min_element(remaining.begin(), remaining.end(), [&](int a, int b) {
        int sa = 0, sb = 0;
        for (int r : remaining) {
          sa += under[a][r];
          sb += under[b][r];
        }
        return sa < sb;
      });
      order.push_back(*it);
      remaining.erase(it);
    }
  }
  std::vector<char> seen(d.crossing_count(), 0);
  std::vector<int> bad;
  for (int c : order) {
    const auto& v = cyc[c];
    const int L = static_cast<int>(v.size());
    for (int i = 0; i < L; ++i) {
      int e = v[(start[c] + i) % L];
      int x = d.edge(e).head.x;
      if (seen[x]) continue;
      seen[x] = 1;
      if (under_at_head(e)) bad.push_back(x);
    }
  }
  return bad;
}

inline std::vector<int> free_reduce(std::vector<int> w) {
  std::vector<int> st;
  for (int l : w) {
    if (!st.empty() && st.back() == -l) {
      st.pop_back();
    } else {
      st.push_back(l);
    }
  }
  while (st.size() >= 2 && st.front() == -st.back()) {
    st.pop_back();
    st.erase(st.begin());
  }
  return st;
}

inline std::vector<int> min_rotation(const std::vector<int>& w) {
  std::vector<int> best = w;
  for (std::size_t r = 1; r < w.size(); ++r) {
    std::vector<int> c(w.begin() + r, w.end());
    c.insert(c.end(), w.begin(), w.begin() + r);
    if (c < best) best = std::move(c);
  }
  return best;
}

}  // namespace detail

// HOMFLY polynomial from l^{-1} P(+) + l P(-) = -m P(0), P(unknot) = 1.
class SkeinEngine {
 public:
  explicit SkeinEngine(SkeinConfig cfg = {}) : cfg_(cfg) {
    delta_ = lm(-1, 1, -1) + lm(-1, -1, -1);
    dpow_.push_back(LaurentPoly2::constant(1));
  }

  LaurentPoly2 homfly(const Diagram& d) { return eval(d, 0); }

  LaurentPoly2 homfly_braid(const BraidWord& b) {
    check_braid(b);
    return eval_braid(b.strands, b.letters, 0);
  }

  const SkeinStats& stats() const { return stats_; }

  // delta = -(l + l^{-1}) m^{-1}
  const LaurentPoly2& delta_pow(int k) {
    if (k < 0) throw PolyError("negative power of delta");
    while (static_cast<int>(dpow_.size()) <= k) dpow_.push_back(dpow_.back() * delta_);
    return dpow_[k];
  }

 private:
  void tick(int depth) {
    ++stats_.nodes;
    stats_.max_depth = std::max(stats_.max_depth, depth);
    if (stats_.nodes > cfg_.node_budget)
      throw BudgetError("skein budget of " + std::to_string(cfg_.node_budget) + " nodes exhausted (depth " +
                        std::to_string(depth) + ", max depth " + std::to_string(stats_.max_depth) + ", memo " +
                        std::to_string(memo_.size()) + " entries)");
  }

  void remember(std::string key, const LaurentPoly2& p) {
    if (memo_.size() < cfg_.memo_cap) memo_.emplace(std::move(key), p);
  }

  static LaurentPoly2 alpha(int sign) { return sign > 0 ? lm(-1, 2, 0) : lm(-1, -2, 0); }
  static LaurentPoly2 beta(int sign) { return sign > 0 ? lm(-1, 1, 1) : lm(-1, -1, 1); }

  LaurentPoly2 eval(const Diagram& d, int depth) {
    if (d.crossing_count() == 0) {
      if (d.free_loops() == 0) throw PreconditionError("HOMFLY of the empty diagram");
      return delta_pow(d.free_loops() - 1);
    }
    if (piece_count(d) > 1) {
      auto pieces = split_pieces(d);
      LaurentPoly2 r = delta_pow(static_cast<int>(pieces.size()) - 1);
      for (const auto& p : pieces) r = r * eval(p, depth + 1);
      return r;
    }
    std::string key = canonical_code(d);
    if (auto it = memo_.find(key); it != memo_.end()) {
      ++stats_.memo_hits;
      return it->second;
    }
    tick(depth);
    LaurentPoly2 result;
    FaceMap fm = faces(d);
    auto nug = nugatory_crossings(d, fm);
    if (!nug.empty()) {
      auto pieces = split_pieces(smooth_oriented(d, nug[0]));
      result = delta_pow(static_cast<int>(pieces.size()) - 2);
      for (const auto& p : pieces) result = result * eval(p, depth + 1);
    } else if (auto pr = find_decomposing_pair(d, fm)) {
      auto [a, b] = split_at_pair(d, pr->first, pr->second);
      result = eval(a, depth + 1) * eval(b, depth + 1);
    } else {
      result = resolve_descending(d, depth);
    }
    remember(std::move(key), result);
    return result;
  }

  LaurentPoly2 resolve_descending(const Diagram& d, int depth) {
    auto bad = detail::descending_plan(d);
    LaurentPoly2 result;
    LaurentPoly2 mult = LaurentPoly2::constant(1);
    Diagram cur = d;
    for (int x : bad) {
      int s = d.sign(x);
      result += mult * beta(s) * eval(smooth_oriented(cur, x), depth + 1);
      mult = mult * alpha(s);
      cur = switch_crossing(cur, x);
    }
    result += mult * delta_pow(component_count(d) - 1);
    return result;
  }

  LaurentPoly2 eval_braid(int strands, std::vector<int> w, int depth) {
    w = detail::free_reduce(std::move(w));
    if (w.empty()) return delta_pow(strands - 1);
    std::vector<int> count(strands, 0);
    for (int l : w) ++count[std::abs(l)];
    for (int i = 1; i < strands; ++i) {
      if (count[i] > 1) continue;
      // Letters below i act on strands 1..i, letters above on i+1..s; they commute.
      std::vector<int> lo, hi;
      for (int l : w) {
        if (std::abs(l) < i) lo.push_back(l);
        if (std::abs(l) > i) hi.push_back(l > 0 ? l - i : l + i);
      }
      LaurentPoly2 r = eval_braid(i, lo, depth + 1) * eval_braid(strands - i, hi, depth + 1);
      return count[i] == 0 ? delta_ * r : r;
    }
    w = detail::min_rotation(w);
    std::string key = "B" + std::to_string(strands) + ":";
    for (int l : w) key += std::to_string(l) + ",";
    if (auto it = memo_.find(key); it != memo_.end()) {
      ++stats_.memo_hits;
      return it->second;
    }
    tick(depth);
    Diagram d = braid_closure(BraidWord{strands, w});
    auto bad = detail::descending_plan(d);
    LaurentPoly2 result;
    LaurentPoly2 mult = LaurentPoly2::constant(1);
    std::vector<int> cur = w;
    for (int x : bad) {
      int s = w[x] > 0 ? 1 : -1;
      std::vector<int> smoothed;
      for (int j = 0; j < static_cast<int>(cur.size()); ++j)
        if (j != x) smoothed.push_back(cur[j]);
      result += mult * beta(s) * eval_braid(strands, smoothed, depth + 1);
      mult = mult * alpha(s);
      cur[x] = -cur[x];
    }
    result += mult * delta_pow(component_count(d) - 1);
    remember(std::move(key), result);
    return result;
  }

  SkeinConfig cfg_;
  SkeinStats stats_;
  LaurentPoly2 delta_;
  std::vector<LaurentPoly2> dpow_;
  std::unordered_map<std::string, LaurentPoly2> memo_;
};

inline LaurentPoly2 homfly(const Diagram& d, SkeinConfig cfg = {}) {
  SkeinEngine e(cfg);
  return e.homfly(d);
}

inline LaurentPoly2 homfly_braid(const BraidWord& b, SkeinConfig cfg = {}) {
  SkeinEngine e(cfg);
  return e.homfly_braid(b);
}

inline LaurentPoly1 jones_from_homfly(const LaurentPoly2& p) { return substitute_homfly_to_jones(p); }

// Conway-normalized Delta, then sign-fixed: for even component counts the top
// coefficient is made positive.
inline LaurentPoly1 alexander_symmetric_from_homfly(const LaurentPoly2& p, int components) {
  LaurentPoly1 a = substitute_homfly_to_alexander(p);
  if (a.is_zero()) return a;
  if (components % 2 == 0 && a.max_cf() < 0) a = -a;
  return a;
}

inline LaurentPoly1 alexander_nonneg_from_symmetric(const LaurentPoly1& a) {
  if (a.is_zero()) return a;
  LaurentPoly1 r = a.scalar_monomial_mul(1, {-a.min_deg()});
  if (r.min_cf() < 0) r = -r;
  return r;
}

inline LaurentPoly1 alexander_symmetric(const Diagram& d, SkeinConfig cfg = {}) {
  return alexander_symmetric_from_homfly(homfly(d, cfg), component_count(d));
}

inline LaurentPoly1 alexander_nonneg(const Diagram& d, SkeinConfig cfg = {}) {
  return alexander_nonneg_from_symmetric(alexander_symmetric(d, cfg));
}

struct HomflyDegrees {
  int mindeg_l, maxdeg_l, mindeg_m, maxdeg_m;
};

inline HomflyDegrees degrees(const LaurentPoly2& p) {
  if (p.is_zero()) throw PolyError("degrees of the zero polynomial");
  return {p.min_deg(0).as_int(), p.max_deg(0).as_int(), p.min_deg(1).as_int(), p.max_deg(1).as_int()};
}

struct SkeinBoundsReport {
  int bennequin = 0;
  int mindeg_l = 0;
  int maxdeg_m = 0;
  int one_minus_chi = 0;
  bool b_le_mindeg_l = false;          // b(D) <= min deg_l P
  bool maxdeg_m_le_one_minus_chi = false;  // max deg_m P <= 1 - chi(D)
  bool mindeg_l_le_maxdeg_m = false;   // min deg_l P <= max deg_m P
  bool all() const { return b_le_mindeg_l && maxdeg_m_le_one_minus_chi && mindeg_l_le_maxdeg_m; }
};

inline SkeinBoundsReport skein_bounds_report(const Diagram& d, const LaurentPoly2& p) {
  SkeinBoundsReport r;
  HomflyDegrees g = degrees(p);
  r.bennequin = bennequin(d);
  r.mindeg_l = g.mindeg_l;
  r.maxdeg_m = g.maxdeg_m;
  r.one_minus_chi = 1 - canonical_euler(d);
  r.b_le_mindeg_l = r.bennequin <= r.mindeg_l;
  r.maxdeg_m_le_one_minus_chi = r.maxdeg_m <= r.one_minus_chi;
  r.mindeg_l_le_maxdeg_m = r.mindeg_l <= r.maxdeg_m;
  return r;
}

inline SkeinBoundsReport skein_bounds_report(const Diagram& d, SkeinConfig cfg = {}) { return skein_bounds_report(d, homfly(d, cfg)); }

}  // namespace knotlab
