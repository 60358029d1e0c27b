#pragma once

#include <cstdint>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "knotlab/diagram.hpp"
#include "knotlab/laurent.hpp"
#include "knotlab/seifert.hpp"

namespace knotlab {

constexpr int kDefaultStateCap = 20;

// State: bit x set means crossing x gets the B-splitting.
// The A-splitting pairs positions {0,1} and {2,3}; the B-splitting {1,2} and {3,0}.
using State = std::vector<bool>;

namespace detail {

class LoopCounter {
 public:
  explicit LoopCounter(const Diagram& d) : d_(d), parent_(d.edge_count()) {}

  int count(const std::vector<bool>& b_split) {
    std::iota(parent_.begin(), parent_.end(), 0);
    int comps = d_.edge_count();
    for (int x = 0; x < d_.crossing_count(); ++x) {
      const auto& e = d_.crossing(x).edge;
      if (b_split[x]) {
        comps -= unite(e[1], e[2]);
        comps -= unite(e[3], e[0]);
      } else {
        comps -= unite(e[0], e[1]);
        comps -= unite(e[2], e[3]);
      }
    }
    return comps + d_.free_loops();
  }

  // Loop id per edge after the last count().
  int root(int e) {
    while (parent_[e] != e) e = parent_[e] = parent_[parent_[e]];
    return e;
  }

 private:
  int unite(int a, int b) {
    a = root(a);
    b = root(b);
    if (a == b) return 0;
    parent_[a] = b;
    return 1;
  }

  const Diagram& d_;
  std::vector<int> parent_;
};

}  // namespace detail

inline int state_loops(const Diagram& d, const State& s) {
  if (static_cast<int>(s.size()) != d.crossing_count()) throw PreconditionError("state size mismatch");
  detail::LoopCounter lc(d);
  return lc.count(s);
}

// <D> = sum over states of A^{#A-#B} (-A^2 - A^-2)^{|S|-1}, with <O> = 1.
inline LaurentPoly1 kauffman_bracket(const Diagram& d, int cap = kDefaultStateCap) {
  const int n = d.crossing_count();
  if (n > cap)
    throw BudgetError("state sum refused: " + std::to_string(n) + " crossings exceed the state-sum cap of " +
                      std::to_string(cap));
  if (n == 0 && d.free_loops() == 0) throw PreconditionError("bracket of the empty diagram");
  const int max_loops = d.edge_count() + d.free_loops() + 1;
  // counts[nb][loops]: number of states with nb B-splittings and the given loop count.
  std::vector<std::vector<std::int64_t>> counts(n + 1, std::vector<std::int64_t>(max_loops + 1, 0));
  detail::LoopCounter lc(d);
  std::vector<bool> st(n, false);
  const std::uint64_t total = 1ull << n;
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    int nb = 0;
    for (int x = 0; x < n; ++x) {
      st[x] = (mask >> x) & 1u;
      nb += st[x];
    }
    ++counts[nb][lc.count(st)];
  }
  // (-A^2 - A^-2)^k expanded once per k.
  LaurentPoly1::Vars av{'A'};
  LaurentPoly1 delta = LaurentPoly1::from_terms({{{Exp4::whole(2)}, -1}, {{Exp4::whole(-2)}, -1}}, av);
  std::vector<LaurentPoly1> dpow{LaurentPoly1::constant(1, av)};
  for (int k = 1; k <= max_loops; ++k) dpow.push_back(dpow.back() * delta);
  LaurentPoly1 out(av);
  for (int nb = 0; nb <= n; ++nb)
    for (int loops = 1; loops <= max_loops; ++loops) {
      if (counts[nb][loops] == 0) continue;
      out += dpow[loops - 1].scalar_monomial_mul(BigInt(counts[nb][loops]), {Exp4::whole(n - 2 * nb)});
    }
  return out;
}

// V(t) = (-A^3)^{-w} <D> at A = t^{-1/4}.
inline LaurentPoly1 jones_from_bracket(const LaurentPoly1& br, int w) {
  BigInt sign = (w % 2 == 0) ? 1 : -1;
  LaurentPoly1 normalized = br.scalar_monomial_mul(sign, {Exp4::whole(-3 * w)});
  // A^k, stored as 4k quarters, becomes t^{-k/4}, i.e. -k quarters.
  std::vector<LaurentPoly1::Term> ts;
  for (const auto& [k, c] : normalized.terms()) ts.emplace_back(LaurentPoly1::Key{Exp4(-k[0].quarters / 4)}, c);
  return LaurentPoly1::from_terms(std::move(ts), {'t'});
}

inline LaurentPoly1 jones(const Diagram& d, int cap = kDefaultStateCap) {
  return jones_from_bracket(kauffman_bracket(d, cap), writhe(d));
}

namespace detail {

inline bool semiadequate(const Diagram& d, bool b_side) {
  const int n = d.crossing_count();
  LoopCounter lc(d);
  lc.count(std::vector<bool>(n, b_side));
  for (int x = 0; x < n; ++x) {
    const auto& e = d.crossing(x).edge;
    // The two arcs of the chosen splitting at x.
    int a1 = b_side ? e[1] : e[0];
    int a2 = b_side ? e[3] : e[2];
    if (lc.root(a1) == lc.root(a2)) return false;
  }
  return true;
}

}  // namespace detail

inline bool is_a_adequate(const Diagram& d) { return detail::semiadequate(d, false); }
inline bool is_b_adequate(const Diagram& d) { return detail::semiadequate(d, true); }

// Leading-term bookkeeping for an almost positive diagram.
struct AlmostPositiveLeading {
  int negative_crossing = -1;
  int parallel_count = 0;        // positive crossings joining the same two circles
  BigInt top_bracket_coeff;      // coefficient of A^{c+2(s-2)} in <D>
  Exp4 top_bracket_exp;          // c + 2(s-2)
  bool cancelled = false;        // top term vanishes
  Exp4 predicted_min_deg_v;      // exact if !cancelled, else the lower bound
  int predicted_min_cf = 0;      // (-1)^{n-1}
  int bookkeeping_min_cf = 0;    // sign obtained from the bracket bookkeeping (if !cancelled)
  // The reading in which the two cases are swapped.
  Exp4 printed_min_deg_v;
};

inline AlmostPositiveLeading almost_positive_leading(const Diagram& d) {
  auto neg = negative_crossings(d);
  if (neg.size() != 1) throw PreconditionError("almost_positive_leading requires exactly one negative crossing");
  if (!is_connected(d)) throw PreconditionError("almost_positive_leading requires a connected diagram");
  SeifertData sd = seifert(d);
  AlmostPositiveLeading r;
  r.negative_crossing = neg[0];
  const int c = d.crossing_count();
  const int s = sd.count();
  const int chi = s - c;
  const int n = component_count(d);
  r.parallel_count = static_cast<int>(parallel_partners(sd, neg[0]).size());
  const int k = r.parallel_count + 1;  // crossings joining the two circles, p included
  // The top power A^{c+2(s-2)} gets (-1)^{s-1} from s_p(S_A), and
  // (-1)^{s+j} from each state with p A-split and j of the k-1 parallel
  // crossings B-split. The binomial sum vanishes unless k = 1.
  BigInt binom_sum = 0;
  BigInt binom = 1;
  for (int j = 0; j <= k - 1; ++j) {
    binom_sum += (j % 2 == 0) ? binom : BigInt(-binom);
    binom = binom * (k - 1 - j) / (j + 1);
  }
  BigInt sgn = (s - 1) % 2 == 0 ? 1 : -1;
  r.top_bracket_coeff = sgn - sgn * binom_sum;
  r.top_bracket_exp = Exp4::whole(c + 2 * (s - 2));
  r.cancelled = (r.top_bracket_coeff == 0);
  const int w = writhe(d);
  // A^N in <D> maps to t^{(3w - N)/4} in V.
  Exp4 top_v = Exp4(3 * w - (c + 2 * (s - 2)));
  r.predicted_min_cf = (n - 1) % 2 == 0 ? 1 : -1;
  if (!r.cancelled) {
    r.predicted_min_deg_v = top_v;
    BigInt v = (w % 2 == 0 ? 1 : -1) * r.top_bracket_coeff;
    r.bookkeeping_min_cf = static_cast<int>(v);
  } else {
    r.predicted_min_deg_v = Exp4::half(1 - chi);
  }
  r.printed_min_deg_v = r.cancelled ? top_v : Exp4::half(1 - chi);
  return r;
}

}  // namespace knotlab
