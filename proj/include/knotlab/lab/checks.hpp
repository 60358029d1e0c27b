#pragma once

#include <optional>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

#include "knotlab/bracket.hpp"
#include "knotlab/diagram.hpp"
#include "knotlab/evgraph.hpp"
#include "knotlab/laurent.hpp"
#include "knotlab/seifert.hpp"
#include "knotlab/skein.hpp"

namespace knotlab::lab {

// Version of every JSON document the lab emits.
constexpr int kSchemaVersion = 1;

// "finding" marks a statistic gathered without asserting anything.
enum class Status { Pass, Fail, NotApplicable, Finding };

inline std::string to_string(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::NotApplicable: return "n/a";
    case Status::Finding: return "finding";
  }
  return "?";
}

struct Verdict {
  std::string id;
  Status status = Status::NotApplicable;
  std::string detail;
};

inline nlohmann::json to_json(const Verdict& v) {
  return {{"id", v.id}, {"status", to_string(v.status)}, {"detail", v.detail}};
}

namespace detail {

inline Verdict na(const std::string& id, const std::string& why) { return {id, Status::NotApplicable, why}; }

inline Verdict judge(const std::string& id, bool ok, const std::string& detail) {
  return {id, ok ? Status::Pass : Status::Fail, detail};
}

inline int sign_pow(int k) { return k % 2 == 0 ? 1 : -1; }

// Connected reduced diagram with at least one crossing.
inline bool plain(const Diagram& d) { return d.crossing_count() > 0 && is_connected(d) && is_reduced(d); }

}  // namespace detail

// 1 - chi of the link, where the diagram determines it: the canonical surface
// of a positive diagram is minimal, and for one negative crossing the surface
// loses two from 1 - chi(D) exactly when that crossing has a parallel partner.
inline std::optional<int> one_minus_chi_link(const Diagram& d) {
  if (!detail::plain(d)) return std::nullopt;
  int base = 1 - canonical_euler(d);
  int cls = positivity_class(d);
  if (cls == 0) return base;
  if (cls == 1) {
    auto neg = negative_crossings(d);
    return parallel_partners(seifert(d), neg[0]).empty() ? base : base - 2;
  }
  return std::nullopt;
}

inline Verdict check_jones_oracle(const std::optional<LaurentPoly1>& bracket_v, const LaurentPoly1& skein_v) {
  const std::string id = "jones-oracle";
  if (!bracket_v) return detail::na(id, "above the state-sum cap");
  return detail::judge(id, *bracket_v == skein_v, "bracket " + bracket_v->to_string() + ", skein " + skein_v.to_string());
}

inline Verdict check_skein_bounds(const Diagram& d, const LaurentPoly2& p) {
  SkeinBoundsReport m = skein_bounds_report(d, p);
  std::ostringstream os;
  os << "b=" << m.bennequin << " mindeg_l=" << m.mindeg_l << " maxdeg_m=" << m.maxdeg_m
     << " 1-chi(D)=" << m.one_minus_chi;
  return detail::judge("skein-degree-bounds", m.b_le_mindeg_l && m.maxdeg_m_le_one_minus_chi, os.str());
}

// Positive braid-like diagrams: (-1)^{n-1} t^{(chi-1)/2} V = 1 + p t^2 + k t^3 + ...
// with -p <= k <= 3/2 (1 - chi - p).
inline Verdict check_positive_low(const Diagram& d, const LaurentPoly1& v) {
  const std::string id = "positive-low-coefficients";
  if (positivity_class(d) != 0 || !detail::plain(d)) return detail::na(id, "needs a connected reduced positive diagram");
  const int chi = canonical_euler(d);
  const int n = component_count(d);
  LaurentPoly1 w = v.scalar_monomial_mul(detail::sign_pow(n - 1), {Exp4::half(chi - 1)});
  const int p = prime_factor_count(d);
  BigInt c0 = w.coeff_at(Exp4::whole(0)), c1 = w.coeff_at(Exp4::whole(1));
  BigInt c2 = w.coeff_at(Exp4::whole(2)), k = w.coeff_at(Exp4::whole(3));
  bool ok = w.min_deg() == Exp4::whole(0) && c0 == 1 && c1 == 0 && c2 == p && -p <= k && 2 * k <= 3 * (1 - chi - p);
  std::ostringstream os;
  os << "normalized " << w.to_string() << "; p=" << p << " k=" << k << " 1-chi=" << 1 - chi;
  return detail::judge(id, ok, os.str());
}

// (-1)^n [V]_{(3-chi)/2} = b1 of the reduced Seifert graph.
inline Verdict check_positive_second(const Diagram& d, const LaurentPoly1& v) {
  const std::string id = "positive-second-coefficient";
  if (positivity_class(d) != 0 || d.crossing_count() == 0 || !is_connected(d))
    return detail::na(id, "needs a connected positive diagram");
  const int chi = canonical_euler(d);
  BigInt lhs = detail::sign_pow(component_count(d)) * v.coeff_at(Exp4::half(3 - chi));
  int b1 = betti1(reduced_seifert_graph(d));
  std::ostringstream os;
  os << "signed coefficient " << lhs << ", b1 " << b1;
  return detail::judge(id, lhs == b1, os.str());
}

// [V]_{(3-chi)/2} = 0 when the reduced Seifert graph is a tree.
inline Verdict check_tree_vanishing(const Diagram& d, const LaurentPoly1& v) {
  const std::string id = "tree-coefficient-vanishing";
  if (positivity_class(d) != 0 || d.crossing_count() == 0 || !is_connected(d))
    return detail::na(id, "needs a connected positive diagram");
  if (!is_tree(reduced_seifert_graph(d))) return detail::na(id, "reduced Seifert graph is not a tree");
  BigInt c = v.coeff_at(Exp4::half(3 - canonical_euler(d)));
  return detail::judge(id, c == 0, "coefficient " + c.str());
}

// Lowest Jones term of a diagram with one negative crossing p. With a parallel
// partner the term sits at (1-chi(D))/2 - 1 with the sign from the bracket
// bookkeeping; without one it sits at (1-chi(D))/2 with sign (-1)^{n-1}.
inline Verdict check_ap_leading(const Diagram& d, const LaurentPoly1& v) {
  const std::string id = "almost-positive-jones-leading";
  if (positivity_class(d) != 1 || !detail::plain(d)) return detail::na(id, "needs a connected reduced almost positive diagram");
  AlmostPositiveLeading a = almost_positive_leading(d);
  BigInt want_cf = a.cancelled ? BigInt(a.predicted_min_cf) : BigInt(a.bookkeeping_min_cf);
  bool ok = v.min_deg() == a.predicted_min_deg_v && v.min_cf() == want_cf;
  std::ostringstream os;
  os << (a.cancelled ? "no parallel partner" : "parallel partner") << "; predicted t^"
     << a.predicted_min_deg_v.to_string() << " cf " << want_cf << ", actual t^" << v.min_deg().to_string() << " cf "
     << v.min_cf() << "; swapped reading predicts t^" << a.printed_min_deg_v.to_string();
  return detail::judge(id, ok, os.str());
}

struct ApDegrees {
  Verdict verdict;
  std::optional<bool> mindeg_l_sharp;  // min deg_l P == 1 - chi(L), when applicable
};

// 2 max deg Delta = max deg_m P = 1 - chi(L), max deg Delta = min deg V, and
// min deg_l P <= 1 - chi(L).
inline ApDegrees check_ap_degrees(const Diagram& d, const LaurentPoly1& v, const LaurentPoly2& p) {
  const std::string id = "almost-positive-degrees";
  if (positivity_class(d) != 1 || !detail::plain(d))
    return {detail::na(id, "needs a connected reduced almost positive diagram"), std::nullopt};
  const int omc = *one_minus_chi_link(d);
  LaurentPoly1 a = alexander_symmetric_from_homfly(p, component_count(d));
  HomflyDegrees g = degrees(p);
  const int two_maxdeg = a.is_zero() ? -1 : a.max_deg().doubled();
  bool ok = two_maxdeg == omc && g.maxdeg_m == omc && !a.is_zero() && a.max_deg() == v.min_deg() && g.mindeg_l <= omc;
  std::ostringstream os;
  os << "1-chi(L)=" << omc << " 2maxdegD=" << two_maxdeg << " maxdeg_m=" << g.maxdeg_m
     << " mindegV=" << v.min_deg().to_string() << " mindeg_l=" << g.mindeg_l;
  return {detail::judge(id, ok, os.str()), g.mindeg_l == omc};
}

// Shape classifier agrees with the Alexander criterion.
inline Verdict check_fiber_shape(const Diagram& d, const LaurentPoly2& p) {
  const std::string id = "fiber-shape";
  if (positivity_class(d) != 1 || d.crossing_count() == 0 || !is_connected(d))
    return detail::na(id, "needs a connected almost positive diagram");
  FiberShape fs = classify_fiber_shape(d);
  LaurentPoly1 a = alexander_symmetric_from_homfly(p, component_count(d));
  const int omc = 1 - canonical_euler(d);
  bool alex = !a.is_zero() && a.max_deg().doubled() == omc && abs(a.min_cf()) == 1;
  std::ostringstream os;
  os << "shape " << to_string(fs.verdict) << " (" << fs.witness << "); Alexander criterion "
     << (alex ? "fibered" : "not fibered");
  return detail::judge(id, fs.fibered() == alex, os.str());
}

// Degree/monic criterion on the symmetric Alexander polynomial, reported only.
inline Verdict finding_alexander_fibered(const Diagram& d, const LaurentPoly2& p) {
  LaurentPoly1 a = alexander_symmetric_from_homfly(p, component_count(d));
  const int omc = 1 - canonical_euler(d);
  bool alex = !a.is_zero() && a.max_deg().doubled() == omc && abs(a.min_cf()) == 1;
  return {"alexander-fibered-criterion", Status::Finding, alex ? "true" : "false"};
}

}  // namespace knotlab::lab
