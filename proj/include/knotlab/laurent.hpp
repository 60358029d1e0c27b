#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>
#include <nlohmann/json.hpp>

#include "knotlab/error.hpp"

namespace knotlab {

using BigInt = boost::multiprecision::cpp_int;

// Exponent measured in quarter units: Exp4{6} is the exponent 3/2.
struct Exp4 {
  std::int32_t quarters = 0;

  constexpr Exp4() = default;
  constexpr explicit Exp4(std::int32_t q) : quarters(q) {}

  static constexpr Exp4 whole(std::int32_t n) { return Exp4(4 * n); }
  static constexpr Exp4 half(std::int32_t n) { return Exp4(2 * n); }

  constexpr auto operator<=>(const Exp4&) const = default;

  constexpr Exp4 operator+(Exp4 o) const { return Exp4(quarters + o.quarters); }
  constexpr Exp4 operator-(Exp4 o) const { return Exp4(quarters - o.quarters); }
  constexpr Exp4 operator-() const { return Exp4(-quarters); }
  constexpr Exp4 operator*(std::int32_t k) const { return Exp4(quarters * k); }
  Exp4& operator+=(Exp4 o) {
    quarters += o.quarters;
    return *this;
  }

  constexpr bool is_integral() const { return quarters % 4 == 0; }
  constexpr bool is_half_integral() const { return quarters % 2 == 0; }

  // Twice the exponent; throws unless the exponent is a multiple of 1/2.
  std::int32_t doubled() const {
    if (!is_half_integral()) throw PolyError("exponent " + to_string() + " is not a half-integer");
    return quarters / 2;
  }

  std::int32_t as_int() const {
    if (!is_integral()) throw PolyError("exponent " + to_string() + " is not an integer");
    return quarters / 4;
  }

  std::string to_string() const {
    std::int32_t num = quarters;
    std::int32_t den = 4;
    while (den > 1 && num % 2 == 0) {
      num /= 2;
      den /= 2;
    }
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
  }
};

namespace detail {

template <std::size_t N>
std::array<Exp4, N> key_add(const std::array<Exp4, N>& a, const std::array<Exp4, N>& b) {
  std::array<Exp4, N> r;
  for (std::size_t i = 0; i < N; ++i) r[i] = a[i] + b[i];
  return r;
}

inline std::string power_text(char var, Exp4 e) {
  std::string s(1, var);
  if (e == Exp4::whole(1)) return s;
  std::string v = e.to_string();
  if (v.find('/') != std::string::npos || v[0] == '-') return s + "^(" + v + ")";
  return s + "^" + v;
}

}  // namespace detail

// Sparse Laurent polynomial in N variables with integer coefficients.
// Terms are kept sorted by exponent key with no zero coefficients.
template <std::size_t N>
class LaurentPoly {
  static_assert(N == 1 || N == 2);

 public:
  using Key = std::array<Exp4, N>;
  using Term = std::pair<Key, BigInt>;
  using Vars = std::array<char, N>;

  static constexpr Vars default_vars() {
    if constexpr (N == 1) {
      return Vars{'t'};
    } else {
      return Vars{'l', 'm'};
    }
  }

  LaurentPoly() : vars_(default_vars()) {}
  explicit LaurentPoly(Vars vars) : vars_(vars) {}

  static LaurentPoly constant(const BigInt& c, Vars vars = default_vars()) {
    return monomial(c, Key{}, vars);
  }

  static LaurentPoly monomial(const BigInt& c, const Key& k, Vars vars = default_vars()) {
    LaurentPoly p(vars);
    if (c != 0) p.terms_.emplace_back(k, c);
    return p;
  }

  // Builds from arbitrary (possibly repeated, unsorted) terms.
  static LaurentPoly from_terms(std::vector<Term> terms, Vars vars = default_vars()) {
    LaurentPoly p(vars);
    std::sort(terms.begin(), terms.end(),
              [](const Term& a, const Term& b) { return a.first < b.first; });
    for (auto& t : terms) {
      if (!p.terms_.empty() && p.terms_.back().first == t.first) {
        p.terms_.back().second += t.second;
        if (p.terms_.back().second == 0) p.terms_.pop_back();
      } else if (t.second != 0) {
        p.terms_.push_back(std::move(t));
      }
    }
    return p;
  }

  const Vars& vars() const { return vars_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  bool operator==(const LaurentPoly& o) const { return vars_ == o.vars_ && terms_ == o.terms_; }

  LaurentPoly operator+(const LaurentPoly& o) const {
    check_vars(o);
    LaurentPoly r(vars_);
    r.terms_.reserve(terms_.size() + o.terms_.size());
    auto a = terms_.begin();
    auto b = o.terms_.begin();
    while (a != terms_.end() || b != o.terms_.end()) {
      if (b == o.terms_.end() || (a != terms_.end() && a->first < b->first)) {
        r.terms_.push_back(*a++);
      } else if (a == terms_.end() || b->first < a->first) {
        r.terms_.push_back(*b++);
      } else {
        BigInt c = a->second + b->second;
        if (c != 0) r.terms_.emplace_back(a->first, std::move(c));
        ++a;
        ++b;
      }
    }
    return r;
  }

  LaurentPoly operator-() const {
    LaurentPoly r = *this;
    for (auto& t : r.terms_) t.second = -t.second;
    return r;
  }

  LaurentPoly operator-(const LaurentPoly& o) const { return *this + (-o); }

  LaurentPoly operator*(const LaurentPoly& o) const {
    check_vars(o);
    if (terms_.size() == 1) return o.scalar_monomial_mul(terms_[0].second, terms_[0].first);
    if (o.terms_.size() == 1) return scalar_monomial_mul(o.terms_[0].second, o.terms_[0].first);
    std::map<Key, BigInt> acc;
    for (const auto& [ka, ca] : terms_)
      for (const auto& [kb, cb] : o.terms_) acc[detail::key_add(ka, kb)] += ca * cb;
    LaurentPoly r(vars_);
    for (auto& [k, c] : acc)
      if (c != 0) r.terms_.emplace_back(k, std::move(c));
    return r;
  }

  LaurentPoly& operator+=(const LaurentPoly& o) { return *this = *this + o; }
  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

  LaurentPoly scalar_monomial_mul(const BigInt& c, const Key& k) const {
    LaurentPoly r(vars_);
    if (c == 0) return r;
    r.terms_.reserve(terms_.size());
    for (const auto& [kk, cc] : terms_) r.terms_.emplace_back(detail::key_add(kk, k), cc * c);
    return r;
  }

  LaurentPoly pow(unsigned n) const {
    LaurentPoly r = constant(1, vars_);
    for (unsigned i = 0; i < n; ++i) r = r * *this;
    return r;
  }

  // Degree accessors for variable index i.
  Exp4 min_deg(std::size_t i = 0) const {
    require_nonzero();
    Exp4 m = terms_.front().first[i];
    for (const auto& t : terms_) m = std::min(m, t.first[i]);
    return m;
  }

  Exp4 max_deg(std::size_t i = 0) const {
    require_nonzero();
    Exp4 m = terms_.front().first[i];
    for (const auto& t : terms_) m = std::max(m, t.first[i]);
    return m;
  }

  Exp4 span(std::size_t i = 0) const { return max_deg(i) - min_deg(i); }

  BigInt coeff_at(const Key& k) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), k,
                               [](const Term& t, const Key& key) { return t.first < key; });
    if (it != terms_.end() && it->first == k) return it->second;
    return 0;
  }

  BigInt coeff_at(Exp4 e) const
    requires(N == 1)
  {
    return coeff_at(Key{e});
  }

  BigInt min_cf() const
    requires(N == 1)
  {
    require_nonzero();
    return terms_.front().second;
  }

  BigInt max_cf() const
    requires(N == 1)
  {
    require_nonzero();
    return terms_.back().second;
  }

  // Substitutes var -> var^k (k may be negative) in a one-variable polynomial.
  LaurentPoly scale_exponents(std::int32_t k, char new_var) const
    requires(N == 1)
  {
    std::vector<Term> ts;
    for (const auto& [kk, c] : terms_) ts.emplace_back(Key{kk[0] * k}, c);
    return from_terms(std::move(ts), Vars{new_var});
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : terms_) {
      BigInt a = c < 0 ? BigInt(-c) : c;
      if (first) {
        if (c < 0) os << "-";
      } else {
        os << (c < 0 ? " - " : " + ");
      }
      first = false;
      std::string mono;
      for (std::size_t i = 0; i < N; ++i) {
        if (k[i].quarters == 0) continue;
        if (!mono.empty()) mono += "*";
        mono += detail::power_text(vars_[i], k[i]);
      }
      if (mono.empty()) {
        os << a;
      } else if (a == 1) {
        os << mono;
      } else {
        os << a << "*" << mono;
      }
    }
    return os.str();
  }

  // Coefficient list "(c_min ... [c_0] ... c_max)" in steps of the coarsest
  // exponent unit present. The constant slot is bracketed when it lies on the grid.
  std::string to_list_notation() const
    requires(N == 1)
  {
    if (terms_.empty()) return "()";
    std::int32_t step = 4;
    for (const auto& t : terms_) {
      while (step > 1 && (t.first[0].quarters - terms_.front().first[0].quarters) % step != 0)
        step /= 2;
    }
    std::int32_t lo = terms_.front().first[0].quarters;
    std::int32_t hi = terms_.back().first[0].quarters;
    bool zero_on_grid = ((0 - lo) % step + step) % step == 0;
    if (zero_on_grid) {
      lo = std::min(lo, 0);
      hi = std::max(hi, 0);
    }
    std::ostringstream os;
    if (!zero_on_grid) os << detail::power_text(vars_[0], Exp4(lo)) << "*";
    os << "(";
    for (std::int32_t q = lo; q <= hi; q += step) {
      if (q != lo) os << " ";
      BigInt c = coeff_at(Exp4(q));
      if (zero_on_grid && q == 0) {
        os << "[" << c << "]";
      } else {
        os << c;
      }
    }
    os << ")";
    return os.str();
  }

  nlohmann::json to_json() const {
    nlohmann::json j;
    j["vars"] = std::string(vars_.begin(), vars_.end());
    nlohmann::json ts = nlohmann::json::array();
    for (const auto& [k, c] : terms_) {
      nlohmann::json t = nlohmann::json::array();
      for (std::size_t i = 0; i < N; ++i) t.push_back(k[i].quarters);
      t.push_back(c.str());
      ts.push_back(std::move(t));
    }
    j["terms"] = std::move(ts);
    return j;
  }

 private:
  void check_vars(const LaurentPoly& o) const {
    if (vars_ != o.vars_)
      throw PolyError("variable mismatch: " + std::string(vars_.begin(), vars_.end()) + " vs " +
                      std::string(o.vars_.begin(), o.vars_.end()));
  }

  void require_nonzero() const {
    if (terms_.empty()) throw PolyError("degree of the zero polynomial is undefined");
  }

  Vars vars_;
  std::vector<Term> terms_;
};

using LaurentPoly1 = LaurentPoly<1>;
using LaurentPoly2 = LaurentPoly<2>;

template <std::size_t N>
LaurentPoly<N> add(const LaurentPoly<N>& p, const LaurentPoly<N>& q) {
  return p + q;
}
template <std::size_t N>
LaurentPoly<N> mul(const LaurentPoly<N>& p, const LaurentPoly<N>& q) {
  return p * q;
}
template <std::size_t N>
LaurentPoly<N> neg(const LaurentPoly<N>& p) {
  return -p;
}
template <std::size_t N>
LaurentPoly<N> scalar_monomial_mul(const LaurentPoly<N>& p, const BigInt& c,
                                   const typename LaurentPoly<N>::Key& k) {
  return p.scalar_monomial_mul(c, k);
}

inline LaurentPoly1 poly_t(std::initializer_list<std::pair<Exp4, long long>> ts, char var = 't') {
  std::vector<LaurentPoly1::Term> v;
  for (const auto& [e, c] : ts) v.emplace_back(LaurentPoly1::Key{e}, BigInt(c));
  return LaurentPoly1::from_terms(std::move(v), {var});
}

// Monomial l^a m^b in quarter units of whole exponents.
inline LaurentPoly2 lm(long long c, std::int32_t a, std::int32_t b) {
  return LaurentPoly2::monomial(c, {Exp4::whole(a), Exp4::whole(b)});
}

namespace detail {

struct Gauss {
  BigInt re;
  BigInt im;
};

// i^k as a Gaussian unit.
inline std::pair<int, int> i_power(std::int64_t k) {
  switch (((k % 4) + 4) % 4) {
    case 0: return {1, 0};
    case 1: return {0, 1};
    case 2: return {-1, 0};
    default: return {0, -1};
  }
}

using GaussPoly = std::map<std::int32_t, Gauss>;

inline void gauss_add(GaussPoly& p, std::int32_t e, const BigInt& re, const BigInt& im) {
  auto& g = p[e];
  g.re += re;
  g.im += im;
  if (g.re == 0 && g.im == 0) p.erase(e);
}

// Exact quotient of p by (t^hi - t^lo) with hi > lo; throws on nonzero remainder.
inline GaussPoly gauss_divide_binomial(GaussPoly p, std::int32_t hi, std::int32_t lo) {
  GaussPoly q;
  if (p.empty()) return q;
  std::int32_t floor = p.begin()->first;
  while (!p.empty()) {
    auto top = std::prev(p.end());
    std::int32_t e = top->first;
    Gauss c = top->second;
    std::int32_t qe = e - hi;
    if (qe + lo < floor) throw PolyError("substitution left a nonzero remainder; input is not a link polynomial");
    gauss_add(q, qe, c.re, c.im);
    gauss_add(p, e, -c.re, -c.im);
    gauss_add(p, qe + lo, c.re, c.im);
  }
  return q;
}

// Evaluates P(l, m) at l = i^{ul} t^{lam}, m = i^{um} (t^{mu} - t^{-mu}); exponents in quarters.
inline LaurentPoly1 substitute(const LaurentPoly2& P, int ul, std::int32_t lam, int um,
                               std::int32_t mu) {
  if (P.is_zero()) return LaurentPoly1();
  for (const auto& t : P.terms())
    if (!t.first[0].is_integral() || !t.first[1].is_integral())
      throw PolyError("HOMFLY polynomial must have integer exponents in l and m");
  std::int32_t bmin = P.min_deg(1).as_int();
  GaussPoly num;
  for (const auto& [k, c] : P.terms()) {
    std::int64_t a = k[0].as_int();
    std::int64_t b = k[1].as_int();
    auto [ur, ui] = i_power(ul * a + um * b);
    // (t^mu - t^-mu)^(b - bmin) by the binomial theorem.
    std::int64_t n = b - bmin;
    BigInt binom = 1;
    for (std::int64_t j = 0; j <= n; ++j) {
      // term C(n,j) (t^mu)^(n-j) (-t^-mu)^j
      BigInt coef = binom * c;
      if (j % 2 == 1) coef = -coef;
      std::int32_t e = static_cast<std::int32_t>(lam * a + mu * (n - j) - mu * j);
      gauss_add(num, e, coef * ur, coef * ui);
      binom = binom * (n - j) / (j + 1);
    }
  }
  std::int32_t hi = mu > 0 ? mu : -mu;
  for (std::int32_t r = 0; r < -bmin; ++r) {
    // t^mu - t^-mu: if mu < 0 this is -(t^|mu| - t^-|mu|).
    num = gauss_divide_binomial(std::move(num), hi, -hi);
    if (mu < 0)
      for (auto& [e, g] : num) {
        g.re = -g.re;
        g.im = -g.im;
      }
  }
  std::vector<LaurentPoly1::Term> out;
  for (auto& [e, g] : num) {
    if (g.im != 0) throw PolyError("substitution left an imaginary part; input is not a link polynomial");
    out.emplace_back(LaurentPoly1::Key{Exp4(e)}, g.re);
  }
  return LaurentPoly1::from_terms(std::move(out), {'t'});
}

}  // namespace detail

// V(t) = P(-i t, i (t^{-1/2} - t^{1/2})).
inline LaurentPoly1 substitute_homfly_to_jones(const LaurentPoly2& P) {
  return detail::substitute(P, 3, 4, 1, -2);
}

// Conway-normalized Alexander polynomial: P(i, i (t^{1/2} - t^{-1/2})).
inline LaurentPoly1 substitute_homfly_to_alexander(const LaurentPoly2& P) {
  return detail::substitute(P, 1, 0, 1, 2);
}

}  // namespace knotlab
