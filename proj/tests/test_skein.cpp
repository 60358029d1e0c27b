#include <gtest/gtest.h>

#include "knotlab/bracket.hpp"
#include "knotlab/diagram.hpp"
#include "knotlab/generate.hpp"
#include "knotlab/seifert.hpp"
#include "knotlab/skein.hpp"

using namespace knotlab;

namespace {

Diagram closure(const std::string& w) { return braid_closure(parse_braid(w)); }

Exp4 w(int n) { return Exp4::whole(n); }
Exp4 h(int n) { return Exp4::half(n); }

// Value at t = 1 of a polynomial with integer exponents.
BigInt at_one(const LaurentPoly1& p) {
  BigInt s = 0;
  for (const auto& [k, c] : p.terms()) s += c;
  return s;
}

LaurentPoly1 invert_variable(const LaurentPoly1& p) {
  LaurentPoly1 out;
  for (const auto& [k, c] : p.terms()) out = out + LaurentPoly1::monomial(c, {-k[0]});
  return out;
}

}  // namespace

TEST(Homfly, Unknot) {
  EXPECT_EQ(homfly(Diagram::unknot()), LaurentPoly2::constant(1));
  EXPECT_EQ(homfly(closure("2: 1")), LaurentPoly2::constant(1));
  EXPECT_EQ(homfly(closure("3: 1 -2")), LaurentPoly2::constant(1));
}

TEST(Homfly, TwoComponentUnlink) {
  LaurentPoly2 delta = lm(-1, 1, -1) + lm(-1, -1, -1);
  EXPECT_EQ(homfly(closure("2: 1 -1")), delta);
  EXPECT_EQ(homfly(Diagram::unknot(2)), delta);
  EXPECT_EQ(homfly(disjoint_union(closure("2: 1 1 1"), Diagram::unknot())), delta * homfly(closure("2: 1 1 1")));
}

// From l^{-1}P+ + l P- = -m P0 with P(unknot) = 1, by hand.
TEST(Homfly, HopfAndTrefoilByHand) {
  EXPECT_EQ(homfly(closure("2: 1 1")), lm(-1, 1, 1) + lm(1, 1, -1) + lm(1, 3, -1));
  EXPECT_EQ(homfly(closure("2: 1 1 1")), lm(-2, 2, 0) + lm(-1, 4, 0) + lm(1, 2, 2));
}

TEST(Homfly, SkeinRelationHoldsAtEveryCrossing) {
  for (std::uint64_t seed = 1; seed <= 15; ++seed) {
    Diagram d = random_diagram(seed, 4 + seed % 6);
    for (int x = 0; x < d.crossing_count(); x += 2) {
      Diagram plus = d.sign(x) > 0 ? d : switch_crossing(d, x);
      Diagram minus = switch_crossing(plus, x);
      LaurentPoly2 lhs = lm(1, -1, 0) * homfly(plus) + lm(1, 1, 0) * homfly(minus);
      EXPECT_EQ(lhs, lm(-1, 0, 1) * homfly(smooth_oriented(d, x)));
    }
  }
}

TEST(Homfly, BraidPathAgreesWithDiagramPath) {
  Rng rng(99);
  for (int trial = 0; trial < 30; ++trial) {
    int strands = rng.range(2, 5);
    BraidWord b = random_braid(rng, strands, rng.range(strands - 1, 14));
    EXPECT_EQ(homfly_braid(b), homfly(braid_closure(b))) << b.to_string();
  }
}

TEST(Homfly, JonesSubstitutionMatchesBracket) {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    Diagram d = random_diagram(seed, 3 + seed % 10);
    EXPECT_EQ(jones_from_homfly(homfly(d)), jones(d)) << to_pd(d);
  }
}

TEST(Homfly, BudgetIsEnforced) {
  SkeinConfig cfg;
  cfg.node_budget = 3;
  EXPECT_THROW(homfly(random_diagram(4, 12), cfg), BudgetError);
}

TEST(Homfly, CatalogDegrees) {
  LaurentPoly2 p = homfly_braid(parse_braid("4: 1 1 1 2 -1 2 1 3 1 2 -1 2 2 3 -2 1 2 -1 2 3 -2"));
  EXPECT_EQ(degrees(p).mindeg_l, 10);
  LaurentPoly2 q = homfly_braid(parse_braid("4: 2 3 -2 1 2 -1 2 3 -2 1 2 -1 2 3 -2 1 2 -1 1"));
  EXPECT_EQ(degrees(q).mindeg_l, 4);
}

TEST(Alexander, Trefoil) {
  Diagram t = closure("2: 1 1 1");
  EXPECT_EQ(alexander_symmetric(t), poly_t({{w(-1), 1}, {w(0), -1}, {w(1), 1}}));
  EXPECT_EQ(alexander_nonneg(t), poly_t({{w(0), 1}, {w(1), -1}, {w(2), 1}}));
}

TEST(Alexander, UnknotAndHopf) {
  EXPECT_EQ(alexander_symmetric(Diagram::unknot()), LaurentPoly1::constant(1));
  // Even component count: the sign makes the top coefficient positive.
  EXPECT_EQ(alexander_symmetric(closure("2: 1 1")), poly_t({{h(-1), -1}, {h(1), 1}}));
  EXPECT_TRUE(alexander_symmetric(closure("2: 1 -1")).is_zero());
}

TEST(Alexander, KnotsAreSymmetricWithValueOneAtOne) {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    Diagram d = random_diagram(seed, 3 + seed % 10);
    LaurentPoly1 a = alexander_symmetric(d);
    if (component_count(d) == 1) {
      EXPECT_EQ(at_one(a), 1);
    }
    LaurentPoly1 inv = invert_variable(a);
    EXPECT_TRUE(inv == a || inv == -a);
    if (!a.is_zero()) {
      LaurentPoly1 nn = alexander_nonneg(d);
      EXPECT_EQ(nn.min_deg(), w(0));
      EXPECT_GT(nn.min_cf(), 0);
      EXPECT_EQ(nn.span(), a.span());
    }
  }
}

TEST(Alexander, ConwayRelationForTwistKnots) {
  // Delta(sigma^{k+2}) = Delta(sigma^k) + (t^{1/2} - t^{-1/2}) Delta(sigma^{k+1}), up to the
  // sign fixed for links with an even number of components.
  LaurentPoly1 z = poly_t({{h(1), 1}, {h(-1), -1}});
  std::vector<LaurentPoly1> a;
  std::string word = "2:";
  for (int k = 1; k <= 7; ++k) {
    word += " 1";
    a.push_back(alexander_symmetric(closure(word)));
  }
  for (int k = 0; k + 2 < 7; ++k) {
    LaurentPoly1 rhs = a[k] + z * a[k + 1];
    EXPECT_TRUE(a[k + 2] == rhs || a[k + 2] == -rhs) << k;
  }
}

TEST(Degrees, TrefoilSkeinBoundsReport) {
  SkeinBoundsReport m = skein_bounds_report(closure("2: 1 1 1"));
  EXPECT_EQ(m.bennequin, 2);
  EXPECT_EQ(m.mindeg_l, 2);
  EXPECT_EQ(m.maxdeg_m, 2);
  EXPECT_EQ(m.one_minus_chi, 2);
  EXPECT_TRUE(m.all());
  EXPECT_THROW(degrees(LaurentPoly2()), PolyError);
}

TEST(Degrees, CatalogBraidBennequin) {
  Diagram d = closure("4: 1 1 1 2 -1 2 1 3 1 2 -1 2 2 3 -2 1 2 -1 2 3 -2");
  EXPECT_EQ(bennequin(d), 8);
}

TEST(Degrees, SkeinBoundInequalitiesOnRandomDiagrams) {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    Diagram d = random_diagram(seed, 3 + seed % 11);
    SkeinBoundsReport m = skein_bounds_report(d);
    EXPECT_TRUE(m.all()) << to_pd(d);
  }
}

TEST(Degrees, PositiveDiagramsAreSharp) {
  for (std::uint64_t seed = 1; seed <= 25; ++seed) {
    Diagram d = random_positive_diagram(seed, 3 + seed % 11);
    HomflyDegrees g = degrees(homfly(d));
    EXPECT_EQ(g.maxdeg_m, 1 - canonical_euler(d));
    EXPECT_GE(g.mindeg_l, bennequin(d));
  }
}

TEST(Degrees, AlexanderBoundedBySkeinDegree) {
  for (std::uint64_t seed = 1; seed <= 25; ++seed) {
    Diagram d = random_diagram(seed, 3 + seed % 11);
    LaurentPoly2 p = homfly(d);
    LaurentPoly1 a = alexander_symmetric_from_homfly(p, component_count(d));
    if (!a.is_zero()) {
      EXPECT_LE(a.max_deg().doubled(), degrees(p).maxdeg_m);
    }
  }
}
