#include <gtest/gtest.h>

#include <array>
#include <map>
#include <numeric>
#include <regex>

#include "knotlab/bracket.hpp"
#include "knotlab/diagram.hpp"
#include "knotlab/generate.hpp"
#include "knotlab/lab/catalog.hpp"
#include "knotlab/seifert.hpp"

using namespace knotlab;

namespace {

Diagram closure(const std::string& w) { return braid_closure(parse_braid(w)); }

LaurentPoly1 poly_a(std::initializer_list<std::pair<int, int>> terms) {
  LaurentPoly1 p({'A'});
  for (auto [e, c] : terms) p = p + poly_t({{Exp4::whole(e), c}}, 'A');
  return p;
}

// Jones polynomial straight from PD text: X[a,b,c,d] smooths to (a,b)(c,d)
// with weight A and to (a,d)(b,c) with weight 1/A; loops are counted by
// union-find on the labels; V = (-A^3)^{-w} <D> at A = t^{-1/4}.
LaurentPoly1 jones_from_pd_text(const std::string& pd, int writhe) {
  std::vector<std::array<int, 4>> xs;
  std::regex rx(R"(X\[(\d+),(\d+),(\d+),(\d+)\])");
  int max_label = 0;
  for (std::sregex_iterator it(pd.begin(), pd.end(), rx), end; it != end; ++it) {
    std::array<int, 4> x{};
    for (int k = 0; k < 4; ++k) {
      x[k] = std::stoi((*it)[k + 1]);
      max_label = std::max(max_label, x[k]);
    }
    xs.push_back(x);
  }
  const int n = static_cast<int>(xs.size());
  std::map<int, long long> bracket;  // exponent of A -> coefficient
  std::vector<int> parent(max_label + 1);
  auto find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (long mask = 0; mask < (1L << n); ++mask) {
    std::iota(parent.begin(), parent.end(), 0);
    int loops = max_label, a_count = 0;
    auto join = [&](int u, int v) {
      u = find(u);
      v = find(v);
      if (u != v) {
        parent[u] = v;
        --loops;
      }
    };
    for (int i = 0; i < n; ++i) {
      const auto& x = xs[i];
      if (mask >> i & 1) {
        join(x[0], x[3]);
        join(x[1], x[2]);
      } else {
        ++a_count;
        join(x[0], x[1]);
        join(x[2], x[3]);
      }
    }
    // A^{a-b} (-A^2 - A^-2)^{loops-1}
    std::map<int, long long> term{{a_count - (n - a_count), 1}};
    for (int l = 1; l < loops; ++l) {
      std::map<int, long long> next;
      for (auto [e, c] : term) {
        next[e + 2] -= c;
        next[e - 2] -= c;
      }
      term = next;
    }
    for (auto [e, c] : term) bracket[e] += c;
  }
  LaurentPoly1 v;
  const int sign = writhe % 2 == 0 ? 1 : -1;
  for (auto [e, c] : bracket) {
    if (c == 0) continue;
    // A^{e - 3w} -> t^{-(e - 3w)/4}
    v = v + poly_t({{Exp4(-(e - 3 * writhe)), sign * c}});
  }
  return v;
}

}  // namespace

TEST(StateLoops, TwoBraidClosure) {
  Diagram h = closure("2: 1 1");
  EXPECT_EQ(state_loops(h, {false, false}), 2);
  EXPECT_EQ(state_loops(h, {false, true}), 1);
  EXPECT_EQ(state_loops(h, {true, true}), 2);
  EXPECT_THROW(state_loops(h, {false}), PreconditionError);
}

TEST(StateLoops, AllAStateOfPositiveDiagramGivesSeifertCircles) {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    Diagram d = random_positive_diagram(seed, 4 + seed % 10);
    EXPECT_EQ(state_loops(d, State(d.crossing_count(), false)), seifert_circle_count(d));
  }
}

TEST(Bracket, SmallExamples) {
  EXPECT_EQ(kauffman_bracket(Diagram::unknot()), LaurentPoly1::constant(1, {'A'}));
  EXPECT_EQ(kauffman_bracket(closure("2: 1 1")), poly_a({{4, -1}, {-4, -1}}));
  EXPECT_EQ(kauffman_bracket(closure("2: 1 1 1")), poly_a({{5, -1}, {-3, -1}, {-7, 1}}));
}

TEST(Bracket, RefusesAboveCap) {
  Diagram b = closure("4: 1 1 1 2 -1 2 1 3 1 2 -1 2 2 3 -2 1 2 -1 2 3 -2");
  try {
    kauffman_bracket(b, 20);
    FAIL() << "expected a budget error";
  } catch (const BudgetError& e) {
    EXPECT_NE(std::string(e.what()).find("20"), std::string::npos) << e.what();
  }
}

TEST(Jones, SmallExamples) {
  EXPECT_EQ(jones(closure("2: 1 1 1")), poly_t({{Exp4::whole(1), 1}, {Exp4::whole(3), 1}, {Exp4::whole(4), -1}}));
  EXPECT_EQ(jones(closure("2: 1 1")), poly_t({{Exp4::half(1), -1}, {Exp4::half(5), -1}}));
  EXPECT_EQ(jones(closure("2: -1 1 1 1 1")), jones(closure("2: 1 1 1")));
  EXPECT_EQ(jones(Diagram::unknot()), LaurentPoly1::constant(1));
}

TEST(Jones, PositiveTrefoilLeadingTerm) {
  LaurentPoly1 v = jones(closure("2: 1 1 1"));
  EXPECT_EQ(v.min_deg().doubled(), 1 - canonical_euler(closure("2: 1 1 1")));
  EXPECT_EQ(v.min_cf(), 1);
  EXPECT_EQ(jones(closure("2: 1 1")).min_cf(), -1);
}

TEST(Jones, MarkovMovesAndConjugation) {
  LaurentPoly1 t = jones(closure("2: 1 1 1"));
  EXPECT_EQ(jones(closure("3: 1 1 1 2")), t);
  EXPECT_EQ(jones(closure("3: 1 1 1 -2")), t);
  EXPECT_EQ(jones(closure("3: 1 2 1 2 -1")), jones(closure("3: 2 1 2 -1 1")));
  EXPECT_EQ(jones(closure("3: 1 -2 1 -2")), jones(closure("3: -2 1 -2 1")));
}

TEST(Jones, MirrorInvertsVariable) {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    Diagram d = random_diagram(seed, 4 + seed % 6);
    LaurentPoly1 v = jones(d), m = jones(mirror(d));
    LaurentPoly1 inv;
    for (const auto& [k, c] : v.terms()) inv = inv + LaurentPoly1::monomial(c, {-k[0]});
    EXPECT_EQ(m, inv);
  }
}

TEST(Jones, AgreesWithPdTextOracle) {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    Diagram d = random_diagram(seed, 3 + seed % 9);
    EXPECT_EQ(jones(d), jones_from_pd_text(to_pd(d), writhe(d))) << to_pd(d);
  }
}

TEST(Adequacy, ReducedPositiveDiagramsAreAAdequate) {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    Diagram d = random_positive_diagram(seed, 3 + seed % 12);
    ASSERT_TRUE(is_reduced(d));
    EXPECT_TRUE(is_a_adequate(d));
  }
}

TEST(Adequacy, PretzelFamilyReducedDiagramIsBAdequate) {
  for (int n = 3; n <= 5; ++n) EXPECT_TRUE(is_b_adequate(lab::pretzel_family_reduced(n))) << n;
}

TEST(Adequacy, NugatoryCrossingBreaksOneSide) {
  Diagram k = closure("3: 1 1 1 2");
  EXPECT_TRUE(is_a_adequate(k));
  EXPECT_FALSE(is_b_adequate(k));
}

TEST(AlmostPositive, DemoWithParallelCrossings) {
  Diagram d = closure("2: -1 1 1 1 1");
  ASSERT_EQ(canonical_euler(d), -3);
  AlmostPositiveLeading a = almost_positive_leading(d);
  EXPECT_FALSE(a.cancelled);
  EXPECT_EQ(a.parallel_count, 4);
  EXPECT_EQ(a.predicted_min_deg_v, Exp4::whole(1));
  EXPECT_EQ(a.bookkeeping_min_cf, 1);
  EXPECT_EQ(a.printed_min_deg_v, Exp4::whole(2));
  LaurentPoly1 v = jones(d);
  EXPECT_EQ(v.min_deg(), a.predicted_min_deg_v);
  EXPECT_EQ(v.min_cf(), 1);
}

TEST(AlmostPositive, BothSidesAgainstBracket) {
  for (bool parallel : {true, false}) {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
      Diagram d = random_almost_positive_diagram(seed, 5 + seed % 8, parallel);
      AlmostPositiveLeading a = almost_positive_leading(d);
      EXPECT_EQ(a.cancelled, !parallel);
      LaurentPoly1 v = jones(d);
      const int omc = 1 - canonical_euler(d);
      const int n = component_count(d);
      EXPECT_EQ(v.min_deg().doubled(), parallel ? omc - 2 : omc) << to_pd(d);
      EXPECT_EQ(v.min_cf(), n % 2 == 1 ? 1 : -1) << to_pd(d);
      EXPECT_EQ(v.min_deg(), a.predicted_min_deg_v);
    }
  }
}

TEST(AlmostPositive, RejectsOtherClasses) {
  EXPECT_THROW(almost_positive_leading(closure("2: 1 1 1")), PreconditionError);
  EXPECT_THROW(almost_positive_leading(mirror(closure("2: 1 1 1"))), PreconditionError);
}
