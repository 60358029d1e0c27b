#include <gtest/gtest.h>

#include <random>

#include "knotlab/diagram.hpp"
#include "knotlab/generate.hpp"
#include "knotlab/seifert.hpp"
#include "knotlab/shadow.hpp"

using namespace knotlab;

namespace {

Diagram closure(const std::string& w) { return braid_closure(parse_braid(w)); }

// Every edge runs from an outgoing slot to an incoming slot.
bool orientation_consistent(const Diagram& d) {
  for (const auto& e : d.edges())
    if (d.incoming(e.tail) || !d.incoming(e.head)) return false;
  return true;
}

// Small prime diagrams to glue together.
Diagram prime_piece(int which) {
  switch (which % 4) {
    case 0: return closure("2: 1 1 1");
    case 1: return closure("2: 1 1 1 1 1");
    case 2: return closure("3: 1 -2 1 -2");
    default: return closure("2: -1 -1 -1");
  }
}

}  // namespace

TEST(ParsePd, Trefoil) {
  Diagram d = parse_pd("X[4,2,5,1] X[2,6,3,5] X[6,4,1,3]");
  EXPECT_EQ(d.crossing_count(), 3);
  EXPECT_EQ(std::abs(writhe(d)), 3);
  EXPECT_EQ(component_count(d), 1);
  EXPECT_EQ(faces(d).count(), 5);
  EXPECT_TRUE(orientation_consistent(d));
  EXPECT_TRUE(is_reduced(d));
}

TEST(ParsePd, Errors) {
  EXPECT_THROW(parse_pd(""), ParseError);
  EXPECT_THROW(parse_pd("X[1,2,1,2]"), ParseError);
  EXPECT_THROW(parse_pd("X[1,2,3,4]"), ParseError);                       // dangling labels
  EXPECT_THROW(parse_pd("X[1,1,1,2] X[2,3,3,4]"), ParseError);            // label used too often
}

TEST(ParsePd, RoundTripKeepsTheDiagram) {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    Diagram d = random_diagram(seed, 9);
    Diagram e = parse_pd(to_pd(d));
    EXPECT_EQ(canonical_code(d), canonical_code(e)) << to_pd(d);
    EXPECT_EQ(writhe(d), writhe(e));
  }
}

TEST(ParseBraid, ClosureCounts) {
  Diagram t = closure("2: 1 1 1");
  EXPECT_EQ(t.crossing_count(), 3);
  EXPECT_EQ(writhe(t), 3);
  EXPECT_EQ(seifert_circle_count(t), 2);

  Diagram k = closure("5: -1 -2 3 4 -3 2 1 -2 1 2 2 -3 4 3 -2 3");
  EXPECT_EQ(k.crossing_count(), 16);
  EXPECT_EQ(writhe(k), 4);
  EXPECT_EQ(seifert_circle_count(k), 5);

  Diagram b = closure("4: 1 1 1 2 -1 2 1 3 1 2 -1 2 2 3 -2 1 2 -1 2 3 -2");
  EXPECT_EQ(b.crossing_count(), 21);
  EXPECT_EQ(crossing_number(b), 21);
  EXPECT_EQ(writhe(b), 11);
  EXPECT_EQ(seifert_circle_count(b), 4);
}

TEST(ParseBraid, Errors) {
  EXPECT_THROW(parse_braid("2: 1 2"), ParseError);
  EXPECT_THROW(parse_braid("2: 0"), ParseError);
  EXPECT_THROW(parse_braid("1 1 1"), ParseError);
  EXPECT_THROW(parse_braid("x: 1"), ParseError);
  EXPECT_THROW(parse_braid("2: 1a"), ParseError);
  EXPECT_EQ(parse_braid("3: 1 -2").to_string(), "3: 1 -2");
}

TEST(Moves, MirrorAndSwitch) {
  Diagram t = closure("2: 1 1 1");
  EXPECT_EQ(writhe(mirror(t)), -3);
  Diagram s = switch_crossing(t, 0);
  EXPECT_EQ(writhe(s), 1);
  EXPECT_EQ(component_count(s), 1);
  EXPECT_EQ(s.sign(0), -1);
  EXPECT_TRUE(orientation_consistent(s));
  EXPECT_THROW(switch_crossing(t, 3), PreconditionError);
  EXPECT_THROW(smooth_oriented(t, -1), PreconditionError);
}

TEST(Moves, SmoothTrefoilCrossing) {
  Diagram h = smooth_oriented(closure("2: 1 1 1"), 0);
  EXPECT_EQ(h.crossing_count(), 2);
  EXPECT_EQ(component_count(h), 2);
  EXPECT_EQ(canonical_code(h), canonical_code(closure("2: 1 1")));
}

TEST(Moves, SmoothingAllGivesSeifertCircles) {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    Diagram d = random_diagram(seed, 8);
    Diagram s = d;
    while (s.crossing_count() > 0) s = smooth_oriented(s, 0);
    EXPECT_EQ(s.free_loops(), seifert_circle_count(d));
  }
}

TEST(Moves, ComponentChangeProperties) {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    Diagram d = random_diagram(seed, 7 + seed % 5);
    int n = component_count(d);
    for (int x = 0; x < d.crossing_count(); ++x) {
      EXPECT_EQ(component_count(switch_crossing(d, x)), n);
      EXPECT_EQ(std::abs(component_count(smooth_oriented(d, x)) - n), 1);
    }
  }
}

TEST(Structure, ConnectivityAndSplit) {
  Diagram t = closure("2: 1 1 1");
  EXPECT_TRUE(is_connected(t));
  EXPECT_FALSE(is_split_diagram(t));
  EXPECT_TRUE(nugatory_crossings(t).empty());
  Diagram u = disjoint_union(t, t);
  EXPECT_TRUE(is_split_diagram(u));
  EXPECT_EQ(split_pieces(u).size(), 2u);
}

TEST(Structure, KinkIsNugatory) {
  // The single sigma_2 adds a kink to the trefoil closure.
  Diagram k = closure("3: 1 1 1 2");
  auto nug = nugatory_crossings(k);
  ASSERT_EQ(nug.size(), 1u);
  EXPECT_EQ(nug[0], 3);
  EXPECT_FALSE(is_reduced(k));
}

TEST(Structure, FacesSatisfyEuler) {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    Diagram d = random_diagram(seed, 4 + seed % 10);
    ASSERT_TRUE(is_connected(d));
    EXPECT_EQ(faces(d).count(), d.crossing_count() + 2);
  }
}

TEST(PrimeFactors, Basics) {
  EXPECT_EQ(prime_factor_count(closure("2: 1 1 1")), 1);
  Diagram t = closure("2: 1 1 1");
  EXPECT_EQ(prime_factor_count(connected_sum(t, 0, t, 2)), 2);
  EXPECT_THROW(prime_factor_count(closure("3: 1 1 1 2")), PreconditionError);
}

TEST(PrimeFactors, ConnectedSumsByConstruction) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    int k = 1 + static_cast<int>(rng() % 4);
    Diagram d = prime_piece(static_cast<int>(rng()));
    for (int i = 1; i < k; ++i) {
      Diagram p = prime_piece(static_cast<int>(rng()));
      d = connected_sum(d, static_cast<int>(rng() % d.edge_count()), p, static_cast<int>(rng() % p.edge_count()));
    }
    ASSERT_TRUE(is_reduced(d));
    EXPECT_EQ(prime_factor_count(d), k);
    EXPECT_EQ(prime_factor_count(mirror(d)), k);
    EXPECT_EQ(prime_factor_count(parse_pd(to_pd(d))), k);
  }
}

TEST(PrimeFactors, OnceUsedGeneratorSplitsAfterSmoothing) {
  // sigma_2 occurs once: nugatory, and the link is a sum of two trefoils.
  Diagram d = closure("4: 1 1 1 2 3 3 3");
  auto nug = nugatory_crossings(d);
  ASSERT_EQ(nug.size(), 1u);
  int total = 0;
  for (const auto& piece : split_pieces(smooth_oriented(d, nug[0]))) total += prime_factor_count(piece);
  EXPECT_EQ(total, 2);
}

TEST(Families, Pretzels) {
  Diagram l3 = pretzel_diagram({3, 3, 3, -1});
  EXPECT_EQ(l3.crossing_count(), 10);
  EXPECT_EQ(component_count(l3), 2);
  EXPECT_EQ(positivity_class(l3), 1);
  Diagram l4 = pretzel_diagram({3, 3, 3, 3, -1});
  EXPECT_EQ(component_count(l4), 1);
  Diagram p22 = pretzel_diagram({2, 2});
  EXPECT_EQ(p22.crossing_count(), 4);
  EXPECT_TRUE(is_special(p22));
  EXPECT_THROW(pretzel_diagram({3}), PreconditionError);
  // In the (3,3) pretzel both columns have the same band type.
  EXPECT_THROW(pretzel_diagram({3, 3}, {Band::Parallel, Band::Reverse}), PreconditionError);
  EXPECT_NO_THROW(pretzel_diagram({3, 3}, {Band::Parallel, Band::Parallel}));
}

TEST(Families, TorusClosure) {
  Diagram t = torus_closure(4);
  EXPECT_EQ(canonical_code(t), canonical_code(closure("2: 1 1 1 1")));
  EXPECT_EQ(component_count(t), 2);
}

TEST(Generators, PositiveAndAlmostPositive) {
  Diagram p = random_positive_diagram(1, 8);
  EXPECT_EQ(p.crossing_count(), 8);
  EXPECT_EQ(positivity_class(p), 0);
  EXPECT_TRUE(is_connected(p));
  EXPECT_TRUE(is_reduced(p));
  EXPECT_EQ(canonical_code(p), canonical_code(random_positive_diagram(1, 8)));

  for (bool flag : {true, false}) {
    for (std::uint64_t seed = 1; seed <= 15; ++seed) {
      Diagram a = random_almost_positive_diagram(seed, 8, flag);
      ASSERT_EQ(positivity_class(a), 1);
      EXPECT_TRUE(is_connected(a));
      EXPECT_TRUE(is_reduced(a));
      int x = negative_crossings(a)[0];
      EXPECT_EQ(!parallel_partners(seifert(a), x).empty(), flag);
    }
  }
  EXPECT_THROW(random_positive_diagram(1, 1), PreconditionError);
}

TEST(Json, RoundTrip) {
  Diagram d = closure("3: 1 -2 1 -2");
  Diagram e = diagram_from_json(to_json(d));
  EXPECT_EQ(canonical_code(d), canonical_code(e));
  EXPECT_EQ(to_json(d)["components"], 1);
}
