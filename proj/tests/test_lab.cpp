#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>

#include "knotlab/knotlab.hpp"

using namespace knotlab;
using namespace knotlab::lab;

namespace {

Diagram closure(const std::string& w) { return braid_closure(parse_braid(w)); }

const Verdict* find_verdict(const InvariantReport& r, const std::string& id) {
  for (const auto& v : r.verdicts)
    if (v.id == id) return &v;
  return nullptr;
}

SuiteOptions quick() {
  SuiteOptions o;
  o.max_crossings = 9;
  o.n_max = 3;
  o.threads = 2;
  return o;
}

}  // namespace

TEST(Input, Forms) {
  Input b = parse_input("2: 1 1 1");
  EXPECT_EQ(b.diagram.crossing_count(), 3);
  ASSERT_TRUE(b.braid.has_value());

  Input p = parse_input("X[4,2,5,1] X[2,6,3,5] X[6,4,1,3]");
  EXPECT_EQ(p.diagram.crossing_count(), 3);
  EXPECT_FALSE(p.braid.has_value());

  Input jb = parse_input(R"({"braid": "3: 1 -2 1 -2"})");
  EXPECT_EQ(jb.diagram.crossing_count(), 4);
  Input jp = parse_input(R"({"pd": "X[4,2,5,1] X[2,6,3,5] X[6,4,1,3]"})");
  EXPECT_EQ(jp.diagram.crossing_count(), 3);
  Input jd = parse_input(to_json(closure("2: 1 1 1 1")).dump());
  EXPECT_EQ(canonical_code(jd.diagram), canonical_code(closure("2: 1 1 1 1")));

  Input c = parse_input("braid19");
  ASSERT_TRUE(c.entry.has_value());
  EXPECT_EQ(c.diagram.crossing_count(), 19);
  Input l = parse_input("L3");
  EXPECT_EQ(l.diagram.crossing_count(), 10);
  EXPECT_FALSE(l.braid.has_value());
}

TEST(Input, FromFile) {
  std::string path = ::testing::TempDir() + "knotlab_input.txt";
  {
    std::ofstream f(path);
    f << "X[4,2,5,1] X[2,6,3,5] X[6,4,1,3]\n";
  }
  Input in = parse_input(path);
  EXPECT_EQ(in.diagram.crossing_count(), 3);
  EXPECT_NE(in.description.find("file"), std::string::npos);
  std::remove(path.c_str());
}

TEST(Input, Errors) {
  EXPECT_THROW(parse_input("no-such-thing"), ParseError);
  EXPECT_THROW(parse_input("2: 1 x"), ParseError);
  EXPECT_THROW(parse_input("{not json"), ParseError);
  EXPECT_THROW(parse_input("X[1,2,1,2]"), ParseError);
}

TEST(Report, Trefoil) {
  InvariantReport r = invariants(parse_input("2: 1 1 1"));
  EXPECT_EQ(r.crossings, 3);
  EXPECT_EQ(r.seifert_circles, 2);
  EXPECT_EQ(r.euler, -1);
  EXPECT_EQ(r.bennequin, 2);
  ASSERT_TRUE(r.prime_factors.has_value());
  EXPECT_EQ(*r.prime_factors, 1);
  EXPECT_EQ(r.jones, "t + t^3 - t^4");
  EXPECT_EQ(r.alexander_symmetric, "t^(-1) - 1 + t");
  ASSERT_EQ(r.arborescences.size(), 1u);
  EXPECT_EQ(r.arborescences[0], std::optional<std::string>("1"));
  EXPECT_TRUE(r.ok());
  const Verdict* j = find_verdict(r, "jones-oracle");
  ASSERT_NE(j, nullptr);
  EXPECT_EQ(j->status, Status::Pass);
  const Verdict* ap = find_verdict(r, "almost-positive-jones-leading");
  ASSERT_NE(ap, nullptr);
  EXPECT_EQ(ap->status, Status::NotApplicable);

  nlohmann::json js = to_json(r);
  EXPECT_EQ(js["schema"], kSchemaVersion);
  EXPECT_EQ(js["diagram"]["crossings"], 3);
  EXPECT_EQ(js["polynomials"]["jones"], "t + t^3 - t^4");
  EXPECT_TRUE(js["ok"].get<bool>());
  std::string text = to_text(r);
  EXPECT_NE(text.find("V: t + t^3 - t^4"), std::string::npos);
}

TEST(Report, AlmostPositiveDemo) {
  InvariantReport r = invariants(parse_input("2: -1 1 1 1 1"));
  EXPECT_EQ(r.positivity_class, 1);
  const Verdict* ap = find_verdict(r, "almost-positive-jones-leading");
  ASSERT_NE(ap, nullptr);
  EXPECT_EQ(ap->status, Status::Pass);
  EXPECT_NE(ap->detail.find("swapped reading predicts t^2"), std::string::npos) << ap->detail;
  EXPECT_TRUE(r.ok());
}

TEST(Report, AboveCapSkipsBracket) {
  ReportOptions o;
  o.state_cap = 5;
  InvariantReport r = invariants(parse_input("3: 1 2 1 2 1 2"), o);
  EXPECT_FALSE(r.bracket.has_value());
  EXPECT_EQ(find_verdict(r, "jones-oracle")->status, Status::NotApplicable);
}

TEST(Report, CatalogLabelRunsEntry) {
  InvariantReport r = invariants(parse_input("L3"));
  ASSERT_EQ(r.catalog.size(), 1u);
  EXPECT_TRUE(r.catalog[0].ok());
  EXPECT_TRUE(r.ok());
}

TEST(Checks, OneMinusChiOfLink) {
  EXPECT_EQ(one_minus_chi_link(closure("2: 1 1 1")), 2);
  // The negative crossing has parallel partners: the surface loses two.
  EXPECT_EQ(one_minus_chi_link(closure("2: -1 1 1 1 1")), 2);
  EXPECT_EQ(one_minus_chi_link(closure("3: -1 2 2 2")), std::nullopt);  // not reduced
  EXPECT_EQ(one_minus_chi_link(mirror(closure("2: 1 1 1"))), std::nullopt);
}

TEST(Checks, FailingVerdicts) {
  LaurentPoly1 a = poly_t({{Exp4::whole(1), 1}});
  LaurentPoly1 b = poly_t({{Exp4::whole(2), 1}});
  EXPECT_EQ(check_jones_oracle(a, b).status, Status::Fail);
  EXPECT_EQ(check_jones_oracle(a, a).status, Status::Pass);
  EXPECT_EQ(check_jones_oracle(std::nullopt, a).status, Status::NotApplicable);
  // A wrong polynomial makes the low-coefficient check fail.
  Diagram t = closure("2: 1 1 1");
  EXPECT_EQ(check_positive_low(t, jones(t)).status, Status::Pass);
  EXPECT_EQ(check_positive_low(t, b).status, Status::Fail);
  EXPECT_EQ(check_positive_second(t, b + jones(t)).status, Status::Fail);
}

TEST(Catalog, Entries) {
  auto all = catalog();
  EXPECT_EQ(all.size(), 6u);
  for (const auto& e : all) {
    EXPECT_FALSE(e.expected.empty());
    if (!e.bands.empty()) {
      EXPECT_GT(band_count(e), 0);
    }
  }
  auto b19 = find_entry("braid19");
  ASSERT_TRUE(b19.has_value());
  EXPECT_EQ(band_count(*b19), 7);
  EXPECT_FALSE(find_entry("nothing").has_value());

  CatalogEntry bad = *b19;
  bad.bands.pop_back();
  EXPECT_THROW(band_count(bad), PreconditionError);
  bad.bands = {"2 3 2"};
  EXPECT_THROW(band_count(bad), PreconditionError);
}

TEST(Catalog, PretzelEntryRuns) {
  CatalogRun r = run_entry(*find_entry("L4"));
  EXPECT_TRUE(r.ok());
  EXPECT_TRUE(r.bracket_checked);
  EXPECT_TRUE(r.bracket_agrees);
  nlohmann::json j = to_json(r);
  EXPECT_EQ(j["label"], "L4");
}

TEST(Suites, ListAndUnknown) {
  auto list = suite_list();
  EXPECT_EQ(list.size(), 9u);
  EXPECT_THROW(run_suite("nope", 1, 1), PreconditionError);
}

TEST(Suites, EverySuiteRunsClean) {
  for (const auto& s : suite_list()) {
    SuiteResult r = run_suite(s.id, 1, 12, quick());
    EXPECT_TRUE(r.ok()) << s.id << ": " << to_json(r).dump();
    EXPECT_GT(r.passes, 0) << s.id;
    EXPECT_EQ(r.passes + r.not_applicable + static_cast<int>(r.failures.size()), r.trials);
  }
}

TEST(Suites, DeterministicAcrossThreadCounts) {
  SuiteOptions one = quick(), many = quick();
  one.threads = 1;
  many.threads = 4;
  SuiteResult a = run_suite("fiber-shape", 7, 15, one);
  SuiteResult b = run_suite("fiber-shape", 7, 15, many);
  EXPECT_EQ(a.passes, b.passes);
  EXPECT_EQ(a.counters, b.counters);
}

TEST(Suites, FailuresAreRecordedWithSeed) {
  auto fn = [](std::uint64_t s) {
    CaseOutcome c;
    c.verdicts.push_back(lab::detail::judge("parity", s % 2 == 0, "seed " + std::to_string(s)));
    return c;
  };
  SuiteResult r = run_cases("parity", 10, 4, fn, {}, 2);
  EXPECT_EQ(r.passes, 2);
  ASSERT_EQ(r.failures.size(), 2u);
  EXPECT_EQ(r.failures[0].seed, 11u);
  EXPECT_EQ(r.failures[1].seed, 13u);
  EXPECT_FALSE(r.ok());

  auto boom = [](std::uint64_t) -> CaseOutcome { throw PreconditionError("boom"); };
  SuiteResult e = run_cases("boom", 1, 1, boom, {}, 1);
  ASSERT_EQ(e.failures.size(), 1u);
  EXPECT_NE(e.failures[0].detail.find("boom"), std::string::npos);
}
