#include <gtest/gtest.h>

#include "quandle/conjecture.hpp"
#include "quandle/errors.hpp"
#include "quandle/fixtures.hpp"

using namespace quandle;

TEST(Hayashi, Verdicts) {
  EXPECT_TRUE(hayashi_check(Profile{CycleType::from_lengths({1, 2, 3, 6})}).holds);
  auto bad = hayashi_check(Profile{CycleType::from_lengths({1, 2, 3})});
  EXPECT_FALSE(bad.holds);
  ASSERT_EQ(bad.violations.size(), 1u);
  EXPECT_EQ(bad.violations[0], (std::pair<std::size_t, std::size_t>{2, 3}));
}

TEST(PropRe, FixtureEvidence) {
  auto ev = prop_re_evidence(smallquandle_12_4(), 0);
  EXPECT_EQ(ev.f_order, 6u);
  EXPECT_EQ(ev.h_order, 6u);
  std::vector<std::size_t> orders;
  for (const auto& w : ev.witnesses) orders.push_back(w.intersection_order);
  EXPECT_EQ(orders, (std::vector<std::size_t>{6, 2, 2, 2, 3, 1, 1, 1, 3, 1, 1, 1}));
  ASSERT_TRUE(ev.trivial_witness);
  EXPECT_EQ(*ev.trivial_witness, 5u);
}

TEST(PropRe, NeedsConnected) {
  EXPECT_THROW(prop_re_evidence(trivial_quandle(2), 0), PreconditionError);
}

TEST(PropRe, BothDirectionsOnCatalog) {
  for (const auto& [name, X] : standard_catalog()) {
    if (!is_connected(X)) continue;
    for (Point x = 0; x < X.size(); ++x) {
      auto c = prop_re_crosscheck(X, x);
      EXPECT_TRUE(c.forward_ok) << name;
      EXPECT_TRUE(c.converse_ok) << name;
    }
  }
}

TEST(TheoremPrim, FixtureVacuous) {
  EXPECT_EQ(theorem_prim_check(smallquandle_12_4()), PrimCheck::vacuous_imprimitive);
  EXPECT_EQ(theorem_prim_check(dihedral_quandle(7)), PrimCheck::holds);
}

TEST(TheoremSym, DegreesThreeToSix) {
  for (std::size_t d = 3; d <= 6; ++d) {
    for (const auto& r : theorem_sym_check(d)) {
      if (!r.record.connected) continue;
      EXPECT_TRUE(r.hayashi->holds);
      EXPECT_TRUE(r.trivial_witness.has_value()) << d << " " << r.record.cycle_type.to_string();
    }
  }
}

TEST(TheoremSym, AlternatingDegreeFive) {
  auto recs = alternating_check(5);
  EXPECT_EQ(recs.size(), 4u);
  for (const auto& r : recs) {
    EXPECT_TRUE(r.record.connected);
    EXPECT_TRUE(r.hayashi->holds);
  }
}

TEST(FullReport, Fixture) {
  auto r = full_report(smallquandle_12_4());
  EXPECT_EQ(r.kind, RackKind::quandle);
  EXPECT_EQ(r.connected, true);
  EXPECT_EQ(r.faithful, true);
  EXPECT_EQ(r.f, 1u);
  EXPECT_EQ(r.profile->to_string(), "1^1 2^1 3^1 6^1");
  EXPECT_EQ(r.primitive, false);
  EXPECT_TRUE(r.hayashi->holds);
  EXPECT_EQ(r.center_trivial, true);
  EXPECT_EQ(r.exit_code(), ExitCode::ok);
  EXPECT_TRUE(r.skipped.empty());
}

TEST(FullReport, NotConnectedSkipsSections) {
  auto r = full_report(trivial_quandle(2));
  EXPECT_EQ(r.connected, false);
  EXPECT_FALSE(r.profile);
  EXPECT_FALSE(r.hayashi);
  EXPECT_EQ(r.exit_code(), ExitCode::ok);
}

TEST(FullReport, RackWithLargeFixedLength) {
  auto r = full_report(cyclic_rack(3));
  EXPECT_EQ(r.kind, RackKind::rack);
  EXPECT_TRUE(r.lambda0_above_one);
  EXPECT_TRUE(r.hayashi->holds);
}

TEST(FullReport, CapSkipsGroupSections) {
  auto r = full_report(smallquandle_12_4(), 10);
  EXPECT_FALSE(r.prop_re);
  bool skipped = false;
  for (const auto& [field, why] : r.skipped) skipped = skipped || field == "prop_re";
  EXPECT_TRUE(skipped);
  EXPECT_TRUE(r.profile);
}

TEST(FullReport, NotARack) {
  auto r = full_report(RackTable::from_rows({{0, 0}, {0, 1}}));
  EXPECT_EQ(r.kind, RackKind::not_a_rack);
  EXPECT_GT(r.violations, 0u);
  EXPECT_FALSE(r.connected);
}
