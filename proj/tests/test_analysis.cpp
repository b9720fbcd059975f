#include <gtest/gtest.h>

#include <algorithm>

#include "quandle/analysis.hpp"
#include "quandle/constructors.hpp"
#include "quandle/errors.hpp"
#include "quandle/fixtures.hpp"

using namespace quandle;

TEST(InnerGroup, FixtureOrders) {
  auto X = smallquandle_12_4();
  auto inn = inner_group(X);
  EXPECT_EQ(inn.order(), 72u);
  EXPECT_TRUE(is_transitive(inn));
  EXPECT_TRUE(center_check(X));
}

TEST(InnerGroup, DihedralAndTrivial) {
  EXPECT_EQ(inner_group(dihedral_quandle(3)).order(), 6u);
  EXPECT_EQ(inner_group(trivial_quandle(4)).order(), 1u);
}

TEST(AutomorphismGroup, ContainsInner) {
  auto X = dihedral_quandle(5);
  auto aut = automorphism_group(X);
  EXPECT_EQ(aut.order(), 20u);
  EXPECT_EQ(automorphism_group(trivial_quandle(3)).order(), 6u);
  EXPECT_THROW(automorphism_group(trivial_quandle(20)), BoundExceeded);
}

TEST(Connected, Instances) {
  EXPECT_TRUE(is_connected(smallquandle_12_4()));
  EXPECT_TRUE(is_connected(dihedral_quandle(3)));
  EXPECT_FALSE(is_connected(dihedral_quandle(4)));
  EXPECT_FALSE(is_connected(trivial_quandle(2)));
  EXPECT_TRUE(is_connected(trivial_quandle(1)));
  EXPECT_TRUE(is_connected(cyclic_rack(4)));
}

TEST(Fibers, FaithfulAndNot) {
  auto fp = fibers(smallquandle_12_4());
  EXPECT_EQ(fp.fibers.size(), 12u);
  EXPECT_EQ(fp.f, 1u);
  auto cr = fibers(cyclic_rack(4));
  EXPECT_EQ(cr.fibers.size(), 1u);
  EXPECT_EQ(cr.f, 4u);
  EXPECT_FALSE(is_faithful(trivial_quandle(3)));
}

TEST(Fibers, UniformOnConnectedCatalog) {
  for (const auto& [name, X] : standard_catalog()) {
    if (!is_connected(X)) continue;
    auto fp = fibers(X);
    EXPECT_TRUE(fp.f.has_value()) << name;
  }
}

TEST(Profile, Fixture) {
  EXPECT_EQ(profile(smallquandle_12_4()).to_string(), "1^1 2^1 3^1 6^1");
  EXPECT_EQ(profile(dihedral_quandle(3)).to_string(), "1^1 2^1");
  EXPECT_EQ(profile(cyclic_rack(3)).to_string(), "3^1");
  EXPECT_THROW(profile(trivial_quandle(2)), PreconditionError);
}

TEST(LambdaPart, FixtureTwoPart) {
  auto lp = lambda_part(smallquandle_12_4(), 2);
  EXPECT_EQ(lp.multiset.size(), 24u);
  EXPECT_EQ(lp.expected_count, 2u);
  EXPECT_TRUE(std::all_of(lp.counts.begin(), lp.counts.end(), [](auto c) { return c == 2; }));
  EXPECT_THROW(lambda_part(smallquandle_12_4(), 4), PreconditionError);
}

TEST(LambdaPart, CountLawOnCatalog) {
  for (const auto& [name, X] : standard_catalog()) {
    if (!is_connected(X)) continue;
    for (auto len : profile(X).lengths()) EXPECT_NO_THROW(lambda_part(X, len)) << name;
  }
}

TEST(OrbitDivisibility, FixturePair) {
  auto X = smallquandle_12_4();
  auto os = orbit_divisibility(X, 0, 4);
  EXPECT_EQ(os.lambda, 2u);
  EXPECT_EQ(os.lambda_bar, 2u);
}

TEST(OrbitDivisibility, AllPairsOnCatalog) {
  for (const auto& [name, X] : standard_catalog()) {
    for (Point x = 0; x < X.size(); ++x) {
      for (Point y = 0; y < X.size(); ++y) {
        auto os = orbit_divisibility(X, x, y);
        EXPECT_EQ(os.lambda % os.lambda_bar, 0u) << name;
      }
    }
  }
}

TEST(Primitivity, FixtureIsImprimitive) {
  auto v = inner_action_primitivity(smallquandle_12_4());
  EXPECT_FALSE(v.primitive);
  ASSERT_TRUE(v.witness_blocks);
  EXPECT_EQ(v.witness_blocks->cells,
            (std::vector<std::vector<Point>>{{0, 4, 8}, {1, 5, 9}, {2, 6, 10}, {3, 7, 11}}));
  EXPECT_TRUE(is_block(inner_group(smallquandle_12_4()), *v.witness_blocks));
}

TEST(Primitivity, MinimalBlocksOfFixture) {
  auto g = inner_group(smallquandle_12_4());
  for (Point b = 1; b < 12; ++b) {
    auto blk = minimal_block(g, 0, b);
    if (b == 4 || b == 8) {
      EXPECT_EQ(blk, (std::vector<Point>{0, 4, 8}));
    } else if (b <= 3) {
      EXPECT_EQ(blk, (std::vector<Point>{0, 1, 2, 3}));
    } else {
      EXPECT_EQ(blk.size(), 12u);
    }
  }
}

TEST(Primitivity, PrimeDihedralIsPrimitive) {
  EXPECT_TRUE(inner_action_primitivity(dihedral_quandle(5)).primitive);
  EXPECT_TRUE(inner_action_primitivity(dihedral_quandle(3)).primitive);
  EXPECT_FALSE(inner_action_primitivity(dihedral_quandle(9)).primitive);
}

TEST(Center, FaithfulImpliesTrivialCenter) {
  for (const auto& [name, X] : standard_catalog()) {
    if (!is_faithful(X)) continue;
    EXPECT_TRUE(center_check(X)) << name;
  }
  EXPECT_THROW(center_check(trivial_quandle(2)), PreconditionError);
}

TEST(QuotientCheck, TranspositionsOfS3) {
  auto s3 = PermutationGroup::symmetric(3);
  auto cq = conjugacy_class_quandle(s3, parse_cycles("(1,2)", 3));
  auto q = conjugation_rack_quotient_check(cq.labels);
  EXPECT_EQ(q.inner_order, 6u);
  EXPECT_EQ(q.group_order, 6u);
  EXPECT_EQ(q.center_order, 1u);
  EXPECT_TRUE(q.holds);
}

TEST(QuotientCheck, DoubleTranspositionsOfS4) {
  auto s4 = PermutationGroup::symmetric(4);
  auto cq = conjugacy_class_quandle(s4, parse_cycles("(1,2)(3,4)", 4));
  auto q = conjugation_rack_quotient_check(cq.labels);
  EXPECT_EQ(q.inner_order, 1u);
  EXPECT_EQ(q.group_order, 4u);
  EXPECT_EQ(q.center_order, 4u);
  EXPECT_TRUE(q.holds);
}

TEST(Covariance, InnerGeneratorsOnCatalog) {
  for (const auto& [name, X] : standard_catalog()) {
    EXPECT_TRUE(conjugation_covariance(X, inner_group(X).action_generators())) << name;
  }
  // A non-automorphism breaks it.
  auto X = dihedral_quandle(4);
  EXPECT_FALSE(conjugation_covariance(X, {parse_cycles("(1,2)", 4)}));
}

TEST(KTilde, FixtureDiagnostic) {
  auto X = smallquandle_12_4();
  for (Point x = 0; x < 12; ++x) {
    EXPECT_EQ(k_tilde_part(phi(X, x), 2).size(), 3u);
    EXPECT_EQ(k_tilde_part(phi(X, x), 3).size(), 4u);
  }
  auto diag = k_tilde_block_diagnostic(X);
  ASSERT_EQ(diag.size(), 2u);
  EXPECT_EQ(diag[0].k, 2u);
  EXPECT_TRUE(diag[0].forms_partition);
  EXPECT_TRUE(diag[0].is_block);
  EXPECT_EQ(diag[0].cells.size(), 4u);
}
