#include <gtest/gtest.h>

#include <random>

#include "quandle/analysis.hpp"
#include "quandle/constructors.hpp"
#include "quandle/errors.hpp"

using namespace quandle;

TEST(ClassQuandle, TranspositionsOfS3) {
  auto cq = conjugacy_class_quandle(PermutationGroup::symmetric(3), parse_cycles("(1,2)", 3));
  ASSERT_EQ(cq.labels.size(), 3u);
  EXPECT_EQ(to_image_list(cq.labels[0]), "1 3 2");
  EXPECT_EQ(to_image_list(cq.labels[1]), "2 1 3");
  EXPECT_EQ(to_image_list(cq.labels[2]), "3 2 1");
  EXPECT_EQ(cq.rack, RackTable::from_rows({{0, 2, 1}, {2, 1, 0}, {1, 0, 2}}));
  EXPECT_EQ(inner_group(cq.rack).order(), 6u);
}

TEST(ClassQuandle, S4TranspositionsImprimitive) {
  auto cq = conjugacy_class_quandle(PermutationGroup::symmetric(4), parse_cycles("(1,2)", 4));
  EXPECT_TRUE(is_connected(cq.rack));
  auto v = inner_action_primitivity(cq.rack);
  EXPECT_FALSE(v.primitive);
  ASSERT_TRUE(v.witness_blocks);
  EXPECT_EQ(v.witness_blocks->cells, (std::vector<std::vector<Point>>{{0, 3}, {1, 5}, {2, 4}}));
}

TEST(ClassQuandle, DegreeMismatch) {
  EXPECT_THROW(conjugacy_class_quandle(PermutationGroup::symmetric(3), Permutation(4)), DegreeMismatch);
}

TEST(ClassScan, SymmetricSmallDegrees) {
  auto d3 = symmetric_class_scan(3);
  ASSERT_EQ(d3.size(), 2u);
  EXPECT_EQ(d3[0].class_size, 2u);
  EXPECT_FALSE(d3[0].connected);
  EXPECT_TRUE(d3[1].connected);

  auto d4 = symmetric_class_scan(4);
  ASSERT_EQ(d4.size(), 4u);
  std::vector<std::size_t> sizes, connected;
  for (const auto& r : d4) {
    sizes.push_back(r.class_size);
    connected.push_back(r.connected);
  }
  EXPECT_EQ(sizes, (std::vector<std::size_t>{6, 8, 3, 6}));
  EXPECT_EQ(connected, (std::vector<std::size_t>{1, 0, 0, 1}));
  EXPECT_EQ(d4[0].profile->to_string(), "1^2 4^1");
  EXPECT_EQ(d4[3].profile->to_string(), "1^2 2^2");
}

TEST(ClassScan, SymmetricDegreeFive) {
  auto d5 = symmetric_class_scan(5);
  ASSERT_EQ(d5.size(), 6u);
  EXPECT_FALSE(d5[0].connected);
  EXPECT_EQ(d5[1].profile->to_string(), "1^2 4^7");
  EXPECT_EQ(d5[2].profile->to_string(), "1^2 6^3");
  EXPECT_EQ(d5[3].profile->to_string(), "1^2 3^6");
  EXPECT_EQ(d5[4].profile->to_string(), "1^3 2^6");
  EXPECT_EQ(d5[5].profile->to_string(), "1^4 2^3");
}

TEST(ClassScan, BoundEnforced) {
  EXPECT_THROW(symmetric_class_scan(8), BoundExceeded);
  EXPECT_THROW(alternating_class_scan(9, 8), BoundExceeded);
}

TEST(ClassScan, AlternatingSplits) {
  auto a4 = alternating_class_scan(4);
  ASSERT_EQ(a4.size(), 3u);
  EXPECT_TRUE(a4[0].split);
  EXPECT_EQ(a4[0].class_size, 4u);
  EXPECT_EQ(a4[1].class_size, 4u);
  EXPECT_EQ(a4[2].class_size, 3u);
  EXPECT_FALSE(a4[2].split);

  auto a5 = alternating_class_scan(5);
  std::size_t split_fives = 0;
  for (const auto& r : a5) {
    if (r.cycle_type.to_string() == "5^1") {
      EXPECT_TRUE(r.split);
      EXPECT_EQ(r.class_size, 12u);
      ++split_fives;
    }
    if (r.cycle_type.to_string() == "1^2 3^1") {
      EXPECT_EQ(r.class_size, 20u);
    }
    if (r.cycle_type.to_string() == "1^1 2^2") {
      EXPECT_EQ(r.class_size, 15u);
    }
  }
  EXPECT_EQ(split_fives, 2u);
}

TEST(Affine, CyclicFive) {
  auto q = affine_quandle(AffineSpec::cyclic(5, 2));
  EXPECT_TRUE(q.beta_bijective);
  EXPECT_TRUE(is_connected(q.rack));
  EXPECT_EQ(profile(q.rack).to_string(), "1^1 4^1");
}

TEST(Affine, KleinSwapNotConnected) {
  auto q = affine_quandle(AffineSpec::from_generator_images({2, 2}, {{0, 1}, {1, 0}}));
  EXPECT_FALSE(q.beta_bijective);
  EXPECT_FALSE(is_connected(q.rack));
}

TEST(Affine, RejectsNonAutomorphism) {
  EXPECT_THROW(affine_quandle(AffineSpec::cyclic(4, 2)), PreconditionError);
  EXPECT_THROW(AffineSpec::from_generator_images({2, 3}, {{0, 1}, {1, 0}}), PreconditionError);
}

TEST(Affine, RandomSpecsBetaMatchesOrbits) {
  std::mt19937 rng(5);
  std::size_t tried = 0;
  while (tried < 40) {
    std::size_t n = 2 + rng() % 11;
    std::size_t m = rng() % n;
    AffineQuandle q;
    try {
      q = affine_quandle(AffineSpec::cyclic(n, m));
    } catch (const PreconditionError&) {
      continue;
    }
    EXPECT_EQ(q.beta_bijective, is_connected(q.rack)) << n << " " << m;
    ++tried;
  }
}

TEST(Homogeneous, S3OverTransposition) {
  auto s3 = PermutationGroup::symmetric(3).elements();
  auto t = parse_cycles("(1,2)", 3);
  auto spec = HomogeneousSpec::from_function(s3, {t}, [&](const Permutation& g) { return conjugate(t, g); });
  auto X = homogeneous_quandle(spec);
  EXPECT_EQ(X.size(), 3u);
  EXPECT_TRUE(X.is_quandle());
  EXPECT_TRUE(is_isomorphic(X, dihedral_quandle(3)).found);
}

TEST(Homogeneous, RejectsAlphaMovingSubgroup) {
  auto s3 = PermutationGroup::symmetric(3).elements();
  auto c = parse_cycles("(1,2,3)", 3);
  auto spec = HomogeneousSpec::from_function(s3, {parse_cycles("(1,2)", 3)},
                                             [&](const Permutation& g) { return conjugate(c, g); });
  EXPECT_THROW(homogeneous_quandle(spec), PreconditionError);
}

TEST(Enumeration, CountsMatchOracle) {
  const std::vector<std::size_t> expected{1, 0, 1, 1, 3, 2};
  for (std::size_t n = 1; n <= 6; ++n) {
    EXPECT_EQ(enumerate_connected_quandles(n).size(), expected[n - 1]) << n;
  }
}

TEST(Enumeration, RepresentativesAreConnectedAndDistinct) {
  auto q5 = enumerate_connected_quandles(5);
  for (std::size_t i = 0; i < q5.size(); ++i) {
    EXPECT_TRUE(q5[i].is_quandle());
    EXPECT_TRUE(is_connected(q5[i]));
    for (std::size_t j = i + 1; j < q5.size(); ++j) EXPECT_FALSE(is_isomorphic(q5[i], q5[j]).found);
  }
}

TEST(Enumeration, ThreadsDoNotChangeResult) {
  EnumerationOptions one, four;
  four.threads = 4;
  EXPECT_EQ(enumerate_connected(6, one), enumerate_connected(6, four));
}

TEST(Enumeration, RacksIncludeCyclic) {
  EnumerationOptions opt;
  opt.quandles_only = false;
  auto r3 = enumerate_connected(3, opt);
  ASSERT_EQ(r3.size(), 2u);
  bool has_cyclic = false;
  for (const auto& X : r3) has_cyclic = has_cyclic || is_isomorphic(X, cyclic_rack(3)).found;
  EXPECT_TRUE(has_cyclic);
}

TEST(Enumeration, BoundEnforced) { EXPECT_THROW(enumerate_connected_quandles(9), BoundExceeded); }
