#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "quandle/constructors.hpp"
#include "quandle/errors.hpp"
#include "quandle/fixtures.hpp"
#include "quandle/rack.hpp"

using namespace quandle;

namespace {

Permutation random_perm(std::size_t n, std::mt19937& rng) {
  std::vector<Point> img(n);
  std::iota(img.begin(), img.end(), Point{0});
  std::shuffle(img.begin(), img.end(), rng);
  return Permutation::from_images(img);
}

}  // namespace

TEST(Validate, TrivialAndDihedral) {
  EXPECT_EQ(trivial_quandle(3).kind(), RackKind::quandle);
  EXPECT_EQ(dihedral_quandle(5).kind(), RackKind::quandle);
  EXPECT_EQ(cyclic_rack(3).kind(), RackKind::rack);
}

TEST(Validate, DuplicateImageNamesA2) {
  auto X = RackTable::from_rows({{0, 0}, {0, 1}});
  EXPECT_EQ(X.kind(), RackKind::not_a_rack);
  const auto& d = X.diagnosis();
  ASSERT_GE(d.count(Axiom::a2), 1u);
  auto it = std::find_if(d.witnesses.begin(), d.witnesses.end(), [](const auto& w) { return w.axiom == Axiom::a2; });
  ASSERT_NE(it, d.witnesses.end());
  EXPECT_EQ(it->tuple[0], 0u);
  EXPECT_NE(it->describe().find("row 1"), std::string::npos);
  EXPECT_THROW(phi(X, 0), PreconditionError);
}

TEST(Validate, SelfDistributivityFailure) {
  // Rows are permutations but x|>(y|>z) = (x|>y)|>(x|>z) fails.
  auto X = RackTable::from_rows({{1, 0, 2}, {0, 2, 1}, {0, 1, 2}});
  EXPECT_EQ(X.kind(), RackKind::not_a_rack);
  EXPECT_GE(X.diagnosis().count(Axiom::a1), 1u);
  EXPECT_EQ(X.diagnosis().count(Axiom::a2), 0u);
}

TEST(Validate, WitnessLimitKeepsCount) {
  std::vector<Point> flat(36, 0);
  auto d = validate(6, flat, 3);
  EXPECT_EQ(d.witnesses.size(), 3u);
  EXPECT_GT(d.total_violations, 3u);
}

TEST(Validate, OutOfRangeEntryThrows) {
  EXPECT_THROW(RackTable::from_table(2, {0, 1, 2, 0}), Error);
  EXPECT_THROW(RackTable::from_table(2, {0, 1, 1}), Error);
}

TEST(Phi, RowsOfTable) {
  auto X = dihedral_quandle(3);
  auto p = phi(X, 0);
  for (Point y = 0; y < 3; ++y) EXPECT_EQ(p(y), X(0, y));
  EXPECT_EQ(from_permutation_rows(phis(X)), X);
}

TEST(Phi, TranslationRelation) {
  // phi_x phi_y = phi_{x|>y} phi_x on every catalog rack.
  for (const auto& [name, X] : standard_catalog()) {
    for (Point x = 0; x < X.size(); ++x) {
      for (Point y = 0; y < X.size(); ++y) {
        EXPECT_EQ(compose(phi(X, x), phi(X, y)), compose(phi(X, X(x, y)), phi(X, x))) << name;
      }
    }
  }
}

TEST(Fixture, IsQuandleOfOrder12) {
  auto X = smallquandle_12_4();
  EXPECT_EQ(X.size(), 12u);
  EXPECT_TRUE(X.is_quandle());
  EXPECT_EQ(to_cycle_string(phi(X, 0)), "(1)(2,4,3)(5,9)(6,12,7,10,8,11)");
}

TEST(Isomorphism, ReflexiveAndRelabel) {
  std::mt19937 rng(31);
  for (const auto& [name, X] : standard_catalog()) {
    auto self = is_isomorphic(X, X);
    ASSERT_TRUE(self.found) << name;
    EXPECT_TRUE(is_homomorphism(X, X, *self.bijection)) << name;
    auto f = random_perm(X.size(), rng);
    auto Y = relabel(X, f);
    EXPECT_TRUE(Y.is_rack());
    for (Point x = 0; x < X.size(); ++x) {
      for (Point y = 0; y < X.size(); ++y) EXPECT_EQ(Y(f(x), f(y)), f(X(x, y)));
    }
    auto xy = is_isomorphic(X, Y);
    auto yx = is_isomorphic(Y, X);
    ASSERT_TRUE(xy.found) << name;
    EXPECT_TRUE(yx.found) << name;
    EXPECT_TRUE(is_homomorphism(X, Y, *xy.bijection)) << name;
    EXPECT_EQ(fingerprint(X), fingerprint(Y)) << name;
  }
}

TEST(Isomorphism, DistinguishesNonIsomorphic) {
  EXPECT_FALSE(is_isomorphic(trivial_quandle(3), dihedral_quandle(3)).found);
  EXPECT_FALSE(is_isomorphic(trivial_quandle(3), trivial_quandle(4)).found);
  auto a = affine_quandle(AffineSpec::cyclic(5, 2)).rack;
  auto b = affine_quandle(AffineSpec::cyclic(5, 3)).rack;
  auto c = affine_quandle(AffineSpec::cyclic(5, 4)).rack;
  // Distinct multipliers give distinct affine quandles over Z_5.
  EXPECT_FALSE(is_isomorphic(a, b).found);
  EXPECT_FALSE(is_isomorphic(b, c).found);
  EXPECT_FALSE(is_isomorphic(a, c).found);
  EXPECT_TRUE(is_isomorphic(c, dihedral_quandle(5)).found);
}

TEST(Fingerprint, Format) {
  EXPECT_EQ(fingerprint(trivial_quandle(2)), "n=2 phi={1^2 idem; 1^2 idem} orbits={1,1}");
}
