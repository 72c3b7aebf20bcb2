#include <gtest/gtest.h>

#include "kgrid/ktheory.hpp"
#include "support/oracles.hpp"

using kgrid::DoubleScaledGroup;
using kgrid::K0Class;
using kgrid::Matrix;
using kgrid::TroSpace;

TEST(K0Class, RankVectorOfProjection) {
  oracle::Random rng(2);
  const Matrix p = oracle::coordinate_projection(5, 3, rng);
  const Matrix q = oracle::coordinate_projection(2, 0, rng);
  const std::vector<Matrix> blocks{p, q};
  EXPECT_EQ(kgrid::k0_class_of_projection(blocks), (K0Class{{3, 0}}));

  // a non-diagonal projection: (1/2) [[1,1],[1,1]]
  const Matrix half = kgrid::Scalar::fraction(1, 2) * Matrix{{1, 1}, {1, 1}};
  const std::vector<Matrix> one{half};
  EXPECT_EQ(kgrid::k0_class_of_projection(one), (K0Class{{1}}));

  const std::vector<Matrix> bad{Matrix{{1, 1}, {0, 0}}};
  EXPECT_THROW(kgrid::k0_class_of_projection(bad), kgrid::NotProjectionError);
  const std::vector<Matrix> rect{Matrix(1, 2)};
  EXPECT_THROW(kgrid::k0_class_of_projection(rect), kgrid::NotProjectionError);
}

TEST(DoubleScaledGroup, ScalesAreBoxes) {
  const DoubleScaledGroup g = kgrid::double_scaled_group(TroSpace{{2, 3}, {1, 1}});
  EXPECT_EQ(g.k(), 2u);
  EXPECT_EQ(g.left_caps(), (std::vector<std::int64_t>{2, 1}));
  EXPECT_EQ(g.right_caps(), (std::vector<std::int64_t>{3, 1}));
  EXPECT_TRUE(g.in_left_scale(K0Class{{0, 0}}));
  EXPECT_TRUE(g.in_left_scale(K0Class{{2, 1}}));
  EXPECT_FALSE(g.in_left_scale(K0Class{{3, 0}}));
  EXPECT_TRUE(g.in_right_scale(K0Class{{3, 0}}));
  EXPECT_FALSE(g.in_positive_cone(K0Class{{-1, 0}}));
  EXPECT_EQ(g.left_top(), (K0Class{{2, 1}}));
  EXPECT_EQ(g.right_top(), (K0Class{{3, 1}}));
}

TEST(DoubleScaledGroup, IsomorphismIsCapPairMatching) {
  const auto a = kgrid::double_scaled_group(TroSpace{{2, 3}, {1, 4}});
  const auto b = kgrid::double_scaled_group(TroSpace{{1, 4}, {2, 3}});
  const auto perm = kgrid::dsg_isomorphic(a, b);
  ASSERT_TRUE(perm);
  EXPECT_EQ(*perm, (kgrid::SummandPermutation{1, 0}));
  EXPECT_EQ(kgrid::permute(a.left_top(), *perm), b.left_top());
  EXPECT_EQ(kgrid::permute(a.right_top(), *perm), b.right_top());
  EXPECT_EQ(kgrid::inverse(*perm), *perm);

  // equal left multisets and equal right multisets are not enough
  const auto c = kgrid::double_scaled_group(TroSpace{{2, 4}, {1, 3}});
  EXPECT_FALSE(kgrid::dsg_isomorphic(a, c));
}

TEST(DoubleScaledGroup, EqualLeftCapsDoNotSuffice) {
  const auto a = kgrid::double_scaled_group(TroSpace{{1, 2}, {2, 1}});
  const auto b = kgrid::double_scaled_group(TroSpace{{1, 1}, {2, 2}});
  EXPECT_EQ(a.left_caps(), b.left_caps());
  EXPECT_NE(a.right_caps(), b.right_caps());
  EXPECT_FALSE(kgrid::dsg_isomorphic(a, b));
}

TEST(DoubleScaledGroup, DirectSumConcatenates) {
  const auto a = kgrid::double_scaled_group(TroSpace{{2, 3}});
  const auto b = kgrid::double_scaled_group(TroSpace{{1, 1}});
  EXPECT_EQ(a + b, kgrid::double_scaled_group(TroSpace{{2, 3}, {1, 1}}));
  EXPECT_THROW(DoubleScaledGroup({1}, {0}), kgrid::DimensionError);
}

TEST(Functoriality, K0OfHomIsMultiplicity) {
  const TroSpace src{{1, 1}, {2, 1}};
  const TroSpace dst{{4, 3}};
  const kgrid::IntMatrix m{{2, 1}};
  const auto h = kgrid::lift_hom(m, src, dst);
  EXPECT_EQ(kgrid::k0_of_hom(h), m);
  EXPECT_EQ(kgrid::apply(m, K0Class{{1, 2}}), (K0Class{{4}}));
  EXPECT_EQ(kgrid::morita_transport(K0Class{{1, 2}}), (K0Class{{1, 2}}));
}
