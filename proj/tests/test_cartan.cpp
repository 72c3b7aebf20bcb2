#include <gtest/gtest.h>

#include "kgrid/cartan.hpp"
#include "kgrid/spin_system.hpp"
#include "support/oracles.hpp"

using kgrid::CartanDescriptor;
using kgrid::FactorKind;
using kgrid::Matrix;
using kgrid::Scalar;
using kgrid::TripleSpec;

TEST(Descriptor, ParseGrammar) {
  EXPECT_EQ(CartanDescriptor::parse("I(2,3)"), CartanDescriptor::rectangular(2, 3));
  EXPECT_EQ(CartanDescriptor::parse("IV(7)"), CartanDescriptor::spin(7));
  EXPECT_EQ(CartanDescriptor::parse("VI"), CartanDescriptor::exceptional_vi());
  const TripleSpec s = TripleSpec::parse(" I(2,3) +III(4)+ V ");
  ASSERT_EQ(s.factors.size(), 3u);
  EXPECT_EQ(s.to_string(), "I(2,3)+III(4)+V");
  EXPECT_EQ(TripleSpec::parse(s.to_string()), s);
}

TEST(Descriptor, ParseErrors) {
  for (const char* bad : {"", "I(2)", "I(2,3", "VII", "III(x)", "I(2,3)+", "I(2,3) III(4)"})
    EXPECT_THROW(TripleSpec::parse(bad), kgrid::ParseError) << bad;
  try {
    TripleSpec::parse("I(2,3)+Q");
    FAIL();
  } catch (const kgrid::ParseError& e) {
    EXPECT_EQ(e.position(), 7u);
  }
}

TEST(Descriptor, CoincidencesAreNamed) {
  try {
    CartanDescriptor::symplectic(4);
    FAIL();
  } catch (const kgrid::UnsupportedError& e) {
    EXPECT_NE(std::string(e.what()).find("IV(6)"), std::string::npos);
  }
  try {
    CartanDescriptor::spin(3);
    FAIL();
  } catch (const kgrid::UnsupportedError& e) {
    EXPECT_NE(std::string(e.what()).find("III(2)"), std::string::npos);
  }
  EXPECT_THROW(TripleSpec::parse("II(3)"), kgrid::UnsupportedError);
}

TEST(Descriptor, Canonicalize) {
  EXPECT_EQ(kgrid::canonicalize(CartanDescriptor::spin(4)), CartanDescriptor::rectangular(2, 2));
  EXPECT_EQ(kgrid::canonicalize(CartanDescriptor::rectangular(4, 2)), CartanDescriptor::rectangular(2, 4));
  EXPECT_EQ(kgrid::canonicalize(CartanDescriptor::hermitian(1)), CartanDescriptor::rectangular(1, 1));
  EXPECT_EQ(kgrid::canonicalize(TripleSpec::parse("III(4)+I(3,2)")),
            kgrid::canonicalize(TripleSpec::parse("I(2,3)+III(4)")));
}

TEST(Descriptor, CanonicalizeAgreesWithOracleKey) {
  for (const auto& d : oracle::sweep_catalog()) {
    const auto c = kgrid::canonicalize(d);
    EXPECT_EQ(oracle::factor_key(c), oracle::factor_key(d)) << d.to_string();
  }
}

TEST(EnvelopingTro, PerFactor) {
  EXPECT_EQ(kgrid::enveloping_tro(CartanDescriptor::rectangular(2, 3)).to_string(), "M(2,3)+M(3,2)");
  EXPECT_EQ(kgrid::enveloping_tro(CartanDescriptor::hermitian(4)).to_string(), "M(4,4)");
  EXPECT_EQ(kgrid::enveloping_tro(CartanDescriptor::spin(7)).to_string(), "M(8,8)");
  EXPECT_EQ(kgrid::enveloping_tro(CartanDescriptor::spin(8)).to_string(), "M(8,8)+M(8,8)");
  for (std::size_t n = 1; n <= 7; ++n) {
    const auto t = kgrid::enveloping_tro(CartanDescriptor::rectangular(1, n));
    ASSERT_EQ(t.size(), n);
    for (std::size_t k = 1; k <= n; ++k) {
      EXPECT_EQ(t[k - 1].rows, kgrid::binomial(n, k));
      EXPECT_EQ(t[k - 1].cols, kgrid::binomial(n, k - 1));
    }
  }
  EXPECT_THROW(kgrid::enveloping_tro(CartanDescriptor::exceptional_v()), kgrid::UnsupportedError);
}

TEST(BMatrix, SmallCaseByHand) {
  // n = 2: g_1 = ((0,1)^T, (0,-1)), g_2 = ((-1,0)^T, (1,0))
  EXPECT_EQ(kgrid::b_matrix(2, 1, 1), (Matrix{{0}, {1}}));
  EXPECT_EQ(kgrid::b_matrix(2, 2, 1), (Matrix{{0, -1}}));
  EXPECT_EQ(kgrid::b_matrix(2, 1, 2), (Matrix{{-1}, {0}}));
  EXPECT_EQ(kgrid::b_matrix(2, 2, 2), (Matrix{{1, 0}}));
}

TEST(BMatrix, RankIsBinomial) {
  for (std::size_t n = 1; n <= 6; ++n)
    for (std::size_t k = 1; k <= n; ++k)
      for (std::size_t i = 1; i <= n; ++i) {
        const Matrix b = kgrid::b_matrix(n, k, i);
        EXPECT_EQ(b.rows(), kgrid::binomial(n, n - k));
        EXPECT_EQ(b.cols(), kgrid::binomial(n, k - 1));
        EXPECT_EQ(oracle::naive_rank(b), kgrid::binomial(n - 1, k - 1));
      }
}

TEST(SpinSystem, Anticommutation) {
  for (std::size_t d = 4; d <= 9; ++d) {
    const auto sys = kgrid::standard_spin_system(d);
    EXPECT_EQ(sys.symmetries.size(), d - 1);
    EXPECT_TRUE(kgrid::satisfies_anticommutation(sys)) << d;
    for (const auto& s : sys.symmetries) EXPECT_EQ(s.space(), kgrid::enveloping_tro(CartanDescriptor::spin(d)));
  }
  EXPECT_THROW(kgrid::standard_spin_system(3), kgrid::UnsupportedError);
}

namespace {

Matrix random_coordinates(const CartanDescriptor& d, oracle::Random& rng) {
  const auto basis = kgrid::intrinsic_basis(d);
  Matrix x = Scalar(0) * basis.front();
  for (const auto& b : basis)
    if (rng.chance(0.6)) x += rng.scalar() * b;
  return x;
}

}  // namespace

TEST(Embedding, IsATripleHomomorphism) {
  oracle::Random rng(21);
  std::vector<CartanDescriptor> factors;
  for (std::size_t n = 1; n <= 5; ++n) factors.push_back(CartanDescriptor::rectangular(1, n));
  factors.push_back(CartanDescriptor::rectangular(4, 1));
  factors.push_back(CartanDescriptor::rectangular(2, 3));
  factors.push_back(CartanDescriptor::rectangular(3, 3));
  factors.push_back(CartanDescriptor::symplectic(5));
  factors.push_back(CartanDescriptor::hermitian(3));
  for (std::size_t d = 4; d <= 8; ++d) factors.push_back(CartanDescriptor::spin(d));
  for (const auto& d : factors) {
    for (int t = 0; t < 4; ++t) {
      const Matrix x = random_coordinates(d, rng), y = random_coordinates(d, rng),
                   z = random_coordinates(d, rng);
      EXPECT_EQ(kgrid::embed(d, kgrid::intrinsic_triple(d, x, y, z)),
                kgrid::jordan_triple(kgrid::embed(d, x), kgrid::embed(d, y), kgrid::embed(d, z)))
          << d.to_string();
    }
  }
}

TEST(Embedding, IsInjective) {
  for (const auto& d : oracle::sweep_catalog()) {
    std::vector<Matrix> flat;
    for (const auto& e : kgrid::embedded_basis(d)) {
      std::vector<Scalar> v;
      for (const auto& b : e.blocks()) v.insert(v.end(), b.entries().begin(), b.entries().end());
      flat.emplace_back(1, v.size(), std::move(v));
    }
    EXPECT_EQ(oracle::naive_span_dim(flat), kgrid::intrinsic_dim(d)) << d.to_string();
  }
}

TEST(Embedding, RejectsWrongCoordinates) {
  EXPECT_THROW(kgrid::embed(CartanDescriptor::hermitian(2), Matrix{{0, 1}, {0, 0}}), kgrid::DimensionError);
  EXPECT_THROW(kgrid::embed(CartanDescriptor::symplectic(5), Matrix::identity(5)), kgrid::DimensionError);
  EXPECT_THROW(kgrid::embed(CartanDescriptor::rectangular(2, 3), Matrix(3, 2)), kgrid::DimensionError);
}
