#include <gtest/gtest.h>

#include "kgrid/exact.hpp"
#include "kgrid/io.hpp"
#include "support/oracles.hpp"

using kgrid::Matrix;
using kgrid::Scalar;

TEST(Scalar, FieldOperations) {
  const Scalar a = Scalar::fraction(1, 2) + Scalar::fraction(3, 4) * Scalar::i();
  const Scalar b = Scalar(2) - Scalar::i();
  EXPECT_EQ((a * b) / b, a);
  EXPECT_EQ(a - a, Scalar(0));
  EXPECT_EQ(Scalar::i() * Scalar::i(), Scalar(-1));
  EXPECT_EQ(a.conj().conj(), a);
  EXPECT_EQ(b.norm(), mpq_class(5));
  EXPECT_THROW(a / Scalar(0), kgrid::DimensionError);
}

TEST(Scalar, TextRoundTrip) {
  for (const char* s : {"0", "-3", "1/2", "1*i", "-1*i", "2/3*i", "1/2+3/4*i", "-5-1/3*i"})
    EXPECT_EQ(Scalar::parse(s).to_string(), s) << s;
  EXPECT_EQ(Scalar::parse("i"), Scalar::i());
  EXPECT_EQ(Scalar::parse("-i"), -Scalar::i());
  EXPECT_EQ(Scalar::parse(" 2i "), Scalar(2) * Scalar::i());
  EXPECT_EQ(Scalar::parse("4/6"), Scalar::fraction(2, 3));

  oracle::Random rng(7);
  for (int t = 0; t < 200; ++t) {
    const Scalar x = rng.scalar();
    EXPECT_EQ(Scalar::parse(x.to_string()), x);
  }
}

TEST(Scalar, ParseErrorsCarryPosition) {
  try {
    Scalar::parse("1/2+x");
    FAIL();
  } catch (const kgrid::ParseError& e) {
    EXPECT_EQ(e.position(), 4u);
  }
  EXPECT_THROW(Scalar::parse(""), kgrid::ParseError);
  EXPECT_THROW(Scalar::parse("1/0"), kgrid::ParseError);
}

TEST(Matrix, ProductAndShapes) {
  const Matrix a{{1, 2}, {3, 4}};
  const Matrix b{{0, 1}, {1, 0}};
  EXPECT_EQ(a * b, (Matrix{{2, 1}, {4, 3}}));
  EXPECT_EQ(Matrix::identity(2) * a, a);
  EXPECT_THROW(a * Matrix(3, 1), kgrid::DimensionError);
  EXPECT_THROW(a + Matrix(2, 3), kgrid::DimensionError);
}

TEST(Matrix, DaggerIsConjugateTranspose) {
  const Matrix a{{Scalar::i(), 2}, {0, Scalar(1) + Scalar::i()}};
  const Matrix d = dagger(a);
  EXPECT_EQ(d(0, 0), -Scalar::i());
  EXPECT_EQ(d(1, 0), Scalar(2));
  EXPECT_EQ(d(1, 1), Scalar(1) - Scalar::i());
  EXPECT_EQ(transpose(transpose(a)), a);
}

TEST(Matrix, PauliRelations) {
  const Matrix id = Matrix::identity(2);
  for (int k = 1; k <= 3; ++k) {
    EXPECT_EQ(kgrid::pauli(k) * kgrid::pauli(k), id);
    EXPECT_EQ(dagger(kgrid::pauli(k)), kgrid::pauli(k));
  }
  EXPECT_EQ(kgrid::pauli(1) * kgrid::pauli(2), Scalar::i() * kgrid::pauli(3));
  EXPECT_EQ(kgrid::pauli(1) * kgrid::pauli(2) + kgrid::pauli(2) * kgrid::pauli(1), Matrix(2, 2));
}

TEST(Matrix, KronAndTensorPower) {
  const Matrix a{{1, 2}};
  const Matrix b{{0}, {1}};
  const Matrix k = kron(a, b);
  EXPECT_EQ(k, (Matrix{{0, 0}, {1, 2}}));
  EXPECT_EQ(kgrid::tensor_power(a, 0), Matrix::identity(1));
  EXPECT_EQ(kgrid::tensor_power(kgrid::pauli(3), 3).rows(), 8u);
  const Matrix s = kgrid::direct_sum(a, b);
  EXPECT_EQ(s.rows(), 3u);
  EXPECT_EQ(s.cols(), 3u);
  EXPECT_EQ(s(2, 2), Scalar(1));
}

TEST(Rank, KnownMatrices) {
  EXPECT_EQ(kgrid::rank(Matrix(3, 4)), 0u);
  EXPECT_EQ(kgrid::rank(Matrix::identity(5)), 5u);
  EXPECT_EQ(kgrid::rank(Matrix{{1, 2}, {2, 4}}), 1u);
  EXPECT_EQ(kgrid::rank(Matrix{{1, Scalar::i()}, {Scalar::i(), -1}}), 1u);
  EXPECT_EQ(kgrid::rank(Matrix{{Scalar::fraction(1, 3), 1}, {1, 3}}), 1u);
}

TEST(Rank, AgreesWithGaussJordanOracle) {
  oracle::Random rng(11);
  for (int t = 0; t < 300; ++t) {
    const std::size_t r = rng.index(1, 6), c = rng.index(1, 6);
    const Matrix m = rng.chance(0.5) ? rng.low_rank_matrix(r, c, rng.index(0, 3)) : rng.matrix(r, c);
    EXPECT_EQ(kgrid::rank(m), oracle::naive_rank(m));
  }
}

TEST(Rank, SpanDim) {
  const Matrix e11 = Matrix::unit(2, 2, 0, 0);
  const Matrix e22 = Matrix::unit(2, 2, 1, 1);
  EXPECT_EQ(kgrid::span_dim({e11, e22, e11 + e22}), 2u);
  EXPECT_EQ(kgrid::span_dim({e11, Scalar::i() * e11}), 1u);
}

TEST(MatrixJson, RoundTrip) {
  oracle::Random rng(3);
  for (int t = 0; t < 50; ++t) {
    const Matrix m = rng.matrix(rng.index(1, 4), rng.index(1, 4));
    const auto j = kgrid::io::to_json(m);
    EXPECT_EQ(kgrid::io::matrix_from_json(kgrid::io::json::parse(j.dump())), m);
  }
  EXPECT_THROW(kgrid::io::matrix_from_json(kgrid::io::json::parse(R"([["1"],["1","2"]])")),
               kgrid::ParseError);
  EXPECT_THROW(kgrid::io::int_matrix_from_json(kgrid::io::json::parse(R"([["1/2"]])")),
               kgrid::ParseError);
}
