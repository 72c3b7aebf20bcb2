#pragma once

// Reference implementations used only by the tests. They deliberately avoid
// the library's own algorithms: rank is plain Gauss-Jordan over Q(i) with
// field division, and the canonical key is built from a hand-written table.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <tuple>
#include <vector>

#include "kgrid/kgrid.hpp"

namespace oracle {

using kgrid::Matrix;
using kgrid::Scalar;

inline std::size_t naive_rank(const Matrix& a) {
  std::vector<std::vector<Scalar>> m(a.rows(), std::vector<Scalar>(a.cols()));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m[i][j] = a(i, j);
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t p = r;
    while (p < a.rows() && m[p][c].is_zero()) ++p;
    if (p == a.rows()) continue;
    std::swap(m[p], m[r]);
    const Scalar inv = Scalar(1) / m[r][c];
    for (auto& x : m[r]) x = x * inv;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r || m[i][c].is_zero()) continue;
      const Scalar f = m[i][c];
      for (std::size_t j = 0; j < a.cols(); ++j) m[i][j] = m[i][j] - f * m[r][j];
    }
    ++r;
  }
  return r;
}

/// Rank of the family of matrices, each flattened into one row.
inline std::size_t naive_span_dim(const std::vector<Matrix>& ms) {
  if (ms.empty()) return 0;
  const std::size_t len = ms.front().rows() * ms.front().cols();
  Matrix stacked(ms.size(), len);
  for (std::size_t r = 0; r < ms.size(); ++r)
    for (std::size_t i = 0; i < ms[r].rows(); ++i)
      for (std::size_t j = 0; j < ms[r].cols(); ++j) stacked(r, i * ms[r].cols() + j) = ms[r](i, j);
  return naive_rank(stacked);
}

/// Canonical factor label, written out independently of kgrid::canonicalize.
using FactorKey = std::tuple<int, std::size_t, std::size_t>;

inline FactorKey factor_key(const kgrid::CartanDescriptor& d) {
  using kgrid::FactorKind;
  switch (d.kind()) {
    case FactorKind::I: return {1, std::min(d.n(), d.m()), std::max(d.n(), d.m())};
    case FactorKind::II: return {2, d.n(), 0};
    case FactorKind::III: return d.n() == 1 ? FactorKey{1, 1, 1} : FactorKey{3, d.n(), 0};
    case FactorKind::IV: return d.n() == 4 ? FactorKey{1, 2, 2} : FactorKey{4, d.n(), 0};
    case FactorKind::V: return {5, 0, 0};
    case FactorKind::VI: return {6, 0, 0};
  }
  return {0, 0, 0};
}

inline std::vector<FactorKey> spec_key(const kgrid::TripleSpec& s) {
  std::vector<FactorKey> out;
  for (const auto& d : s.factors) out.push_back(factor_key(d));
  std::sort(out.begin(), out.end());
  return out;
}

/// Input catalog of the classification sweep.
inline std::vector<kgrid::CartanDescriptor> sweep_catalog() {
  using kgrid::CartanDescriptor;
  std::vector<CartanDescriptor> c;
  for (std::size_t n = 1; n <= 4; ++n)
    for (std::size_t m = 1; m <= 4; ++m) c.push_back(CartanDescriptor::rectangular(n, m));
  for (std::size_t n = 5; n <= 6; ++n) c.push_back(CartanDescriptor::rectangular(1, n));
  for (std::size_t n = 5; n <= 7; ++n) c.push_back(CartanDescriptor::symplectic(n));
  for (std::size_t n = 2; n <= 6; ++n) c.push_back(CartanDescriptor::hermitian(n));
  for (std::size_t d = 4; d <= 9; ++d) c.push_back(CartanDescriptor::spin(d));
  return c;
}

/// All multisets of one to three catalog entries.
inline std::vector<kgrid::TripleSpec> sweep_specs() {
  const auto cat = sweep_catalog();
  std::vector<kgrid::TripleSpec> out;
  const std::size_t n = cat.size();
  for (std::size_t a = 0; a < n; ++a) {
    out.push_back({{cat[a]}});
    for (std::size_t b = a; b < n; ++b) {
      out.push_back({{cat[a], cat[b]}});
      for (std::size_t c = b; c < n; ++c) out.push_back({{cat[a], cat[b], cat[c]}});
    }
  }
  return out;
}

class Random {
 public:
  explicit Random(std::uint64_t seed) : gen_(seed) {}

  std::int64_t integer(std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(gen_);
  }
  std::size_t index(std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(gen_);
  }
  bool chance(double p) { return std::bernoulli_distribution(p)(gen_); }

  Scalar scalar() {
    if (chance(0.3)) return Scalar(0);
    const long den1 = integer(1, 4);
    const long den2 = integer(1, 4);
    Scalar re = Scalar::fraction(integer(-5, 5), den1);
    if (chance(0.5)) return re;
    return re + Scalar::fraction(integer(-5, 5), den2) * Scalar::i();
  }

  Matrix matrix(std::size_t rows, std::size_t cols) {
    Matrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = scalar();
    return m;
  }

  /// Matrix of the given size whose rank is at most `r`.
  Matrix low_rank_matrix(std::size_t rows, std::size_t cols, std::size_t r) {
    if (r == 0) return Matrix(rows, cols);
    return matrix(rows, r) * matrix(r, cols);
  }

  kgrid::TroSpace space(std::size_t max_k, std::size_t max_dim) {
    std::vector<kgrid::Shape> s;
    const std::size_t k = index(1, max_k);
    for (std::size_t i = 0; i < k; ++i) s.push_back({index(1, max_dim), index(1, max_dim)});
    return kgrid::TroSpace(std::move(s));
  }

  kgrid::TroElement element(const kgrid::TroSpace& t) {
    std::vector<Matrix> blocks;
    for (const auto& s : t.summands()) blocks.push_back(matrix(s.rows, s.cols));
    return kgrid::TroElement(t, std::move(blocks));
  }

  std::mt19937_64& engine() { return gen_; }

 private:
  std::mt19937_64 gen_;
};

/// Orthogonal projection of rank r in M_n built from coordinate vectors
/// after a random permutation, so rank is known by construction.
inline Matrix coordinate_projection(std::size_t n, std::size_t r, Random& rng) {
  std::vector<std::size_t> idx(n);
  for (std::size_t i = 0; i < n; ++i) idx[i] = i;
  std::shuffle(idx.begin(), idx.end(), rng.engine());
  Matrix p(n, n);
  for (std::size_t i = 0; i < r; ++i) p(idx[i], idx[i]) = Scalar(1);
  return p;
}

}  // namespace oracle
