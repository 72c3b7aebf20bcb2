#pragma once

// Classical Cartan factors, their universal enveloping TROs and the concrete
// embedding of a factor into its enveloping TRO.

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "kgrid/error.hpp"
#include "kgrid/exact.hpp"
#include "kgrid/spin_system.hpp"
#include "kgrid/tro.hpp"

namespace kgrid {

enum class FactorKind { I, II, III, IV, V, VI };

inline std::string to_string(FactorKind k) {
  switch (k) {
    case FactorKind::I: return "I";
    case FactorKind::II: return "II";
    case FactorKind::III: return "III";
    case FactorKind::IV: return "IV";
    case FactorKind::V: return "V";
    case FactorKind::VI: return "VI";
  }
  return "?";
}

/// A classical Cartan factor I(n,m), II(n), III(n), IV(d), or one of the
/// exceptional factors V, VI. Construction enforces the supported ranges.
class CartanDescriptor {
 public:
  static CartanDescriptor rectangular(std::size_t n, std::size_t m) {
    if (n < 1 || m < 1) throw UnsupportedError("I(n,m) needs n,m >= 1");
    return CartanDescriptor(FactorKind::I, n, m);
  }
  static CartanDescriptor symplectic(std::size_t n) {
    if (n < 5) {
      std::string msg = "II(" + std::to_string(n) + ") is below the supported range (n >= 5)";
      if (n == 4) msg += ": II(4) coincides with IV(6)";
      if (n == 3) msg += ": II(3) coincides with I(1,3)";
      if (n == 2) msg += ": II(2) coincides with I(1,1)";
      if (n < 2) msg += ": the factor is zero-dimensional";
      throw UnsupportedError(msg);
    }
    return CartanDescriptor(FactorKind::II, n, n);
  }
  static CartanDescriptor hermitian(std::size_t n) {
    if (n < 1) throw UnsupportedError("III(0) is zero-dimensional");
    return CartanDescriptor(FactorKind::III, n, n);
  }
  static CartanDescriptor spin(std::size_t d) {
    if (d < 4) {
      std::string msg = "IV(" + std::to_string(d) + ") is below the supported range (d >= 4)";
      if (d == 3) msg += ": IV(3) coincides with III(2)";
      if (d == 2) msg += ": IV(2) is C + C, not a factor";
      if (d == 1) msg += ": IV(1) coincides with I(1,1)";
      if (d == 0) msg += ": the factor is zero-dimensional";
      throw UnsupportedError(msg);
    }
    return CartanDescriptor(FactorKind::IV, d, d);
  }
  static CartanDescriptor exceptional_v() { return CartanDescriptor(FactorKind::V, 0, 0); }
  static CartanDescriptor exceptional_vi() { return CartanDescriptor(FactorKind::VI, 0, 0); }

  FactorKind kind() const noexcept { return kind_; }
  /// n for I, II, III; d for IV.
  std::size_t n() const noexcept { return n_; }
  /// m for I; equal to n() otherwise.
  std::size_t m() const noexcept { return m_; }

  bool is_exceptional() const noexcept { return kind_ == FactorKind::V || kind_ == FactorKind::VI; }
  /// I(n,m) with min(n,m) = 1, a Hilbert space of dimension max(n,m).
  bool is_rank_one_rectangular() const noexcept {
    return kind_ == FactorKind::I && std::min(n_, m_) == 1;
  }

  std::string to_string() const {
    switch (kind_) {
      case FactorKind::I:
        return "I(" + std::to_string(n_) + "," + std::to_string(m_) + ")";
      case FactorKind::II:
      case FactorKind::III:
      case FactorKind::IV:
        return kgrid::to_string(kind_) + "(" + std::to_string(n_) + ")";
      default:
        return kgrid::to_string(kind_);
    }
  }

  static CartanDescriptor parse(std::string_view text);

  friend auto operator<=>(const CartanDescriptor&, const CartanDescriptor&) = default;

 private:
  CartanDescriptor(FactorKind kind, std::size_t n, std::size_t m) : kind_(kind), n_(n), m_(m) {}

  FactorKind kind_ = FactorKind::I;
  std::size_t n_ = 1;
  std::size_t m_ = 1;
};

/// Finite direct sum of Cartan factors (multiset semantics).
struct TripleSpec {
  std::vector<CartanDescriptor> factors;

  std::string to_string() const {
    std::string s;
    for (std::size_t k = 0; k < factors.size(); ++k) {
      if (k) s += "+";
      s += factors[k].to_string();
    }
    return s;
  }

  /// Grammar: factor ('+' factor)*, factor = I(n,m) | II(n) | III(n) | IV(d) | V | VI.
  /// Whitespace is ignored.
  static TripleSpec parse(std::string_view text);

  friend bool operator==(const TripleSpec&, const TripleSpec&) = default;
};

namespace detail {

inline CartanDescriptor parse_factor(std::string_view s, std::size_t& pos) {
  skip_ws(s, pos);
  const std::size_t start = pos;
  std::string name;
  while (pos < s.size() && (s[pos] == 'I' || s[pos] == 'V')) name += s[pos++];
  if (name.empty()) throw ParseError("expected a factor name (I, II, III, IV, V, VI)", start);
  if (name == "V") return CartanDescriptor::exceptional_v();
  if (name == "VI") return CartanDescriptor::exceptional_vi();
  if (name != "I" && name != "II" && name != "III" && name != "IV")
    throw ParseError("unknown factor name '" + name + "'", start);
  expect(s, pos, '(');
  const std::size_t a = parse_count(s, pos);
  if (name == "I") {
    expect(s, pos, ',');
    const std::size_t b = parse_count(s, pos);
    expect(s, pos, ')');
    return CartanDescriptor::rectangular(a, b);
  }
  expect(s, pos, ')');
  if (name == "II") return CartanDescriptor::symplectic(a);
  if (name == "III") return CartanDescriptor::hermitian(a);
  return CartanDescriptor::spin(a);
}

}  // namespace detail

inline CartanDescriptor CartanDescriptor::parse(std::string_view text) {
  std::size_t pos = 0;
  CartanDescriptor d = detail::parse_factor(text, pos);
  detail::skip_ws(text, pos);
  if (pos != text.size()) throw ParseError("trailing characters", pos);
  return d;
}

inline TripleSpec TripleSpec::parse(std::string_view text) {
  TripleSpec spec;
  std::size_t pos = 0;
  for (;;) {
    spec.factors.push_back(detail::parse_factor(text, pos));
    detail::skip_ws(text, pos);
    if (pos == text.size()) break;
    detail::expect(text, pos, '+');
  }
  return spec;
}

/// Representative of the isomorphism class: I(n,m) -> I(min,max),
/// IV(4) -> I(2,2), III(1) -> I(1,1).
inline CartanDescriptor canonicalize(const CartanDescriptor& d) {
  switch (d.kind()) {
    case FactorKind::I:
      return CartanDescriptor::rectangular(std::min(d.n(), d.m()), std::max(d.n(), d.m()));
    case FactorKind::III:
      return d.n() == 1 ? CartanDescriptor::rectangular(1, 1) : d;
    case FactorKind::IV:
      return d.n() == 4 ? CartanDescriptor::rectangular(2, 2) : d;
    default:
      return d;
  }
}

/// Canonical factors in sorted order.
inline TripleSpec canonicalize(const TripleSpec& s) {
  TripleSpec out;
  for (const auto& d : s.factors) out.factors.push_back(canonicalize(d));
  std::sort(out.factors.begin(), out.factors.end());
  return out;
}

inline std::size_t intrinsic_dim(const CartanDescriptor& d) {
  switch (d.kind()) {
    case FactorKind::I: return d.n() * d.m();
    case FactorKind::II: return d.n() * (d.n() - 1) / 2;
    case FactorKind::III: return d.n() * (d.n() + 1) / 2;
    case FactorKind::IV: return d.n();
    case FactorKind::V: return 16;
    case FactorKind::VI: return 27;
  }
  return 0;
}

inline std::size_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  std::size_t r = 1;
  for (std::size_t j = 1; j <= k; ++j) r = r * (n - k + j) / j;
  return r;
}

inline TroSpace enveloping_tro(const CartanDescriptor& d) {
  switch (d.kind()) {
    case FactorKind::I: {
      if (d.is_rank_one_rectangular()) {
        const std::size_t n = std::max(d.n(), d.m());
        std::vector<Shape> summands;
        for (std::size_t k = 1; k <= n; ++k) summands.push_back({binomial(n, k), binomial(n, k - 1)});
        return TroSpace(std::move(summands));
      }
      return TroSpace{{d.n(), d.m()}, {d.m(), d.n()}};
    }
    case FactorKind::II:
    case FactorKind::III:
      return TroSpace{{d.n(), d.n()}};
    case FactorKind::IV: {
      if (d.n() % 2 == 1) {
        const std::size_t size = std::size_t{1} << ((d.n() - 1) / 2);
        return TroSpace{{size, size}};
      }
      const std::size_t size = std::size_t{1} << (d.n() / 2 - 1);
      return TroSpace{{size, size}, {size, size}};
    }
    default:
      throw UnsupportedError(d.to_string() +
                             " is exceptional: only its trivial invariant is represented");
  }
}

namespace detail {

// All k-subsets of {1..n} as sorted tuples, in lexicographic order.
inline std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur;
  auto rec = [&](auto&& self, std::size_t next) -> void {
    if (cur.size() == k) {
      out.push_back(cur);
      return;
    }
    for (std::size_t v = next; v + (k - cur.size()) <= n + 1; ++v) {
      cur.push_back(v);
      self(self, v + 1);
      cur.pop_back();
    }
  };
  rec(rec, 1);
  return out;
}

inline int permutation_sign(const std::vector<std::size_t>& seq) {
  std::size_t inversions = 0;
  for (std::size_t a = 0; a < seq.size(); ++a)
    for (std::size_t b = a + 1; b < seq.size(); ++b)
      if (seq[a] > seq[b]) ++inversions;
  return inversions % 2 == 0 ? 1 : -1;
}

}  // namespace detail

/// The C(n,k) x C(n,k-1) matrix b^{n,k}_i = sum sgn(I,i,J) E_{J,I} over
/// (k-1)-subsets I and (n-k)-subsets J partitioning {1..n} \ {i}. Rows are
/// indexed by J and columns by I, both in lexicographic order; sgn is the
/// signature of the sequence (I, i, J). k and i are 1-based.
inline Matrix b_matrix(std::size_t n, std::size_t k, std::size_t i) {
  if (n < 1 || k < 1 || k > n || i < 1 || i > n)
    throw DimensionError("b_matrix index out of range: n=" + std::to_string(n) +
                         " k=" + std::to_string(k) + " i=" + std::to_string(i));
  const auto rows = detail::subsets(n, n - k);
  const auto cols = detail::subsets(n, k - 1);
  std::map<std::vector<std::size_t>, std::size_t> row_index;
  for (std::size_t r = 0; r < rows.size(); ++r) row_index[rows[r]] = r;

  Matrix b(rows.size(), cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    const auto& subset_i = cols[c];
    if (std::find(subset_i.begin(), subset_i.end(), i) != subset_i.end()) continue;
    std::vector<std::size_t> subset_j;
    for (std::size_t v = 1; v <= n; ++v)
      if (v != i && std::find(subset_i.begin(), subset_i.end(), v) == subset_i.end())
        subset_j.push_back(v);
    std::vector<std::size_t> seq = subset_i;
    seq.push_back(i);
    seq.insert(seq.end(), subset_j.begin(), subset_j.end());
    b(row_index.at(subset_j), c) = detail::permutation_sign(seq);
  }
  return b;
}

/// Basis of the factor in intrinsic coordinates:
///   I(n,m): E_ij (n x m); II(n): E_ij - E_ji, i<j; III(n): E_ii, then
///   E_ij + E_ji, i<j; IV(d): unit coefficient vectors (d x 1).
inline std::vector<Matrix> intrinsic_basis(const CartanDescriptor& d) {
  std::vector<Matrix> basis;
  const std::size_t n = d.n();
  switch (d.kind()) {
    case FactorKind::I:
      for (std::size_t i = 0; i < d.n(); ++i)
        for (std::size_t j = 0; j < d.m(); ++j) basis.push_back(Matrix::unit(d.n(), d.m(), i, j));
      break;
    case FactorKind::II:
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
          basis.push_back(Matrix::unit(n, n, i, j) - Matrix::unit(n, n, j, i));
      break;
    case FactorKind::III:
      for (std::size_t i = 0; i < n; ++i) basis.push_back(Matrix::unit(n, n, i, i));
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
          basis.push_back(Matrix::unit(n, n, i, j) + Matrix::unit(n, n, j, i));
      break;
    case FactorKind::IV:
      for (std::size_t j = 0; j < n; ++j) basis.push_back(Matrix::unit(n, 1, j, 0));
      break;
    default:
      throw UnsupportedError(d.to_string() + " has no explicit model");
  }
  return basis;
}

namespace detail {

inline std::vector<Scalar> coefficient_vector(const Matrix& x, std::size_t len) {
  if (!((x.rows() == len && x.cols() == 1) || (x.rows() == 1 && x.cols() == len)))
    throw DimensionError("expected a coefficient vector of length " + std::to_string(len));
  return {x.entries().begin(), x.entries().end()};
}

inline void require_shape(const Matrix& x, std::size_t rows, std::size_t cols) {
  if (x.rows() != rows || x.cols() != cols)
    throw DimensionError("expected a " + std::to_string(rows) + "x" + std::to_string(cols) +
                         " coordinate matrix, got " + std::to_string(x.rows()) + "x" +
                         std::to_string(x.cols()));
}

}  // namespace detail

/// Grid-generating elements g_i = (b^{n,1}_i, ..., b^{n,n}_i), i = 1..n, of
/// the rank-one factor of dimension n inside its enveloping TRO.
inline std::vector<TroElement> rank_one_generators(std::size_t n) {
  const TroSpace space = enveloping_tro(CartanDescriptor::rectangular(1, n));
  std::vector<TroElement> gens;
  for (std::size_t i = 1; i <= n; ++i) {
    std::vector<Matrix> blocks;
    for (std::size_t k = 1; k <= n; ++k) blocks.push_back(b_matrix(n, k, i));
    gens.emplace_back(space, std::move(blocks));
  }
  return gens;
}

/// The embedding of the factor into its enveloping TRO, in the intrinsic
/// coordinates of intrinsic_basis(). Complex-linear; preserves the Jordan
/// triple product.
inline TroElement embed(const CartanDescriptor& d, const Matrix& x) {
  switch (d.kind()) {
    case FactorKind::I: {
      detail::require_shape(x, d.n(), d.m());
      if (d.is_rank_one_rectangular()) {
        const std::size_t n = std::max(d.n(), d.m());
        const auto gens = rank_one_generators(n);
        TroElement out = TroElement::zero(enveloping_tro(d));
        const auto coeffs = detail::coefficient_vector(x, n);
        for (std::size_t i = 0; i < n; ++i)
          if (!coeffs[i].is_zero()) out += coeffs[i] * gens[i];
        return out;
      }
      return TroElement(enveloping_tro(d), {x, transpose(x)});
    }
    case FactorKind::II:
      detail::require_shape(x, d.n(), d.n());
      if (!(transpose(x) == -x)) throw DimensionError("II(n) coordinates must be skew-symmetric");
      return TroElement::single(x);
    case FactorKind::III:
      detail::require_shape(x, d.n(), d.n());
      if (!(transpose(x) == x)) throw DimensionError("III(n) coordinates must be symmetric");
      return TroElement::single(x);
    case FactorKind::IV: {
      const auto coeffs = detail::coefficient_vector(x, d.n());
      const SpinSystem sys = standard_spin_system(d.n());
      TroElement out = coeffs[0] * sys.identity;
      for (std::size_t j = 1; j < d.n(); ++j)
        if (!coeffs[j].is_zero()) out += coeffs[j] * sys.symmetries[j - 1];
      return out;
    }
    default:
      throw UnsupportedError(d.to_string() + " has no explicit model");
  }
}

inline std::vector<TroElement> embedded_basis(const CartanDescriptor& d) {
  std::vector<TroElement> out;
  for (const auto& b : intrinsic_basis(d)) out.push_back(embed(d, b));
  return out;
}

/// Jordan triple product computed in intrinsic coordinates, without the
/// enveloping TRO. For I, II, III it is (x y^* z + z y^* x)/2. For IV it is
/// (x o y^*) o z + (z o y^*) o x - (x o z) o y^* in the spin algebra
/// spanned by id, s_1, ..., s_{d-1}, computed on coefficients.
inline Matrix intrinsic_triple(const CartanDescriptor& d, const Matrix& x, const Matrix& y,
                               const Matrix& z) {
  if (d.kind() != FactorKind::IV) {
    if (d.is_exceptional()) throw UnsupportedError(d.to_string() + " has no explicit model");
    Matrix s = x * dagger(y) * z + z * dagger(y) * x;
    return s *= Scalar::fraction(1, 2);
  }
  const std::size_t n = d.n();
  using Vec = std::vector<Scalar>;
  auto circ = [n](const Vec& a, const Vec& b) {
    Vec c(n);
    c[0] = a[0] * b[0];
    for (std::size_t j = 1; j < n; ++j) {
      c[0] += a[j] * b[j];
      c[j] = a[0] * b[j] + a[j] * b[0];
    }
    return c;
  };
  auto star = [](Vec a) {
    for (auto& s : a) s = s.conj();
    return a;
  };
  const Vec a = detail::coefficient_vector(x, n);
  const Vec b = star(detail::coefficient_vector(y, n));
  const Vec c = detail::coefficient_vector(z, n);
  const Vec t1 = circ(circ(a, b), c);
  const Vec t2 = circ(circ(c, b), a);
  const Vec t3 = circ(circ(a, c), b);
  Vec out(n);
  for (std::size_t j = 0; j < n; ++j) out[j] = t1[j] + t2[j] - t3[j];
  return Matrix(x.rows(), x.cols(), std::move(out));
}

}  // namespace kgrid
