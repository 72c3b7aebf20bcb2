#pragma once

// Finite-dimensional ternary rings of operators: direct sums of rectangular
// matrix spaces M(n1,m1) + ... + M(nk,mk), their ternary and Jordan triple
// products, and TRO-homomorphisms described by multiplicity matrices.

#include <cctype>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "kgrid/error.hpp"
#include "kgrid/exact.hpp"

namespace kgrid {

struct Shape {
  std::size_t rows = 1;
  std::size_t cols = 1;

  friend auto operator<=>(const Shape&, const Shape&) = default;
};

class TroSpace {
 public:
  TroSpace() = default;
  explicit TroSpace(std::vector<Shape> summands) : summands_(std::move(summands)) { validate(); }
  TroSpace(std::initializer_list<Shape> summands) : summands_(summands) { validate(); }

  std::size_t size() const noexcept { return summands_.size(); }
  const Shape& operator[](std::size_t k) const { return summands_[k]; }
  const std::vector<Shape>& summands() const noexcept { return summands_; }

  /// "M(n,m)+M(n,m)+..."
  std::string to_string() const {
    std::string s;
    for (std::size_t k = 0; k < summands_.size(); ++k) {
      if (k) s += "+";
      s += "M(" + std::to_string(summands_[k].rows) + "," + std::to_string(summands_[k].cols) + ")";
    }
    return s;
  }

  static TroSpace parse(std::string_view text);

  friend bool operator==(const TroSpace&, const TroSpace&) = default;

 private:
  void validate() const {
    if (summands_.empty()) throw DimensionError("a TRO space needs at least one summand");
    for (const auto& s : summands_)
      if (s.rows == 0 || s.cols == 0) throw DimensionError("summand dimensions must be >= 1");
  }

  std::vector<Shape> summands_;
};

namespace detail {

inline void skip_ws(std::string_view s, std::size_t& pos) {
  while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
}

inline void expect(std::string_view s, std::size_t& pos, char c) {
  skip_ws(s, pos);
  if (pos >= s.size() || s[pos] != c) throw ParseError(std::string("expected '") + c + "'", pos);
  ++pos;
}

inline std::size_t parse_count(std::string_view s, std::size_t& pos) {
  skip_ws(s, pos);
  const std::size_t start = pos;
  std::size_t value = 0;
  while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
    value = value * 10 + static_cast<std::size_t>(s[pos] - '0');
    if (value > 1'000'000) throw ParseError("number too large", start);
    ++pos;
  }
  if (pos == start) throw ParseError("expected a number", start);
  return value;
}

}  // namespace detail

inline TroSpace TroSpace::parse(std::string_view text) {
  std::vector<Shape> summands;
  std::size_t pos = 0;
  for (;;) {
    detail::skip_ws(text, pos);
    const std::size_t start = pos;
    detail::expect(text, pos, 'M');
    detail::expect(text, pos, '(');
    const std::size_t n = detail::parse_count(text, pos);
    detail::expect(text, pos, ',');
    const std::size_t m = detail::parse_count(text, pos);
    detail::expect(text, pos, ')');
    if (n == 0 || m == 0) throw ParseError("summand dimensions must be >= 1", start);
    summands.push_back({n, m});
    detail::skip_ws(text, pos);
    if (pos == text.size()) break;
    detail::expect(text, pos, '+');
  }
  return TroSpace(std::move(summands));
}

/// Row counts n_i: L(T) is the direct sum of the full matrix algebras M_{n_i}.
inline std::vector<std::size_t> left_dims(const TroSpace& t) {
  std::vector<std::size_t> d;
  for (const auto& s : t.summands()) d.push_back(s.rows);
  return d;
}

/// Column counts m_i: R(T) is the direct sum of the M_{m_i}.
inline std::vector<std::size_t> right_dims(const TroSpace& t) {
  std::vector<std::size_t> d;
  for (const auto& s : t.summands()) d.push_back(s.cols);
  return d;
}

/// n_i + m_i, the sizes of the linking algebra summands.
inline std::vector<std::size_t> linking_dims(const TroSpace& t) {
  std::vector<std::size_t> d;
  for (const auto& s : t.summands()) d.push_back(s.rows + s.cols);
  return d;
}

/// Tuple of blocks, one matrix per summand of its space.
class TroElement {
 public:
  TroElement() = default;
  TroElement(TroSpace space, std::vector<Matrix> blocks)
      : space_(std::move(space)), blocks_(std::move(blocks)) {
    if (blocks_.size() != space_.size()) throw DimensionError("block count does not match space");
    for (std::size_t k = 0; k < blocks_.size(); ++k)
      if (blocks_[k].rows() != space_[k].rows || blocks_[k].cols() != space_[k].cols)
        throw DimensionError("block " + std::to_string(k) + " does not match summand shape");
  }

  static TroElement zero(const TroSpace& space) {
    std::vector<Matrix> blocks;
    for (const auto& s : space.summands()) blocks.emplace_back(s.rows, s.cols);
    return TroElement(space, std::move(blocks));
  }

  /// Element of a single-summand space.
  static TroElement single(Matrix m) {
    TroSpace space{{m.rows(), m.cols()}};
    return TroElement(std::move(space), {std::move(m)});
  }

  const TroSpace& space() const noexcept { return space_; }
  const std::vector<Matrix>& blocks() const noexcept { return blocks_; }
  const Matrix& block(std::size_t k) const { return blocks_[k]; }

  bool is_zero() const {
    for (const auto& b : blocks_)
      if (!b.is_zero()) return false;
    return true;
  }

  TroElement& operator+=(const TroElement& o) {
    check(o);
    for (std::size_t k = 0; k < blocks_.size(); ++k) blocks_[k] += o.blocks_[k];
    return *this;
  }
  TroElement& operator-=(const TroElement& o) {
    check(o);
    for (std::size_t k = 0; k < blocks_.size(); ++k) blocks_[k] -= o.blocks_[k];
    return *this;
  }
  TroElement& operator*=(const Scalar& c) {
    for (auto& b : blocks_) b *= c;
    return *this;
  }

  friend TroElement operator+(TroElement a, const TroElement& b) { return a += b; }
  friend TroElement operator-(TroElement a, const TroElement& b) { return a -= b; }
  friend TroElement operator*(const Scalar& c, TroElement a) { return a *= c; }
  friend TroElement operator*(TroElement a, const Scalar& c) { return a *= c; }
  friend TroElement operator-(TroElement a) { return a *= Scalar(-1); }

  friend bool operator==(const TroElement&, const TroElement&) = default;

  void check(const TroElement& o) const {
    if (!(space_ == o.space_))
      throw SpaceMismatchError("elements live in " + space_.to_string() + " and " +
                               o.space_.to_string());
  }

 private:
  TroSpace space_;
  std::vector<Matrix> blocks_;
};

/// Blockwise x y^* z.
inline TroElement ternary_product(const TroElement& x, const TroElement& y, const TroElement& z) {
  x.check(y);
  x.check(z);
  std::vector<Matrix> blocks;
  blocks.reserve(x.blocks().size());
  for (std::size_t k = 0; k < x.blocks().size(); ++k)
    blocks.push_back(x.block(k) * dagger(y.block(k)) * z.block(k));
  return TroElement(x.space(), std::move(blocks));
}

/// {a,b,c} = (a b^* c + c b^* a) / 2.
inline TroElement jordan_triple(const TroElement& a, const TroElement& b, const TroElement& c) {
  TroElement s = ternary_product(a, b, c) + ternary_product(c, b, a);
  return s *= Scalar::fraction(1, 2);
}

inline bool is_tripotent(const TroElement& e) { return jordan_triple(e, e, e) == e; }

/// Blockwise x x^*, an element of the left algebra (square blocks n_i x n_i).
inline TroElement left_product(const TroElement& x) {
  std::vector<Shape> shapes;
  std::vector<Matrix> blocks;
  for (const auto& b : x.blocks()) {
    shapes.push_back({b.rows(), b.rows()});
    blocks.push_back(b * dagger(b));
  }
  return TroElement(TroSpace(std::move(shapes)), std::move(blocks));
}

/// Blockwise x^* x, an element of the right algebra.
inline TroElement right_product(const TroElement& x) {
  std::vector<Shape> shapes;
  std::vector<Matrix> blocks;
  for (const auto& b : x.blocks()) {
    shapes.push_back({b.cols(), b.cols()});
    blocks.push_back(dagger(b) * b);
  }
  return TroElement(TroSpace(std::move(shapes)), std::move(blocks));
}

/// Small dense matrix of integers, used for multiplicities and K0 maps.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  IntMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    for (const auto& r : rows) {
      if (r.size() != cols_) throw DimensionError("ragged integer matrix literal");
      data_.insert(data_.end(), r.begin(), r.end());
    }
  }

  static IntMatrix identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t k = 0; k < n; ++k) m(k, k) = 1;
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::int64_t& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  std::int64_t operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols_ != b.rows_) throw DimensionError("integer matrix shape mismatch");
    IntMatrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k)
        for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += a(i, k) * b(k, j);
    return c;
  }

  std::vector<std::int64_t> apply(const std::vector<std::int64_t>& v) const {
    if (v.size() != cols_) throw DimensionError("vector length does not match matrix");
    std::vector<std::int64_t> out(rows_, 0);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) out[i] += (*this)(i, j) * v[j];
    return out;
  }

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::int64_t> data_;
};

/// TRO-homomorphism up to unitary equivalence: mult(k,i) is the number of
/// copies of source summand i placed in target summand k.
class TroHom {
 public:
  const TroSpace& source() const noexcept { return source_; }
  const TroSpace& target() const noexcept { return target_; }
  const IntMatrix& mult() const noexcept { return mult_; }

  friend bool operator==(const TroHom&, const TroHom&) = default;

 private:
  TroHom(TroSpace source, TroSpace target, IntMatrix mult)
      : source_(std::move(source)), target_(std::move(target)), mult_(std::move(mult)) {}

  friend TroHom lift_hom(const IntMatrix&, const TroSpace&, const TroSpace&);
  friend TroHom compose_homs(const TroHom&, const TroHom&);

  TroSpace source_;
  TroSpace target_;
  IntMatrix mult_;
};

/// Realizes a scaled-group homomorphism as a TRO-homomorphism. The scale
/// conditions are checked at the top elements (n_1..n_p) and (m_1..m_p).
/// Throws NotPositiveError or NotLiftableError naming the first overflowing
/// target summand (left before right).
inline TroHom lift_hom(const IntMatrix& alpha, const TroSpace& source, const TroSpace& target) {
  if (alpha.rows() != target.size() || alpha.cols() != source.size())
    throw DimensionError("multiplicity matrix must be " + std::to_string(target.size()) + "x" +
                         std::to_string(source.size()));
  for (std::size_t k = 0; k < alpha.rows(); ++k)
    for (std::size_t i = 0; i < alpha.cols(); ++i)
      if (alpha(k, i) < 0) throw NotPositiveError(k, i);
  for (std::size_t k = 0; k < target.size(); ++k) {
    long long rows = 0;
    long long cols = 0;
    for (std::size_t i = 0; i < source.size(); ++i) {
      rows += alpha(k, i) * static_cast<long long>(source[i].rows);
      cols += alpha(k, i) * static_cast<long long>(source[i].cols);
    }
    if (rows > static_cast<long long>(target[k].rows))
      throw NotLiftableError(k, ScaleSide::left, rows, static_cast<long long>(target[k].rows));
    if (cols > static_cast<long long>(target[k].cols))
      throw NotLiftableError(k, ScaleSide::right, cols, static_cast<long long>(target[k].cols));
  }
  return TroHom(source, target, alpha);
}

inline TroHom identity_hom(const TroSpace& space) {
  return lift_hom(IntMatrix::identity(space.size()), space, space);
}

/// Target block k is diag(x_1,..,x_1, ..., x_p,..,x_p, 0,...,0) with
/// mult(k,i) copies of x_i.
inline TroElement apply_hom(const TroHom& h, const TroElement& x) {
  if (!(x.space() == h.source()))
    throw SpaceMismatchError("element space " + x.space().to_string() +
                             " is not the homomorphism source " + h.source().to_string());
  std::vector<Matrix> blocks;
  for (std::size_t k = 0; k < h.target().size(); ++k) {
    Matrix out(h.target()[k].rows, h.target()[k].cols);
    std::size_t r0 = 0, c0 = 0;
    for (std::size_t i = 0; i < h.source().size(); ++i) {
      const Matrix& xi = x.block(i);
      for (std::int64_t copy = 0; copy < h.mult()(k, i); ++copy) {
        for (std::size_t r = 0; r < xi.rows(); ++r)
          for (std::size_t c = 0; c < xi.cols(); ++c) out(r0 + r, c0 + c) = xi(r, c);
        r0 += xi.rows();
        c0 += xi.cols();
      }
    }
    blocks.push_back(std::move(out));
  }
  return TroElement(h.target(), std::move(blocks));
}

/// g after h.
inline TroHom compose_homs(const TroHom& g, const TroHom& h) {
  if (!(h.target() == g.source()))
    throw SpaceMismatchError("cannot compose: " + h.target().to_string() + " vs " +
                             g.source().to_string());
  return TroHom(h.source(), g.target(), g.mult() * h.mult());
}

}  // namespace kgrid
