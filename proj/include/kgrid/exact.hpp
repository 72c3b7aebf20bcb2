#pragma once

// Exact arithmetic over the Gaussian rationals Q(i): scalars, dense matrices,
// Kronecker products, direct sums and fraction-free rank.

#include <gmpxx.h>

#include <cctype>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "kgrid/error.hpp"

namespace kgrid {

/// A Gaussian rational re + im*i with both parts in lowest terms.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long re) : re_(re) {}  // NOLINT(google-explicit-constructor)
  Scalar(mpq_class re, mpq_class im = 0) : re_(std::move(re)), im_(std::move(im)) {
    re_.canonicalize();
    im_.canonicalize();
  }

  static Scalar i() { return Scalar(0, 1); }
  static Scalar fraction(long num, long den) {
    if (den == 0) throw DimensionError("zero denominator");
    return Scalar(mpq_class(num, den));
  }

  const mpq_class& re() const noexcept { return re_; }
  const mpq_class& im() const noexcept { return im_; }

  bool is_zero() const noexcept { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const noexcept { return sgn(im_) == 0; }
  Scalar conj() const { return Scalar(re_, -im_); }
  /// |z|^2, always a nonnegative rational.
  mpq_class norm() const { return re_ * re_ + im_ * im_; }

  Scalar operator-() const { return Scalar(-re_, -im_); }

  Scalar& operator+=(const Scalar& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
  }
  Scalar& operator-=(const Scalar& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
  }
  Scalar& operator*=(const Scalar& o) {
    mpq_class r = re_ * o.re_ - im_ * o.im_;
    im_ = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(r);
    return *this;
  }
  Scalar& operator/=(const Scalar& o) {
    if (o.is_zero()) throw DimensionError("division by zero scalar");
    const mpq_class n = o.norm();
    mpq_class r = (re_ * o.re_ + im_ * o.im_) / n;
    im_ = (im_ * o.re_ - re_ * o.im_) / n;
    re_ = std::move(r);
    return *this;
  }

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

  /// Text form: "a", "a/b", "c/d*i" or "a/b+c/d*i".
  std::string to_string() const {
    if (is_real()) return re_.get_str();
    std::string imag = (abs(im_) == 1 ? std::string("1") : mpq_class(abs(im_)).get_str()) + "*i";
    if (sgn(re_) == 0) return (sgn(im_) < 0 ? "-" : "") + imag;
    return re_.get_str() + (sgn(im_) < 0 ? "-" : "+") + imag;
  }

  /// Parses the text form. Also accepts "i", "-i", "2i" style imaginary units
  /// and surrounding whitespace.
  static Scalar parse(std::string_view text);

 private:
  mpq_class re_{0};
  mpq_class im_{0};
};

namespace detail {

class ScalarParser {
 public:
  explicit ScalarParser(std::string_view s) : s_(s) {}

  Scalar run() {
    skip_ws();
    if (pos_ == s_.size()) throw ParseError("empty scalar", pos_);
    Scalar value = term();
    skip_ws();
    if (pos_ < s_.size()) {
      if (s_[pos_] != '+' && s_[pos_] != '-') throw ParseError("unexpected character", pos_);
      Scalar second = term();
      if (value.is_real() == second.is_real())
        throw ParseError("expected one real and one imaginary part", pos_);
      value += second;
    }
    skip_ws();
    if (pos_ != s_.size()) throw ParseError("trailing characters", pos_);
    return value;
  }

 private:
  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  std::string digits() {
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    return std::string(s_.substr(start, pos_ - start));
  }

  // [sign] ( rational ["*"] ["i"] | "i" )
  Scalar term() {
    skip_ws();
    bool negative = false;
    if (pos_ < s_.size() && (s_[pos_] == '+' || s_[pos_] == '-')) {
      negative = s_[pos_] == '-';
      ++pos_;
      skip_ws();
    }
    mpq_class q = 1;
    const std::size_t start = pos_;
    std::string num = digits();
    if (!num.empty()) {
      q = mpz_class(num);
      if (pos_ < s_.size() && s_[pos_] == '/') {
        ++pos_;
        const std::size_t den_pos = pos_;
        std::string den = digits();
        if (den.empty()) throw ParseError("expected denominator", den_pos);
        mpz_class d(den);
        if (d == 0) throw ParseError("zero denominator", den_pos);
        q = mpq_class(mpz_class(num), d);
        q.canonicalize();
      }
    }
    skip_ws();
    bool imaginary = false;
    if (pos_ < s_.size() && s_[pos_] == '*' && !num.empty()) {
      ++pos_;
      skip_ws();
      if (pos_ >= s_.size() || s_[pos_] != 'i') throw ParseError("expected 'i' after '*'", pos_);
    }
    if (pos_ < s_.size() && s_[pos_] == 'i') {
      imaginary = true;
      ++pos_;
    } else if (num.empty()) {
      throw ParseError("expected a number", start);
    }
    if (negative) q = -q;
    return imaginary ? Scalar(0, q) : Scalar(q);
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline Scalar Scalar::parse(std::string_view text) { return detail::ScalarParser(text).run(); }

/// Dense row-major matrix over Q(i).
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<Scalar> entries)
      : rows_(rows), cols_(cols), data_(std::move(entries)) {
    if (data_.size() != rows * cols) throw DimensionError("entry count does not match shape");
  }
  Matrix(std::initializer_list<std::initializer_list<Scalar>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
      if (r.size() != cols_) throw DimensionError("ragged matrix literal");
      data_.insert(data_.end(), r.begin(), r.end());
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t k = 0; k < n; ++k) m(k, k) = 1;
    return m;
  }
  /// Matrix unit E_{i,j} (0-based indices).
  static Matrix unit(std::size_t rows, std::size_t cols, std::size_t i, std::size_t j) {
    Matrix m(rows, cols);
    m(i, j) = 1;
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }
  std::span<const Scalar> entries() const noexcept { return data_; }

  Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  bool is_zero() const {
    for (const auto& x : data_)
      if (!x.is_zero()) return false;
    return true;
  }

  Matrix& operator+=(const Matrix& o) {
    check_same_shape(o, "addition");
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    check_same_shape(o, "subtraction");
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
    return *this;
  }
  Matrix& operator*=(const Scalar& c) {
    for (auto& x : data_) x *= c;
    return *this;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, const Scalar& c) { return a *= c; }
  friend Matrix operator*(const Scalar& c, Matrix a) { return a *= c; }
  friend Matrix operator-(Matrix a) { return a *= Scalar(-1); }
  friend Matrix operator*(const Matrix& a, const Matrix& b);

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  void check_same_shape(const Matrix& o, const char* op) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
      throw DimensionError(std::string("shape mismatch in matrix ") + op);
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

inline Matrix mat_mul(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows())
    throw DimensionError("cannot multiply " + std::to_string(a.rows()) + "x" +
                         std::to_string(a.cols()) + " by " + std::to_string(b.rows()) + "x" +
                         std::to_string(b.cols()));
  Matrix c(a.rows(), b.cols());
  Scalar t;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Scalar& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        const Scalar& bkj = b(k, j);
        if (bkj.is_zero()) continue;
        t = aik;
        t *= bkj;
        c(i, j) += t;
      }
    }
  }
  return c;
}

inline Matrix operator*(const Matrix& a, const Matrix& b) { return mat_mul(a, b); }

/// Conjugate transpose.
inline Matrix dagger(const Matrix& a) {
  Matrix d(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) d(j, i) = a(i, j).conj();
  return d;
}

inline Matrix transpose(const Matrix& a) {
  Matrix t(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) t(j, i) = a(i, j);
  return t;
}

/// Kronecker product; block (i,j) of the result is a(i,j)*b.
inline Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix k(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a(i, j).is_zero()) continue;
      for (std::size_t r = 0; r < b.rows(); ++r)
        for (std::size_t c = 0; c < b.cols(); ++c)
          k(i * b.rows() + r, j * b.cols() + c) = a(i, j) * b(r, c);
    }
  return k;
}

/// a^{(x)n}; the empty power is the 1x1 identity.
inline Matrix tensor_power(const Matrix& a, std::size_t n) {
  Matrix r = Matrix::identity(1);
  for (std::size_t k = 0; k < n; ++k) r = kron(r, a);
  return r;
}

/// Block-diagonal direct sum diag(a, b).
inline Matrix direct_sum(const Matrix& a, const Matrix& b) {
  Matrix s(a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) s(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) s(a.rows() + i, a.cols() + j) = b(i, j);
  return s;
}

/// Pauli matrices sigma_1, sigma_2, sigma_3 (textbook convention).
inline Matrix pauli(int which) {
  switch (which) {
    case 1:
      return Matrix{{0, 1}, {1, 0}};
    case 2:
      return Matrix{{0, -Scalar::i()}, {Scalar::i(), 0}};
    case 3:
      return Matrix{{1, 0}, {0, -1}};
    default:
      throw DimensionError("Pauli index must be 1, 2 or 3");
  }
}

namespace detail {

// Element of Z[i]. Only what the elimination below needs.
struct GaussInt {
  mpz_class re;
  mpz_class im;

  bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
};

inline void mul_into(GaussInt& out, const GaussInt& a, const GaussInt& b) {
  out.re = a.re * b.re - a.im * b.im;
  out.im = a.re * b.im + a.im * b.re;
}

// out = (a*b - c*d) / e, with the division exact in Z[i].
inline void bareiss_step(GaussInt& out, const GaussInt& a, const GaussInt& b, const GaussInt& c,
                         const GaussInt& d, const GaussInt& e, GaussInt& t1, GaussInt& t2) {
  mul_into(t1, a, b);
  mul_into(t2, c, d);
  t1.re -= t2.re;
  t1.im -= t2.im;
  if (sgn(e.im) == 0 && e.re == 1) {
    out.re = t1.re;
    out.im = t1.im;
    return;
  }
  const mpz_class n = e.re * e.re + e.im * e.im;
  mpz_class re = t1.re * e.re + t1.im * e.im;
  mpz_class im = t1.im * e.re - t1.re * e.im;
  mpz_divexact(out.re.get_mpz_t(), re.get_mpz_t(), n.get_mpz_t());
  mpz_divexact(out.im.get_mpz_t(), im.get_mpz_t(), n.get_mpz_t());
}

// Clears denominators row by row; scaling a row does not change the rank.
inline std::vector<std::vector<GaussInt>> to_gaussian_integers(const Matrix& a) {
  std::vector<std::vector<GaussInt>> rows(a.rows(), std::vector<GaussInt>(a.cols()));
  for (std::size_t i = 0; i < a.rows(); ++i) {
    mpz_class l = 1;
    for (std::size_t j = 0; j < a.cols(); ++j) {
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), a(i, j).re().get_den_mpz_t());
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), a(i, j).im().get_den_mpz_t());
    }
    for (std::size_t j = 0; j < a.cols(); ++j) {
      rows[i][j].re = a(i, j).re().get_num() * (l / a(i, j).re().get_den());
      rows[i][j].im = a(i, j).im().get_num() * (l / a(i, j).im().get_den());
    }
  }
  return rows;
}

}  // namespace detail

/// Exact rank by fraction-free (Bareiss) elimination over Z[i] with full
/// pivot search.
inline std::size_t rank(const Matrix& a) {
  auto m = detail::to_gaussian_integers(a);
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  std::vector<std::size_t> col_of(cols);
  for (std::size_t j = 0; j < cols; ++j) col_of[j] = j;

  detail::GaussInt prev{1, 0};
  detail::GaussInt t1, t2;
  std::size_t r = 0;
  for (; r < rows && r < cols; ++r) {
    std::size_t pi = rows, pj = cols;
    for (std::size_t j = r; j < cols && pi == rows; ++j)
      for (std::size_t i = r; i < rows; ++i)
        if (!m[i][col_of[j]].is_zero()) {
          pi = i;
          pj = j;
          break;
        }
    if (pi == rows) break;
    std::swap(m[r], m[pi]);
    std::swap(col_of[r], col_of[pj]);
    const detail::GaussInt& pivot = m[r][col_of[r]];
    for (std::size_t i = r + 1; i < rows; ++i) {
      const detail::GaussInt lead = m[i][col_of[r]];
      for (std::size_t j = r + 1; j < cols; ++j) {
        const std::size_t c = col_of[j];
        detail::bareiss_step(m[i][c], pivot, m[i][c], lead, m[r][c], prev, t1, t2);
      }
      m[i][col_of[r]] = detail::GaussInt{0, 0};
    }
    prev = pivot;
  }
  return r;
}

/// Dimension of the complex linear span of same-shape matrices.
inline std::size_t span_dim(std::span<const Matrix> ms) {
  if (ms.empty()) return 0;
  const std::size_t rows = ms.front().rows();
  const std::size_t cols = ms.front().cols();
  std::vector<Scalar> stacked;
  stacked.reserve(ms.size() * rows * cols);
  for (const auto& m : ms) {
    if (m.rows() != rows || m.cols() != cols)
      throw DimensionError("span_dim requires matrices of one shape");
    stacked.insert(stacked.end(), m.entries().begin(), m.entries().end());
  }
  return rank(Matrix(ms.size(), rows * cols, std::move(stacked)));
}

inline std::size_t span_dim(std::initializer_list<Matrix> ms) {
  return span_dim(std::span<const Matrix>(ms.begin(), ms.size()));
}

}  // namespace kgrid
