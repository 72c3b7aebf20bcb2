#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace kgrid {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Matrix or block shapes do not fit the requested operation.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// Elements or homomorphisms live over different TRO spaces.
class SpaceMismatchError : public Error {
 public:
  using Error::Error;
};

/// Malformed textual input. `position` is a 0-based character offset.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " (at position " + std::to_string(position) + ")"),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// A parameter range outside the supported catalog, or an exceptional factor
/// where an explicit model is required.
class UnsupportedError : public Error {
 public:
  using Error::Error;
};

/// A multiplicity matrix with a negative entry.
class NotPositiveError : public Error {
 public:
  NotPositiveError(std::size_t row, std::size_t col)
      : Error("multiplicity matrix entry (" + std::to_string(row) + "," +
              std::to_string(col) + ") is negative"),
        row_(row),
        col_(col) {}

  std::size_t row() const noexcept { return row_; }
  std::size_t col() const noexcept { return col_; }

 private:
  std::size_t row_;
  std::size_t col_;
};

enum class ScaleSide { left, right };

/// The multiplicities overflow a target summand's left or right scale.
class NotLiftableError : public Error {
 public:
  NotLiftableError(std::size_t target_summand, ScaleSide side, long long required,
                   long long available)
      : Error("target summand " + std::to_string(target_summand) + " overflows its " +
              (side == ScaleSide::left ? "left" : "right") + " scale: needs " +
              std::to_string(required) + " > " + std::to_string(available)),
        target_summand_(target_summand),
        side_(side),
        required_(required),
        available_(available) {}

  std::size_t target_summand() const noexcept { return target_summand_; }
  ScaleSide side() const noexcept { return side_; }
  long long required() const noexcept { return required_; }
  long long available() const noexcept { return available_; }

 private:
  std::size_t target_summand_;
  ScaleSide side_;
  long long required_;
  long long available_;
};

/// A block that is not an orthogonal projection.
class NotProjectionError : public Error {
 public:
  explicit NotProjectionError(std::size_t block)
      : Error("block " + std::to_string(block) + " is not a projection"), block_(block) {}

  std::size_t block() const noexcept { return block_; }

 private:
  std::size_t block_;
};

/// An invariant that no catalog direct sum produces.
class UnknownFactorError : public Error {
 public:
  using Error::Error;
};

}  // namespace kgrid
