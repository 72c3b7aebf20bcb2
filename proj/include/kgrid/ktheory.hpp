#pragma once

// Ternary K0 of finite-dimensional TROs. For T = M(n1,m1)+...+M(nk,mk),
// K0(T) = Z^k with positive cone N0^k, left scale prod {0..n_i} and right
// scale prod {0..m_i}. A projection class is its vector of blockwise ranks.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "kgrid/error.hpp"
#include "kgrid/exact.hpp"
#include "kgrid/tro.hpp"

namespace kgrid {

struct K0Class {
  std::vector<std::int64_t> ranks;

  std::size_t size() const noexcept { return ranks.size(); }
  friend auto operator<=>(const K0Class&, const K0Class&) = default;
};

/// Rank vector of a blockwise projection (p = p^* = p^2 in every block).
inline K0Class k0_class_of_projection(std::span<const Matrix> blocks) {
  K0Class c;
  for (std::size_t k = 0; k < blocks.size(); ++k) {
    const Matrix& p = blocks[k];
    if (!p.is_square() || !(dagger(p) == p) || !(p * p == p)) throw NotProjectionError(k);
    c.ranks.push_back(static_cast<std::int64_t>(rank(p)));
  }
  return c;
}

inline K0Class k0_class_of_projection(const TroElement& p) {
  return k0_class_of_projection(std::span<const Matrix>(p.blocks()));
}

/// (Z^k, N0^k, prod {0..left_i}, prod {0..right_i}).
class DoubleScaledGroup {
 public:
  DoubleScaledGroup() = default;
  DoubleScaledGroup(std::vector<std::int64_t> left, std::vector<std::int64_t> right)
      : left_(std::move(left)), right_(std::move(right)) {
    if (left_.size() != right_.size()) throw DimensionError("left and right caps differ in length");
    for (std::size_t i = 0; i < left_.size(); ++i) {
      if (left_[i] < 1 || right_[i] < 1) throw DimensionError("scale caps must be >= 1");
      signature_.push_back({left_[i], right_[i]});
    }
    std::sort(signature_.begin(), signature_.end());
  }

  std::size_t k() const noexcept { return left_.size(); }
  const std::vector<std::int64_t>& left_caps() const noexcept { return left_; }
  const std::vector<std::int64_t>& right_caps() const noexcept { return right_; }
  /// Sorted (left, right) cap pairs; equal signatures are exactly the
  /// isomorphic groups.
  const std::vector<std::pair<std::int64_t, std::int64_t>>& signature() const noexcept {
    return signature_;
  }

  bool in_positive_cone(const K0Class& c) const {
    return c.size() == k() &&
           std::all_of(c.ranks.begin(), c.ranks.end(), [](std::int64_t x) { return x >= 0; });
  }
  bool in_left_scale(const K0Class& c) const { return in_box(c, left_); }
  bool in_right_scale(const K0Class& c) const { return in_box(c, right_); }

  K0Class left_top() const { return K0Class{left_}; }
  K0Class right_top() const { return K0Class{right_}; }

  /// Concatenation of summands.
  friend DoubleScaledGroup operator+(const DoubleScaledGroup& a, const DoubleScaledGroup& b) {
    auto left = a.left_;
    auto right = a.right_;
    left.insert(left.end(), b.left_.begin(), b.left_.end());
    right.insert(right.end(), b.right_.begin(), b.right_.end());
    return DoubleScaledGroup(std::move(left), std::move(right));
  }

  friend bool operator==(const DoubleScaledGroup& a, const DoubleScaledGroup& b) {
    return a.left_ == b.left_ && a.right_ == b.right_;
  }

 private:
  bool in_box(const K0Class& c, const std::vector<std::int64_t>& caps) const {
    if (c.size() != caps.size()) return false;
    for (std::size_t i = 0; i < caps.size(); ++i)
      if (c.ranks[i] < 0 || c.ranks[i] > caps[i]) return false;
    return true;
  }

  std::vector<std::int64_t> left_;
  std::vector<std::int64_t> right_;
  std::vector<std::pair<std::int64_t, std::int64_t>> signature_;
};

inline DoubleScaledGroup double_scaled_group(const TroSpace& t) {
  std::vector<std::int64_t> left, right;
  for (const auto& s : t.summands()) {
    left.push_back(static_cast<std::int64_t>(s.rows));
    right.push_back(static_cast<std::int64_t>(s.cols));
  }
  return DoubleScaledGroup(std::move(left), std::move(right));
}

/// perm[i] is the summand of the target matched with summand i of the source.
using SummandPermutation = std::vector<std::size_t>;

/// Returns a summand permutation carrying the caps of `a` onto those of `b`,
/// or nothing when the groups are not isomorphic. Equal summands are matched
/// in index order, so a group is matched to itself by the identity.
inline std::optional<SummandPermutation> dsg_isomorphic(const DoubleScaledGroup& a,
                                                        const DoubleScaledGroup& b) {
  if (a.k() != b.k() || a.signature() != b.signature()) return std::nullopt;
  SummandPermutation perm(a.k());
  std::vector<bool> used(b.k(), false);
  for (std::size_t i = 0; i < a.k(); ++i) {
    for (std::size_t j = 0; j < b.k(); ++j) {
      if (!used[j] && a.left_caps()[i] == b.left_caps()[j] &&
          a.right_caps()[i] == b.right_caps()[j]) {
        used[j] = true;
        perm[i] = j;
        break;
      }
    }
  }
  return perm;
}

inline K0Class permute(const K0Class& c, const SummandPermutation& perm) {
  K0Class out{std::vector<std::int64_t>(c.size(), 0)};
  for (std::size_t i = 0; i < c.size(); ++i) out.ranks[perm[i]] = c.ranks[i];
  return out;
}

inline SummandPermutation inverse(const SummandPermutation& perm) {
  SummandPermutation inv(perm.size());
  for (std::size_t i = 0; i < perm.size(); ++i) inv[perm[i]] = i;
  return inv;
}

/// The induced map K0(h): Z^p -> Z^q is the multiplicity matrix itself.
inline IntMatrix k0_of_hom(const TroHom& h) { return h.mult(); }

inline K0Class apply(const IntMatrix& m, const K0Class& c) { return K0Class{m.apply(c.ranks)}; }

/// Transports a class of the right algebra into K0(T). Both corner
/// embeddings of the linking algebra preserve blockwise ranks, so this is the
/// identity on rank vectors.
inline K0Class morita_transport(const K0Class& right_class) { return right_class; }

}  // namespace kgrid
