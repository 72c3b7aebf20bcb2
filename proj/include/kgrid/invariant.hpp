#pragma once

// The K-grid invariant: the double-scaled ordered K0-group of the enveloping
// TRO together with Gamma, the set of K0-classes of the range projections
// g g^* of grid elements. Comparison, classification and factor recovery.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "kgrid/cartan.hpp"
#include "kgrid/error.hpp"
#include "kgrid/grids.hpp"
#include "kgrid/ktheory.hpp"
#include "kgrid/tro.hpp"

namespace kgrid {

using ClassSet = std::vector<K0Class>;  // sorted, no duplicates

inline void normalize(ClassSet& s) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
}

/// Gamma of a single non-exceptional factor, from its constructed grid.
inline ClassSet gamma(const CartanDescriptor& d) {
  if (d.is_exceptional())
    throw UnsupportedError(d.to_string() + " is exceptional: its K-groups vanish");
  ClassSet out;
  for (const auto& e : factor_grid(d).elements)
    out.push_back(k0_class_of_projection(left_product(e.value)));
  normalize(out);
  return out;
}

namespace detail {

inline K0Class single(std::int64_t v) { return K0Class{{v}}; }
inline K0Class pair(std::int64_t a, std::int64_t b) { return K0Class{{a, b}}; }

}  // namespace detail

/// Gamma as printed in the published classification table. Spin values are
/// recorded as published and can disagree with gamma(d); see table_diffs.
inline std::optional<ClassSet> published_gamma(const CartanDescriptor& d) {
  ClassSet out;
  switch (d.kind()) {
    case FactorKind::I:
      if (d.is_rank_one_rectangular()) {
        const std::size_t n = std::max(d.n(), d.m());
        K0Class row;
        for (std::size_t k = 0; k < n; ++k) row.ranks.push_back(static_cast<std::int64_t>(binomial(n - 1, k)));
        out.push_back(row);
      } else {
        out.push_back(detail::pair(1, 1));
      }
      break;
    case FactorKind::II:
      out.push_back(detail::single(2));
      break;
    case FactorKind::III:
      out = {detail::single(1), detail::single(2)};
      break;
    case FactorKind::IV: {
      const std::size_t d_ = d.n();
      if (d_ % 2 == 1) {
        const std::size_t n = (d_ - 1) / 2;
        out.push_back(detail::single(std::int64_t{1} << (n - 1)));
      } else {
        const std::size_t n = d_ / 2;
        out.push_back(detail::pair(std::int64_t{1} << (n - 2), std::int64_t{1} << (n - 2)));
        out.push_back(detail::pair(std::int64_t{1} << (n - 1), std::int64_t{1} << (n - 1)));
      }
      break;
    }
    default:
      return std::nullopt;
  }
  normalize(out);
  return out;
}

struct KGridInvariant {
  DoubleScaledGroup group;
  ClassSet gamma;
  std::size_t exceptional_count = 0;  // V/VI summands, invisible to K-theory

  friend bool operator==(const KGridInvariant&, const KGridInvariant&) = default;
};

inline KGridInvariant factor_invariant(const CartanDescriptor& d) {
  if (d.is_exceptional()) return KGridInvariant{DoubleScaledGroup{}, {}, 1};
  return KGridInvariant{double_scaled_group(enveloping_tro(d)), gamma(d), 0};
}

/// Componentwise direct sum; Gamma classes are zero-padded into the joint
/// summand coordinates.
inline KGridInvariant direct_sum(const KGridInvariant& a, const KGridInvariant& b) {
  KGridInvariant out{a.group + b.group, {}, a.exceptional_count + b.exceptional_count};
  const std::size_t ka = a.group.k();
  const std::size_t kb = b.group.k();
  for (const auto& c : a.gamma) {
    K0Class p = c;
    p.ranks.resize(ka + kb, 0);
    out.gamma.push_back(std::move(p));
  }
  for (const auto& c : b.gamma) {
    K0Class p{std::vector<std::int64_t>(ka, 0)};
    p.ranks.insert(p.ranks.end(), c.ranks.begin(), c.ranks.end());
    out.gamma.push_back(std::move(p));
  }
  normalize(out.gamma);
  return out;
}

/// Invariant of a direct sum of factors, taken over the canonicalized spec.
inline KGridInvariant k_grid_invariant(const TripleSpec& s) {
  KGridInvariant out;
  for (const auto& d : canonicalize(s).factors) out = direct_sum(out, factor_invariant(d));
  return out;
}

struct TableDiff {
  std::string factor;
  ClassSet computed;
  ClassSet published;
};

/// Factors of `s`, as written, whose computed Gamma differs from the
/// published value. IV(4) is checked against its own row even though the
/// invariant treats it as I(2,2).
inline std::vector<TableDiff> table_diffs(const TripleSpec& s) {
  std::vector<TableDiff> out;
  TripleSpec c = s;
  std::sort(c.factors.begin(), c.factors.end());
  c.factors.erase(std::unique(c.factors.begin(), c.factors.end()), c.factors.end());
  for (const auto& d : c.factors) {
    const auto pub = published_gamma(d);
    if (!pub) continue;
    ClassSet computed = gamma(d);
    if (computed != *pub) out.push_back({d.to_string(), std::move(computed), *pub});
  }
  return out;
}

/// Searches for a summand permutation that matches the caps and carries
/// Gamma of `a` onto Gamma of `b`. Exceptional counts are not compared here.
inline std::optional<SummandPermutation> invariants_isomorphic(const KGridInvariant& a,
                                                               const KGridInvariant& b) {
  if (a.group.k() != b.group.k() || a.group.signature() != b.group.signature()) return std::nullopt;
  if (a.gamma.size() != b.gamma.size()) return std::nullopt;
  const std::size_t k = a.group.k();
  std::vector<std::vector<std::size_t>> candidates(k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      if (a.group.left_caps()[i] == b.group.left_caps()[j] &&
          a.group.right_caps()[i] == b.group.right_caps()[j])
        candidates[i].push_back(j);

  SummandPermutation perm(k);
  std::vector<bool> used(k, false);
  ClassSet mapped(a.gamma.size());
  auto gamma_matches = [&] {
    for (std::size_t c = 0; c < a.gamma.size(); ++c) mapped[c] = permute(a.gamma[c], perm);
    std::sort(mapped.begin(), mapped.end());
    return mapped == b.gamma;
  };
  std::function<bool(std::size_t)> search = [&](std::size_t i) {
    if (i == k) return gamma_matches();
    for (std::size_t j : candidates[i]) {
      if (used[j]) continue;
      used[j] = true;
      perm[i] = j;
      if (search(i + 1)) return true;
      used[j] = false;
    }
    return false;
  };
  if (search(0)) return perm;
  return std::nullopt;
}

enum class Outcome { isomorphic, not_isomorphic, indeterminate };

inline std::string to_string(Outcome o) {
  switch (o) {
    case Outcome::isomorphic: return "ISOMORPHIC";
    case Outcome::not_isomorphic: return "NOT_ISOMORPHIC";
    case Outcome::indeterminate: return "INDETERMINATE";
  }
  return "?";
}

struct Verdict {
  Outcome outcome = Outcome::not_isomorphic;
  std::optional<SummandPermutation> witness;
  std::string reason;  // first distinguishing datum, or why no decision is possible
  bool indistinguishable_by_k_theory = false;
};

inline Verdict classify(const KGridInvariant& a, const KGridInvariant& b) {
  Verdict v;
  if (a.group.k() != b.group.k()) {
    v.reason = "summand counts differ (" + std::to_string(a.group.k()) + " vs " +
               std::to_string(b.group.k()) + ")";
    return v;
  }
  if (a.group.signature() != b.group.signature()) {
    v.reason = "scale caps differ";
    return v;
  }
  v.witness = invariants_isomorphic(a, b);
  if (!v.witness) {
    v.reason = "gamma differs under every cap-preserving summand permutation";
    return v;
  }
  if (a.exceptional_count != b.exceptional_count) {
    v.witness.reset();
    v.reason = "exceptional factor counts differ (" + std::to_string(a.exceptional_count) + " vs " +
               std::to_string(b.exceptional_count) + ")";
    return v;
  }
  if (a.exceptional_count > 0) {
    v.outcome = Outcome::indeterminate;
    v.indistinguishable_by_k_theory = true;
    v.reason = "classical parts agree; exceptional parts are indistinguishable by K-theory";
    return v;
  }
  v.outcome = Outcome::isomorphic;
  v.reason = "K-grid isomorphism found";
  return v;
}

inline Verdict classify(const TripleSpec& s1, const TripleSpec& s2) {
  return classify(k_grid_invariant(s1), k_grid_invariant(s2));
}

namespace detail {

inline bool is_power_of_two(std::int64_t x) { return x > 0 && (x & (x - 1)) == 0; }

inline std::size_t log2_exact(std::int64_t x) {
  std::size_t l = 0;
  while ((std::int64_t{1} << l) < x) ++l;
  return l;
}

struct Component {
  std::vector<std::pair<std::int64_t, std::int64_t>> caps;
  std::vector<std::vector<std::int64_t>> gamma;  // restricted to the component, sorted
};

inline std::optional<CartanDescriptor> match_rank_one(const Component& c) {
  const std::size_t n = c.caps.size();
  if (c.gamma.size() != 1) return std::nullopt;
  std::vector<bool> seen(n + 1, false);
  for (std::size_t s = 0; s < n; ++s) {
    std::size_t k = 0;
    for (std::size_t cand = 1; cand <= n; ++cand)
      if (c.caps[s].first == static_cast<std::int64_t>(binomial(n, cand)) &&
          c.caps[s].second == static_cast<std::int64_t>(binomial(n, cand - 1)))
        k = cand;
    if (k == 0 || seen[k]) return std::nullopt;
    seen[k] = true;
    if (c.gamma[0][s] != static_cast<std::int64_t>(binomial(n - 1, k - 1))) return std::nullopt;
  }
  return CartanDescriptor::rectangular(1, n);
}

inline std::optional<CartanDescriptor> match_component(const Component& c) {
  if (auto d = match_rank_one(c)) return d;
  using V = std::vector<std::vector<std::int64_t>>;
  if (c.caps.size() == 1) {
    const auto [n, m] = c.caps[0];
    if (n != m) return std::nullopt;
    if (c.gamma == V{{2}} && n >= 5) return CartanDescriptor::symplectic(static_cast<std::size_t>(n));
    if (c.gamma == V{{1}, {2}} && n >= 2) return CartanDescriptor::hermitian(static_cast<std::size_t>(n));
    if (is_power_of_two(n) && n >= 4 && c.gamma == V{{n / 2}, {n}})
      return CartanDescriptor::spin(2 * log2_exact(n) + 1);
    return std::nullopt;
  }
  if (c.caps.size() == 2) {
    const auto [a, b] = c.caps[0];
    const auto [a2, b2] = c.caps[1];
    if (a2 != b || b2 != a) return std::nullopt;
    if (c.gamma == V{{1, 1}} && a >= 2 && b >= 2)
      return CartanDescriptor::rectangular(static_cast<std::size_t>(std::min(a, b)),
                                           static_cast<std::size_t>(std::max(a, b)));
    if (a == b && is_power_of_two(a) && a >= 4 && c.gamma == V{{a / 2, a / 2}})
      return CartanDescriptor::spin(2 * (log2_exact(a) + 1));
  }
  return std::nullopt;
}

}  // namespace detail

/// Reads the factors back off an invariant: summands linked by the support
/// of a Gamma class form one factor, identified against the per-factor table.
/// Throws UnknownFactorError when the invariant is not in the catalog image,
/// UnsupportedError when it carries exceptional content.
inline TripleSpec recover_factors(const KGridInvariant& inv) {
  if (inv.exceptional_count > 0)
    throw UnsupportedError("exceptional factors (" + std::to_string(inv.exceptional_count) +
                           ") share the trivial invariant and cannot be recovered");
  const std::size_t k = inv.group.k();
  if (k == 0) throw UnknownFactorError("empty invariant");
  std::vector<std::size_t> parent(k);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
    return parent[x] == x ? x : parent[x] = find(parent[x]);
  };
  std::vector<bool> covered(k, false);
  for (const auto& c : inv.gamma) {
    if (c.size() != k) throw UnknownFactorError("gamma class has the wrong length");
    std::optional<std::size_t> first;
    for (std::size_t s = 0; s < k; ++s) {
      if (c.ranks[s] == 0) continue;
      covered[s] = true;
      if (!first) first = s;
      else parent[find(s)] = find(*first);
    }
    if (!first) throw UnknownFactorError("gamma contains the zero class");
  }
  for (std::size_t s = 0; s < k; ++s)
    if (!covered[s]) throw UnknownFactorError("summand " + std::to_string(s) + " carries no grid class");

  std::vector<std::vector<std::size_t>> members(k);
  for (std::size_t s = 0; s < k; ++s) members[find(s)].push_back(s);
  TripleSpec out;
  for (const auto& idx : members) {
    if (idx.empty()) continue;
    detail::Component comp;
    for (std::size_t s : idx) comp.caps.push_back({inv.group.left_caps()[s], inv.group.right_caps()[s]});
    for (const auto& c : inv.gamma) {
      const auto nz = std::find_if(c.ranks.begin(), c.ranks.end(), [](std::int64_t x) { return x != 0; });
      if (find(static_cast<std::size_t>(nz - c.ranks.begin())) != find(idx.front())) continue;
      std::vector<std::int64_t> r;
      for (std::size_t s : idx) r.push_back(c.ranks[s]);
      comp.gamma.push_back(std::move(r));
    }
    std::sort(comp.gamma.begin(), comp.gamma.end());
    const auto d = detail::match_component(comp);
    if (!d) {
      std::string where;
      for (std::size_t s : idx) where += (where.empty() ? "" : ",") + std::to_string(s);
      throw UnknownFactorError("summands {" + where + "} match no catalog factor");
    }
    out.factors.push_back(*d);
  }
  std::sort(out.factors.begin(), out.factors.end());
  return out;
}

}  // namespace kgrid
