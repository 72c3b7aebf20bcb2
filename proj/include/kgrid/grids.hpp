#pragma once

// Explicit grids of the classical Cartan factors inside their enveloping
// TROs, and a machine check of the grid properties.

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "kgrid/cartan.hpp"
#include "kgrid/error.hpp"
#include "kgrid/exact.hpp"
#include "kgrid/spin_system.hpp"
#include "kgrid/tro.hpp"

namespace kgrid {

enum class GridKind { rectangular, hermitian, symplectic, spin };

inline std::string to_string(GridKind k) {
  switch (k) {
    case GridKind::rectangular: return "rectangular";
    case GridKind::hermitian: return "hermitian";
    case GridKind::symplectic: return "symplectic";
    case GridKind::spin: return "spin";
  }
  return "?";
}

enum class GridRole {
  plain,
  off_diagonal,  // hermitian E_ij + E_ji, i < j
  u,
  u_tilde,
  u0,
};

struct GridElement {
  std::string label;
  GridRole role = GridRole::plain;
  std::size_t index = 0;  // pair index for spin roles
  TroElement value;
};

struct Grid {
  GridKind kind;
  CartanDescriptor factor;
  TroSpace ambient;
  std::vector<GridElement> elements;
  std::optional<SpinSystem> spin;  // the generating system, for spin grids
};

inline Grid rectangular_grid(const CartanDescriptor& d) {
  if (d.kind() != FactorKind::I) throw UnsupportedError("rectangular grid needs a type I factor");
  Grid g{GridKind::rectangular, d, enveloping_tro(d), {}, std::nullopt};
  if (d.is_rank_one_rectangular()) {
    const auto gens = rank_one_generators(std::max(d.n(), d.m()));
    for (std::size_t i = 0; i < gens.size(); ++i)
      g.elements.push_back({"g(" + std::to_string(i + 1) + ")", GridRole::plain, i + 1, gens[i]});
    return g;
  }
  for (std::size_t i = 0; i < d.n(); ++i)
    for (std::size_t j = 0; j < d.m(); ++j)
      g.elements.push_back({"g(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")",
                            GridRole::plain, 0, embed(d, Matrix::unit(d.n(), d.m(), i, j))});
  return g;
}

inline Grid hermitian_grid(const CartanDescriptor& d) {
  if (d.kind() != FactorKind::III) throw UnsupportedError("hermitian grid needs a type III factor");
  const std::size_t n = d.n();
  Grid g{GridKind::hermitian, d, enveloping_tro(d), {}, std::nullopt};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      Matrix m = Matrix::unit(n, n, i, j);
      if (i != j) m += Matrix::unit(n, n, j, i);
      g.elements.push_back({"g(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")",
                            i == j ? GridRole::plain : GridRole::off_diagonal, 0,
                            TroElement::single(std::move(m))});
    }
  return g;
}

inline Grid symplectic_grid(const CartanDescriptor& d) {
  if (d.kind() != FactorKind::II) throw UnsupportedError("symplectic grid needs a type II factor");
  const std::size_t n = d.n();
  Grid g{GridKind::symplectic, d, enveloping_tro(d), {}, std::nullopt};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      g.elements.push_back({"g(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")",
                            GridRole::plain, 0,
                            TroElement::single(Matrix::unit(n, n, i, j) - Matrix::unit(n, n, j, i))});
  return g;
}

/// Spin grid of a spin system with N symmetries:
///   u_1 = (id - s_1)/2,              u~_1 = -(id + s_1)/2,
///   u_{k+1} = (s_{2k} + i s_{2k+1})/2, u~_{k+1} = (s_{2k} - i s_{2k+1})/2,
/// and u_0 = s_N when N is even. The factor is IV(N+1).
inline Grid spin_grid_from_system(const SpinSystem& sys) {
  const std::size_t count = sys.symmetries.size();
  if (count < 3) throw UnsupportedError("a spin grid needs at least 3 symmetries");
  const Scalar half = Scalar::fraction(1, 2);
  const auto& s = sys.symmetries;
  Grid g{GridKind::spin, CartanDescriptor::spin(count + 1), sys.identity.space(), {}, sys};
  g.elements.push_back({"u1", GridRole::u, 1, half * (sys.identity - s[0])});
  g.elements.push_back({"u~1", GridRole::u_tilde, 1, -half * (sys.identity + s[0])});
  for (std::size_t k = 1; 2 * k + 1 <= count; ++k) {
    const TroElement& a = s[2 * k - 1];
    const TroElement& b = s[2 * k];
    const std::string p = std::to_string(k + 1);
    g.elements.push_back({"u" + p, GridRole::u, k + 1, half * (a + Scalar::i() * b)});
    g.elements.push_back({"u~" + p, GridRole::u_tilde, k + 1, half * (a - Scalar::i() * b)});
  }
  if (count % 2 == 0) g.elements.push_back({"u0", GridRole::u0, 0, s[count - 1]});
  return g;
}

/// The standard grid of a non-exceptional factor.
inline Grid factor_grid(const CartanDescriptor& d) {
  switch (d.kind()) {
    case FactorKind::I: return rectangular_grid(d);
    case FactorKind::II: return symplectic_grid(d);
    case FactorKind::III: return hermitian_grid(d);
    case FactorKind::IV: return spin_grid_from_system(standard_spin_system(d.n()));
    default: throw UnsupportedError(d.to_string() + " has no explicit grid");
  }
}

/// All blocks of an element laid out as one row vector.
inline Matrix flatten(const TroElement& x) {
  std::vector<Scalar> v;
  for (const auto& b : x.blocks()) v.insert(v.end(), b.entries().begin(), b.entries().end());
  const std::size_t len = v.size();
  return Matrix(1, len, std::move(v));
}

inline std::size_t span_dim(const std::vector<TroElement>& xs) {
  std::vector<Matrix> flat;
  for (const auto& x : xs) flat.push_back(flatten(x));
  return span_dim(std::span<const Matrix>(flat));
}

/// e is minimal in the factor spanned by `basis` when {e, b, e} lies in C e
/// for every basis element b.
inline bool is_minimal_tripotent(const TroElement& e, const std::vector<TroElement>& basis) {
  if (e.is_zero()) return false;
  std::vector<TroElement> xs{e};
  for (const auto& b : basis) xs.push_back(jordan_triple(e, b, e));
  return span_dim(xs) == 1;
}

struct ElementCheck {
  std::string label;
  bool tripotent = false;
  bool minimal = false;
  bool minimal_expected = true;
};

struct IdentityCheck {
  std::string name;
  bool passed = false;
};

struct GridReport {
  std::string factor;
  GridKind kind = GridKind::rectangular;
  std::vector<ElementCheck> elements;
  std::size_t span_dim = 0;
  std::size_t expected_dim = 0;
  bool spans_factor = false;  // span(grid) equals span(embedded basis)
  std::vector<IdentityCheck> identities;

  bool all_tripotent() const {
    for (const auto& e : elements)
      if (!e.tripotent) return false;
    return true;
  }
  bool minimality_as_expected() const {
    for (const auto& e : elements)
      if (e.minimal != e.minimal_expected) return false;
    return true;
  }
  bool identities_hold() const {
    for (const auto& c : identities)
      if (!c.passed) return false;
    return true;
  }
  bool passed() const {
    return all_tripotent() && span_dim == expected_dim && spans_factor &&
           minimality_as_expected() && identities_hold();
  }
};

namespace detail {

inline void spin_identities(const Grid& g, GridReport& report) {
  if (g.spin) report.identities.push_back({"anticommutation", satisfies_anticommutation(*g.spin)});
  std::map<std::size_t, const TroElement*> u, ut;
  for (const auto& e : g.elements) {
    if (e.role == GridRole::u) u[e.index] = &e.value;
    if (e.role == GridRole::u_tilde) ut[e.index] = &e.value;
  }
  const Scalar minus_half = Scalar::fraction(-1, 2);
  const std::size_t pairs = u.size();
  for (std::size_t j = 2; j <= pairs; ++j) {
    for (std::size_t k = 2; k <= pairs; ++k) {
      if (j == k) continue;
      report.identities.push_back(
          {"spin relation (a) {u" + std::to_string(j) + ",u~" + std::to_string(k) + ",u~" + std::to_string(j) +
               "} = -u" + std::to_string(k) + "/2",
           jordan_triple(*u[j], *ut[k], *ut[j]) == minus_half * *u[k]});
    }
    report.identities.push_back(
        {"spin relation (b) {u" + std::to_string(j) + ",u~1,u~" + std::to_string(j) + "} = -u1/2",
         jordan_triple(*u[j], *ut[1], *ut[j]) == minus_half * *u[1]});
    report.identities.push_back(
        {"spin relation (c) {u1,u~" + std::to_string(j) + ",u~1} = -u" + std::to_string(j) + "/2",
         jordan_triple(*u[1], *ut[j], *ut[1]) == minus_half * *u[j]});
  }
}

// Single-row rectangular relations: {g_i,g_i,g_j} = g_j/2 and {g_i,g_j,g_i} = 0, i != j.
inline void rank_one_identities(const Grid& g, GridReport& report) {
  const Scalar half = Scalar::fraction(1, 2);
  bool row = true;
  bool orthogonal = true;
  for (const auto& a : g.elements)
    for (const auto& b : g.elements) {
      if (&a == &b) continue;
      row = row && jordan_triple(a.value, a.value, b.value) == half * b.value;
      orthogonal = orthogonal && jordan_triple(a.value, b.value, a.value).is_zero();
    }
  report.identities.push_back({"row {g_i,g_i,g_j} = g_j/2", row});
  report.identities.push_back({"row {g_i,g_j,g_i} = 0", orthogonal});
}

}  // namespace detail

/// Checks tripotency, spanning, minimality (expected to fail exactly for
/// u_0 and for hermitian off-diagonal elements) and the named relations of
/// the grid kind.
inline GridReport verify_grid(const Grid& g) {
  GridReport report;
  report.factor = g.factor.to_string();
  report.kind = g.kind;
  const std::vector<TroElement> basis = embedded_basis(g.factor);
  std::vector<TroElement> values;
  for (const auto& e : g.elements) {
    values.push_back(e.value);
    report.elements.push_back({e.label, is_tripotent(e.value), is_minimal_tripotent(e.value, basis),
                               e.role != GridRole::u0 && e.role != GridRole::off_diagonal});
  }
  report.span_dim = span_dim(values);
  report.expected_dim = intrinsic_dim(g.factor);
  std::vector<TroElement> joint = values;
  joint.insert(joint.end(), basis.begin(), basis.end());
  report.spans_factor = span_dim(basis) == report.span_dim && span_dim(joint) == report.span_dim;
  if (g.kind == GridKind::spin) detail::spin_identities(g, report);
  if (g.kind == GridKind::rectangular && g.factor.is_rank_one_rectangular() && g.elements.size() > 1)
    detail::rank_one_identities(g, report);
  return report;
}

}  // namespace kgrid
