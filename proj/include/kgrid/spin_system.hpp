#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "kgrid/error.hpp"
#include "kgrid/exact.hpp"
#include "kgrid/tro.hpp"

namespace kgrid {

/// Self-adjoint s_1..s_N with (s_i s_j + s_j s_i)/2 = delta_ij id.
struct SpinSystem {
  TroElement identity;
  std::vector<TroElement> symmetries;
};

namespace detail {

// sigma_3^{(x)l} (x) sigma_{1|2} (x) id^{(x)(factors-l-1)}, l = 0..factors-1.
inline std::vector<Matrix> tensor_spin_symmetries(std::size_t factors) {
  const Matrix id2 = Matrix::identity(2);
  std::vector<Matrix> out;
  for (std::size_t l = 0; l < factors; ++l) {
    const Matrix head = tensor_power(pauli(3), l);
    const Matrix tail = tensor_power(id2, factors - l - 1);
    out.push_back(kron(kron(head, pauli(1)), tail));
    out.push_back(kron(kron(head, pauli(2)), tail));
  }
  return out;
}

}  // namespace detail

/// Spin system spanning (with the identity) the spin factor of dimension
/// `dim` inside its enveloping TRO.
///   dim = 2n+1: 2n symmetries in M_{2^n}, tensor products of Pauli matrices.
///   dim = 2n:   the 2n-2 symmetries for n-1 tensor factors doubled into
///               M_{2^{n-1}} + M_{2^{n-1}}, plus (s3^{n-1}, -s3^{n-1}).
inline SpinSystem standard_spin_system(std::size_t dim) {
  if (dim < 4)
    throw UnsupportedError("spin factor IV(" + std::to_string(dim) +
                           ") is below the supported range (dim >= 4)");
  SpinSystem sys;
  if (dim % 2 == 1) {
    const std::size_t n = (dim - 1) / 2;
    const std::size_t size = std::size_t{1} << n;
    sys.identity = TroElement::single(Matrix::identity(size));
    for (auto& s : detail::tensor_spin_symmetries(n)) sys.symmetries.push_back(TroElement::single(std::move(s)));
    return sys;
  }
  const std::size_t n = dim / 2;
  const std::size_t size = std::size_t{1} << (n - 1);
  const TroSpace space{{size, size}, {size, size}};
  sys.identity = TroElement(space, {Matrix::identity(size), Matrix::identity(size)});
  for (auto& s : detail::tensor_spin_symmetries(n - 1)) sys.symmetries.emplace_back(space, std::vector<Matrix>{s, s});
  const Matrix z = tensor_power(pauli(3), n - 1);
  sys.symmetries.emplace_back(space, std::vector<Matrix>{z, -z});
  return sys;
}

/// Every pair satisfies the canonical anticommutation relation and every
/// symmetry is self-adjoint, blockwise.
inline bool satisfies_anticommutation(const SpinSystem& sys) {
  for (std::size_t a = 0; a < sys.symmetries.size(); ++a) {
    const TroElement& sa = sys.symmetries[a];
    for (std::size_t k = 0; k < sa.blocks().size(); ++k)
      if (!(dagger(sa.block(k)) == sa.block(k))) return false;
    for (std::size_t b = a; b < sys.symmetries.size(); ++b) {
      const TroElement& sb = sys.symmetries[b];
      for (std::size_t k = 0; k < sa.blocks().size(); ++k) {
        Matrix anti = sa.block(k) * sb.block(k) + sb.block(k) * sa.block(k);
        anti *= Scalar::fraction(1, 2);
        const Matrix expected = a == b ? sys.identity.block(k)
                                       : Matrix(anti.rows(), anti.cols());
        if (!(anti == expected)) return false;
      }
    }
  }
  return true;
}

}  // namespace kgrid
