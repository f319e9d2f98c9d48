// Copyright 2026 The f2q Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#pragma once

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <algorithm>
#include <bit>
#include <cmath>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "f2q/linear_encoding.hpp"
#include "f2q/local_encoding.hpp"
#include "f2q/pauli.hpp"

namespace f2q {

using DenseOperator = Eigen::MatrixXcd;
using DenseState = Eigen::VectorXcd;

inline constexpr std::size_t kDenseQubitCap = 12;
inline constexpr std::size_t kSpectrumQubitCap = 10;

namespace detail {

inline void require_dense(std::size_t n, std::size_t cap = kDenseQubitCap) {
  if (n > cap) {
    const double mib = 16.0 * std::ldexp(1.0, static_cast<int>(2 * n)) / (1024.0 * 1024.0);
    throw std::invalid_argument("dense operator on " + std::to_string(n) + " qubits exceeds the " +
                                std::to_string(cap) + "-qubit cap (would need " + std::to_string(mib) + " MiB)");
  }
}

/// Basis index bit of qubit q; qubit 0 is the most significant bit.
inline std::uint64_t qubit_mask(std::size_t n, std::size_t q) { return std::uint64_t{1} << (n - 1 - q); }

inline std::uint64_t pack(const BitVec& v) {
  const std::size_t n = v.size();
  std::uint64_t m = 0;
  for (std::size_t q = 0; q < n; ++q) {
    if (v.get(q)) m |= qubit_mask(n, q);
  }
  return m;
}

}  // namespace detail

/// Kronecker product of i^phase X^x and Z^z factors, qubit 0 leftmost.
inline DenseOperator pauli_matrix(const PauliString& p) {
  const std::size_t n = p.num_qubits();
  detail::require_dense(n);
  DenseOperator x = DenseOperator::Identity(1, 1);
  DenseOperator z = DenseOperator::Identity(1, 1);
  DenseOperator xq(2, 2), zq(2, 2), id = DenseOperator::Identity(2, 2);
  xq << 0, 1, 1, 0;
  zq << 1, 0, 0, -1;
  auto kron = [](const DenseOperator& a, const DenseOperator& f) {
    DenseOperator out(a.rows() * 2, a.cols() * 2);
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
      for (Eigen::Index j = 0; j < a.cols(); ++j) out.block(2 * i, 2 * j, 2, 2) = a(i, j) * f;
    }
    return out;
  };
  for (std::size_t q = 0; q < n; ++q) {
    x = kron(x, p.x().get(q) ? xq : id);
    z = kron(z, p.z().get(q) ? zq : id);
  }
  return i_pow(p.phase()) * x * z;
}

inline DenseOperator pauli_matrix(const PauliSum& s) {
  const std::size_t n = s.num_qubits();
  detail::require_dense(n);
  const std::uint64_t dim = std::uint64_t{1} << n;
  DenseOperator m = DenseOperator::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  for (const auto& [key, c] : s.terms()) {
    const std::uint64_t xm = detail::pack(key.first);
    const std::uint64_t zm = detail::pack(key.second);
    for (std::uint64_t b = 0; b < dim; ++b) {
      const double sign = std::popcount(zm & b) % 2 ? -1.0 : 1.0;
      m(static_cast<Eigen::Index>(b ^ xm), static_cast<Eigen::Index>(b)) += c * sign;
    }
  }
  return m;
}

/// P|psi> using P|b> = i^phase (-1)^{z.b} |b xor x>.
inline DenseState apply_pauli(const PauliString& p, const DenseState& psi) {
  const std::size_t n = p.num_qubits();
  const std::uint64_t dim = std::uint64_t{1} << n;
  if (static_cast<std::uint64_t>(psi.size()) != dim) throw DimensionError("apply_pauli: state size mismatch");
  const std::uint64_t xm = detail::pack(p.x());
  const std::uint64_t zm = detail::pack(p.z());
  const Complex ph = i_pow(p.phase());
  DenseState out(psi.size());
  for (std::uint64_t b = 0; b < dim; ++b) {
    const double sign = std::popcount(zm & b) % 2 ? -1.0 : 1.0;
    out(static_cast<Eigen::Index>(b ^ xm)) = ph * sign * psi(static_cast<Eigen::Index>(b));
  }
  return out;
}

/// P applied to every column of m.
inline DenseOperator apply_pauli(const PauliString& p, const DenseOperator& m) {
  const std::size_t n = p.num_qubits();
  const std::uint64_t dim = std::uint64_t{1} << n;
  if (static_cast<std::uint64_t>(m.rows()) != dim) throw DimensionError("apply_pauli: size mismatch");
  const std::uint64_t xm = detail::pack(p.x());
  const std::uint64_t zm = detail::pack(p.z());
  const Complex ph = i_pow(p.phase());
  DenseOperator out(m.rows(), m.cols());
  for (Eigen::Index c = 0; c < m.cols(); ++c) {
    for (std::uint64_t b = 0; b < dim; ++b) {
      const double sign = std::popcount(zm & b) % 2 ? -1.0 : 1.0;
      out(static_cast<Eigen::Index>(b ^ xm), c) = ph * sign * m(static_cast<Eigen::Index>(b), c);
    }
  }
  return out;
}

/// m * P for a Pauli P acting on the column space of m.
inline DenseOperator right_apply_pauli(const DenseOperator& m, const PauliString& p) {
  const std::size_t n = p.num_qubits();
  const std::uint64_t dim = std::uint64_t{1} << n;
  if (static_cast<std::uint64_t>(m.cols()) != dim) throw DimensionError("right_apply_pauli: size mismatch");
  const std::uint64_t xm = detail::pack(p.x());
  const std::uint64_t zm = detail::pack(p.z());
  const Complex ph = i_pow(p.phase());
  DenseOperator out(m.rows(), m.cols());
  for (std::uint64_t f = 0; f < dim; ++f) {
    const double sign = std::popcount(zm & f) % 2 ? -1.0 : 1.0;
    out.col(static_cast<Eigen::Index>(f)) = ph * sign * m.col(static_cast<Eigen::Index>(f ^ xm));
  }
  return out;
}

/// Fock-space ladder operator with the sign (-1)^{f_0 + ... + f_{p-1}}.
inline DenseOperator fock_ladder_matrix(std::size_t n, std::size_t p, bool dagger) {
  if (p >= n) throw std::out_of_range("fock_ladder_matrix: mode " + std::to_string(p) + " >= " + std::to_string(n));
  detail::require_dense(n);
  const std::uint64_t dim = std::uint64_t{1} << n;
  DenseOperator a = DenseOperator::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  const std::uint64_t bit = detail::qubit_mask(n, p);
  const std::uint64_t above = ~((bit << 1) - 1) & (dim - 1);
  for (std::uint64_t f = 0; f < dim; ++f) {
    if (!(f & bit)) continue;
    const double sign = std::popcount(f & above) % 2 ? -1.0 : 1.0;
    a(static_cast<Eigen::Index>(f ^ bit), static_cast<Eigen::Index>(f)) = sign;
  }
  if (dagger) a.adjointInPlace();
  return a;
}

/// Basis permutation U|f> = |E f>.
inline DenseOperator encoding_unitary(const LinearEncoding& enc) {
  const std::size_t n = enc.n();
  detail::require_dense(n);
  const std::uint64_t dim = std::uint64_t{1} << n;
  DenseOperator u = DenseOperator::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  std::vector<std::uint64_t> cols(n);
  for (std::size_t j = 0; j < n; ++j) cols[j] = detail::pack(enc.matrix().column(j));
  for (std::uint64_t f = 0; f < dim; ++f) {
    std::uint64_t g = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (f & detail::qubit_mask(n, j)) g ^= cols[j];
    }
    u(static_cast<Eigen::Index>(g), static_cast<Eigen::Index>(f)) = 1.0;
  }
  return u;
}

/// Encoder isometry: column f is X-bar^f applied to the logical-zero codeword,
/// obtained by projecting a basis state onto the +1 eigenspace of every
/// stabilizer and logical Z.
inline DenseOperator encoder_isometry(const StabilizerEncoding& enc) {
  const std::size_t n = enc.n_physical;
  const std::size_t k = enc.n_logical;
  detail::require_dense(n);
  const std::uint64_t dim = std::uint64_t{1} << n;
  std::vector<PauliString> fixers = enc.stabilizers;
  fixers.insert(fixers.end(), enc.logical_z.begin(), enc.logical_z.end());
  DenseState zero;
  for (std::uint64_t b = 0; b < dim; ++b) {
    DenseState psi = DenseState::Zero(static_cast<Eigen::Index>(dim));
    psi(static_cast<Eigen::Index>(b)) = 1.0;
    for (const auto& s : fixers) psi = 0.5 * (psi + apply_pauli(s, psi));
    if (psi.norm() > 1e-6) {
      zero = psi / psi.norm();
      break;
    }
  }
  if (zero.size() == 0) throw std::logic_error("encoder_isometry: stabilizers and logical Zs have no joint +1 state");
  const std::uint64_t kdim = std::uint64_t{1} << k;
  DenseOperator v(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(kdim));
  for (std::uint64_t f = 0; f < kdim; ++f) {
    DenseState psi = zero;
    for (std::size_t i = 0; i < k; ++i) {
      if (f & detail::qubit_mask(k, i)) psi = apply_pauli(enc.logical_x[i], psi);
    }
    v.col(static_cast<Eigen::Index>(f)) = psi;
  }
  return v;
}

/// max |P v - v| over the entries of v, without forming P v.
inline double stabilizer_error(const PauliString& p, const DenseOperator& v) {
  const std::uint64_t dim = std::uint64_t{1} << p.num_qubits();
  if (static_cast<std::uint64_t>(v.rows()) != dim) throw DimensionError("stabilizer_error: size mismatch");
  const std::uint64_t xm = detail::pack(p.x()), zm = detail::pack(p.z());
  const Complex ph = i_pow(p.phase());
  double err = 0.0;
  for (Eigen::Index c = 0; c < v.cols(); ++c) {
    for (std::uint64_t b = 0; b < dim; ++b) {
      const double sign = std::popcount(zm & b) % 2 ? -1.0 : 1.0;
      const Complex lhs = ph * sign * v(static_cast<Eigen::Index>(b), c);
      err = std::max(err, std::abs(lhs - v(static_cast<Eigen::Index>(b ^ xm), c)));
    }
  }
  return err;
}

/// max |v l - p v| for a logical Pauli l and a physical Pauli p.
inline double intertwining_error(const DenseOperator& v, const PauliString& logical, const PauliString& physical) {
  const std::uint64_t dim = std::uint64_t{1} << physical.num_qubits();
  const std::uint64_t kdim = std::uint64_t{1} << logical.num_qubits();
  if (static_cast<std::uint64_t>(v.rows()) != dim || static_cast<std::uint64_t>(v.cols()) != kdim) {
    throw DimensionError("intertwining_error: size mismatch");
  }
  const std::uint64_t xl = detail::pack(logical.x()), zl = detail::pack(logical.z());
  const std::uint64_t xp = detail::pack(physical.x()), zp = detail::pack(physical.z());
  const Complex phl = i_pow(logical.phase()), php = i_pow(physical.phase());
  double err = 0.0;
  for (std::uint64_t f = 0; f < kdim; ++f) {
    // Column f of v l is phl (-1)^{zl.f} v[:, f ^ xl].
    const Complex lf = phl * (std::popcount(zl & f) % 2 ? -1.0 : 1.0);
    const auto src = static_cast<Eigen::Index>(f ^ xl);
    for (std::uint64_t b = 0; b < dim; ++b) {
      const Complex pv = php * (std::popcount(zp & b) % 2 ? -1.0 : 1.0) * v(static_cast<Eigen::Index>(b), static_cast<Eigen::Index>(f));
      err = std::max(err, std::abs(pv - lf * v(static_cast<Eigen::Index>(b ^ xp), src)));
    }
  }
  return err;
}

/// Ascending eigenvalues of a Hermitian Pauli sum.
inline std::vector<double> spectrum(const PauliSum& h) {
  detail::require_dense(h.num_qubits(), kSpectrumQubitCap);
  if (!h.is_hermitian(1e-12)) throw std::invalid_argument("spectrum: operator is not Hermitian");
  Eigen::SelfAdjointEigenSolver<DenseOperator> es(pauli_matrix(h), Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) throw std::runtime_error("spectrum: eigensolver did not converge");
  const auto& ev = es.eigenvalues();
  return std::vector<double>(ev.data(), ev.data() + ev.size());
}

}  // namespace f2q
