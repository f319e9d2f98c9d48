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

#include <string>
#include <utility>
#include <vector>

#include "f2q/bits.hpp"
#include "f2q/pauli.hpp"

namespace f2q {

enum class EncodingKind { kJordanWigner, kParity, kBravyiKitaev, kCustom };

inline const char* kind_name(EncodingKind k) {
  switch (k) {
    case EncodingKind::kJordanWigner: return "jw";
    case EncodingKind::kParity: return "parity";
    case EncodingKind::kBravyiKitaev: return "bk";
    default: return "custom";
  }
}

/// The basis permutation |f) -> |E f> for an invertible E over GF(2).
class LinearEncoding {
 public:
  explicit LinearEncoding(BitMatrix e, EncodingKind kind = EncodingKind::kCustom)
      : e_(std::move(e)), kind_(kind) {
    if (!e_.square()) throw DimensionError("encoder matrix must be square, got " + e_.shape());
    if (e_.rows() == 0) throw DimensionError("encoder matrix is empty");
    e_inv_ = e_.inverse();
    e_inv_t_ = e_inv_.transpose();
  }

  static LinearEncoding jw(std::size_t n) {
    if (n == 0) throw std::invalid_argument("jw: n must be at least 1");
    return LinearEncoding(BitMatrix::identity(n), EncodingKind::kJordanWigner);
  }
  static LinearEncoding parity(std::size_t n) { return LinearEncoding(parity_matrix(n), EncodingKind::kParity); }
  static LinearEncoding bk(std::size_t n) { return LinearEncoding(bk_matrix(n), EncodingKind::kBravyiKitaev); }
  static LinearEncoding custom(BitMatrix e) { return LinearEncoding(std::move(e)); }

  std::size_t n() const noexcept { return e_.rows(); }
  const BitMatrix& matrix() const noexcept { return e_; }
  const BitMatrix& inverse() const noexcept { return e_inv_; }
  /// (E^{-1})^T, the map applied to Z parts.
  const BitMatrix& inverse_transpose() const noexcept { return e_inv_t_; }
  EncodingKind kind() const noexcept { return kind_; }

 private:
  BitMatrix e_;
  BitMatrix e_inv_;
  BitMatrix e_inv_t_;
  EncodingKind kind_;
};

/// U_E p U_E^dag: X^x -> X^{Ex}, Z^z -> Z^{E^{-T} z}, phase unchanged.
inline PauliString conjugate_pauli(const LinearEncoding& enc, const PauliString& p) {
  if (p.num_qubits() != enc.n()) {
    throw DimensionError("Pauli on " + std::to_string(p.num_qubits()) + " qubits, encoding on " +
                         std::to_string(enc.n()));
  }
  return PauliString(enc.matrix() * p.x(), enc.inverse_transpose() * p.z(), p.phase());
}

inline PauliSum conjugate_sum(const LinearEncoding& enc, const PauliSum& s) {
  PauliSum out(enc.n());
  for (const auto& [k, c] : s.terms()) out.add_term(conjugate_pauli(enc, PauliString(k.first, k.second)), c);
  return out;
}

/// gamma_{2j} = Z_{<j} X_j and gamma_{2j+1} = Z_{<j} Y_j.
inline PauliString jw_majorana(std::size_t n, std::size_t m) {
  if (m >= 2 * n) {
    throw std::out_of_range("Majorana index " + std::to_string(m) + " out of range for " + std::to_string(n) + " modes");
  }
  const std::size_t j = m / 2;
  const bool odd = m % 2;
  return PauliString(BitVec::unit(n, j), BitVec::prefix(n, odd ? j + 1 : j), odd ? 1 : 0);
}

inline PauliString encode_majorana(const LinearEncoding& enc, std::size_t m) {
  return conjugate_pauli(enc, jw_majorana(enc.n(), m));
}

/// a_p = (gamma_{2p} + i gamma_{2p+1}) / 2 and its adjoint.
inline PauliSum encode_ladder(const LinearEncoding& enc, std::size_t p, bool dagger) {
  if (p >= enc.n()) {
    throw std::out_of_range("mode " + std::to_string(p) + " out of range for " + std::to_string(enc.n()) + " modes");
  }
  PauliSum out(enc.n());
  out.add_term(encode_majorana(enc, 2 * p), 0.5);
  out.add_term(encode_majorana(enc, 2 * p + 1), Complex(0.0, dagger ? -0.5 : 0.5));
  return out;
}

struct LadderOp {
  std::size_t mode = 0;
  bool dagger = false;
  friend bool operator==(const LadderOp&, const LadderOp&) = default;
};

inline LadderOp cr(std::size_t p) { return {p, true}; }
inline LadderOp an(std::size_t p) { return {p, false}; }

/// coeff times an ordered product of ladder operators.
struct FermionTerm {
  Complex coeff{1.0, 0.0};
  std::vector<LadderOp> factors;
};

inline PauliSum encode_fermion_product(const LinearEncoding& enc, const FermionTerm& t) {
  for (const LadderOp& f : t.factors) {
    if (f.mode >= enc.n()) {
      throw std::out_of_range("mode " + std::to_string(f.mode) + " out of range for " + std::to_string(enc.n()) + " modes");
    }
  }
  PauliSum out = PauliSum::identity(enc.n(), t.coeff);
  for (const LadderOp& f : t.factors) {
    out = out * encode_ladder(enc, f.mode, f.dagger);
    if (out.empty()) break;
  }
  return out;
}

}  // namespace f2q
