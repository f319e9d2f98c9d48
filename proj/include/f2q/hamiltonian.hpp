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

#include <map>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "f2q/linear_encoding.hpp"
#include "f2q/pauli.hpp"

namespace f2q {

namespace detail {

inline void check_modes(const LinearEncoding& enc, std::initializer_list<std::size_t> idx, const char* what) {
  std::vector<std::size_t> seen;
  for (std::size_t p : idx) {
    if (p >= enc.n()) {
      throw std::out_of_range(std::string(what) + ": mode " + std::to_string(p) + " out of range for " +
                              std::to_string(enc.n()) + " modes");
    }
    for (std::size_t q : seen) {
      if (q == p) throw std::invalid_argument(std::string(what) + ": repeated mode " + std::to_string(p));
    }
    seen.push_back(p);
  }
}

/// JW image of a product of ladder operators on distinct modes, written as
///   (-1)^s Z^{sum 1_{p-1}} X^{sum e_p} prod_p (I +- Z_p)/2
/// where s counts factor pairs (earlier p, later q) with p < q, and the
/// projector sign is + for creators.
inline PauliSum jw_projector_form(std::size_t n, const std::vector<LadderOp>& ops) {
  int s = 0;
  BitVec zs(n), xs(n);
  for (std::size_t a = 0; a < ops.size(); ++a) {
    for (std::size_t b = a + 1; b < ops.size(); ++b) s += ops[a].mode < ops[b].mode ? 1 : 0;
    zs ^= BitVec::prefix(n, ops[a].mode);
    xs.set(ops[a].mode);
  }
  PauliSum out(PauliString(BitVec(n), zs), s % 2 ? -1.0 : 1.0);
  out = out * PauliSum(PauliString(xs, BitVec(n)));
  for (const LadderOp& op : ops) {
    PauliSum proj = PauliSum::identity(n, 0.5);
    proj.add_term(PauliString(BitVec(n), BitVec::unit(n, op.mode)), op.dagger ? 0.5 : -0.5);
    out = out * proj;
  }
  return out;
}

}  // namespace detail

/// c (I - Z^{E^{-T} e_i}) / 2.
inline PauliSum number_term(const LinearEncoding& enc, std::size_t i, Complex c = 1.0) {
  detail::check_modes(enc, {i}, "number_term");
  const std::size_t n = enc.n();
  PauliSum out = PauliSum::identity(n, 0.5 * c);
  out.add_term(PauliString(BitVec(n), enc.inverse_transpose() * BitVec::unit(n, i)), -0.5 * c);
  return out;
}

/// c n_i n_j.
inline PauliSum exchange_term(const LinearEncoding& enc, std::size_t i, std::size_t j, Complex c = 1.0) {
  detail::check_modes(enc, {i, j}, "exchange_term");
  return number_term(enc, i, c) * number_term(enc, j);
}

/// c (a_i^dag a_j + a_j^dag a_i).
inline PauliSum excitation_term(const LinearEncoding& enc, std::size_t i, std::size_t j, Complex c = 1.0) {
  detail::check_modes(enc, {i, j}, "excitation_term");
  const PauliSum t = detail::jw_projector_form(enc.n(), {cr(i), an(j)});
  return conjugate_sum(enc, (t + t.adjoint()) * c);
}

/// c (a_i^dag a_j^dag a_j a_k + a_k^dag a_j^dag a_j a_i) = c (a_i^dag a_k + h.c.) n_j.
inline PauliSum number_excitation_term(const LinearEncoding& enc, std::size_t i, std::size_t j, std::size_t k,
                                       Complex c = 1.0) {
  detail::check_modes(enc, {i, j, k}, "number_excitation_term");
  return excitation_term(enc, i, k, c) * number_term(enc, j);
}

/// Sign bit of the double excitation as drawn in the term table:
/// 0 iff (i < l and k < j) or (i > l and k > j).
inline int double_excitation_sign_bit(std::size_t i, std::size_t j, std::size_t k, std::size_t l) {
  return ((i < l && k < j) || (i > l && k > j)) ? 0 : 1;
}

/// Sign bit s of the JW projector form of a_i^dag a_l a_j^dag a_k: the parity
/// of ordered pairs among (i, l, j, k) that appear in increasing order.
inline int double_excitation_phase_bit(std::size_t i, std::size_t j, std::size_t k, std::size_t l) {
  const std::size_t o[] = {i, l, j, k};
  int s = 0;
  for (int a = 0; a < 4; ++a)
    for (int b = a + 1; b < 4; ++b) s += o[a] < o[b] ? 1 : 0;
  return s % 2;
}

/// c (a_i^dag a_j^dag a_k a_l + a_l^dag a_k^dag a_j a_i), using
/// a_i^dag a_j^dag a_k a_l = a_i^dag a_l a_j^dag a_k.
inline PauliSum double_excitation_term(const LinearEncoding& enc, std::size_t i, std::size_t j, std::size_t k,
                                       std::size_t l, Complex c = 1.0) {
  detail::check_modes(enc, {i, j, k, l}, "double_excitation_term");
  const PauliSum t = detail::jw_projector_form(enc.n(), {cr(i), an(l), cr(j), an(k)});
  return conjugate_sum(enc, (t + t.adjoint()) * c);
}

/// H = sum h_ij a_i^dag a_j + 1/2 sum h_ijkl a_i^dag a_j^dag a_k a_l.
struct HamiltonianSpec {
  std::size_t n = 0;
  std::map<std::pair<std::size_t, std::size_t>, double> one_body;
  std::map<std::tuple<std::size_t, std::size_t, std::size_t, std::size_t>, double> two_body;

  void validate() const {
    auto check = [this](std::size_t p) {
      if (p >= n) throw std::out_of_range("HamiltonianSpec: index " + std::to_string(p) + " >= n = " + std::to_string(n));
    };
    for (const auto& [ij, h] : one_body) {
      check(ij.first);
      check(ij.second);
    }
    for (const auto& [t, h] : two_body) {
      check(std::get<0>(t));
      check(std::get<1>(t));
      check(std::get<2>(t));
      check(std::get<3>(t));
    }
  }
};

inline PauliSum assemble_hamiltonian(const LinearEncoding& enc, const HamiltonianSpec& spec) {
  spec.validate();
  if (spec.n != enc.n()) {
    throw DimensionError("HamiltonianSpec has " + std::to_string(spec.n) + " modes, encoding " + std::to_string(enc.n()));
  }
  PauliSum h(enc.n());
  for (const auto& [ij, c] : spec.one_body) {
    h += encode_fermion_product(enc, {c, {cr(ij.first), an(ij.second)}});
  }
  for (const auto& [t, c] : spec.two_body) {
    const auto [i, j, k, l] = t;
    h += encode_fermion_product(enc, {0.5 * c, {cr(i), cr(j), an(k), an(l)}});
  }
  return h;
}

namespace h2 {

inline constexpr double kMu1 = -1.252477;
inline constexpr double kMu2 = -0.475934;
inline constexpr double kMu3 = 0.674493;
inline constexpr double kMu4 = 0.697397;
inline constexpr double kMu5 = 0.663472;
inline constexpr double kMu6 = 0.181287;

enum class TermKind { kNumber, kExchange, kDoubleExcitation };

/// One grouped term of the minimal-basis H2 Hamiltonian.
struct Term {
  TermKind kind;
  std::vector<std::size_t> modes;
  double coeff;
};

/// Number terms, the six n_i n_j products and the two double excitations.
inline std::vector<Term> terms() {
  using K = TermKind;
  return {
      {K::kNumber, {0}, kMu1},
      {K::kNumber, {1}, kMu1},
      {K::kNumber, {2}, kMu2},
      {K::kNumber, {3}, kMu2},
      {K::kExchange, {0, 1}, kMu3},
      {K::kExchange, {2, 3}, kMu4},
      {K::kExchange, {0, 3}, kMu5},
      {K::kExchange, {1, 2}, kMu5},
      {K::kExchange, {0, 2}, kMu5 - kMu6},
      {K::kExchange, {1, 3}, kMu5 - kMu6},
      {K::kDoubleExcitation, {0, 1, 3, 2}, kMu6},
      {K::kDoubleExcitation, {0, 3, 1, 2}, kMu6},
  };
}

/// Integral table in the symmetric form consumed by assemble_hamiltonian.
inline HamiltonianSpec spec() {
  HamiltonianSpec s;
  s.n = 4;
  s.one_body[{0, 0}] = kMu1;
  s.one_body[{1, 1}] = kMu1;
  s.one_body[{2, 2}] = kMu2;
  s.one_body[{3, 3}] = kMu2;
  auto coulomb = [&s](std::size_t i, std::size_t j, double h) {
    s.two_body[{i, j, j, i}] = h;
    s.two_body[{j, i, i, j}] = h;
  };
  coulomb(0, 1, kMu3);
  coulomb(2, 3, kMu4);
  coulomb(0, 2, kMu5);
  coulomb(0, 3, kMu5);
  coulomb(1, 2, kMu5);
  coulomb(1, 3, kMu5);
  auto exchange = [&s](std::size_t i, std::size_t j, double h) {
    s.two_body[{i, j, i, j}] = h;
    s.two_body[{j, i, j, i}] = h;
  };
  exchange(0, 2, kMu6);
  exchange(1, 3, kMu6);
  auto dexc = [&s](std::size_t i, std::size_t j, std::size_t k, std::size_t l, double h) {
    s.two_body[{i, j, k, l}] = h;
    s.two_body[{j, i, l, k}] = h;
    s.two_body[{l, k, j, i}] = h;
    s.two_body[{k, l, i, j}] = h;
  };
  dexc(0, 1, 3, 2, kMu6);
  dexc(0, 3, 1, 2, kMu6);
  return s;
}

}  // namespace h2

inline PauliSum hydrogen_hamiltonian(const LinearEncoding& enc) {
  if (enc.n() != 4) throw DimensionError("hydrogen_hamiltonian needs 4 modes, got " + std::to_string(enc.n()));
  PauliSum h(4);
  for (const h2::Term& t : h2::terms()) {
    const auto& m = t.modes;
    switch (t.kind) {
      case h2::TermKind::kNumber: h += number_term(enc, m[0], t.coeff); break;
      case h2::TermKind::kExchange: h += exchange_term(enc, m[0], m[1], t.coeff); break;
      case h2::TermKind::kDoubleExcitation: h += double_excitation_term(enc, m[0], m[1], m[2], m[3], t.coeff); break;
    }
  }
  return h;
}

}  // namespace f2q
