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

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <iomanip>
#include <map>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "f2q/bits.hpp"

namespace f2q {

using Complex = std::complex<double>;

/// Raised on malformed Pauli labels; position() is the character offset.
class LabelError : public std::invalid_argument {
 public:
  LabelError(const std::string& what, std::size_t pos)
      : std::invalid_argument(what + " at position " + std::to_string(pos)), pos_(pos) {}
  std::size_t position() const noexcept { return pos_; }

 private:
  std::size_t pos_;
};

/// i^k for k mod 4.
inline Complex i_pow(int k) {
  switch (((k % 4) + 4) % 4) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, -1.0};
  }
}

/// n-qubit Pauli operator i^phase * X^x * Z^z (X part to the left). Qubit 0 is
/// the leftmost label character and the most significant basis-state bit.
/// Y on qubit j is stored as x_j = z_j = 1 with one unit of phase, Y = iXZ.
class PauliString {
 public:
  PauliString() = default;
  explicit PauliString(std::size_t n) : x_(n), z_(n) {}
  PauliString(BitVec x, BitVec z, int phase = 0) : x_(std::move(x)), z_(std::move(z)), phase_(mod4(phase)) {
    if (x_.size() != z_.size()) throw DimensionError("x and z parts differ in length");
  }

  static PauliString identity(std::size_t n) { return PauliString(n); }
  static PauliString single(std::size_t n, std::size_t q, char p) {
    PauliString s(n);
    s.set(q, p);
    return s;
  }

  std::size_t num_qubits() const noexcept { return x_.size(); }
  const BitVec& x() const noexcept { return x_; }
  const BitVec& z() const noexcept { return z_; }
  int phase() const noexcept { return phase_; }
  void set_phase(int p) { phase_ = mod4(p); }

  /// Overwrites qubit q with a Hermitian single-qubit Pauli ('I','X','Y','Z'),
  /// keeping the string's Hermitian-relative phase.
  void set(std::size_t q, char p) {
    const bool was_y = x_.get(q) && z_.get(q);
    const bool is_y = p == 'Y';
    x_.set(q, p == 'X' || p == 'Y');
    z_.set(q, p == 'Z' || p == 'Y');
    phase_ = mod4(phase_ + (is_y ? 1 : 0) - (was_y ? 1 : 0));
  }

  char at(std::size_t q) const {
    const bool xb = x_.get(q);
    const bool zb = z_.get(q);
    return xb ? (zb ? 'Y' : 'X') : (zb ? 'Z' : 'I');
  }

  std::size_t y_count() const { return (x_ & z_).popcount(); }

  /// Phase relative to the Hermitian label form: the string equals
  /// i^hermitian_phase() * (product of labelled X/Y/Z factors).
  int hermitian_phase() const { return mod4(phase_ - static_cast<int>(y_count() % 4)); }
  bool is_hermitian() const { return hermitian_phase() % 2 == 0; }

  std::size_t weight() const { return (x_ | z_).popcount(); }
  bool is_identity_up_to_phase() const { return x_.none() && z_.none(); }

  /// Same (x, z) with the phase reset so the string is the labelled Hermitian operator.
  PauliString unsigned_form() const {
    PauliString p = *this;
    p.phase_ = mod4(static_cast<int>(y_count() % 4));
    return p;
  }

  PauliString adjoint() const {
    // (i^a X^x Z^z)^dag = i^-a Z^z X^x = i^-a (-1)^{x.z} X^x Z^z
    return PauliString(x_, z_, -phase_ + (x_.dot(z_) ? 2 : 0));
  }

  friend PauliString operator*(const PauliString& a, const PauliString& b) {
    if (a.num_qubits() != b.num_qubits()) {
      throw DimensionError("Pauli size mismatch: " + std::to_string(a.num_qubits()) + " vs " +
                           std::to_string(b.num_qubits()));
    }
    // X^xa Z^za X^xb Z^zb = (-1)^{za.xb} X^{xa+xb} Z^{za+zb}
    const int sign = a.z_.dot(b.x_) ? 2 : 0;
    return PauliString(a.x_ ^ b.x_, a.z_ ^ b.z_, a.phase_ + b.phase_ + sign);
  }

  friend bool operator==(const PauliString&, const PauliString&) = default;

 private:
  static int mod4(int k) { return ((k % 4) + 4) % 4; }

  BitVec x_;
  BitVec z_;
  int phase_ = 0;
};

inline PauliString pauli_mul(const PauliString& a, const PauliString& b) { return a * b; }

inline bool pauli_commutes(const PauliString& a, const PauliString& b) {
  if (a.num_qubits() != b.num_qubits()) throw DimensionError("Pauli size mismatch");
  return a.x().dot(b.z()) == a.z().dot(b.x());
}

inline std::size_t pauli_weight(const PauliString& a) { return a.weight(); }

/// Label of the (x, z) part only, e.g. "X0 Z2" or "I".
inline std::string format_label(const BitVec& x, const BitVec& z) {
  std::string out;
  for (std::size_t q = 0; q < x.size(); ++q) {
    const bool xb = x.get(q);
    const bool zb = z.get(q);
    if (!xb && !zb) continue;
    if (!out.empty()) out += ' ';
    out += xb ? (zb ? 'Y' : 'X') : 'Z';
    out += std::to_string(q);
  }
  return out.empty() ? "I" : out;
}

/// Label with a sign prefix ("-", "i ", "-i ") when the string is not the
/// bare Hermitian product of its factors.
inline std::string format_label(const PauliString& p) {
  static const char* const kPrefix[] = {"", "i ", "-", "-i "};
  return kPrefix[p.hermitian_phase()] + format_label(p.x(), p.z());
}

/// Parses "I" or space-separated `<P><index>` tokens with strictly increasing
/// indices, optionally preceded by "-", "i" or "-i".
inline PauliString parse_label(std::string_view s, std::size_t n) {
  PauliString out(n);
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t')) ++pos;
  };
  skip_ws();
  int prefix = 0;
  if (pos < s.size() && s[pos] == '-') {
    prefix += 2;
    ++pos;
  }
  if (pos < s.size() && s[pos] == 'i') {
    prefix += 1;
    ++pos;
  }
  skip_ws();
  if (pos >= s.size()) throw LabelError("empty Pauli label", pos);
  if (s[pos] == 'I' && (pos + 1 == s.size() || s[pos + 1] == ' ')) {
    ++pos;
    skip_ws();
    if (pos != s.size()) throw LabelError("unexpected text after identity", pos);
    out.set_phase(prefix);
    return out;
  }
  bool have_prev = false;
  std::size_t prev = 0;
  while (pos < s.size()) {
    const std::size_t start = pos;
    const char p = s[pos];
    if (p != 'X' && p != 'Y' && p != 'Z') throw LabelError("expected X, Y or Z", pos);
    ++pos;
    if (pos >= s.size() || s[pos] < '0' || s[pos] > '9') throw LabelError("missing qubit index", pos);
    std::size_t idx = 0;
    while (pos < s.size() && s[pos] >= '0' && s[pos] <= '9') {
      idx = idx * 10 + static_cast<std::size_t>(s[pos] - '0');
      if (idx > (std::size_t{1} << 30)) throw LabelError("qubit index too large", start);
      ++pos;
    }
    if (idx >= n) throw LabelError("qubit index " + std::to_string(idx) + " out of range for " + std::to_string(n) + " qubits", start);
    if (have_prev && idx == prev) throw LabelError("duplicate qubit index " + std::to_string(idx), start);
    if (have_prev && idx < prev) throw LabelError("qubit indices not increasing", start);
    out.set(idx, p);
    have_prev = true;
    prev = idx;
    if (pos < s.size() && s[pos] != ' ' && s[pos] != '\t') throw LabelError("expected whitespace", pos);
    skip_ws();
  }
  out.set_phase(out.phase() + prefix);
  return out;
}

/// Complex-weighted sum of Pauli strings. Each stored key (x, z) stands for
/// the phase-free operator X^x Z^z; phases are folded into the coefficient.
class PauliSum {
 public:
  using Key = std::pair<BitVec, BitVec>;
  static constexpr double kPruneTolerance = 1e-14;

  PauliSum() = default;
  explicit PauliSum(std::size_t n) : n_(n) {}
  explicit PauliSum(const PauliString& p, Complex coeff = 1.0) : n_(p.num_qubits()) {
    add_term(p, coeff);
  }

  static PauliSum identity(std::size_t n, Complex coeff = 1.0) {
    return PauliSum(PauliString::identity(n), coeff);
  }

  std::size_t num_qubits() const noexcept { return n_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool empty() const noexcept { return terms_.empty(); }
  const std::map<Key, Complex>& terms() const noexcept { return terms_; }

  void add_term(const PauliString& p, Complex coeff = 1.0) {
    require(p.num_qubits());
    accumulate(Key{p.x(), p.z()}, coeff * i_pow(p.phase()));
  }

  /// Coefficient of the phase-free key X^x Z^z.
  Complex coefficient(const BitVec& x, const BitVec& z) const {
    auto it = terms_.find(Key{x, z});
    return it == terms_.end() ? Complex{} : it->second;
  }
  /// Coefficient in front of the Hermitian-labelled string with this (x, z).
  Complex label_coefficient(const PauliString& p) const {
    return coefficient(p.x(), p.z()) * i_pow(-static_cast<int>(p.y_count() % 4));
  }

  PauliSum& operator+=(const PauliSum& o) {
    require(o.n_);
    for (const auto& [k, c] : o.terms_) accumulate(k, c);
    return *this;
  }
  PauliSum& operator-=(const PauliSum& o) { return *this += o * Complex{-1.0}; }
  PauliSum& operator*=(Complex s) {
    for (auto it = terms_.begin(); it != terms_.end();) {
      it->second *= s;
      it = std::abs(it->second) < kPruneTolerance ? terms_.erase(it) : std::next(it);
    }
    return *this;
  }

  friend PauliSum operator+(PauliSum a, const PauliSum& b) { return a += b; }
  friend PauliSum operator-(PauliSum a, const PauliSum& b) { return a -= b; }
  friend PauliSum operator*(PauliSum a, Complex s) { return a *= s; }
  friend PauliSum operator*(Complex s, PauliSum a) { return a *= s; }

  friend PauliSum operator*(const PauliSum& a, const PauliSum& b) {
    if (a.n_ != b.n_) throw DimensionError("PauliSum size mismatch");
    PauliSum out(a.n_);
    for (const auto& [ka, ca] : a.terms_) {
      const PauliString pa(ka.first, ka.second);
      for (const auto& [kb, cb] : b.terms_) {
        const PauliString prod = pa * PauliString(kb.first, kb.second);
        out.accumulate(Key{prod.x(), prod.z()}, ca * cb * i_pow(prod.phase()));
      }
    }
    return out;
  }

  PauliSum adjoint() const {
    PauliSum out(n_);
    for (const auto& [k, c] : terms_) {
      const double sign = k.first.dot(k.second) ? -1.0 : 1.0;
      out.accumulate(k, std::conj(c) * sign);
    }
    return out;
  }

  /// Largest coefficient difference over the union of keys.
  friend double max_abs_diff(const PauliSum& a, const PauliSum& b) {
    double d = 0.0;
    for (const auto& [k, c] : a.terms_) d = std::max(d, std::abs(c - b.coefficient(k.first, k.second)));
    for (const auto& [k, c] : b.terms_) d = std::max(d, std::abs(c - a.coefficient(k.first, k.second)));
    return d;
  }
  bool approx_equal(const PauliSum& o, double tol = 1e-12) const {
    return n_ == o.n_ && max_abs_diff(*this, o) <= tol;
  }
  bool is_hermitian(double tol = 1e-12) const { return approx_equal(adjoint(), tol); }

  /// Largest weight among the stored terms.
  std::size_t max_weight() const {
    std::size_t w = 0;
    for (const auto& [k, c] : terms_) w = std::max(w, (k.first | k.second).popcount());
    return w;
  }

  /// Terms as Hermitian-labelled strings with matching coefficients.
  std::vector<std::pair<PauliString, Complex>> labelled_terms() const {
    std::vector<std::pair<PauliString, Complex>> out;
    out.reserve(terms_.size());
    for (const auto& [k, c] : terms_) {
      PauliString p = PauliString(k.first, k.second).unsigned_form();
      out.emplace_back(p, c * i_pow(-static_cast<int>(p.y_count() % 4)));
    }
    return out;
  }

  /// `<re> <im> <label>` per line, 12 significant digits, sorted by label.
  std::string to_text() const {
    std::vector<std::pair<std::string, Complex>> lines;
    for (const auto& [p, c] : labelled_terms()) lines.emplace_back(format_label(p.x(), p.z()), c);
    std::sort(lines.begin(), lines.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    std::ostringstream os;
    os << std::setprecision(12);
    for (const auto& [label, c] : lines) {
      os << clean(c.real()) << ' ' << clean(c.imag()) << ' ' << label << '\n';
    }
    return os.str();
  }

  static PauliSum from_text(std::istream& in, std::size_t n) {
    PauliSum out(n);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      if (line.empty()) continue;
      std::istringstream ls(line);
      double re = 0.0;
      double im = 0.0;
      if (!(ls >> re >> im)) throw std::invalid_argument("bad coefficient on line " + std::to_string(lineno));
      std::string label;
      std::getline(ls, label);
      const PauliString p = parse_label(label, n);
      out.add_term(p, Complex{re, im});
    }
    return out;
  }

  friend bool operator==(const PauliSum&, const PauliSum&) = default;

 private:
  static double clean(double v) { return std::abs(v) < 5e-15 ? 0.0 : v; }

  void require(std::size_t n) const {
    if (n != n_) throw DimensionError("PauliSum over " + std::to_string(n_) + " qubits got a " + std::to_string(n) + "-qubit operand");
  }
  void accumulate(const Key& k, Complex c) {
    auto [it, inserted] = terms_.try_emplace(k, c);
    if (!inserted) it->second += c;
    if (std::abs(it->second) < kPruneTolerance) terms_.erase(it);
  }

  std::size_t n_ = 0;
  std::map<Key, Complex> terms_;
};

inline PauliSum sum_add(const PauliSum& a, const PauliSum& b) { return a + b; }
inline PauliSum sum_scale(const PauliSum& a, Complex s) { return a * s; }
inline PauliSum sum_mul(const PauliSum& a, const PauliSum& b) { return a * b; }

}  // namespace f2q
