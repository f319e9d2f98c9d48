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
#include <bit>
#include <cstddef>
#include <cstdint>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace f2q {

/// Raised when operand shapes do not line up.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised by BitMatrix::inverse on a singular input. Carries the rank found
/// during elimination.
class SingularMatrixError : public std::domain_error {
 public:
  explicit SingularMatrixError(std::size_t rank)
      : std::domain_error("matrix is not invertible (rank " +
                          std::to_string(rank) + ")"),
        rank_(rank) {}
  std::size_t rank() const noexcept { return rank_; }

 private:
  std::size_t rank_;
};

/// Fixed-length vector over GF(2), packed into 64-bit words.
class BitVec {
 public:
  using word_type = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  BitVec() = default;
  explicit BitVec(std::size_t n) : size_(n), words_((n + kWordBits - 1) / kWordBits, 0) {}

  static BitVec unit(std::size_t n, std::size_t p) {
    BitVec v(n);
    v.set(p);
    return v;
  }
  static BitVec ones(std::size_t n) {
    BitVec v(n);
    for (std::size_t i = 0; i < n; ++i) v.set(i);
    return v;
  }
  /// Bits 0..p-1 set (the prefix indicator used by the Jordan-Wigner Z string).
  static BitVec prefix(std::size_t n, std::size_t p) {
    BitVec v(n);
    for (std::size_t i = 0; i < std::min(p, n); ++i) v.set(i);
    return v;
  }
  static BitVec from_string(std::string_view s) {
    BitVec v(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (s[i] == '1') {
        v.set(i);
      } else if (s[i] != '0') {
        throw std::invalid_argument("bit string contains '" + std::string(1, s[i]) +
                                    "' at position " + std::to_string(i));
      }
    }
    return v;
  }

  std::size_t size() const noexcept { return size_; }

  bool get(std::size_t i) const { return (words_[i / kWordBits] >> (i % kWordBits)) & 1U; }
  bool operator[](std::size_t i) const { return get(i); }
  void set(std::size_t i, bool value = true) {
    const word_type mask = word_type{1} << (i % kWordBits);
    if (value) {
      words_[i / kWordBits] |= mask;
    } else {
      words_[i / kWordBits] &= ~mask;
    }
  }
  void flip(std::size_t i) { words_[i / kWordBits] ^= word_type{1} << (i % kWordBits); }

  BitVec& operator^=(const BitVec& o) {
    require_same(o);
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= o.words_[w];
    return *this;
  }
  BitVec& operator&=(const BitVec& o) {
    require_same(o);
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= o.words_[w];
    return *this;
  }
  BitVec& operator|=(const BitVec& o) {
    require_same(o);
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] |= o.words_[w];
    return *this;
  }
  friend BitVec operator^(BitVec a, const BitVec& b) { return a ^= b; }
  friend BitVec operator&(BitVec a, const BitVec& b) { return a &= b; }
  friend BitVec operator|(BitVec a, const BitVec& b) { return a |= b; }

  std::size_t popcount() const noexcept {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  bool any() const noexcept {
    return std::any_of(words_.begin(), words_.end(), [](word_type w) { return w != 0; });
  }
  bool none() const noexcept { return !any(); }

  /// Inner product over GF(2).
  bool dot(const BitVec& o) const {
    require_same(o);
    word_type acc = 0;
    for (std::size_t w = 0; w < words_.size(); ++w) acc ^= words_[w] & o.words_[w];
    return std::popcount(acc) & 1;
  }

  /// Index of the lowest set bit, or size() if none.
  std::size_t first_set() const noexcept {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      if (words_[w] != 0) return w * kWordBits + static_cast<std::size_t>(std::countr_zero(words_[w]));
    }
    return size_;
  }

  std::string to_string() const {
    std::string s(size_, '0');
    for (std::size_t i = 0; i < size_; ++i) {
      if (get(i)) s[i] = '1';
    }
    return s;
  }

  const std::vector<word_type>& words() const noexcept { return words_; }

  friend bool operator==(const BitVec&, const BitVec&) = default;
  friend bool operator<(const BitVec& a, const BitVec& b) {
    if (a.size_ != b.size_) return a.size_ < b.size_;
    return a.words_ < b.words_;
  }

 private:
  void require_same(const BitVec& o) const {
    if (o.size_ != size_) {
      throw DimensionError("bit vector length mismatch: " + std::to_string(size_) + " vs " +
                           std::to_string(o.size_));
    }
  }

  std::size_t size_ = 0;
  std::vector<word_type> words_;
};

/// Dense matrix over GF(2), stored as packed rows.
class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(std::size_t rows, std::size_t cols) : cols_(cols), data_(rows, BitVec(cols)) {}

  static BitMatrix identity(std::size_t n) {
    BitMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i);
    return m;
  }
  static BitMatrix from_rows(const std::vector<std::string>& rows) {
    if (rows.empty()) return {};
    BitMatrix m(rows.size(), rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != m.cols_) {
        throw DimensionError("row " + std::to_string(i) + " has " + std::to_string(rows[i].size()) +
                             " entries, expected " + std::to_string(m.cols_));
      }
      m.data_[i] = BitVec::from_string(rows[i]);
    }
    return m;
  }

  std::size_t rows() const noexcept { return data_.size(); }
  std::size_t cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows() == cols_; }

  bool get(std::size_t i, std::size_t j) const { return data_[i].get(j); }
  void set(std::size_t i, std::size_t j, bool v = true) { data_[i].set(j, v); }
  const BitVec& row(std::size_t i) const { return data_[i]; }
  BitVec& row(std::size_t i) { return data_[i]; }

  BitVec column(std::size_t j) const {
    BitVec c(rows());
    for (std::size_t i = 0; i < rows(); ++i) c.set(i, get(i, j));
    return c;
  }

  BitMatrix transpose() const {
    BitMatrix t(cols_, rows());
    for (std::size_t i = 0; i < rows(); ++i) {
      for (std::size_t j = 0; j < cols_; ++j) {
        if (get(i, j)) t.set(j, i);
      }
    }
    return t;
  }

  /// Copies `block` into this matrix with its top-left corner at (r0, c0).
  void set_block(std::size_t r0, std::size_t c0, const BitMatrix& block) {
    if (r0 + block.rows() > rows() || c0 + block.cols() > cols_) {
      throw DimensionError("block does not fit");
    }
    for (std::size_t i = 0; i < block.rows(); ++i) {
      for (std::size_t j = 0; j < block.cols(); ++j) set(r0 + i, c0 + j, block.get(i, j));
    }
  }
  BitMatrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    if (r0 + nr > rows() || c0 + nc > cols_) throw DimensionError("block out of range");
    BitMatrix b(nr, nc);
    for (std::size_t i = 0; i < nr; ++i) {
      for (std::size_t j = 0; j < nc; ++j) b.set(i, j, get(r0 + i, c0 + j));
    }
    return b;
  }

  bool is_identity() const {
    if (!square()) return false;
    for (std::size_t i = 0; i < rows(); ++i) {
      if (data_[i].popcount() != 1 || !get(i, i)) return false;
    }
    return true;
  }

  std::size_t rank() const {
    std::vector<BitVec> work = data_;
    return eliminate(work, nullptr);
  }

  /// Gauss-Jordan inverse. Throws SingularMatrixError with the rank reached.
  BitMatrix inverse() const {
    if (!square()) {
      throw DimensionError("inverse of non-square " + shape() + " matrix");
    }
    const std::size_t n = rows();
    std::vector<BitVec> work = data_;
    std::vector<BitVec> inv = identity(n).data_;
    const std::size_t r = eliminate(work, &inv);
    if (r != n) throw SingularMatrixError(r);
    BitMatrix out(n, n);
    out.data_ = std::move(inv);
    return out;
  }

  std::string shape() const { return std::to_string(rows()) + "x" + std::to_string(cols_); }

  /// One row per line, '0'/'1' characters, newline-terminated.
  std::string to_text() const {
    std::string s;
    for (const auto& r : data_) {
      s += r.to_string();
      s += '\n';
    }
    return s;
  }
  static BitMatrix from_text(std::istream& in) {
    std::vector<std::string> rows;
    std::string line;
    while (std::getline(in, line)) {
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (line.empty()) continue;
      rows.push_back(line);
    }
    return from_rows(rows);
  }

  friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

  friend BitMatrix operator*(const BitMatrix& a, const BitMatrix& b) {
    if (a.cols() != b.rows()) {
      throw DimensionError("cannot multiply " + a.shape() + " by " + b.shape());
    }
    BitMatrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
      for (std::size_t k = 0; k < a.cols(); ++k) {
        if (a.get(i, k)) out.data_[i] ^= b.data_[k];
      }
    }
    return out;
  }
  friend BitVec operator*(const BitMatrix& a, const BitVec& x) {
    if (a.cols() != x.size()) {
      throw DimensionError("cannot apply " + a.shape() + " matrix to length-" +
                           std::to_string(x.size()) + " vector");
    }
    BitVec y(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) y.set(i, a.data_[i].dot(x));
    return y;
  }

 private:
  // Reduces `work` to reduced row echelon form, mirroring row operations on
  // `companion` when given. Pivots are taken column by column.
  static std::size_t eliminate(std::vector<BitVec>& work, std::vector<BitVec>* companion) {
    if (work.empty()) return 0;
    const std::size_t nrows = work.size();
    const std::size_t ncols = work.front().size();
    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < ncols && pivot_row < nrows; ++col) {
      std::size_t sel = pivot_row;
      while (sel < nrows && !work[sel].get(col)) ++sel;
      if (sel == nrows) continue;
      std::swap(work[sel], work[pivot_row]);
      if (companion) std::swap((*companion)[sel], (*companion)[pivot_row]);
      for (std::size_t r = 0; r < nrows; ++r) {
        if (r != pivot_row && work[r].get(col)) {
          work[r] ^= work[pivot_row];
          if (companion) (*companion)[r] ^= (*companion)[pivot_row];
        }
      }
      ++pivot_row;
    }
    return pivot_row;
  }

  std::size_t cols_ = 0;
  std::vector<BitVec> data_;
};

inline BitMatrix mat_mul(const BitMatrix& a, const BitMatrix& b) { return a * b; }
inline BitMatrix mat_inverse(const BitMatrix& a) { return a.inverse(); }

/// Ones on and below the diagonal.
inline BitMatrix parity_matrix(std::size_t n) {
  if (n == 0) throw std::invalid_argument("parity_matrix: n must be at least 1");
  BitMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j <= i; ++j) m.set(i, j);
  }
  return m;
}

/// Bravyi-Kitaev encoder. Built by the doubling recurrence
/// beta_{k+1} = [[beta_k, 0], [A, beta_k]] with A all ones on its last row;
/// sizes that are not powers of two take the leading principal submatrix.
inline BitMatrix bk_matrix(std::size_t n) {
  if (n == 0) throw std::invalid_argument("bk_matrix: n must be at least 1");
  BitMatrix beta = BitMatrix::identity(1);
  while (beta.rows() < n) {
    const std::size_t h = beta.rows();
    BitMatrix next(2 * h, 2 * h);
    next.set_block(0, 0, beta);
    next.set_block(h, h, beta);
    for (std::size_t j = 0; j < h; ++j) next.set(2 * h - 1, j);
    beta = std::move(next);
  }
  return beta.rows() == n ? beta : beta.block(0, 0, n, n);
}

/// Reverses column order, i.e. right-multiplies by the anti-diagonal matrix.
inline BitMatrix column_reverse(const BitMatrix& a) {
  BitMatrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out.set(i, a.cols() - 1 - j, a.get(i, j));
  }
  return out;
}

/// Uniform over invertible n x n matrices (rejection sampling).
template <class Rng>
BitMatrix random_invertible(std::size_t n, Rng& rng) {
  if (n == 0) throw DimensionError("random_invertible: n must be at least 1");
  for (;;) {
    BitMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m.set(i, j, (rng() & 1U) != 0);
    if (m.rank() == n) return m;
  }
}

/// Reduced row echelon form in place; returns pivot columns. Zero rows are dropped.
inline std::vector<std::size_t> rref(std::vector<BitVec>& rows) {
  std::vector<std::size_t> pivots;
  if (rows.empty()) return pivots;
  const std::size_t ncols = rows.front().size();
  std::size_t r = 0;
  for (std::size_t col = 0; col < ncols && r < rows.size(); ++col) {
    std::size_t sel = r;
    while (sel < rows.size() && !rows[sel].get(col)) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[sel], rows[r]);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i != r && rows[i].get(col)) rows[i] ^= rows[r];
    }
    pivots.push_back(col);
    ++r;
  }
  rows.resize(r);
  return pivots;
}

inline std::size_t span_rank(std::vector<BitVec> vs) { return rref(vs).size(); }

/// True when v lies in the span of basis.
inline bool in_span(const std::vector<BitVec>& basis, const BitVec& v) {
  std::vector<BitVec> ext = basis;
  const std::size_t r = span_rank(basis);
  ext.push_back(v);
  return span_rank(std::move(ext)) == r;
}

/// Basis of {v : r . v = 0 for every r in rows}, vectors of length ncols.
inline std::vector<BitVec> nullspace(std::vector<BitVec> rows, std::size_t ncols) {
  for (const auto& r : rows) {
    if (r.size() != ncols) throw DimensionError("nullspace: row length mismatch");
  }
  const std::vector<std::size_t> pivots = rref(rows);
  std::vector<bool> is_pivot(ncols, false);
  for (std::size_t c : pivots) is_pivot[c] = true;
  std::vector<BitVec> basis;
  for (std::size_t f = 0; f < ncols; ++f) {
    if (is_pivot[f]) continue;
    BitVec v(ncols);
    v.set(f);
    for (std::size_t i = 0; i < pivots.size(); ++i) {
      if (rows[i].get(f)) v.set(pivots[i]);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

inline std::ostream& operator<<(std::ostream& os, const BitMatrix& m) { return os << m.to_text(); }
inline std::ostream& operator<<(std::ostream& os, const BitVec& v) { return os << v.to_string(); }

}  // namespace f2q
