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

#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "f2q/bits.hpp"
#include "oracle.hpp"

namespace f2q {
namespace {

TEST(BitVec, BasicOps) {
  BitVec v = BitVec::from_string("10110");
  EXPECT_EQ(v.size(), 5u);
  EXPECT_EQ(v.popcount(), 3u);
  EXPECT_EQ(v.to_string(), "10110");
  EXPECT_EQ(BitVec::prefix(5, 3).to_string(), "11100");
  EXPECT_EQ(BitVec::unit(4, 2).to_string(), "0010");
  EXPECT_TRUE(v.dot(BitVec::from_string("10000")));
  EXPECT_FALSE(v.dot(BitVec::from_string("10100")));
  EXPECT_THROW((void)v.dot(BitVec(3)), DimensionError);
}

TEST(BitVec, WideVectorsSpanWords) {
  BitVec v(130);
  v.set(0);
  v.set(64);
  v.set(129);
  EXPECT_EQ(v.popcount(), 3u);
  EXPECT_EQ(v.first_set(), 0u);
  v.flip(0);
  EXPECT_EQ(v.first_set(), 64u);
}

TEST(MatMul, IdentityTimesParity) {
  EXPECT_EQ(BitMatrix::identity(3) * parity_matrix(3), parity_matrix(3));
}

TEST(MatMul, BkTimesInverseIsIdentity) {
  const BitMatrix b = bk_matrix(4);
  const BitMatrix binv = oracle::gauss_inverse(b);
  EXPECT_TRUE((b * binv).is_identity());
  EXPECT_EQ(mat_inverse(b), binv);
}

TEST(MatMul, OnesRowTimesBkInverse) {
  BitMatrix j(1, 8);
  for (std::size_t c = 0; c < 8; ++c) j.set(0, c);
  const BitMatrix r = j * mat_inverse(bk_matrix(8));
  EXPECT_EQ(r.to_text(), "00000001\n");
}

TEST(MatMul, DimensionMismatchReportsShapes) {
  try {
    (void)(BitMatrix(2, 3) * BitMatrix(2, 3));
    FAIL();
  } catch (const DimensionError& e) {
    EXPECT_NE(std::string(e.what()).find("2x3"), std::string::npos);
  }
}

TEST(MatInverse, Examples) {
  EXPECT_TRUE(mat_inverse(BitMatrix::identity(4)).is_identity());
  const BitMatrix inv = mat_inverse(parity_matrix(3));
  EXPECT_EQ(inv, BitMatrix::from_rows({"100", "110", "011"}));
  EXPECT_TRUE((parity_matrix(3) * inv).is_identity());
  try {
    (void)mat_inverse(BitMatrix(2, 2));
    FAIL();
  } catch (const SingularMatrixError& e) {
    EXPECT_EQ(e.rank(), 0u);
  }
  EXPECT_THROW((void)mat_inverse(BitMatrix(2, 3)), DimensionError);
}

TEST(MatInverse, SingularRankReported) {
  try {
    (void)mat_inverse(BitMatrix::from_rows({"110", "011", "101"}));
    FAIL();
  } catch (const SingularMatrixError& e) {
    EXPECT_EQ(e.rank(), 2u);
  }
}

TEST(MatInverse, ExhaustiveThreeByThree) {
  std::size_t invertible = 0;
  for (unsigned mask = 0; mask < 512; ++mask) {
    BitMatrix m(3, 3);
    for (unsigned b = 0; b < 9; ++b) m.set(b / 3, b % 3, (mask >> b) & 1U);
    const bool oracle_ok = oracle::gauss_rank(m) == 3;
    if (!oracle_ok) {
      EXPECT_THROW((void)mat_inverse(m), SingularMatrixError);
      continue;
    }
    ++invertible;
    const BitMatrix inv = mat_inverse(m);
    EXPECT_TRUE((m * inv).is_identity());
    EXPECT_TRUE((inv * m).is_identity());
    EXPECT_EQ(mat_inverse(inv), m);
  }
  EXPECT_EQ(invertible, 168u);  // |GL(3,2)|
}

TEST(MatInverse, RandomUpTo64) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 1 + rng() % 64;
    const BitMatrix m = oracle::random_invertible(n, rng);
    const BitMatrix inv = mat_inverse(m);
    EXPECT_TRUE((m * inv).is_identity());
    EXPECT_EQ(mat_inverse(inv), m);
  }
}

TEST(ParityMatrix, Examples) {
  EXPECT_EQ(parity_matrix(3), BitMatrix::from_rows({"100", "110", "111"}));
  EXPECT_EQ(parity_matrix(1), BitMatrix::from_rows({"1"}));
  const BitMatrix e4 = parity_matrix(4);
  EXPECT_EQ(e4.block(0, 0, 2, 2), parity_matrix(2));
  EXPECT_EQ(e4.block(0, 2, 2, 2), BitMatrix(2, 2));
  EXPECT_EQ(e4.block(2, 0, 2, 2), BitMatrix::from_rows({"11", "11"}));
  EXPECT_EQ(e4.block(2, 2, 2, 2), parity_matrix(2));
  EXPECT_THROW((void)parity_matrix(0), std::invalid_argument);
}

TEST(ParityMatrix, BlockRecurrenceAllSplits) {
  for (std::size_t n = 2; n <= 32; ++n) {
    const BitMatrix e = parity_matrix(n);
    for (std::size_t j = 1; j < n; ++j) {
      const std::size_t k = n - j;
      EXPECT_EQ(e.block(0, 0, j, j), parity_matrix(j));
      EXPECT_EQ(e.block(0, j, j, k), BitMatrix(j, k));
      EXPECT_EQ(e.block(j, 0, k, j).rank(), 1u);
      EXPECT_EQ(e.block(j, 0, k, j).row(0).popcount(), j);
      EXPECT_EQ(e.block(j, j, k, k), parity_matrix(k));
    }
  }
}

TEST(ParityMatrix, InverseRowsAndColumns) {
  for (std::size_t n = 2; n <= 32; ++n) {
    const BitMatrix e = parity_matrix(n);
    const BitMatrix inv = mat_inverse(e);
    for (std::size_t p = 1; p < n; ++p) {
      BitVec expect(n);
      expect.set(p - 1);
      expect.set(p);
      EXPECT_EQ(inv.row(p), expect);
      BitVec tail(n);
      for (std::size_t q = p; q < n; ++q) tail.set(q);
      EXPECT_EQ(e * BitVec::unit(n, p), tail);
    }
  }
}

TEST(BkMatrix, PowerOfTwoDisplays) {
  EXPECT_EQ(bk_matrix(4), BitMatrix::from_rows({"1000", "1100", "0010", "1111"}));
  EXPECT_EQ(bk_matrix(8), BitMatrix::from_rows({"10000000", "11000000", "00100000", "11110000",
                                                "00001000", "00001100", "00000010", "11111111"}));
  EXPECT_EQ(bk_matrix(1), BitMatrix::from_rows({"1"}));
  EXPECT_THROW((void)bk_matrix(0), std::invalid_argument);
}

TEST(BkMatrix, NonPowerOfTwoIsLeadingBlock) {
  EXPECT_EQ(bk_matrix(3), BitMatrix::from_rows({"100", "110", "001"}));
  for (std::size_t n = 1; n <= 64; ++n) {
    const BitMatrix b = bk_matrix(n);
    EXPECT_EQ(b, bk_matrix(64).block(0, 0, n, n));
    EXPECT_EQ(oracle::gauss_rank(b), n);
    EXPECT_EQ(oracle::gauss_rank(parity_matrix(n)), n);
  }
}

TEST(BkMatrix, OnesTimesInverseIsLastUnit) {
  for (std::size_t k = 0; k <= 6; ++k) {
    const std::size_t n = std::size_t{1} << k;
    BitMatrix j(1, n);
    for (std::size_t c = 0; c < n; ++c) j.set(0, c);
    const BitMatrix r = j * mat_inverse(bk_matrix(n));
    EXPECT_EQ(r.row(0), BitVec::unit(n, n - 1)) << "k=" << k;
  }
}

TEST(ColumnReverse, Examples) {
  EXPECT_EQ(column_reverse(BitMatrix::identity(2)), BitMatrix::from_rows({"01", "10"}));
  EXPECT_EQ(column_reverse(BitMatrix::from_rows({"10", "11"})), BitMatrix::from_rows({"01", "11"}));
  EXPECT_EQ(column_reverse(column_reverse(bk_matrix(4))), bk_matrix(4));
  BitMatrix f(4, 4);
  for (std::size_t i = 0; i < 4; ++i) f.set(i, 3 - i);
  EXPECT_EQ(column_reverse(bk_matrix(4)), bk_matrix(4) * f);
}

TEST(MatrixText, RoundTrip) {
  const BitMatrix b = bk_matrix(8);
  std::istringstream in(b.to_text());
  EXPECT_EQ(BitMatrix::from_text(in), b);
}

}  // namespace
}  // namespace f2q
