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

#include "f2q/pauli.hpp"
#include "oracle.hpp"

namespace f2q {
namespace {

using oracle::dense;
using oracle::max_abs;

PauliString P(const std::string& label, std::size_t n) { return parse_label(label, n); }

TEST(PauliMul, SingleQubitConvention) {
  const PauliString xz = P("X0", 1) * P("Z0", 1);
  EXPECT_TRUE(xz.x().get(0));
  EXPECT_TRUE(xz.z().get(0));
  EXPECT_EQ(xz.phase(), 0);
  EXPECT_EQ(format_label(xz), "-i Y0");
  const PauliString zx = P("Z0", 1) * P("X0", 1);
  EXPECT_EQ(zx.phase(), 2);
  EXPECT_EQ(format_label(zx), "i Y0");
}

TEST(PauliMul, MajoranaSquaresToIdentity) {
  const PauliString g0 = P("X0", 3);
  const PauliString sq = g0 * g0;
  EXPECT_TRUE(sq.is_identity_up_to_phase());
  EXPECT_EQ(sq.phase(), 0);
  const PauliString g5 = P("Z0 Z1 Y2", 3);
  EXPECT_EQ((g5 * g5).phase(), 0);
}

TEST(PauliMul, SizeMismatch) {
  EXPECT_THROW((void)(P("X0", 1) * P("X0", 2)), DimensionError);
  EXPECT_THROW((void)pauli_commutes(P("X0", 1), P("X0", 2)), DimensionError);
}

TEST(PauliMul, ExhaustiveSingleQubitAgainstDense) {
  for (int a = 0; a < 16; ++a) {
    for (int b = 0; b < 16; ++b) {
      const PauliString pa(BitVec::from_string(a & 1 ? "1" : "0"), BitVec::from_string(a & 2 ? "1" : "0"), a >> 2);
      const PauliString pb(BitVec::from_string(b & 1 ? "1" : "0"), BitVec::from_string(b & 2 ? "1" : "0"), b >> 2);
      EXPECT_LT(max_abs(dense(pa * pb) - dense(pa) * dense(pb)), 1e-12);
    }
  }
}

TEST(PauliMul, RandomAgainstDenseAndAssociative) {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 500; ++t) {
    const std::size_t n = 1 + rng() % 6;
    const PauliString a = oracle::random_pauli(n, rng);
    const PauliString b = oracle::random_pauli(n, rng);
    const PauliString c = oracle::random_pauli(n, rng);
    EXPECT_LT(max_abs(dense(a * b) - dense(a) * dense(b)), 1e-12);
    EXPECT_EQ((a * b) * c, a * (b * c));
    const PauliString ab = a * b;
    const PauliString ba = b * a;
    EXPECT_EQ(ab.x(), ba.x());
    EXPECT_EQ(ab.z(), ba.z());
    const int omega = (a.x().dot(b.z()) ^ a.z().dot(b.x())) ? 1 : 0;
    EXPECT_EQ((ab.phase() - ba.phase() + 4) % 4, 2 * omega);
  }
}

TEST(PauliCommutes, Examples) {
  EXPECT_FALSE(pauli_commutes(P("X0", 1), P("Z0", 1)));
  EXPECT_TRUE(pauli_commutes(P("X0 X1", 2), P("Z0 Z1", 2)));
  EXPECT_FALSE(pauli_commutes(P("Z0 X1", 3), P("Z0 Z1 Y2", 3)));
}

TEST(PauliCommutes, MatchesDense) {
  std::mt19937_64 rng(12);
  for (int t = 0; t < 300; ++t) {
    const std::size_t n = 1 + rng() % 5;
    const PauliString a = oracle::random_pauli(n, rng);
    const PauliString b = oracle::random_pauli(n, rng);
    const oracle::Mat da = dense(a);
    const oracle::Mat db = dense(b);
    EXPECT_EQ(pauli_commutes(a, b), max_abs(da * db - db * da) < 1e-12);
  }
}

TEST(PauliWeight, Examples) {
  EXPECT_EQ(pauli_weight(PauliString::identity(5)), 0u);
  EXPECT_EQ(pauli_weight(P("Y3 Z4 Z5 Z6 Z7 Z8 Z9 Z10 Z11 Z12 Z13 Z14 Y15", 16)), 13u);
  EXPECT_EQ(pauli_weight(P("X0 X1 X3", 4)), 3u);
}

TEST(Label, ParseExamples) {
  const PauliString p = P("X0 Z2", 3);
  EXPECT_EQ(p.x().to_string(), "100");
  EXPECT_EQ(p.z().to_string(), "001");
  EXPECT_EQ(p.phase(), 0);
  oracle::Mat y(2, 2);
  y << 0, oracle::cd(0, -1), oracle::cd(0, 1), 0;
  EXPECT_LT(max_abs(dense(P("Y1", 2)) - oracle::kron(oracle::single('I'), y)), 1e-15);
  EXPECT_TRUE(P("I", 4).is_identity_up_to_phase());
}

TEST(Label, ParseErrorsCarryPosition) {
  try {
    (void)P("Z9 X0", 10);
    FAIL();
  } catch (const LabelError& e) {
    EXPECT_EQ(e.position(), 3u);
    EXPECT_NE(std::string(e.what()).find("not increasing"), std::string::npos);
  }
  EXPECT_THROW((void)P("X0 X0", 2), LabelError);
  EXPECT_THROW((void)P("X2", 2), LabelError);
  EXPECT_THROW((void)P("Q0", 2), LabelError);
  EXPECT_THROW((void)P("X", 2), LabelError);
  EXPECT_THROW((void)P("X0Z1", 2), LabelError);
  EXPECT_THROW((void)P("", 2), LabelError);
}

TEST(Label, RoundTripAllPhases) {
  std::mt19937_64 rng(13);
  for (int t = 0; t < 200; ++t) {
    const PauliString p = oracle::random_pauli(1 + rng() % 7, rng);
    EXPECT_EQ(P(format_label(p), p.num_qubits()), p) << format_label(p);
  }
  EXPECT_EQ(format_label(P("Y0 X1", 2)), "Y0 X1");
}

TEST(PauliString, AdjointMatchesDense) {
  std::mt19937_64 rng(14);
  for (int t = 0; t < 100; ++t) {
    const PauliString p = oracle::random_pauli(1 + rng() % 4, rng);
    EXPECT_LT(max_abs(dense(p.adjoint()) - dense(p).adjoint()), 1e-12);
  }
}

TEST(PauliSum, Examples) {
  PauliSum half(P("X0", 1), 0.5);
  EXPECT_EQ(half + half, PauliSum(P("X0", 1)));
  const PauliSum xz = PauliSum(P("X0", 1)) * PauliSum(P("Z0", 1));
  EXPECT_EQ(xz.size(), 1u);
  EXPECT_LT(std::abs(xz.label_coefficient(P("Y0", 1)) - Complex(0, -1)), 1e-15);
  const PauliSum zero = PauliSum(P("X0", 1)) - PauliSum(P("X0", 1));
  EXPECT_TRUE(zero.empty());
  EXPECT_THROW((void)(PauliSum(P("X0", 1)) + PauliSum(P("X0", 2))), DimensionError);
}

TEST(PauliSum, NumberProductExpandsToFourTerms) {
  const PauliSum i2 = PauliSum::identity(2);
  const PauliSum n0 = (i2 - PauliSum(P("Z0", 2))) * Complex(0.5);
  const PauliSum n1 = (i2 - PauliSum(P("Z1", 2))) * Complex(0.5);
  const PauliSum prod = n0 * n1;
  EXPECT_EQ(prod.size(), 4u);
  EXPECT_LT(max_abs(dense(prod) - oracle::ladder(2, 0, true) * oracle::ladder(2, 0, false) *
                                      oracle::ladder(2, 1, true) * oracle::ladder(2, 1, false)),
            1e-12);
}

TEST(PauliSum, RingOpsMatchDense) {
  std::mt19937_64 rng(15);
  for (int t = 0; t < 50; ++t) {
    const std::size_t n = 1 + rng() % 4;
    PauliSum a(n), b(n);
    for (int k = 0; k < 4; ++k) {
      a.add_term(oracle::random_pauli(n, rng), Complex(static_cast<double>(rng() % 7) - 3, 0.5));
      b.add_term(oracle::random_pauli(n, rng), Complex(1.25, static_cast<double>(rng() % 5) - 2));
    }
    EXPECT_LT(max_abs(dense(a * b) - dense(a) * dense(b)), 1e-12);
    EXPECT_LT(max_abs(dense(a + b) - dense(a) - dense(b)), 1e-12);
    EXPECT_LT(max_abs(dense(a.adjoint()) - dense(a).adjoint()), 1e-12);
    EXPECT_LT(max_abs(dense(a * Complex(0, 2)) - Complex(0, 2) * dense(a)), 1e-12);
  }
}

TEST(PauliSum, OrderIndependent) {
  const PauliString a = P("X0 Y1", 3);
  const PauliString b = P("Z2", 3);
  PauliSum s1(3), s2(3);
  s1.add_term(a, 0.3);
  s1.add_term(b, Complex(0, 1));
  s2.add_term(b, Complex(0, 1));
  s2.add_term(a, 0.3);
  EXPECT_EQ(s1, s2);
  EXPECT_EQ(s1.to_text(), s2.to_text());
}

TEST(PauliSum, TextFormat) {
  PauliSum s(3);
  s.add_term(P("Z0", 3), -0.5);
  s.add_term(P("I", 3), 0.5);
  s.add_term(P("Y0 Z1 Y2", 3), 0.25);
  s.add_term(P("X0 Z1 X2", 3), 1.0 / 3.0);
  EXPECT_EQ(s.to_text(),
            "0.5 0 I\n"
            "0.333333333333 0 X0 Z1 X2\n"
            "0.25 0 Y0 Z1 Y2\n"
            "-0.5 0 Z0\n");
  std::istringstream in(s.to_text());
  EXPECT_TRUE(PauliSum::from_text(in, 3).approx_equal(s, 1e-11));
  EXPECT_TRUE(s.is_hermitian());
  EXPECT_FALSE(PauliSum(P("X0", 3), Complex(0, 1)).is_hermitian());
}

}  // namespace
}  // namespace f2q
