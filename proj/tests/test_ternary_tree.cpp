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
#include <set>

#include "f2q/ternary_tree.hpp"
#include "oracle.hpp"

namespace f2q {
namespace {

using oracle::dense;
using oracle::Mat;
using oracle::max_abs;

using KeySet = std::multiset<std::pair<BitVec, BitVec>>;

KeySet keys(const std::vector<PauliString>& ps) {
  KeySet s;
  for (const auto& p : ps) s.emplace(p.x(), p.z());
  return s;
}

std::vector<std::string> labels(const std::vector<PauliString>& ps) {
  std::vector<std::string> out;
  for (const auto& p : ps) out.push_back(format_label(p));
  return out;
}

TernaryTree two_node(std::size_t root_label, std::size_t child_label) {
  TernaryTree t;
  const std::size_t r = t.add_node(root_label);
  t.attach(r, kX, t.add_node(child_label));
  return t;
}

TEST(Validate, Examples) {
  TernaryTree single;
  single.add_node(0);
  EXPECT_TRUE(validate(single).ok);
  EXPECT_TRUE(validate(jw_tree(4)).ok);
  EXPECT_TRUE(validate(two_node(1, 0)).ok);
  const TreeReport bad = validate(two_node(0, 1));
  EXPECT_FALSE(bad.ok);
  EXPECT_NE(bad.message.find("node 1"), std::string::npos);
}

TEST(Validate, StructuralErrors) {
  TernaryTree cyc;
  const std::size_t a = cyc.add_node(0);
  const std::size_t b = cyc.add_node(1);
  cyc.attach(a, kZ, b);
  cyc.attach(b, kZ, a);
  EXPECT_THROW((void)validate(cyc), TreeError);
  EXPECT_THROW((void)validate(two_node(0, 0)), TreeError);
  EXPECT_THROW((void)validate(two_node(0, 2)), TreeError);
  TernaryTree orphan;
  orphan.add_node(0);
  orphan.add_node(1);
  EXPECT_THROW((void)validate(orphan), TreeError);
  EXPECT_THROW((void)validate(TernaryTree{}), TreeError);
}

TEST(PathStrings, Examples) {
  TernaryTree single;
  single.add_node(0);
  EXPECT_EQ(labels(path_pauli_strings(single)), (std::vector<std::string>{"X0", "Y0", "Z0"}));
  EXPECT_EQ(labels(path_pauli_strings(jw_tree(3))),
            (std::vector<std::string>{"X0", "Y0", "Z0 X1", "Z0 Y1", "Z0 Z1 X2", "Z0 Z1 Y2", "Z0 Z1 Z2"}));
}

TEST(PathStrings, JordanWignerChainMatchesMajoranas) {
  for (std::size_t n = 1; n <= 8; ++n) {
    const auto paths = path_pauli_strings(jw_tree(n));
    for (std::size_t m = 0; m < 2 * n; ++m) EXPECT_EQ(paths[m], jw_majorana(n, m));
  }
}

TEST(TreeShapes, CountsMatchCatalanFormula) {
  // Ternary trees on n nodes: binom(3n, n) / (2n + 1).
  const std::size_t expect[] = {1, 3, 12, 55, 273};
  for (std::size_t n = 1; n <= 5; ++n) EXPECT_EQ(all_trees(n).size(), expect[n - 1]);
}

void check_tree(const TernaryTree& t, bool dense_checks) {
  const std::size_t n = t.n();
  ASSERT_TRUE(validate(t).ok);
  const BitMatrix e = tree_matrix(t);
  ASSERT_EQ(oracle::gauss_rank(e), n);
  const auto paths = path_pauli_strings(t);
  ASSERT_EQ(paths.size(), 2 * n + 1);
  for (std::size_t i = 0; i < paths.size(); ++i) {
    for (std::size_t j = i + 1; j < paths.size(); ++j) EXPECT_FALSE(pauli_commutes(paths[i], paths[j]));
  }
  const MajoranaAssignment a = majorana_assignment(t);
  ASSERT_EQ(a.majoranas.size(), 2 * n);
  auto got = keys(a.majoranas);
  got.emplace(a.omitted.x(), a.omitted.z());
  EXPECT_EQ(got, keys(paths));
  EXPECT_TRUE(a.omitted.x().none());
  for (const auto& g : a.majoranas) {
    EXPECT_TRUE(g.is_hermitian());
    EXPECT_EQ((g * g).phase(), 0);
  }
  if (!dense_checks) {
    for (std::size_t i = 0; i < 2 * n; ++i) {
      for (std::size_t j = i + 1; j < 2 * n; ++j) EXPECT_FALSE(pauli_commutes(a.majoranas[i], a.majoranas[j]));
    }
    return;
  }
  const Mat u = oracle::permutation(e);
  EXPECT_EQ(u(0, 0), oracle::cd(1.0));
  const std::size_t dim = std::size_t{1} << n;
  std::vector<Mat> g;
  for (const auto& p : a.majoranas) g.push_back(dense(p));
  for (std::size_t i = 0; i < 2 * n; ++i) {
    EXPECT_LT(max_abs(g[i] - u * dense(jw_majorana(n, i)) * u.adjoint()), 1e-12);
    for (std::size_t j = 0; j < 2 * n; ++j) {
      const Mat expect = i == j ? Mat(2.0 * Mat::Identity(dim, dim)) : Mat(Mat::Zero(dim, dim));
      EXPECT_LT(max_abs(g[i] * g[j] + g[j] * g[i] - expect), 1e-12);
    }
  }
}

TEST(PathStringSet, ExhaustiveUpToFive) {
  for (std::size_t n = 1; n <= 5; ++n) {
    for (const auto& t : all_trees(n)) check_tree(t, n <= 4);
  }
}

TEST(PathStringSet, RandomUpToTen) {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 200; ++i) check_tree(random_tree(1 + rng() % 10, rng), false);
}

TEST(EncoderMatrix, ClassicTrees) {
  for (std::size_t n = 1; n <= 16; ++n) {
    EXPECT_TRUE(tree_matrix(jw_tree(n)).is_identity());
    EXPECT_EQ(tree_matrix(parity_tree(n)), parity_matrix(n));
  }
  for (std::size_t n : {1, 2, 4, 8, 16, 32, 64}) EXPECT_EQ(tree_matrix(bk_tree(n)), bk_matrix(n));
  EXPECT_THROW((void)tree_matrix(two_node(0, 1)), TreeError);
}

TEST(Builders, Shapes) {
  const TernaryTree j = jw_tree(3);
  EXPECT_EQ(j.node(*j.root()).qubit, 0u);
  const auto& r = j.node(*j.root());
  ASSERT_TRUE(r.child[kZ]);
  EXPECT_EQ(j.node(*r.child[kZ]).qubit, 1u);
  const TernaryTree p = parity_tree(3);
  EXPECT_EQ(p.node(*p.root()).qubit, 2u);
  const TernaryTree b = bk_tree(2);
  const auto& br = b.node(*b.root());
  EXPECT_TRUE(br.child[kX] && !br.child[kY] && !br.child[kZ]);
  EXPECT_EQ(tree_matrix(b), BitMatrix::from_rows({"10", "11"}));
  EXPECT_THROW((void)bk_tree(6), TreeError);
  EXPECT_THROW((void)bk_tree(0), TreeError);
}

TEST(MajoranaAssignment, Examples) {
  const MajoranaAssignment j = majorana_assignment(jw_tree(3));
  for (std::size_t m = 0; m < 6; ++m) EXPECT_EQ(j.majoranas[m], jw_majorana(3, m));
  EXPECT_EQ(format_label(j.omitted), "Z0 Z1 Z2");
  const MajoranaAssignment b = majorana_assignment(bk_tree(4));
  EXPECT_EQ(format_label(b.majoranas[0]), "X0 X1 X3");
  const Mat u = oracle::permutation(bk_matrix(4));
  EXPECT_LT(max_abs(dense(b.majoranas[0]) - u * oracle::dense_chars("XIII") * u.adjoint()), 1e-12);
}

TEST(Relabelling, PermutationCovariance) {
  std::mt19937_64 rng(32);
  for (int i = 0; i < 100; ++i) {
    const TernaryTree t = random_tree(1 + rng() % 8, rng, false);
    auto [canon, perm] = canonicalize(t);
    ASSERT_TRUE(validate(canon).ok);
    std::vector<PauliString> moved;
    for (const auto& p : path_pauli_strings(canon)) moved.push_back(permute_qubits(p, perm));
    EXPECT_EQ(moved, path_pauli_strings(t));
    const MajoranaAssignment a = majorana_assignment_relabelled(t);
    auto got = keys(a.majoranas);
    got.emplace(a.omitted.x(), a.omitted.z());
    EXPECT_EQ(got, keys(path_pauli_strings(t)));
  }
}

}  // namespace
}  // namespace f2q
