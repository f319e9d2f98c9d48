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

#include "f2q/io.hpp"
#include "oracle.hpp"

namespace f2q {
namespace {

using io::json;

TEST(EncodingJson, RoundTripsNamedAndCustom) {
  for (const char* kind : {"jw", "parity", "bk"}) {
    for (std::size_t n = 1; n <= 9; ++n) {
      const LinearEncoding e = io::named_encoding(kind, n);
      const LinearEncoding back = io::encoding_from_json(json::parse(io::encoding_to_json(e).dump()));
      EXPECT_EQ(back.matrix(), e.matrix());
      EXPECT_EQ(back.kind(), e.kind());
    }
  }
  std::mt19937_64 rng(71);
  const LinearEncoding c = LinearEncoding::custom(oracle::random_invertible(7, rng));
  const json j = io::encoding_to_json(c);
  EXPECT_EQ(j["kind"], "custom");
  EXPECT_EQ(io::encoding_from_json(j).matrix(), c.matrix());
}

TEST(EncodingJson, Examples) {
  const json bk = io::encoding_to_json(LinearEncoding::bk(4));
  EXPECT_EQ(bk["matrix"], json::parse("[[1,0,0,0],[1,1,0,0],[0,0,1,0],[1,1,1,1]]"));
  const auto e = io::encoding_from_json(json::parse(R"({"n":2,"kind":"custom","matrix":["10","11"]})"));
  EXPECT_EQ(e.matrix(), parity_matrix(2));
  EXPECT_EQ(io::encoding_from_json(json::parse(R"({"n":3,"kind":"jw"})")).matrix(), BitMatrix::identity(3));
}

TEST(EncodingJson, Rejections) {
  EXPECT_THROW((void)io::encoding_from_json(json::parse(R"({"n":2,"kind":"custom"})")), io::SchemaError);
  EXPECT_THROW((void)io::encoding_from_json(json::parse(R"({"n":2,"kind":"qwerty"})")), io::SchemaError);
  EXPECT_THROW((void)io::encoding_from_json(json::parse(R"({"n":2,"kind":"custom","matrix":[[1,1],[1,1]]})")),
               SingularMatrixError);
  EXPECT_THROW((void)io::encoding_from_json(json::parse(R"({"n":2,"kind":"jw","matrix":[[1,0],[1,1]]})")),
               io::SchemaError);
  EXPECT_THROW((void)io::encoding_from_json(json::parse(R"({"n":3,"kind":"custom","matrix":[[1,0],[0,1]]})")),
               io::SchemaError);
  EXPECT_THROW((void)io::encoding_from_json(json::parse(R"({"n":-1,"kind":"jw"})")), io::SchemaError);
}

TEST(TreeJson, RoundTripsAllSmallShapes) {
  for (std::size_t n = 1; n <= 4; ++n) {
    for (const TernaryTree& t : all_trees(n)) {
      const TernaryTree back = io::tree_from_json(json::parse(io::tree_to_json(t).dump()));
      EXPECT_EQ(tree_matrix(back), tree_matrix(t));
      EXPECT_EQ(io::tree_to_json(back), io::tree_to_json(t));
    }
  }
}

TEST(TreeJson, Examples) {
  const TernaryTree one = io::tree_from_json(json::parse(R"({"n":1,"root":{"qubit":0}})"));
  EXPECT_EQ(one.n(), 1u);
  const TernaryTree jw = io::tree_from_json(io::tree_to_json(jw_tree(3)));
  EXPECT_TRUE(tree_matrix(jw).is_identity());
  EXPECT_THROW((void)io::tree_from_json(json::parse(R"({"n":2,"root":{"qubit":0}})")), io::SchemaError);
  EXPECT_THROW((void)io::tree_from_json(json::parse(R"({"n":2,"root":{"qubit":0,"x":{"qubit":0}}})")), TreeError);
  EXPECT_THROW((void)io::tree_from_json(json::parse(R"({"root":{"qubit":0}})")), io::SchemaError);
}

TEST(HamiltonianJson, RoundTripAndAssembly) {
  const HamiltonianSpec s = h2::spec();
  const json j = io::hamiltonian_spec_to_json(s);
  const HamiltonianSpec back = io::hamiltonian_spec_from_json(json::parse(j.dump()));
  EXPECT_EQ(back.one_body, s.one_body);
  EXPECT_EQ(back.two_body, s.two_body);
  const LinearEncoding bk = LinearEncoding::bk(4);
  EXPECT_TRUE(assemble_hamiltonian(bk, back).approx_equal(hydrogen_hamiltonian(bk), 1e-12));
  EXPECT_THROW((void)io::hamiltonian_spec_from_json(json::parse(R"({"n":2,"one_body":[[0,2,1.0]]})")),
               std::out_of_range);
  EXPECT_THROW((void)io::hamiltonian_spec_from_json(json::parse(R"({"n":2,"one_body":[[0,1]]})")), io::SchemaError);
}

TEST(PauliJson, RoundTrips) {
  std::mt19937_64 rng(72);
  for (int t = 0; t < 20; ++t) {
    PauliSum s(5);
    for (int k = 0; k < 6; ++k) s.add_term(oracle::random_pauli(5, rng), Complex(rng() % 7 - 3.0, rng() % 5 - 2.0));
    EXPECT_TRUE(io::pauli_sum_from_json(json::parse(io::pauli_sum_to_json(s).dump())).approx_equal(s, 1e-15));
  }
  for (const StabilizerEncoding& e : {etype_aqm(3), square_lattice_aqm(3)}) {
    const StabilizerEncoding back = io::stabilizer_encoding_from_json(io::stabilizer_encoding_to_json(e));
    EXPECT_EQ(back.stabilizers, e.stabilizers);
    EXPECT_EQ(back.logical_x, e.logical_x);
    EXPECT_EQ(back.logical_z, e.logical_z);
    EXPECT_EQ(back.lattice, e.lattice);
    EXPECT_EQ(io::stabilizer_encoding_to_json(back), io::stabilizer_encoding_to_json(e));
  }
}

}  // namespace
}  // namespace f2q
