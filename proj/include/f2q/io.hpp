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


// JSON schemas for encodings, trees, Hamiltonian specs and Pauli sums.

#pragma once

#include <nlohmann/json.hpp>

#include <functional>
#include <string>
#include <vector>

#include "f2q/hamiltonian.hpp"
#include "f2q/linear_encoding.hpp"
#include "f2q/local_encoding.hpp"
#include "f2q/ternary_tree.hpp"

namespace f2q::io {

using json = nlohmann::json;

class SchemaError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

namespace detail {

inline const json& field(const json& j, const char* key, const char* where) {
  if (!j.is_object()) throw SchemaError(std::string(where) + ": expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw SchemaError(std::string(where) + ": missing \"" + key + "\"");
  return *it;
}

inline std::size_t as_index(const json& j, const char* where) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0)) {
    throw SchemaError(std::string(where) + ": expected a non-negative integer, got " + j.dump());
  }
  return j.get<std::size_t>();
}

inline double as_real(const json& j, const char* where) {
  if (!j.is_number()) throw SchemaError(std::string(where) + ": expected a number, got " + j.dump());
  return j.get<double>();
}

}  // namespace detail

// ---- matrices and encodings ----------------------------------------------

inline json matrix_to_json(const BitMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json r = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) r.push_back(m.get(i, j) ? 1 : 0);
    rows.push_back(std::move(r));
  }
  return rows;
}

/// Rows may be arrays of 0/1 or strings of '0'/'1'.
inline BitMatrix matrix_from_json(const json& j) {
  if (!j.is_array() || j.empty()) throw SchemaError("matrix: expected a non-empty array of rows");
  std::vector<std::string> rows;
  for (const json& r : j) {
    if (r.is_string()) {
      rows.push_back(r.get<std::string>());
      continue;
    }
    if (!r.is_array()) throw SchemaError("matrix: row is neither an array nor a string");
    std::string row;
    for (const json& v : r) {
      if (!v.is_number_integer() || (v != 0 && v != 1)) throw SchemaError("matrix: entries must be 0 or 1");
      row.push_back(v == 1 ? '1' : '0');
    }
    rows.push_back(std::move(row));
  }
  return BitMatrix::from_rows(rows);
}

inline json encoding_to_json(const LinearEncoding& e) {
  return {{"n", e.n()}, {"kind", kind_name(e.kind())}, {"matrix", matrix_to_json(e.matrix())}};
}

inline LinearEncoding named_encoding(const std::string& kind, std::size_t n) {
  if (kind == "jw") return LinearEncoding::jw(n);
  if (kind == "parity") return LinearEncoding::parity(n);
  if (kind == "bk") return LinearEncoding::bk(n);
  throw SchemaError("unknown encoding kind \"" + kind + "\"");
}

/// A matrix given alongside a named kind must agree with the builder.
inline LinearEncoding encoding_from_json(const json& j) {
  const std::size_t n = detail::as_index(detail::field(j, "n", "encoding"), "encoding.n");
  const json& kj = detail::field(j, "kind", "encoding");
  if (!kj.is_string()) throw SchemaError("encoding.kind: expected a string");
  const std::string kind = kj.get<std::string>();
  if (kind == "custom") {
    BitMatrix m = matrix_from_json(detail::field(j, "matrix", "encoding"));
    if (m.rows() != n) throw SchemaError("encoding: matrix has " + std::to_string(m.rows()) + " rows, n = " + std::to_string(n));
    return LinearEncoding::custom(std::move(m));
  }
  LinearEncoding e = named_encoding(kind, n);
  if (j.contains("matrix") && !(matrix_from_json(j["matrix"]) == e.matrix())) {
    throw SchemaError("encoding: matrix disagrees with kind \"" + kind + "\"");
  }
  return e;
}

// ---- trees -------------------------------------------------------------------

inline json tree_to_json(const TernaryTree& t) {
  validate_structure(t);
  std::function<json(std::size_t)> node = [&](std::size_t v) {
    const auto& nd = t.node(v);
    json out = {{"qubit", nd.qubit}};
    for (std::size_t b = 0; b < 3; ++b) {
      const char key[2] = {static_cast<char>('x' + b), '\0'};
      out[key] = nd.child[b] ? node(*nd.child[b]) : json(nullptr);
    }
    return out;
  };
  return {{"n", t.n()}, {"root", node(*t.root())}};
}

/// Absent child keys are read as null. Labels must permute 0..n-1.
inline TernaryTree tree_from_json(const json& j) {
  const std::size_t n = detail::as_index(detail::field(j, "n", "tree"), "tree.n");
  TernaryTree t;
  std::function<std::size_t(const json&, std::size_t)> build = [&](const json& nj, std::size_t depth) {
    if (depth > n) throw SchemaError("tree: deeper than n = " + std::to_string(n));
    const std::size_t id = t.add_node(detail::as_index(detail::field(nj, "qubit", "tree node"), "tree node.qubit"));
    for (std::size_t b = 0; b < 3; ++b) {
      const char key[2] = {static_cast<char>('x' + b), '\0'};
      auto it = nj.find(key);
      if (it == nj.end() || it->is_null()) continue;
      const std::size_t c = build(*it, depth + 1);
      t.attach(id, static_cast<Branch>(b), c);
    }
    return id;
  };
  t.set_root(build(detail::field(j, "root", "tree"), 0));
  if (t.n() != n) throw SchemaError("tree: n = " + std::to_string(n) + " but " + std::to_string(t.n()) + " nodes given");
  validate_structure(t);
  return t;
}

// ---- Hamiltonian specs -----------------------------------------------------

inline json hamiltonian_spec_to_json(const HamiltonianSpec& s) {
  json one = json::array(), two = json::array();
  for (const auto& [ij, h] : s.one_body) one.push_back({ij.first, ij.second, h});
  for (const auto& [t, h] : s.two_body) {
    two.push_back({std::get<0>(t), std::get<1>(t), std::get<2>(t), std::get<3>(t), h});
  }
  return {{"n", s.n}, {"one_body", one}, {"two_body", two}};
}

/// Repeated index tuples accumulate.
inline HamiltonianSpec hamiltonian_spec_from_json(const json& j) {
  HamiltonianSpec s;
  s.n = detail::as_index(detail::field(j, "n", "hamiltonian"), "hamiltonian.n");
  auto rows = [&](const char* key, std::size_t arity) {
    std::vector<std::vector<double>> out;
    if (!j.contains(key)) return out;
    const json& a = j[key];
    if (!a.is_array()) throw SchemaError(std::string("hamiltonian.") + key + ": expected an array");
    for (const json& r : a) {
      if (!r.is_array() || r.size() != arity + 1) {
        throw SchemaError(std::string("hamiltonian.") + key + ": each entry needs " + std::to_string(arity) +
                          " indices and a coefficient, got " + r.dump());
      }
      std::vector<double> v;
      for (std::size_t i = 0; i < arity; ++i) v.push_back(static_cast<double>(detail::as_index(r[i], key)));
      v.push_back(detail::as_real(r[arity], key));
      out.push_back(std::move(v));
    }
    return out;
  };
  auto idx = [](double d) { return static_cast<std::size_t>(d); };
  for (const auto& r : rows("one_body", 2)) s.one_body[{idx(r[0]), idx(r[1])}] += r[2];
  for (const auto& r : rows("two_body", 4)) s.two_body[{idx(r[0]), idx(r[1]), idx(r[2]), idx(r[3])}] += r[4];
  s.validate();
  return s;
}

// ---- Pauli data ------------------------------------------------------------------

/// Terms as {"label", "re", "im"} with the printed (label) coefficient.
inline json pauli_sum_to_json(const PauliSum& s) {
  json terms = json::array();
  for (const auto& [p, c] : s.labelled_terms()) {
    terms.push_back({{"label", format_label(p.x(), p.z())}, {"re", c.real()}, {"im", c.imag()}});
  }
  return {{"n", s.num_qubits()}, {"terms", terms}};
}

inline PauliSum pauli_sum_from_json(const json& j) {
  const std::size_t n = detail::as_index(detail::field(j, "n", "pauli sum"), "pauli sum.n");
  PauliSum out(n);
  for (const json& t : detail::field(j, "terms", "pauli sum")) {
    const json& lj = detail::field(t, "label", "pauli term");
    if (!lj.is_string()) throw SchemaError("pauli term.label: expected a string");
    const Complex c(detail::as_real(detail::field(t, "re", "pauli term"), "re"),
                    detail::as_real(detail::field(t, "im", "pauli term"), "im"));
    out.add_term(parse_label(lj.get<std::string>(), n), c);
  }
  return out;
}

inline json labels_to_json(const std::vector<PauliString>& ps) {
  json out = json::array();
  for (const auto& p : ps) out.push_back(format_label(p));
  return out;
}

inline const char* kind_name(QubitKind k) { return k == QubitKind::kData ? "data" : "ancilla"; }

inline json stabilizer_encoding_to_json(const StabilizerEncoding& e) {
  json geo = json::array();
  for (std::size_t q = 0; q < e.geometry.size(); ++q) {
    const QubitSite& s = e.geometry[q];
    geo.push_back({{"qubit", q}, {"row", s.row}, {"col", s.col}, {"kind", kind_name(s.kind)}});
  }
  return {{"name", e.name},
          {"n_logical", e.n_logical},
          {"n_physical", e.n_physical},
          {"lattice", e.lattice},
          {"stabilizers", labels_to_json(e.stabilizers)},
          {"logical_x", labels_to_json(e.logical_x)},
          {"logical_z", labels_to_json(e.logical_z)},
          {"geometry", geo}};
}

inline StabilizerEncoding stabilizer_encoding_from_json(const json& j) {
  StabilizerEncoding e;
  e.name = detail::field(j, "name", "stabilizer encoding").get<std::string>();
  e.n_logical = detail::as_index(detail::field(j, "n_logical", "stabilizer encoding"), "n_logical");
  e.n_physical = detail::as_index(detail::field(j, "n_physical", "stabilizer encoding"), "n_physical");
  if (j.contains("lattice")) e.lattice = detail::as_index(j["lattice"], "lattice");
  auto labels = [&](const char* key) {
    std::vector<PauliString> out;
    for (const json& l : detail::field(j, key, "stabilizer encoding")) out.push_back(parse_label(l.get<std::string>(), e.n_physical));
    return out;
  };
  e.stabilizers = labels("stabilizers");
  e.logical_x = labels("logical_x");
  e.logical_z = labels("logical_z");
  if (j.contains("geometry")) {
    for (const json& g : j["geometry"]) {
      const std::string k = detail::field(g, "kind", "geometry").get<std::string>();
      if (k != "data" && k != "ancilla") throw SchemaError("geometry.kind: expected data or ancilla");
      e.geometry.push_back({detail::as_index(detail::field(g, "row", "geometry"), "row"),
                            detail::as_index(detail::field(g, "col", "geometry"), "col"),
                            k == "data" ? QubitKind::kData : QubitKind::kAncilla});
    }
  }
  e.validate();
  return e;
}

}  // namespace f2q::io
