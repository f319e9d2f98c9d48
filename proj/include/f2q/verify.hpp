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


// Seeded verification suites shared by the CLI and the acceptance runner.
// Every check is bounded so that the "all" suite finishes in seconds.

#pragma once

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "f2q/dense_oracle.hpp"
#include "f2q/hamiltonian.hpp"
#include "f2q/linear_encoding.hpp"
#include "f2q/local_encoding.hpp"
#include "f2q/ternary_tree.hpp"

namespace f2q::verify {

inline constexpr double kDenseTol = 1e-12;
inline constexpr double kSpectrumTol = 1e-9;
inline constexpr int kRandomEncodings = 50;
inline constexpr int kRandomTrees = 200;
inline constexpr int kBuilderCases = 100;

struct Check {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct Report {
  std::string suite;
  std::uint64_t seed = 0;
  std::vector<Check> checks;

  bool passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
  }
};

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"car", "ternary", "hamiltonian", "aqm", "all"};
  return names;
}

namespace detail {

inline std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1e", v);
  return buf;
}

inline Check tolerance_check(std::string name, double err, double tol, const std::string& what) {
  return {std::move(name), err <= tol, what + " max_err=" + sci(err)};
}

inline double max_abs(const DenseOperator& m) { return m.size() ? m.cwiseAbs().maxCoeff() : 0.0; }

/// Worst violation of the anticommutation relations for the encoded ladder operators.
inline double car_error(const LinearEncoding& enc) {
  const std::size_t n = enc.n();
  const auto dim = static_cast<Eigen::Index>(std::size_t{1} << n);
  std::vector<DenseOperator> a;
  for (std::size_t p = 0; p < n; ++p) a.push_back(pauli_matrix(encode_ladder(enc, p, false)));
  const DenseOperator id = DenseOperator::Identity(dim, dim);
  double err = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      err = std::max(err, max_abs(a[i] * a[j] + a[j] * a[i]));
      const DenseOperator ad = a[i].adjoint();
      err = std::max(err, max_abs(ad * a[j] + a[j] * ad - (i == j ? id : DenseOperator::Zero(dim, dim))));
    }
  }
  return err;
}

/// U_E (prod of Fock ladder matrices) U_E^dag, optionally plus its adjoint.
inline DenseOperator fermion_dense(const LinearEncoding& enc, const std::vector<LadderOp>& ops, Complex c, bool hc) {
  const std::size_t n = enc.n();
  const auto dim = static_cast<Eigen::Index>(std::size_t{1} << n);
  DenseOperator f = DenseOperator::Identity(dim, dim);
  for (const LadderOp& op : ops) f = f * fock_ladder_matrix(n, op.mode, op.dagger);
  f *= c;
  if (hc) f += DenseOperator(f.adjoint());
  const DenseOperator u = encoding_unitary(enc);
  return u * f * u.adjoint();
}

template <class Rng>
LinearEncoding random_encoding(std::size_t n, Rng& rng) {
  switch (rng() % 4) {
    case 0: return LinearEncoding::jw(n);
    case 1: return LinearEncoding::parity(n);
    case 2: return LinearEncoding::bk(n);
    default: return LinearEncoding(random_invertible(n, rng));
  }
}

}  // namespace detail

// ---- suites ------------------------------------------------------------------

inline void run_car(std::uint64_t seed, std::vector<Check>& out) {
  for (const char* kind : {"jw", "parity", "bk"}) {
    for (std::size_t n = 4; n <= 6; ++n) {
      const LinearEncoding enc = kind[0] == 'j' ? LinearEncoding::jw(n)
                                 : kind[0] == 'p' ? LinearEncoding::parity(n)
                                                  : LinearEncoding::bk(n);
      out.push_back(detail::tolerance_check(std::string("car.") + kind + ".n" + std::to_string(n),
                                            detail::car_error(enc), kDenseTol, "anticommutators"));
    }
  }
  std::mt19937_64 rng(seed ^ 0xca5ULL);
  for (std::size_t n = 4; n <= 6; ++n) {
    double err = 0.0;
    for (int t = 0; t < kRandomEncodings; ++t) {
      err = std::max(err, detail::car_error(LinearEncoding(random_invertible(n, rng))));
    }
    out.push_back(detail::tolerance_check("car.random.n" + std::to_string(n), err, kDenseTol,
                                          std::to_string(kRandomEncodings) + " encodings"));
  }
}

/// Problems with one tree, empty when it satisfies the path-string property.
inline std::string tree_problem(const TernaryTree& t) {
  const std::size_t n = t.n();
  const auto [canon, perm] = canonicalize(t);
  const BitMatrix e = tree_matrix(canon);
  if (e.rank() != n) return "singular encoder matrix";
  const LinearEncoding enc(e);
  // Vacuum: every encoded annihilator kills |0...0>.
  DenseState vac = DenseState::Zero(static_cast<Eigen::Index>(std::size_t{1} << n));
  vac(0) = 1.0;
  for (std::size_t p = 0; p < n; ++p) {
    DenseState out = DenseState::Zero(vac.size());
    const PauliSum a = encode_ladder(enc, p, false);
    for (const auto& [k, c] : a.terms()) out += c * apply_pauli(PauliString(k.first, k.second), vac);
    if (out.cwiseAbs().maxCoeff() > kDenseTol) return "vacuum not annihilated by a_" + std::to_string(p);
  }
  try {
    (void)majorana_assignment_relabelled(t);
  } catch (const std::logic_error& ex) {
    return ex.what();
  }
  const auto paths = path_pauli_strings(t);
  if (paths.size() != 2 * n + 1) return "wrong number of path strings";
  for (std::size_t a = 0; a < paths.size(); ++a)
    for (std::size_t b = a + 1; b < paths.size(); ++b)
      if (pauli_commutes(paths[a], paths[b])) return "path strings " + std::to_string(a) + ", " + std::to_string(b) + " commute";
  return {};
}

inline void run_ternary(std::uint64_t seed, std::vector<Check>& out) {
  for (std::size_t n = 1; n <= 5; ++n) {
    const auto trees = all_trees(n);
    std::string bad;
    for (const auto& t : trees) {
      bad = tree_problem(t);
      if (!bad.empty()) break;
    }
    out.push_back({"ternary.exhaustive.n" + std::to_string(n), bad.empty(),
                   std::to_string(trees.size()) + " trees" + (bad.empty() ? "" : ": " + bad)});
  }
  std::mt19937_64 rng(seed ^ 0x7eeULL);
  std::string bad;
  for (int t = 0; t < kRandomTrees && bad.empty(); ++t) {
    const std::size_t n = 1 + rng() % 10;
    bad = tree_problem(random_tree(n, rng, t % 2 == 0));
  }
  out.push_back({"ternary.random", bad.empty(), std::to_string(kRandomTrees) + " trees n<=10" + (bad.empty() ? "" : ": " + bad)});
  bool classic = true;
  for (std::size_t n = 1; n <= 16; ++n) {
    classic = classic && tree_matrix(jw_tree(n)).is_identity() && tree_matrix(parity_tree(n)) == parity_matrix(n);
  }
  for (std::size_t n = 1; n <= 32; n *= 2) classic = classic && tree_matrix(bk_tree(n)) == bk_matrix(n);
  out.push_back({"ternary.classic", classic, "jw/parity n<=16, bk n=1..32"});
}

inline void run_hamiltonian(std::uint64_t seed, std::vector<Check>& out) {
  std::mt19937_64 rng(seed ^ 0x4a3ULL);
  const char* names[] = {"number", "exchange", "excitation", "numexc", "doubleexc"};
  for (int kind = 0; kind < 5; ++kind) {
    double err = 0.0;
    for (int t = 0; t < kBuilderCases; ++t) {
      const std::size_t n = 4 + rng() % 3;
      const LinearEncoding enc = detail::random_encoding(n, rng);
      std::vector<std::size_t> idx(n);
      for (std::size_t q = 0; q < n; ++q) idx[q] = q;
      std::shuffle(idx.begin(), idx.end(), rng);
      const std::size_t i = idx[0], j = idx[1], k = idx[2], l = idx[3];
      const Complex c(0.25 + 0.5 * static_cast<double>(rng() % 5), 0.0);
      PauliSum built(n);
      DenseOperator ref;
      switch (kind) {
        case 0:
          built = number_term(enc, i, c);
          ref = detail::fermion_dense(enc, {cr(i), an(i)}, c, false);
          break;
        case 1:
          built = exchange_term(enc, i, j, c);
          ref = detail::fermion_dense(enc, {cr(i), an(i), cr(j), an(j)}, c, false);
          break;
        case 2:
          built = excitation_term(enc, i, j, c);
          ref = detail::fermion_dense(enc, {cr(i), an(j)}, c, true);
          break;
        case 3:
          built = number_excitation_term(enc, i, j, k, c);
          ref = detail::fermion_dense(enc, {cr(i), cr(j), an(j), an(k)}, c, true);
          break;
        default:
          built = double_excitation_term(enc, i, j, k, l, c);
          ref = detail::fermion_dense(enc, {cr(i), cr(j), an(k), an(l)}, c, true);
          break;
      }
      err = std::max(err, detail::max_abs(pauli_matrix(built) - ref));
    }
    out.push_back(detail::tolerance_check(std::string("hamiltonian.") + names[kind], err, kDenseTol,
                                          std::to_string(kBuilderCases) + " cases"));
  }
  // Sign of the double-excitation closed form against the ladder expansion.
  std::size_t total = 0, agree = 0;
  for (std::size_t n = 4; n <= 6; ++n) {
    const LinearEncoding enc(random_invertible(n, rng));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k)
          for (std::size_t l = 0; l < n; ++l) {
            if (i == j || i == k || i == l || j == k || j == l || k == l) continue;
            BitVec v(n), z(n);
            for (std::size_t p : {i, j, k, l}) {
              v.set(p);
              z ^= BitVec::prefix(n, p);
            }
            const PauliSum t = encode_fermion_product(enc, {1.0, {cr(i), cr(j), an(k), an(l)}});
            const Complex co = (t + t.adjoint()).coefficient(enc.matrix() * v, enc.inverse_transpose() * z);
            const int oracle = co.real() < 0 ? 1 : 0;
            agree += (std::abs(std::abs(co) - 0.125) < kDenseTol && oracle == double_excitation_phase_bit(i, j, k, l));
            ++total;
          }
  }
  out.push_back({"hamiltonian.sign_rule", agree == total, std::to_string(agree) + "/" + std::to_string(total) + " tuples"});

  const LinearEncoding encs[] = {LinearEncoding::jw(4), LinearEncoding::parity(4), LinearEncoding::bk(4)};
  bool terms_ok = true;
  std::string counts;
  std::vector<std::vector<double>> spectra;
  for (const auto& enc : encs) {
    const PauliSum h = hydrogen_hamiltonian(enc);
    const PauliSum ref = assemble_hamiltonian(enc, h2::spec());
    terms_ok = terms_ok && h.approx_equal(ref, kDenseTol) && h.size() == ref.size();
    counts += (counts.empty() ? "" : "/") + std::to_string(h.size());
    spectra.push_back(spectrum(h));
  }
  out.push_back({"hamiltonian.hydrogen.terms", terms_ok, "jw/parity/bk term counts " + counts});
  double gap = 0.0;
  for (std::size_t e = 1; e < spectra.size(); ++e)
    for (std::size_t i = 0; i < spectra[0].size(); ++i) gap = std::max(gap, std::abs(spectra[e][i] - spectra[0][i]));
  out.push_back(detail::tolerance_check("hamiltonian.hydrogen.spectrum", gap, kSpectrumTol, "jw/parity/bk eigenvalues"));
}

/// Isometry checks: V^dag V = I, S V = V, and V p = push(p) V for logical X/Z, lattice hops and random strings.
inline double isometry_error(const StabilizerEncoding& e, std::mt19937_64& rng) {
  const DenseOperator v = encoder_isometry(e);
  double err = detail::max_abs(v.adjoint() * v - DenseOperator::Identity(v.cols(), v.cols()));
  for (const auto& s : e.stabilizers) err = std::max(err, stabilizer_error(s, v));
  std::vector<PauliString> probes;
  for (std::size_t i = 0; i < e.n_logical; ++i) {
    probes.push_back(PauliString::single(e.n_logical, i, 'X'));
    probes.push_back(PauliString::single(e.n_logical, i, 'Z'));
  }
  if (e.lattice) {
    for (const auto& [a, b] : square_lattice_graph(e.lattice).edges) probes.push_back(jw_hopping_string(e.n_logical, a, b));
  }
  for (int t = 0; t < 10; ++t) {
    BitVec x(e.n_logical), z(e.n_logical);
    for (std::size_t q = 0; q < e.n_logical; ++q) {
      x.set(q, rng() & 1U);
      z.set(q, rng() & 1U);
    }
    probes.emplace_back(x, z, static_cast<int>(rng() % 4));
  }
  for (const auto& p : probes) {
    const PauliString pushed = push_logical(e, p);
    err = std::max(err, intertwining_error(v, p, pushed));
    err = std::max(err, intertwining_error(v, p, reduce_weight(e, pushed)));
  }
  return err;
}

/// Reduced weights of the encoded vertical hops between interior columns, and of horizontal hops.
inline std::pair<std::vector<std::size_t>, std::vector<std::size_t>> square_hop_weights(const StabilizerEncoding& e) {
  const std::size_t L = e.lattice;
  std::vector<std::size_t> vertical, horizontal;
  for (const auto& [a, b] : square_lattice_graph(L).edges) {
    const auto [ra, ca] = snake_site(L, a);
    const auto [rb, cb] = snake_site(L, b);
    const std::size_t w = reduce_weight(e, push_logical(e, jw_hopping_string(L * L, a, b))).weight();
    if (ca != cb) {
      horizontal.push_back(w);
    } else if (ca > 0 && ca + 1 < L) {
      vertical.push_back(w);
    }
  }
  return {vertical, horizontal};
}

inline void run_aqm(std::uint64_t seed, std::vector<Check>& out) {
  std::mt19937_64 rng(seed ^ 0xa9aULL);
  for (std::size_t L : {2, 3}) {
    const StabilizerEncoding e = etype_aqm(L);
    bool valid = true;
    try {
      e.validate();
    } catch (const std::logic_error&) {
      valid = false;
    }
    const double err = valid ? isometry_error(e, rng) : INFINITY;
    out.push_back(detail::tolerance_check("aqm.etype.L" + std::to_string(L) + ".isometry", err, kDenseTol,
                                          "V^dag V, S V, intertwining"));
  }
  {
    // Hops whose JW strings span a full row pair shrink strictly, as does the long string.
    const StabilizerEncoding e = etype_aqm(4);
    const PauliString longest = parse_label("Y3 Z4 Z5 Z6 Z7 Z8 Z9 Z10 Z11 Z12 Z13 Z14 Y15", 16);
    const std::size_t reduced = reduce_weight(e, push_logical(e, longest)).weight();
    bool bounded = true;
    std::size_t worst = 0;
    for (const auto& [a, b] : square_lattice_graph(4).edges) {
      const PauliString jw = jw_hopping_string(16, a, b);
      const std::size_t w = reduce_weight(e, push_logical(e, jw)).weight();
      worst = std::max(worst, w);
      if (jw.weight() >= 8) bounded = bounded && w < jw.weight();
    }
    out.push_back({"aqm.etype.L4.locality", bounded && reduced < longest.weight(),
                   "Y3..Y15 weight " + std::to_string(longest.weight()) + " -> " + std::to_string(reduced) +
                       ", max encoded hop weight " + std::to_string(worst)});
  }
  {
    const double err = isometry_error(square_lattice_aqm(2), rng);
    out.push_back(detail::tolerance_check("aqm.square.L2.isometry", err, kDenseTol, "V^dag V, S V, intertwining"));
  }
  std::vector<std::pair<std::vector<std::size_t>, std::vector<std::size_t>>> hops;
  for (std::size_t L : {3, 4}) {
    const StabilizerEncoding e = square_lattice_aqm(L);
    const std::string tag = "aqm.square.L" + std::to_string(L);
    bool valid = true;
    std::string why;
    try {
      e.validate();
    } catch (const std::logic_error& ex) {
      valid = false;
      why = ex.what();
    }
    out.push_back({tag + ".stabilizers", valid && e.stabilizers.size() == e.n_physical - L * L,
                   std::to_string(e.stabilizers.size()) + " generators, " + std::to_string(e.n_physical) + " qubits" +
                       (why.empty() ? "" : ": " + why)});
    std::size_t interior = 0;
    bool local = true;
    for (const auto& s : e.stabilizers) {
      if (plaquette_of(L, s)) {
        ++interior;
        local = local && s.weight() <= 6;
      }
    }
    out.push_back({tag + ".plaquettes", local && interior > 0,
                   std::to_string(interior) + " plaquette generators, weight <= 6"});
    hops.push_back(square_hop_weights(e));
  }
  auto all_equal = [](const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
    if (a.empty() || b.empty()) return false;
    const std::size_t w = a.front();
    return std::all_of(a.begin(), a.end(), [w](auto x) { return x == w; }) &&
           std::all_of(b.begin(), b.end(), [w](auto x) { return x == w; });
  };
  out.push_back({"aqm.square.hop_locality", all_equal(hops[0].first, hops[1].first) && all_equal(hops[0].second, hops[1].second),
                 "interior vertical weight " + std::to_string(hops[0].first.empty() ? 0 : hops[0].first.front()) +
                     ", horizontal weight " + std::to_string(hops[0].second.empty() ? 0 : hops[0].second.front()) +
                     " at L=3 and L=4"});
}

/// Throws std::invalid_argument for an unknown suite name.
inline Report run(const std::string& suite, std::uint64_t seed) {
  if (std::find(suite_names().begin(), suite_names().end(), suite) == suite_names().end()) {
    throw std::invalid_argument("unknown suite \"" + suite + "\"");
  }
  Report r{suite, seed, {}};
  const bool all = suite == "all";
  if (all || suite == "car") run_car(seed, r.checks);
  if (all || suite == "ternary") run_ternary(seed, r.checks);
  if (all || suite == "hamiltonian") run_hamiltonian(seed, r.checks);
  if (all || suite == "aqm") run_aqm(seed, r.checks);
  return r;
}

inline std::string to_text(const Report& r) {
  std::string s;
  for (const Check& c : r.checks) s += (c.pass ? "PASS " : "FAIL ") + c.name + "  " + c.detail + "\n";
  return s;
}

inline nlohmann::json to_json(const Report& r) {
  nlohmann::json checks = nlohmann::json::array();
  for (const Check& c : r.checks) checks.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  return {{"suite", r.suite}, {"seed", r.seed}, {"passed", r.passed()}, {"checks", checks}};
}

}  // namespace f2q::verify
