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
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "f2q/bits.hpp"
#include "f2q/pauli.hpp"

namespace f2q {

enum class QubitKind { kData, kAncilla };

struct QubitSite {
  std::size_t row = 0;
  std::size_t col = 0;
  QubitKind kind = QubitKind::kData;
};

/// Symplectic vector [x | z] of length 2n.
inline BitVec symplectic(const PauliString& p) {
  const std::size_t n = p.num_qubits();
  BitVec v(2 * n);
  for (std::size_t q = 0; q < n; ++q) {
    v.set(q, p.x().get(q));
    v.set(n + q, p.z().get(q));
  }
  return v;
}

/// Hermitian Pauli string (label form, + sign) from a symplectic vector.
inline PauliString from_symplectic(const BitVec& v) {
  const std::size_t n = v.size() / 2;
  BitVec x(n), z(n);
  for (std::size_t q = 0; q < n; ++q) {
    x.set(q, v.get(q));
    z.set(q, v.get(n + q));
  }
  return PauliString(x, z).unsigned_form();
}

/// Linear functional whose kernel is the set of Paulis commuting with p.
inline BitVec commutation_row(const PauliString& p) {
  const std::size_t n = p.num_qubits();
  BitVec r(2 * n);
  for (std::size_t q = 0; q < n; ++q) {
    r.set(q, p.z().get(q));
    r.set(n + q, p.x().get(q));
  }
  return r;
}

/// Isometric encoding of n_logical qubits into n_physical qubits, given by a
/// stabilizer group and one logical X/Z pair per encoded qubit.
struct StabilizerEncoding {
  std::string name;
  std::size_t n_logical = 0;
  std::size_t n_physical = 0;
  std::vector<PauliString> stabilizers;
  std::vector<PauliString> logical_x;
  std::vector<PauliString> logical_z;
  std::vector<QubitSite> geometry;
  /// Lattice side for lattice encodings, 0 otherwise.
  std::size_t lattice = 0;

  /// Throws std::logic_error naming the first violated relation.
  void validate() const {
    auto fail = [](const std::string& msg) { throw std::logic_error("stabilizer encoding: " + msg); };
    if (logical_x.size() != n_logical || logical_z.size() != n_logical) fail("logical count mismatch");
    if (stabilizers.size() + n_logical != n_physical) {
      fail(std::to_string(stabilizers.size()) + " stabilizers for " + std::to_string(n_physical) + " physical and " +
           std::to_string(n_logical) + " logical qubits");
    }
    for (const auto* set : {&stabilizers, &logical_x, &logical_z}) {
      for (const auto& p : *set) {
        if (p.num_qubits() != n_physical) fail("operator size mismatch");
      }
    }
    for (std::size_t a = 0; a < stabilizers.size(); ++a) {
      if (!stabilizers[a].is_hermitian()) fail("stabilizer " + std::to_string(a) + " is not Hermitian");
      for (std::size_t b = a + 1; b < stabilizers.size(); ++b) {
        if (!pauli_commutes(stabilizers[a], stabilizers[b])) {
          fail("stabilizers " + std::to_string(a) + " and " + std::to_string(b) + " anticommute");
        }
      }
      for (std::size_t i = 0; i < n_logical; ++i) {
        if (!pauli_commutes(stabilizers[a], logical_x[i]) || !pauli_commutes(stabilizers[a], logical_z[i])) {
          fail("stabilizer " + std::to_string(a) + " anticommutes with logical " + std::to_string(i));
        }
      }
    }
    check_logical_pairs(logical_x, logical_z);
    std::vector<BitVec> vs;
    for (const auto& s : stabilizers) vs.push_back(symplectic(s));
    if (span_rank(vs) != stabilizers.size()) fail("stabilizers are not independent");
  }

  /// Canonical (anti)commutation of logical pairs; throws naming the offending pair.
  static void check_logical_pairs(const std::vector<PauliString>& lx, const std::vector<PauliString>& lz) {
    auto fail = [](const std::string& msg) { throw std::invalid_argument("logical operators: " + msg); };
    if (lx.size() != lz.size()) fail("unequal numbers of X and Z logicals");
    const std::size_t k = lx.size();
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) {
        const std::string pair = "[" + std::to_string(i) + "] and ";
        const std::string other = "[" + std::to_string(j) + "]";
        if (pauli_commutes(lx[i], lz[j]) == (i == j)) {
          fail("logical_x" + pair + "logical_z" + other + (i == j ? " commute" : " anticommute"));
        }
        if (j > i && !pauli_commutes(lx[i], lx[j])) fail("logical_x" + pair + "logical_x" + other + " anticommute");
        if (j > i && !pauli_commutes(lz[i], lz[j])) fail("logical_z" + pair + "logical_z" + other + " anticommute");
      }
    }
  }
};

/// Stabilizer generators completing the logical operators: independent,
/// pairwise commuting, commuting with every logical, n_physical - n_logical of
/// them. Seed generators are kept first; further generators are drawn from the
/// commutant, Z-type ones before any others.
inline std::vector<PauliString> complete_stabilizers(std::size_t n_physical, const std::vector<PauliString>& logical_x,
                                                     const std::vector<PauliString>& logical_z,
                                                     const std::vector<PauliString>& seed = {}) {
  StabilizerEncoding::check_logical_pairs(logical_x, logical_z);
  const std::size_t k = logical_x.size();
  if (k > n_physical) throw std::invalid_argument("more logical than physical qubits");
  std::vector<BitVec> constraints;
  for (const auto* set : {&logical_x, &logical_z}) {
    for (const auto& p : *set) {
      if (p.num_qubits() != n_physical) throw DimensionError("logical operator size mismatch");
      constraints.push_back(commutation_row(p));
    }
  }
  std::vector<PauliString> out;
  std::vector<BitVec> span;
  for (const auto& s : seed) {
    if (s.num_qubits() != n_physical) throw DimensionError("seed size mismatch");
    for (std::size_t c = 0; c < constraints.size(); ++c) {
      if (symplectic(s).dot(constraints[c])) {
        throw std::invalid_argument("seed generator " + format_label(s) + " anticommutes with a logical or earlier seed");
      }
    }
    if (in_span(span, symplectic(s))) throw std::invalid_argument("seed generator " + format_label(s) + " is dependent");
    out.push_back(s.is_hermitian() ? s : s.unsigned_form());
    span.push_back(symplectic(s));
    constraints.push_back(commutation_row(s));
  }
  if (out.size() > n_physical - k) throw std::invalid_argument("too many seed generators");
  while (out.size() < n_physical - k) {
    std::vector<BitVec> z_only = constraints;
    for (std::size_t q = 0; q < n_physical; ++q) z_only.push_back(BitVec::unit(2 * n_physical, q));
    std::optional<BitVec> pick;
    for (const auto* pool : {&z_only, &constraints}) {
      for (const BitVec& v : nullspace(*pool, 2 * n_physical)) {
        if (!in_span(span, v)) {
          pick = v;
          break;
        }
      }
      if (pick) break;
    }
    if (!pick) throw std::logic_error("commutant exhausted before completion");
    out.push_back(from_symplectic(*pick));
    span.push_back(*pick);
    constraints.push_back(commutation_row(out.back()));
  }
  return out;
}

/// Physical image of a logical Pauli string i^a X^x Z^z.
inline PauliString push_logical(const StabilizerEncoding& enc, const PauliString& p) {
  if (p.num_qubits() != enc.n_logical) {
    throw DimensionError("logical operator on " + std::to_string(p.num_qubits()) + " qubits, encoding has " +
                         std::to_string(enc.n_logical));
  }
  PauliString out(enc.n_physical);
  out.set_phase(p.phase());
  for (std::size_t i = 0; i < enc.n_logical; ++i) {
    if (p.x().get(i)) out = out * enc.logical_x[i];
  }
  for (std::size_t i = 0; i < enc.n_logical; ++i) {
    if (p.z().get(i)) out = out * enc.logical_z[i];
  }
  return out;
}

inline PauliSum push_logical(const StabilizerEncoding& enc, const PauliSum& s) {
  if (s.num_qubits() != enc.n_logical) throw DimensionError("logical sum size mismatch");
  PauliSum out(enc.n_physical);
  for (const auto& [key, c] : s.terms()) out.add_term(push_logical(enc, PauliString(key.first, key.second)), c);
  return out;
}

struct ReducedPauli {
  PauliString op;
  /// Bit g set when stabilizer g was multiplied in.
  std::vector<bool> used;
};

inline constexpr std::size_t kExhaustiveReduceLimit = 20;

/// Multiplies p by the stabilizer-group element of least resulting weight.
/// Exhaustive for up to 20 generators (ties to the smallest generator mask),
/// otherwise greedy descent by single generators.
inline ReducedPauli reduce_weight_detail(const StabilizerEncoding& enc, const PauliString& p) {
  if (p.num_qubits() != enc.n_physical) throw DimensionError("reduce_weight: size mismatch");
  for (std::size_t g = 0; g < enc.stabilizers.size(); ++g) {
    if (!pauli_commutes(p, enc.stabilizers[g])) {
      throw std::invalid_argument("reduce_weight: " + format_label(p) + " anticommutes with stabilizer " +
                                  std::to_string(g));
    }
  }
  const std::size_t s = enc.stabilizers.size();
  std::vector<bool> used(s, false);
  if (s <= kExhaustiveReduceLimit) {
    BitVec x = p.x(), z = p.z();
    std::size_t best_w = (x | z).popcount();
    std::uint64_t best_mask = 0;
    std::uint64_t gray = 0;
    for (std::uint64_t i = 1; i < (std::uint64_t{1} << s); ++i) {
      const unsigned flip = static_cast<unsigned>(std::countr_zero(i));
      gray ^= std::uint64_t{1} << flip;
      x ^= enc.stabilizers[flip].x();
      z ^= enc.stabilizers[flip].z();
      const std::size_t w = (x | z).popcount();
      if (w < best_w || (w == best_w && gray < best_mask)) {
        best_w = w;
        best_mask = gray;
      }
    }
    for (std::size_t g = 0; g < s; ++g) used[g] = (best_mask >> g) & 1U;
  } else {
    PauliString cur = p;
    for (bool improved = true; improved;) {
      improved = false;
      for (std::size_t g = 0; g < s; ++g) {
        const PauliString cand = cur * enc.stabilizers[g];
        if (cand.weight() < cur.weight()) {
          cur = cand;
          used[g] = !used[g];
          improved = true;
          break;
        }
      }
    }
  }
  PauliString out = p;
  for (std::size_t g = 0; g < s; ++g) {
    if (used[g]) out = out * enc.stabilizers[g];
  }
  return {out, used};
}

inline PauliString reduce_weight(const StabilizerEncoding& enc, const PauliString& p) {
  return reduce_weight_detail(enc, p).op;
}

/// Regenerates a stabilizer group region by region: for each qubit region in
/// turn, adds the lightest independent group elements supported inside it.
/// Remaining generators are appended unchanged. region_of[g] is the region
/// index of generator g, or regions.size() for the leftovers.
struct LocalizedGenerators {
  std::vector<PauliString> generators;
  std::vector<std::size_t> region_of;
};

inline LocalizedGenerators localize_generators(const std::vector<PauliString>& group,
                                               const std::vector<std::vector<std::size_t>>& regions) {
  LocalizedGenerators out;
  if (group.empty()) return out;
  const std::size_t n = group.front().num_qubits();
  const std::size_t s = group.size();
  std::vector<BitVec> chosen;
  for (std::size_t r = 0; r < regions.size() && chosen.size() < s; ++r) {
    std::vector<bool> inside(n, false);
    for (std::size_t q : regions[r]) inside.at(q) = true;
    // Coefficient vectors a with sum a_g g vanishing outside the region.
    std::vector<BitVec> rows;
    for (std::size_t q = 0; q < n; ++q) {
      if (inside[q]) continue;
      BitVec rx(s), rz(s);
      for (std::size_t g = 0; g < s; ++g) {
        rx.set(g, group[g].x().get(q));
        rz.set(g, group[g].z().get(q));
      }
      rows.push_back(rx);
      rows.push_back(rz);
    }
    const std::vector<BitVec> kernel = nullspace(rows, s);
    if (kernel.empty()) continue;
    if (kernel.size() > 16) throw std::logic_error("localize_generators: region too large");
    std::vector<PauliString> cands;
    for (std::uint64_t m = 1; m < (std::uint64_t{1} << kernel.size()); ++m) {
      BitVec a(s);
      for (std::size_t b = 0; b < kernel.size(); ++b) {
        if ((m >> b) & 1U) a ^= kernel[b];
      }
      PauliString e(n);
      for (std::size_t g = 0; g < s; ++g) {
        if (a.get(g)) e = e * group[g];
      }
      cands.push_back(e);
    }
    std::stable_sort(cands.begin(), cands.end(), [](const PauliString& a, const PauliString& b) {
      if (a.weight() != b.weight()) return a.weight() < b.weight();
      return symplectic(a) < symplectic(b);
    });
    for (const auto& c : cands) {
      if (in_span(chosen, symplectic(c))) continue;
      chosen.push_back(symplectic(c));
      out.generators.push_back(c);
      out.region_of.push_back(r);
    }
  }
  for (const auto& g : group) {
    if (chosen.size() == s) break;
    if (in_span(chosen, symplectic(g))) continue;
    chosen.push_back(symplectic(g));
    out.generators.push_back(g);
    out.region_of.push_back(regions.size());
  }
  return out;
}

// ---- lattices --------------------------------------------------------------

/// Position of lattice site (r, c) along the boustrophedon chain.
inline std::size_t snake_index(std::size_t L, std::size_t r, std::size_t c) {
  return r * L + (r % 2 == 0 ? c : L - 1 - c);
}

inline std::pair<std::size_t, std::size_t> snake_site(std::size_t L, std::size_t s) {
  const std::size_t r = s / L;
  const std::size_t c = r % 2 == 0 ? s % L : L - 1 - s % L;
  return {r, c};
}

struct InteractionGraph {
  std::size_t L = 0;
  /// Site pairs as chain indices, smaller first.
  std::vector<std::pair<std::size_t, std::size_t>> edges;
};

/// Nearest-neighbour graph of the L x L square lattice.
inline InteractionGraph square_lattice_graph(std::size_t L) {
  InteractionGraph g{L, {}};
  for (std::size_t r = 0; r < L; ++r) {
    for (std::size_t c = 0; c < L; ++c) {
      const std::size_t a = snake_index(L, r, c);
      if (c + 1 < L) g.edges.emplace_back(std::minmax(a, snake_index(L, r, c + 1)));
      if (r + 1 < L) g.edges.emplace_back(std::minmax(a, snake_index(L, r + 1, c)));
    }
  }
  std::sort(g.edges.begin(), g.edges.end());
  return g;
}

/// JW image Y_p Z_{p+1} ... Z_{q-1} Y_q of the hopping between chain sites p < q.
inline PauliString jw_hopping_string(std::size_t n, std::size_t p, std::size_t q) {
  if (p > q) std::swap(p, q);
  if (q >= n || p == q) throw std::invalid_argument("jw_hopping_string: bad site pair");
  PauliString s(n);
  s.set(p, 'Y');
  for (std::size_t m = p + 1; m < q; ++m) s.set(m, 'Z');
  s.set(q, 'Y');
  return s;
}

/// E-type auxiliary qubit mapping: data qubits along the snake, one ancilla per
/// row holding that row's parity.
inline StabilizerEncoding etype_aqm(std::size_t L) {
  if (L < 2) throw std::invalid_argument("etype_aqm: L must be at least 2");
  StabilizerEncoding e;
  e.name = "etype";
  e.lattice = L;
  e.n_logical = L * L;
  e.n_physical = L * L + L;
  const std::size_t n = e.n_physical;
  for (std::size_t r = 0; r < L; ++r) {
    PauliString s(n);
    for (std::size_t c = 0; c < L; ++c) s.set(r * L + c, 'Z');
    s.set(L * L + r, 'Z');
    e.stabilizers.push_back(s);
  }
  for (std::size_t q = 0; q < L * L; ++q) {
    PauliString x(n);
    x.set(q, 'X');
    x.set(L * L + q / L, 'X');
    e.logical_x.push_back(x);
    e.logical_z.push_back(PauliString::single(n, q, 'Z'));
    const auto [r, c] = snake_site(L, q);
    e.geometry.push_back({r, c, QubitKind::kData});
  }
  for (std::size_t r = 0; r < L; ++r) e.geometry.push_back({r, L, QubitKind::kAncilla});
  return e;
}

/// Plaquette cells of a square-lattice encoding: qubits of the four sites
/// (r..r+1, c..c+1), data and auxiliary.
inline std::vector<std::vector<std::size_t>> square_plaquettes(std::size_t L) {
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t r = 0; r + 1 < L; ++r) {
    for (std::size_t c = 0; c + 1 < L; ++c) {
      std::vector<std::size_t> cell;
      for (std::size_t dr = 0; dr < 2; ++dr) {
        for (std::size_t dc = 0; dc < 2; ++dc) {
          const std::size_t s = snake_index(L, r + dr, c + dc);
          cell.push_back(s);
          cell.push_back(L * L + s);
        }
      }
      std::sort(cell.begin(), cell.end());
      out.push_back(cell);
    }
  }
  return out;
}

/// Square-lattice auxiliary qubit mapping with one auxiliary fermion per site.
/// Qubit s is the data qubit of chain site s and qubit L*L + s its auxiliary;
/// operators are built on the interleaved chain data_0, aux_0, data_1, ...
/// Vertical lattice edges carry the auxiliary bilinears i mu_(r,c) nu_(r+1,c);
/// neighbouring pairs of them seed the plaquette stabilizers and the column
/// parities of the auxiliaries close the group.
inline StabilizerEncoding square_lattice_aqm(std::size_t L) {
  if (L < 2) throw std::invalid_argument("square_lattice_aqm: L must be at least 2");
  StabilizerEncoding e;
  e.name = "square";
  e.lattice = L;
  const std::size_t sites = L * L;
  e.n_logical = sites;
  e.n_physical = 2 * sites;
  const std::size_t n = e.n_physical;
  auto qubit_at = [sites](std::size_t pos) { return pos % 2 == 0 ? pos / 2 : sites + pos / 2; };
  // Majorana m of the physical chain, mapped onto qubit indices.
  auto majorana = [&](std::size_t m) {
    const std::size_t pos = m / 2;
    PauliString g(n);
    for (std::size_t t = 0; t < pos; ++t) g.set(qubit_at(t), 'Z');
    g.set(qubit_at(pos), m % 2 ? 'Y' : 'X');
    return g;
  };
  auto aux_mu = [&](std::size_t s) { return majorana(2 * (2 * s + 1)); };
  auto aux_nu = [&](std::size_t s) { return majorana(2 * (2 * s + 1) + 1); };
  const PauliString i_unit{BitVec(n), BitVec(n), 1};
  auto edge = [&](std::size_t r, std::size_t c) {
    return i_unit * aux_mu(snake_index(L, r, c)) * aux_nu(snake_index(L, r + 1, c));
  };

  for (std::size_t s = 0; s < sites; ++s) {
    PauliString x = PauliString::single(n, s, 'X');
    for (std::size_t p = 0; p < s; ++p) x.set(sites + p, 'Z');
    e.logical_x.push_back(x);
    e.logical_z.push_back(PauliString::single(n, s, 'Z'));
  }

  std::vector<PauliString> seed;
  for (std::size_t r = 0; r + 1 < L; ++r) {
    for (std::size_t c = 0; c + 1 < L; ++c) seed.push_back(edge(r, c) * edge(r, c + 1));
    seed.push_back(edge(r, r % 2 == 0 ? L - 1 : 0));
  }
  const std::vector<PauliString> group = complete_stabilizers(n, e.logical_x, e.logical_z, seed);

  std::vector<std::vector<std::size_t>> regions = square_plaquettes(L);
  for (std::size_t c = 0; c < L; ++c) {
    std::vector<std::size_t> column;
    for (std::size_t r = 0; r < L; ++r) column.push_back(sites + snake_index(L, r, c));
    regions.push_back(column);
  }
  e.stabilizers = localize_generators(group, regions).generators;

  for (std::size_t s = 0; s < sites; ++s) {
    const auto [r, c] = snake_site(L, s);
    e.geometry.push_back({2 * r, c, QubitKind::kData});
  }
  for (std::size_t s = 0; s < sites; ++s) {
    const auto [r, c] = snake_site(L, s);
    e.geometry.push_back({2 * r + 1, c, QubitKind::kAncilla});
  }
  return e;
}

/// Index of the plaquette containing the support of p, if any.
inline std::optional<std::size_t> plaquette_of(std::size_t L, const PauliString& p) {
  const auto cells = square_plaquettes(L);
  for (std::size_t i = 0; i < cells.size(); ++i) {
    BitVec mask(p.num_qubits());
    for (std::size_t q : cells[i]) mask.set(q);
    BitVec outside = p.x() | p.z();
    outside ^= (outside & mask);
    if (outside.none()) return i;
  }
  return std::nullopt;
}

/// Encoding with bare logicals and no stabilizers.
inline StabilizerEncoding trivial_encoding(std::size_t n) {
  StabilizerEncoding e;
  e.name = "trivial";
  e.n_logical = n;
  e.n_physical = n;
  for (std::size_t q = 0; q < n; ++q) {
    e.logical_x.push_back(PauliString::single(n, q, 'X'));
    e.logical_z.push_back(PauliString::single(n, q, 'Z'));
    e.geometry.push_back({0, q, QubitKind::kData});
  }
  return e;
}

}  // namespace f2q
