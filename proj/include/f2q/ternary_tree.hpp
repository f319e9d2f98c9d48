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
#include <array>
#include <functional>
#include <optional>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "f2q/bits.hpp"
#include "f2q/linear_encoding.hpp"
#include "f2q/pauli.hpp"

namespace f2q {

enum Branch : std::size_t { kX = 0, kY = 1, kZ = 2 };

inline char branch_char(std::size_t b) { return "XYZ"[b]; }

class TreeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Ternary tree stored as an arena. Child slots are positional (X, Y, Z).
class TernaryTree {
 public:
  struct Node {
    std::size_t qubit = 0;
    std::array<std::optional<std::size_t>, 3> child{};
  };

  TernaryTree() = default;

  std::size_t add_node(std::size_t qubit) {
    nodes_.push_back(Node{qubit, {}});
    if (!root_) root_ = nodes_.size() - 1;
    return nodes_.size() - 1;
  }
  void attach(std::size_t parent, Branch b, std::size_t child) {
    if (parent >= nodes_.size() || child >= nodes_.size()) throw TreeError("attach: node reference out of range");
    nodes_[parent].child[b] = child;
  }
  void set_root(std::size_t r) { root_ = r; }
  void set_label(std::size_t node, std::size_t qubit) { nodes_.at(node).qubit = qubit; }

  std::size_t n() const noexcept { return nodes_.size(); }
  std::optional<std::size_t> root() const noexcept { return root_; }
  const Node& node(std::size_t i) const { return nodes_.at(i); }
  const std::vector<Node>& nodes() const noexcept { return nodes_; }

  /// Nodes in labelling order: X subtree, node, Y subtree, Z subtree.
  /// Requires a structurally valid tree.
  std::vector<std::size_t> canonical_order() const {
    std::vector<std::size_t> out;
    out.reserve(n());
    std::function<void(std::size_t)> walk = [&](std::size_t v) {
      const Node& nd = nodes_[v];
      if (nd.child[kX]) walk(*nd.child[kX]);
      out.push_back(v);
      if (nd.child[kY]) walk(*nd.child[kY]);
      if (nd.child[kZ]) walk(*nd.child[kZ]);
    };
    walk(*root_);
    return out;
  }

  /// Overwrites labels with the canonical labelling of this shape.
  void label_canonically() {
    const auto order = canonical_order();
    for (std::size_t i = 0; i < order.size(); ++i) nodes_[order[i]].qubit = i;
  }

 private:
  std::vector<Node> nodes_;
  std::optional<std::size_t> root_;
};

/// Empty string when the arena is a rooted tree whose labels permute 0..n-1.
inline std::string structural_error(const TernaryTree& t) {
  if (t.n() == 0) return "tree has no nodes";
  if (!t.root() || *t.root() >= t.n()) return "root reference out of range";
  std::vector<int> seen(t.n(), 0);
  std::vector<std::size_t> stack{*t.root()};
  while (!stack.empty()) {
    const std::size_t v = stack.back();
    stack.pop_back();
    if (seen[v]++) return "node " + std::to_string(v) + " reached twice (cycle or shared child)";
    for (const auto& c : t.node(v).child) {
      if (!c) continue;
      if (*c >= t.n()) return "child reference " + std::to_string(*c) + " of node " + std::to_string(v) + " out of range";
      stack.push_back(*c);
    }
  }
  for (std::size_t v = 0; v < t.n(); ++v) {
    if (!seen[v]) return "node " + std::to_string(v) + " unreachable from root";
  }
  std::vector<int> label_seen(t.n(), 0);
  for (std::size_t v = 0; v < t.n(); ++v) {
    const std::size_t q = t.node(v).qubit;
    if (q >= t.n()) return "node " + std::to_string(v) + " has label " + std::to_string(q) + " >= " + std::to_string(t.n());
    if (label_seen[q]++) return "duplicate label " + std::to_string(q);
  }
  return {};
}

inline void validate_structure(const TernaryTree& t) {
  const std::string err = structural_error(t);
  if (!err.empty()) throw TreeError("invalid tree: " + err);
}

struct TreeReport {
  bool ok = true;
  std::string message;
};

/// Checks labels against the canonical order; names the first offending node.
/// Structural problems are raised as TreeError.
inline TreeReport validate(const TernaryTree& t) {
  validate_structure(t);
  const auto order = t.canonical_order();
  for (std::size_t i = 0; i < order.size(); ++i) {
    const std::size_t q = t.node(order[i]).qubit;
    if (q != i) {
      return {false, "node " + std::to_string(order[i]) + " labelled " + std::to_string(q) +
                         ", canonical order expects " + std::to_string(i)};
    }
  }
  return {};
}

inline void require_canonical(const TernaryTree& t) {
  const TreeReport r = validate(t);
  if (!r.ok) throw TreeError("tree not canonically labelled: " + r.message);
}

/// Root-to-slot Pauli strings, depth first with X < Y < Z; 2n+1 in total.
/// Any labelling that permutes 0..n-1 is accepted.
inline std::vector<PauliString> path_pauli_strings(const TernaryTree& t) {
  validate_structure(t);
  const std::size_t n = t.n();
  std::vector<PauliString> out;
  out.reserve(2 * n + 1);
  std::function<void(std::size_t, PauliString&)> walk = [&](std::size_t v, PauliString& prefix) {
    const auto& nd = t.node(v);
    for (std::size_t b = 0; b < 3; ++b) {
      prefix.set(nd.qubit, branch_char(b));
      if (nd.child[b]) {
        walk(*nd.child[b], prefix);
      } else {
        out.push_back(prefix.unsigned_form());
      }
    }
    prefix.set(nd.qubit, 'I');
  };
  PauliString prefix(n);
  walk(*t.root(), prefix);
  return out;
}

/// Encoder matrix of a canonically labelled tree, assembled recursively as
///   [[E_X, 0, 0, 0], [1, 1, 1, 0], [0, 0, rev(E_Y), 0], [0, 0, 0, E_Z]].
inline BitMatrix tree_matrix(const TernaryTree& t) {
  require_canonical(t);
  std::function<BitMatrix(std::optional<std::size_t>)> build = [&](std::optional<std::size_t> v) -> BitMatrix {
    if (!v) return BitMatrix(0, 0);
    const auto& nd = t.node(*v);
    const BitMatrix ex = build(nd.child[kX]);
    const BitMatrix ey = column_reverse(build(nd.child[kY]));
    const BitMatrix ez = build(nd.child[kZ]);
    const std::size_t nx = ex.rows(), ny = ey.rows(), nz = ez.rows();
    BitMatrix e(nx + 1 + ny + nz, nx + 1 + ny + nz);
    e.set_block(0, 0, ex);
    for (std::size_t c = 0; c <= nx + ny; ++c) e.set(nx, c);
    e.set_block(nx + 1, nx + 1, ey);
    e.set_block(nx + 1 + ny, nx + 1 + ny, ez);
    return e;
  };
  return build(t.root());
}

inline LinearEncoding encoder_matrix(const TernaryTree& t) { return LinearEncoding(tree_matrix(t)); }

struct MajoranaAssignment {
  /// Entry m is U_E gamma_m U_E^dag for the JW Majorana gamma_m, sign included.
  std::vector<PauliString> majoranas;
  /// The path string not hit by any Majorana.
  PauliString omitted;
};

inline MajoranaAssignment majorana_assignment(const TernaryTree& t) {
  const LinearEncoding enc = encoder_matrix(t);
  MajoranaAssignment out;
  std::multiset<std::pair<BitVec, BitVec>> used;
  for (std::size_t m = 0; m < 2 * t.n(); ++m) {
    out.majoranas.push_back(encode_majorana(enc, m));
    used.emplace(out.majoranas.back().x(), out.majoranas.back().z());
  }
  bool found = false;
  for (const PauliString& p : path_pauli_strings(t)) {
    auto it = used.find({p.x(), p.z()});
    if (it != used.end()) {
      used.erase(it);
    } else if (!found) {
      out.omitted = p;
      found = true;
    } else {
      throw std::logic_error("Majorana images do not match the tree's path strings");
    }
  }
  if (!found || !used.empty()) throw std::logic_error("Majorana images do not match the tree's path strings");
  return out;
}

/// Applies a qubit relabelling q -> perm[q] to a Pauli string.
inline PauliString permute_qubits(const PauliString& p, const std::vector<std::size_t>& perm) {
  const std::size_t n = p.num_qubits();
  if (perm.size() != n) throw DimensionError("permutation size mismatch");
  PauliString out(n);
  for (std::size_t q = 0; q < n; ++q) out.set(perm[q], p.at(q));
  out.set_phase(out.phase() + p.hermitian_phase());
  return out;
}

/// Canonically relabelled copy of t and the map perm[canonical] = original.
inline std::pair<TernaryTree, std::vector<std::size_t>> canonicalize(const TernaryTree& t) {
  validate_structure(t);
  TernaryTree c = t;
  const auto order = t.canonical_order();
  std::vector<std::size_t> perm(t.n());
  for (std::size_t i = 0; i < order.size(); ++i) {
    perm[i] = t.node(order[i]).qubit;
    c.set_label(order[i], i);
  }
  return {std::move(c), std::move(perm)};
}

/// Majorana assignment for an arbitrary labelling: built on the canonical
/// relabelling, then carried over by the qubit permutation.
inline MajoranaAssignment majorana_assignment_relabelled(const TernaryTree& t) {
  auto [canon, perm] = canonicalize(t);
  MajoranaAssignment a = majorana_assignment(canon);
  for (auto& p : a.majoranas) p = permute_qubits(p, perm);
  a.omitted = permute_qubits(a.omitted, perm);
  return a;
}

inline TernaryTree jw_tree(std::size_t n) {
  if (n == 0) throw TreeError("jw_tree: n must be at least 1");
  TernaryTree t;
  std::size_t prev = t.add_node(0);
  for (std::size_t q = 1; q < n; ++q) {
    const std::size_t v = t.add_node(q);
    t.attach(prev, kZ, v);
    prev = v;
  }
  return t;
}

inline TernaryTree parity_tree(std::size_t n) {
  if (n == 0) throw TreeError("parity_tree: n must be at least 1");
  TernaryTree t;
  std::size_t prev = t.add_node(n - 1);
  for (std::size_t q = n - 1; q-- > 0;) {
    const std::size_t v = t.add_node(q);
    t.attach(prev, kX, v);
    prev = v;
  }
  return t;
}

/// Power-of-two sizes only.
inline TernaryTree bk_tree(std::size_t n) {
  if (n == 0 || (n & (n - 1)) != 0) {
    throw TreeError("bk_tree: n must be a power of two, got " + std::to_string(n));
  }
  TernaryTree t;
  // Full subtree on 2^j - 1 nodes: X and Z children are full subtrees on 2^{j-1} - 1 nodes.
  std::function<std::optional<std::size_t>(std::size_t)> full = [&](std::size_t size) -> std::optional<std::size_t> {
    if (size == 0) return std::nullopt;
    const std::size_t v = t.add_node(0);
    const std::size_t half = (size - 1) / 2;
    if (auto c = full(half)) t.attach(v, kX, *c);
    if (auto c = full(half)) t.attach(v, kZ, *c);
    return v;
  };
  const std::size_t root = t.add_node(0);
  if (auto c = full(n - 1)) t.attach(root, kX, *c);
  t.label_canonically();
  return t;
}

/// Random shape: each new node fills a uniformly chosen empty child slot.
template <class Rng>
TernaryTree random_tree(std::size_t n, Rng& rng, bool canonical = true) {
  if (n == 0) throw TreeError("random_tree: n must be at least 1");
  TernaryTree t;
  t.add_node(0);
  std::vector<std::pair<std::size_t, Branch>> slots{{0, kX}, {0, kY}, {0, kZ}};
  for (std::size_t i = 1; i < n; ++i) {
    const std::size_t pick = std::uniform_int_distribution<std::size_t>(0, slots.size() - 1)(rng);
    const auto [parent, b] = slots[pick];
    slots.erase(slots.begin() + static_cast<std::ptrdiff_t>(pick));
    const std::size_t v = t.add_node(0);
    t.attach(parent, b, v);
    for (Branch c : {kX, kY, kZ}) slots.emplace_back(v, c);
  }
  t.label_canonically();
  if (!canonical) {
    std::vector<std::size_t> perm(n);
    for (std::size_t q = 0; q < n; ++q) perm[q] = q;
    std::shuffle(perm.begin(), perm.end(), rng);
    for (std::size_t v = 0; v < n; ++v) t.set_label(v, perm[t.node(v).qubit]);
  }
  return t;
}

/// Every tree shape on n nodes, canonically labelled.
inline std::vector<TernaryTree> all_trees(std::size_t n) {
  // Shapes as nested child-size triples, enumerated recursively.
  std::function<std::vector<TernaryTree>(std::size_t)> shapes = [&](std::size_t m) -> std::vector<TernaryTree> {
    std::vector<TernaryTree> out;
    if (m == 0) return out;
    for (std::size_t a = 0; a < m; ++a) {
      for (std::size_t b = 0; a + b < m; ++b) {
        const std::size_t c = m - 1 - a - b;
        auto xs = shapes(a);
        auto ys = shapes(b);
        auto zs = shapes(c);
        const std::size_t nx = a ? xs.size() : 1, ny = b ? ys.size() : 1, nz = c ? zs.size() : 1;
        for (std::size_t i = 0; i < nx; ++i) {
          for (std::size_t j = 0; j < ny; ++j) {
            for (std::size_t k = 0; k < nz; ++k) {
              TernaryTree t;
              const std::size_t root = t.add_node(0);
              auto graft = [&t](const TernaryTree& sub) {
                const std::size_t off = t.n();
                for (const auto& nd : sub.nodes()) t.add_node(nd.qubit);
                for (std::size_t v = 0; v < sub.n(); ++v) {
                  for (std::size_t br = 0; br < 3; ++br) {
                    if (sub.node(v).child[br]) t.attach(off + v, static_cast<Branch>(br), off + *sub.node(v).child[br]);
                  }
                }
                return off + *sub.root();
              };
              if (a) t.attach(root, kX, graft(xs[i]));
              if (b) t.attach(root, kY, graft(ys[j]));
              if (c) t.attach(root, kZ, graft(zs[k]));
              out.push_back(std::move(t));
            }
          }
        }
      }
    }
    return out;
  };
  auto out = shapes(n);
  for (auto& t : out) t.label_canonically();
  return out;
}

}  // namespace f2q
