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


// f2q command-line tool. Exit codes: 0 success, 1 verification failure,
// 2 usage or input error.

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "f2q/io.hpp"
#include "f2q/verify.hpp"

namespace {

using f2q::io::json;

constexpr int kOk = 0;
constexpr int kVerifyFailed = 1;
constexpr int kUsage = 2;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw InputError(path + ": " + e.what());
  }
}

/// A tree file with its labelling checked; throws InputError carrying the report.
f2q::TernaryTree read_tree(const std::string& path, bool canonical) {
  f2q::TernaryTree t;
  try {
    t = f2q::io::tree_from_json(read_json(path));
  } catch (const std::invalid_argument& e) {
    throw InputError("invalid tree: " + std::string(e.what()));
  }
  if (canonical) {
    const f2q::TreeReport r = f2q::validate(t);
    if (!r.ok) throw InputError("invalid tree: " + r.message);
  }
  return t;
}

f2q::LinearEncoding make_encoding(const std::string& kind, std::size_t n, const std::string& file) {
  if (!file.empty()) return f2q::io::encoding_from_json(read_json(file));
  if (n == 0) throw InputError("--n is required and must be at least 1");
  return f2q::io::named_encoding(kind, n);
}

std::string signed_label(const f2q::PauliString& p) {
  const std::string s = f2q::format_label(p);
  return s.front() == '-' || s.front() == 'i' ? s : "+" + s;
}

void print(const json& j) { std::cout << j.dump(2) << "\n"; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fermion-to-qubit encodings over GF(2)"};
  app.require_subcommand(1);
  app.fallthrough();
  std::uint64_t seed = 0;
  std::string format = "text";
  app.add_option("--seed", seed, "Seed for randomized suites")->capture_default_str();
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}))->capture_default_str();

  // encoding
  auto* enc_cmd = app.add_subcommand("encoding", "Print an encoder matrix");
  std::string enc_kind;
  std::size_t enc_n = 0;
  std::string enc_file;
  enc_cmd->add_option("--kind", enc_kind)->required()->check(CLI::IsMember({"jw", "parity", "bk", "tree"}));
  enc_cmd->add_option("--n", enc_n, "Number of modes");
  enc_cmd->add_option("--file", enc_file, "Tree JSON for --kind tree");

  // tree
  auto* tree_cmd = app.add_subcommand("tree", "Inspect a ternary tree");
  std::string tree_action, tree_file;
  tree_cmd->add_option("action", tree_action)->required()->check(CLI::IsMember({"paulis", "encoder", "majoranas"}));
  tree_cmd->add_option("file", tree_file, "Tree JSON")->required();

  // encode
  auto* term_cmd = app.add_subcommand("encode", "Encode one Hamiltonian term");
  std::string term_type, term_encoding = "jw", term_encoding_file;
  std::optional<std::size_t> ti, tj, tk, tl;
  std::size_t term_n = 0;
  double term_coeff = 1.0;
  term_cmd->add_option("--type", term_type)
      ->required()
      ->check(CLI::IsMember({"number", "exchange", "excitation", "numexc", "doubleexc"}));
  term_cmd->add_option("--i", ti);
  term_cmd->add_option("--j", tj);
  term_cmd->add_option("--k", tk);
  term_cmd->add_option("--l", tl);
  term_cmd->add_option("--encoding", term_encoding)->check(CLI::IsMember({"jw", "parity", "bk"}))->capture_default_str();
  term_cmd->add_option("--encoding-file", term_encoding_file, "Encoding JSON, overrides --encoding and --n");
  term_cmd->add_option("--n", term_n, "Number of modes");
  term_cmd->add_option("--coeff", term_coeff, "Real coefficient")->capture_default_str();

  // hydrogen
  auto* h2_cmd = app.add_subcommand("hydrogen", "Encoded 4-mode hydrogen Hamiltonian, or any HamiltonianSpec");
  std::string h2_encoding = "jw", h2_spec;
  h2_cmd->add_option("--encoding", h2_encoding)->check(CLI::IsMember({"jw", "parity", "bk"}))->capture_default_str();
  h2_cmd->add_option("--spec", h2_spec, "HamiltonianSpec JSON instead of the built-in table");

  // aqm
  auto* aqm_cmd = app.add_subcommand("aqm", "Local encodings on an L x L lattice");
  std::string aqm_kind, aqm_push;
  std::size_t aqm_L = 0;
  bool aqm_stab = false;
  aqm_cmd->add_option("kind", aqm_kind)->required()->check(CLI::IsMember({"etype", "square"}));
  aqm_cmd->add_option("--L", aqm_L, "Lattice side")->required();
  auto* stab_flag = aqm_cmd->add_flag("--stabilizers", aqm_stab, "Print the stabilizer report");
  aqm_cmd->add_option("--push", aqm_push, "Push a logical Pauli label and reduce its weight")->excludes(stab_flag);

  // verify
  auto* ver_cmd = app.add_subcommand("verify", "Run seeded verification suites");
  std::string suite = "all";
  ver_cmd->add_option("--suite", suite)->check(CLI::IsMember(f2q::verify::suite_names()))->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }
  const bool as_json = format == "json";

  try {
    if (*enc_cmd) {
      f2q::BitMatrix m;
      if (enc_kind == "tree") {
        if (enc_file.empty()) throw InputError("--kind tree requires --file");
        m = f2q::tree_matrix(read_tree(enc_file, true));
      } else {
        m = make_encoding(enc_kind, enc_n, "").matrix();
      }
      if (as_json) {
        print(f2q::io::encoding_to_json(
            enc_kind == "tree" ? f2q::LinearEncoding(m) : f2q::io::named_encoding(enc_kind, m.rows())));
      } else {
        std::cout << m.to_text();
      }
      return kOk;
    }

    if (*tree_cmd) {
      if (tree_action == "encoder") {
        const f2q::LinearEncoding e(f2q::tree_matrix(read_tree(tree_file, true)));
        if (as_json) {
          print(f2q::io::encoding_to_json(e));
        } else {
          std::cout << e.matrix().to_text();
        }
      } else if (tree_action == "paulis") {
        const auto paths = f2q::path_pauli_strings(read_tree(tree_file, false));
        if (as_json) {
          print(f2q::io::labels_to_json(paths));
        } else {
          for (const auto& p : paths) std::cout << f2q::format_label(p) << "\n";
        }
      } else {
        const auto a = f2q::majorana_assignment_relabelled(read_tree(tree_file, false));
        if (as_json) {
          print({{"majoranas", f2q::io::labels_to_json(a.majoranas)}, {"omitted", f2q::format_label(a.omitted)}});
        } else {
          for (std::size_t m = 0; m < a.majoranas.size(); ++m) std::cout << m << " " << signed_label(a.majoranas[m]) << "\n";
          std::cout << "omitted " << f2q::format_label(a.omitted) << "\n";
        }
      }
      return kOk;
    }

    if (*term_cmd) {
      const f2q::LinearEncoding enc = make_encoding(term_encoding, term_n, term_encoding_file);
      const std::size_t arity = term_type == "number"                                 ? 1
                                : term_type == "exchange" || term_type == "excitation" ? 2
                                : term_type == "numexc"                                ? 3
                                                                                       : 4;
      const std::optional<std::size_t> given[] = {ti, tj, tk, tl};
      for (std::size_t a = 0; a < 4; ++a) {
        const std::string flag = std::string("--") + "ijkl"[a];
        if (a < arity && !given[a]) throw InputError("--type " + term_type + " requires " + flag);
        if (a >= arity && given[a]) throw InputError("--type " + term_type + " does not take " + flag);
      }
      f2q::PauliSum s(enc.n());
      if (term_type == "number") s = f2q::number_term(enc, *ti, term_coeff);
      if (term_type == "exchange") s = f2q::exchange_term(enc, *ti, *tj, term_coeff);
      if (term_type == "excitation") s = f2q::excitation_term(enc, *ti, *tj, term_coeff);
      if (term_type == "numexc") s = f2q::number_excitation_term(enc, *ti, *tj, *tk, term_coeff);
      if (term_type == "doubleexc") s = f2q::double_excitation_term(enc, *ti, *tj, *tk, *tl, term_coeff);
      if (as_json) {
        print(f2q::io::pauli_sum_to_json(s));
      } else {
        std::cout << s.to_text();
      }
      return kOk;
    }

    if (*h2_cmd) {
      f2q::PauliSum h(1);
      if (h2_spec.empty()) {
        h = f2q::hydrogen_hamiltonian(f2q::io::named_encoding(h2_encoding, 4));
      } else {
        const f2q::HamiltonianSpec spec = f2q::io::hamiltonian_spec_from_json(read_json(h2_spec));
        h = f2q::assemble_hamiltonian(f2q::io::named_encoding(h2_encoding, spec.n), spec);
      }
      if (as_json) {
        print(f2q::io::pauli_sum_to_json(h));
      } else {
        std::cout << h.to_text();
      }
      return kOk;
    }

    if (*aqm_cmd) {
      const f2q::StabilizerEncoding e = aqm_kind == "etype" ? f2q::etype_aqm(aqm_L) : f2q::square_lattice_aqm(aqm_L);
      if (!aqm_push.empty()) {
        const f2q::PauliString p = f2q::parse_label(aqm_push, e.n_logical);
        const f2q::PauliString pushed = f2q::push_logical(e, p);
        const f2q::PauliString reduced = f2q::reduce_weight(e, pushed);
        if (as_json) {
          auto entry = [](const f2q::PauliString& q) { return json{{"label", f2q::format_label(q)}, {"weight", q.weight()}}; };
          print({{"input", entry(p)}, {"pushed", entry(pushed)}, {"reduced", entry(reduced)}});
        } else {
          std::cout << "input    weight " << p.weight() << "  " << f2q::format_label(p) << "\n"
                    << "pushed   weight " << pushed.weight() << "  " << f2q::format_label(pushed) << "\n"
                    << "reduced  weight " << reduced.weight() << "  " << f2q::format_label(reduced) << "\n";
        }
        return kOk;
      }
      if (as_json) {
        print(f2q::io::stabilizer_encoding_to_json(e));
        return kOk;
      }
      std::cout << "# stabilizers\n";
      for (const auto& s : e.stabilizers) std::cout << f2q::format_label(s) << "\n";
      std::cout << "# logical pairs\n";
      for (std::size_t i = 0; i < e.n_logical; ++i) {
        std::cout << i << " " << f2q::format_label(e.logical_x[i]) << " ; " << f2q::format_label(e.logical_z[i]) << "\n";
      }
      std::cout << "# geometry\nqubit,row,col,kind\n";
      for (std::size_t q = 0; q < e.geometry.size(); ++q) {
        const auto& g = e.geometry[q];
        std::cout << q << "," << g.row << "," << g.col << "," << f2q::io::kind_name(g.kind) << "\n";
      }
      return kOk;
    }

    if (*ver_cmd) {
      const f2q::verify::Report r = f2q::verify::run(suite, seed);
      if (as_json) {
        print(f2q::verify::to_json(r));
      } else {
        std::cout << f2q::verify::to_text(r);
      }
      return r.passed() ? kOk : kVerifyFailed;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
