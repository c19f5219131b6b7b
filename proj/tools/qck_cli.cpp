// SPDX-License-Identifier: Apache-2.0
#include <CLI11.hpp>
#include <cstdlib>
#include <iostream>
#include <string>

#include "qck/json_io.hpp"

namespace {

using nlohmann::json;

// Collects per-suite reports and renders them as text or JSON.
class Emitter {
 public:
  Emitter(bool as_json, double tol) : json_(as_json), tol_(tol) {}

  void add(const std::string& suite, const qck::CheckReport& r) {
    add_suite(suite, qck::report_to_json(r, tol_), r.max_residual());
  }
  void add(const std::string& suite, const qck::NamedReport& r) {
    add_suite(suite, qck::report_to_json(r, tol_), r.max_residual());
  }
  void note(const std::string& key, const json& value) {
    notes_[key] = value;
    if (!json_) std::cout << key << ": " << value.dump() << "\n";
  }

  // Prints the report and returns the exit code (0 pass, 1 fail).
  int finish() {
    if (json_) {
      json out{{"tolerance", tol_},
               {"suites", suites_},
               {"pass", all_pass_}};
      if (!notes_.empty()) out["notes"] = notes_;
      std::cout << out.dump(2) << "\n";
    } else {
      std::cout << (all_pass_ ? "PASS" : "FAIL") << " (tolerance " << tol_
                << ")\n";
    }
    return all_pass_ ? 0 : 1;
  }

 private:
  void add_suite(const std::string& suite, json checks, double max_residual) {
    bool pass = max_residual <= tol_;
    all_pass_ = all_pass_ && pass;
    suites_.push_back({{"suite", suite},
                       {"max_residual", max_residual},
                       {"pass", pass},
                       {"checks", std::move(checks)}});
    if (!json_) {
      std::cout << suite << ": " << (pass ? "pass" : "FAIL")
                << " (max residual " << max_residual << ")\n";
      if (!pass) {
        for (const auto& c : suites_.back()["checks"]) {
          if (!c["pass"].get<bool>()) {
            std::cout << "  relation " << c["relation"];
            if (c.contains("name")) std::cout << " [" << c["name"] << "]";
            std::cout << ": residual " << c["residual"] << "\n";
          }
        }
      }
    }
  }

  bool json_;
  double tol_;
  json suites_ = json::array();
  json notes_ = json::object();
  bool all_pass_ = true;
};

qck::UnitaryErrorBasis load_or_pauli(const std::string& input, int n) {
  if (!input.empty()) {
    return qck::ueb_from_json(qck::load_json_file(input));
  }
  return qck::pauli_ueb(n);
}

void run_embeddings(Emitter& em, int n, const std::string& kind) {
  if (kind == "complete" || kind == "both") {
    qck::EmbeddingReport r = qck::embeddings(n, qck::GraphKind::complete);
    em.add("embeddings complete: point-side isometries", r.pi_check);
    em.add("embeddings complete: matrix-side presentation",
           r.sigma_presentation);
    em.add("embeddings complete: slice compositions", r.slice);
  }
  if (kind == "trivial" || kind == "both") {
    qck::EmbeddingReport r = qck::embeddings(n, qck::GraphKind::trivial);
    em.add("embeddings trivial: matrix-side presentation",
           r.sigma_presentation);
    em.add("embeddings trivial: point-side partial isometries", r.pi_check);
  }
}

void run_crossed(Emitter& em, int n, const std::string& kind) {
  auto run_one = [&](qck::GraphKind k, const std::string& label) {
    qck::CrossedReport r = qck::crossed_product_identities(n, k);
    em.add("crossed " + label + ": covariance", r.covariance);
    em.add("crossed " + label + ": Weyl relation", r.weyl);
    em.add("crossed " + label + ": entangled frame", r.frame);
    if (!r.spectral.checks.empty()) {
      em.add("crossed " + label + ": spectral decomposition", r.spectral);
    }
  };
  if (kind == "complete" || kind == "both") {
    run_one(qck::GraphKind::complete, "complete");
  }
  if (kind == "trivial" || kind == "both") {
    run_one(qck::GraphKind::trivial, "trivial");
  }
}

void run_qcc_homo(Emitter& em, const qck::QuantumSpace& space,
                  const std::string& label) {
  qck::Presentation p =
      qck::qck_presentation(qck::complete_graph(space));
  qck::CheckReport r =
      qck::check_assignment(p, qck::qcc_homo_assignment(space));
  em.add("scaled Cuntz family on " + label, r);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Verification toolkit for quantum Cuntz-Krieger algebra identities"};
  app.require_subcommand(1);
  app.fallthrough();

  double tolerance = qck::kDefaultTolerance;
  if (const char* env = std::getenv("QCK_TOLERANCE")) {
    try {
      tolerance = std::stod(env);
    } catch (...) {
      std::cerr << "invalid QCK_TOLERANCE value\n";
      return 2;
    }
  }
  std::string report_format = "text";
  app.add_option("--tolerance", tolerance,
                 "Residual tolerance for pass/fail decisions");
  app.add_option("--report", report_format, "Report format")
      ->check(CLI::IsMember({"text", "json"}));

  // Inputs shared across subcommands.
  std::string input, space_file, classical_file, qck_file, kind = "both";
  int n = 2;
  bool free_relations = false;

  CLI::App* space_validate = app.add_subcommand(
      "space-validate", "Validate a quantum space JSON file");
  space_validate->add_option("input", input, "Space JSON")->required();

  CLI::App* qgraph_check = app.add_subcommand(
      "qgraph-check", "Check the quantum adjacency axiom for a graph JSON");
  qgraph_check->add_option("input", input, "Quantum graph JSON")->required();

  CLI::App* qgraph_build = app.add_subcommand(
      "qgraph-build", "Build a quantum graph and print its JSON");
  std::string build_kind = "complete";
  qgraph_build->add_option("--kind", build_kind, "Graph constructor")
      ->check(CLI::IsMember({"complete", "trivial", "classical"}));
  qgraph_build->add_option("--space", space_file, "Space JSON");
  qgraph_build->add_option("--classical", classical_file,
                           "Classical graph JSON");

  CLI::App* present = app.add_subcommand(
      "present", "Print the generators and relations of a graph algebra");
  present->add_option("--qck", qck_file, "Quantum graph JSON");
  present->add_option("--classical", classical_file, "Classical graph JSON");
  present->add_flag("--free", free_relations,
                    "Omit the orthogonality relations (classical input)");

  CLI::App* check = app.add_subcommand(
      "check", "Run structural checks on a quantum or classical graph");
  check->add_option("--qck", qck_file, "Quantum graph JSON");
  check->add_option("--classical", classical_file, "Classical graph JSON");

  CLI::App* verify_ueb = app.add_subcommand(
      "verify-ueb", "Validate a unitary error basis (default: Pauli)");
  verify_ueb->add_option("--n", n, "Matrix size");
  verify_ueb->add_option("--input", input, "Basis JSON");

  CLI::App* verify_linking = app.add_subcommand(
      "verify-linking", "Check the linking-algebra relations");
  verify_linking->add_option("--n", n, "Matrix size");
  verify_linking->add_option("--input", input, "Basis JSON");

  CLI::App* verify_qcc = app.add_subcommand(
      "verify-qcc-homo",
      "Check the scaled Cuntz family against the complete presentation");
  verify_qcc->add_option("--space", space_file,
                         "Space JSON (default: tracial M_2)");

  CLI::App* verify_main = app.add_subcommand(
      "verify-main-theorem",
      "Verify the matrix-side Cuntz identification at size n");
  verify_main->add_option("--n", n, "Matrix size");
  verify_main->add_option("--space", space_file,
                          "Space JSON (single tracial block required)");

  CLI::App* verify_embed = app.add_subcommand(
      "verify-embeddings", "Verify the mutual embeddings");
  verify_embed->add_option("--n", n, "Matrix size");
  verify_embed->add_option("--kind", kind, "Graph kind")
      ->check(CLI::IsMember({"complete", "trivial", "both"}));

  CLI::App* verify_crossed = app.add_subcommand(
      "verify-crossed", "Verify the crossed-product generator identities");
  verify_crossed->add_option("--n", n, "Matrix size");
  verify_crossed->add_option("--kind", kind, "Graph kind")
      ->check(CLI::IsMember({"complete", "trivial", "both"}));

  CLI::App* verify_amp = app.add_subcommand(
      "verify-amplification", "Verify the amplified single-loop model");
  verify_amp->add_option("--n", n, "Matrix size");

  CLI::App* verify_all =
      app.add_subcommand("verify-all", "Run every verification suite");
  verify_all->add_option("--n", n, "Matrix size");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // Usage problems (unknown verbs, bad flags) count as validation failures.
    return app.exit(e) == 0 ? 0 : 1;
  }
  Emitter em(report_format == "json", tolerance);

  try {
    if (space_validate->parsed()) {
      qck::QuantumSpace s =
          qck::space_from_json(qck::load_json_file(input));
      em.note("delta squared", s.delta_sq());
      qck::NamedReport r;
      r.add("multiplication coisometry scaling", qck::mm_star_residual(s));
      em.add("space validation", r);
      return em.finish();
    }
    if (qgraph_check->parsed()) {
      qck::QuantumGraph g = qck::qgraph_from_json(qck::load_json_file(input));
      qck::AdjacencyCheck c = qck::check_quantum_adjacency(g);
      qck::NamedReport r;
      r.add("coefficient identity", c.coefficient_residual);
      r.add("operator identity", c.operator_residual);
      em.add("quantum adjacency axiom", r);
      return em.finish();
    }
    if (qgraph_build->parsed()) {
      qck::QuantumGraph g = [&]() {
        if (build_kind == "classical") {
          if (classical_file.empty()) {
            throw qck::IOError("--kind classical needs --classical FILE");
          }
          return qck::from_classical(
              qck::classical_from_json(qck::load_json_file(classical_file)));
        }
        if (space_file.empty()) {
          throw qck::IOError("--kind " + build_kind + " needs --space FILE");
        }
        qck::QuantumSpace s =
            qck::space_from_json(qck::load_json_file(space_file));
        return build_kind == "complete" ? qck::complete_graph(s)
                                        : qck::trivial_graph(s);
      }();
      std::cout << qck::qgraph_to_json(g).dump(2) << "\n";
      return 0;
    }
    if (present->parsed()) {
      qck::Presentation p = [&]() {
        if (!qck_file.empty()) {
          return qck::qck_presentation(
              qck::qgraph_from_json(qck::load_json_file(qck_file)));
        }
        if (!classical_file.empty()) {
          return qck::graph_presentation(
              qck::classical_from_json(qck::load_json_file(classical_file)),
              free_relations);
        }
        throw qck::IOError("present needs --qck FILE or --classical FILE");
      }();
      std::cout << qck::presentation_to_json(p).dump(2) << "\n";
      return 0;
    }
    if (check->parsed()) {
      if (!qck_file.empty()) {
        qck::QuantumGraph g =
            qck::qgraph_from_json(qck::load_json_file(qck_file));
        qck::AdjacencyCheck c = qck::check_quantum_adjacency(g);
        qck::NamedReport r;
        r.add("coefficient identity", c.coefficient_residual);
        r.add("operator identity", c.operator_residual);
        em.add("quantum adjacency axiom", r);
        qck::Presentation p = qck::qck_presentation(g);
        qck::DegeneracyScan scan = qck::degeneracy_scan(p);
        em.note("forced-zero generators",
                json(scan.vanishing_generators.size()));
        em.note("generator components",
                json(qck::presentation_split_check(p).size()));
      } else if (!classical_file.empty()) {
        qck::ClassicalGraph e =
            qck::classical_from_json(qck::load_json_file(classical_file));
        qck::ConsistencyReport consistency =
            qck::classical_consistency_check(e);
        qck::NamedReport r;
        r.add("classical-quantum relation match",
              consistency.match ? consistency.max_coeff_diff : 1.0);
        em.add("classical consistency", r);
        if (e.is_acyclic()) {
          qck::PathFamily f = qck::ck_family_on_paths(e);
          em.add("path family relations",
                 qck::check_assignment(qck::graph_presentation(e, false),
                                       f.images));
          qck::HomotopyReport h = qck::rotation_homotopy_check(e, f.images, 0.5);
          em.add("rotation homotopy (t = 1/2)", h.mu);
        }
      } else {
        throw qck::IOError("check needs --qck FILE or --classical FILE");
      }
      return em.finish();
    }
    if (verify_ueb->parsed()) {
      em.add("unitary error basis", qck::validate_ueb(load_or_pauli(input, n)));
      return em.finish();
    }
    if (verify_linking->parsed()) {
      em.add("linking-algebra relations",
             qck::linking_relations_check(
                 qck::linking_rep(load_or_pauli(input, n))));
      return em.finish();
    }
    if (verify_qcc->parsed()) {
      qck::QuantumSpace s =
          space_file.empty()
              ? qck::QuantumSpace::tracial({2})
              : qck::space_from_json(qck::load_json_file(space_file));
      run_qcc_homo(em, s, space_file.empty() ? "tracial M_2" : space_file);
      return em.finish();
    }
    if (verify_main->parsed()) {
      if (!space_file.empty()) {
        qck::QuantumSpace s =
            qck::space_from_json(qck::load_json_file(space_file));
        if (s.num_blocks() != 1) {
          std::cerr << "not verifiable at desk scale: no concrete linking "
                       "representation for multi-block spaces\n";
          return 1;
        }
        n = s.block_dim(0);
      }
      qck::MainTheoremReport r = qck::main_theorem_check(n);
      em.add("Cuntz isometries", r.cuntz);
      em.add("complete-graph presentation", r.presentation);
      em.add("unit element", r.unit);
      return em.finish();
    }
    if (verify_embed->parsed()) {
      run_embeddings(em, n, kind);
      return em.finish();
    }
    if (verify_crossed->parsed()) {
      run_crossed(em, n, kind);
      return em.finish();
    }
    if (verify_amp->parsed()) {
      qck::AmplificationReport r = qck::amplification_model_check(n);
      em.add("trivial-graph presentation", r.presentation);
      em.add("relative commutant", r.commutant);
      em.add("K-theory generators", r.ktheory);
      em.add("round trips", r.roundtrip);
      return em.finish();
    }
    if (verify_all->parsed()) {
      em.add("unitary error basis", qck::validate_ueb(qck::pauli_ueb(n)));
      em.add("linking-algebra relations",
             qck::linking_relations_check(qck::linking_rep(qck::pauli_ueb(n))));
      run_qcc_homo(em, qck::QuantumSpace::tracial({n}),
                   "tracial matrix block");
      qck::MainTheoremReport mt = qck::main_theorem_check(n);
      em.add("main theorem: Cuntz isometries", mt.cuntz);
      em.add("main theorem: presentation", mt.presentation);
      em.add("main theorem: unit element", mt.unit);
      run_embeddings(em, n, "both");
      run_crossed(em, n, "both");
      qck::AmplificationReport amp = qck::amplification_model_check(n);
      em.add("amplification: presentation", amp.presentation);
      em.add("amplification: relative commutant", amp.commutant);
      em.add("amplification: K-theory generators", amp.ktheory);
      em.add("amplification: round trips", amp.roundtrip);
      return em.finish();
    }
  } catch (const qck::IOError& e) {
    std::cerr << "I/O error: " << e.what() << "\n";
    return 2;
  } catch (const qck::ValidationError& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
  return 3;  // unreachable: a subcommand is required
}
