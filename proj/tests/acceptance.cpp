// SPDX-License-Identifier: Apache-2.0
//
// End-to-end acceptance gate. Runs twelve independent checks covering every
// module and prints one PASS/FAIL line per check; exits nonzero if any fails.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "qck/free_word.hpp"
#include "qck/presentation.hpp"
#include "qck/qgraph.hpp"
#include "qck/qspace.hpp"
#include "qck/ueb.hpp"

using namespace qck;

namespace {

std::mt19937& rng() {
  static std::mt19937 gen(90125);
  return gen;
}

// Random space whose weights satisfy the delta-form conditions exactly.
QuantumSpace random_space(const std::vector<int>& dims) {
  std::uniform_real_distribution<double> dist(0.5, 2.0);
  std::vector<Eigen::VectorXd> raw;
  std::vector<double> inv_trace(dims.size(), 0.0);
  for (size_t a = 0; a < dims.size(); ++a) {
    Eigen::VectorXd v(dims[a]);
    for (int i = 0; i < dims[a]; ++i) v(i) = dist(rng());
    raw.push_back(v);
    for (int i = 0; i < dims[a]; ++i) inv_trace[a] += 1.0 / v(i);
  }
  double delta_sq = 0.0;
  for (size_t a = 0; a < dims.size(); ++a) {
    delta_sq += inv_trace[a] * raw[a].sum();
  }
  for (size_t a = 0; a < dims.size(); ++a) raw[a] *= inv_trace[a] / delta_sq;
  return QuantumSpace(std::vector<int>(dims), std::move(raw), 1e-9);
}

QuantumAdjacency random_operator(const QuantumSpace& s) {
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  Eigen::MatrixXcd c(s.dim(), s.dim());
  for (int i = 0; i < s.dim(); ++i) {
    for (int j = 0; j < s.dim(); ++j) c(i, j) = cplx(dist(rng()), dist(rng()));
  }
  return QuantumAdjacency(s, std::move(c));
}

ClassicalGraph random_simple_graph(int n, double p) {
  std::bernoulli_distribution coin(p);
  ClassicalGraph g;
  for (int v = 0; v < n; ++v) g.vertices.push_back("v" + std::to_string(v));
  for (int v = 0; v < n; ++v) {
    for (int w = 0; w < n; ++w) {
      if (coin(rng())) g.edges.emplace_back(v, w);
    }
  }
  return g;
}

struct Outcome {
  bool pass = false;
  double residual = 0.0;
  double seconds = 0.0;
  std::string note;
};

// ---------------------------------------------------------------------------
// 1. Delta-form spaces: construction, validation, rejection. Budget: 1 s.
Outcome check_delta_form() {
  Outcome out;
  out.pass = true;
  const std::vector<std::vector<int>> profiles = {
      {1}, {2}, {3}, {1, 1}, {2, 1}, {2, 2}, {3, 1, 2}, {1, 1, 1},
      {4},  {2, 3}};
  for (const auto& dims : profiles) {
    QuantumSpace tracial = QuantumSpace::tracial(dims);
    out.residual = std::max(
        out.residual, std::abs(tracial.delta_sq() - double(tracial.dim())));
    QuantumSpace s = random_space(dims);
    out.residual = std::max(out.residual, mm_star_residual(s));
  }
  if (out.residual >= 1e-10) out.pass = false;
  // Unequal inverse traces must be rejected.
  std::vector<Eigen::VectorXd> bad;
  bad.push_back(Eigen::VectorXd::Constant(2, 0.3));
  bad.push_back(Eigen::VectorXd::Constant(1, 0.4));
  bool rejected = false;
  try {
    QuantumSpace wrong({2, 1}, bad);
  } catch (const ValidationError&) {
    rejected = true;
  }
  if (!rejected || delta_form_residual({2, 1}, bad) < 1e-3) {
    out.pass = false;
    out.note = "bad weights were not rejected";
  }
  return out;
}

// 2. Closed-form comultiplication adjoint vs an independent linear solve.
Outcome check_mstar_oracle() {
  Outcome out;
  const std::vector<std::vector<int>> profiles = {
      {1}, {2}, {3}, {1, 1}, {2, 1}, {1, 1, 2}, {2, 2}, {3, 1}};
  for (const auto& dims : profiles) {
    QuantumSpace s = random_space(dims);
    int d = s.dim();
    auto norm_factor = [&](int f) {
      BlockIndex u = s.unflat(f);
      return std::sqrt(s.weight(u.a, u.i));
    };
    // Multiplication map in the orthonormal basis g_f = sqrt(q) f_f.
    Eigen::MatrixXcd m(d, d * d);
    for (int f = 0; f < d; ++f) {
      for (int g = 0; g < d; ++g) {
        AlgebraElement prod = multiply(
            s, AlgebraElement{Basis::adapted, {{s.unflat(f), 1.0}}},
            AlgebraElement{Basis::adapted, {{s.unflat(g), 1.0}}});
        Eigen::VectorXcd col = Eigen::VectorXcd::Zero(d);
        for (const auto& [idx, c] : prod.coeffs) {
          int h = s.flat(idx);
          col(h) = c * norm_factor(f) * norm_factor(g) / norm_factor(h);
        }
        m.col(f * d + g) = col;
      }
    }
    Eigen::MatrixXcd mstar_oracle = m.adjoint();
    for (int f = 0; f < d; ++f) {
      TwoLegTensor got =
          mstar(s, AlgebraElement{Basis::adapted, {{s.unflat(f), 1.0}}});
      Eigen::VectorXcd col = mstar_oracle.col(f) / norm_factor(f);
      for (int p = 0; p < d; ++p) {
        for (int q = 0; q < d; ++q) {
          cplx want = col(p * d + q) * norm_factor(p) * norm_factor(q);
          cplx val = 0.0;
          auto it = got.find({s.unflat(p), s.unflat(q)});
          if (it != got.end()) val = it->second;
          out.residual = std::max(out.residual, std::abs(want - val));
        }
      }
    }
  }
  out.pass = out.residual < 1e-10;
  return out;
}

// 3. The adjacency axiom across all graph constructions; commutative
//    operators pass iff their matrix is 0/1.
Outcome check_adjacency_axiom() {
  Outcome out;
  out.pass = true;
  QuantumSpace m2 = QuantumSpace::tracial({2});
  QuantumSpace c2 = QuantumSpace::tracial({1, 1});
  QuantumSpace weighted({2}, {Eigen::Vector2d(1.0 / 3.0, 2.0 / 3.0)});
  std::vector<QuantumGraph> graphs;
  graphs.push_back(complete_graph(m2));
  graphs.push_back(trivial_graph(QuantumSpace::tracial({2, 1})));
  graphs.push_back(diagonal_graph(
      weighted, {{{0, 0, 0}, weighted.weight(0, 0) * weighted.delta_sq()}}));
  graphs.push_back(direct_sum(complete_graph(m2), trivial_graph(c2)));
  graphs.push_back(tensor(complete_graph(c2), trivial_graph(m2)));
  graphs.push_back(amplify(from_classical(random_simple_graph(2, 0.6)), 2));
  for (const auto& g : graphs) {
    AdjacencyCheck r = check_quantum_adjacency(g);
    out.residual = std::max(
        out.residual, std::max(r.coefficient_residual, r.operator_residual));
  }
  if (out.residual >= 1e-9) out.pass = false;
  // Commutative operators: axiom iff all entries are 0 or 1.
  QuantumSpace c3 = QuantumSpace::tracial({1, 1, 1});
  std::bernoulli_distribution coin(0.5);
  std::uniform_real_distribution<double> dist(0.1, 2.0);
  for (int rep = 0; rep < 50; ++rep) {
    Eigen::MatrixXcd c = Eigen::MatrixXcd::Zero(3, 3);
    bool zero_one = true;
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) {
        if (rep % 2 == 0) {
          c(i, j) = coin(rng()) ? 1.0 : 0.0;
        } else {
          double v = dist(rng());
          c(i, j) = v;
          if (std::abs(v) > 1e-9 && std::abs(v - 1.0) > 1e-9) zero_one = false;
        }
      }
    }
    bool pass = check_quantum_adjacency({c3, QuantumAdjacency(c3, c)})
                    .pass(1e-9);
    if (pass != zero_one) {
      out.pass = false;
      out.note = "0/1 characterization failed on a random draw";
    }
  }
  return out;
}

// 4. Choi-Jamiolkowski transport: round trip and the idempotent criterion.
Outcome check_choi_jamiolkowski() {
  Outcome out;
  out.pass = true;
  for (auto dims : {std::vector<int>{2}, {1, 1, 1}}) {
    QuantumSpace s = QuantumSpace::tracial(dims);
    for (int rep = 0; rep < 20; ++rep) {
      QuantumAdjacency a = random_operator(s);
      TwoLegTensor p = choi_jamiolkowski(s, a);
      QuantumAdjacency back = cj_inverse(s, p);
      out.residual = std::max(
          out.residual,
          (back.coeff() - a.coeff()).cwiseAbs().maxCoeff());
      double idem =
          two_leg_max_abs(two_leg_sub(two_leg_op_product(s, p, p), p));
      bool axiom = check_quantum_adjacency({s, a}).pass(1e-9);
      if (axiom != (idem < 1e-9)) {
        out.pass = false;
        out.note = "idempotency did not track the axiom";
      }
    }
  }
  if (out.residual >= 1e-9) out.pass = false;
  return out;
}

// 5. Scaled Cuntz generators satisfy the complete-graph presentation on
//    four spaces. Budget: 5 s.
Outcome check_cuntz_assignment() {
  Outcome out;
  std::vector<QuantumSpace> spaces = {
      QuantumSpace::tracial({1, 1}),
      QuantumSpace::tracial({2}),
      QuantumSpace({2}, {Eigen::Vector2d(1.0 / 3.0, 2.0 / 3.0)}),
      QuantumSpace::tracial({1, 2}),
  };
  for (const auto& s : spaces) {
    Presentation p = qck_presentation(complete_graph(s));
    CheckReport report = check_assignment(p, qcc_homo_assignment(s));
    out.residual = std::max(out.residual, report.max_residual());
  }
  out.pass = out.residual < 1e-12;
  return out;
}

// 6. Generalized Pauli families are unitary error bases for n = 2..5.
Outcome check_pauli_bases() {
  Outcome out;
  for (int n = 2; n <= 5; ++n) {
    out.residual = std::max(out.residual,
                            validate_ueb(pauli_ueb(n)).max_residual());
  }
  out.pass = out.residual < 1e-12;
  return out;
}

// 7. The linking matrices satisfy all relation families for n = 2, 3.
Outcome check_linking_relations() {
  Outcome out;
  for (int n = 2; n <= 3; ++n) {
    LinkingRep rep = linking_rep(pauli_ueb(n));
    out.residual = std::max(out.residual,
                            linking_relations_check(rep).max_residual());
  }
  out.pass = out.residual < 1e-12;
  return out;
}

// 8. Matrix-side generators built from the linking matrices realize the
//    complete-graph algebra, with the unit recovered at the right scale.
//    Budget: 30 s at n = 3.
Outcome check_matrix_side_model() {
  Outcome out;
  out.pass = true;
  for (int n = 2; n <= 3; ++n) {
    MainTheoremReport r = main_theorem_check(n);
    out.residual = std::max({out.residual, r.cuntz.max_residual(),
                             r.presentation.max_residual(),
                             r.unit.max_residual()});
    if (std::abs(r.wrong_scale_residual - double(n - 1)) > 1e-9) {
      out.pass = false;
      out.note = "wrong-scale witness off target";
    }
  }
  if (out.residual >= 1e-12) out.pass = false;
  return out;
}

// 9. Mutual embeddings and crossed-product identities, complete and
//    trivial cases.
Outcome check_embeddings_crossed() {
  Outcome out;
  for (int n = 2; n <= 3; ++n) {
    EmbeddingReport e = embeddings(n, GraphKind::complete);
    out.residual = std::max({out.residual, e.pi_check.max_residual(),
                             e.sigma_presentation.max_residual(),
                             e.slice.max_residual()});
    CrossedReport c = crossed_product_identities(n, GraphKind::complete);
    out.residual = std::max({out.residual, c.covariance.max_residual(),
                             c.weyl.max_residual(), c.frame.max_residual(),
                             c.spectral.max_residual()});
  }
  EmbeddingReport et = embeddings(2, GraphKind::trivial);
  out.residual = std::max({out.residual, et.pi_check.max_residual(),
                           et.sigma_presentation.max_residual()});
  CrossedReport ct = crossed_product_identities(2, GraphKind::trivial);
  out.residual = std::max({out.residual, ct.covariance.max_residual(),
                           ct.weyl.max_residual(), ct.frame.max_residual()});
  out.pass = out.residual < 1e-10;
  return out;
}

// 10. Amplified loop generators model the matrix-trivial algebra exactly.
Outcome check_amplification() {
  Outcome out;
  AmplificationReport r = amplification_model_check(2);
  out.residual = std::max({r.presentation.max_residual(),
                           r.commutant.max_residual(),
                           r.ktheory.max_residual(),
                           r.roundtrip.max_residual()});
  out.pass = out.residual == 0.0;
  return out;
}

// 11. Classical graphs: formal presentation consistency and the rotation
//     homotopy on a concrete path family.
Outcome check_classical() {
  Outcome out;
  out.pass = true;
  ClassicalGraph k2{{"v", "w"}, {{0, 1}, {1, 0}}};
  ClassicalGraph loop{{"v"}, {{0, 0}}};
  if (!classical_consistency_check(k2).match ||
      !classical_consistency_check(loop).match) {
    out.pass = false;
    out.note = "presentation mismatch on a small graph";
  }
  for (int rep = 0; rep < 5; ++rep) {
    ClassicalGraph e4 = random_simple_graph(4, 0.5);
    if (!classical_consistency_check(e4).match) {
      out.pass = false;
      out.note = "presentation mismatch on a random 4-vertex graph";
    }
  }
  ClassicalGraph acyclic{{"a", "b", "c"}, {{0, 1}, {0, 2}, {1, 2}}};
  PathFamily f = ck_family_on_paths(acyclic);
  for (double t : {0.0, 0.25, 0.5, 1.0}) {
    HomotopyReport h = rotation_homotopy_check(acyclic, f.images, t);
    out.residual = std::max({out.residual, h.input.max_residual(),
                             h.phi.max_residual(), h.mu.max_residual()});
  }
  if (out.residual >= 1e-12) out.pass = false;
  return out;
}

// 12. Degenerate diagonal patterns: forced-zero generators are detected and
//     the one-dimensional character satisfies the presentation.
Outcome check_degeneracy() {
  Outcome out;
  out.pass = true;
  QuantumSpace s = QuantumSpace::tracial({2});
  std::map<BlockIndex, cplx> x{{{0, 0, 0}, 2.0}};
  Presentation p = qck_presentation(diagonal_graph(s, x));
  DegeneracyScan scan = degeneracy_scan(p);
  std::vector<int> want = {s.flat(0, 0, 1), s.flat(0, 1, 1)};
  if (scan.vanishing_generators != want) {
    out.pass = false;
    out.note = "forced-zero generators not detected";
  }
  std::vector<cplx> eps = {1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0)};
  std::vector<cplx> images = diagonal_character(s, x, eps);
  out.residual = check_assignment(p, images).max_residual();
  for (int g : scan.vanishing_generators) {
    if (std::abs(images[size_t(g)]) != 0.0) {
      out.pass = false;
      out.note = "character nonzero on a forced-zero generator";
    }
  }
  if (out.residual >= 1e-12) out.pass = false;
  return out;
}

struct Criterion {
  const char* label;
  Outcome (*run)();
  double budget_seconds;  // 0 = no explicit budget
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {"delta-form spaces: construction, validation, rejection",
       check_delta_form, 1.0},
      {"comultiplication adjoint matches an independent linear solve",
       check_mstar_oracle, 0.0},
      {"adjacency axiom across all constructions; 0/1 characterization",
       check_adjacency_axiom, 0.0},
      {"Choi-Jamiolkowski round trip and idempotent criterion",
       check_choi_jamiolkowski, 0.0},
      {"scaled Cuntz generators satisfy the complete presentation",
       check_cuntz_assignment, 5.0},
      {"generalized Pauli families are unitary error bases (n = 2..5)",
       check_pauli_bases, 0.0},
      {"linking matrices satisfy all relation families (n = 2, 3)",
       check_linking_relations, 0.0},
      {"matrix-side generators realize the complete-graph algebra",
       check_matrix_side_model, 30.0},
      {"mutual embeddings and crossed-product identities",
       check_embeddings_crossed, 0.0},
      {"amplified loop generators model the matrix-trivial algebra",
       check_amplification, 0.0},
      {"classical consistency and rotation homotopy", check_classical, 0.0},
      {"degeneracy detection and the diagonal character", check_degeneracy,
       0.0},
  };
  int failures = 0;
  for (size_t k = 0; k < criteria.size(); ++k) {
    auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = criteria[k].run();
    } catch (const std::exception& e) {
      out.pass = false;
      out.note = std::string("exception: ") + e.what();
    }
    out.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    if (criteria[k].budget_seconds > 0.0 &&
        out.seconds > criteria[k].budget_seconds) {
      out.pass = false;
      out.note = "over time budget";
    }
    if (!out.pass) ++failures;
    std::printf("[%2zu/12] %s  %-62s residual %.2e  %.3f s%s%s\n", k + 1,
                out.pass ? "PASS" : "FAIL", criteria[k].label, out.residual,
                out.seconds, out.note.empty() ? "" : "  -- ",
                out.note.c_str());
  }
  if (failures > 0) {
    std::printf("%d of 12 checks failed\n", failures);
    return 1;
  }
  std::printf("all 12 checks passed\n");
  return 0;
}
