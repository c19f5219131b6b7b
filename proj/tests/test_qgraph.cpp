// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qck/qgraph.hpp"

using namespace qck;

namespace {

std::mt19937& rng() {
  static std::mt19937 gen(424243);
  return gen;
}

ClassicalGraph random_graph(int n, double p, bool allow_loops = true) {
  std::bernoulli_distribution coin(p);
  ClassicalGraph g;
  for (int v = 0; v < n; ++v) g.vertices.push_back("v" + std::to_string(v));
  for (int v = 0; v < n; ++v) {
    for (int w = 0; w < n; ++w) {
      if (!allow_loops && v == w) continue;
      if (coin(rng())) g.edges.emplace_back(v, w);
    }
  }
  return g;
}

QuantumAdjacency random_operator(const QuantumSpace& s) {
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  Eigen::MatrixXcd c(s.dim(), s.dim());
  for (int i = 0; i < s.dim(); ++i) {
    for (int j = 0; j < s.dim(); ++j) c(i, j) = cplx(dist(rng()), dist(rng()));
  }
  return QuantumAdjacency(s, std::move(c));
}

}  // namespace

TEST_CASE("line graph of a single loop is a single loop") {
  ClassicalGraph g{{"v"}, {{0, 0}}};
  ClassicalGraph l = line_graph(g);
  CHECK(l.vertices.size() == 1);
  REQUIRE(l.edges.size() == 1);
  CHECK(l.edges[0] == std::pair<int, int>{0, 0});
}

TEST_CASE("edge matrix of the two-cycle") {
  ClassicalGraph g{{"v", "w"}, {{0, 1}, {1, 0}}};
  Eigen::MatrixXi a = edge_matrix(g);
  CHECK(a(0, 0) == 0);
  CHECK(a(0, 1) == 1);
  CHECK(a(1, 0) == 1);
  CHECK(a(1, 1) == 0);
}

TEST_CASE("edge matrix equals adjacency matrix of the line graph") {
  for (int rep = 0; rep < 10; ++rep) {
    ClassicalGraph g = random_graph(4, 0.4);
    CHECK(edge_matrix(g) == adjacency_matrix(line_graph(g)));
  }
}

TEST_CASE("trivial adjacency passes the axiom on any space") {
  for (auto dims : {std::vector<int>{2}, {1, 1}, {2, 1}, {3}}) {
    QuantumGraph g = trivial_graph(QuantumSpace::tracial(dims));
    AdjacencyCheck r = check_quantum_adjacency(g);
    CHECK(r.coefficient_residual < 1e-12);
    CHECK(r.operator_residual < 1e-12);
  }
}

TEST_CASE("commutative adjacency with an entry 2 fails the axiom") {
  QuantumSpace s = QuantumSpace::tracial({1, 1});
  Eigen::MatrixXcd c = Eigen::MatrixXcd::Zero(2, 2);
  c(0, 0) = 2.0;
  AdjacencyCheck r = check_quantum_adjacency({s, QuantumAdjacency(s, c)});
  CHECK(r.coefficient_residual > 1e-3);
}

TEST_CASE("complete adjacency on tracial M_2 has entries 2 and passes") {
  QuantumSpace s = QuantumSpace::tracial({2});
  QuantumGraph g = complete_graph(s);
  for (int i = 0; i < 2; ++i) {
    for (int k = 0; k < 2; ++k) {
      CHECK(std::abs(g.adjacency.entry(s, {0, k, k}, {0, i, i}) - cplx(2.0)) <
            1e-12);
    }
  }
  // Off-diagonal source or target units map to zero.
  CHECK(std::abs(g.adjacency.entry(s, {0, 0, 1}, {0, 0, 0})) < 1e-15);
  CHECK(std::abs(g.adjacency.entry(s, {0, 0, 0}, {0, 0, 1})) < 1e-15);
  AdjacencyCheck r = check_quantum_adjacency(g);
  CHECK(r.coefficient_residual < 1e-10);
  CHECK(r.operator_residual < 1e-10);
}

TEST_CASE("all constructions pass the axiom") {
  QuantumSpace m2 = QuantumSpace::tracial({2});
  QuantumSpace c2 = QuantumSpace::tracial({1, 1});
  std::vector<QuantumGraph> graphs;
  graphs.push_back(complete_graph(m2));
  graphs.push_back(trivial_graph(QuantumSpace::tracial({2, 1})));
  graphs.push_back(from_classical(random_graph(3, 0.5)));
  graphs.push_back(direct_sum(complete_graph(m2), trivial_graph(c2)));
  graphs.push_back(tensor(complete_graph(c2), trivial_graph(m2)));
  graphs.push_back(amplify(from_classical(random_graph(2, 0.6)), 2));
  // Valid diagonal graph from a 0/1 pattern on a commutative space.
  std::map<BlockIndex, cplx> x{{{0, 0, 0}, 1.0}, {{1, 0, 0}, 1.0}};
  graphs.push_back(diagonal_graph(c2, x));
  for (const auto& g : graphs) {
    AdjacencyCheck r = check_quantum_adjacency(g);
    CHECK(r.coefficient_residual < 1e-9);
    CHECK(r.operator_residual < 1e-9);
  }
}

TEST_CASE("coefficient and operator residuals agree on random operators") {
  for (auto dims : {std::vector<int>{2}, {1, 1, 1}, {2, 1}}) {
    QuantumSpace s = QuantumSpace::tracial(dims);
    for (int rep = 0; rep < 5; ++rep) {
      AdjacencyCheck r = check_quantum_adjacency({s, random_operator(s)});
      CHECK(std::abs(r.coefficient_residual - r.operator_residual) < 1e-9);
    }
  }
}

TEST_CASE("from_classical of K_2 is the all-ones matrix") {
  ClassicalGraph k2{{"a", "b"}, {{0, 0}, {0, 1}, {1, 0}, {1, 1}}};
  QuantumGraph g = from_classical(k2);
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      CHECK(std::abs(g.adjacency.coeff()(j, i) - cplx(1.0)) < 1e-15);
    }
  }
}

TEST_CASE("to_classical round-trips the vertex adjacency matrix") {
  for (int rep = 0; rep < 10; ++rep) {
    ClassicalGraph e = random_graph(4, 0.5);
    CHECK(to_classical(from_classical(e)) == adjacency_matrix(e));
  }
}

TEST_CASE("commutative graphs pass the axiom iff entries are 0/1") {
  QuantumSpace s = QuantumSpace::tracial({1, 1, 1});
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
    AdjacencyCheck r = check_quantum_adjacency({s, QuantumAdjacency(s, c)});
    CHECK(r.pass(1e-9) == zero_one);
  }
}

TEST_CASE("schur product on commutative spaces is the entrywise product") {
  QuantumSpace s = QuantumSpace::tracial({1, 1});
  Eigen::MatrixXcd jmat = Eigen::MatrixXcd::Ones(2, 2);
  Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(2, 2);
  QuantumAdjacency j(s, jmat), i(s, id);
  CHECK((schur(s, j, j).coeff() - jmat).cwiseAbs().maxCoeff() < 1e-12);
  CHECK((schur(s, i, j).coeff() - id).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("axiom holds iff the operator is a Schur idempotent") {
  QuantumSpace s = QuantumSpace::tracial({2});
  QuantumGraph g = complete_graph(s);
  QuantumAdjacency sq = schur(s, g.adjacency, g.adjacency);
  CHECK((sq.coeff() - g.adjacency.coeff()).cwiseAbs().maxCoeff() < 1e-10);
  for (int rep = 0; rep < 5; ++rep) {
    QuantumAdjacency a = random_operator(s);
    QuantumAdjacency asq = schur(s, a, a);
    double gap = (asq.coeff() - a.coeff()).cwiseAbs().maxCoeff();
    bool pass = check_quantum_adjacency({s, a}).pass(1e-9);
    CHECK(pass == (gap < 1e-9));
  }
}

TEST_CASE("diagonal graph accepts the rank-one degenerate pattern") {
  // On (M_N, Q): x_11 = q_1 delta^2, all other x zero.
  QuantumSpace s({2}, {Eigen::Vector2d(1.0 / 3.0, 2.0 / 3.0)});
  std::map<BlockIndex, cplx> x{{{0, 0, 0}, s.weight(0, 0) * s.delta_sq()}};
  QuantumGraph g = diagonal_graph(s, x);
  CHECK(check_quantum_adjacency(g).pass(1e-9));
  // A wrong scaling is rejected.
  std::map<BlockIndex, cplx> bad{{{0, 0, 0}, 1.7}};
  CHECK_THROWS_AS(diagonal_graph(s, bad), ValidationError);
}

TEST_CASE("zero diagonal graph is valid") {
  QuantumSpace s = QuantumSpace::tracial({2, 1});
  QuantumGraph g = diagonal_graph(s, {});
  CHECK(check_quantum_adjacency(g).pass(1e-12));
}

TEST_CASE("direct sum adds the delta parameters") {
  QuantumGraph g1 = complete_graph(QuantumSpace::tracial({2}));
  QuantumGraph g2 = trivial_graph(QuantumSpace::tracial({1, 1}));
  QuantumGraph g = direct_sum(g1, g2);
  CHECK(g.space.delta_sq() ==
        doctest::Approx(g1.space.delta_sq() + g2.space.delta_sq()));
  CHECK(check_quantum_adjacency(g).pass(1e-9));
}

TEST_CASE("direct sum of two single loops is the two-loop classical graph") {
  ClassicalGraph loop{{"v"}, {{0, 0}}};
  QuantumGraph g = direct_sum(from_classical(loop), from_classical(loop));
  Eigen::MatrixXi b = to_classical(g);
  CHECK(b == Eigen::MatrixXi::Identity(2, 2));
}

TEST_CASE("tensor multiplies the delta parameters and preserves the axiom") {
  QuantumGraph g1 = complete_graph(QuantumSpace::tracial({2}));
  QuantumGraph g2 = trivial_graph(QuantumSpace::tracial({1, 2}));
  QuantumGraph g = tensor(g1, g2);
  CHECK(g.space.delta_sq() ==
        doctest::Approx(g1.space.delta_sq() * g2.space.delta_sq()));
  CHECK(check_quantum_adjacency(g).pass(1e-9));
}

TEST_CASE("tensor of trivial with itself is trivial") {
  QuantumGraph t = trivial_graph(QuantumSpace::tracial({2}));
  QuantumGraph g = tensor(t, t);
  CHECK((g.adjacency.coeff() -
         Eigen::MatrixXcd::Identity(g.space.dim(), g.space.dim()))
            .cwiseAbs()
            .maxCoeff() < 1e-14);
}

TEST_CASE("Choi-Jamiolkowski round trip") {
  for (auto dims : {std::vector<int>{2}, {1, 1, 1}}) {
    QuantumSpace s = QuantumSpace::tracial(dims);
    for (int rep = 0; rep < 5; ++rep) {
      QuantumAdjacency a = random_operator(s);
      QuantumAdjacency back = cj_inverse(s, choi_jamiolkowski(s, a));
      CHECK((back.coeff() - a.coeff()).cwiseAbs().maxCoeff() < 1e-9);
    }
  }
}

TEST_CASE("CJ element is idempotent iff the axiom holds") {
  for (auto dims : {std::vector<int>{2}, {1, 1, 1}}) {
    QuantumSpace s = QuantumSpace::tracial(dims);
    // The identity operator is a quantum adjacency; its CJ form squares to
    // itself.
    TwoLegTensor p = choi_jamiolkowski(s, trivial_graph(s).adjacency);
    CHECK(two_leg_max_abs(two_leg_sub(two_leg_op_product(s, p, p), p)) <
          1e-12);
    for (int rep = 0; rep < 20; ++rep) {
      QuantumAdjacency a = random_operator(s);
      TwoLegTensor q = choi_jamiolkowski(s, a);
      double idem =
          two_leg_max_abs(two_leg_sub(two_leg_op_product(s, q, q), q));
      bool pass = check_quantum_adjacency({s, a}).pass(1e-9);
      CHECK(pass == (idem < 1e-9));
    }
  }
}

TEST_CASE("CJ requires the tracial form") {
  QuantumSpace s({2}, {Eigen::Vector2d(1.0 / 3.0, 2.0 / 3.0)});
  CHECK_THROWS_AS(choi_jamiolkowski(s, trivial_graph(s).adjacency),
                  ValidationError);
}

TEST_CASE("subspace M_N itself yields the complete adjacency") {
  for (int n : {2, 3}) {
    std::vector<Eigen::MatrixXcd> basis;
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        Eigen::MatrixXcd e = Eigen::MatrixXcd::Zero(n, n);
        e(i, j) = 1.0;
        basis.push_back(e);
      }
    }
    QuantumAdjacency a = subspace_to_adjacency(n, basis);
    QuantumGraph complete = complete_graph(QuantumSpace::tracial({n}));
    CHECK((a.coeff() - complete.adjacency.coeff()).cwiseAbs().maxCoeff() <
          1e-9);
  }
}

TEST_CASE("subspace-based adjacency passes the axiom for random subspaces") {
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  int n = 2;
  for (int rep = 0; rep < 5; ++rep) {
    std::vector<Eigen::MatrixXcd> basis;
    for (int b = 0; b < 2; ++b) {
      Eigen::MatrixXcd m(n, n);
      for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) m(i, j) = cplx(dist(rng()), dist(rng()));
      }
      basis.push_back(m);
    }
    QuantumAdjacency a = subspace_to_adjacency(n, basis);
    QuantumSpace s = QuantumSpace::tracial({n});
    CHECK(check_quantum_adjacency({s, a}).pass(1e-8));
  }
}
