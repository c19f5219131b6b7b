// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qck/qspace.hpp"

namespace qck {

// A finite directed multigraph on labeled vertices.
struct ClassicalGraph {
  std::vector<std::string> vertices;
  // Edges as (source, range) pairs of vertex indices.
  std::vector<std::pair<int, int>> edges;

  int vertex_index(const std::string& label) const;
  bool is_simple() const;  // no two edges share (source, range)
  std::vector<int> sinks() const;    // vertices emitting no edge
  std::vector<int> sources() const;  // vertices receiving no edge
  bool is_acyclic() const;
};

// 0/1 edge matrix A_E: A_E(e,f) = 1 iff r(e) = s(f).
Eigen::MatrixXi edge_matrix(const ClassicalGraph& e);
// Integer vertex adjacency matrix B_E counting edges v -> w.
Eigen::MatrixXi adjacency_matrix(const ClassicalGraph& e);
// Line graph LE: vertices = edges of E, edges = composable pairs.
ClassicalGraph line_graph(const ClassicalGraph& e);

// A linear operator on B expressed in the adapted basis:
// A(f^{(a)}_{ij}) = Σ_{b,r,s} coeff(flat(b,r,s), flat(a,i,j)) f^{(b)}_{rs}.
class QuantumAdjacency {
 public:
  QuantumAdjacency(const QuantumSpace& s, Eigen::MatrixXcd coeff);
  static QuantumAdjacency zero(const QuantumSpace& s);

  const Eigen::MatrixXcd& coeff() const { return coeff_; }
  Eigen::MatrixXcd& coeff() { return coeff_; }
  cplx entry(const QuantumSpace& s, const BlockIndex& target,
             const BlockIndex& source) const;

  AlgebraElement apply(const QuantumSpace& s, const AlgebraElement& x) const;

 private:
  Eigen::MatrixXcd coeff_;
};

struct QuantumGraph {
  QuantumSpace space;
  QuantumAdjacency adjacency;
};

struct AdjacencyCheck {
  double coefficient_residual = 0.0;
  double operator_residual = 0.0;
  bool pass(double tol = kDefaultTolerance) const {
    return coefficient_residual <= tol && operator_residual <= tol;
  }
};

// Residuals of the quantum-adjacency axiom m(A⊗A)m* = δ²A, computed both
// through the coefficient identity and through dense operator application.
AdjacencyCheck check_quantum_adjacency(const QuantumGraph& g);

// Schur product δ^{-2} m(A⊗B)m* as an operator in the adapted basis.
QuantumAdjacency schur(const QuantumSpace& s, const QuantumAdjacency& a,
                       const QuantumAdjacency& b);

QuantumGraph complete_graph(const QuantumSpace& s);
QuantumGraph trivial_graph(const QuantumSpace& s);
// A(f_ij) = x_ij f_ij; the x must satisfy
// Σ_s (Q_b^{-1})_ss x_ks x_sl = δ² x_kl blockwise.
QuantumGraph diagonal_graph(const QuantumSpace& s,
                            const std::map<BlockIndex, cplx>& x,
                            double tol = kDefaultTolerance);

QuantumGraph from_classical(const ClassicalGraph& e);
// Inverse of from_classical: requires all blocks one-dimensional and 0/1
// entries.
Eigen::MatrixXi to_classical(const QuantumGraph& g,
                             double tol = kDefaultTolerance);

QuantumGraph direct_sum(const QuantumGraph& g1, const QuantumGraph& g2);
QuantumGraph tensor(const QuantumGraph& g1, const QuantumGraph& g2);
QuantumGraph amplify(const QuantumGraph& g, int n);

// Choi-Jamiolkowski element P_A = (1/dim B)(1⊗A)m*(1); tracial form only.
TwoLegTensor choi_jamiolkowski(const QuantumSpace& s,
                               const QuantumAdjacency& a);
QuantumAdjacency cj_inverse(const QuantumSpace& s, const TwoLegTensor& p);
// Product in B ⊗ B^op: (x⊗y)(x'⊗y') = xx' ⊗ y'y.
TwoLegTensor two_leg_op_product(const QuantumSpace& s, const TwoLegTensor& p,
                                const TwoLegTensor& q);
double two_leg_max_abs(const TwoLegTensor& p);
TwoLegTensor two_leg_sub(const TwoLegTensor& p, const TwoLegTensor& q);

// Adjacency operator of the idempotent projecting M_N onto span(basis_s)
// along an explicit complement (default: trace-orthogonal complement).
QuantumAdjacency subspace_to_adjacency(
    int n, const std::vector<Eigen::MatrixXcd>& basis_s,
    const std::optional<std::vector<Eigen::MatrixXcd>>& basis_r = std::nullopt);

bool is_commutative(const QuantumSpace& s);

}  // namespace qck
