// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

#include "qck/cuntz.hpp"
#include "qck/free_word.hpp"
#include "qck/matrix_over.hpp"
#include "qck/presentation.hpp"
#include "qck/unital_free_word.hpp"

namespace qck {

// A family of n^2 unitary n x n matrices, orthonormal with respect to the
// normalized trace inner product tr(w_x* w_y) = delta_xy.
struct UnitaryErrorBasis {
  int n = 0;
  std::vector<Eigen::MatrixXcd> matrices;  // w_x for x = 0..n^2-1
};

// The generalized Pauli basis w_{(j,k)} = X^j Z^k with X = diag(omega^i),
// Z the cyclic shift |i> -> |i+1> (mod n), omega = exp(2 pi i / n), and
// x = j*n + k.
UnitaryErrorBasis pauli_ueb(int n);

// One named residual per verified identity family.
struct NamedCheck {
  std::string name;
  double residual = 0.0;
};
struct NamedReport {
  std::vector<NamedCheck> checks;
  double max_residual() const;
  bool pass(double tol = kDefaultTolerance) const {
    return max_residual() <= tol;
  }
  void add(std::string name, double residual);
  void bump(const std::string& name, double residual);
};

// Checks unitarity, trace orthonormality, the depolarizing property
// sum_x w_x* a w_x = n Tr(a) 1 on a matrix-unit basis, and orthonormality
// of the maximally entangled vectors (w_x (x) 1) Omega.
NamedReport validate_ueb(const UnitaryErrorBasis& w);

// The matrices V^{rs}_x = (1/n) w_x* e_rs w_x implementing a unital
// *-representation of the linking algebra between the two canonical
// quantum symmetry groups attached to n.
struct LinkingRep {
  int n = 0;
  std::vector<Eigen::MatrixXcd> v;  // index (r*n + s)*n^2 + x
  const Eigen::MatrixXcd& at(int r, int s, int x) const {
    return v.at(static_cast<size_t>((r * n + s) * n * n + x));
  }
};
LinkingRep linking_rep(const UnitaryErrorBasis& w);

// The defining relations of the linking algebra evaluated on V:
// (A1a) sum_w V^{rw}_x V^{ws}_y = delta_xy V^{rs}_x,
// (A1b) V^{ji}_x V^{sr}_x = delta_is n^{-1} V^{jr}_x,
// (A2)  (V^{ij}_x)* = V^{ji}_x,
// (A3a) sum_i n V^{ii}_x = 1,
// (A3b) sum_z V^{ij}_z = delta_ij 1,
// (A4)  in both its trivial-graph and complete-graph forms.
NamedReport linking_relations_check(const LinkingRep& rep);

// The rectangular matrix u^x_{ij} = sqrt(n) (V^{ji}_x)^t over M_n, rows
// indexed by x, columns by (i,j) flat; residuals of u*u = 1 and uu* = 1
// computed on the n^3 x n^3 flattening U[(x,p),((ij),q)] = u^x_{ij}(p,q).
struct UMatrixResult {
  MatrixOver<Eigen::MatrixXcd> u;
  double left_residual = 0.0;   // ||u* u - 1||
  double right_residual = 0.0;  // ||u u* - 1||
};
// Requires a single-block space with uniform weights (the tracial matrix
// algebra); other spaces have no concrete finite-dimensional realization
// of the linking algebra here and are rejected.
UMatrixResult u_matrix(const QuantumSpace& s, const LinkingRep& rep);

// shat_y = sum_x s_x (x) u(x,y) for a rectangular n1 x n unitary u with
// numeric matrix entries; verifies shat_z* shat_y = delta_zy 1 (x) 1 and
// sum_y shat_y shat_y* = 1 (x) 1 inside M_k(O_{n1}).
struct CuntzSymResult {
  std::vector<MatrixOver<CuntzElement>> family;
  NamedReport report;
};
CuntzSymResult cuntz_sym_family(const MatrixOver<Eigen::MatrixXcd>& u,
                                double tol = kDefaultTolerance);

// Verifies, for the complete quantum graph on the tracial matrix algebra
// M_n, that beta(S_ij) = sum_x s_x (x) (V^{ji}_x)^t in M_n(O_{n^2})
// (i)  scales to a family of n^2 Cuntz isometries T_ij = sqrt(n) beta(S_ij),
// (ii) satisfies the quantum Cuntz-Krieger presentation, and
// (iii) makes e = n sum_ij beta(S_ij) beta(S_ij)* the identity, with
//       e b = b = b e for every image b. The coefficient n (= sum of the
//       weight-inverse times delta^2 normalizations) is also contrasted
//       against the n^2 variant, which does NOT give the unit.
struct MainTheoremReport {
  NamedReport cuntz;
  CheckReport presentation;
  NamedReport unit;
  double wrong_scale_residual = 0.0;  // || n^2 sum b b* - 1 ||, expected ~n-1
  bool pass(double tol = kDefaultTolerance) const {
    return cuntz.pass(tol) && presentation.pass(tol) && unit.pass(tol);
  }
};
MainTheoremReport main_theorem_check(int n);

enum class GraphKind { complete, trivial };

// The mutual embeddings between the rank-one side (n^2 points) and the
// matrix side (M_n), built from the Pauli linking representation.
//   complete: pi images in M_n(O_{n^2}) satisfy the Cuntz relations for
//     n^2 generators; sigma images satisfy the complete presentation on
//     (M_n, tr); both slice compositions recover the generators.
//   trivial: sigma images in M_n(*_{n^2} C(S^1)) satisfy the trivial
//     presentation on M_n exactly; pi images in the amplification model
//     are normal partial isometries (x x* x = x, x* x = x x*).
struct EmbeddingReport {
  GraphKind kind = GraphKind::complete;
  NamedReport pi_check;
  CheckReport sigma_presentation;
  NamedReport slice;  // complete only; empty for trivial
  bool pass(double tol = kDefaultTolerance) const {
    return pi_check.pass(tol) && sigma_presentation.pass(tol) &&
           slice.pass(tol);
  }
};
EmbeddingReport embeddings(int n, GraphKind kind);

// Orthonormal maximally entangled basis xi_{jk} = (X^j Z^k (x) 1) Omega
// and the unitary V with V(|j> (x) |k>) = omega^{-jk} xi_{jk}.
struct EntangledFrame {
  int n = 0;
  std::vector<Eigen::VectorXcd> xi;  // index j*n + k
  Eigen::MatrixXcd v;
};
EntangledFrame entangled_frame(int n);

// Generator identities of the crossed-product picture:
// (i)   covariance of sigma and pi under conjugation by 1 (x) X and
//       1 (x) Z against the gauge shifts of the generator indices,
// (ii)  the Weyl relation Z* X = omega X Z*,
// (iii) V*(1 (x) X)V = Z (x) 1 and V*(1 (x) Z*)V = X (x) Z,
// (iv)  the spectral decomposition (pi (x) id)sigma(S_jk) =
//       sum_{l,m} omega^{-l(j-k)} S_{j+m,k+m} (x) |xi_lm><xi_lm|
//       (complete case only).
struct CrossedReport {
  GraphKind kind = GraphKind::complete;
  NamedReport covariance;
  NamedReport weyl;
  NamedReport frame;
  NamedReport spectral;  // complete only; empty for trivial
  bool pass(double tol = kDefaultTolerance) const {
    return covariance.pass(tol) && weyl.pass(tol) && frame.pass(tol) &&
           spectral.pass(tol);
  }
};
CrossedReport crossed_product_identities(int n, GraphKind kind);

// The unital free product M_n *_1 (C(S^1) (+) C): factor 0 is the matrix
// block, factor 1 the circle summand.
FreeProductContextPtr amplification_context(int n);
// shat_ij = sum_k e_ki s e_jk, flat order i*n + j.
std::vector<UnitalFreeWordElement> amplified_generators(
    const FreeProductContextPtr& ctx, int n, const UnitalFreeWordElement& s);

// With s = (z, 0) in the circle factor:
// (i)   the shat_ij satisfy the trivial-graph presentation on M_n exactly,
// (ii)  every shat_ij commutes with every matrix unit e_kl,
// (iii) for Shat = (shat_ij), Shat* Shat is a projection and
//       Shat - (1 - Shat* Shat) is a unitary over the free product,
// (iv)  the two generator-level mutually inverse homomorphisms compose to
//       the identity: sum_ij e_ii s e_jj = s, and
//       sum_k F(e_ki) F(s) F(e_jk) = shat_ij (x) 1 with F(e_ij) = 1 (x) e_ij
//       and F(s) = sum_ij shat_ij (x) e_ij.
struct AmplificationReport {
  CheckReport presentation;
  NamedReport commutant;
  NamedReport ktheory;
  NamedReport roundtrip;
  bool pass(double tol = kDefaultTolerance) const {
    return presentation.pass(tol) && commutant.pass(tol) &&
           ktheory.pass(tol) && roundtrip.pass(tol);
  }
};
AmplificationReport amplification_model_check(int n);

}  // namespace qck
