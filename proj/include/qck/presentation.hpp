// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <map>
#include <string>
#include <vector>

#include "qck/backend.hpp"
#include "qck/cuntz.hpp"
#include "qck/qgraph.hpp"

namespace qck {

// A generator occurrence inside a word: generator index, optionally starred.
struct GenRef {
  int gen;
  bool star;
  auto operator<=>(const GenRef&) const = default;
};
using Monomial = std::vector<GenRef>;  // empty monomial = the unit
// Formal *-polynomial over the generators, as monomial -> coefficient.
using Polynomial = std::map<Monomial, cplx>;

void poly_add(Polynomial& p, const Monomial& m, cplx c);
// Max coefficient magnitude of p - q.
double poly_diff(const Polynomial& p, const Polynomial& q);

// A relation "poly == 0" of a finitely presented *-algebra.
struct Relation {
  std::string name;
  Polynomial poly;
};

struct Presentation {
  std::vector<std::string> generators;
  std::vector<Relation> relations;
};

struct CheckReport {
  std::vector<double> residuals;
  double max_residual() const {
    double m = 0.0;
    for (double r : residuals) m = std::max(m, r);
    return m;
  }
  bool pass(double tol = kDefaultTolerance) const {
    return max_residual() <= tol;
  }
};

// Evaluates a formal monomial in a backend; the empty monomial needs the
// backend to have a unit.
template <typename E>
E eval_monomial(const Monomial& m, const std::vector<E>& images) {
  if (m.empty()) return unit_element(images.at(0));
  auto factor = [&](const GenRef& g) -> E {
    const E& x = images.at(g.gen);
    return g.star ? adjoint(x) : x;
  };
  E out = factor(m[0]);
  for (size_t k = 1; k < m.size(); ++k) out = out * factor(m[k]);
  return out;
}

template <typename E>
E eval_polynomial(const Polynomial& p, const std::vector<E>& images) {
  E out = zero_like(images.at(0));
  for (const auto& [m, c] : p) out = out + c * eval_monomial(m, images);
  return out;
}

template <typename E>
CheckReport check_assignment(const Presentation& pres,
                             const std::vector<E>& images) {
  if (images.size() != pres.generators.size()) {
    throw ValidationError("assignment does not cover the generators");
  }
  CheckReport report;
  report.residuals.reserve(pres.relations.size());
  for (const auto& rel : pres.relations) {
    report.residuals.push_back(zero_norm(eval_polynomial(rel.poly, images)));
  }
  return report;
}

// Generators S^{(a)}_{ij} (flat order of the space) with one
// partial-isometry relation and one adjacency-coupled relation per (a,i,j).
Presentation qck_presentation(const QuantumGraph& g);

// Generators S_i, relations S_i S_i* S_i = S_i and
// S_i* S_i = sum_j A(i,j) S_j S_j* for a 0/1 matrix A.
Presentation free_ck_presentation(const Eigen::MatrixXi& a);
// Adds the range-orthogonality relations S_i* S_j = 0 for i != j.
Presentation ck_presentation(const Eigen::MatrixXi& a);
// Generators P_v (all vertices) then S_e (all edges); projection relations,
// s_e* s_e = p_{r(e)}, and p_v = sum_{s(e)=v} s_e s_e* for non-sinks.
// free == false adds p_v p_w = 0 (v != w) and s_e* s_f = 0 (e != f).
Presentation graph_presentation(const ClassicalGraph& e, bool free);

// S^{(a)}_{ij} -> (Q_a)_{ii}^{-1/2} delta^{-1} s_{(a,i,j)} into O_{dim B}.
std::vector<CuntzElement> qcc_homo_assignment(const QuantumSpace& s);

// lambda U S U* on a single-block N x N generator matrix.
template <typename E>
std::vector<E> gauge_transform(const std::vector<E>& images, int n, cplx lambda,
                               const Eigen::MatrixXcd& u,
                               double tol = kDefaultTolerance) {
  if (static_cast<int>(images.size()) != n * n) {
    throw ValidationError("gauge transform needs a single generator block");
  }
  if (u.rows() != n || u.cols() != n ||
      (u * u.adjoint() - Eigen::MatrixXcd::Identity(n, n))
              .cwiseAbs()
              .maxCoeff() > tol) {
    throw ValidationError("gauge transform needs a unitary");
  }
  if (std::abs(std::abs(lambda) - 1.0) > tol) {
    throw ValidationError("gauge scalar must have unit modulus");
  }
  std::vector<E> out;
  out.reserve(images.size());
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      E acc = zero_like(images[0]);
      for (int k = 0; k < n; ++k) {
        for (int l = 0; l < n; ++l) {
          acc = acc + (lambda * u(i, k) * std::conj(u(j, l))) * images[k * n + l];
        }
      }
      out.push_back(std::move(acc));
    }
  }
  return out;
}

// The one-dimensional representation of a diagonal quantum graph on M_N:
// S_{i1} -> eps_i, S_{ij} -> 0 for j > 1; requires sum |eps_i|^2 = 1 and
// x_{11} |eps_1|^2 = 1.
std::vector<cplx> diagonal_character(const QuantumSpace& s,
                                     const std::map<BlockIndex, cplx>& x,
                                     const std::vector<cplx>& eps,
                                     double tol = kDefaultTolerance);

// Flags relations of the form sum_k c_k g_k* g_k = 0 with positive real
// coefficients; every generator in such a relation must vanish.
struct DegeneracyScan {
  std::vector<int> relations;
  std::vector<int> vanishing_generators;
};
DegeneracyScan degeneracy_scan(const Presentation& p);

// A concrete Cuntz-Krieger E-family on the Hilbert space spanned by finite
// paths ending at sinks (sinks themselves count as length-0 paths).
struct PathFamily {
  int dim = 0;
  // Images ordered like graph_presentation generators: P_v then S_e.
  std::vector<Eigen::MatrixXcd> images;
  // Path k = (terminal sink, edge sequence); source is s(first edge).
  std::vector<std::pair<int, std::vector<int>>> paths;
};
PathFamily ck_family_on_paths(const ClassicalGraph& e);

// Checks the block-diagonal representation x -> diag over vertices and the
// rotation homotopy mu_t inside M_{E^0}(family algebra); both must satisfy
// the (non-free) graph relations for every t.
struct HomotopyReport {
  CheckReport input;
  CheckReport phi;
  CheckReport mu;
  bool pass(double tol = kDefaultTolerance) const {
    return input.pass(tol) && phi.pass(tol) && mu.pass(tol);
  }
};
HomotopyReport rotation_homotopy_check(const ClassicalGraph& e,
                                       const std::vector<Eigen::MatrixXcd>& images,
                                       double t, int base_vertex = -1);

// Connected components of the generator-relation incidence graph, each as a
// sorted list of generator indices.
std::vector<std::vector<int>> presentation_split_check(const Presentation& p);

// Verifies relation-by-relation that the presentation built from the quantum
// graph of a simple classical graph E coincides, as formal polynomials, with
// the free Cuntz-Krieger presentation of its vertex adjacency matrix.
struct ConsistencyReport {
  bool match = false;
  int first_mismatch = -1;
  double max_coeff_diff = 0.0;
};
ConsistencyReport classical_consistency_check(const ClassicalGraph& e,
                                              double tol = kDefaultTolerance);

}  // namespace qck
