// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <Eigen/Dense>

#include "qck/types.hpp"

namespace qck {

// Customization points shared by every coefficient backend.  Generic code
// calls these unqualified from inside namespace qck, so both these scalar /
// dense-matrix overloads and the hidden friends of the word backends are
// found.

inline cplx adjoint(const cplx& z) { return std::conj(z); }
inline double zero_norm(const cplx& z) { return std::abs(z); }
inline bool is_zero(const cplx& z, double tol = kDefaultTolerance) {
  return std::abs(z) <= tol;
}
inline cplx unit_element(const cplx&) { return cplx(1.0); }
inline cplx zero_like(const cplx&) { return cplx(0.0); }

inline Eigen::MatrixXcd adjoint(const Eigen::MatrixXcd& m) {
  return m.adjoint();
}
inline double zero_norm(const Eigen::MatrixXcd& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}
inline bool is_zero(const Eigen::MatrixXcd& m,
                    double tol = kDefaultTolerance) {
  return zero_norm(m) <= tol;
}
inline Eigen::MatrixXcd unit_element(const Eigen::MatrixXcd& m) {
  return Eigen::MatrixXcd::Identity(m.rows(), m.cols());
}
inline Eigen::MatrixXcd zero_like(const Eigen::MatrixXcd& m) {
  return Eigen::MatrixXcd::Zero(m.rows(), m.cols());
}

}  // namespace qck
