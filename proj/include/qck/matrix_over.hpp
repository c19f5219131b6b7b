// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "qck/backend.hpp"

namespace qck {

// A k x k matrix with entries in an arbitrary backend element type E,
// i.e. an element of M_k(A) for the algebra A the backend models.
template <typename E>
class MatrixOver {
 public:
  MatrixOver(int rows, int cols, const E& proto)
      : rows_(rows), cols_(cols), data_(rows * cols, zero_like(proto)) {
    if (rows < 1 || cols < 1) throw ValidationError("empty matrix");
  }

  static MatrixOver identity(int k, const E& proto) {
    MatrixOver m(k, k, proto);
    for (int i = 0; i < k; ++i) m(i, i) = unit_element(proto);
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  E& operator()(int i, int j) { return data_[i * cols_ + j]; }
  const E& operator()(int i, int j) const { return data_[i * cols_ + j]; }

  MatrixOver& operator+=(const MatrixOver& other) {
    check_shape(other.rows_, other.cols_);
    for (size_t i = 0; i < data_.size(); ++i) {
      data_[i] = data_[i] + other.data_[i];
    }
    return *this;
  }
  friend MatrixOver operator+(MatrixOver a, const MatrixOver& b) {
    a += b;
    return a;
  }
  friend MatrixOver operator-(const MatrixOver& a, const MatrixOver& b) {
    return a + (cplx(-1.0) * b);
  }
  friend MatrixOver operator*(cplx c, const MatrixOver& a) {
    MatrixOver out = a;
    for (auto& e : out.data_) e = c * e;
    return out;
  }
  friend MatrixOver operator*(const MatrixOver& a, const MatrixOver& b) {
    if (a.cols_ != b.rows_) throw ValidationError("matrix shape mismatch");
    MatrixOver out(a.rows_, b.cols_, a.data_[0]);
    for (int i = 0; i < a.rows_; ++i) {
      for (int j = 0; j < b.cols_; ++j) {
        E acc = zero_like(a.data_[0]);
        for (int k = 0; k < a.cols_; ++k) {
          acc = acc + a(i, k) * b(k, j);
        }
        out(i, j) = acc;
      }
    }
    return out;
  }

  friend MatrixOver adjoint(const MatrixOver& a) {
    MatrixOver out(a.cols_, a.rows_, a.data_[0]);
    for (int i = 0; i < a.rows_; ++i) {
      for (int j = 0; j < a.cols_; ++j) {
        out(j, i) = adjoint(a(i, j));
      }
    }
    return out;
  }

  friend double zero_norm(const MatrixOver& a) {
    double norm = 0.0;
    for (const auto& e : a.data_) norm = std::max(norm, zero_norm(e));
    return norm;
  }
  friend bool is_zero(const MatrixOver& a, double tol = kDefaultTolerance) {
    return zero_norm(a) <= tol;
  }
  friend MatrixOver unit_element(const MatrixOver& a) {
    if (a.rows_ != a.cols_) throw ValidationError("unit of non-square matrix");
    return MatrixOver::identity(a.rows_, a.data_[0]);
  }
  friend MatrixOver zero_like(const MatrixOver& a) {
    return MatrixOver(a.rows_, a.cols_, a.data_[0]);
  }

 private:
  void check_shape(int r, int c) const {
    if (rows_ != r || cols_ != c) {
      throw ValidationError("matrix shape mismatch");
    }
  }

  int rows_, cols_;
  std::vector<E> data_;
};

// Left and right multiplication by a scalar matrix, (x . m)_{ij} =
// sum_k x_{ik} m_{kj}; usable even when E carries no unit (so 1 (x) x
// cannot be formed inside MatrixOver itself).
template <typename E>
MatrixOver<E> operator*(const Eigen::MatrixXcd& x, const MatrixOver<E>& m) {
  if (x.cols() != m.rows()) throw ValidationError("matrix shape mismatch");
  MatrixOver<E> out(static_cast<int>(x.rows()), m.cols(), m(0, 0));
  for (int i = 0; i < out.rows(); ++i) {
    for (int j = 0; j < out.cols(); ++j) {
      E acc = zero_like(m(0, 0));
      for (int k = 0; k < m.rows(); ++k) acc = acc + cplx(x(i, k)) * m(k, j);
      out(i, j) = std::move(acc);
    }
  }
  return out;
}

template <typename E>
MatrixOver<E> operator*(const MatrixOver<E>& m, const Eigen::MatrixXcd& x) {
  if (m.cols() != x.rows()) throw ValidationError("matrix shape mismatch");
  MatrixOver<E> out(m.rows(), static_cast<int>(x.cols()), m(0, 0));
  for (int i = 0; i < out.rows(); ++i) {
    for (int j = 0; j < out.cols(); ++j) {
      E acc = zero_like(m(0, 0));
      for (int k = 0; k < m.cols(); ++k) acc = acc + cplx(x(k, j)) * m(i, k);
      out(i, j) = std::move(acc);
    }
  }
  return out;
}

// x (x) m for a backend element x and a numeric matrix m, as an element of
// M_k(A): (x (x) m)_{ij} = m_{ij} x.
template <typename E>
MatrixOver<E> kron_with_matrix(const E& x, const Eigen::MatrixXcd& m) {
  MatrixOver<E> out(static_cast<int>(m.rows()), static_cast<int>(m.cols()), x);
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) {
      out(i, j) = cplx(m(i, j)) * x;
    }
  }
  return out;
}

// a (x) m for a matrix over A and a numeric matrix, Kronecker block order
// (a-index major).
template <typename E>
MatrixOver<E> kron_with_matrix(const MatrixOver<E>& a,
                               const Eigen::MatrixXcd& m) {
  int mr = static_cast<int>(m.rows()), mc = static_cast<int>(m.cols());
  MatrixOver<E> out(a.rows() * mr, a.cols() * mc, a(0, 0));
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) {
      for (int p = 0; p < mr; ++p) {
        for (int q = 0; q < mc; ++q) {
          out(i * mr + p, j * mc + q) = cplx(m(p, q)) * a(i, j);
        }
      }
    }
  }
  return out;
}

}  // namespace qck
