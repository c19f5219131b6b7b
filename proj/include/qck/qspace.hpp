// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <Eigen/Dense>
#include <map>
#include <utility>
#include <vector>

#include "qck/types.hpp"

namespace qck {

// A finite quantum space: a multi-matrix algebra B = ⊕_a M_{N_a} together
// with a state ψ(x) = Σ_a Tr(Q_a x_a), where each Q_a is a positive diagonal
// matrix. The state is a δ-form when Tr(Q_a^{-1}) = δ² for every block and
// Σ_a Tr(Q_a) = 1.
class QuantumSpace {
 public:
  QuantumSpace(std::vector<int> block_dims,
               std::vector<Eigen::VectorXd> weights,
               double tol = kDefaultTolerance);

  // The space (B, ψ) with ψ proportional to the trace on each block.
  static QuantumSpace tracial(std::vector<int> block_dims);

  int num_blocks() const { return static_cast<int>(dims_.size()); }
  int block_dim(int a) const { return dims_.at(a); }
  const std::vector<int>& block_dims() const { return dims_; }
  // Vector-space dimension of B: Σ_a N_a².
  int dim() const { return dim_; }
  double delta_sq() const { return delta_sq_; }

  double weight(int a, int i) const { return weights_.at(a)(i); }
  const Eigen::VectorXd& weights(int a) const { return weights_.at(a); }

  // Flat index of the matrix unit (a,i,j) in the basis ordered block-major,
  // rows-major within a block.
  int flat(const BlockIndex& idx) const;
  int flat(int a, int i, int j) const { return flat(BlockIndex{a, i, j}); }
  BlockIndex unflat(int f) const;

  bool operator==(const QuantumSpace& other) const;

 private:
  std::vector<int> dims_;
  std::vector<Eigen::VectorXd> weights_;
  std::vector<int> offsets_;
  int dim_ = 0;
  double delta_sq_ = 0.0;
};

// Residual of the δ-form conditions: max over blocks of
// |Tr(Q_a^{-1}) − δ²| together with |Σ_a Tr(Q_a) − 1|, where δ² is taken
// from the first block. Throws ValidationError on non-positive weights.
double delta_form_residual(const std::vector<int>& block_dims,
                           const std::vector<Eigen::VectorXd>& weights);

enum class Basis { standard, adapted };

// An element of B expressed as a sparse combination of matrix units.
// basis == standard: coefficients against e^{(a)}_{ij};
// basis == adapted:  coefficients against f^{(a)}_{ij} = q_i^{-1/2} q_j^{-1/2} e^{(a)}_{ij}.
struct AlgebraElement {
  Basis basis = Basis::adapted;
  std::map<BlockIndex, cplx> coeffs;
};

AlgebraElement to_adapted(const QuantumSpace& s, const AlgebraElement& x);
AlgebraElement to_standard(const QuantumSpace& s, const AlgebraElement& x);

// Dense standard-basis matrix picture of x, one matrix per block.
std::vector<Eigen::MatrixXcd> to_dense(const QuantumSpace& s,
                                       const AlgebraElement& x);
AlgebraElement from_dense(const QuantumSpace& s,
                          const std::vector<Eigen::MatrixXcd>& blocks,
                          Basis basis = Basis::adapted);

AlgebraElement multiply(const QuantumSpace& s, const AlgebraElement& x,
                        const AlgebraElement& y);
AlgebraElement adjoint(const QuantumSpace& s, const AlgebraElement& x);
AlgebraElement add(const AlgebraElement& x, const AlgebraElement& y);
AlgebraElement scale(cplx c, const AlgebraElement& x);
AlgebraElement unit(const QuantumSpace& s, Basis basis = Basis::adapted);

cplx psi(const QuantumSpace& s, const AlgebraElement& x);
// GNS inner product ⟨x, y⟩ = ψ(x* y), conjugate-linear in the first slot.
cplx inner(const QuantumSpace& s, const AlgebraElement& x,
           const AlgebraElement& y);

double max_abs_coeff(const AlgebraElement& x);

// An element of B ⊗ B, stored as coefficients against f_α ⊗ f_β
// (adapted units on both legs).
using TwoLegTensor = std::map<std::pair<BlockIndex, BlockIndex>, cplx>;

// m*(x) for x given in the adapted basis: the unique element of B ⊗ B with
// ⟨m*(x), y ⊗ z⟩ = ⟨x, yz⟩. On adapted units, m*(f_ij) = Σ_k f_ik ⊗ f_kj.
TwoLegTensor mstar(const QuantumSpace& s, const AlgebraElement& x);

// Multiplication applied to a two-leg tensor: m(Σ c f_α⊗f_β) = Σ c f_α f_β.
AlgebraElement apply_m(const QuantumSpace& s, const TwoLegTensor& t);

// Residual of m m*(x) = δ² x over all adapted units.
double mm_star_residual(const QuantumSpace& s);

}  // namespace qck
