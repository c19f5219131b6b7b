// SPDX-License-Identifier: Apache-2.0
#include "qck/qspace.hpp"

#include <cmath>
#include <sstream>

namespace qck {

double delta_form_residual(const std::vector<int>& block_dims,
                           const std::vector<Eigen::VectorXd>& weights) {
  if (block_dims.empty() || block_dims.size() != weights.size()) {
    throw ValidationError("block dimension / weight list mismatch");
  }
  double trace_sum = 0.0;
  double delta_sq = 0.0;
  double residual = 0.0;
  for (size_t a = 0; a < block_dims.size(); ++a) {
    if (block_dims[a] <= 0) throw ValidationError("non-positive block dimension");
    if (weights[a].size() != block_dims[a]) {
      throw ValidationError("weight vector length does not match block dimension");
    }
    double inv_trace = 0.0;
    for (int i = 0; i < weights[a].size(); ++i) {
      double q = weights[a](i);
      if (!(q > 0.0)) throw ValidationError("weights must be strictly positive");
      inv_trace += 1.0 / q;
      trace_sum += q;
    }
    if (a == 0) {
      delta_sq = inv_trace;
    } else {
      residual = std::max(residual, std::abs(inv_trace - delta_sq));
    }
  }
  residual = std::max(residual, std::abs(trace_sum - 1.0));
  return residual;
}

QuantumSpace::QuantumSpace(std::vector<int> block_dims,
                           std::vector<Eigen::VectorXd> weights, double tol)
    : dims_(std::move(block_dims)), weights_(std::move(weights)) {
  double residual = delta_form_residual(dims_, weights_);
  if (residual > tol) {
    std::ostringstream os;
    os << "state is not a delta-form (residual " << residual << ")";
    throw ValidationError(os.str());
  }
  offsets_.resize(dims_.size());
  for (size_t a = 0; a < dims_.size(); ++a) {
    offsets_[a] = dim_;
    dim_ += dims_[a] * dims_[a];
  }
  delta_sq_ = 0.0;
  for (int i = 0; i < weights_[0].size(); ++i) delta_sq_ += 1.0 / weights_[0](i);
}

QuantumSpace QuantumSpace::tracial(std::vector<int> block_dims) {
  int total = 0;
  for (int n : block_dims) {
    if (n <= 0) throw ValidationError("non-positive block dimension");
    total += n * n;
  }
  std::vector<Eigen::VectorXd> w;
  w.reserve(block_dims.size());
  for (int n : block_dims) {
    w.push_back(Eigen::VectorXd::Constant(n, double(n) / double(total)));
  }
  return QuantumSpace(std::move(block_dims), std::move(w));
}

int QuantumSpace::flat(const BlockIndex& idx) const {
  if (idx.a < 0 || idx.a >= num_blocks() || idx.i < 0 || idx.j < 0 ||
      idx.i >= dims_[idx.a] || idx.j >= dims_[idx.a]) {
    throw ValidationError("matrix-unit index out of range");
  }
  return offsets_[idx.a] + idx.i * dims_[idx.a] + idx.j;
}

BlockIndex QuantumSpace::unflat(int f) const {
  for (int a = 0; a < num_blocks(); ++a) {
    int sz = dims_[a] * dims_[a];
    if (f < offsets_[a] + sz) {
      int r = f - offsets_[a];
      return BlockIndex{a, r / dims_[a], r % dims_[a]};
    }
  }
  throw ValidationError("flat index out of range");
}

bool QuantumSpace::operator==(const QuantumSpace& other) const {
  if (dims_ != other.dims_) return false;
  for (size_t a = 0; a < dims_.size(); ++a) {
    if ((weights_[a] - other.weights_[a]).cwiseAbs().maxCoeff() > 1e-12) {
      return false;
    }
  }
  return true;
}

namespace {

// f_ij = (q_i q_j)^{-1/2} e_ij, so a standard coefficient c against e_ij is
// c·(q_i q_j)^{1/2} against f_ij.
double unit_scale(const QuantumSpace& s, const BlockIndex& idx) {
  return std::sqrt(s.weight(idx.a, idx.i) * s.weight(idx.a, idx.j));
}

}  // namespace

AlgebraElement to_adapted(const QuantumSpace& s, const AlgebraElement& x) {
  if (x.basis == Basis::adapted) return x;
  AlgebraElement out{Basis::adapted, {}};
  for (const auto& [idx, c] : x.coeffs) out.coeffs[idx] = c * unit_scale(s, idx);
  return out;
}

AlgebraElement to_standard(const QuantumSpace& s, const AlgebraElement& x) {
  if (x.basis == Basis::standard) return x;
  AlgebraElement out{Basis::standard, {}};
  for (const auto& [idx, c] : x.coeffs) out.coeffs[idx] = c / unit_scale(s, idx);
  return out;
}

std::vector<Eigen::MatrixXcd> to_dense(const QuantumSpace& s,
                                       const AlgebraElement& x) {
  AlgebraElement std_x = to_standard(s, x);
  std::vector<Eigen::MatrixXcd> blocks;
  blocks.reserve(s.num_blocks());
  for (int a = 0; a < s.num_blocks(); ++a) {
    blocks.push_back(Eigen::MatrixXcd::Zero(s.block_dim(a), s.block_dim(a)));
  }
  for (const auto& [idx, c] : std_x.coeffs) blocks[idx.a](idx.i, idx.j) += c;
  return blocks;
}

AlgebraElement from_dense(const QuantumSpace& s,
                          const std::vector<Eigen::MatrixXcd>& blocks,
                          Basis basis) {
  AlgebraElement out{Basis::standard, {}};
  for (int a = 0; a < s.num_blocks(); ++a) {
    for (int i = 0; i < s.block_dim(a); ++i) {
      for (int j = 0; j < s.block_dim(a); ++j) {
        cplx c = blocks[a](i, j);
        if (std::abs(c) > 0.0) out.coeffs[BlockIndex{a, i, j}] = c;
      }
    }
  }
  return basis == Basis::standard ? out : to_adapted(s, out);
}

AlgebraElement multiply(const QuantumSpace& s, const AlgebraElement& x,
                        const AlgebraElement& y) {
  AlgebraElement xa = to_adapted(s, x);
  AlgebraElement ya = to_adapted(s, y);
  AlgebraElement out{Basis::adapted, {}};
  // f_rs f_pq = δ_sp q_s^{-1} f_rq within a block.
  for (const auto& [u, cu] : xa.coeffs) {
    for (const auto& [v, cv] : ya.coeffs) {
      if (u.a != v.a || u.j != v.i) continue;
      out.coeffs[BlockIndex{u.a, u.i, v.j}] +=
          cu * cv / s.weight(u.a, u.j);
    }
  }
  return out;
}

AlgebraElement adjoint(const QuantumSpace&, const AlgebraElement& x) {
  AlgebraElement out{x.basis, {}};
  for (const auto& [idx, c] : x.coeffs) {
    out.coeffs[BlockIndex{idx.a, idx.j, idx.i}] = std::conj(c);
  }
  return out;
}

AlgebraElement add(const AlgebraElement& x, const AlgebraElement& y) {
  if (x.basis != y.basis) {
    throw ValidationError("cannot add elements expressed in different bases");
  }
  AlgebraElement out = x;
  for (const auto& [idx, c] : y.coeffs) out.coeffs[idx] += c;
  return out;
}

AlgebraElement scale(cplx c, const AlgebraElement& x) {
  AlgebraElement out{x.basis, {}};
  for (const auto& [idx, v] : x.coeffs) out.coeffs[idx] = c * v;
  return out;
}

AlgebraElement unit(const QuantumSpace& s, Basis basis) {
  AlgebraElement out{Basis::adapted, {}};
  // 1 = Σ e_ii = Σ q_i f_ii.
  for (int a = 0; a < s.num_blocks(); ++a) {
    for (int i = 0; i < s.block_dim(a); ++i) {
      out.coeffs[BlockIndex{a, i, i}] = s.weight(a, i);
    }
  }
  return basis == Basis::adapted ? out : to_standard(s, out);
}

cplx psi(const QuantumSpace& s, const AlgebraElement& x) {
  // ψ(e_ij) = δ_ij q_i, hence ψ(f_ij) = δ_ij.
  AlgebraElement xa = to_adapted(s, x);
  cplx out = 0.0;
  for (const auto& [idx, c] : xa.coeffs) {
    if (idx.i == idx.j) out += c;
  }
  return out;
}

cplx inner(const QuantumSpace& s, const AlgebraElement& x,
           const AlgebraElement& y) {
  return psi(s, multiply(s, adjoint(s, x), y));
}

double max_abs_coeff(const AlgebraElement& x) {
  double m = 0.0;
  for (const auto& [idx, c] : x.coeffs) m = std::max(m, std::abs(c));
  return m;
}

TwoLegTensor mstar(const QuantumSpace& s, const AlgebraElement& x) {
  AlgebraElement xa = to_adapted(s, x);
  TwoLegTensor out;
  for (const auto& [idx, c] : xa.coeffs) {
    for (int k = 0; k < s.block_dim(idx.a); ++k) {
      out[{BlockIndex{idx.a, idx.i, k}, BlockIndex{idx.a, k, idx.j}}] += c;
    }
  }
  return out;
}

AlgebraElement apply_m(const QuantumSpace& s, const TwoLegTensor& t) {
  AlgebraElement out{Basis::adapted, {}};
  for (const auto& [legs, c] : t) {
    const auto& [u, v] = legs;
    if (u.a != v.a || u.j != v.i) continue;
    out.coeffs[BlockIndex{u.a, u.i, v.j}] += c / s.weight(u.a, u.j);
  }
  return out;
}

double mm_star_residual(const QuantumSpace& s) {
  double residual = 0.0;
  for (int f = 0; f < s.dim(); ++f) {
    BlockIndex idx = s.unflat(f);
    AlgebraElement basis_unit{Basis::adapted, {{idx, 1.0}}};
    AlgebraElement back = apply_m(s, mstar(s, basis_unit));
    AlgebraElement diff = add(back, scale(-s.delta_sq(), basis_unit));
    residual = std::max(residual, max_abs_coeff(diff));
  }
  return residual;
}

}  // namespace qck
