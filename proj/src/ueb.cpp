// SPDX-License-Identifier: Apache-2.0
#include "qck/ueb.hpp"

#include <cmath>
#include <complex>
#include <numbers>

namespace qck {

namespace {

int md(int a, int n) {
  a %= n;
  return a < 0 ? a + n : a;
}

cplx root_of_unity(int n, int power) {
  double theta = 2.0 * std::numbers::pi * power / n;
  return cplx(std::cos(theta), std::sin(theta));
}

Eigen::MatrixXcd numeric_kron(const Eigen::MatrixXcd& a,
                              const Eigen::MatrixXcd& b) {
  Eigen::MatrixXcd out(a.rows() * b.rows(), a.cols() * b.cols());
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

Eigen::MatrixXcd pauli_x(int n) {
  Eigen::MatrixXcd x = Eigen::MatrixXcd::Zero(n, n);
  for (int j = 0; j < n; ++j) x(j, j) = root_of_unity(n, j);
  return x;
}

Eigen::MatrixXcd pauli_z(int n) {
  Eigen::MatrixXcd z = Eigen::MatrixXcd::Zero(n, n);
  for (int j = 0; j < n; ++j) z(md(j + 1, n), j) = 1.0;
  return z;
}

double mat_norm(const Eigen::MatrixXcd& m) { return m.cwiseAbs().maxCoeff(); }

}  // namespace

double NamedReport::max_residual() const {
  double m = 0.0;
  for (const auto& c : checks) m = std::max(m, c.residual);
  return m;
}

void NamedReport::add(std::string name, double residual) {
  checks.push_back({std::move(name), residual});
}

void NamedReport::bump(const std::string& name, double residual) {
  for (auto& c : checks) {
    if (c.name == name) {
      c.residual = std::max(c.residual, residual);
      return;
    }
  }
  checks.push_back({name, residual});
}

UnitaryErrorBasis pauli_ueb(int n) {
  if (n < 1) throw ValidationError("unitary error basis needs n >= 1");
  Eigen::MatrixXcd x = pauli_x(n), z = pauli_z(n);
  UnitaryErrorBasis w;
  w.n = n;
  w.matrices.reserve(n * n);
  Eigen::MatrixXcd xj = Eigen::MatrixXcd::Identity(n, n);
  for (int j = 0; j < n; ++j) {
    Eigen::MatrixXcd wx = xj;
    for (int k = 0; k < n; ++k) {
      w.matrices.push_back(wx);
      wx = wx * z;
    }
    xj = xj * x;
  }
  return w;
}

NamedReport validate_ueb(const UnitaryErrorBasis& w) {
  int n = w.n;
  if (n < 1 || static_cast<int>(w.matrices.size()) != n * n) {
    throw ValidationError("unitary error basis needs n^2 matrices");
  }
  Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(n, n);
  NamedReport report;
  double unitarity = 0.0, ortho = 0.0, depol = 0.0, entangled = 0.0;
  for (int x = 0; x < n * n; ++x) {
    const Eigen::MatrixXcd& wx = w.matrices[x];
    if (wx.rows() != n || wx.cols() != n) {
      throw ValidationError("unitary error basis matrix has wrong size");
    }
    unitarity = std::max(unitarity, mat_norm(wx.adjoint() * wx - id));
    for (int y = 0; y < n * n; ++y) {
      cplx tr = (wx.adjoint() * w.matrices[y]).trace() / double(n);
      ortho = std::max(ortho, std::abs(tr - (x == y ? cplx(1.0) : cplx(0.0))));
    }
  }
  // Depolarizing property on the matrix-unit basis of M_n.
  for (int r = 0; r < n; ++r) {
    for (int s = 0; s < n; ++s) {
      Eigen::MatrixXcd acc = Eigen::MatrixXcd::Zero(n, n);
      for (const auto& wx : w.matrices) {
        acc += wx.adjoint().col(r) * wx.row(s);
      }
      Eigen::MatrixXcd expect = (r == s) ? Eigen::MatrixXcd(double(n) * id)
                                         : Eigen::MatrixXcd::Zero(n, n);
      depol = std::max(depol, mat_norm(acc - expect));
    }
  }
  // Orthonormality of (w_x (x) 1) Omega.
  Eigen::VectorXcd omega = Eigen::VectorXcd::Zero(n * n);
  for (int i = 0; i < n; ++i) omega(i * n + i) = 1.0 / std::sqrt(double(n));
  std::vector<Eigen::VectorXcd> vecs;
  for (const auto& wx : w.matrices) {
    vecs.push_back(numeric_kron(wx, id) * omega);
  }
  for (size_t x = 0; x < vecs.size(); ++x) {
    for (size_t y = 0; y < vecs.size(); ++y) {
      cplx ip = vecs[x].dot(vecs[y]);
      entangled =
          std::max(entangled, std::abs(ip - (x == y ? cplx(1.0) : cplx(0.0))));
    }
  }
  report.add("unitarity", unitarity);
  report.add("trace orthonormality", ortho);
  report.add("depolarizing", depol);
  report.add("entangled basis", entangled);
  return report;
}

LinkingRep linking_rep(const UnitaryErrorBasis& w) {
  int n = w.n;
  if (static_cast<int>(w.matrices.size()) != n * n) {
    throw ValidationError("unitary error basis needs n^2 matrices");
  }
  LinkingRep rep;
  rep.n = n;
  rep.v.reserve(static_cast<size_t>(n) * n * n * n);
  for (int r = 0; r < n; ++r) {
    for (int s = 0; s < n; ++s) {
      for (int x = 0; x < n * n; ++x) {
        const Eigen::MatrixXcd& wx = w.matrices[x];
        rep.v.push_back((wx.adjoint().col(r) * wx.row(s)) / double(n));
      }
    }
  }
  return rep;
}

NamedReport linking_relations_check(const LinkingRep& rep) {
  int n = rep.n;
  int nn = n * n;
  Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(n, n);
  NamedReport report;
  for (int x = 0; x < nn; ++x) {
    for (int y = 0; y < nn; ++y) {
      for (int r = 0; r < n; ++r) {
        for (int s = 0; s < n; ++s) {
          Eigen::MatrixXcd acc = Eigen::MatrixXcd::Zero(n, n);
          for (int w = 0; w < n; ++w) acc += rep.at(r, w, x) * rep.at(w, s, y);
          if (x == y) acc -= rep.at(r, s, x);
          report.bump("(A1a)", mat_norm(acc));
        }
      }
    }
  }
  for (int x = 0; x < nn; ++x) {
    for (int j = 0; j < n; ++j) {
      for (int i = 0; i < n; ++i) {
        for (int s = 0; s < n; ++s) {
          for (int r = 0; r < n; ++r) {
            Eigen::MatrixXcd acc = rep.at(j, i, x) * rep.at(s, r, x);
            if (i == s) acc -= rep.at(j, r, x) / double(n);
            report.bump("(A1b)", mat_norm(acc));
          }
        }
      }
    }
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        report.bump("(A2)", mat_norm(Eigen::MatrixXcd(
                                rep.at(i, j, x).adjoint() - rep.at(j, i, x))));
      }
    }
    Eigen::MatrixXcd diag = Eigen::MatrixXcd::Zero(n, n);
    for (int i = 0; i < n; ++i) diag += double(n) * rep.at(i, i, x);
    report.bump("(A3a)", mat_norm(diag - id));
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      Eigen::MatrixXcd acc = Eigen::MatrixXcd::Zero(n, n);
      for (int z = 0; z < nn; ++z) acc += rep.at(i, j, z);
      if (i == j) acc -= id;
      report.bump("(A3b)", mat_norm(acc));
    }
  }
  // (A4), trivial adjacency on both sides: both sides equal V^{ij}_x.
  for (int x = 0; x < nn; ++x) {
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        report.bump("(A4) trivial", mat_norm(Eigen::MatrixXcd(
                                        rep.at(i, j, x) - rep.at(i, j, x))));
      }
    }
  }
  // (A4), complete adjacency: delta_ij n sum_s V^{ss}_x = sum_y V^{ij}_y.
  for (int x = 0; x < nn; ++x) {
    Eigen::MatrixXcd diag = Eigen::MatrixXcd::Zero(n, n);
    for (int s = 0; s < n; ++s) diag += double(n) * rep.at(s, s, x);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        Eigen::MatrixXcd rhs = Eigen::MatrixXcd::Zero(n, n);
        for (int y = 0; y < nn; ++y) rhs += rep.at(i, j, y);
        Eigen::MatrixXcd lhs =
            (i == j) ? diag : Eigen::MatrixXcd(Eigen::MatrixXcd::Zero(n, n));
        report.bump("(A4) complete", mat_norm(lhs - rhs));
      }
    }
  }
  return report;
}

UMatrixResult u_matrix(const QuantumSpace& s, const LinkingRep& rep) {
  if (s.num_blocks() != 1) {
    throw ValidationError(
        "no concrete linking representation for multi-block spaces");
  }
  int n = s.block_dim(0);
  if (n != rep.n) throw ValidationError("space and representation disagree");
  for (int i = 0; i < n; ++i) {
    if (std::abs(s.weight(0, i) - s.weight(0, 0)) > kDefaultTolerance) {
      throw ValidationError("u-matrix needs uniform (tracial) weights");
    }
  }
  int nn = n * n;
  double scale = std::sqrt(double(n));
  UMatrixResult out{
      MatrixOver<Eigen::MatrixXcd>(nn, nn, Eigen::MatrixXcd::Zero(n, n)), 0.0,
      0.0};
  for (int x = 0; x < nn; ++x) {
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        out.u(x, i * n + j) = scale * rep.at(j, i, x).transpose();
      }
    }
  }
  // Flatten to n^3 x n^3 and test unitarity.
  Eigen::MatrixXcd flat(nn * n, nn * n);
  for (int x = 0; x < nn; ++x) {
    for (int c = 0; c < nn; ++c) {
      flat.block(x * n, c * n, n, n) = out.u(x, c);
    }
  }
  Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(nn * n, nn * n);
  out.left_residual = mat_norm(flat.adjoint() * flat - id);
  out.right_residual = mat_norm(flat * flat.adjoint() - id);
  return out;
}

CuntzSymResult cuntz_sym_family(const MatrixOver<Eigen::MatrixXcd>& u,
                                double tol) {
  int n1 = u.rows(), n = u.cols();
  int k = static_cast<int>(u(0, 0).rows());
  for (int i = 0; i < n1; ++i) {
    for (int j = 0; j < n; ++j) {
      if (u(i, j).rows() != k || u(i, j).cols() != k) {
        throw ValidationError("family matrix entries must be square, uniform");
      }
    }
  }
  Eigen::MatrixXcd flat(n1 * k, n * k);
  for (int i = 0; i < n1; ++i) {
    for (int j = 0; j < n; ++j) flat.block(i * k, j * k, k, k) = u(i, j);
  }
  if (mat_norm(flat.adjoint() * flat -
               Eigen::MatrixXcd::Identity(n * k, n * k)) > tol ||
      mat_norm(flat * flat.adjoint() -
               Eigen::MatrixXcd::Identity(n1 * k, n1 * k)) > tol) {
    throw ValidationError("family matrix must be unitary");
  }
  CuntzSymResult out;
  CuntzElement proto = CuntzElement::zero(n1);
  for (int y = 0; y < n; ++y) {
    MatrixOver<CuntzElement> shat(k, k, proto);
    for (int x = 0; x < n1; ++x) {
      shat += kron_with_matrix(CuntzElement::generator(n1, x), u(x, y));
    }
    out.family.push_back(std::move(shat));
  }
  MatrixOver<CuntzElement> one =
      MatrixOver<CuntzElement>::identity(k, CuntzElement::unit(n1));
  for (int z = 0; z < n; ++z) {
    for (int y = 0; y < n; ++y) {
      MatrixOver<CuntzElement> prod = adjoint(out.family[z]) * out.family[y];
      if (z == y) prod = prod - one;
      out.report.bump("isometry relations", zero_norm(prod));
    }
  }
  MatrixOver<CuntzElement> range(k, k, proto);
  for (int y = 0; y < n; ++y) {
    range += out.family[y] * adjoint(out.family[y]);
  }
  out.report.bump("range sum", zero_norm(range - one));
  return out;
}

namespace {

// beta(S_ij) = sum_x s_x (x) (V^{ji}_x)^t in M_n(O_{n^2}).
std::vector<MatrixOver<CuntzElement>> matrix_side_images(
    const LinkingRep& rep) {
  int n = rep.n, nn = n * n;
  std::vector<MatrixOver<CuntzElement>> images;
  CuntzElement proto = CuntzElement::zero(nn);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      MatrixOver<CuntzElement> b(n, n, proto);
      for (int x = 0; x < nn; ++x) {
        b += kron_with_matrix(CuntzElement::generator(nn, x),
                              rep.at(j, i, x).transpose());
      }
      images.push_back(std::move(b));
    }
  }
  return images;
}

// pi(S_x) = sqrt(n) sum_{rs} s_{rs} (x) V^{rs}_x in M_n(O_{n^2}).
std::vector<MatrixOver<CuntzElement>> point_side_images(const LinkingRep& rep) {
  int n = rep.n, nn = n * n;
  std::vector<MatrixOver<CuntzElement>> images;
  CuntzElement proto = CuntzElement::zero(nn);
  double scale = std::sqrt(double(n));
  for (int x = 0; x < nn; ++x) {
    MatrixOver<CuntzElement> p(n, n, proto);
    for (int r = 0; r < n; ++r) {
      for (int s = 0; s < n; ++s) {
        p += kron_with_matrix(
            scale * CuntzElement::generator(nn, r * n + s), rep.at(r, s, x));
      }
    }
    images.push_back(std::move(p));
  }
  return images;
}

// Trivial-side pi image in the amplification model:
// p_{kl} = sum_{rs} omega^{k(s-r)} e_{r-l,r} s e_{s,s-l}.
std::vector<UnitalFreeWordElement> trivial_point_side_images(
    const FreeProductContextPtr& ctx, int n) {
  UnitalFreeWordElement s = UnitalFreeWordElement::letter(ctx, 1, 1);
  std::vector<UnitalFreeWordElement> images;
  for (int k = 0; k < n; ++k) {
    for (int l = 0; l < n; ++l) {
      UnitalFreeWordElement p = UnitalFreeWordElement::zero(ctx);
      for (int r = 0; r < n; ++r) {
        for (int ss = 0; ss < n; ++ss) {
          p += root_of_unity(n, k * (ss - r)) *
               (matrix_unit_element(ctx, 0, md(r - l, n), r) * s *
                matrix_unit_element(ctx, 0, ss, md(ss - l, n)));
        }
      }
      images.push_back(std::move(p));
    }
  }
  return images;
}

// sigma(S_jk) = sum_x S_x (x) (V^{kj}_x)^t for a generic first-leg backend.
template <typename E>
std::vector<MatrixOver<E>> sigma_images(const LinkingRep& rep,
                                        const std::vector<E>& point_gens) {
  int n = rep.n, nn = n * n;
  std::vector<MatrixOver<E>> images;
  for (int j = 0; j < n; ++j) {
    for (int k = 0; k < n; ++k) {
      MatrixOver<E> m(n, n, zero_like(point_gens[0]));
      for (int x = 0; x < nn; ++x) {
        m += kron_with_matrix(point_gens[x],
                              Eigen::MatrixXcd(rep.at(k, j, x).transpose()));
      }
      images.push_back(std::move(m));
    }
  }
  return images;
}

}  // namespace

MainTheoremReport main_theorem_check(int n) {
  if (n < 2) throw ValidationError("matrix side needs n >= 2");
  LinkingRep rep = linking_rep(pauli_ueb(n));
  UMatrixResult um = u_matrix(QuantumSpace::tracial({n}), rep);
  MainTheoremReport report;

  // (i) The rescaled images are Cuntz isometries.
  report.cuntz = cuntz_sym_family(um.u).report;
  report.cuntz.add("u left unitarity", um.left_residual);
  report.cuntz.add("u right unitarity", um.right_residual);

  // (ii) The images satisfy the complete-graph presentation.
  std::vector<MatrixOver<CuntzElement>> b = matrix_side_images(rep);
  QuantumSpace space = QuantumSpace::tracial({n});
  report.presentation = check_assignment(qck_presentation(complete_graph(space)), b);

  // (iii) e = n sum_ij b_ij b_ij* is the unit of the generated algebra.
  MatrixOver<CuntzElement> e(n, n, CuntzElement::zero(n * n));
  for (const auto& img : b) e += img * adjoint(img);
  MatrixOver<CuntzElement> one =
      MatrixOver<CuntzElement>::identity(n, CuntzElement::unit(n * n));
  MatrixOver<CuntzElement> e_scaled = cplx(double(n)) * e;
  report.unit.add("unit value", zero_norm(e_scaled - one));
  double left = 0.0, right = 0.0;
  for (const auto& img : b) {
    left = std::max(left, zero_norm(e_scaled * img - img));
    right = std::max(right, zero_norm(img * e_scaled - img));
  }
  report.unit.add("left multiplication", left);
  report.unit.add("right multiplication", right);
  report.wrong_scale_residual =
      zero_norm(cplx(double(n) * n) * e - one);
  return report;
}

EmbeddingReport embeddings(int n, GraphKind kind) {
  if (n < 2) throw ValidationError("embeddings need n >= 2");
  LinkingRep rep = linking_rep(pauli_ueb(n));
  int nn = n * n;
  EmbeddingReport report;
  report.kind = kind;
  if (kind == GraphKind::complete) {
    std::vector<MatrixOver<CuntzElement>> pi = point_side_images(rep);
    MatrixOver<CuntzElement> one =
        MatrixOver<CuntzElement>::identity(n, CuntzElement::unit(nn));
    for (int x = 0; x < nn; ++x) {
      for (int y = 0; y < nn; ++y) {
        MatrixOver<CuntzElement> prod = adjoint(pi[x]) * pi[y];
        if (x == y) prod = prod - one;
        report.pi_check.bump("isometry relations", zero_norm(prod));
      }
    }
    MatrixOver<CuntzElement> range(n, n, CuntzElement::zero(nn));
    for (int x = 0; x < nn; ++x) range += pi[x] * adjoint(pi[x]);
    report.pi_check.bump("range sum", zero_norm(range - one));

    std::vector<MatrixOver<CuntzElement>> sigma = matrix_side_images(rep);
    QuantumSpace space = QuantumSpace::tracial({n});
    report.sigma_presentation =
        check_assignment(qck_presentation(complete_graph(space)), sigma);

    // Slice compositions: multiplying the two matrix legs (with the middle
    // one transposed) recovers the generator tensored with the identity.
    Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(n, n);
    for (int x = 0; x < nn; ++x) {
      MatrixOver<CuntzElement> acc(n, n, CuntzElement::zero(nn));
      for (int y = 0; y < nn; ++y) {
        Eigen::MatrixXcd coeff = Eigen::MatrixXcd::Zero(n, n);
        for (int r = 0; r < n; ++r) {
          for (int s = 0; s < n; ++s) {
            coeff += rep.at(s, r, y) * rep.at(r, s, x);
          }
        }
        acc += kron_with_matrix(double(n) * CuntzElement::generator(nn, y),
                                coeff);
      }
      acc = acc - kron_with_matrix(CuntzElement::generator(nn, x), id);
      report.slice.bump("point side recovered", zero_norm(acc));
    }
    for (int r = 0; r < n; ++r) {
      for (int s = 0; s < n; ++s) {
        MatrixOver<CuntzElement> acc(n, n, CuntzElement::zero(nn));
        for (int p = 0; p < n; ++p) {
          for (int q = 0; q < n; ++q) {
            Eigen::MatrixXcd coeff = Eigen::MatrixXcd::Zero(n, n);
            for (int x = 0; x < nn; ++x) {
              coeff += (rep.at(s, r, x) * rep.at(p, q, x)).transpose();
            }
            acc += kron_with_matrix(
                double(n) * CuntzElement::generator(nn, p * n + q), coeff);
          }
        }
        acc = acc - kron_with_matrix(CuntzElement::generator(nn, r * n + s), id);
        report.slice.bump("matrix side recovered", zero_norm(acc));
      }
    }
  } else {
    std::vector<FreeWordElement> gens;
    for (int x = 0; x < nn; ++x) {
      gens.push_back(FreeWordElement::letter(nn, x, 1));
    }
    std::vector<MatrixOver<FreeWordElement>> sigma = sigma_images(rep, gens);
    QuantumSpace space = QuantumSpace::tracial({n});
    report.sigma_presentation =
        check_assignment(qck_presentation(trivial_graph(space)), sigma);

    FreeProductContextPtr ctx = amplification_context(n);
    std::vector<UnitalFreeWordElement> pi = trivial_point_side_images(ctx, n);
    for (const auto& p : pi) {
      UnitalFreeWordElement pstar = adjoint(p);
      report.pi_check.bump("partial isometry", zero_norm(p * pstar * p - p));
      report.pi_check.bump("normality", zero_norm(pstar * p - p * pstar));
    }
  }
  return report;
}

EntangledFrame entangled_frame(int n) {
  UnitaryErrorBasis w = pauli_ueb(n);
  Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(n, n);
  Eigen::VectorXcd omega = Eigen::VectorXcd::Zero(n * n);
  for (int i = 0; i < n; ++i) omega(i * n + i) = 1.0 / std::sqrt(double(n));
  EntangledFrame frame;
  frame.n = n;
  frame.v = Eigen::MatrixXcd::Zero(n * n, n * n);
  for (int j = 0; j < n; ++j) {
    for (int k = 0; k < n; ++k) {
      Eigen::VectorXcd xi = numeric_kron(w.matrices[j * n + k], id) * omega;
      frame.xi.push_back(xi);
      frame.v.col(j * n + k) = root_of_unity(n, -j * k) * xi;
    }
  }
  return frame;
}

CrossedReport crossed_product_identities(int n, GraphKind kind) {
  if (n < 2) throw ValidationError("crossed-product identities need n >= 2");
  LinkingRep rep = linking_rep(pauli_ueb(n));
  int nn = n * n;
  Eigen::MatrixXcd x = pauli_x(n), z = pauli_z(n);
  cplx omega = root_of_unity(n, 1);
  CrossedReport report;
  report.kind = kind;

  // (i) Covariance of sigma under the two cyclic gauge shifts. The matrix
  // side indices shift as alpha_1(S_jk) = omega^{j-k} S_jk and
  // alpha_2(S_jk) = S_{j-1,k-1}; the point side as beta_1(S_lm) = S_{l-1,m}
  // and beta_2(S_lm) = S_{l,m-1} (the latter realized by conjugating with
  // 1 (x) Z on the left, the direction the concrete matrices satisfy).
  auto covariance_sigma = [&](auto& sig) {
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        auto conj_x = x * sig[j * n + k] * Eigen::MatrixXcd(x.adjoint());
        auto scaled = root_of_unity(n, j - k) * sig[j * n + k];
        report.covariance.bump("sigma X covariance",
                               zero_norm(conj_x - scaled));
        auto conj_z =
            Eigen::MatrixXcd(z.adjoint()) * sig[j * n + k] * z;
        report.covariance.bump(
            "sigma Z covariance",
            zero_norm(conj_z - sig[md(j - 1, n) * n + md(k - 1, n)]));
      }
    }
  };
  if (kind == GraphKind::complete) {
    std::vector<MatrixOver<CuntzElement>> sigma;
    {
      std::vector<CuntzElement> gens;
      for (int xx = 0; xx < nn; ++xx) {
        gens.push_back(CuntzElement::generator(nn, xx));
      }
      sigma = sigma_images(rep, gens);
    }
    covariance_sigma(sigma);
    std::vector<MatrixOver<CuntzElement>> pi = point_side_images(rep);
    for (int l = 0; l < n; ++l) {
      for (int m = 0; m < n; ++m) {
        auto conj_x = x * pi[l * n + m] * Eigen::MatrixXcd(x.adjoint());
        report.covariance.bump(
            "pi X covariance",
            zero_norm(conj_x - pi[md(l - 1, n) * n + m]));
        auto conj_z = z * pi[l * n + m] * Eigen::MatrixXcd(z.adjoint());
        report.covariance.bump(
            "pi Z covariance",
            zero_norm(conj_z - pi[l * n + md(m - 1, n)]));
      }
    }
  } else {
    std::vector<FreeWordElement> gens;
    for (int xx = 0; xx < nn; ++xx) {
      gens.push_back(FreeWordElement::letter(nn, xx, 1));
    }
    std::vector<MatrixOver<FreeWordElement>> sigma = sigma_images(rep, gens);
    covariance_sigma(sigma);
    FreeProductContextPtr ctx = amplification_context(n);
    std::vector<UnitalFreeWordElement> pi = trivial_point_side_images(ctx, n);
    UnitalFreeWordElement xc = UnitalFreeWordElement::zero(ctx);
    UnitalFreeWordElement zc = UnitalFreeWordElement::zero(ctx);
    for (int r = 0; r < n; ++r) {
      xc += root_of_unity(n, r) * matrix_unit_element(ctx, 0, r, r);
      zc += matrix_unit_element(ctx, 0, md(r + 1, n), r);
    }
    for (int l = 0; l < n; ++l) {
      for (int m = 0; m < n; ++m) {
        report.covariance.bump(
            "pi X covariance",
            zero_norm(xc * pi[l * n + m] * adjoint(xc) -
                      pi[md(l - 1, n) * n + m]));
        report.covariance.bump(
            "pi Z covariance",
            zero_norm(zc * pi[l * n + m] * adjoint(zc) -
                      pi[l * n + md(m - 1, n)]));
      }
    }
  }

  // (ii) Weyl relation.
  report.weyl.add("Z* X = omega X Z*",
                  mat_norm(Eigen::MatrixXcd(z.adjoint() * x) -
                           omega * Eigen::MatrixXcd(x * z.adjoint())));

  // (iii) Entangled-frame conjugations, pure linear algebra.
  EntangledFrame frame = entangled_frame(n);
  Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(n, n);
  Eigen::MatrixXcd big_id = Eigen::MatrixXcd::Identity(nn, nn);
  double gram = 0.0;
  for (int a = 0; a < nn; ++a) {
    for (int b2 = 0; b2 < nn; ++b2) {
      cplx ip = frame.xi[a].dot(frame.xi[b2]);
      gram = std::max(gram, std::abs(ip - (a == b2 ? cplx(1.0) : cplx(0.0))));
    }
  }
  report.frame.add("frame orthonormality", gram);
  report.frame.add("V unitary",
                   mat_norm(frame.v.adjoint() * frame.v - big_id));
  report.frame.add(
      "V*(1xX)V = Zx1",
      mat_norm(frame.v.adjoint() * numeric_kron(id, x) * frame.v -
               numeric_kron(z, id)));
  report.frame.add(
      "V*(1xZ*)V = XxZ",
      mat_norm(frame.v.adjoint() * numeric_kron(id, z).adjoint() * frame.v -
               numeric_kron(x, z)));

  // (iv) Spectral decomposition of the composed embedding (complete case).
  if (kind == GraphKind::complete) {
    std::vector<MatrixOver<CuntzElement>> pi = point_side_images(rep);
    double scale = 1.0 / std::sqrt(double(n));
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        MatrixOver<CuntzElement> lhs(nn, nn, CuntzElement::zero(nn));
        for (int xx = 0; xx < nn; ++xx) {
          lhs += kron_with_matrix(pi[xx],
                                  Eigen::MatrixXcd(rep.at(k, j, xx).transpose()));
        }
        MatrixOver<CuntzElement> rhs(nn, nn, CuntzElement::zero(nn));
        for (int l = 0; l < n; ++l) {
          for (int m = 0; m < n; ++m) {
            Eigen::MatrixXcd proj =
                frame.xi[l * n + m] * frame.xi[l * n + m].adjoint();
            CuntzElement gen =
                cplx(scale) * root_of_unity(n, -l * (j - k)) *
                CuntzElement::generator(nn, md(j + m, n) * n + md(k + m, n));
            rhs += kron_with_matrix(gen, proj);
          }
        }
        report.spectral.bump("spectral decomposition", zero_norm(lhs - rhs));
      }
    }
    // Consistency: V diagonalizes the frame projections.
    double diag = 0.0;
    for (int l = 0; l < n; ++l) {
      for (int m = 0; m < n; ++m) {
        Eigen::MatrixXcd proj =
            frame.xi[l * n + m] * frame.xi[l * n + m].adjoint();
        Eigen::MatrixXcd unit = Eigen::MatrixXcd::Zero(nn, nn);
        unit(l * n + m, l * n + m) = 1.0;
        diag = std::max(
            diag, mat_norm(frame.v.adjoint() * proj * frame.v - unit));
      }
    }
    report.spectral.add("frame diagonalization", diag);
  }
  return report;
}

FreeProductContextPtr amplification_context(int n) {
  auto ctx = std::make_shared<FreeProductContext>();
  ctx->push_back(std::make_shared<MatrixBlockFactor>(n));
  ctx->push_back(std::make_shared<LaurentCircleFactor>());
  return ctx;
}

std::vector<UnitalFreeWordElement> amplified_generators(
    const FreeProductContextPtr& ctx, int n, const UnitalFreeWordElement& s) {
  std::vector<UnitalFreeWordElement> out;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      UnitalFreeWordElement acc = UnitalFreeWordElement::zero(ctx);
      for (int k = 0; k < n; ++k) {
        acc += matrix_unit_element(ctx, 0, k, i) * s *
               matrix_unit_element(ctx, 0, j, k);
      }
      out.push_back(std::move(acc));
    }
  }
  return out;
}

AmplificationReport amplification_model_check(int n) {
  if (n < 1) throw ValidationError("amplification model needs n >= 1");
  FreeProductContextPtr ctx = amplification_context(n);
  UnitalFreeWordElement s = UnitalFreeWordElement::letter(ctx, 1, 1);
  std::vector<UnitalFreeWordElement> sh = amplified_generators(ctx, n, s);
  AmplificationReport report;

  QuantumSpace space = QuantumSpace::tracial({n});
  report.presentation =
      check_assignment(qck_presentation(trivial_graph(space)), sh);

  for (int g = 0; g < n * n; ++g) {
    for (int k = 0; k < n; ++k) {
      for (int l = 0; l < n; ++l) {
        UnitalFreeWordElement e = matrix_unit_element(ctx, 0, k, l);
        report.commutant.bump("relative commutant",
                              zero_norm(sh[g] * e - e * sh[g]));
      }
    }
  }

  MatrixOver<UnitalFreeWordElement> shat(n, n,
                                         UnitalFreeWordElement::zero(ctx));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) shat(i, j) = sh[i * n + j];
  }
  MatrixOver<UnitalFreeWordElement> p = adjoint(shat) * shat;
  MatrixOver<UnitalFreeWordElement> one = unit_element(p);
  report.ktheory.add("projection idempotent", zero_norm(p * p - p));
  report.ktheory.add("projection selfadjoint", zero_norm(adjoint(p) - p));
  MatrixOver<UnitalFreeWordElement> u = shat - (one - p);
  report.ktheory.add("unitary left", zero_norm(adjoint(u) * u - one));
  report.ktheory.add("unitary right", zero_norm(u * adjoint(u) - one));

  // Round trips of the two generator-level homomorphisms.
  UnitalFreeWordElement back = UnitalFreeWordElement::zero(ctx);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      back += matrix_unit_element(ctx, 0, i, i) * s *
              matrix_unit_element(ctx, 0, j, j);
    }
  }
  report.roundtrip.add("corner sum recovers the loop", zero_norm(back - s));
  MatrixOver<UnitalFreeWordElement> fs(n, n, UnitalFreeWordElement::zero(ctx));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) fs(i, j) = sh[i * n + j];
  }
  UnitalFreeWordElement unit = UnitalFreeWordElement::unit(ctx);
  Eigen::MatrixXcd idn = Eigen::MatrixXcd::Identity(n, n);
  double fg = 0.0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      MatrixOver<UnitalFreeWordElement> acc(n, n,
                                            UnitalFreeWordElement::zero(ctx));
      for (int k = 0; k < n; ++k) {
        Eigen::MatrixXcd eki = Eigen::MatrixXcd::Zero(n, n);
        eki(k, i) = 1.0;
        Eigen::MatrixXcd ejk = Eigen::MatrixXcd::Zero(n, n);
        ejk(j, k) = 1.0;
        acc += kron_with_matrix(unit, eki) * fs * kron_with_matrix(unit, ejk);
      }
      fg = std::max(
          fg, zero_norm(acc - kron_with_matrix(sh[i * n + j], idn)));
    }
  }
  report.roundtrip.add("matrix amplification recovers the generators", fg);
  return report;
}

}  // namespace qck
