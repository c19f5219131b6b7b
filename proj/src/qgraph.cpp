// SPDX-License-Identifier: Apache-2.0
#include "qck/qgraph.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <set>
#include <sstream>

namespace qck {

int ClassicalGraph::vertex_index(const std::string& label) const {
  auto it = std::find(vertices.begin(), vertices.end(), label);
  if (it == vertices.end()) throw ValidationError("unknown vertex label: " + label);
  return static_cast<int>(it - vertices.begin());
}

bool ClassicalGraph::is_simple() const {
  std::set<std::pair<int, int>> seen;
  for (const auto& e : edges) {
    if (!seen.insert(e).second) return false;
  }
  return true;
}

std::vector<int> ClassicalGraph::sinks() const {
  std::vector<bool> emits(vertices.size(), false);
  for (const auto& e : edges) emits[e.first] = true;
  std::vector<int> out;
  for (size_t v = 0; v < vertices.size(); ++v) {
    if (!emits[v]) out.push_back(static_cast<int>(v));
  }
  return out;
}

std::vector<int> ClassicalGraph::sources() const {
  std::vector<bool> receives(vertices.size(), false);
  for (const auto& e : edges) receives[e.second] = true;
  std::vector<int> out;
  for (size_t v = 0; v < vertices.size(); ++v) {
    if (!receives[v]) out.push_back(static_cast<int>(v));
  }
  return out;
}

bool ClassicalGraph::is_acyclic() const {
  // Depth-first search with colors.
  int n = static_cast<int>(vertices.size());
  std::vector<std::vector<int>> adj(n);
  for (const auto& e : edges) adj[e.first].push_back(e.second);
  std::vector<int> color(n, 0);
  std::function<bool(int)> dfs = [&](int v) {
    color[v] = 1;
    for (int w : adj[v]) {
      if (color[w] == 1) return false;
      if (color[w] == 0 && !dfs(w)) return false;
    }
    color[v] = 2;
    return true;
  };
  for (int v = 0; v < n; ++v) {
    if (color[v] == 0 && !dfs(v)) return false;
  }
  return true;
}

Eigen::MatrixXi edge_matrix(const ClassicalGraph& e) {
  int m = static_cast<int>(e.edges.size());
  Eigen::MatrixXi a = Eigen::MatrixXi::Zero(m, m);
  for (int p = 0; p < m; ++p) {
    for (int q = 0; q < m; ++q) {
      if (e.edges[p].second == e.edges[q].first) a(p, q) = 1;
    }
  }
  return a;
}

Eigen::MatrixXi adjacency_matrix(const ClassicalGraph& e) {
  int n = static_cast<int>(e.vertices.size());
  Eigen::MatrixXi b = Eigen::MatrixXi::Zero(n, n);
  for (const auto& [s, r] : e.edges) b(s, r) += 1;
  return b;
}

ClassicalGraph line_graph(const ClassicalGraph& e) {
  ClassicalGraph out;
  for (size_t p = 0; p < e.edges.size(); ++p) {
    out.vertices.push_back("e" + std::to_string(p));
  }
  for (size_t p = 0; p < e.edges.size(); ++p) {
    for (size_t q = 0; q < e.edges.size(); ++q) {
      if (e.edges[p].second == e.edges[q].first) {
        out.edges.emplace_back(static_cast<int>(p), static_cast<int>(q));
      }
    }
  }
  return out;
}

QuantumAdjacency::QuantumAdjacency(const QuantumSpace& s,
                                   Eigen::MatrixXcd coeff)
    : coeff_(std::move(coeff)) {
  if (coeff_.rows() != s.dim() || coeff_.cols() != s.dim()) {
    throw ValidationError("adjacency coefficient matrix shape mismatch");
  }
}

QuantumAdjacency QuantumAdjacency::zero(const QuantumSpace& s) {
  return QuantumAdjacency(s, Eigen::MatrixXcd::Zero(s.dim(), s.dim()));
}

cplx QuantumAdjacency::entry(const QuantumSpace& s, const BlockIndex& target,
                             const BlockIndex& source) const {
  return coeff_(s.flat(target), s.flat(source));
}

AlgebraElement QuantumAdjacency::apply(const QuantumSpace& s,
                                       const AlgebraElement& x) const {
  AlgebraElement xa = to_adapted(s, x);
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(s.dim());
  for (const auto& [idx, c] : xa.coeffs) v(s.flat(idx)) += c;
  Eigen::VectorXcd w = coeff_ * v;
  AlgebraElement out{Basis::adapted, {}};
  for (int f = 0; f < s.dim(); ++f) {
    if (std::abs(w(f)) > 0.0) out.coeffs[s.unflat(f)] = w(f);
  }
  return out;
}

AdjacencyCheck check_quantum_adjacency(const QuantumGraph& g) {
  const QuantumSpace& s = g.space;
  const Eigen::MatrixXcd& c = g.adjacency.coeff();
  double dsq = s.delta_sq();
  AdjacencyCheck out;

  // Coefficient identity:
  // sum_{k,s} (1/q_b(s)) A^{rsb}_{ika} A^{snb}_{kja} = delta^2 A^{rnb}_{ija}.
  for (int a = 0; a < s.num_blocks(); ++a) {
    int na = s.block_dim(a);
    for (int b = 0; b < s.num_blocks(); ++b) {
      int nb = s.block_dim(b);
      for (int i = 0; i < na; ++i) {
        for (int j = 0; j < na; ++j) {
          for (int r = 0; r < nb; ++r) {
            for (int n = 0; n < nb; ++n) {
              cplx lhs = 0.0;
              for (int k = 0; k < na; ++k) {
                for (int t = 0; t < nb; ++t) {
                  lhs += c(s.flat(b, r, t), s.flat(a, i, k)) *
                         c(s.flat(b, t, n), s.flat(a, k, j)) / s.weight(b, t);
                }
              }
              cplx rhs = dsq * c(s.flat(b, r, n), s.flat(a, i, j));
              out.coefficient_residual =
                  std::max(out.coefficient_residual, std::abs(lhs - rhs));
            }
          }
        }
      }
    }
  }

  // Dense operator identity m(A tensor A)m* = delta^2 A on every basis unit.
  for (int f = 0; f < s.dim(); ++f) {
    AlgebraElement basis_unit{Basis::adapted, {{s.unflat(f), 1.0}}};
    TwoLegTensor t = mstar(s, basis_unit);
    TwoLegTensor mapped;
    for (const auto& [legs, coeff] : t) {
      AlgebraElement au = g.adjacency.apply(
          s, AlgebraElement{Basis::adapted, {{legs.first, 1.0}}});
      AlgebraElement av = g.adjacency.apply(
          s, AlgebraElement{Basis::adapted, {{legs.second, 1.0}}});
      for (const auto& [u, cu] : au.coeffs) {
        for (const auto& [v, cv] : av.coeffs) {
          mapped[{u, v}] += coeff * cu * cv;
        }
      }
    }
    AlgebraElement lhs = apply_m(s, mapped);
    AlgebraElement rhs = scale(dsq, g.adjacency.apply(s, basis_unit));
    out.operator_residual = std::max(
        out.operator_residual, max_abs_coeff(add(lhs, scale(-1.0, rhs))));
  }
  return out;
}

QuantumAdjacency schur(const QuantumSpace& s, const QuantumAdjacency& a,
                       const QuantumAdjacency& b) {
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(s.dim(), s.dim());
  for (int f = 0; f < s.dim(); ++f) {
    AlgebraElement basis_unit{Basis::adapted, {{s.unflat(f), 1.0}}};
    TwoLegTensor t = mstar(s, basis_unit);
    TwoLegTensor mapped;
    for (const auto& [legs, coeff] : t) {
      AlgebraElement au =
          a.apply(s, AlgebraElement{Basis::adapted, {{legs.first, 1.0}}});
      AlgebraElement av =
          b.apply(s, AlgebraElement{Basis::adapted, {{legs.second, 1.0}}});
      for (const auto& [u, cu] : au.coeffs) {
        for (const auto& [v, cv] : av.coeffs) {
          mapped[{u, v}] += coeff * cu * cv;
        }
      }
    }
    AlgebraElement col = apply_m(s, mapped);
    for (const auto& [idx, c] : col.coeffs) {
      out(s.flat(idx), f) = c / s.delta_sq();
    }
  }
  return QuantumAdjacency(s, std::move(out));
}

QuantumGraph complete_graph(const QuantumSpace& s) {
  Eigen::MatrixXcd c = Eigen::MatrixXcd::Zero(s.dim(), s.dim());
  // A^{klb}_{ija} = delta_ij delta_kl delta^2 (Q_b)_kk.
  for (int a = 0; a < s.num_blocks(); ++a) {
    for (int i = 0; i < s.block_dim(a); ++i) {
      for (int b = 0; b < s.num_blocks(); ++b) {
        for (int k = 0; k < s.block_dim(b); ++k) {
          c(s.flat(b, k, k), s.flat(a, i, i)) = s.delta_sq() * s.weight(b, k);
        }
      }
    }
  }
  return QuantumGraph{s, QuantumAdjacency(s, std::move(c))};
}

QuantumGraph trivial_graph(const QuantumSpace& s) {
  return QuantumGraph{
      s, QuantumAdjacency(s, Eigen::MatrixXcd::Identity(s.dim(), s.dim()))};
}

QuantumGraph diagonal_graph(const QuantumSpace& s,
                            const std::map<BlockIndex, cplx>& x, double tol) {
  auto get = [&](int a, int i, int j) -> cplx {
    auto it = x.find(BlockIndex{a, i, j});
    return it == x.end() ? cplx(0.0) : it->second;
  };
  double residual = 0.0;
  for (int a = 0; a < s.num_blocks(); ++a) {
    for (int k = 0; k < s.block_dim(a); ++k) {
      for (int l = 0; l < s.block_dim(a); ++l) {
        cplx lhs = 0.0;
        for (int t = 0; t < s.block_dim(a); ++t) {
          lhs += get(a, k, t) * get(a, t, l) / s.weight(a, t);
        }
        residual = std::max(residual,
                            std::abs(lhs - s.delta_sq() * get(a, k, l)));
      }
    }
  }
  if (residual > tol) {
    std::ostringstream os;
    os << "diagonal coefficients violate the adjacency condition (residual "
       << residual << ")";
    throw ValidationError(os.str());
  }
  Eigen::MatrixXcd c = Eigen::MatrixXcd::Zero(s.dim(), s.dim());
  for (const auto& [idx, v] : x) c(s.flat(idx), s.flat(idx)) = v;
  return QuantumGraph{s, QuantumAdjacency(s, std::move(c))};
}

bool is_commutative(const QuantumSpace& s) {
  for (int a = 0; a < s.num_blocks(); ++a) {
    if (s.block_dim(a) != 1) return false;
  }
  return true;
}

QuantumGraph from_classical(const ClassicalGraph& e) {
  if (!e.is_simple()) {
    throw ValidationError("classical graph must be simple");
  }
  int n = static_cast<int>(e.vertices.size());
  if (n == 0) throw ValidationError("graph needs at least one vertex");
  QuantumSpace s = QuantumSpace::tracial(std::vector<int>(n, 1));
  Eigen::MatrixXi b = adjacency_matrix(e);
  Eigen::MatrixXcd c = Eigen::MatrixXcd::Zero(n, n);
  // A(e_i) = sum_j B(i,j) e_j; with uniform weights the adapted coefficients
  // are the same numbers.
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) c(j, i) = double(b(i, j));
  }
  return QuantumGraph{s, QuantumAdjacency(s, std::move(c))};
}

Eigen::MatrixXi to_classical(const QuantumGraph& g, double tol) {
  if (!is_commutative(g.space)) {
    throw ValidationError("to_classical requires a commutative space");
  }
  int n = g.space.num_blocks();
  Eigen::MatrixXi b(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      cplx v = g.adjacency.coeff()(j, i);
      int rounded = static_cast<int>(std::lround(v.real()));
      if (std::abs(v - cplx(double(rounded))) > tol ||
          (rounded != 0 && rounded != 1)) {
        throw ValidationError("adjacency entries are not 0/1");
      }
      b(i, j) = rounded;
    }
  }
  return b;
}

QuantumGraph direct_sum(const QuantumGraph& g1, const QuantumGraph& g2) {
  const QuantumSpace& s1 = g1.space;
  const QuantumSpace& s2 = g2.space;
  double dsq = s1.delta_sq() + s2.delta_sq();
  std::vector<int> dims;
  std::vector<Eigen::VectorXd> w;
  for (int a = 0; a < s1.num_blocks(); ++a) {
    dims.push_back(s1.block_dim(a));
    w.push_back(s1.weights(a) * (s1.delta_sq() / dsq));
  }
  for (int a = 0; a < s2.num_blocks(); ++a) {
    dims.push_back(s2.block_dim(a));
    w.push_back(s2.weights(a) * (s2.delta_sq() / dsq));
  }
  QuantumSpace s(std::move(dims), std::move(w));
  // Adapted coefficients are invariant under the per-summand weight
  // rescaling (the adapted units rescale uniformly on both sides).
  Eigen::MatrixXcd c = Eigen::MatrixXcd::Zero(s.dim(), s.dim());
  c.topLeftCorner(s1.dim(), s1.dim()) = g1.adjacency.coeff();
  c.bottomRightCorner(s2.dim(), s2.dim()) = g2.adjacency.coeff();
  return QuantumGraph{s, QuantumAdjacency(s, std::move(c))};
}

QuantumGraph tensor(const QuantumGraph& g1, const QuantumGraph& g2) {
  const QuantumSpace& s1 = g1.space;
  const QuantumSpace& s2 = g2.space;
  // Blocks ordered lexicographically in (a1, a2); within the block
  // (a1, a2), the row index (i1, i2) flattens as i1 * N_{a2} + i2.
  std::vector<int> dims;
  std::vector<Eigen::VectorXd> w;
  for (int a1 = 0; a1 < s1.num_blocks(); ++a1) {
    for (int a2 = 0; a2 < s2.num_blocks(); ++a2) {
      int n1 = s1.block_dim(a1), n2 = s2.block_dim(a2);
      dims.push_back(n1 * n2);
      Eigen::VectorXd v(n1 * n2);
      for (int i1 = 0; i1 < n1; ++i1) {
        for (int i2 = 0; i2 < n2; ++i2) {
          v(i1 * n2 + i2) = s1.weight(a1, i1) * s2.weight(a2, i2);
        }
      }
      w.push_back(std::move(v));
    }
  }
  QuantumSpace s(std::move(dims), std::move(w));
  auto flat_pair = [&](const BlockIndex& u1, const BlockIndex& u2) {
    int a = u1.a * s2.num_blocks() + u2.a;
    int n2 = s2.block_dim(u2.a);
    return s.flat(a, u1.i * n2 + u2.i, u1.j * n2 + u2.j);
  };
  Eigen::MatrixXcd c = Eigen::MatrixXcd::Zero(s.dim(), s.dim());
  for (int f1 = 0; f1 < s1.dim(); ++f1) {
    for (int f2 = 0; f2 < s2.dim(); ++f2) {
      BlockIndex u1 = s1.unflat(f1), u2 = s2.unflat(f2);
      int col = flat_pair(u1, u2);
      for (int h1 = 0; h1 < s1.dim(); ++h1) {
        cplx c1 = g1.adjacency.coeff()(h1, f1);
        if (std::abs(c1) == 0.0) continue;
        for (int h2 = 0; h2 < s2.dim(); ++h2) {
          cplx c2 = g2.adjacency.coeff()(h2, f2);
          if (std::abs(c2) == 0.0) continue;
          c(flat_pair(s1.unflat(h1), s2.unflat(h2)), col) += c1 * c2;
        }
      }
    }
  }
  return QuantumGraph{s, QuantumAdjacency(s, std::move(c))};
}

QuantumGraph amplify(const QuantumGraph& g, int n) {
  return tensor(g, trivial_graph(QuantumSpace::tracial({n})));
}

namespace {

void require_tracial(const QuantumSpace& s) {
  for (int a = 0; a < s.num_blocks(); ++a) {
    double expected = double(s.block_dim(a)) / double(s.dim());
    for (int i = 0; i < s.block_dim(a); ++i) {
      if (std::abs(s.weight(a, i) - expected) > 1e-12) {
        throw ValidationError("operation requires the tracial delta-form");
      }
    }
  }
}

}  // namespace

TwoLegTensor choi_jamiolkowski(const QuantumSpace& s,
                               const QuantumAdjacency& a) {
  require_tracial(s);
  // P = (1/n) sum_{a,i,k} q_i f_ik tensor A(f_ki).
  TwoLegTensor p;
  double n = double(s.dim());
  for (int b = 0; b < s.num_blocks(); ++b) {
    for (int i = 0; i < s.block_dim(b); ++i) {
      for (int k = 0; k < s.block_dim(b); ++k) {
        AlgebraElement img = a.apply(
            s, AlgebraElement{Basis::adapted, {{BlockIndex{b, k, i}, 1.0}}});
        for (const auto& [v, c] : img.coeffs) {
          p[{BlockIndex{b, i, k}, v}] += s.weight(b, i) / n * c;
        }
      }
    }
  }
  return p;
}

QuantumAdjacency cj_inverse(const QuantumSpace& s, const TwoLegTensor& p) {
  require_tracial(s);
  double n = double(s.dim());
  Eigen::MatrixXcd c = Eigen::MatrixXcd::Zero(s.dim(), s.dim());
  for (const auto& [legs, v] : p) {
    const auto& [u, beta] = legs;
    // P coeff at (f_{(a,i,k)}, f_beta) = (q_i / n) A_{beta,(a,k,i)}.
    c(s.flat(beta), s.flat(u.a, u.j, u.i)) = v * n / s.weight(u.a, u.i);
  }
  return QuantumAdjacency(s, std::move(c));
}

TwoLegTensor two_leg_op_product(const QuantumSpace& s, const TwoLegTensor& p,
                                const TwoLegTensor& q) {
  TwoLegTensor out;
  for (const auto& [lp, cp] : p) {
    for (const auto& [lq, cq] : q) {
      const auto& [u, v] = lp;
      const auto& [x, y] = lq;
      // First leg: f_u f_x; second leg (opposite algebra): f_y f_v.
      if (u.a != x.a || u.j != x.i) continue;
      if (y.a != v.a || y.j != v.i) continue;
      cplx c = cp * cq / (s.weight(u.a, u.j) * s.weight(y.a, y.j));
      out[{BlockIndex{u.a, u.i, x.j}, BlockIndex{y.a, y.i, v.j}}] += c;
    }
  }
  return out;
}

double two_leg_max_abs(const TwoLegTensor& p) {
  double m = 0.0;
  for (const auto& [legs, c] : p) m = std::max(m, std::abs(c));
  return m;
}

TwoLegTensor two_leg_sub(const TwoLegTensor& p, const TwoLegTensor& q) {
  TwoLegTensor out = p;
  for (const auto& [legs, c] : q) out[legs] -= c;
  return out;
}

QuantumAdjacency subspace_to_adjacency(
    int n, const std::vector<Eigen::MatrixXcd>& basis_s,
    const std::optional<std::vector<Eigen::MatrixXcd>>& basis_r) {
  if (n < 1) throw ValidationError("matrix size must be positive");
  int nn = n * n;
  auto vec = [&](const Eigen::MatrixXcd& m) {
    Eigen::VectorXcd v(nn);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) v(i * n + j) = m(i, j);
    }
    return v;
  };
  int k = static_cast<int>(basis_s.size());
  Eigen::MatrixXcd vs(nn, k);
  for (int c = 0; c < k; ++c) vs.col(c) = vec(basis_s[c]);

  Eigen::MatrixXcd vr;
  if (basis_r) {
    vr.resize(nn, static_cast<int>(basis_r->size()));
    for (size_t c = 0; c < basis_r->size(); ++c) {
      vr.col(static_cast<int>(c)) = vec((*basis_r)[c]);
    }
  } else {
    // Trace-orthogonal complement via a full QR of the span.
    Eigen::HouseholderQR<Eigen::MatrixXcd> qr(vs);
    Eigen::MatrixXcd qfull = qr.householderQ();
    vr = qfull.rightCols(nn - k);
  }
  if (k + vr.cols() != nn) {
    throw ValidationError("subspace and complement do not span M_N");
  }
  Eigen::MatrixXcd v(nn, nn);
  v.leftCols(k) = vs;
  v.rightCols(vr.cols()) = vr;
  Eigen::FullPivLU<Eigen::MatrixXcd> lu(v);
  if (!lu.isInvertible()) {
    throw ValidationError("subspace + complement basis is singular");
  }
  Eigen::MatrixXcd diag = Eigen::MatrixXcd::Zero(nn, nn);
  for (int c = 0; c < k; ++c) diag(c, c) = 1.0;
  // Idempotent map projecting onto span(basis_s) along span(basis_r),
  // acting on row-major vectorized matrices.
  Eigen::MatrixXcd t = v * diag * lu.inverse();

  QuantumSpace space = QuantumSpace::tracial({n});
  // Two-leg form of the map z -> sum P_{(i,p),(q,l)} e_ip z e_ql:
  // P_std((i,p),(q,l)) = T((i,l),(p,q)).
  TwoLegTensor p;
  double scale = 1.0 / double(nn);  // e_ij = f_ij / N per leg
  for (int i = 0; i < n; ++i) {
    for (int pidx = 0; pidx < n; ++pidx) {
      for (int q = 0; q < n; ++q) {
        for (int l = 0; l < n; ++l) {
          cplx c = t(i * n + l, pidx * n + q);
          if (std::abs(c) > 1e-14) {
            p[{BlockIndex{0, i, pidx}, BlockIndex{0, q, l}}] += c * scale;
          }
        }
      }
    }
  }
  return cj_inverse(space, p);
}

}  // namespace qck
