// SPDX-License-Identifier: Apache-2.0
#include "qck/presentation.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <numeric>

namespace qck {

namespace {
constexpr double kCoeffEps = 1e-14;
}

void poly_add(Polynomial& p, const Monomial& m, cplx c) {
  if (std::abs(c) < kCoeffEps) return;
  auto [it, inserted] = p.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (std::abs(it->second) < kCoeffEps) p.erase(it);
  }
}

double poly_diff(const Polynomial& p, const Polynomial& q) {
  double d = 0.0;
  for (const auto& [m, c] : p) {
    auto it = q.find(m);
    d = std::max(d, std::abs(c - (it == q.end() ? cplx(0.0) : it->second)));
  }
  for (const auto& [m, c] : q) {
    if (!p.count(m)) d = std::max(d, std::abs(c));
  }
  return d;
}

Presentation qck_presentation(const QuantumGraph& g) {
  const QuantumSpace& s = g.space;
  Presentation p;
  p.generators.reserve(s.dim());
  for (int f = 0; f < s.dim(); ++f) {
    BlockIndex b = s.unflat(f);
    p.generators.push_back("S(" + std::to_string(b.a + 1) + "," +
                           std::to_string(b.i + 1) + "," +
                           std::to_string(b.j + 1) + ")");
  }
  auto gen = [&](int a, int i, int j, bool star) {
    return GenRef{s.flat(a, i, j), star};
  };
  // Partial-isometry relations: sum_{rs} S_ir S_sr* S_sj - S_ij per (a,i,j).
  for (int f = 0; f < s.dim(); ++f) {
    BlockIndex bi = s.unflat(f);
    int a = bi.a, i = bi.i, j = bi.j, n = s.block_dim(a);
    Relation rel;
    rel.name = "pi(" + std::to_string(a + 1) + "," + std::to_string(i + 1) +
               "," + std::to_string(j + 1) + ")";
    for (int r = 0; r < n; ++r) {
      for (int t = 0; t < n; ++t) {
        poly_add(rel.poly, {gen(a, i, r, false), gen(a, t, r, true),
                            gen(a, t, j, false)},
                 1.0);
      }
    }
    poly_add(rel.poly, {gen(a, i, j, false)}, -1.0);
    p.relations.push_back(std::move(rel));
  }
  // Adjacency-coupled relations:
  // sum_l S_li* S_lj - sum_{brs} A^{rsb}_{ija} sum_l S_rl S_sl* per (a,i,j).
  const Eigen::MatrixXcd& a_coeff = g.adjacency.coeff();
  for (int f = 0; f < s.dim(); ++f) {
    BlockIndex bi = s.unflat(f);
    int a = bi.a, i = bi.i, j = bi.j, n = s.block_dim(a);
    Relation rel;
    rel.name = "ck(" + std::to_string(a + 1) + "," + std::to_string(i + 1) +
               "," + std::to_string(j + 1) + ")";
    for (int l = 0; l < n; ++l) {
      poly_add(rel.poly, {gen(a, l, i, true), gen(a, l, j, false)}, 1.0);
    }
    for (int b = 0; b < s.num_blocks(); ++b) {
      int nb = s.block_dim(b);
      for (int r = 0; r < nb; ++r) {
        for (int t = 0; t < nb; ++t) {
          cplx c = a_coeff(s.flat(b, r, t), f);
          if (std::abs(c) < kCoeffEps) continue;
          for (int l = 0; l < nb; ++l) {
            poly_add(rel.poly, {gen(b, r, l, false), gen(b, t, l, true)}, -c);
          }
        }
      }
    }
    p.relations.push_back(std::move(rel));
  }
  return p;
}

Presentation free_ck_presentation(const Eigen::MatrixXi& a) {
  int n = static_cast<int>(a.rows());
  if (a.cols() != n || n == 0) throw ValidationError("adjacency must be square");
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (a(i, j) != 0 && a(i, j) != 1) {
        throw ValidationError("adjacency entries must be 0/1");
      }
    }
  }
  Presentation p;
  for (int i = 0; i < n; ++i) p.generators.push_back("S" + std::to_string(i + 1));
  for (int i = 0; i < n; ++i) {
    Relation rel;
    rel.name = "pi(" + std::to_string(i + 1) + ")";
    poly_add(rel.poly, {{i, false}, {i, true}, {i, false}}, 1.0);
    poly_add(rel.poly, {{i, false}}, -1.0);
    p.relations.push_back(std::move(rel));
  }
  for (int i = 0; i < n; ++i) {
    Relation rel;
    rel.name = "ck(" + std::to_string(i + 1) + ")";
    poly_add(rel.poly, {{i, true}, {i, false}}, 1.0);
    for (int j = 0; j < n; ++j) {
      if (a(i, j)) poly_add(rel.poly, {{j, false}, {j, true}}, -1.0);
    }
    p.relations.push_back(std::move(rel));
  }
  return p;
}

Presentation ck_presentation(const Eigen::MatrixXi& a) {
  Presentation p = free_ck_presentation(a);
  int n = static_cast<int>(a.rows());
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      Relation rel;
      rel.name = "orth(" + std::to_string(i + 1) + "," +
                 std::to_string(j + 1) + ")";
      poly_add(rel.poly, {{i, true}, {j, false}}, 1.0);
      p.relations.push_back(std::move(rel));
    }
  }
  return p;
}

Presentation graph_presentation(const ClassicalGraph& e, bool free) {
  int nv = static_cast<int>(e.vertices.size());
  int ne = static_cast<int>(e.edges.size());
  if (nv == 0) throw ValidationError("graph needs at least one vertex");
  Presentation p;
  for (int v = 0; v < nv; ++v) p.generators.push_back("P:" + e.vertices[v]);
  for (int k = 0; k < ne; ++k) {
    p.generators.push_back("S:" + e.vertices[e.edges[k].first] + "->" +
                           e.vertices[e.edges[k].second] + "#" +
                           std::to_string(k + 1));
  }
  auto pv = [](int v, bool star) { return GenRef{v, star}; };
  auto se = [&](int k, bool star) { return GenRef{nv + k, star}; };
  for (int v = 0; v < nv; ++v) {
    Relation herm{"herm(" + e.vertices[v] + ")", {}};
    poly_add(herm.poly, {pv(v, true)}, 1.0);
    poly_add(herm.poly, {pv(v, false)}, -1.0);
    p.relations.push_back(std::move(herm));
    Relation idem{"idem(" + e.vertices[v] + ")", {}};
    poly_add(idem.poly, {pv(v, false), pv(v, false)}, 1.0);
    poly_add(idem.poly, {pv(v, false)}, -1.0);
    p.relations.push_back(std::move(idem));
  }
  for (int k = 0; k < ne; ++k) {
    Relation rel{"range(" + std::to_string(k + 1) + ")", {}};
    poly_add(rel.poly, {se(k, true), se(k, false)}, 1.0);
    poly_add(rel.poly, {pv(e.edges[k].second, false)}, -1.0);
    p.relations.push_back(std::move(rel));
  }
  std::vector<int> sinks = e.sinks();
  for (int v = 0; v < nv; ++v) {
    if (std::find(sinks.begin(), sinks.end(), v) != sinks.end()) continue;
    Relation rel{"source(" + e.vertices[v] + ")", {}};
    poly_add(rel.poly, {pv(v, false)}, 1.0);
    for (int k = 0; k < ne; ++k) {
      if (e.edges[k].first == v) {
        poly_add(rel.poly, {se(k, false), se(k, true)}, -1.0);
      }
    }
    p.relations.push_back(std::move(rel));
  }
  if (!free) {
    for (int v = 0; v < nv; ++v) {
      for (int w = v + 1; w < nv; ++w) {
        Relation rel{"vorth(" + e.vertices[v] + "," + e.vertices[w] + ")", {}};
        poly_add(rel.poly, {pv(v, false), pv(w, false)}, 1.0);
        p.relations.push_back(std::move(rel));
      }
    }
    for (int k = 0; k < ne; ++k) {
      for (int l = k + 1; l < ne; ++l) {
        Relation rel{"eorth(" + std::to_string(k + 1) + "," +
                         std::to_string(l + 1) + ")",
                     {}};
        poly_add(rel.poly, {se(k, true), se(l, false)}, 1.0);
        p.relations.push_back(std::move(rel));
      }
    }
  }
  return p;
}

std::vector<CuntzElement> qcc_homo_assignment(const QuantumSpace& s) {
  int n = s.dim();
  if (n < 2) throw ValidationError("target Cuntz algebra needs n >= 2");
  double delta = std::sqrt(s.delta_sq());
  std::vector<CuntzElement> images;
  images.reserve(n);
  for (int f = 0; f < n; ++f) {
    BlockIndex b = s.unflat(f);
    double scale = 1.0 / (std::sqrt(s.weight(b.a, b.i)) * delta);
    images.push_back(cplx(scale) * CuntzElement::generator(n, f));
  }
  return images;
}

std::vector<cplx> diagonal_character(const QuantumSpace& s,
                                     const std::map<BlockIndex, cplx>& x,
                                     const std::vector<cplx>& eps, double tol) {
  if (s.num_blocks() != 1) {
    throw ValidationError("diagonal character needs a single block");
  }
  int n = s.block_dim(0);
  if (static_cast<int>(eps.size()) != n) {
    throw ValidationError("need one scalar per row");
  }
  double norm = 0.0;
  for (const cplx& v : eps) norm += std::norm(v);
  if (std::abs(norm - 1.0) > tol) {
    throw ValidationError("scalars must be a unit vector");
  }
  auto it = x.find(BlockIndex{0, 0, 0});
  cplx x11 = it == x.end() ? cplx(0.0) : it->second;
  if (std::abs(x11 * std::norm(eps[0]) - cplx(1.0)) > tol) {
    throw ValidationError("leading coefficient constraint violated");
  }
  std::vector<cplx> images(n * n, 0.0);
  for (int i = 0; i < n; ++i) images[i * n] = eps[i];
  return images;
}

DegeneracyScan degeneracy_scan(const Presentation& p) {
  DegeneracyScan scan;
  std::vector<bool> vanish(p.generators.size(), false);
  for (int r = 0; r < static_cast<int>(p.relations.size()); ++r) {
    const Polynomial& poly = p.relations[r].poly;
    if (poly.empty()) continue;
    bool matches = true;
    for (const auto& [m, c] : poly) {
      if (m.size() != 2 || m[0].gen != m[1].gen || !m[0].star || m[1].star ||
          std::abs(c.imag()) > kCoeffEps || c.real() <= 0.0) {
        matches = false;
        break;
      }
    }
    if (!matches) continue;
    scan.relations.push_back(r);
    for (const auto& [m, c] : poly) vanish[m[0].gen] = true;
  }
  for (int g = 0; g < static_cast<int>(vanish.size()); ++g) {
    if (vanish[g]) scan.vanishing_generators.push_back(g);
  }
  return scan;
}

PathFamily ck_family_on_paths(const ClassicalGraph& e) {
  if (!e.is_acyclic()) throw ValidationError("graph must be acyclic");
  int nv = static_cast<int>(e.vertices.size());
  int ne = static_cast<int>(e.edges.size());
  PathFamily fam;
  // Length-0 paths at sinks, then grow by prepending edges.
  for (int v : e.sinks()) fam.paths.push_back({v, {}});
  auto source_of = [&](const std::pair<int, std::vector<int>>& p) {
    return p.second.empty() ? p.first : e.edges[p.second.front()].first;
  };
  for (size_t k = 0; k < fam.paths.size(); ++k) {
    int src = source_of(fam.paths[k]);
    for (int ed = 0; ed < ne; ++ed) {
      if (e.edges[ed].second != src) continue;
      auto longer = fam.paths[k];
      longer.second.insert(longer.second.begin(), ed);
      fam.paths.push_back(std::move(longer));
    }
  }
  fam.dim = static_cast<int>(fam.paths.size());
  int d = fam.dim;
  auto index_of = [&](const std::pair<int, std::vector<int>>& p) {
    for (int k = 0; k < d; ++k) {
      if (fam.paths[k] == p) return k;
    }
    throw ValidationError("internal path lookup failure");
  };
  for (int v = 0; v < nv; ++v) {
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(d, d);
    for (int k = 0; k < d; ++k) {
      if (source_of(fam.paths[k]) == v) m(k, k) = 1.0;
    }
    fam.images.push_back(std::move(m));
  }
  for (int ed = 0; ed < ne; ++ed) {
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(d, d);
    for (int k = 0; k < d; ++k) {
      if (source_of(fam.paths[k]) != e.edges[ed].second) continue;
      auto longer = fam.paths[k];
      longer.second.insert(longer.second.begin(), ed);
      m(index_of(longer), k) = 1.0;
    }
    fam.images.push_back(std::move(m));
  }
  return fam;
}

HomotopyReport rotation_homotopy_check(
    const ClassicalGraph& e, const std::vector<Eigen::MatrixXcd>& images,
    double t, int base_vertex) {
  int nv = static_cast<int>(e.vertices.size());
  int ne = static_cast<int>(e.edges.size());
  if (static_cast<int>(images.size()) != nv + ne) {
    throw ValidationError("family must cover all vertices and edges");
  }
  int d = static_cast<int>(images[0].rows());
  Presentation pres = graph_presentation(e, /*free=*/false);
  HomotopyReport report;
  report.input = check_assignment(pres, images);
  if (!report.input.pass()) {
    throw ValidationError("input family violates the graph relations");
  }
  int w = base_vertex;
  if (w < 0) {
    w = 0;
    for (int v = 1; v < nv; ++v) {
      if (e.vertices[v] < e.vertices[w]) w = v;
    }
  }
  Eigen::MatrixXcd id_big = Eigen::MatrixXcd::Identity(nv * d, nv * d);
  auto place = [&](int x, int y, const Eigen::MatrixXcd& m) {
    Eigen::MatrixXcd big = Eigen::MatrixXcd::Zero(nv * d, nv * d);
    big.block(x * d, y * d, d, d) = m;
    return big;
  };
  // Block-diagonal representation.
  std::vector<Eigen::MatrixXcd> phi;
  for (int v = 0; v < nv; ++v) phi.push_back(place(v, v, images[v]));
  for (int k = 0; k < ne; ++k) {
    phi.push_back(place(e.edges[k].first, e.edges[k].second, images[nv + k]));
  }
  report.phi = check_assignment(pres, phi);
  // Rotation homotopy from the corner embedding at the base vertex.
  auto u_rot = [&](int x) {
    Eigen::MatrixXcd u = id_big;
    if (x == w) return u;
    double c = std::cos(2 * std::numbers::pi * t);
    double sn = std::sin(2 * std::numbers::pi * t);
    Eigen::MatrixXcd idd = Eigen::MatrixXcd::Identity(d, d);
    u.block(w * d, w * d, d, d) = c * idd;
    u.block(w * d, x * d, d, d) = sn * idd;
    u.block(x * d, w * d, d, d) = -sn * idd;
    u.block(x * d, x * d, d, d) = c * idd;
    return u;
  };
  std::vector<Eigen::MatrixXcd> mu;
  for (int v = 0; v < nv; ++v) {
    Eigen::MatrixXcd uv = u_rot(v);
    mu.push_back(uv * place(w, w, images[v]) * uv.adjoint());
  }
  for (int k = 0; k < ne; ++k) {
    Eigen::MatrixXcd us = u_rot(e.edges[k].first);
    Eigen::MatrixXcd ur = u_rot(e.edges[k].second);
    mu.push_back(us * place(w, w, images[nv + k]) * ur.adjoint());
  }
  report.mu = check_assignment(pres, mu);
  return report;
}

std::vector<std::vector<int>> presentation_split_check(const Presentation& p) {
  int n = static_cast<int>(p.generators.size());
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    return parent[x] == x ? x : parent[x] = find(parent[x]);
  };
  for (const auto& rel : p.relations) {
    int first = -1;
    for (const auto& [m, c] : rel.poly) {
      for (const GenRef& g : m) {
        if (first < 0) {
          first = g.gen;
        } else {
          parent[find(g.gen)] = find(first);
        }
      }
    }
  }
  std::map<int, std::vector<int>> comps;
  for (int g = 0; g < n; ++g) comps[find(g)].push_back(g);
  std::vector<std::vector<int>> out;
  for (auto& [root, members] : comps) out.push_back(std::move(members));
  return out;
}

ConsistencyReport classical_consistency_check(const ClassicalGraph& e,
                                              double tol) {
  if (!e.is_simple()) throw ValidationError("graph must be simple");
  Presentation from_quantum = qck_presentation(from_classical(e));
  Presentation from_matrix = free_ck_presentation(adjacency_matrix(e));
  ConsistencyReport report;
  report.match = true;
  if (from_quantum.relations.size() != from_matrix.relations.size() ||
      from_quantum.generators.size() != from_matrix.generators.size()) {
    report.match = false;
    report.first_mismatch = 0;
    return report;
  }
  for (size_t r = 0; r < from_quantum.relations.size(); ++r) {
    double d = poly_diff(from_quantum.relations[r].poly,
                         from_matrix.relations[r].poly);
    report.max_coeff_diff = std::max(report.max_coeff_diff, d);
    if (d > tol && report.match) {
      report.match = false;
      report.first_mismatch = static_cast<int>(r);
    }
  }
  return report;
}

}  // namespace qck
