// SPDX-License-Identifier: Apache-2.0
#include "qck/json_io.hpp"

#include <fstream>
#include <iostream>

namespace qck {

namespace {

using nlohmann::json;

// Converts a 1-based wire index to 0-based, validating presence and type.
int wire_index(const json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number_integer()) {
    throw IOError(std::string("missing integer field '") + key + "'");
  }
  int v = j[key].get<int>();
  if (v < 1) throw IOError(std::string("field '") + key + "' must be >= 1");
  return v - 1;
}

cplx wire_complex(const json& j) {
  double re = j.value("re", 0.0);
  double im = j.value("im", 0.0);
  return cplx(re, im);
}

Basis wire_basis(const json& j) {
  std::string b = j.value("basis", "adapted");
  if (b == "adapted") return Basis::adapted;
  if (b == "standard") return Basis::standard;
  throw IOError("unknown basis '" + b + "'");
}

}  // namespace

json load_json_file(const std::string& path) {
  json j;
  try {
    if (path == "-") {
      std::cin >> j;
      return j;
    }
    std::ifstream in(path);
    if (!in) throw IOError("cannot open '" + path + "'");
    in >> j;
  } catch (const json::parse_error& e) {
    throw IOError("cannot parse '" + path + "': " + e.what());
  }
  return j;
}

QuantumSpace space_from_json(const json& j) {
  if (!j.contains("blocks") || !j["blocks"].is_array() || j["blocks"].empty()) {
    throw IOError("space needs a nonempty 'blocks' array");
  }
  std::vector<int> dims;
  std::vector<Eigen::VectorXd> weights;
  for (const auto& blk : j["blocks"]) {
    if (!blk.contains("dim") || !blk["dim"].is_number_integer()) {
      throw IOError("block needs an integer 'dim'");
    }
    int n = blk["dim"].get<int>();
    if (n < 1) throw IOError("block dimension must be >= 1");
    dims.push_back(n);
    if (!blk.contains("q") || !blk["q"].is_array() ||
        static_cast<int>(blk["q"].size()) != n) {
      throw IOError("block needs a 'q' array of length dim");
    }
    Eigen::VectorXd q(n);
    for (int i = 0; i < n; ++i) q(i) = blk["q"][i].get<double>();
    weights.push_back(q);
  }
  return QuantumSpace(std::move(dims), std::move(weights));
}

json space_to_json(const QuantumSpace& s) {
  json blocks = json::array();
  for (int a = 0; a < s.num_blocks(); ++a) {
    json q = json::array();
    for (int i = 0; i < s.block_dim(a); ++i) q.push_back(s.weight(a, i));
    blocks.push_back({{"dim", s.block_dim(a)}, {"q", q}});
  }
  return json{{"blocks", blocks}};
}

AlgebraElement algebra_vector_from_json(const QuantumSpace& s, const json& j) {
  AlgebraElement x;
  x.basis = wire_basis(j);
  if (!j.contains("terms") || !j["terms"].is_array()) {
    throw IOError("algebra vector needs a 'terms' array");
  }
  for (const auto& t : j["terms"]) {
    BlockIndex idx{wire_index(t, "a"), wire_index(t, "i"), wire_index(t, "j")};
    if (idx.a >= s.num_blocks() || idx.i >= s.block_dim(idx.a) ||
        idx.j >= s.block_dim(idx.a)) {
      throw IOError("algebra vector index out of range");
    }
    x.coeffs[idx] += wire_complex(t);
  }
  return x;
}

json algebra_vector_to_json(const AlgebraElement& x) {
  json terms = json::array();
  for (const auto& [idx, c] : x.coeffs) {
    terms.push_back({{"a", idx.a + 1},
                     {"i", idx.i + 1},
                     {"j", idx.j + 1},
                     {"re", c.real()},
                     {"im", c.imag()}});
  }
  return json{
      {"basis", x.basis == Basis::adapted ? "adapted" : "standard"},
      {"terms", terms}};
}

QuantumGraph qgraph_from_json(const json& j) {
  if (!j.contains("space")) throw IOError("quantum graph needs a 'space'");
  QuantumSpace s = space_from_json(j["space"]);
  if (!j.contains("adjacency")) {
    throw IOError("quantum graph needs an 'adjacency'");
  }
  const json& adj = j["adjacency"];
  if (wire_basis(adj) != Basis::adapted) {
    throw IOError("adjacency coefficients must use the adapted basis");
  }
  if (!adj.contains("coeffs") || !adj["coeffs"].is_array()) {
    throw IOError("adjacency needs a 'coeffs' array");
  }
  Eigen::MatrixXcd coeff = Eigen::MatrixXcd::Zero(s.dim(), s.dim());
  for (const auto& t : adj["coeffs"]) {
    BlockIndex src{wire_index(t, "a"), wire_index(t, "i"), wire_index(t, "j")};
    BlockIndex dst{wire_index(t, "b"), wire_index(t, "r"), wire_index(t, "s")};
    if (src.a >= s.num_blocks() || src.i >= s.block_dim(src.a) ||
        src.j >= s.block_dim(src.a) || dst.a >= s.num_blocks() ||
        dst.i >= s.block_dim(dst.a) || dst.j >= s.block_dim(dst.a)) {
      throw IOError("adjacency coefficient index out of range");
    }
    coeff(s.flat(dst), s.flat(src)) += wire_complex(t);
  }
  return QuantumGraph{s, QuantumAdjacency(s, std::move(coeff))};
}

json qgraph_to_json(const QuantumGraph& g) {
  const QuantumSpace& s = g.space;
  json coeffs = json::array();
  const Eigen::MatrixXcd& m = g.adjacency.coeff();
  for (int col = 0; col < s.dim(); ++col) {
    BlockIndex src = s.unflat(col);
    for (int row = 0; row < s.dim(); ++row) {
      cplx c = m(row, col);
      if (c == cplx(0.0)) continue;
      BlockIndex dst = s.unflat(row);
      coeffs.push_back({{"a", src.a + 1},
                        {"i", src.i + 1},
                        {"j", src.j + 1},
                        {"b", dst.a + 1},
                        {"r", dst.i + 1},
                        {"s", dst.j + 1},
                        {"re", c.real()},
                        {"im", c.imag()}});
    }
  }
  return json{{"space", space_to_json(s)},
              {"adjacency", {{"basis", "adapted"}, {"coeffs", coeffs}}}};
}

ClassicalGraph classical_from_json(const json& j) {
  if (!j.contains("vertices") || !j["vertices"].is_array() ||
      j["vertices"].empty()) {
    throw IOError("classical graph needs a nonempty 'vertices' array");
  }
  ClassicalGraph e;
  for (const auto& v : j["vertices"]) {
    if (!v.is_string()) throw IOError("vertex labels must be strings");
    e.vertices.push_back(v.get<std::string>());
  }
  if (j.contains("edges")) {
    if (!j["edges"].is_array()) throw IOError("'edges' must be an array");
    for (const auto& edge : j["edges"]) {
      if (!edge.is_array() || edge.size() != 2) {
        throw IOError("each edge must be a [source, range] pair");
      }
      try {
        int s = e.vertex_index(edge[0].get<std::string>());
        int r = e.vertex_index(edge[1].get<std::string>());
        e.edges.push_back({s, r});
      } catch (const ValidationError& err) {
        throw IOError(err.what());
      }
    }
  }
  return e;
}

json classical_to_json(const ClassicalGraph& e) {
  json edges = json::array();
  for (const auto& [s, r] : e.edges) {
    edges.push_back({e.vertices[s], e.vertices[r]});
  }
  return json{{"vertices", e.vertices}, {"edges", edges}};
}

UnitaryErrorBasis ueb_from_json(const json& j) {
  if (!j.contains("n") || !j["n"].is_number_integer()) {
    throw IOError("unitary error basis needs an integer 'n'");
  }
  int n = j["n"].get<int>();
  if (n < 1) throw IOError("'n' must be >= 1");
  if (!j.contains("matrices") || !j["matrices"].is_array() ||
      static_cast<int>(j["matrices"].size()) != n * n) {
    throw IOError("unitary error basis needs n^2 matrices");
  }
  UnitaryErrorBasis w;
  w.n = n;
  for (const auto& mat : j["matrices"]) {
    if (!mat.is_array() || static_cast<int>(mat.size()) != n * n) {
      throw IOError("each matrix needs n^2 row-major [re,im] entries");
    }
    Eigen::MatrixXcd m(n, n);
    for (int k = 0; k < n * n; ++k) {
      const auto& entry = mat[k];
      if (!entry.is_array() || entry.size() != 2) {
        throw IOError("matrix entries must be [re,im] pairs");
      }
      m(k / n, k % n) = cplx(entry[0].get<double>(), entry[1].get<double>());
    }
    w.matrices.push_back(std::move(m));
  }
  return w;
}

json ueb_to_json(const UnitaryErrorBasis& w) {
  json mats = json::array();
  for (const auto& m : w.matrices) {
    json flat = json::array();
    for (int i = 0; i < m.rows(); ++i) {
      for (int j2 = 0; j2 < m.cols(); ++j2) {
        flat.push_back({m(i, j2).real(), m(i, j2).imag()});
      }
    }
    mats.push_back(flat);
  }
  return json{{"n", w.n}, {"matrices", mats}};
}

json presentation_to_json(const Presentation& p) {
  json rels = json::array();
  for (const auto& rel : p.relations) {
    json terms = json::array();
    for (const auto& [mono, c] : rel.poly) {
      json word = json::array();
      for (const auto& g : mono) {
        word.push_back({{"gen", g.gen + 1}, {"star", g.star}});
      }
      terms.push_back({{"word", word}, {"re", c.real()}, {"im", c.imag()}});
    }
    rels.push_back({{"name", rel.name}, {"terms", terms}});
  }
  return json{{"generators", p.generators}, {"relations", rels}};
}

json report_to_json(const CheckReport& r, double tol) {
  json out = json::array();
  for (size_t k = 0; k < r.residuals.size(); ++k) {
    out.push_back({{"relation", static_cast<int>(k)},
                   {"residual", r.residuals[k]},
                   {"pass", r.residuals[k] <= tol}});
  }
  return out;
}

json report_to_json(const NamedReport& r, double tol) {
  json out = json::array();
  for (size_t k = 0; k < r.checks.size(); ++k) {
    out.push_back({{"relation", static_cast<int>(k)},
                   {"name", r.checks[k].name},
                   {"residual", r.checks[k].residual},
                   {"pass", r.checks[k].residual <= tol}});
  }
  return out;
}

}  // namespace qck
