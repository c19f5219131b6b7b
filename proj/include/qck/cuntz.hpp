// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "qck/types.hpp"

namespace qck {

// An element of the dense *-subalgebra of the Cuntz algebra O_n spanned by
// words s_mu s_nu* (mu, nu words over {0..n-1}, possibly empty).
class CuntzElement {
 public:
  using Word = std::vector<int>;
  using Key = std::pair<Word, Word>;

  explicit CuntzElement(int n) : n_(n) {
    if (n < 2) throw ValidationError("Cuntz backend requires n >= 2");
  }

  static CuntzElement zero(int n) { return CuntzElement(n); }
  static CuntzElement unit(int n) {
    CuntzElement e(n);
    e.terms_[{{}, {}}] = 1.0;
    return e;
  }
  static CuntzElement generator(int n, int i) {
    if (i < 0 || i >= n) throw ValidationError("generator index out of range");
    CuntzElement e(n);
    e.terms_[{{i}, {}}] = 1.0;
    return e;
  }

  int n() const { return n_; }
  const std::map<Key, cplx>& terms() const { return terms_; }

  CuntzElement& operator+=(const CuntzElement& other) {
    check_same(other);
    for (const auto& [k, c] : other.terms_) add_term(k, c);
    return *this;
  }

  friend CuntzElement operator+(CuntzElement a, const CuntzElement& b) {
    a += b;
    return a;
  }
  friend CuntzElement operator-(const CuntzElement& a, const CuntzElement& b) {
    return a + (cplx(-1.0) * b);
  }
  friend CuntzElement operator*(cplx c, const CuntzElement& a) {
    CuntzElement out(a.n_);
    for (const auto& [k, v] : a.terms_) out.add_term(k, c * v);
    return out;
  }

  // (s_mu s_nu*)(s_alpha s_beta*) = s_{mu a''} s_beta* if alpha = nu a'',
  // s_mu s_{beta nu''}* if nu = alpha nu'', 0 otherwise.
  friend CuntzElement operator*(const CuntzElement& a, const CuntzElement& b) {
    a.check_same(b);
    CuntzElement out(a.n_);
    for (const auto& [ka, ca] : a.terms_) {
      for (const auto& [kb, cb] : b.terms_) {
        const Word& nu = ka.second;
        const Word& alpha = kb.first;
        if (is_prefix(nu, alpha)) {
          Word mu = ka.first;
          mu.insert(mu.end(), alpha.begin() + nu.size(), alpha.end());
          out.add_term({std::move(mu), kb.second}, ca * cb);
        } else if (is_prefix(alpha, nu)) {
          Word beta = kb.second;
          beta.insert(beta.end(), nu.begin() + alpha.size(), nu.end());
          out.add_term({ka.first, std::move(beta)}, ca * cb);
        }
      }
    }
    return out;
  }

  friend CuntzElement adjoint(const CuntzElement& a) {
    CuntzElement out(a.n_);
    for (const auto& [k, c] : a.terms_) {
      out.add_term({k.second, k.first}, std::conj(c));
    }
    return out;
  }

  // Max-magnitude coefficient of the normal form obtained by expanding
  // every term via s_mu s_nu* = sum_i s_{mu i} s_{nu i}* until all terms
  // share the maximal min(|mu|,|nu|) present.
  friend double zero_norm(const CuntzElement& a) {
    return a.expanded_norm(0);
  }

  // Same expansion pushed `extra` levels past the minimal common depth
  // (used to test consistency of the normal form).
  double expanded_norm(int extra) const {
    size_t depth = 0;
    for (const auto& [k, c] : terms_) {
      depth = std::max(depth, std::min(k.first.size(), k.second.size()));
    }
    depth += static_cast<size_t>(extra);
    std::map<Key, cplx> expanded;
    for (const auto& [k, c] : terms_) {
      size_t m = std::min(k.first.size(), k.second.size());
      size_t levels = depth - m;
      double count = 1.0;
      for (size_t l = 0; l < levels; ++l) {
        count *= n_;
        if (count > 1e7) throw ValidationError("Cuntz expansion too large");
      }
      Word suffix(levels, 0);
      while (true) {
        Word mu = k.first, nu = k.second;
        mu.insert(mu.end(), suffix.begin(), suffix.end());
        nu.insert(nu.end(), suffix.begin(), suffix.end());
        expanded[{std::move(mu), std::move(nu)}] += c;
        // Advance the suffix odometer.
        size_t pos = 0;
        for (; pos < levels; ++pos) {
          if (++suffix[pos] < n_) break;
          suffix[pos] = 0;
        }
        if (pos == levels) break;
      }
    }
    double norm = 0.0;
    for (const auto& [k, c] : expanded) norm = std::max(norm, std::abs(c));
    return norm;
  }

  friend bool is_zero(const CuntzElement& a, double tol = kDefaultTolerance) {
    return zero_norm(a) <= tol;
  }

  friend CuntzElement unit_element(const CuntzElement& proto) {
    return CuntzElement::unit(proto.n_);
  }
  friend CuntzElement zero_like(const CuntzElement& proto) {
    return CuntzElement::zero(proto.n_);
  }

  friend std::string to_string(const CuntzElement& a) {
    if (a.terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : a.terms_) {
      if (!first) os << " + ";
      first = false;
      os << "(" << c.real() << (c.imag() < 0 ? "" : "+") << c.imag() << "i)";
      os << " s[";
      for (size_t i = 0; i < k.first.size(); ++i) {
        os << (i ? "," : "") << k.first[i];
      }
      os << "] s*[";
      for (size_t i = 0; i < k.second.size(); ++i) {
        os << (i ? "," : "") << k.second[i];
      }
      os << "]";
    }
    return os.str();
  }

 private:
  void check_same(const CuntzElement& other) const {
    if (n_ != other.n_) throw ValidationError("Cuntz backend size mismatch");
  }
  void add_term(const Key& k, cplx c) {
    auto [it, inserted] = terms_.try_emplace(k, c);
    if (!inserted) {
      it->second += c;
      if (it->second == cplx(0.0)) terms_.erase(it);
    } else if (c == cplx(0.0)) {
      terms_.erase(it);
    }
  }
  static bool is_prefix(const Word& p, const Word& w) {
    return p.size() <= w.size() && std::equal(p.begin(), p.end(), w.begin());
  }

  int n_;
  std::map<Key, cplx> terms_;
};

}  // namespace qck
