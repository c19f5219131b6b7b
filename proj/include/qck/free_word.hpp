// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "qck/types.hpp"

namespace qck {

// An element of the non-unital free product of m copies of C(S^1).
// Letters are u_x^k for a factor index x in {0..m-1} and k in Z; k = 0 is
// the unit 1_x of factor x, which is a genuine letter here because the
// free product carries no global unit.  Words are alternating: adjacent
// letters always come from distinct factors.
class FreeWordElement {
 public:
  using Letter = std::pair<int, int>;  // (factor, exponent)
  using Word = std::vector<Letter>;

  explicit FreeWordElement(int m) : m_(m) {
    if (m < 1) throw ValidationError("free product needs at least one factor");
  }

  static FreeWordElement zero(int m) { return FreeWordElement(m); }
  // u_x^k (k = 0 gives the unit of factor x).
  static FreeWordElement letter(int m, int x, int k) {
    FreeWordElement e(m);
    if (x < 0 || x >= m) throw ValidationError("factor index out of range");
    e.terms_[{{x, k}}] = 1.0;
    return e;
  }
  static FreeWordElement factor_unit(int m, int x) { return letter(m, x, 0); }

  int factors() const { return m_; }
  const std::map<Word, cplx>& terms() const { return terms_; }

  FreeWordElement& operator+=(const FreeWordElement& other) {
    check_same(other);
    for (const auto& [w, c] : other.terms_) add_term(w, c);
    return *this;
  }
  friend FreeWordElement operator+(FreeWordElement a,
                                   const FreeWordElement& b) {
    a += b;
    return a;
  }
  friend FreeWordElement operator-(const FreeWordElement& a,
                                   const FreeWordElement& b) {
    return a + (cplx(-1.0) * b);
  }
  friend FreeWordElement operator*(cplx c, const FreeWordElement& a) {
    FreeWordElement out(a.m_);
    for (const auto& [w, v] : a.terms_) out.add_term(w, c * v);
    return out;
  }

  friend FreeWordElement operator*(const FreeWordElement& a,
                                   const FreeWordElement& b) {
    a.check_same(b);
    FreeWordElement out(a.m_);
    for (const auto& [wa, ca] : a.terms_) {
      for (const auto& [wb, cb] : b.terms_) {
        Word w = wa;
        if (!w.empty() && !wb.empty() && w.back().first == wb.front().first) {
          // Boundary exponents add; the merged letter keeps neighbors from
          // other factors on both sides, so one merge suffices.
          w.back().second += wb.front().second;
          w.insert(w.end(), wb.begin() + 1, wb.end());
        } else {
          w.insert(w.end(), wb.begin(), wb.end());
        }
        out.add_term(std::move(w), ca * cb);
      }
    }
    return out;
  }

  friend FreeWordElement adjoint(const FreeWordElement& a) {
    FreeWordElement out(a.m_);
    for (const auto& [w, c] : a.terms_) {
      Word rw(w.rbegin(), w.rend());
      for (auto& l : rw) l.second = -l.second;
      out.add_term(std::move(rw), std::conj(c));
    }
    return out;
  }

  friend double zero_norm(const FreeWordElement& a) {
    double norm = 0.0;
    for (const auto& [w, c] : a.terms_) norm = std::max(norm, std::abs(c));
    return norm;
  }
  friend bool is_zero(const FreeWordElement& a,
                      double tol = kDefaultTolerance) {
    return zero_norm(a) <= tol;
  }

  friend FreeWordElement unit_element(const FreeWordElement&) {
    throw ValidationError("non-unital free product has no global unit");
  }
  friend FreeWordElement zero_like(const FreeWordElement& proto) {
    return FreeWordElement::zero(proto.m_);
  }

  friend std::string to_string(const FreeWordElement& a) {
    if (a.terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, c] : a.terms_) {
      if (!first) os << " + ";
      first = false;
      os << "(" << c.real() << (c.imag() < 0 ? "" : "+") << c.imag() << "i)";
      for (const auto& [x, k] : w) os << " u" << x << "^" << k;
    }
    return os.str();
  }

 private:
  void check_same(const FreeWordElement& other) const {
    if (m_ != other.m_) throw ValidationError("free product size mismatch");
  }
  void add_term(Word w, cplx c) {
    if (w.empty()) throw ValidationError("empty word in non-unital product");
    auto [it, inserted] = terms_.try_emplace(std::move(w), c);
    if (!inserted) {
      it->second += c;
      if (it->second == cplx(0.0)) terms_.erase(it);
    } else if (c == cplx(0.0)) {
      terms_.erase(it);
    }
  }

  int m_;
  std::map<Word, cplx> terms_;
};

}  // namespace qck
