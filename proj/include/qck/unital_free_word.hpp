// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <map>
#include <memory>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "qck/types.hpp"

namespace qck {

// One factor of a unital free product, described by a finite-or-countable
// set of integer-coded basis letters spanning a complement of the unit.
// Products of letters land in span{1, letters}; adjoints of letters are
// scalar multiples of letters.
struct FreeFactorTerm {
  cplx unit_coeff = 0.0;
  std::vector<std::pair<cplx, int>> letters;
};

class FreeFactor {
 public:
  virtual ~FreeFactor() = default;
  virtual FreeFactorTerm multiply(int a, int b) const = 0;
  virtual std::pair<cplx, int> adjoint_letter(int a) const = 0;
  virtual std::string letter_name(int a) const = 0;
};

// M_n with complement basis {e_ij : (i,j) != (n-1,n-1)}; letter code i*n+j.
// Products hitting e_{n-1,n-1} are rewritten as 1 - sum_{t<n-1} e_tt.
class MatrixBlockFactor : public FreeFactor {
 public:
  explicit MatrixBlockFactor(int n) : n_(n) {
    if (n < 1) throw ValidationError("matrix factor needs n >= 1");
  }
  int n() const { return n_; }

  FreeFactorTerm multiply(int a, int b) const override {
    int i = a / n_, j = a % n_, k = b / n_, l = b % n_;
    FreeFactorTerm out;
    if (j != k) return out;
    if (i == n_ - 1 && l == n_ - 1) {
      out.unit_coeff = 1.0;
      for (int t = 0; t < n_ - 1; ++t) out.letters.push_back({-1.0, t * n_ + t});
    } else {
      out.letters.push_back({1.0, i * n_ + l});
    }
    return out;
  }
  std::pair<cplx, int> adjoint_letter(int a) const override {
    int i = a / n_, j = a % n_;
    return {1.0, j * n_ + i};
  }
  std::string letter_name(int a) const override {
    return "e" + std::to_string(a / n_) + std::to_string(a % n_);
  }

 private:
  int n_;
};

// C(S^1) (+) C with complement basis {(z^k, 0) : k in Z}; letter code k.
// Note (z^0, 0) is an idempotent distinct from the unit (1, 1).
class LaurentCircleFactor : public FreeFactor {
 public:
  FreeFactorTerm multiply(int a, int b) const override {
    FreeFactorTerm out;
    out.letters.push_back({1.0, a + b});
    return out;
  }
  std::pair<cplx, int> adjoint_letter(int a) const override {
    return {1.0, -a};
  }
  std::string letter_name(int a) const override {
    return "(z^" + std::to_string(a) + ",0)";
  }
};

using FreeProductContext =
    std::vector<std::shared_ptr<const FreeFactor>>;
using FreeProductContextPtr = std::shared_ptr<const FreeProductContext>;

// An element of the unital free product of the context's factors, stored as
// unit_coeff * 1 + sum of coefficients on alternating words of letters.
class UnitalFreeWordElement {
 public:
  using Letter = std::pair<int, int>;  // (factor index, letter code)
  using Word = std::vector<Letter>;

  explicit UnitalFreeWordElement(FreeProductContextPtr ctx)
      : ctx_(std::move(ctx)) {
    if (!ctx_ || ctx_->empty()) {
      throw ValidationError("free product context must be nonempty");
    }
  }

  static UnitalFreeWordElement zero(FreeProductContextPtr ctx) {
    return UnitalFreeWordElement(std::move(ctx));
  }
  static UnitalFreeWordElement unit(FreeProductContextPtr ctx) {
    UnitalFreeWordElement e(std::move(ctx));
    e.unit_ = 1.0;
    return e;
  }
  static UnitalFreeWordElement letter(FreeProductContextPtr ctx, int factor,
                                      int code) {
    UnitalFreeWordElement e(ctx);
    if (factor < 0 || factor >= static_cast<int>(ctx->size())) {
      throw ValidationError("factor index out of range");
    }
    e.terms_[{{factor, code}}] = 1.0;
    return e;
  }

  const FreeProductContextPtr& context() const { return ctx_; }
  cplx unit_coeff() const { return unit_; }
  const std::map<Word, cplx>& terms() const { return terms_; }

  UnitalFreeWordElement& operator+=(const UnitalFreeWordElement& other) {
    check_same(other);
    unit_ += other.unit_;
    for (const auto& [w, c] : other.terms_) add_term(w, c);
    return *this;
  }
  friend UnitalFreeWordElement operator+(UnitalFreeWordElement a,
                                         const UnitalFreeWordElement& b) {
    a += b;
    return a;
  }
  friend UnitalFreeWordElement operator-(const UnitalFreeWordElement& a,
                                         const UnitalFreeWordElement& b) {
    return a + (cplx(-1.0) * b);
  }
  friend UnitalFreeWordElement operator*(cplx c,
                                         const UnitalFreeWordElement& a) {
    UnitalFreeWordElement out(a.ctx_);
    out.unit_ = c * a.unit_;
    for (const auto& [w, v] : a.terms_) out.add_term(w, c * v);
    return out;
  }

  friend UnitalFreeWordElement operator*(const UnitalFreeWordElement& a,
                                         const UnitalFreeWordElement& b) {
    a.check_same(b);
    UnitalFreeWordElement out(a.ctx_);
    out.unit_ = a.unit_ * b.unit_;
    for (const auto& [w, c] : a.terms_) out.add_scaled(w, b.unit_ * c);
    for (const auto& [w, c] : b.terms_) out.add_scaled(w, a.unit_ * c);
    for (const auto& [wa, ca] : a.terms_) {
      for (const auto& [wb, cb] : b.terms_) {
        out.add_scaled_element(a.mul_words(wa, wb), ca * cb);
      }
    }
    return out;
  }

  friend UnitalFreeWordElement adjoint(const UnitalFreeWordElement& a) {
    UnitalFreeWordElement out(a.ctx_);
    out.unit_ = std::conj(a.unit_);
    for (const auto& [w, c] : a.terms_) {
      Word rw;
      rw.reserve(w.size());
      cplx coeff = std::conj(c);
      for (auto it = w.rbegin(); it != w.rend(); ++it) {
        auto [lc, code] = (*a.ctx_)[it->first]->adjoint_letter(it->second);
        coeff *= lc;
        rw.push_back({it->first, code});
      }
      out.add_term(std::move(rw), coeff);
    }
    return out;
  }

  friend double zero_norm(const UnitalFreeWordElement& a) {
    double norm = std::abs(a.unit_);
    for (const auto& [w, c] : a.terms_) norm = std::max(norm, std::abs(c));
    return norm;
  }
  friend bool is_zero(const UnitalFreeWordElement& a,
                      double tol = kDefaultTolerance) {
    return zero_norm(a) <= tol;
  }

  friend UnitalFreeWordElement unit_element(const UnitalFreeWordElement& p) {
    return UnitalFreeWordElement::unit(p.ctx_);
  }
  friend UnitalFreeWordElement zero_like(const UnitalFreeWordElement& p) {
    return UnitalFreeWordElement::zero(p.ctx_);
  }

  friend std::string to_string(const UnitalFreeWordElement& a) {
    std::ostringstream os;
    bool first = true;
    if (a.unit_ != cplx(0.0)) {
      os << "(" << a.unit_.real() << (a.unit_.imag() < 0 ? "" : "+")
         << a.unit_.imag() << "i) 1";
      first = false;
    }
    for (const auto& [w, c] : a.terms_) {
      if (!first) os << " + ";
      first = false;
      os << "(" << c.real() << (c.imag() < 0 ? "" : "+") << c.imag() << "i)";
      for (const auto& [f, code] : w) {
        os << " F" << f << ":" << (*a.ctx_)[f]->letter_name(code);
      }
    }
    if (first) return "0";
    return os.str();
  }

 private:
  void check_same(const UnitalFreeWordElement& other) const {
    if (ctx_ != other.ctx_) {
      throw ValidationError("free product context mismatch");
    }
  }
  void add_term(Word w, cplx c) {
    if (w.empty()) {
      unit_ += c;
      return;
    }
    auto [it, inserted] = terms_.try_emplace(std::move(w), c);
    if (!inserted) {
      it->second += c;
      if (it->second == cplx(0.0)) terms_.erase(it);
    } else if (c == cplx(0.0)) {
      terms_.erase(it);
    }
  }
  void add_scaled(const Word& w, cplx c) {
    if (c != cplx(0.0)) add_term(w, c);
  }
  void add_scaled_element(const UnitalFreeWordElement& e, cplx c) {
    if (c == cplx(0.0)) return;
    unit_ += c * e.unit_;
    for (const auto& [w, v] : e.terms_) add_term(w, c * v);
  }

  // Product of two alternating words; splices at the boundary and recurses
  // on the unit part of the factor product (total length strictly drops).
  UnitalFreeWordElement mul_words(const Word& a, const Word& b) const {
    UnitalFreeWordElement out(ctx_);
    if (a.empty() || b.empty()) {
      Word w = a;
      w.insert(w.end(), b.begin(), b.end());
      out.add_term(std::move(w), 1.0);
      return out;
    }
    if (a.back().first != b.front().first) {
      Word w = a;
      w.insert(w.end(), b.begin(), b.end());
      out.add_term(std::move(w), 1.0);
      return out;
    }
    int f = a.back().first;
    FreeFactorTerm ft =
        (*ctx_)[f]->multiply(a.back().second, b.front().second);
    Word a2(a.begin(), a.end() - 1);
    Word b2(b.begin() + 1, b.end());
    if (ft.unit_coeff != cplx(0.0)) {
      out.add_scaled_element(mul_words(a2, b2), ft.unit_coeff);
    }
    for (const auto& [c, code] : ft.letters) {
      Word w = a2;
      w.push_back({f, code});
      w.insert(w.end(), b2.begin(), b2.end());
      out.add_term(std::move(w), c);
    }
    return out;
  }

  FreeProductContextPtr ctx_;
  cplx unit_ = 0.0;
  std::map<Word, cplx> terms_;
};

// e_ij in the matrix factor `factor` of the context, including the excluded
// corner e_{n-1,n-1} = 1 - sum_{t<n-1} e_tt.
inline UnitalFreeWordElement matrix_unit_element(
    const FreeProductContextPtr& ctx, int factor, int i, int j) {
  auto mb = std::dynamic_pointer_cast<const MatrixBlockFactor>((*ctx)[factor]);
  if (!mb) throw ValidationError("factor is not a matrix block");
  int n = mb->n();
  if (i < 0 || i >= n || j < 0 || j >= n) {
    throw ValidationError("matrix unit index out of range");
  }
  if (i == n - 1 && j == n - 1) {
    UnitalFreeWordElement out = UnitalFreeWordElement::unit(ctx);
    for (int t = 0; t < n - 1; ++t) {
      out += cplx(-1.0) *
             UnitalFreeWordElement::letter(ctx, factor, t * n + t);
    }
    return out;
  }
  return UnitalFreeWordElement::letter(ctx, factor, i * n + j);
}

}  // namespace qck
