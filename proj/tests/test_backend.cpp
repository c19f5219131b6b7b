// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qck/cuntz.hpp"
#include "qck/free_word.hpp"
#include "qck/matrix_over.hpp"
#include "qck/unital_free_word.hpp"

using namespace qck;

namespace {

std::mt19937 rng(20260823);

cplx random_coeff() {
  std::uniform_real_distribution<double> d(-1.0, 1.0);
  return {d(rng), d(rng)};
}

CuntzElement random_cuntz(int n, int nterms, int max_len) {
  std::uniform_int_distribution<int> len(0, max_len);
  std::uniform_int_distribution<int> gen(0, n - 1);
  CuntzElement e = CuntzElement::zero(n);
  for (int t = 0; t < nterms; ++t) {
    CuntzElement::Word mu(len(rng)), nu(len(rng));
    for (auto& x : mu) x = gen(rng);
    for (auto& x : nu) x = gen(rng);
    CuntzElement term = CuntzElement::unit(n);
    for (int x : mu) term = term * CuntzElement::generator(n, x);
    for (auto it = nu.rbegin(); it != nu.rend(); ++it) {
      term = term * adjoint(CuntzElement::generator(n, *it));
    }
    e += random_coeff() * term;
  }
  return e;
}

FreeWordElement random_free_word(int m, int nterms, int max_len) {
  std::uniform_int_distribution<int> len(1, max_len);
  std::uniform_int_distribution<int> fac(0, m - 1);
  std::uniform_int_distribution<int> expo(-2, 2);
  FreeWordElement e = FreeWordElement::zero(m);
  for (int t = 0; t < nterms; ++t) {
    int l = len(rng);
    FreeWordElement w = FreeWordElement::letter(m, fac(rng), expo(rng));
    for (int i = 1; i < l; ++i) {
      w = w * FreeWordElement::letter(m, fac(rng), expo(rng));
    }
    e += random_coeff() * w;
  }
  return e;
}

FreeProductContextPtr amp_context(int n) {
  auto ctx = std::make_shared<FreeProductContext>();
  ctx->push_back(std::make_shared<MatrixBlockFactor>(n));
  ctx->push_back(std::make_shared<LaurentCircleFactor>());
  return ctx;
}

UnitalFreeWordElement random_unital(const FreeProductContextPtr& ctx, int n,
                                    int nterms, int max_len) {
  std::uniform_int_distribution<int> len(0, max_len);
  std::uniform_int_distribution<int> fac(0, 1);
  std::uniform_int_distribution<int> mcode(0, n * n - 2);
  std::uniform_int_distribution<int> lcode(-2, 2);
  UnitalFreeWordElement e = UnitalFreeWordElement::zero(ctx);
  for (int t = 0; t < nterms; ++t) {
    int l = len(rng);
    UnitalFreeWordElement w = UnitalFreeWordElement::unit(ctx);
    for (int i = 0; i < l; ++i) {
      int f = fac(rng);
      int code = f == 0 ? mcode(rng) : lcode(rng);
      w = w * UnitalFreeWordElement::letter(ctx, f, code);
    }
    e += random_coeff() * w;
  }
  return e;
}

}  // namespace

TEST_CASE("isometry family: range projections sum to the unit") {
  for (int n = 2; n <= 4; ++n) {
    CuntzElement one = CuntzElement::unit(n);
    CuntzElement sum = CuntzElement::zero(n);
    for (int i = 0; i < n; ++i) {
      CuntzElement s = CuntzElement::generator(n, i);
      CHECK(zero_norm(adjoint(s) * s - one) == doctest::Approx(0.0));
      sum += s * adjoint(s);
    }
    CHECK(zero_norm(sum - one) == doctest::Approx(0.0));
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        if (i == j) continue;
        CuntzElement si = CuntzElement::generator(n, i);
        CuntzElement sj = CuntzElement::generator(n, j);
        CHECK(zero_norm(adjoint(si) * sj) == doctest::Approx(0.0));
      }
    }
  }
}

TEST_CASE("worked product: s0* (s0 s1 s1*) = s1 s1*") {
  int n = 2;
  CuntzElement s0 = CuntzElement::generator(n, 0);
  CuntzElement s1 = CuntzElement::generator(n, 1);
  CuntzElement lhs = adjoint(s0) * (s0 * s1 * adjoint(s1));
  CuntzElement rhs = s1 * adjoint(s1);
  CHECK(zero_norm(lhs - rhs) == doctest::Approx(0.0));
}

TEST_CASE("normal-form zero test is depth-stable") {
  for (int n = 2; n <= 3; ++n) {
    for (int rep = 0; rep < 20; ++rep) {
      CuntzElement a = random_cuntz(n, 4, 3);
      CHECK(a.expanded_norm(0) ==
            doctest::Approx(a.expanded_norm(1)).epsilon(1e-12));
      // Rewriting x as sum_i x s_i s_i* must not change the normal form.
      CuntzElement rewritten = CuntzElement::zero(n);
      for (int i = 0; i < n; ++i) {
        CuntzElement s = CuntzElement::generator(n, i);
        rewritten += a * s * adjoint(s);
      }
      CHECK(zero_norm(a - rewritten) < 1e-12);
    }
  }
}

TEST_CASE("word algebra laws hold on random elements") {
  for (int rep = 0; rep < 15; ++rep) {
    CuntzElement a = random_cuntz(2, 3, 2), b = random_cuntz(2, 3, 2),
                 c = random_cuntz(2, 3, 2);
    CHECK(zero_norm((a * b) * c - a * (b * c)) < 1e-12);
    CHECK(zero_norm(a * (b + c) - (a * b + a * c)) < 1e-12);
    CHECK(zero_norm(adjoint(a * b) - adjoint(b) * adjoint(a)) < 1e-12);
    CHECK(zero_norm(adjoint(adjoint(a)) - a) < 1e-12);
  }
}

TEST_CASE("single-generator Cuntz data is rejected") {
  CHECK_THROWS_AS(CuntzElement::unit(1), ValidationError);
}

TEST_CASE("circle free product: factor units and unitaries") {
  int m = 3;
  FreeWordElement u0 = FreeWordElement::letter(m, 0, 1);
  FreeWordElement one0 = FreeWordElement::factor_unit(m, 0);
  CHECK(zero_norm(u0 * adjoint(u0) - one0) == doctest::Approx(0.0));
  CHECK(zero_norm(adjoint(u0) * u0 - one0) == doctest::Approx(0.0));
  CHECK(zero_norm(one0 * u0 - u0) == doctest::Approx(0.0));
  // Units of distinct factors do not merge: 1_0 1_1 is a length-2 word.
  FreeWordElement prod = one0 * FreeWordElement::factor_unit(m, 1);
  REQUIRE(prod.terms().size() == 1);
  CHECK(prod.terms().begin()->first.size() == 2);
  CHECK_THROWS_AS(unit_element(u0), ValidationError);
}

TEST_CASE("circle free product laws on random elements") {
  for (int rep = 0; rep < 15; ++rep) {
    FreeWordElement a = random_free_word(2, 3, 3),
                    b = random_free_word(2, 3, 3),
                    c = random_free_word(2, 3, 3);
    CHECK(zero_norm((a * b) * c - a * (b * c)) < 1e-12);
    CHECK(zero_norm(a * (b + c) - (a * b + a * c)) < 1e-12);
    CHECK(zero_norm(adjoint(a * b) - adjoint(b) * adjoint(a)) < 1e-12);
    CHECK(zero_norm(adjoint(adjoint(a)) - a) < 1e-12);
    // All stored words alternate between factors.
    FreeWordElement ab = a * b;
    for (const auto& [w, cf] : ab.terms()) {
      for (size_t i = 1; i < w.size(); ++i) {
        CHECK(w[i].first != w[i - 1].first);
      }
    }
  }
}

TEST_CASE("unital free product: matrix-corner rewriting") {
  auto ctx = amp_context(2);
  auto e = [&](int i, int j) { return matrix_unit_element(ctx, 0, i, j); };
  UnitalFreeWordElement one = UnitalFreeWordElement::unit(ctx);
  // e10 e01 = e11 = 1 - e00 (splice through the excluded corner).
  CHECK(zero_norm(e(1, 0) * e(0, 1) - e(1, 1)) == doctest::Approx(0.0));
  CHECK(zero_norm(e(1, 1) - (one - e(0, 0))) == doctest::Approx(0.0));
  CHECK(zero_norm(e(1, 1) * e(1, 1) - e(1, 1)) == doctest::Approx(0.0));
  CHECK(zero_norm(e(0, 1) * e(1, 0) - e(0, 0)) == doctest::Approx(0.0));
  CHECK(zero_norm(e(0, 1) * e(0, 1)) == doctest::Approx(0.0));
  CHECK(zero_norm(adjoint(e(0, 1)) - e(1, 0)) == doctest::Approx(0.0));
  // Partition of unity.
  CHECK(zero_norm(e(0, 0) + e(1, 1) - one) == doctest::Approx(0.0));
}

TEST_CASE("unital free product: circle-summand letters") {
  auto ctx = amp_context(2);
  UnitalFreeWordElement s = UnitalFreeWordElement::letter(ctx, 1, 1);
  UnitalFreeWordElement p = adjoint(s) * s;  // (z^0, 0): a proper projection
  UnitalFreeWordElement one = UnitalFreeWordElement::unit(ctx);
  CHECK(zero_norm(p * p - p) == doctest::Approx(0.0));
  CHECK(zero_norm(p - one) > 0.5);  // distinct from the global unit
  CHECK(zero_norm(s * p - s) == doctest::Approx(0.0));
  CHECK(zero_norm(p * s - s) == doctest::Approx(0.0));
  // Compression by a matrix unit is a nonzero word and squares consistently.
  auto e00 = matrix_unit_element(ctx, 0, 0, 0);
  UnitalFreeWordElement x = e00 * s * e00;
  CHECK(zero_norm(x) > 0.5);
  CHECK(zero_norm(x * x - e00 * s * e00 * s * e00) == doctest::Approx(0.0));
}

TEST_CASE("unital free product laws on random elements") {
  auto ctx = amp_context(2);
  for (int rep = 0; rep < 12; ++rep) {
    auto a = random_unital(ctx, 2, 3, 3);
    auto b = random_unital(ctx, 2, 3, 3);
    auto c = random_unital(ctx, 2, 3, 3);
    CHECK(zero_norm((a * b) * c - a * (b * c)) < 1e-12);
    CHECK(zero_norm(a * (b + c) - (a * b + a * c)) < 1e-12);
    CHECK(zero_norm(adjoint(a * b) - adjoint(b) * adjoint(a)) < 1e-12);
    CHECK(zero_norm(adjoint(adjoint(a)) - a) < 1e-12);
    auto one = unit_element(a);
    CHECK(zero_norm(one * a - a) < 1e-12);
    CHECK(zero_norm(a * one - a) < 1e-12);
  }
}

TEST_CASE("matrices over scalars agree with the dense oracle") {
  std::uniform_real_distribution<double> d(-1.0, 1.0);
  for (int rep = 0; rep < 10; ++rep) {
    int k = 3;
    Eigen::MatrixXcd ma = Eigen::MatrixXcd::Zero(k, k),
                     mb = Eigen::MatrixXcd::Zero(k, k);
    MatrixOver<cplx> a(k, k, cplx(0.0)), b(k, k, cplx(0.0));
    for (int i = 0; i < k; ++i) {
      for (int j = 0; j < k; ++j) {
        ma(i, j) = random_coeff();
        mb(i, j) = random_coeff();
        a(i, j) = ma(i, j);
        b(i, j) = mb(i, j);
      }
    }
    Eigen::MatrixXcd mp = ma * mb;
    MatrixOver<cplx> p = a * b;
    double err = 0.0;
    for (int i = 0; i < k; ++i) {
      for (int j = 0; j < k; ++j) {
        err = std::max(err, std::abs(p(i, j) - mp(i, j)));
      }
    }
    CHECK(err < 1e-12);
    MatrixOver<cplx> adj = adjoint(a);
    for (int i = 0; i < k; ++i) {
      for (int j = 0; j < k; ++j) {
        CHECK(std::abs(adj(i, j) - std::conj(ma(j, i))) < 1e-14);
      }
    }
  }
}

TEST_CASE("matrices over word elements: ring laws and tensor products") {
  int n = 2, k = 2;
  CuntzElement proto = CuntzElement::zero(n);
  for (int rep = 0; rep < 6; ++rep) {
    MatrixOver<CuntzElement> a(k, k, proto), b(k, k, proto), c(k, k, proto);
    for (int i = 0; i < k; ++i) {
      for (int j = 0; j < k; ++j) {
        a(i, j) = random_cuntz(n, 2, 2);
        b(i, j) = random_cuntz(n, 2, 2);
        c(i, j) = random_cuntz(n, 2, 2);
      }
    }
    CHECK(zero_norm((a * b) * c - a * (b * c)) < 1e-12);
    CHECK(zero_norm(adjoint(a * b) - adjoint(b) * adjoint(a)) < 1e-12);
    auto one = unit_element(a);
    CHECK(zero_norm(one * a - a) < 1e-12);
  }
  // (x (x) m)(y (x) m') = xy (x) mm'.
  for (int rep = 0; rep < 6; ++rep) {
    CuntzElement x = random_cuntz(n, 2, 2), y = random_cuntz(n, 2, 2);
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Random(k, k),
                     mp = Eigen::MatrixXcd::Random(k, k);
    auto lhs = kron_with_matrix(x, m) * kron_with_matrix(y, mp);
    auto rhs = kron_with_matrix(x * y, Eigen::MatrixXcd(m * mp));
    CHECK(zero_norm(lhs - rhs) < 1e-12);
  }
}
