#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "atap/scalar_poly.hpp"

using namespace atap;

namespace {

std::mt19937_64 rng(20240811);

cplx rand_cplx(double lo = -2.0, double hi = 2.0) {
  std::uniform_real_distribution<double> d(lo, hi);
  const double re = d(rng);
  const double im = d(rng);
  return {re, im};
}

bool close(cplx a, cplx b, double tol = 1e-10) { return std::abs(a - b) <= tol; }

}  // namespace

TEST_CASE("cheb_eval base values and small indices") {
  const cplx v = rand_cplx();
  CHECK(close(cheb_eval(0, v), cplx(1.0)));
  CHECK(close(cheb_eval(1, v), v));
  CHECK(close(cheb_eval(-1, v), cplx(0.0)));
  CHECK(close(cheb_eval(-2, v), cplx(-1.0)));
  // S_k(2) = k + 1
  CHECK(close(cheb_eval(3, cplx(2.0)), cplx(4.0)));
  CHECK(close(cheb_eval(7, cplx(2.0)), cplx(8.0)));
}

TEST_CASE("cheb recurrence holds for all integer indices") {
  for (long k = -15; k <= 15; ++k) {
    for (int trial = 0; trial < 50; ++trial) {
      const cplx v = rand_cplx();
      const cplx lhs = cheb_eval(k, v);
      const cplx rhs = v * cheb_eval(k - 1, v) - cheb_eval(k - 2, v);
      CHECK(std::abs(lhs - rhs) <= 1e-10 * (1.0 + std::abs(lhs)));
    }
  }
}

TEST_CASE("cheb_coeffs known vectors and negative-index mirror") {
  const DensePoly s2 = cheb_coeffs(2);
  REQUIRE(s2.coeffs.size() == 3);
  CHECK(close(s2.coeffs[0], cplx(-1.0)));
  CHECK(close(s2.coeffs[1], cplx(0.0)));
  CHECK(close(s2.coeffs[2], cplx(1.0)));

  const DensePoly s3 = cheb_coeffs(3);
  REQUIRE(s3.coeffs.size() == 4);
  CHECK(close(s3.coeffs[1], cplx(-2.0)));
  CHECK(close(s3.coeffs[3], cplx(1.0)));

  const DensePoly sm3 = cheb_coeffs(-3);  // -v
  REQUIRE(sm3.coeffs.size() == 2);
  CHECK(close(sm3.coeffs[0], cplx(0.0)));
  CHECK(close(sm3.coeffs[1], cplx(-1.0)));

  CHECK(cheb_coeffs(-1).is_zero());

  for (long k = -10; k <= 10; ++k) {
    const cplx v = rand_cplx();
    const cplx via_coeffs = poly_eval(cheb_coeffs(k), v);
    const cplx direct = cheb_eval(k, v);
    CHECK(std::abs(via_coeffs - direct) <= 1e-10 * (1.0 + std::abs(direct)));
  }
}

TEST_CASE("poly_roots on quadratics") {
  const auto r1 = poly_roots(DensePoly{cplx(-1.0), cplx(0.0), cplx(1.0)});  // t^2 - 1
  REQUIRE(r1.size() == 2);
  CHECK(close(r1[0], cplx(-1.0), 1e-9));
  CHECK(close(r1[1], cplx(1.0), 1e-9));

  const auto r2 = poly_roots(DensePoly{cplx(1.0), cplx(0.0), cplx(1.0)});  // t^2 + 1
  REQUIRE(r2.size() == 2);
  CHECK(close(r2[0], cplx(0.0, -1.0), 1e-9));
  CHECK(close(r2[1], cplx(0.0, 1.0), 1e-9));
}

TEST_CASE("poly_roots: y + 1 - x^2 at x = 2 has the single root 3") {
  const auto r = poly_roots(DensePoly{cplx(-3.0), cplx(1.0)});
  REQUIRE(r.size() == 1);
  CHECK(close(r[0], cplx(3.0), 1e-12));
}

TEST_CASE("poly_roots residual and count on random polynomials") {
  for (int trial = 0; trial < 30; ++trial) {
    std::uniform_int_distribution<int> dd(1, 8);
    const int deg = dd(rng);
    std::vector<cplx> c(deg + 1);
    for (cplx& v : c) v = rand_cplx();
    if (std::abs(c.back()) < 0.2) c.back() += cplx(1.0);
    const DensePoly p(c);
    const auto roots = poly_roots(p);
    CHECK(static_cast<int>(roots.size()) == p.degree());
    for (const cplx& r : roots) CHECK(std::abs(poly_eval(p, r)) <= 1e-7 * p.sup_norm());
  }
}

TEST_CASE("poly_roots rejects zero and constant input") {
  CHECK_THROWS_AS(poly_roots(DensePoly{}), DegenerateInput);
  CHECK_THROWS_AS(poly_roots(DensePoly{cplx(4.0)}), DegenerateInput);
}

TEST_CASE("poly_compose") {
  // v^2 after y+1 -> y^2 + 2y + 1
  const DensePoly sq{cplx(0.0), cplx(0.0), cplx(1.0)};
  const DensePoly shift{cplx(1.0), cplx(1.0)};
  const DensePoly got = poly_compose(sq, shift);
  REQUIRE(got.coeffs.size() == 3);
  CHECK(close(got.coeffs[0], cplx(1.0)));
  CHECK(close(got.coeffs[1], cplx(2.0)));
  CHECK(close(got.coeffs[2], cplx(1.0)));

  // S_1 is the identity under composition
  std::vector<cplx> zc(5);
  for (cplx& v : zc) v = rand_cplx();
  const DensePoly z(zc);
  const DensePoly id = poly_compose(cheb_coeffs(1), z);
  CHECK(laurent_sup_diff(laurent_from_dense(id), laurent_from_dense(z)) < 1e-12);

  // S_2 composed with v stays v^2 - 1
  const DensePoly s2v = poly_compose(cheb_coeffs(2), DensePoly::variable());
  CHECK(close(s2v.coeffs[0], cplx(-1.0)));
  CHECK(close(s2v.coeffs[2], cplx(1.0)));
}

TEST_CASE("laurent arithmetic") {
  const LaurentPoly t_minus_1(0, {cplx(-1.0), cplx(1.0)});
  const LaurentPoly t_inv(-1, {cplx(1.0)});
  const LaurentPoly prod = t_minus_1 * t_inv;  // 1 - t^-1
  CHECK(prod.min_exp == -1);
  REQUIRE(prod.coeffs.size() == 2);
  CHECK(close(prod.coeffs[0], cplx(-1.0)));
  CHECK(close(prod.coeffs[1], cplx(1.0)));

  const LaurentPoly one_minus_t(0, {cplx(1.0), cplx(-1.0)});
  CHECK((t_minus_1 + one_minus_t).is_zero());

  const LaurentPoly q(0, {cplx(1.0), cplx(1.0), cplx(1.0)});
  CHECK(close(laurent_eval(q, cplx(1.0)), cplx(3.0)));
  CHECK_THROWS_AS(laurent_eval(q, cplx(0.0)), EvalAtZero);
}

TEST_CASE("laurent_div_exact examples") {
  const LaurentPoly t3_minus_1(0, {cplx(-1.0), cplx(0.0), cplx(0.0), cplx(1.0)});
  const LaurentPoly t_minus_1(0, {cplx(-1.0), cplx(1.0)});
  const LaurentPoly q = laurent_div_exact(t3_minus_1, t_minus_1);
  REQUIRE(q.coeffs.size() == 3);
  for (const cplx& c : q.coeffs) CHECK(close(c, cplx(1.0)));

  const cplx s = rand_cplx(0.4, 1.2);
  const LaurentPoly f1(0, {-s * s, cplx(1.0)});
  const LaurentPoly f2(0, {-1.0 / (s * s), cplx(1.0)});
  const LaurentPoly num = t_minus_1 * f1 * f2;
  const LaurentPoly got = laurent_div_exact(num, t_minus_1);
  CHECK(laurent_sup_diff(got, f1 * f2) <= 1e-10 * num.sup_norm());
}

TEST_CASE("laurent_div_exact recovers random quotients") {
  for (int trial = 0; trial < 40; ++trial) {
    std::uniform_int_distribution<int> dd(0, 6);
    std::uniform_int_distribution<long> ee(-3, 3);
    std::vector<cplx> qc(dd(rng) + 1), dc(dd(rng) + 1);
    for (cplx& v : qc) v = rand_cplx();
    for (cplx& v : dc) v = rand_cplx();
    if (std::abs(qc.back()) < 0.2) qc.back() += cplx(1.0);
    if (std::abs(dc.back()) < 0.2) dc.back() += cplx(1.0);
    const LaurentPoly q(ee(rng), qc);
    const LaurentPoly d(ee(rng), dc);
    const LaurentPoly back = laurent_div_exact(q * d, d);
    CHECK(laurent_sup_diff(back, q) <= 1e-10 * (1.0 + q.sup_norm()));
  }
}

TEST_CASE("laurent_div_exact flags inexact division") {
  const LaurentPoly num(0, {cplx(1.0), cplx(0.0), cplx(1.0)});  // t^2 + 1
  const LaurentPoly den(0, {cplx(-1.0), cplx(1.0)});            // t - 1
  CHECK_THROWS_AS(laurent_div_exact(num, den), InexactDivision);
  CHECK_THROWS_AS(laurent_div_exact(num, LaurentPoly()), DegenerateInput);
}

TEST_CASE("mat3_laurent_det on diagonal and identity") {
  Mat3Laurent I;
  for (int i = 0; i < 3; ++i) I(i, i) = LaurentPoly::one();
  const LaurentPoly det_i = mat3_laurent_det(I);
  CHECK(det_i.min_exp == 0);
  REQUIRE(det_i.coeffs.size() == 1);
  CHECK(close(det_i.coeffs[0], cplx(1.0)));

  const cplx s = rand_cplx(0.5, 1.5);
  Mat3Laurent D;
  D(0, 0) = LaurentPoly(0, {cplx(-1.0), cplx(1.0)});
  D(1, 1) = LaurentPoly(0, {-s * s, cplx(1.0)});
  D(2, 2) = LaurentPoly(0, {-1.0 / (s * s), cplx(1.0)});
  const LaurentPoly det_d = mat3_laurent_det(D);
  const LaurentPoly expect = D(0, 0) * D(1, 1) * D(2, 2);
  CHECK(laurent_sup_diff(det_d, expect) <= 1e-12 * expect.sup_norm());
}

TEST_CASE("mat3_laurent_det agrees with pointwise numeric determinants") {
  for (int trial = 0; trial < 5; ++trial) {
    Mat3Laurent M;
    std::uniform_int_distribution<long> ee(-2, 1);
    std::uniform_int_distribution<int> len(1, 3);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        std::vector<cplx> c(len(rng));
        for (cplx& v : c) v = rand_cplx();
        M(i, j) = LaurentPoly(ee(rng), c);
      }
    const LaurentPoly det = mat3_laurent_det(M);
    for (int k = 0; k < 20; ++k) {
      cplx t0 = rand_cplx(0.3, 1.5);
      const auto at = [&](int i, int j) { return laurent_eval(M(i, j), t0); };
      const cplx numeric = at(0, 0) * (at(1, 1) * at(2, 2) - at(1, 2) * at(2, 1)) -
                           at(0, 1) * (at(1, 0) * at(2, 2) - at(1, 2) * at(2, 0)) +
                           at(0, 2) * (at(1, 0) * at(2, 1) - at(1, 1) * at(2, 0));
      const cplx via_poly = laurent_eval(det, t0);
      CHECK(std::abs(numeric - via_poly) <= 1e-9 * (1.0 + std::abs(numeric)));
    }
  }
}

TEST_CASE("chebyshev determinant identity on the bounded locus") {
  std::uniform_real_distribution<double> seg(-2.0, 2.0);
  for (int m = -12; m <= 12; ++m) {
    for (int trial = 0; trial < 10; ++trial) {
      const cplx y = (trial % 2 == 0) ? cplx(seg(rng)) : 0.5 * rand_cplx(-1.0, 1.0);
      const cplx sm = cheb_eval(m, y);
      const cplx sm1 = cheb_eval(m - 1, y);
      CHECK(std::abs(sm * sm - y * sm * sm1 + sm1 * sm1 - 1.0) <= 1e-9);
    }
  }
}

TEST_CASE("canonical trimming") {
  DensePoly p{cplx(1.0), cplx(2.0), cplx(0.0), cplx(1e-15)};
  CHECK(p.degree() == 1);
  LaurentPoly l(-2, {cplx(1e-16), cplx(3.0), cplx(1e-16)});
  CHECK(l.min_exp == -1);
  CHECK(l.coeffs.size() == 1);
}
