#include "atap/scalar_poly.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>

namespace atap {

// ---------------------------------------------------------------------------
// DensePoly
// ---------------------------------------------------------------------------

double DensePoly::sup_norm() const {
  double s = 0.0;
  for (const cplx& c : coeffs) s = std::max(s, std::abs(c));
  return s;
}

void DensePoly::trim(double rel_tol) {
  const double thresh = rel_tol * sup_norm();
  while (!coeffs.empty() && std::abs(coeffs.back()) <= thresh) coeffs.pop_back();
}

DensePoly operator+(const DensePoly& a, const DensePoly& b) {
  std::vector<cplx> c(std::max(a.coeffs.size(), b.coeffs.size()), cplx(0.0));
  for (size_t i = 0; i < a.coeffs.size(); ++i) c[i] += a.coeffs[i];
  for (size_t i = 0; i < b.coeffs.size(); ++i) c[i] += b.coeffs[i];
  return DensePoly(std::move(c));
}

DensePoly operator-(const DensePoly& a, const DensePoly& b) {
  std::vector<cplx> c(std::max(a.coeffs.size(), b.coeffs.size()), cplx(0.0));
  for (size_t i = 0; i < a.coeffs.size(); ++i) c[i] += a.coeffs[i];
  for (size_t i = 0; i < b.coeffs.size(); ++i) c[i] -= b.coeffs[i];
  return DensePoly(std::move(c));
}

DensePoly operator*(const DensePoly& a, const DensePoly& b) {
  if (a.is_zero() || b.is_zero()) return DensePoly();
  std::vector<cplx> c(a.coeffs.size() + b.coeffs.size() - 1, cplx(0.0));
  for (size_t i = 0; i < a.coeffs.size(); ++i)
    for (size_t j = 0; j < b.coeffs.size(); ++j) c[i + j] += a.coeffs[i] * b.coeffs[j];
  return DensePoly(std::move(c));
}

DensePoly operator*(cplx c, const DensePoly& a) {
  std::vector<cplx> r = a.coeffs;
  for (cplx& v : r) v *= c;
  return DensePoly(std::move(r));
}

DensePoly operator-(const DensePoly& a) { return cplx(-1.0) * a; }

cplx poly_eval(const DensePoly& p, cplx v) {
  cplx acc(0.0);
  for (auto it = p.coeffs.rbegin(); it != p.coeffs.rend(); ++it) acc = acc * v + *it;
  return acc;
}

DensePoly poly_compose(const DensePoly& outer, const DensePoly& inner) {
  DensePoly acc;
  for (auto it = outer.coeffs.rbegin(); it != outer.coeffs.rend(); ++it)
    acc = acc * inner + DensePoly::constant(*it);
  return acc;
}

std::vector<cplx> poly_roots(const DensePoly& p) {
  const int deg = p.degree();
  if (deg < 1) throw DegenerateInput("poly_roots: zero or constant polynomial");

  // Companion matrix of the monic normalization.
  Eigen::MatrixXcd comp = Eigen::MatrixXcd::Zero(deg, deg);
  const cplx lead = p.leading();
  for (int i = 0; i < deg; ++i) comp(i, deg - 1) = -p.coeffs[i] / lead;
  for (int i = 1; i < deg; ++i) comp(i, i - 1) = cplx(1.0);

  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(comp, /*computeEigenvectors=*/false);
  std::vector<cplx> roots(deg);
  for (int i = 0; i < deg; ++i) roots[i] = solver.eigenvalues()(i);

  // A couple of Newton steps; keep the better iterate.
  DensePoly dp;
  {
    std::vector<cplx> d(deg, cplx(0.0));
    for (int i = 1; i <= deg; ++i) d[i - 1] = cplx(double(i)) * p.coeffs[i];
    dp = DensePoly(std::move(d));
  }
  for (cplx& r : roots) {
    for (int step = 0; step < 3; ++step) {
      const cplx fr = poly_eval(p, r);
      const cplx dr = poly_eval(dp, r);
      if (std::abs(dr) < 1e-300) break;
      const cplx next = r - fr / dr;
      if (std::abs(poly_eval(p, next)) < std::abs(fr)) r = next;
      else break;
    }
  }

  std::sort(roots.begin(), roots.end(), [](cplx a, cplx b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
  });
  return roots;
}

// ---------------------------------------------------------------------------
// Chebyshev
// ---------------------------------------------------------------------------

cplx cheb_eval(long k, cplx v) {
  if (k >= 0) {
    cplx prev(0.0);  // S_{-1}
    cplx cur(1.0);   // S_0
    for (long i = 0; i < k; ++i) {
      const cplx next = v * cur - prev;
      prev = cur;
      cur = next;
    }
    return cur;
  }
  // k < 0: run the recurrence downward from S_0, S_{-1}.
  cplx above(1.0);  // S_0
  cplx cur(0.0);    // S_{-1}
  for (long i = -1; i > k; --i) {
    const cplx below = v * cur - above;  // S_{i-1} = v S_i - S_{i+1}
    above = cur;
    cur = below;
  }
  return cur;
}

DensePoly cheb_coeffs(long k) {
  if (k < 0) {
    if (k == -1) return DensePoly();
    return -cheb_coeffs(-k - 2);
  }
  DensePoly prev;                        // S_{-1} = 0
  DensePoly cur = DensePoly::constant(cplx(1.0));  // S_0
  const DensePoly v = DensePoly::variable();
  for (long i = 0; i < k; ++i) {
    DensePoly next = v * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

// ---------------------------------------------------------------------------
// LaurentPoly
// ---------------------------------------------------------------------------

cplx LaurentPoly::coeff_at(long exp) const {
  const long i = exp - min_exp;
  if (i < 0 || i >= static_cast<long>(coeffs.size())) return cplx(0.0);
  return coeffs[i];
}

double LaurentPoly::sup_norm() const {
  double s = 0.0;
  for (const cplx& c : coeffs) s = std::max(s, std::abs(c));
  return s;
}

void LaurentPoly::canonicalize(double rel_tol) {
  const double thresh = rel_tol * sup_norm();
  size_t lo = 0, hi = coeffs.size();
  while (lo < hi && std::abs(coeffs[lo]) <= thresh) ++lo;
  while (hi > lo && std::abs(coeffs[hi - 1]) <= thresh) --hi;
  if (lo == hi) {
    min_exp = 0;
    coeffs.clear();
    return;
  }
  if (lo > 0 || hi < coeffs.size()) {
    coeffs = std::vector<cplx>(coeffs.begin() + lo, coeffs.begin() + hi);
  }
  min_exp += static_cast<long>(lo);
}

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  const long lo = std::min(a.min_exp, b.min_exp);
  const long hi = std::max(a.max_exp(), b.max_exp());
  std::vector<cplx> c(hi - lo + 1, cplx(0.0));
  for (size_t i = 0; i < a.coeffs.size(); ++i) c[a.min_exp + i - lo] += a.coeffs[i];
  for (size_t i = 0; i < b.coeffs.size(); ++i) c[b.min_exp + i - lo] += b.coeffs[i];
  return LaurentPoly(lo, std::move(c));
}

LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) { return a + (cplx(-1.0) * b); }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return LaurentPoly();
  std::vector<cplx> c(a.coeffs.size() + b.coeffs.size() - 1, cplx(0.0));
  for (size_t i = 0; i < a.coeffs.size(); ++i)
    for (size_t j = 0; j < b.coeffs.size(); ++j) c[i + j] += a.coeffs[i] * b.coeffs[j];
  return LaurentPoly(a.min_exp + b.min_exp, std::move(c));
}

LaurentPoly operator*(cplx c, const LaurentPoly& a) {
  std::vector<cplx> r = a.coeffs;
  for (cplx& v : r) v *= c;
  return LaurentPoly(a.min_exp, std::move(r));
}

LaurentPoly operator-(const LaurentPoly& a) { return cplx(-1.0) * a; }

LaurentPoly laurent_from_dense(const DensePoly& p, long min_exp) {
  return LaurentPoly(min_exp, p.coeffs);
}

LaurentPoly laurent_shift(const LaurentPoly& p, long k) {
  if (p.is_zero()) return p;
  LaurentPoly r = p;
  r.min_exp += k;
  return r;
}

LaurentPoly laurent_normalize_min0(const LaurentPoly& p) {
  if (p.is_zero()) return p;
  return laurent_shift(p, -p.min_exp);
}

cplx laurent_eval(const LaurentPoly& p, cplx t0) {
  if (p.is_zero()) return cplx(0.0);
  if (t0 == cplx(0.0)) throw EvalAtZero("laurent_eval: t0 = 0");
  cplx acc(0.0);
  for (auto it = p.coeffs.rbegin(); it != p.coeffs.rend(); ++it) acc = acc * t0 + *it;
  // acc now holds sum c_i t0^i with i counted from 0; apply the t^min_exp shift.
  return acc * std::pow(t0, cplx(double(p.min_exp)));
}

double laurent_sup_diff(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() && b.is_zero()) return 0.0;
  const long lo = std::min(a.is_zero() ? b.min_exp : a.min_exp,
                           b.is_zero() ? a.min_exp : b.min_exp);
  const long hi = std::max(a.is_zero() ? b.max_exp() : a.max_exp(),
                           b.is_zero() ? a.max_exp() : b.max_exp());
  double s = 0.0;
  for (long e = lo; e <= hi; ++e) s = std::max(s, std::abs(a.coeff_at(e) - b.coeff_at(e)));
  return s;
}

LaurentPoly laurent_div_exact(const LaurentPoly& num, const LaurentPoly& den,
                              double rel_tol) {
  if (den.is_zero()) throw DegenerateInput("laurent_div_exact: zero divisor");
  if (num.is_zero()) return LaurentPoly();

  // Align both to plain polynomials; the exponent offset moves to the quotient.
  std::vector<cplx> rem = num.coeffs;
  const std::vector<cplx>& d = den.coeffs;
  const long qdeg = static_cast<long>(rem.size()) - static_cast<long>(d.size());
  const double num_norm = num.sup_norm();
  if (qdeg < 0)
    throw InexactDivision("laurent_div_exact: numerator support shorter than divisor");

  std::vector<cplx> q(qdeg + 1, cplx(0.0));
  const cplx dlead = d.back();
  for (long k = qdeg; k >= 0; --k) {
    const cplx f = rem[k + d.size() - 1] / dlead;
    q[k] = f;
    for (size_t j = 0; j < d.size(); ++j) rem[k + j] -= f * d[j];
  }
  double rem_norm = 0.0;
  for (const cplx& c : rem) rem_norm = std::max(rem_norm, std::abs(c));
  if (rem_norm > rel_tol * num_norm)
    throw InexactDivision("laurent_div_exact: remainder " + std::to_string(rem_norm) +
                          " exceeds tolerance");
  return LaurentPoly(num.min_exp - den.min_exp, std::move(q));
}

// ---------------------------------------------------------------------------
// Mat3Laurent
// ---------------------------------------------------------------------------

LaurentPoly mat3_laurent_det(const Mat3Laurent& M) {
  auto minor2 = [&](int r0, int r1, int c0, int c1) {
    return M(r0, c0) * M(r1, c1) - M(r0, c1) * M(r1, c0);
  };
  return M(0, 0) * minor2(1, 2, 1, 2) - M(0, 1) * minor2(1, 2, 0, 2) +
         M(0, 2) * minor2(1, 2, 0, 1);
}

}  // namespace atap
