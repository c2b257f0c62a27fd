#pragma once

#include <array>
#include <complex>
#include <initializer_list>
#include <vector>

#include "atap/errors.hpp"

namespace atap {

using cplx = std::complex<double>;

inline bool is_finite(cplx v) {
  return std::isfinite(v.real()) && std::isfinite(v.imag());
}

// All tolerances in one place; every consumer takes them by argument so the
// library stays free of global state.
struct Tolerances {
  double equality = 1e-9;       // scalar/matrix agreement checks
  double root_residual = 1e-7;  // |p(root)| / ||p||
  double degree_trim = 1e-12;   // polynomial canonicalization (relative)
  double dedup = 1e-7;          // root clustering & abelian-locus exclusion
  double division = 1e-8;       // Laurent long-division remainder (relative)
  double crosscheck = 1e-8;     // dual-pipeline sup-norm agreement (relative)
  double degenerate = 1e-7;     // closed-form denominator guard
};

// ---------------------------------------------------------------------------
// Dense polynomial over C; coeffs[i] multiplies v^i.
// Canonical form: empty vector is zero, otherwise the top coefficient stays
// above degree_trim * sup_norm.
// ---------------------------------------------------------------------------

struct DensePoly {
  std::vector<cplx> coeffs;

  DensePoly() = default;
  DensePoly(std::initializer_list<cplx> c) : coeffs(c) { trim(); }
  explicit DensePoly(std::vector<cplx> c) : coeffs(std::move(c)) { trim(); }

  static DensePoly constant(cplx c) { return DensePoly{c}; }
  static DensePoly variable() { return DensePoly{cplx(0.0), cplx(1.0)}; }

  bool is_zero() const { return coeffs.empty(); }
  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  cplx leading() const { return coeffs.empty() ? cplx(0.0) : coeffs.back(); }
  double sup_norm() const;
  void trim(double rel_tol = 1e-12);
};

DensePoly operator+(const DensePoly& a, const DensePoly& b);
DensePoly operator-(const DensePoly& a, const DensePoly& b);
DensePoly operator*(const DensePoly& a, const DensePoly& b);
DensePoly operator*(cplx c, const DensePoly& a);
DensePoly operator-(const DensePoly& a);

cplx poly_eval(const DensePoly& p, cplx v);

// outer(inner(v)), by Horner over the coefficients of outer.
DensePoly poly_compose(const DensePoly& outer, const DensePoly& inner);

// All complex roots with multiplicity, sorted by (re, im).
// Throws DegenerateInput for zero or constant input.
std::vector<cplx> poly_roots(const DensePoly& p);

// ---------------------------------------------------------------------------
// Chebyshev polynomials of the second kind, S_0 = 1, S_1 = v,
// S_k = v S_{k-1} - S_{k-2}, extended to every integer k by running the
// recurrence backward (so S_{-1} = 0, S_{-2} = -1, and S_k = -S_{-k-2}).
// ---------------------------------------------------------------------------

cplx cheb_eval(long k, cplx v);
DensePoly cheb_coeffs(long k);

// ---------------------------------------------------------------------------
// Laurent polynomials over C; coeffs[i] multiplies t^(min_exp + i).
// Canonical form: zero is {0, {}}; otherwise both end coefficients stay
// above degree_trim * sup_norm.
// ---------------------------------------------------------------------------

struct LaurentPoly {
  long min_exp = 0;
  std::vector<cplx> coeffs;

  LaurentPoly() = default;
  LaurentPoly(long min_e, std::vector<cplx> c) : min_exp(min_e), coeffs(std::move(c)) {
    canonicalize();
  }

  static LaurentPoly zero() { return LaurentPoly(); }
  static LaurentPoly one() { return LaurentPoly(0, {cplx(1.0)}); }
  // c * t^k
  static LaurentPoly monomial(cplx c, long k) { return LaurentPoly(k, {c}); }

  bool is_zero() const { return coeffs.empty(); }
  long max_exp() const { return min_exp + static_cast<long>(coeffs.size()) - 1; }
  cplx coeff_at(long exp) const;
  double sup_norm() const;
  void canonicalize(double rel_tol = 1e-12);
};

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly operator*(cplx c, const LaurentPoly& a);
LaurentPoly operator-(const LaurentPoly& a);

LaurentPoly laurent_from_dense(const DensePoly& p, long min_exp = 0);
// Multiply by t^k.
LaurentPoly laurent_shift(const LaurentPoly& p, long k);
// Shift so that min_exp becomes 0 (zero stays zero).
LaurentPoly laurent_normalize_min0(const LaurentPoly& p);

// Throws EvalAtZero for t0 = 0.
cplx laurent_eval(const LaurentPoly& p, cplx t0);

// Sup-norm of the coefficientwise difference over the union of supports.
double laurent_sup_diff(const LaurentPoly& a, const LaurentPoly& b);

// Exact quotient num/den; throws InexactDivision if the remainder exceeds
// rel_tol * ||num||, DegenerateInput if den is zero.
LaurentPoly laurent_div_exact(const LaurentPoly& num, const LaurentPoly& den,
                              double rel_tol = 1e-8);

// ---------------------------------------------------------------------------
// 3x3 matrices of Laurent polynomials (the image of Phi).
// ---------------------------------------------------------------------------

struct Mat3Laurent {
  std::array<std::array<LaurentPoly, 3>, 3> e;

  LaurentPoly& operator()(int i, int j) { return e[i][j]; }
  const LaurentPoly& operator()(int i, int j) const { return e[i][j]; }
};

// Cofactor-expansion determinant (exact ring arithmetic).
LaurentPoly mat3_laurent_det(const Mat3Laurent& M);

}  // namespace atap
