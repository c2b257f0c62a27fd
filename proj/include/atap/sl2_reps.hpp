#pragma once

#include <vector>

#include "atap/freegroup_fox.hpp"
#include "atap/scalar_poly.hpp"

namespace atap {

// ---------------------------------------------------------------------------
// 2x2 complex matrices (representation images live in SL_2(C)).
// ---------------------------------------------------------------------------

struct Mat2 {
  cplx a11{1.0}, a12{0.0}, a21{0.0}, a22{1.0};

  static Mat2 identity() { return Mat2{}; }
  cplx trace() const { return a11 + a22; }
  cplx det() const { return a11 * a22 - a12 * a21; }
};

Mat2 operator*(const Mat2& A, const Mat2& B);
Mat2 operator-(const Mat2& A, const Mat2& B);
// Adjugate inverse; exact for det = 1.
Mat2 inverse_unimodular(const Mat2& A);
Mat2 mat2_pow(const Mat2& A, long n);
double mat2_sup_diff(const Mat2& A, const Mat2& B);

// rho(u) for a word u on {a, b}, by direct multiplication.
Mat2 eval_word(const Word& u, const Mat2& rho_a, const Mat2& rho_b);

// ---------------------------------------------------------------------------
// Nonabelian representations in the Riley normal form
//   rho(a) = [[s, 1], [0, 1/s]],  rho(b) = [[s, 0], [2-y, 1/s]],
// with s != 0, y != 2 and phi_K(s, y) = 0.
// ---------------------------------------------------------------------------

struct NonabelianRep {
  cplx s, x, y, z;
  Mat2 rho_a, rho_b;
  double riley_residual = 0.0;  // |phi_K(s, y)|
  int multiplicity = 1;         // > 1 when merged from a near-multiple root
};

// z = tr rho(w) as a Chebyshev expression in y (with x = tr rho(a)):
//   z = 2 S_m^2(y) - 2 y S_m(y) S_{m-1}(y) + (y^2 - x^2 y + 2x^2 - 2) S_{m-1}^2(y).
cplx trace_z(int m, cplx y, cplx x);

// Closed form of rho(w) = [[w11, w12], [(2-y) w12, w22]].
Mat2 rho_w_closed(int m, cplx s, cplx y);

// Either root of s^2 - x s + 1 = 0 (outputs are invariant under the swap).
cplx s_from_x(cplx x);

// The Riley polynomial phi_K(s, .) as a dense polynomial in y:
//   phi = S_{n-2}(z) - [1 - (y+2-x^2) S_{m-1}(y) (S_{m-1}(y) - S_{m-2}(y))] S_{n-1}(z).
DensePoly riley_poly(const KnotParams& params, cplx s);

// Scalar evaluation of the same expression (no polynomial composition).
cplx riley_eval(const KnotParams& params, cplx s, cplx y);

NonabelianRep make_rep(const KnotParams& params, cplx s, cplx y,
                       const Tolerances& tol = {});

// || rho(w^n a) - rho(b w^n) ||_sup by direct word evaluation.
double verify_rep(const NonabelianRep& rep, const KnotParams& params);

struct RileyRootsResult {
  std::vector<NonabelianRep> reps;  // sorted by (re, im) of y
  int discarded_abelian = 0;        // roots with |y - 2| <= dedup tolerance
  bool no_nonabelian() const { return reps.empty(); }
};

RileyRootsResult riley_roots(const KnotParams& params, cplx s,
                             const Tolerances& tol = {});

// Riley Prop (iii) and the derived S_{n-1} S_{n-2} product formula, checked
// at the rep's (s, y, z). Throws DegenerateInput when the (iii) denominator
// magnitude falls below the degeneracy tolerance.
struct RileyIdentityReport {
  bool square_identity_ok = false;
  bool product_identity_ok = false;
  double worst_rel_err = 0.0;
  bool pass() const { return square_identity_ok && product_identity_ok; }
};

RileyIdentityReport riley_identity_check(const KnotParams& params,
                                         const NonabelianRep& rep,
                                         const Tolerances& tol = {});

}  // namespace atap
