#pragma once

#include "atap/scalar_poly.hpp"
#include "atap/sl2_reps.hpp"

namespace atap {

// ---------------------------------------------------------------------------
// 3x3 complex matrices (adjoint images live in SL_3(C)).
// ---------------------------------------------------------------------------

struct Mat3 {
  cplx e[3][3] = {};

  static Mat3 identity();
  static Mat3 zero() { return Mat3{}; }
  cplx det() const;
};

Mat3 operator*(const Mat3& A, const Mat3& B);
Mat3 operator+(const Mat3& A, const Mat3& B);
Mat3 operator-(const Mat3& A, const Mat3& B);
Mat3 operator*(cplx c, const Mat3& A);
double mat3_sup_diff(const Mat3& A, const Mat3& B);
double mat3_sup_norm(const Mat3& A);

// Conjugation action of M on sl_2(C) in the ordered basis {E, H, F},
// E = [[0,1],[0,0]], H = [[1,0],[0,-1]], F = [[0,0],[1,0]]; columns are the
// coordinates of M E M^-1, M H M^-1, M F M^-1. Throws NotUnimodular when
// |det M - 1| > tol.
Mat3 ad(const Mat2& M, double unimodular_tol = 1e-9);

// (Ad_M)^n in closed form: the D-table in S_n(mu), S_{n-1}(mu) with mu = tr M.
Mat3 ad_power_closed(const Mat2& M, long n, double unimodular_tol = 1e-9);

// sum_{i=0}^{n-1} (Ad_M)^i in closed form (the C-table with prefactor
// 1/(mu^2-4)); for n < 0 returns -sum_{i=n}^{-1} (Ad_M)^i. Throws
// DegenerateTrace when |mu^2 - 4| <= tol.degenerate (parabolic/central M).
Mat3 ad_geom_sum_closed(const Mat2& M, long n, const Tolerances& tol = {});

// Phi(delta_{n-1}(w^-1)): the E-table over (z^2-4), with X, Y substituted
// via the Riley identities (requires phi_K(s,y) = 0).
Mat3 phi_factor_s1(const KnotParams& params, const NonabelianRep& rep,
                   const Tolerances& tol = {});

// Phi((a^-1 b)^m): the F-table.
Mat3 phi_factor_s2(const KnotParams& params, const NonabelianRep& rep);

// Phi(delta_{m-1}(a b^-1)): the G-table over (y^2-4).
Mat3 phi_factor_s3(const KnotParams& params, const NonabelianRep& rep,
                   const Tolerances& tol = {});

}  // namespace atap
