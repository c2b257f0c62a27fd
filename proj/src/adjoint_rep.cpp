#include "atap/adjoint_rep.hpp"

#include <algorithm>
#include <cmath>

#include "highprec.hpp"

namespace atap {

Mat3 Mat3::identity() {
  Mat3 I;
  I.e[0][0] = I.e[1][1] = I.e[2][2] = cplx(1.0);
  return I;
}

cplx Mat3::det() const {
  return e[0][0] * (e[1][1] * e[2][2] - e[1][2] * e[2][1]) -
         e[0][1] * (e[1][0] * e[2][2] - e[1][2] * e[2][0]) +
         e[0][2] * (e[1][0] * e[2][1] - e[1][1] * e[2][0]);
}

Mat3 operator*(const Mat3& A, const Mat3& B) {
  Mat3 C;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      cplx acc(0.0);
      for (int k = 0; k < 3; ++k) acc += A.e[i][k] * B.e[k][j];
      C.e[i][j] = acc;
    }
  return C;
}

Mat3 operator+(const Mat3& A, const Mat3& B) {
  Mat3 C;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) C.e[i][j] = A.e[i][j] + B.e[i][j];
  return C;
}

Mat3 operator-(const Mat3& A, const Mat3& B) {
  Mat3 C;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) C.e[i][j] = A.e[i][j] - B.e[i][j];
  return C;
}

Mat3 operator*(cplx c, const Mat3& A) {
  Mat3 C;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) C.e[i][j] = c * A.e[i][j];
  return C;
}

double mat3_sup_diff(const Mat3& A, const Mat3& B) {
  double s = 0.0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) s = std::max(s, std::abs(A.e[i][j] - B.e[i][j]));
  return s;
}

double mat3_sup_norm(const Mat3& A) {
  double s = 0.0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) s = std::max(s, std::abs(A.e[i][j]));
  return s;
}

namespace {

void require_unimodular(const Mat2& M, double tol, const char* who) {
  if (std::abs(M.det() - 1.0) > tol)
    throw NotUnimodular(std::string(who) + ": |det - 1| > tolerance");
}

}  // namespace

Mat3 ad(const Mat2& M, double unimodular_tol) {
  require_unimodular(M, unimodular_tol, "ad");
  const cplx e = M.a11, f = M.a12, g = M.a21, h = M.a22;
  Mat3 A;
  A.e[0][0] = e * e;
  A.e[0][1] = -2.0 * e * f;
  A.e[0][2] = -f * f;
  A.e[1][0] = -e * g;
  A.e[1][1] = e * h + f * g;
  A.e[1][2] = f * h;
  A.e[2][0] = -g * g;
  A.e[2][1] = 2.0 * g * h;
  A.e[2][2] = h * h;
  return A;
}

Mat3 ad_power_closed(const Mat2& M, long n, double unimodular_tol) {
  require_unimodular(M, unimodular_tol, "ad_power_closed");
  const cplx e = M.a11, f = M.a12, g = M.a21, h = M.a22;
  const cplx mu = M.trace();
  const cplx sp = cheb_eval(n, mu);
  const cplx sp1 = cheb_eval(n - 1, mu);
  const cplx u = sp - h * sp1;  // S_n - h S_{n-1}
  const cplx v = sp - e * sp1;  // S_n - e S_{n-1}
  Mat3 D;
  D.e[0][0] = u * u;
  D.e[0][1] = -2.0 * f * sp1 * u;
  D.e[0][2] = -f * f * sp1 * sp1;
  D.e[1][0] = -g * sp1 * u;
  D.e[1][1] = u * v + f * g * sp1 * sp1;
  D.e[1][2] = f * sp1 * v;
  D.e[2][0] = -g * g * sp1 * sp1;
  D.e[2][1] = 2.0 * g * sp1 * v;
  D.e[2][2] = v * v;
  return D;
}

Mat3 ad_geom_sum_closed(const Mat2& M, long n, const Tolerances& tol) {
  require_unimodular(M, tol.equality, "ad_geom_sum_closed");
  const cplx mu = M.trace();
  if (std::abs(mu * mu - 4.0) <= tol.degenerate)
    throw DegenerateTrace("ad_geom_sum_closed: mu^2 = 4 (parabolic/central)");
  const cplx X = cheb_eval(n - 1, mu) * cheb_eval(n - 1, mu);
  const cplx Y = cheb_eval(n - 1, mu) * cheb_eval(n - 2, mu);
  const auto C =
      detail::geom_sum_table_t<cplx>(M.a11, M.a12, M.a21, M.a22, mu, double(n), X, Y);
  Mat3 out;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) out.e[i][j] = C.e[i][j];
  return out;
}

Mat3 phi_factor_s1(const KnotParams& params, const NonabelianRep& rep,
                   const Tolerances& tol) {
  validate_params(params);
  if (rep.riley_residual > tol.root_residual)
    throw NotOnRileyVariety("phi_factor_s1: rep does not satisfy the Riley equation");
  const cplx z = rep.z;
  if (std::abs(z * z - 4.0) <= tol.degenerate)
    throw DegenerateTrace("phi_factor_s1: z^2 = 4");

  {
    const cplx y = rep.y, x = rep.x;
    const cplx sm1 = cheb_eval(params.m - 1, y);
    const cplx ypx = y + 2.0 - x * x;
    const cplx denom = ypx * sm1 * sm1 * (4.0 - x * x + ypx * (y - 2.0) * sm1 * sm1);
    if (std::abs(denom) < tol.degenerate)
      throw DegenerateInput("phi_factor_s1: Prop (iii) denominator vanishes");
  }

  // Evaluate the table in extended precision: the X, Y substitutions cancel
  // several digits at the larger |y| representations.
  using detail::qcplx;
  const qcplx y = detail::to_quad(rep.y);
  const qcplx x = detail::to_quad(rep.x);
  const qcplx sq = detail::to_quad(rep.s);
  const qcplx zq = detail::trace_z_t<qcplx>(params.m, y, x);
  const qcplx sm = detail::cheb_eval_t<qcplx>(params.m, y);
  const qcplx sm1 = detail::cheb_eval_t<qcplx>(params.m - 1, y);
  const qcplx ypx = y + qcplx(2.0) - x * x;
  const qcplx denom =
      ypx * sm1 * sm1 * (qcplx(4.0) - x * x + ypx * (y - qcplx(2.0)) * sm1 * sm1);
  const qcplx X = qcplx(1.0) / denom;
  const qcplx Y = (qcplx(1.0) - ypx * sm1 * (sm - (y - qcplx(1.0)) * sm1)) * X;

  // rho(w^-1) = [[w22, -w12], [(y-2) w12, w11]] with trace z.
  const auto w = detail::rho_w_closed_t<qcplx>(params.m, sq, y);
  const auto E = detail::geom_sum_table_t<qcplx>(
      w.a22, -w.a12, (y - qcplx(2.0)) * w.a12, w.a11, zq, double(params.n), X, Y);
  Mat3 out;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) out.e[i][j] = detail::to_double(E.e[i][j]);
  return out;
}

Mat3 phi_factor_s2(const KnotParams& params, const NonabelianRep& rep) {
  validate_params(params);
  const cplx y = rep.y, s = rep.s;
  const cplx si = 1.0 / s;
  const cplx sm = cheb_eval(params.m, y);
  const cplx sm1 = cheb_eval(params.m - 1, y);
  const cplx u = sm - sm1;                // S_m - S_{m-1}
  const cplx v = sm - (y - 1.0) * sm1;    // S_m - (y-1) S_{m-1}
  Mat3 F;
  F.e[0][0] = u * u;
  F.e[0][1] = 2.0 * si * sm1 * u;
  F.e[0][2] = -si * si * sm1 * sm1;
  F.e[1][0] = s * (y - 2.0) * sm1 * u;
  F.e[1][1] = u * v + (y - 2.0) * sm1 * sm1;
  F.e[1][2] = -si * sm1 * v;
  F.e[2][0] = -s * s * (y - 2.0) * (y - 2.0) * sm1 * sm1;
  F.e[2][1] = -2.0 * s * (y - 2.0) * sm1 * v;
  F.e[2][2] = v * v;
  return F;
}

Mat3 phi_factor_s3(const KnotParams& params, const NonabelianRep& rep,
                   const Tolerances& tol) {
  validate_params(params);
  const cplx y = rep.y, s = rep.s;
  if (std::abs(y * y - 4.0) <= tol.degenerate)
    throw DegenerateTrace("phi_factor_s3: y^2 = 4");
  const cplx si = 1.0 / s;
  const double m = double(params.m);
  const cplx sm = cheb_eval(params.m, y);
  const cplx sm1 = cheb_eval(params.m - 1, y);
  const cplx p = sm * sm1;        // S_m S_{m-1}
  const cplx q = sm1 * sm1;       // S_{m-1}^2
  const cplx ym2 = y - 2.0;
  Mat3 G;
  G.e[0][0] = ym2 * (2.0 * m + 2.0 * p - y * q);
  G.e[0][1] = 2.0 * s * ym2 * (m + p - (y + 1.0) * q);
  G.e[0][2] = s * s * (2.0 * m - y * p + (y * y - 2.0) * q);
  G.e[1][0] = si * ym2 * ym2 * (m + p - (y + 1.0) * q);
  G.e[1][1] = ym2 * (ym2 * m + 2.0 * y * p - (2.0 * y * y - 4.0) * q);
  G.e[1][2] = s * ym2 * (m - (y + 1.0) * p + (y * y + y - 1.0) * q);
  G.e[2][0] = si * si * ym2 * ym2 * (2.0 * m - y * p + (y * y - 2.0) * q);
  G.e[2][1] = 2.0 * si * ym2 * ym2 * (m - (y + 1.0) * p + (y * y + y - 1.0) * q);
  G.e[2][2] = ym2 * (2.0 * m + (y * y - 2.0) * p - (y * y * y - 3.0 * y) * q);
  return (1.0 / (y * y - 4.0)) * G;
}

}  // namespace atap
