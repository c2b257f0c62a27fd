#include "atap/sl2_reps.hpp"

#include <algorithm>
#include <cmath>

#include "highprec.hpp"

namespace atap {

Mat2 operator*(const Mat2& A, const Mat2& B) {
  return Mat2{A.a11 * B.a11 + A.a12 * B.a21, A.a11 * B.a12 + A.a12 * B.a22,
              A.a21 * B.a11 + A.a22 * B.a21, A.a21 * B.a12 + A.a22 * B.a22};
}

Mat2 operator-(const Mat2& A, const Mat2& B) {
  return Mat2{A.a11 - B.a11, A.a12 - B.a12, A.a21 - B.a21, A.a22 - B.a22};
}

Mat2 inverse_unimodular(const Mat2& A) { return Mat2{A.a22, -A.a12, -A.a21, A.a11}; }

Mat2 mat2_pow(const Mat2& A, long n) {
  Mat2 base = n >= 0 ? A : inverse_unimodular(A);
  Mat2 acc = Mat2::identity();
  for (long i = 0; i < std::labs(n); ++i) acc = acc * base;
  return acc;
}

double mat2_sup_diff(const Mat2& A, const Mat2& B) {
  return std::max({std::abs(A.a11 - B.a11), std::abs(A.a12 - B.a12),
                   std::abs(A.a21 - B.a21), std::abs(A.a22 - B.a22)});
}

Mat2 eval_word(const Word& u, const Mat2& rho_a, const Mat2& rho_b) {
  Mat2 acc = Mat2::identity();
  for (const Syllable& s : u.syllables()) {
    const Mat2& g = (s.g == Gen::a) ? rho_a : rho_b;
    acc = acc * mat2_pow(g, s.e);
  }
  return acc;
}

cplx trace_z(int m, cplx y, cplx x) {
  if (m == 0) throw InvalidParam("trace_z: m = 0");
  return detail::trace_z_t<cplx>(m, y, x);
}

Mat2 rho_w_closed(int m, cplx s, cplx y) {
  if (s == cplx(0.0)) throw InvalidParam("rho_w_closed: s = 0");
  const auto w = detail::rho_w_closed_t<cplx>(m, s, y);
  return Mat2{w.a11, w.a12, w.a21, w.a22};
}

cplx s_from_x(cplx x) {
  const cplx s = (x + std::sqrt(x * x - 4.0)) / 2.0;
  if (s == cplx(0.0)) throw InvalidParam("s_from_x: produced s = 0");
  return s;
}

DensePoly riley_poly(const KnotParams& params, cplx s) {
  validate_params(params);
  if (s == cplx(0.0)) throw InvalidParam("riley_poly: s = 0");
  const cplx x = s + 1.0 / s;
  const int m = params.m;
  const int n = params.n;

  const DensePoly y = DensePoly::variable();
  const DensePoly sm = cheb_coeffs(m);
  const DensePoly sm1 = cheb_coeffs(m - 1);
  const DensePoly sm2 = cheb_coeffs(m - 2);

  // z(y), with the (y^2 - x^2 y + 2x^2 - 2) bracket from rho(w)'s trace.
  const DensePoly bracket =
      y * y - (x * x) * y + DensePoly::constant(2.0 * x * x - 2.0);
  const DensePoly z = 2.0 * (sm * sm) - 2.0 * (y * sm * sm1) + bracket * (sm1 * sm1);

  const DensePoly y_plus = y + DensePoly::constant(2.0 - x * x);  // y + 2 - x^2
  const DensePoly pref =
      DensePoly::constant(1.0) - y_plus * sm1 * (sm1 - sm2);

  return poly_compose(cheb_coeffs(n - 2), z) - pref * poly_compose(cheb_coeffs(n - 1), z);
}

cplx riley_eval(const KnotParams& params, cplx s, cplx y) {
  validate_params(params);
  if (s == cplx(0.0)) throw InvalidParam("riley_eval: s = 0");
  return detail::riley_eval_t<cplx>(params, s, y);
}

namespace {

// Newton refinement in 113-bit arithmetic; companion-matrix eigenvalues of
// high-degree Riley polynomials land ~1e-6 off in tight root clusters, which
// the downstream Wada quotient cannot absorb.
cplx polish_riley_root(const KnotParams& params, cplx s, cplx root) {
  using detail::qcplx;
  const qcplx sq = detail::to_quad(s);
  qcplx y = detail::to_quad(root);
  boost::multiprecision::cpp_bin_float_quad best_abs =
      abs(detail::riley_eval_t<qcplx>(params, sq, y));
  qcplx best = y;
  for (int iter = 0; iter < 60; ++iter) {
    const qcplx f = detail::riley_eval_t<qcplx>(params, sq, y);
    const qcplx h = qcplx(1e-20) * (qcplx(1.0) + abs(y));
    const qcplx df =
        (detail::riley_eval_t<qcplx>(params, sq, y + h) -
         detail::riley_eval_t<qcplx>(params, sq, y - h)) /
        (qcplx(2.0) * h);
    if (static_cast<double>(abs(df)) < 1e-280) break;
    const qcplx step = f / df;
    y -= step;
    const auto fy = abs(detail::riley_eval_t<qcplx>(params, sq, y));
    if (fy < best_abs) {
      best_abs = fy;
      best = y;
    }
    if (static_cast<double>(abs(step)) <=
        1e-28 * (1.0 + static_cast<double>(abs(y))))
      break;
  }
  return detail::to_double(best);
}

}  // namespace

NonabelianRep make_rep(const KnotParams& params, cplx s, cplx y, const Tolerances& tol) {
  validate_params(params);
  if (s == cplx(0.0)) throw InvalidParam("make_rep: s = 0");
  if (std::abs(y - 2.0) <= tol.equality)
    throw InvalidParam("make_rep: y = 2 (abelian locus)");

  NonabelianRep rep;
  rep.s = s;
  rep.x = s + 1.0 / s;
  rep.y = y;
  rep.z = trace_z(params.m, y, rep.x);
  rep.rho_a = Mat2{s, cplx(1.0), cplx(0.0), 1.0 / s};
  rep.rho_b = Mat2{s, cplx(0.0), 2.0 - y, 1.0 / s};
  // Evaluated in extended precision so the stored residual reflects the root,
  // not the double-precision noise floor of the evaluator.
  rep.riley_residual = static_cast<double>(abs(detail::riley_eval_t<detail::qcplx>(
      params, detail::to_quad(s), detail::to_quad(y))));
  if (!is_finite(rep.x) || !is_finite(rep.z) || !std::isfinite(rep.riley_residual))
    throw DegenerateInput("make_rep: non-finite representation data");
  return rep;
}

double verify_rep(const NonabelianRep& rep, const KnotParams& params) {
  validate_params(params);
  const Word w = build_w(params.m);
  const Word lhs = w.pow(params.n) * Word::gen(Gen::a);
  const Word rhs = Word::gen(Gen::b) * w.pow(params.n);
  return mat2_sup_diff(eval_word(lhs, rep.rho_a, rep.rho_b),
                       eval_word(rhs, rep.rho_a, rep.rho_b));
}

RileyRootsResult riley_roots(const KnotParams& params, cplx s, const Tolerances& tol) {
  validate_params(params);
  if (s == cplx(0.0)) throw InvalidParam("riley_roots: s = 0");

  RileyRootsResult result;
  const DensePoly phi = riley_poly(params, s);
  if (phi.degree() < 1) return result;  // no nonabelian locus at this s

  std::vector<cplx> roots = poly_roots(phi);
  for (cplx& r : roots) r = polish_riley_root(params, s, r);

  // Cluster near-multiple roots (pairwise distance < dedup) and take means.
  std::vector<std::pair<cplx, int>> clusters;
  for (const cplx& r : roots) {
    bool merged = false;
    for (auto& [rep_root, count] : clusters) {
      if (std::abs(r - rep_root) < tol.dedup) {
        rep_root = (rep_root * cplx(double(count)) + r) / cplx(double(count + 1));
        ++count;
        merged = true;
        break;
      }
    }
    if (!merged) clusters.emplace_back(r, 1);
  }

  for (const auto& [root, count] : clusters) {
    if (std::abs(root - 2.0) <= tol.dedup) {
      ++result.discarded_abelian;
      continue;
    }
    NonabelianRep rep = make_rep(params, s, root, tol);
    rep.multiplicity = count;
    result.reps.push_back(std::move(rep));
  }

  std::sort(result.reps.begin(), result.reps.end(),
            [](const NonabelianRep& a, const NonabelianRep& b) {
              if (a.y.real() != b.y.real()) return a.y.real() < b.y.real();
              return a.y.imag() < b.y.imag();
            });
  return result;
}

RileyIdentityReport riley_identity_check(const KnotParams& params,
                                         const NonabelianRep& rep,
                                         const Tolerances& tol) {
  validate_params(params);
  const cplx y = rep.y;
  const cplx x = rep.x;
  const cplx z = rep.z;
  const cplx sm = cheb_eval(params.m, y);
  const cplx sm1 = cheb_eval(params.m - 1, y);
  const cplx ypx = y + 2.0 - x * x;  // y - s^2 - s^-2

  // Prop (iii): S_{n-1}^2(z) * denom = 1.
  const cplx denom =
      ypx * sm1 * sm1 * (4.0 - x * x + ypx * (y - 2.0) * sm1 * sm1);
  if (std::abs(denom) < tol.degenerate)
    throw DegenerateInput("riley_identity_check: Prop (iii) denominator vanishes");

  const cplx sn1 = cheb_eval(params.n - 1, z);
  const cplx sn2 = cheb_eval(params.n - 2, z);

  RileyIdentityReport report;
  const double err_sq = std::abs(sn1 * sn1 * denom - 1.0);
  report.square_identity_ok = err_sq <= tol.root_residual * (1.0 + std::abs(sn1 * sn1 * denom));

  // Product formula from the Riley equation:
  // S_{n-1} S_{n-2} = [1 - (y+2-x^2) S_{m-1} (S_m - (y-1) S_{m-1})] S_{n-1}^2.
  const cplx lhs = sn1 * sn2;
  const cplx rhs = (1.0 - ypx * sm1 * (sm - (y - 1.0) * sm1)) * sn1 * sn1;
  const double err_prod = std::abs(lhs - rhs) / (1.0 + std::max(std::abs(lhs), std::abs(rhs)));
  report.product_identity_ok = err_prod <= tol.root_residual;

  report.worst_rel_err = std::max(err_sq / (1.0 + std::abs(sn1 * sn1 * denom)), err_prod);
  return report;
}

}  // namespace atap
