#include "atap/atap_core.hpp"

#include <cmath>
#include <map>

#include "highprec.hpp"

namespace atap {

namespace {

detail::M2t<cplx> to_m2(const Mat2& M) { return {M.a11, M.a12, M.a21, M.a22}; }

detail::M2t<detail::qcplx> to_m2q(const Mat2& M) {
  return {detail::to_quad(M.a11), detail::to_quad(M.a12), detail::to_quad(M.a21),
          detail::to_quad(M.a22)};
}

}  // namespace

Mat3Laurent phi_map(const GroupRingElt& elt, const NonabelianRep& rep) {
  // Words are products of unimodular generator images, so the adjoint table
  // is applied directly (no drift check on long products).
  const auto M = detail::phi_map_t<cplx>(elt, to_m2(rep.rho_a), to_m2(rep.rho_b));
  Mat3Laurent out;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      out(i, j) = LaurentPoly(M.e[i][j].min_exp, M.e[i][j].coeffs);
  return out;
}

LaurentPoly det_phi_b_minus_1(const NonabelianRep& rep) {
  const GroupRingElt b_minus_1 =
      GroupRingElt::from_word(Word::gen(Gen::b)) - GroupRingElt::one();
  return mat3_laurent_det(phi_map(b_minus_1, rep));
}

FoxDelta delta_fox(const KnotParams& params, const NonabelianRep& rep,
                   const Tolerances& tol) {
  validate_params(params);
  using detail::qcplx;
  const GroupRingElt dr_da = fox_derivative(build_relator(params), Gen::a);
  const GroupRingElt b_minus_1 =
      GroupRingElt::from_word(Word::gen(Gen::b)) - GroupRingElt::one();

  // The determinant cancels across ~10 orders of magnitude on the larger
  // (m, n) cells; run the whole quotient in 113-bit arithmetic and round.
  const auto ra = to_m2q(rep.rho_a);
  const auto rb = to_m2q(rep.rho_b);
  auto num = detail::lt_det3(detail::phi_map_t<qcplx>(dr_da, ra, rb));
  auto den = detail::lt_det3(detail::phi_map_t<qcplx>(b_minus_1, ra, rb));
  detail::lt_trim(num, 1e-24);
  detail::lt_trim(den, 1e-24);

  detail::LaurentT<qcplx> q;
  double rel_rem = 0.0;
  if (!detail::lt_div(num, den, tol.division, q, rel_rem))
    throw InexactDivision("delta_fox: remainder " + std::to_string(rel_rem) +
                          " of det Phi(dr/da) / det Phi(b-1) exceeds tolerance");

  std::vector<cplx> coeffs(q.coeffs.size());
  for (size_t i = 0; i < q.coeffs.size(); ++i) coeffs[i] = detail::to_double(q.coeffs[i]);
  const LaurentPoly quotient(q.min_exp, std::move(coeffs));

  FoxDelta result;
  result.raw_min_exp = quotient.min_exp;
  result.delta = laurent_normalize_min0(quotient);
  return result;
}

TheoremCoeffs theorem_coeffs(const KnotParams& params, const NonabelianRep& rep,
                             const Tolerances& tol) {
  validate_params(params);
  const double m = double(params.m);
  const double n = double(params.n);
  const cplx y = rep.y;
  const cplx sm = cheb_eval(params.m, y);
  const cplx sm1 = cheb_eval(params.m - 1, y);

  if (std::abs(y + 2.0) <= tol.degenerate)
    throw ClosedFormSingular("y+2", "theorem_coeffs: y + 2 vanishes");
  if (std::abs(sm1) <= tol.degenerate)
    throw ClosedFormSingular("S_{m-1}(y)", "theorem_coeffs: S_{m-1}(y) vanishes");

  TheoremCoeffs co;
  co.A = 2.0 * n * (2.0 * m + 2.0 * sm * sm1 - y * sm1 * sm1) / (y + 2.0);
  co.B = -4.0 * (sm + sm1) * (sm + sm1) * (m * sm + (m + 1.0) * sm1) /
             ((y + 2.0) * sm1) +
         6.0 * m * sm * sm + (4.0 + 4.0 * m - 4.0 * n - 2.0 * m * y) * sm * sm1 +
         (2.0 + 2.0 * m - 4.0 * m * n - y + 2.0 * n * y + 2.0 * m * n * y) * sm1 * sm1;
  co.C = -(2.0 * m * n - 1.0) * (2.0 * sm - y * sm1) * (2.0 * sm - y * sm1);
  return co;
}

DeltaResult delta_closed(const KnotParams& params, const NonabelianRep& rep,
                         const Tolerances& tol) {
  validate_params(params);
  const cplx y = rep.y;
  const cplx x = rep.x;
  const cplx z = rep.z;
  const cplx sm1 = cheb_eval(params.m - 1, y);
  const cplx ypx = y + 2.0 - x * x;
  const cplx D2 = 4.0 + (y - 2.0) * ypx * sm1 * sm1;
  const cplx D1 = ypx * (4.0 - x * x + (y - 2.0) * ypx * sm1 * sm1);

  const auto guard = [&](cplx v, const char* name) {
    if (std::abs(v) <= tol.degenerate)
      throw ClosedFormSingular(name, std::string("delta_closed: ") + name + " vanishes");
  };
  guard(y + 2.0, "y+2");
  guard(y * y - 4.0, "y^2-4");
  guard(z * z - 4.0, "z^2-4");
  guard(sm1, "S_{m-1}(y)");
  guard(ypx, "y+2-x^2");
  guard(D1, "D1");
  guard(D2, "D2");

  const TheoremCoeffs co = theorem_coeffs(params, rep, tol);
  const double mn = double(params.m) * double(params.n);
  const cplx quad_mid = (co.A * x * x * x * x + co.B * x * x + co.C) / D2;

  DeltaResult result;
  result.prefactor_denom_D1 = D1;
  result.quad_denom_D2 = D2;
  result.coeff_A = co.A;
  result.coeff_B = co.B;
  result.coeff_C = co.C;
  result.quad_mid = quad_mid;
  // (t-1)(mn t^2 - quad_mid t + mn) / D1, expanded.
  result.laurent_form = (1.0 / D1) * LaurentPoly(0, {-mn, mn + quad_mid,
                                                     -(mn + quad_mid), mn});
  result.torsion = (2.0 * mn - quad_mid) / D1;
  if (rep.multiplicity > 1) result.flags.push_back(kFlagMultiplicity);
  return result;
}

cplx torsion_closed(const KnotParams& params, const NonabelianRep& rep,
                    const Tolerances& tol) {
  return delta_closed(params, rep, tol).torsion;
}

cplx torsion_limit(const LaurentPoly& delta, const Tolerances& tol) {
  const LaurentPoly t_minus_1(0, {cplx(-1.0), cplx(1.0)});
  const LaurentPoly q = laurent_div_exact(delta, t_minus_1, tol.division);
  return -laurent_eval(q, cplx(1.0));
}

CrossCheckReport cross_check(const FoxDelta& fox, const DeltaResult& closed,
                             const Tolerances& tol) {
  const LaurentPoly lhs = laurent_normalize_min0(fox.delta);
  const LaurentPoly rhs = laurent_normalize_min0(closed.laurent_form);

  CrossCheckReport report;
  report.unit_shift = fox.raw_min_exp;

  const double plus = laurent_sup_diff(lhs, rhs);
  const double minus = laurent_sup_diff(cplx(-1.0) * lhs, rhs);
  const double scale = rhs.sup_norm();
  if (minus < plus) {
    report.sign = -1;
    report.discrepancy = scale > 0.0 ? minus / scale : minus;
  } else {
    report.sign = 1;
    report.discrepancy = scale > 0.0 ? plus / scale : plus;
  }
  report.pass = report.discrepancy <= tol.crosscheck;
  return report;
}

}  // namespace atap
