// Throwaway validation driver (not part of the build).
#include <cstdio>
#include <random>

#include "atap/atap_core.hpp"

using namespace atap;

static std::mt19937_64 rng(12345);
static cplx rand_cplx(double lo = -1.5, double hi = 1.5) {
  std::uniform_real_distribution<double> d(lo, hi);
  return cplx(d(rng), d(rng));
}

static Mat2 rand_sl2(bool avoid_parabolic = true) {
  for (;;) {
    cplx e = rand_cplx(), f = rand_cplx(), g = rand_cplx();
    if (std::abs(e) < 0.3) continue;
    cplx h = (1.0 + f * g) / e;
    Mat2 M{e, f, g, h};
    if (avoid_parabolic && std::abs(M.trace() * M.trace() - 4.0) < 0.05) continue;
    return M;
  }
}

int main() {
  // --- 1. trefoil roots ---
  KnotParams p11{1, 1};
  auto rr = riley_roots(p11, cplx(1.0));
  printf("trefoil roots: %zu (abelian discarded %d)\n", rr.reps.size(), rr.discarded_abelian);
  for (auto& rep : rr.reps) {
    printf("  y = %.12f%+.12fi  z = %.12f%+.12fi  residual=%.2e verify=%.2e\n",
           rep.y.real(), rep.y.imag(), rep.z.real(), rep.z.imag(),
           rep.riley_residual, verify_rep(rep, p11));
  }

  // --- 2. delta_fox trefoil ---
  auto& rep = rr.reps[0];
  auto fox = delta_fox(p11, rep);
  printf("fox delta (raw min exp %ld): ", fox.raw_min_exp);
  for (auto& c : fox.delta.coeffs) printf("(%.6f%+.6fi) ", c.real(), c.imag());
  printf("\n");

  auto closed = delta_closed(p11, rep);
  printf("closed: D1=%.6f%+.6fi D2=%.6f%+.6fi A=%.4f B=%.4f C=%.4f quad_mid=%.6f%+.6fi torsion=%.6f\n",
         closed.prefactor_denom_D1.real(), closed.prefactor_denom_D1.imag(),
         closed.quad_denom_D2.real(), closed.quad_denom_D2.imag(),
         closed.coeff_A.real(), closed.coeff_B.real(), closed.coeff_C.real(),
         closed.quad_mid.real(), closed.quad_mid.imag(), closed.torsion.real());
  auto cc = cross_check(fox, closed);
  printf("crosscheck: pass=%d disc=%.3e shift=%ld sign=%d\n", cc.pass, cc.discrepancy,
         cc.unit_shift, cc.sign);
  printf("torsion_limit(closed)=%.6f\n", torsion_limit(closed.laurent_form).real());

  // --- 3. adjoint closed forms vs brute force ---
  double worst_pow = 0, worst_sum = 0;
  for (int trial = 0; trial < 50; ++trial) {
    Mat2 M = rand_sl2();
    Mat3 A = ad(M);
    Mat3 Ainv = ad(inverse_unimodular(M));
    for (long n = -8; n <= 8; ++n) {
      Mat3 brute = Mat3::identity();
      for (long i = 0; i < std::labs(n); ++i) brute = brute * (n >= 0 ? A : Ainv);
      double err = mat3_sup_diff(brute, ad_power_closed(M, n)) /
                   (1.0 + mat3_sup_norm(brute));
      if (err > worst_pow) worst_pow = err;
    }
    for (long n = -6; n <= 8; ++n) {
      Mat3 brute = Mat3::zero();
      if (n >= 0) {
        Mat3 cur = Mat3::identity();
        for (long i = 0; i < n; ++i) { brute = brute + cur; cur = cur * A; }
      } else {
        Mat3 cur = Ainv;
        for (long i = -1; i >= n; --i) { brute = brute - cur; cur = cur * Ainv; }
      }
      double err = mat3_sup_diff(brute, ad_geom_sum_closed(M, n)) /
                   (1.0 + mat3_sup_norm(brute));
      if (err > worst_sum) worst_sum = err;
    }
  }
  printf("adjoint closed forms: worst power err %.3e, worst sum err %.3e\n", worst_pow,
         worst_sum);

  // --- 4. Lemma equivalence (exact) ---
  int lemma_fail = 0;
  for (int m = -3; m <= 3; ++m)
    for (int n = -3; n <= 3; ++n) {
      if (m == 0 || n == 0) continue;
      KnotParams p{m, n};
      if (!(fox_derivative(build_relator(p), Gen::a) == relator_derivative_closed(p)))
        ++lemma_fail;
    }
  printf("lemma equivalence failures: %d\n", lemma_fail);

  // --- 5. grid cross-check ---
  const cplx xs[] = {cplx(2.0), cplx(1.7), cplx(0.6, 1.1), cplx(2.3, -0.4)};
  int cells = 0, roots = 0, ccpass = 0, ccfail = 0, singular = 0;
  double worst_cc = 0, worst_verify = 0, worst_phi_factor = 0, worst_tors = 0;
  int phi_factor_checked = 0, phi_factor_skipped = 0;
  for (int m = -3; m <= 3; ++m)
    for (int n = -3; n <= 3; ++n) {
      if (m == 0 || n == 0) continue;
      for (const cplx& x : xs) {
        ++cells;
        KnotParams p{m, n};
        cplx s = s_from_x(x);
        auto res = riley_roots(p, s);
        for (auto& r : res.reps) {
          ++roots;
          double v = verify_rep(r, p);
          if (v > worst_verify) worst_verify = v;
          auto f = delta_fox(p, r);
          try {
            auto c = delta_closed(p, r);
            auto rep_cc = cross_check(f, c);
            if (rep_cc.pass) ++ccpass;
            else {
              ++ccfail;
              if (ccfail < 5)
                printf("  CC FAIL m=%d n=%d x=(%.2f,%.2f) y=(%.6f,%.6f) disc=%.3e sign=%d\n",
                       m, n, x.real(), x.imag(), r.y.real(), r.y.imag(),
                       rep_cc.discrepancy, rep_cc.sign);
            }
            if (rep_cc.discrepancy > worst_cc) worst_cc = rep_cc.discrepancy;
            double terr = std::abs(torsion_limit(c.laurent_form) + c.torsion);
            if (terr > worst_tors) worst_tors = terr;
          } catch (const ClosedFormSingular& e) {
            ++singular;
          } catch (const Error& e) {
            printf("  ERROR m=%d n=%d: %s\n", m, n, e.what());
          }
          // phi factors vs brute force
          try {
            Mat3 s1 = phi_factor_s1(p, r);
            Mat3 winv_ad = ad(inverse_unimodular(eval_word(build_w(m), r.rho_a, r.rho_b)));
            Mat3 brute = Mat3::zero();
            if (n >= 0) {
              Mat3 cur = Mat3::identity();
              for (long i = 0; i < n; ++i) { brute = brute + cur; cur = cur * winv_ad; }
            } else {
              Mat3 curw = ad(eval_word(build_w(m), r.rho_a, r.rho_b));
              Mat3 cur = curw;
              for (long i = -1; i >= n; --i) { brute = brute - cur; cur = cur * curw; }
            }
            double err = mat3_sup_diff(s1, brute) / (1.0 + mat3_sup_norm(brute));
            if (err > worst_phi_factor) worst_phi_factor = err;
            ++phi_factor_checked;
          } catch (const Error&) { ++phi_factor_skipped; }
          try {
            Mat3 s2 = phi_factor_s2(p, r);
            Word am = (Word::gen(Gen::a, -1) * Word::gen(Gen::b)).pow(m);
            Mat3 brute = ad(eval_word(am, r.rho_a, r.rho_b));
            double err = mat3_sup_diff(s2, brute) / (1.0 + mat3_sup_norm(brute));
            if (err > worst_phi_factor) worst_phi_factor = err;
          } catch (const Error&) { ++phi_factor_skipped; }
          try {
            Mat3 s3 = phi_factor_s3(p, r);
            Mat3 ab_ad = ad(eval_word(Word::gen(Gen::a) * Word::gen(Gen::b, -1),
                                      r.rho_a, r.rho_b));
            Mat3 brute = Mat3::zero();
            Mat3 cur = Mat3::identity();
            for (long i = 0; i < m; ++i) { brute = brute + cur; cur = cur * ab_ad; }
            if (m < 0) {
              brute = Mat3::zero();
              Mat3 inv = ad(eval_word(Word::gen(Gen::b) * Word::gen(Gen::a, -1),
                                      r.rho_a, r.rho_b));
              cur = inv;
              for (long i = -1; i >= m; --i) { brute = brute - cur; cur = cur * inv; }
            }
            double err = mat3_sup_diff(s3, brute) / (1.0 + mat3_sup_norm(brute));
            if (err > worst_phi_factor) worst_phi_factor = err;
          } catch (const Error&) { ++phi_factor_skipped; }
        }
      }
    }
  printf("grid: %d cells, %d roots, cc pass %d fail %d singular-skip %d\n", cells, roots,
         ccpass, ccfail, singular);
  printf("worst: crosscheck %.3e  verify %.3e  phi-factors %.3e (checked %d skipped %d)  torsion |lim+closed| %.3e\n",
         worst_cc, worst_verify, worst_phi_factor, phi_factor_checked, phi_factor_skipped,
         worst_tors);
  return 0;
}
