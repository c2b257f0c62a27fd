#include "atap/selftest.hpp"

#include <cmath>
#include <random>

#include "atap/pipeline.hpp"
#include "highprec.hpp"

namespace atap {

namespace {

struct Suite {
  SuiteResult result;
  double gate;

  explicit Suite(std::string name, double gate_tol) : gate(gate_tol) {
    result.name = std::move(name);
  }

  void check(double err, const std::string& what) {
    ++result.checks;
    result.worst_err = std::max(result.worst_err, err);
    if (!(err <= gate)) {
      ++result.failures;
      if (result.notes.size() < 8) {
        char buf[32];
        snprintf(buf, sizeof buf, "%.3e", err);
        result.notes.push_back(what + ": err " + buf);
      }
    }
  }

  void check_bool(bool ok, const std::string& what) { check(ok ? 0.0 : 1.0, what); }

  // Counts a thrown closed-form error as a failed check.
  template <class F>
  void check_call(F&& f, const std::string& what) {
    try {
      f();
    } catch (const Error& e) {
      ++result.checks;
      ++result.failures;
      if (result.notes.size() < 8) result.notes.push_back(what + ": " + e.what());
    }
  }
};

cplx rand_cplx(std::mt19937_64& rng, double lo = -2.0, double hi = 2.0) {
  std::uniform_real_distribution<double> d(lo, hi);
  const double re = d(rng);
  const double im = d(rng);
  return {re, im};
}

Mat2 rand_sl2(std::mt19937_64& rng, bool avoid_parabolic) {
  for (;;) {
    const cplx e = rand_cplx(rng, -1.5, 1.5);
    if (std::abs(e) < 0.3) continue;
    const cplx f = rand_cplx(rng, -1.5, 1.5);
    const cplx g = rand_cplx(rng, -1.5, 1.5);
    const Mat2 M{e, f, g, (1.0 + f * g) / e};
    if (avoid_parabolic && std::abs(M.trace() * M.trace() - 4.0) < 0.05) continue;
    return M;
  }
}

Word rand_word(std::mt19937_64& rng, int max_syllables = 6) {
  std::uniform_int_distribution<int> count(1, max_syllables);
  std::uniform_int_distribution<int> gen(0, 1);
  std::uniform_int_distribution<int> expo(-3, 3);
  Word w;
  const int k = count(rng);
  for (int i = 0; i < k; ++i) {
    int e = expo(rng);
    if (e == 0) e = 1;
    w = w * Word::gen(gen(rng) == 0 ? Gen::a : Gen::b, e);
  }
  return w;
}

SuiteResult suite_chebyshev(std::uint64_t seed, const Tolerances& tol) {
  Suite s("chebyshev", tol.equality);
  std::mt19937_64 rng(seed ^ 0xC43Bu);
  for (int k = -15; k <= 15; ++k) {
    for (int trial = 0; trial < 10; ++trial) {
      const cplx v = rand_cplx(rng);
      const cplx lhs = cheb_eval(k, v);
      const cplx rhs = v * cheb_eval(k - 1, v) - cheb_eval(k - 2, v);
      s.check(std::abs(lhs - rhs) / (1.0 + std::abs(lhs)), "recurrence");
      const cplx via_coeffs = poly_eval(cheb_coeffs(k), v);
      s.check(std::abs(lhs - via_coeffs) / (1.0 + std::abs(lhs)), "coeffs-vs-eval");
    }
  }
  // Determinant identity S_m^2 - y S_m S_{m-1} + S_{m-1}^2 = 1, sampled on
  // the real segment [-2, 2] and the unit disk where |S_12| stays small
  // enough for the absolute 1e-9 bound to be checkable in double precision.
  std::uniform_real_distribution<double> seg(-2.0, 2.0);
  for (int m = -12; m <= 12; ++m) {
    for (int trial = 0; trial < 4; ++trial) {
      const cplx y = (trial % 2 == 0) ? cplx(seg(rng)) : 0.5 * rand_cplx(rng, -1.0, 1.0);
      const cplx sm = cheb_eval(m, y);
      const cplx sm1 = cheb_eval(m - 1, y);
      s.check(std::abs(sm * sm - y * sm * sm1 + sm1 * sm1 - 1.0), "det-identity");
    }
  }
  return s.result;
}

SuiteResult suite_fox(std::uint64_t seed, const Tolerances& tol) {
  Suite s("fox", tol.equality);
  std::mt19937_64 rng(seed ^ 0xF0D5u);
  const GroupRingElt one = GroupRingElt::one();
  const Word a = Word::gen(Gen::a);
  const Word b = Word::gen(Gen::b);
  for (int trial = 0; trial < 50; ++trial) {
    const Word u = rand_word(rng);
    // Fundamental identity: u - 1 = (du/da)(a-1) + (du/db)(b-1).
    const GroupRingElt lhs = GroupRingElt::from_word(u) - one;
    const GroupRingElt rhs =
        fox_derivative(u, Gen::a) * (GroupRingElt::from_word(a) - one) +
        fox_derivative(u, Gen::b) * (GroupRingElt::from_word(b) - one);
    s.check_bool(lhs == rhs, "fundamental-identity");
    // (1-u) delta_p(u) = 1 - u^{p+1}.
    std::uniform_int_distribution<long> pd(-4, 4);
    const long p = pd(rng);
    const GroupRingElt prod = (one - GroupRingElt::from_word(u)) * delta_p(u, p);
    const GroupRingElt expect = one - GroupRingElt::from_word(u.pow(p + 1));
    s.check_bool(prod == expect, "delta-identity");
  }
  for (int m = -3; m <= 3; ++m)
    for (int n = -3; n <= 3; ++n) {
      if (m == 0 || n == 0) continue;
      const KnotParams p{m, n};
      s.check_bool(fox_derivative(build_relator(p), Gen::a) == relator_derivative_closed(p),
                   "lemma-equivalence");
    }
  return s.result;
}

SuiteResult suite_adjoint(std::uint64_t seed, const Tolerances& tol) {
  Suite s("adjoint", tol.equality);
  std::mt19937_64 rng(seed ^ 0xAD01u);
  for (int trial = 0; trial < 30; ++trial) {
    const Mat2 M = rand_sl2(rng, false);
    const Mat2 N = rand_sl2(rng, false);
    s.check(mat3_sup_diff(ad(M * N), ad(M) * ad(N)) /
                (1.0 + mat3_sup_norm(ad(M * N))),
            "ad-homomorphism");
    s.check(std::abs(ad(M).det() - 1.0), "ad-det");
  }
  for (int trial = 0; trial < 20; ++trial) {
    const Mat2 M = rand_sl2(rng, true);
    const Mat3 A = ad(M);
    const Mat3 Ainv = ad(inverse_unimodular(M));
    for (long n = -6; n <= 8; ++n) {
      s.check_call(
          [&] {
            Mat3 pow_brute = Mat3::identity();
            for (long i = 0; i < std::labs(n); ++i)
              pow_brute = pow_brute * (n >= 0 ? A : Ainv);
            s.check(mat3_sup_diff(pow_brute, ad_power_closed(M, n)) /
                        (1.0 + mat3_sup_norm(pow_brute)),
                    "power-closed");
          },
          "power-closed");
      s.check_call(
          [&] {
            Mat3 sum_brute = Mat3::zero();
            if (n >= 0) {
              Mat3 cur = Mat3::identity();
              for (long i = 0; i < n; ++i) {
                sum_brute = sum_brute + cur;
                cur = cur * A;
              }
            } else {
              Mat3 cur = Ainv;
              for (long i = -1; i >= n; --i) {
                sum_brute = sum_brute - cur;
                cur = cur * Ainv;
              }
            }
            s.check(mat3_sup_diff(sum_brute, ad_geom_sum_closed(M, n, tol)) /
                        (1.0 + mat3_sup_norm(sum_brute)),
                    "geom-sum-closed");
          },
          "geom-sum-closed");
    }
  }
  return s.result;
}

SuiteResult suite_riley(std::uint64_t seed, const Tolerances& tol) {
  Suite s("riley", std::max(tol.equality, tol.root_residual));
  std::mt19937_64 rng(seed ^ 0x1e47u);
  // trace_z against brute-force rho(w).
  for (int trial = 0; trial < 100; ++trial) {
    std::uniform_int_distribution<int> md(-5, 5);
    int m = md(rng);
    if (m == 0) m = 1;
    const cplx sv = rand_cplx(rng, 0.3, 1.4);
    const cplx y = rand_cplx(rng);
    const cplx x = sv + 1.0 / sv;
    const Mat2 rho_a{sv, cplx(1.0), cplx(0.0), 1.0 / sv};
    const Mat2 rho_b{sv, cplx(0.0), 2.0 - y, 1.0 / sv};
    const cplx brute = eval_word(build_w(m), rho_a, rho_b).trace();
    s.check(std::abs(trace_z(m, y, x) - brute) / (1.0 + std::abs(brute)), "trace-z");
  }
  // Roots of the Riley polynomial define representations; Prop (iii) holds.
  const cplx samples[] = {cplx(2.0), cplx(1.7), cplx(0.6, 1.1)};
  for (int m = -2; m <= 2; ++m)
    for (int n = -2; n <= 2; ++n) {
      if (m == 0 || n == 0) continue;
      const KnotParams p{m, n};
      for (const cplx& x : samples) {
        s.check_call(
            [&] {
              const RileyRootsResult rr = riley_roots(p, s_from_x(x), tol);
              for (const NonabelianRep& rep : rr.reps) {
                s.check(verify_rep(rep, p), "verify-rep");
                s.check(rep.riley_residual, "riley-residual");
                try {
                  const RileyIdentityReport idr = riley_identity_check(p, rep, tol);
                  s.check_bool(idr.pass(), "prop-iii");
                } catch (const DegenerateInput&) {
                }
              }
            },
            "riley-roots");
      }
    }
  return s.result;
}

SuiteResult suite_pipeline(std::uint64_t seed, const Tolerances& tol) {
  Suite s("pipeline", std::max(tol.equality, tol.crosscheck));
  (void)seed;
  // Trefoil worked example.
  s.check_call(
      [&] {
        RunConfig cfg;
        cfg.m = 1;
        cfg.n = 1;
        cfg.x = cplx(2.0);
        cfg.tol = tol;
        const ComputeResult res = compute_records(cfg);
        s.check_bool(res.records.size() == 1, "trefoil-root-count");
        if (res.records.size() == 1) {
          const OutputRecord& r = res.records[0];
          s.check(std::abs(r.y - 3.0), "trefoil-y");
          s.check(r.quad_mid ? std::abs(*r.quad_mid + 1.0) : 1.0, "trefoil-quad-mid");
          s.check(r.torsion_closed ? std::abs(*r.torsion_closed - 3.0) : 1.0,
                  "trefoil-torsion");
          s.check_bool(r.crosscheck.ran && r.crosscheck.pass, "trefoil-crosscheck");
        }
      },
      "trefoil");
  // Small dual-pipeline grid.
  s.check_call(
      [&] {
        const GridSummary grid =
            crosscheck_grid(-2, 2, -2, 2, {cplx(2.0), cplx(0.6, 1.1)}, tol);
        s.check_bool(grid.crosscheck_fail == 0, "grid-crosscheck");
        s.check(grid.worst_discrepancy, "grid-discrepancy");
        s.check_bool(grid.torsion_sign_consistent, "torsion-sign");
      },
      "grid");
  return s.result;
}

}  // namespace

std::vector<SuiteResult> run_selftest(std::uint64_t seed, const Tolerances& tol) {
  return {suite_chebyshev(seed, tol), suite_fox(seed, tol), suite_adjoint(seed, tol),
          suite_riley(seed, tol), suite_pipeline(seed, tol)};
}

}  // namespace atap
