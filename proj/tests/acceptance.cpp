// Acceptance suite: one line per criterion, nonzero exit if any fails.
// Usage: acceptance [path-to-cli]

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <random>
#include <string>
#include <vector>

#include <json.hpp>

#include "atap/pipeline.hpp"
#include "atap/selftest.hpp"
#include "highprec.hpp"

using namespace atap;

namespace {

const std::vector<cplx> kGridX = {cplx(2.0), cplx(1.7), cplx(0.6, 1.1),
                                  cplx(2.3, -0.4)};

struct Criterion {
  int id;
  std::string name;
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    pass = false;
    if (!detail.empty()) detail += "; ";
    detail += why;
  }
  void note(const std::string& info) {
    if (detail.empty()) detail = info;
  }
};

std::mt19937_64 rng(0xACCE57);

cplx rand_cplx(double lo, double hi) {
  std::uniform_real_distribution<double> d(lo, hi);
  const double re = d(rng);
  const double im = d(rng);
  return {re, im};
}

Mat2 rand_sl2(bool avoid_parabolic) {
  for (;;) {
    const cplx e = rand_cplx(-1.5, 1.5);
    if (std::abs(e) < 0.3) continue;
    const cplx f = rand_cplx(-1.5, 1.5);
    const cplx g = rand_cplx(-1.5, 1.5);
    const Mat2 M{e, f, g, (1.0 + f * g) / e};
    if (avoid_parabolic && std::abs(M.trace() * M.trace() - 4.0) < 0.05) continue;
    return M;
  }
}

char scratch[256];

Criterion criterion_1_dual_pipeline() {
  Criterion c{1, "dual-pipeline agreement on the (m,n,x) grid"};
  const auto t0 = std::chrono::steady_clock::now();
  double worst_cell_seconds = 0.0;
  double worst = 0.0;
  int roots = 0, skipped = 0;
  for (int m = -3; m <= 3; ++m) {
    if (m == 0) continue;
    for (int n = -3; n <= 3; ++n) {
      if (n == 0) continue;
      for (const cplx& x : kGridX) {
        const auto c0 = std::chrono::steady_clock::now();
        RunConfig cfg;
        cfg.m = m;
        cfg.n = n;
        cfg.x = x;
        const ComputeResult res = compute_records(cfg);
        for (const OutputRecord& rec : res.records) {
          if (rec.delta_source != "closed") {
            ++skipped;  // degenerate root: closed form skipped by contract
            continue;
          }
          ++roots;
          if (!rec.crosscheck.ran || !rec.crosscheck.pass ||
              rec.crosscheck.discrepancy > 1e-8) {
            snprintf(scratch, sizeof scratch, "m=%d n=%d x=(%g,%g) disc=%.3e", m, n,
                     x.real(), x.imag(), rec.crosscheck.discrepancy);
            c.fail(scratch);
          }
          worst = std::max(worst, rec.crosscheck.discrepancy);
        }
        const double cell_s = std::chrono::duration<double>(
                                  std::chrono::steady_clock::now() - c0)
                                  .count();
        worst_cell_seconds = std::max(worst_cell_seconds, cell_s);
        if (cell_s > 1.0) {
          snprintf(scratch, sizeof scratch, "cell m=%d n=%d took %.2fs", m, n, cell_s);
          c.fail(scratch);
        }
      }
    }
  }
  const double total_s =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (total_s > 60.0) {
    snprintf(scratch, sizeof scratch, "total %.1fs > 60s", total_s);
    c.fail(scratch);
  }
  snprintf(scratch, sizeof scratch,
           "%d roots, %d degenerate-skipped, worst disc %.2e, %.1fs total, "
           "%.2fs worst cell",
           roots, skipped, worst, total_s, worst_cell_seconds);
  c.note(scratch);
  return c;
}

Criterion criterion_2_trefoil() {
  Criterion c{2, "trefoil worked example (m=n=1, x=2)"};
  RunConfig cfg;
  cfg.m = 1;
  cfg.n = 1;
  cfg.x = cplx(2.0);
  const ComputeResult res = compute_records(cfg);
  if (res.records.size() != 1) {
    c.fail("expected exactly one root");
    return c;
  }
  const OutputRecord& r = res.records[0];
  const auto expect = [&](const char* what, cplx got, cplx want) {
    if (std::abs(got - want) > 1e-9) {
      snprintf(scratch, sizeof scratch, "%s = (%g,%g), want (%g,%g)", what, got.real(),
               got.imag(), want.real(), want.imag());
      c.fail(scratch);
    }
  };
  expect("y", r.y, cplx(3.0));
  expect("quad_mid", r.quad_mid.value_or(cplx(1e9)), cplx(-1.0));
  expect("D1", r.D1.value_or(cplx(1e9)), cplx(1.0));
  expect("D2", r.D2.value_or(cplx(1e9)), cplx(5.0));
  expect("torsion_closed", r.torsion_closed.value_or(cplx(1e9)), cplx(3.0));
  if (!r.torsion_limit || std::abs(std::abs(*r.torsion_limit) - 3.0) > 1e-9)
    c.fail("|torsion_limit| != 3");
  // Delta proportional to (t-1)(t^2+t+1) = t^3 - 1.
  if (r.delta_coeffs.size() != 4 || std::abs(r.delta_coeffs[0] + 1.0) > 1e-9 ||
      std::abs(r.delta_coeffs[1]) > 1e-9 || std::abs(r.delta_coeffs[2]) > 1e-9 ||
      std::abs(r.delta_coeffs[3] - 1.0) > 1e-9)
    c.fail("Delta != t^3 - 1");
  c.note("y=3, quad_mid=-1, D1=1, D2=5, torsion=3, Delta=t^3-1");
  return c;
}

Criterion criterion_3_closed_form_oracles() {
  Criterion c{3, "power/geometric-sum closed forms vs brute force"};
  double worst = 0.0;
  for (int trial = 0; trial < 50; ++trial) {
    const Mat2 M = rand_sl2(true);
    const Mat3 A = ad(M);
    const Mat3 Ainv = ad(inverse_unimodular(M));
    for (long n = -6; n <= 8; ++n) {
      Mat3 pow_brute = Mat3::identity();
      for (long i = 0; i < std::labs(n); ++i) pow_brute = pow_brute * (n >= 0 ? A : Ainv);
      const double perr = mat3_sup_diff(pow_brute, ad_power_closed(M, n)) /
                          (1.0 + mat3_sup_norm(pow_brute));
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
      const double serr = mat3_sup_diff(sum_brute, ad_geom_sum_closed(M, n)) /
                          (1.0 + mat3_sup_norm(sum_brute));
      worst = std::max({worst, perr, serr});
      if (perr > 1e-8 || serr > 1e-8) {
        snprintf(scratch, sizeof scratch, "n=%ld perr=%.2e serr=%.2e", n, perr, serr);
        c.fail(scratch);
      }
    }
  }
  bool threw = false;
  try {
    ad_geom_sum_closed(Mat2{cplx(1.0), cplx(1.0), cplx(0.0), cplx(1.0)}, 4);
  } catch (const DegenerateTrace&) {
    threw = true;
  }
  if (!threw) c.fail("parabolic input did not raise DegenerateTrace");
  snprintf(scratch, sizeof scratch, "worst rel err %.2e over 50 matrices, n in [-6,8]",
           worst);
  c.note(scratch);
  return c;
}

Mat3 quad_phi_const(const GroupRingElt& elt, const NonabelianRep& rep) {
  using detail::qcplx;
  const detail::M2t<qcplx> ra{detail::to_quad(rep.rho_a.a11), detail::to_quad(rep.rho_a.a12),
                              detail::to_quad(rep.rho_a.a21), detail::to_quad(rep.rho_a.a22)};
  const detail::M2t<qcplx> rb{detail::to_quad(rep.rho_b.a11), detail::to_quad(rep.rho_b.a12),
                              detail::to_quad(rep.rho_b.a21), detail::to_quad(rep.rho_b.a22)};
  const auto M = detail::phi_map_t<qcplx>(elt, ra, rb);
  Mat3 out;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      out.e[i][j] = M.e[i][j].is_zero() ? cplx(0.0) : detail::to_double(M.e[i][j].coeffs[0]);
  return out;
}

Criterion criterion_4_phi_factors() {
  Criterion c{4, "Phi-factor closed forms vs brute force on grid reps"};
  double worst = 0.0;
  int checked = 0, degenerate = 0;
  for (int m = -3; m <= 3; ++m) {
    if (m == 0) continue;
    for (int n = -3; n <= 3; ++n) {
      if (n == 0) continue;
      const KnotParams p{m, n};
      const Word w = build_w(m);
      const Word am = (Word::gen(Gen::a, -1) * Word::gen(Gen::b)).pow(m);
      const Word ab = Word::gen(Gen::a) * Word::gen(Gen::b, -1);
      for (const cplx& x : kGridX) {
        const RileyRootsResult rr = riley_roots(p, s_from_x(x));
        for (const NonabelianRep& rep : rr.reps) {
          const auto check_one = [&](const char* name, auto&& factor,
                                     const GroupRingElt& elt) {
            try {
              const Mat3 closed = factor();
              const Mat3 oracle = quad_phi_const(elt, rep);
              const double err =
                  mat3_sup_diff(closed, oracle) / (1.0 + mat3_sup_norm(oracle));
              worst = std::max(worst, err);
              ++checked;
              if (err > 1e-7) {
                snprintf(scratch, sizeof scratch, "%s m=%d n=%d err=%.2e", name, m, n,
                         err);
                c.fail(scratch);
              }
            } catch (const Error&) {
              ++degenerate;  // excluded by the non-degenerate-trace hypothesis
            }
          };
          check_one(
              "s1", [&] { return phi_factor_s1(p, rep); }, delta_p(w.inverse(), n - 1));
          check_one(
              "s2", [&] { return phi_factor_s2(p, rep); }, GroupRingElt::from_word(am));
          check_one(
              "s3", [&] { return phi_factor_s3(p, rep); }, delta_p(ab, m - 1));
        }
      }
    }
  }
  snprintf(scratch, sizeof scratch, "%d factors checked (%d degenerate-skipped), worst %.2e",
           checked, degenerate, worst);
  c.note(scratch);
  return c;
}

Criterion criterion_5_lemma() {
  Criterion c{5, "relator Fox derivative equals its closed form exactly"};
  int cases = 0;
  for (int m = -3; m <= 3; ++m) {
    if (m == 0) continue;
    for (int n = -3; n <= 3; ++n) {
      if (n == 0) continue;
      const KnotParams p{m, n};
      ++cases;
      if (!(fox_derivative(build_relator(p), Gen::a) == relator_derivative_closed(p))) {
        snprintf(scratch, sizeof scratch, "mismatch at m=%d n=%d", m, n);
        c.fail(scratch);
      }
    }
  }
  snprintf(scratch, sizeof scratch, "%d (m,n) cases, integer-exact", cases);
  c.note(scratch);
  return c;
}

Criterion criterion_6_structural() {
  Criterion c{6, "structural identities (det Phi(b-1), Chebyshev, Prop iii)"};
  double worst_det = 0.0, worst_cheb = 0.0, worst_iii = 0.0;
  for (int m = -3; m <= 3; ++m) {
    if (m == 0) continue;
    for (int n = -3; n <= 3; ++n) {
      if (n == 0) continue;
      const KnotParams p{m, n};
      for (const cplx& x : kGridX) {
        const cplx s = s_from_x(x);
        const RileyRootsResult rr = riley_roots(p, s);
        for (const NonabelianRep& rep : rr.reps) {
          const LaurentPoly got = det_phi_b_minus_1(rep);
          const LaurentPoly expect = LaurentPoly(0, {cplx(-1.0), cplx(1.0)}) *
                                     LaurentPoly(0, {-s * s, cplx(1.0)}) *
                                     LaurentPoly(0, {-1.0 / (s * s), cplx(1.0)});
          const double derr = laurent_sup_diff(got, expect) / expect.sup_norm();
          worst_det = std::max(worst_det, derr);
          if (derr > 1e-10) {
            snprintf(scratch, sizeof scratch, "det Phi(b-1) err %.2e at m=%d n=%d", derr,
                     m, n);
            c.fail(scratch);
          }
          try {
            const RileyIdentityReport rpt = riley_identity_check(p, rep);
            worst_iii = std::max(worst_iii, rpt.worst_rel_err);
            if (!rpt.pass()) {
              snprintf(scratch, sizeof scratch, "Prop(iii) err %.2e at m=%d n=%d",
                       rpt.worst_rel_err, m, n);
              c.fail(scratch);
            }
          } catch (const DegenerateInput&) {
          }
        }
      }
    }
  }
  std::uniform_real_distribution<double> seg(-2.0, 2.0);
  for (int m = -12; m <= 12; ++m) {
    for (int trial = 0; trial < 20; ++trial) {
      const cplx y = (trial % 2 == 0) ? cplx(seg(rng)) : 0.5 * rand_cplx(-1.0, 1.0);
      const cplx sm = cheb_eval(m, y);
      const cplx sm1 = cheb_eval(m - 1, y);
      const double err = std::abs(sm * sm - y * sm * sm1 + sm1 * sm1 - 1.0);
      worst_cheb = std::max(worst_cheb, err);
      if (err > 1e-9) {
        snprintf(scratch, sizeof scratch, "Chebyshev identity err %.2e at m=%d", err, m);
        c.fail(scratch);
      }
    }
  }
  snprintf(scratch, sizeof scratch, "worst: det %.1e, cheb %.1e, prop-iii %.1e",
           worst_det, worst_cheb, worst_iii);
  c.note(scratch);
  return c;
}

Criterion criterion_7_rep_validity() {
  Criterion c{7, "representation validity and non-root rejection"};
  double worst_verify = 0.0, worst_reject = 1e300;
  for (int m = -3; m <= 3; ++m) {
    if (m == 0) continue;
    for (int n = -3; n <= 3; ++n) {
      if (n == 0) continue;
      const KnotParams p{m, n};
      for (const cplx& x : kGridX) {
        const cplx s = s_from_x(x);
        const RileyRootsResult rr = riley_roots(p, s);
        for (const NonabelianRep& rep : rr.reps) {
          const double v = verify_rep(rep, p);
          worst_verify = std::max(worst_verify, v);
          if (v > 1e-7) {
            snprintf(scratch, sizeof scratch, "verify %.2e at m=%d n=%d", v, m, n);
            c.fail(scratch);
          }
        }
        int rejected = 0;
        while (rejected < 20) {
          const cplx y = rand_cplx(-3.5, 3.5);
          bool near = std::abs(y - 2.0) < 0.05;
          for (const auto& rep : rr.reps) near = near || std::abs(y - rep.y) < 0.05;
          if (near) continue;
          ++rejected;
          const double v = verify_rep(make_rep(p, s, y), p);
          worst_reject = std::min(worst_reject, v);
          if (v < 1e-4) {
            snprintf(scratch, sizeof scratch,
                     "non-root y=(%g,%g) residual %.2e at m=%d n=%d", y.real(), y.imag(),
                     v, m, n);
            c.fail(scratch);
          }
        }
      }
    }
  }
  snprintf(scratch, sizeof scratch, "worst root verify %.1e; weakest rejection %.1e",
           worst_verify, worst_reject);
  c.note(scratch);
  return c;
}

Criterion criterion_8_torsion() {
  Criterion c{8, "torsion limit vs closed form with one global sign"};
  const GridSummary g = crosscheck_grid(-3, 3, -3, 3, kGridX);
  if (!g.torsion_sign_consistent) c.fail("no single global sign fits all records");
  if (g.worst_torsion_err > 1e-8) {
    snprintf(scratch, sizeof scratch, "worst torsion err %.2e", g.worst_torsion_err);
    c.fail(scratch);
  }
  snprintf(scratch, sizeof scratch,
           "global sigma = %d (torsion_limit = %s torsion_closed), worst err %.1e",
           g.torsion_sigma, g.torsion_sigma == 0 ? "-" : "+", g.worst_torsion_err);
  c.note(scratch);
  return c;
}

struct CliRun {
  int exit_code;
  std::string out;
};

CliRun run_cli(const std::string& cli, const std::string& args) {
  const std::string cmd = cli + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {-1, ""};
  std::string out;
  std::array<char, 4096> buf;
  size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
  return {WEXITSTATUS(pclose(pipe)), out};
}

Criterion criterion_9_cli(const std::string& cli) {
  Criterion c{9, "CLI exit codes and JSON round trip"};
  if (cli.empty()) {
    c.fail("no CLI path supplied");
    return c;
  }
  const auto expect_code = [&](const std::string& args, int want) {
    const CliRun r = run_cli(cli, args);
    if (r.exit_code != want) {
      snprintf(scratch, sizeof scratch, "`%s` exited %d, want %d", args.c_str(),
               r.exit_code, want);
      c.fail(scratch);
    }
    return r;
  };

  const CliRun good = expect_code("compute --m 1 --n 1 --x 2 --format json", 0);
  expect_code("compute --m 1 --n 2 --parabolic --format csv", 0);
  expect_code("riley --m 2 --n 1 --x 2 --format json", 0);
  expect_code("compute --m 0 --n 1 --x 2", 1);
  expect_code("compute --m 1 --n 1 --x 2 --s 1", 1);
  expect_code("compute --m 1 --n 1 --x 1.7320508075688772", 2);
  expect_code("crosscheck --m-range 3..1 --n-range 1..1", 1);
  expect_code("crosscheck --m-range 1..2 --n-range 1..2 --x-samples 2", 0);
  expect_code("crosscheck --m-range 1..1 --n-range 1..2 --x-samples 2 --perturb 0.02", 3);
  expect_code("selftest --seed 11", 0);
  expect_code("selftest --seed 11 --tol 1e-16", 3);

  try {
    const auto j = nlohmann::json::parse(good.out);
    if (!j.contains("version") || j["records"].size() != 1) c.fail("bad JSON shape");
    const auto& rec = j["records"][0];
    const auto cx = [&](const char* k) {
      return cplx(rec.at(k).at("re").get<double>(), rec.at(k).at("im").get<double>());
    };
    const cplx x = cx("x");
    const cplx qm = (cx("A") * x * x * x * x + cx("B") * x * x + cx("C")) / cx("D2");
    if (std::abs(qm - cx("quad_mid")) > 1e-12 * (1.0 + std::abs(cx("quad_mid"))))
      c.fail("quad_mid round trip");
    const double mn =
        rec["params"]["m"].get<double>() * rec["params"]["n"].get<double>();
    const cplx tc = (2.0 * mn - cx("quad_mid")) / cx("D1");
    if (std::abs(tc - cx("torsion_closed")) >
        1e-12 * (1.0 + std::abs(cx("torsion_closed"))))
      c.fail("torsion_closed round trip");
  } catch (const std::exception& e) {
    c.fail(std::string("JSON parse: ") + e.what());
  }
  c.note("exit-code matrix and derived-field round trip");
  return c;
}

}  // namespace

int main(int argc, char** argv) {
  const std::string cli = argc > 1 ? argv[1] : "";
  std::vector<Criterion> results;
  results.push_back(criterion_1_dual_pipeline());
  results.push_back(criterion_2_trefoil());
  results.push_back(criterion_3_closed_form_oracles());
  results.push_back(criterion_4_phi_factors());
  results.push_back(criterion_5_lemma());
  results.push_back(criterion_6_structural());
  results.push_back(criterion_7_rep_validity());
  results.push_back(criterion_8_torsion());
  results.push_back(criterion_9_cli(cli));

  int failures = 0;
  for (const Criterion& c : results) {
    printf("[%s] criterion %d: %s%s%s\n", c.pass ? "PASS" : "FAIL", c.id, c.name.c_str(),
           c.detail.empty() ? "" : " -- ", c.detail.c_str());
    if (!c.pass) ++failures;
  }
  if (failures) printf("%d of %zu criteria failed\n", failures, results.size());
  else printf("all %zu criteria passed\n", results.size());
  return failures == 0 ? 0 : 1;
}
