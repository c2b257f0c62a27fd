#include "atap/pipeline.hpp"

#include <algorithm>
#include <cmath>

namespace atap {

std::pair<cplx, cplx> resolve_s_x(const RunConfig& config) {
  if (config.x.has_value() == config.s.has_value())
    throw InvalidParam("exactly one of x / s must be supplied");
  cplx s = config.s ? *config.s : s_from_x(*config.x);
  if (s == cplx(0.0)) throw InvalidParam("s = 0");
  return {s, s + 1.0 / s};
}

namespace {

void push_unique(std::vector<std::string>& flags, const std::string& f) {
  if (std::find(flags.begin(), flags.end(), f) == flags.end()) flags.push_back(f);
}

OutputRecord build_record(const KnotParams& params, const NonabelianRep& rep,
                          const Tolerances& tol) {
  OutputRecord rec;
  rec.params = params;
  rec.s = rep.s;
  rec.x = rep.x;
  rec.y = rep.y;
  rec.z = rep.z;
  rec.riley_residual = rep.riley_residual;
  rec.verify_residual = verify_rep(rep, params);
  rec.multiplicity = rep.multiplicity;
  if (rep.multiplicity > 1) push_unique(rec.flags, kFlagMultiplicity);

  // Fox pipeline first: it has no generic-position requirements.
  FoxDelta fox;
  bool division_exact = true;
  try {
    fox = delta_fox(params, rep, tol);
  } catch (const InexactDivision&) {
    // Signals a non-representation (perturbed root) or numerical breakdown;
    // redo with the remainder gate open so the record still carries data.
    division_exact = false;
    Tolerances relaxed = tol;
    relaxed.division = 1e300;
    fox = delta_fox(params, rep, relaxed);
    push_unique(rec.flags, "inexact-division");
  }

  bool closed_ok = false;
  DeltaResult closed;
  try {
    closed = delta_closed(params, rep, tol);
    closed_ok = true;
  } catch (const ClosedFormSingular& e) {
    if (e.culprit == "z^2-4" || e.culprit == "y^2-4")
      push_unique(rec.flags, kFlagDegenerateTrace);
    else
      push_unique(rec.flags, kFlagClosedFormSingular);
    push_unique(rec.flags, std::string(kFlagClosedFormSingular) + ":" + e.culprit);
  }

  if (closed_ok) {
    rec.A = closed.coeff_A;
    rec.B = closed.coeff_B;
    rec.C = closed.coeff_C;
    rec.quad_mid = closed.quad_mid;
    rec.D1 = closed.prefactor_denom_D1;
    rec.D2 = closed.quad_denom_D2;
    rec.torsion_closed = closed.torsion;
    rec.delta_coeffs = laurent_normalize_min0(closed.laurent_form).coeffs;
    rec.delta_source = "closed";
    for (const auto& f : closed.flags) push_unique(rec.flags, f);

    rec.crosscheck.ran = true;
    const CrossCheckReport cc = cross_check(fox, closed, tol);
    rec.crosscheck.pass = cc.pass && division_exact;
    rec.crosscheck.discrepancy = cc.discrepancy;
    rec.crosscheck.unit_shift = cc.unit_shift;
    rec.crosscheck.sign = cc.sign;
    if (cc.sign < 0) push_unique(rec.flags, kFlagSignFlipped);
    try {
      rec.torsion_limit = torsion_limit(closed.laurent_form, tol);
    } catch (const InexactDivision&) {
      push_unique(rec.flags, "torsion-limit-division-failed");
    }
  } else {
    rec.delta_coeffs = fox.delta.coeffs;
    rec.delta_source = "fox";
    // Up to the Wada unit only; reported for completeness.
    try {
      rec.torsion_limit = torsion_limit(fox.delta, tol);
    } catch (const InexactDivision&) {
      push_unique(rec.flags, "torsion-limit-division-failed");
    }
  }
  // The Corollary assumes longitude-regularity, which has no algorithmic
  // criterion; every torsion value is reported under that caveat.
  if (rec.torsion_closed || rec.torsion_limit)
    push_unique(rec.flags, kFlagRegularityAssumed);
  return rec;
}

}  // namespace

ComputeResult compute_records(const RunConfig& config) {
  const KnotParams params{config.m, config.n};
  validate_params(params);
  auto [s, x] = resolve_s_x(config);

  ComputeResult result;
  RileyRootsResult roots = riley_roots(params, s, config.tol);
  result.discarded_abelian = roots.discarded_abelian;
  for (NonabelianRep& rep : roots.reps) {
    if (config.perturb != 0.0) {
      NonabelianRep perturbed =
          make_rep(params, rep.s, rep.y + cplx(config.perturb), config.tol);
      perturbed.multiplicity = rep.multiplicity;
      rep = perturbed;
    }
    result.records.push_back(build_record(params, rep, config.tol));
  }
  return result;
}

RileyListing riley_listing(const RunConfig& config) {
  const KnotParams params{config.m, config.n};
  validate_params(params);
  auto [s, x] = resolve_s_x(config);

  RileyListing listing;
  listing.s = s;
  listing.x = x;
  listing.coeffs = riley_poly(params, s).coeffs;

  const DensePoly phi = riley_poly(params, s);
  if (phi.degree() >= 1) {
    RileyRootsResult rr = riley_roots(params, s, config.tol);
    for (const NonabelianRep& rep : rr.reps)
      listing.roots.push_back({rep.y, rep.riley_residual, false, rep.multiplicity});
    // Recover the excluded abelian-locus roots for the listing.
    if (rr.discarded_abelian > 0) {
      for (const cplx& r : poly_roots(phi)) {
        if (std::abs(r - 2.0) <= config.tol.dedup) {
          listing.roots.push_back({r, std::abs(poly_eval(phi, r)), true, 1});
          break;
        }
      }
    }
  }
  return listing;
}

GridSummary crosscheck_grid(int m_lo, int m_hi, int n_lo, int n_hi,
                            const std::vector<cplx>& x_samples,
                            const Tolerances& tol, double perturb) {
  if (m_lo > m_hi || n_lo > n_hi || x_samples.empty())
    throw InvalidParam("crosscheck_grid: empty grid");
  bool any_cell = false;
  for (int m = m_lo; m <= m_hi; ++m)
    if (m != 0) any_cell = true;
  bool any_n = false;
  for (int n = n_lo; n <= n_hi; ++n)
    if (n != 0) any_n = true;
  if (!any_cell || !any_n) throw InvalidParam("crosscheck_grid: ranges contain only 0");

  GridSummary summary;
  int sigma0_ok = 0, sigma1_ok = 0, torsion_pairs = 0;

  for (int m = m_lo; m <= m_hi; ++m) {
    if (m == 0) continue;
    for (int n = n_lo; n <= n_hi; ++n) {
      if (n == 0) continue;
      for (const cplx& x : x_samples) {
        ++summary.cells;
        RunConfig cell;
        cell.m = m;
        cell.n = n;
        cell.x = x;
        cell.tol = tol;
        cell.perturb = perturb;
        ComputeResult res = compute_records(cell);
        for (OutputRecord& rec : res.records) {
          ++summary.records;
          const bool closed_ok = rec.delta_source == "closed";
          if (!closed_ok) {
            ++summary.closed_form_skipped;
            summary.flagged.push_back({m, n, x, rec});
            continue;
          }
          if (rec.crosscheck.ran) {
            summary.worst_discrepancy =
                std::max(summary.worst_discrepancy, rec.crosscheck.discrepancy);
            if (rec.crosscheck.pass) {
              ++summary.crosscheck_pass;
            } else {
              ++summary.crosscheck_fail;
              summary.failures.push_back({m, n, x, rec});
            }
          } else {
            ++summary.crosscheck_fail;
            summary.failures.push_back({m, n, x, rec});
          }
          if (rec.torsion_closed && rec.torsion_limit) {
            ++torsion_pairs;
            const double scale = 1.0 + std::abs(*rec.torsion_closed);
            const double e0 = std::abs(*rec.torsion_limit + *rec.torsion_closed);
            const double e1 = std::abs(*rec.torsion_limit - *rec.torsion_closed);
            if (e0 <= tol.crosscheck * scale) ++sigma0_ok;
            if (e1 <= tol.crosscheck * scale) ++sigma1_ok;
            summary.worst_torsion_err =
                std::max(summary.worst_torsion_err, std::min(e0, e1) / scale);
          }
        }
      }
    }
  }

  summary.torsion_sigma = sigma0_ok >= sigma1_ok ? 0 : 1;
  const int best = std::max(sigma0_ok, sigma1_ok);
  summary.torsion_sign_consistent = best == torsion_pairs;
  return summary;
}

}  // namespace atap
