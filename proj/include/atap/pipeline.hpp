#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "atap/atap_core.hpp"

namespace atap {

struct RunConfig {
  int m = 1;
  int n = 1;
  std::optional<cplx> x;  // exactly one of x / s is set
  std::optional<cplx> s;
  Tolerances tol;
  std::uint64_t seed = 1;
  // Debug hook: offsets every Riley root before building the representation,
  // turning it into a non-root so downstream verification must fail.
  double perturb = 0.0;
};

struct CrossCheckRecord {
  bool ran = false;
  bool pass = false;
  double discrepancy = 0.0;
  long unit_shift = 0;
  int sign = 1;
};

// One emitted record per accepted Riley root; optional fields are absent when
// the closed form was skipped (flags explain why).
struct OutputRecord {
  KnotParams params;
  cplx s{}, x{}, y{}, z{};
  double riley_residual = 0.0;
  double verify_residual = 0.0;
  int multiplicity = 1;

  std::vector<cplx> delta_coeffs;  // expanded, minimal exponent 0
  std::string delta_source;        // "closed" or "fox"

  std::optional<cplx> A, B, C, quad_mid, D1, D2;
  std::optional<cplx> torsion_closed;
  std::optional<cplx> torsion_limit;

  CrossCheckRecord crosscheck;
  std::vector<std::string> flags;
};

struct ComputeResult {
  std::vector<OutputRecord> records;
  int discarded_abelian = 0;
  bool no_usable_roots() const { return records.empty(); }
};

// Resolve (s, x) from the config; throws InvalidParam unless exactly one of
// x / s is supplied (and s != 0).
std::pair<cplx, cplx> resolve_s_x(const RunConfig& config);

// Full pipeline for one (m, n, x-or-s): Riley roots, both Delta routes,
// torsion values and the cross-check, one record per root.
ComputeResult compute_records(const RunConfig& config);

// Riley polynomial listing (cmd_riley).
struct RileyListing {
  std::vector<cplx> coeffs;  // ascending in y
  struct Root {
    cplx y;
    double residual;
    bool excluded_abelian;
    int multiplicity;
  };
  std::vector<Root> roots;
  cplx s, x;
};

RileyListing riley_listing(const RunConfig& config);

// Grid run over m/n ranges and x samples (cmd_crosscheck).
struct GridCell {
  int m, n;
  cplx x;
  OutputRecord record;
};

struct GridSummary {
  int cells = 0;
  int records = 0;
  int crosscheck_pass = 0;
  int crosscheck_fail = 0;
  int closed_form_skipped = 0;
  double worst_discrepancy = 0.0;
  // Global sign sigma in |torsion_limit + (-1)^sigma torsion_closed| <= tol:
  // sigma = 0 holds across the grid (Eq. (1) vs the Corollary).
  int torsion_sigma = 0;
  bool torsion_sign_consistent = true;
  double worst_torsion_err = 0.0;
  std::vector<GridCell> failures;  // failing or flagged cells
  std::vector<GridCell> flagged;
  bool pass() const { return crosscheck_fail == 0 && torsion_sign_consistent; }
};

GridSummary crosscheck_grid(int m_lo, int m_hi, int n_lo, int n_hi,
                            const std::vector<cplx>& x_samples,
                            const Tolerances& tol = {}, double perturb = 0.0);

}  // namespace atap
