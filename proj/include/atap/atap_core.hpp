#pragma once

#include <string>
#include <vector>

#include "atap/adjoint_rep.hpp"
#include "atap/freegroup_fox.hpp"
#include "atap/scalar_poly.hpp"
#include "atap/sl2_reps.hpp"

namespace atap {

// Result flag names used across records and reports.
inline constexpr const char* kFlagClosedFormSingular = "closed-form-singular";
inline constexpr const char* kFlagDegenerateTrace = "degenerate-trace";
inline constexpr const char* kFlagMultiplicity = "multiplicity";
inline constexpr const char* kFlagSignFlipped = "sign-flipped";
inline constexpr const char* kFlagRegularityAssumed = "regularity-assumed";

// The adjoint twisted Alexander polynomial in Theorem form:
//   Delta(t) = (t-1) (mn t^2 - quad_mid t + mn) / D1,
//   quad_mid = (A x^4 + B x^2 + C) / D2,
//   D1 = (y+2-x^2)(4-x^2 + (y-2)(y+2-x^2) S_{m-1}^2(y)),
//   D2 = 4 + (y-2)(y+2-x^2) S_{m-1}^2(y),
// plus the Reidemeister torsion value (2mn - quad_mid)/D1.
struct DeltaResult {
  cplx prefactor_denom_D1{};
  cplx quad_denom_D2{};
  cplx coeff_A{};
  cplx coeff_B{};
  cplx coeff_C{};
  cplx quad_mid{};
  LaurentPoly laurent_form;
  cplx torsion{};
  std::vector<std::string> flags;
};

// Phi: Z[F_2] -> M(3, C[t^{+-1}]); each word u contributes
// coeff * t^(exponent sum of u) * Ad(rho(u)).
Mat3Laurent phi_map(const GroupRingElt& elt, const NonabelianRep& rep);

// det Phi(b - 1); equals (t-1)(t-s^2)(t-s^-2).
LaurentPoly det_phi_b_minus_1(const NonabelianRep& rep);

struct FoxDelta {
  LaurentPoly delta;  // quotient normalized to min_exp = 0
  long raw_min_exp = 0;
};

// Wada's quotient det Phi(dr/da) / det Phi(b-1) via the letter-by-letter
// Fox derivative of the concrete relator.
FoxDelta delta_fox(const KnotParams& params, const NonabelianRep& rep,
                   const Tolerances& tol = {});

struct TheoremCoeffs {
  cplx A, B, C;
};

// The A, B, C coefficient expressions of the closed form; throws
// ClosedFormSingular when y+2 or S_{m-1}(y) vanishes.
TheoremCoeffs theorem_coeffs(const KnotParams& params, const NonabelianRep& rep,
                             const Tolerances& tol = {});

// Full closed-form evaluation; throws ClosedFormSingular naming the culprit
// denominator (y+2, y^2-4, z^2-4, S_{m-1}(y), y+2-x^2, D1, D2).
DeltaResult delta_closed(const KnotParams& params, const NonabelianRep& rep,
                         const Tolerances& tol = {});

cplx torsion_closed(const KnotParams& params, const NonabelianRep& rep,
                    const Tolerances& tol = {});

// -(Delta(t)/(t-1)) at t = 1, by exact division.
cplx torsion_limit(const LaurentPoly& delta, const Tolerances& tol = {});

struct CrossCheckReport {
  bool pass = false;
  double discrepancy = 0.0;  // relative sup-norm vs the closed form
  long unit_shift = 0;       // power of t separating the raw quotients
  int sign = 1;              // +-1 unit applied to the fox side
};

// Compares the two pipelines modulo the Wada unit {+-1} t^k: both sides
// normalized to min_exp 0, sign chosen to minimize the discrepancy.
CrossCheckReport cross_check(const FoxDelta& fox, const DeltaResult& closed,
                             const Tolerances& tol = {});

}  // namespace atap
