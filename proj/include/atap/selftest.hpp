#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "atap/scalar_poly.hpp"

namespace atap {

struct SuiteResult {
  std::string name;
  int checks = 0;
  int failures = 0;
  double worst_err = 0.0;
  std::vector<std::string> notes;  // one line per failure (first few)
  bool pass() const { return failures == 0; }
};

// Runs the module invariant suites (chebyshev, fox, adjoint, riley, pipeline)
// with the given seed; deterministic for a fixed seed. The equality tolerance
// of `tol` gates the agreement checks, so an impossible override (1e-16)
// reports failures rather than passing vacuously.
std::vector<SuiteResult> run_selftest(std::uint64_t seed, const Tolerances& tol = {});

}  // namespace atap
