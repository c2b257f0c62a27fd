#pragma once

#include <stdexcept>
#include <string>

namespace atap {

// Base class for all library errors.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Invalid parameter at an operation boundary (m=0, s=0, y=2, ...).
class InvalidParam : public Error {
public:
  using Error::Error;
};

// An input that is degenerate for the requested operation (zero/constant
// polynomial for root finding, vanishing identity denominator, ...).
class DegenerateInput : public Error {
public:
  using Error::Error;
};

// Laurent evaluation at t = 0.
class EvalAtZero : public Error {
public:
  using Error::Error;
};

// Long division left a remainder above tolerance.
class InexactDivision : public Error {
public:
  using Error::Error;
};

// A matrix tagged as a representation image has |det - 1| above tolerance.
class NotUnimodular : public Error {
public:
  using Error::Error;
};

// Parabolic/central trace (mu = +-2, z = +-2, y = -2) where a closed form
// divides by mu^2 - 4.
class DegenerateTrace : public Error {
public:
  using Error::Error;
};

// A closed form that assumes the Riley equation was handed a rep whose
// Riley residual exceeds tolerance.
class NotOnRileyVariety : public Error {
public:
  using Error::Error;
};

// A closed-form denominator vanished; carries the culprit's name.
class ClosedFormSingular : public Error {
public:
  ClosedFormSingular(const std::string& culprit_name, const std::string& what)
      : Error(what), culprit(culprit_name) {}
  std::string culprit;
};

}  // namespace atap
