#pragma once

#include <stdexcept>
#include <string>

namespace slitpath {

/// Base of every error thrown by the library. Each subclass names one
/// failure mode so callers (and the CLI) can react to it specifically.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// ∫exp(αx²+βx+γ) with Re(α) > 0.
class DivergentIntegral : public Error {
 public:
  using Error::Error;
};

/// ∫exp(αx²+βx+γ) with α = 0.
class DegenerateIntegral : public Error {
 public:
  using Error::Error;
};

/// Adaptive quadrature ran out of its subdivision budget.
class NonConvergent : public Error {
 public:
  using Error::Error;
};

/// The integrand has not decayed to the requested tolerance at the ends of
/// the truncated domain.
class TruncationTooTight : public Error {
 public:
  using Error::Error;
};

class ParamsInvalid : public Error {
 public:
  using Error::Error;
};

/// Two independent derivations of the same quantity disagree.
class InternalConsistency : public Error {
 public:
  using Error::Error;
};

class PhotonOverflow : public Error {
 public:
  using Error::Error;
};

class InvalidOutcome : public Error {
 public:
  using Error::Error;
};

class GridMismatch : public Error {
 public:
  using Error::Error;
};

class ConfigInvalid : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace slitpath
