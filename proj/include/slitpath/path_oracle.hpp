#pragma once

#include <memory>
#include <vector>

#include "slitpath/gaussians.hpp"
#include "slitpath/paths.hpp"

namespace slitpath {

/// Half-width of every truncated integration domain, in units of the
/// Gaussian envelope (σ0 for the source, β for a slit).
inline constexpr double kTruncationWidths = 8.0;

/// Evaluates a path wave function by brute-force nested quadrature of the
/// propagator/transmission chain, one adaptive Gauss–Kronrod integral per
/// intermediate position. Shares nothing with the Gaussian engine beyond the
/// parameter set.
///
/// Inner integrals are memoised per level, so successive evaluations on the
/// same screen reuse most of the work. Not thread-safe; use one instance per
/// thread.
class PathIntegralOracle {
 public:
  PathIntegralOracle(const PhysicalParams& params, PathLabel label, double tol);
  ~PathIntegralOracle();
  PathIntegralOracle(PathIntegralOracle&&) noexcept;
  PathIntegralOracle& operator=(PathIntegralOracle&&) noexcept;

  /// ψ_label(x). Throws TruncationTooTight or NonConvergent when tol cannot
  /// be met.
  Complex operator()(double x);

  /// Total integrand evaluations so far, across all levels.
  long evaluations() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

/// One-shot convenience wrapper.
Complex path_amplitude_by_quadrature(const PhysicalParams& params, PathLabel label, double x,
                                     double tol);

}  // namespace slitpath
