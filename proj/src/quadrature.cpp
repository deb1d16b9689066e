#include "slitpath/quadrature.hpp"

#include <sstream>

namespace slitpath {

namespace {

constexpr int kPeakSamples = 257;

}  // namespace

QuadratureResult<Complex> quadrature_oracle(const ComplexIntegrand& f, double a, double b,
                                            double tol, int max_intervals) {
  if (!(b > a) || !std::isfinite(a) || !std::isfinite(b)) {
    throw ParamsInvalid("quadrature domain must be a finite interval with a < b");
  }
  if (!(tol > 0.0)) throw ParamsInvalid("quadrature tolerance must be positive");

  double peak = 0.0;
  for (int i = 0; i < kPeakSamples; ++i) {
    const double x = a + (b - a) * i / (kPeakSamples - 1);
    peak = std::max(peak, std::abs(f(x)));
  }
  if (peak == 0.0) return {};

  const double edge = std::max(std::abs(f(a)), std::abs(f(b)));
  if (edge > tol * peak) {
    std::ostringstream os;
    os.precision(3);
    os << "integrand at the domain ends is " << edge / peak
       << " of its peak, above the requested tolerance " << tol;
    throw TruncationTooTight(os.str());
  }

  QuadratureOptions options;
  options.rel_tol = tol;
  options.max_intervals = max_intervals;
  return integrate_adaptive(f, a, b, options);
}

}  // namespace slitpath
