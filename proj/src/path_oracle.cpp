#include "slitpath/path_oracle.hpp"

#include <cmath>
#include <numbers>
#include <unordered_map>

#include "slitpath/quadrature.hpp"

namespace slitpath {

struct PathIntegralOracle::Impl {
  PhysicalParams params;
  std::vector<Slit> slits;
  double tol = 1e-8;
  // memo[level] caches f_level(x) for 1 ≤ level ≤ slits.size().
  std::vector<std::unordered_map<double, Complex>> memo;
  long evaluations = 0;

  Complex propagator(double x, double y, double duration) const {
    const double m = params.mass_over_hbar;
    const Complex i{0.0, 1.0};
    const Complex prefactor = std::sqrt(m / (2.0 * std::numbers::pi * i * duration));
    return prefactor * std::exp(i * (m * (x - y) * (x - y) / (2.0 * duration)));
  }

  double transmission(Slit slit, double y) const {
    const double offset = y - slit_center(slit, params);
    return std::exp(-offset * offset / (2.0 * params.beta * params.beta));
  }

  double duration_into(std::size_t level) const {
    if (level == 1) return params.t;
    return level == slits.size() + 1 ? params.tau : params.epsilon;
  }

  // f_level(x): amplitude at the position reached after `level` propagation
  // legs. Level slits.size()+1 is the screen.
  Complex value(std::size_t level, double x) {
    const bool cached = level <= slits.size();
    if (cached) {
      if (auto it = memo[level].find(x); it != memo[level].end()) return it->second;
    }

    const double duration = duration_into(level);
    const std::size_t lower = level - 1;
    Complex result;
    if (lower == 0) {
      const SourcePacket source{params.sigma0};
      const double reach = kTruncationWidths * params.sigma0;
      result = quadrature_oracle(
                   [&](double y) {
                     ++evaluations;
                     return propagator(x, y, duration) * source(y);
                   },
                   -reach, reach, tol)
                   .value;
    } else {
      const Slit slit = slits[lower - 1];
      const double center = slit_center(slit, params);
      const double reach = kTruncationWidths * params.beta;
      result = quadrature_oracle(
                   [&](double y) {
                     ++evaluations;
                     return propagator(x, y, duration) * transmission(slit, y) * value(lower, y);
                   },
                   center - reach, center + reach, tol)
                   .value;
    }

    if (cached) memo[level].emplace(x, result);
    return result;
  }
};

PathIntegralOracle::PathIntegralOracle(const PhysicalParams& params, PathLabel label, double tol)
    : impl_(std::make_unique<Impl>()) {
  params.validate();
  impl_->params = params;
  impl_->slits = slit_sequence(label);
  impl_->tol = tol;
  impl_->memo.resize(impl_->slits.size() + 1);
}

PathIntegralOracle::~PathIntegralOracle() = default;
PathIntegralOracle::PathIntegralOracle(PathIntegralOracle&&) noexcept = default;
PathIntegralOracle& PathIntegralOracle::operator=(PathIntegralOracle&&) noexcept = default;

Complex PathIntegralOracle::operator()(double x) { return impl_->value(impl_->slits.size() + 1, x); }

long PathIntegralOracle::evaluations() const { return impl_->evaluations; }

Complex path_amplitude_by_quadrature(const PhysicalParams& params, PathLabel label, double x,
                                     double tol) {
  PathIntegralOracle oracle(params, label, tol);
  return oracle(x);
}

}  // namespace slitpath
