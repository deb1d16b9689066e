#include "slitpath/curve.hpp"

#include <algorithm>
#include <cmath>

#include "slitpath/error.hpp"
#include "slitpath/parallel.hpp"

namespace slitpath {

ProbabilityCurve::ProbabilityCurve(std::vector<double> xs, std::vector<double> values,
                                   double norm_constant)
    : xs_(std::move(xs)), values_(std::move(values)), norm_constant_(norm_constant) {
  if (xs_.size() != values_.size()) throw GridMismatch("curve values do not match its grid");
  if (!std::isfinite(norm_constant_)) throw Error("curve normalisation is not finite");
  for (double v : values_) {
    if (!(v >= 0.0) || !std::isfinite(v)) throw Error("probability curve has a negative or non-finite value");
  }
}

ProbabilityCurve ProbabilityCurve::from_raw(std::vector<double> xs, const std::vector<double>& raw,
                                            double norm_constant) {
  if (!(norm_constant > 0.0)) throw Error("normalisation constant must be positive");
  std::vector<double> values(raw.size());
  std::transform(raw.begin(), raw.end(), values.begin(),
                 [norm_constant](double r) { return r / norm_constant; });
  return {std::move(xs), std::move(values), norm_constant};
}

std::vector<double> ProbabilityCurve::raw() const {
  std::vector<double> out(values_.size());
  std::transform(values_.begin(), values_.end(), out.begin(),
                 [this](double v) { return v * norm_constant_; });
  return out;
}

double ProbabilityCurve::integral() const { return trapezoid(xs_, values_); }

double ProbabilityCurve::max() const {
  return values_.empty() ? 0.0 : *std::max_element(values_.begin(), values_.end());
}

ProbabilityCurve ProbabilityCurve::normalize() const {
  const double area = integral();
  if (!(area > 0.0)) throw Error("cannot normalise a curve with zero area");
  std::vector<double> values(values_.size());
  std::transform(values_.begin(), values_.end(), values.begin(),
                 [area](double v) { return v / area; });
  return {xs_, std::move(values), norm_constant_ * area};
}

double trapezoid(std::span<const double> xs, std::span<const double> ys) {
  if (xs.size() != ys.size()) throw GridMismatch("trapezoid: sizes differ");
  double sum = 0.0;
  for (std::size_t i = 1; i < xs.size(); ++i) sum += 0.5 * (xs[i] - xs[i - 1]) * (ys[i] + ys[i - 1]);
  return sum;
}

int count_local_maxima(std::span<const double> values) {
  int count = 0;
  for (std::size_t i = 1; i + 1 < values.size(); ++i) {
    if (values[i] > values[i - 1] && values[i] >= values[i + 1]) ++count;
  }
  return count;
}

double max_abs_difference(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) throw GridMismatch("max_abs_difference: sizes differ");
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
  return worst;
}

void require_same_grid(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size() || !std::equal(a.begin(), a.end(), b.begin())) {
    throw GridMismatch("probability curves are sampled on different grids");
  }
}

IncoherentMixture& IncoherentMixture::add_group(std::vector<WeightedForm> group) {
  groups_.push_back(std::move(group));
  return *this;
}

double IncoherentMixture::density(double x) const {
  double sum = 0.0;
  for (const auto& group : groups_) sum += std::norm(coherent_sum(group, x));
  return sum;
}

double IncoherentMixture::total() const {
  double sum = 0.0;
  for (const auto& group : groups_) sum += coherent_norm(group);
  return sum;
}

std::vector<double> IncoherentMixture::sample(std::span<const double> xs) const {
  std::vector<double> out(xs.size());
  parallel_for(xs.size(), [&](std::size_t i) { out[i] = density(xs[i]); });
  return out;
}

ProbabilityCurve IncoherentMixture::curve(const ScreenGrid& grid) const {
  return ProbabilityCurve::from_raw(grid.xs, sample(grid.xs), total());
}

}  // namespace slitpath
