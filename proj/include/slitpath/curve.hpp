#pragma once

#include <span>
#include <vector>

#include "slitpath/gaussians.hpp"
#include "slitpath/paths.hpp"

namespace slitpath {

/// A real function sampled on screen positions.
struct SampledFunction {
  std::vector<double> xs;
  std::vector<double> values;
};

/// Non-negative density sampled on the screen, together with the constant N
/// it was divided by: values = raw / N.
class ProbabilityCurve {
 public:
  ProbabilityCurve() = default;
  /// Throws Error if the sizes differ or any value is negative or non-finite.
  ProbabilityCurve(std::vector<double> xs, std::vector<double> values, double norm_constant);

  /// values = raw / norm_constant.
  static ProbabilityCurve from_raw(std::vector<double> xs, const std::vector<double>& raw,
                                   double norm_constant);

  const std::vector<double>& xs() const { return xs_; }
  const std::vector<double>& values() const { return values_; }
  double norm_constant() const { return norm_constant_; }
  std::size_t size() const { return values_.size(); }
  double operator[](std::size_t i) const { return values_[i]; }

  /// norm_constant · values.
  std::vector<double> raw() const;

  /// Trapezoid rule over the grid.
  double integral() const;
  double max() const;

  /// Rescaled to unit trapezoid integral; the constant absorbs the factor so
  /// that raw() is unchanged.
  ProbabilityCurve normalize() const;

 private:
  std::vector<double> xs_;
  std::vector<double> values_;
  double norm_constant_ = 1.0;
};

double trapezoid(std::span<const double> xs, std::span<const double> ys);

/// Interior samples strictly above their left neighbour and not below their
/// right one.
int count_local_maxima(std::span<const double> values);

/// max_i |a_i − b_i|.
double max_abs_difference(std::span<const double> a, std::span<const double> b);

/// Throws GridMismatch unless both grids are identical sample for sample.
void require_same_grid(std::span<const double> a, std::span<const double> b);

/// Σ_g |Σ_{k∈g} w_k f_k(x)|²: an incoherent mixture of coherent path sums,
/// the shape every which-way probability distribution takes. Norm is exact.
class IncoherentMixture {
 public:
  IncoherentMixture& add_group(std::vector<WeightedForm> group);

  double density(double x) const;
  /// ∫ density dx, summed from exact overlap integrals.
  double total() const;
  std::vector<double> sample(std::span<const double> xs) const;
  /// Curve normalised by the exact total.
  ProbabilityCurve curve(const ScreenGrid& grid) const;

  const std::vector<std::vector<WeightedForm>>& groups() const { return groups_; }

 private:
  std::vector<std::vector<WeightedForm>> groups_;
};

}  // namespace slitpath
