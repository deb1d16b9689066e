#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <limits>
#include <string>
#include <type_traits>
#include <vector>

#include "slitpath/error.hpp"
#include "slitpath/gaussians.hpp"

namespace slitpath {

struct QuadratureOptions {
  double rel_tol = 1e-10;
  double abs_tol = 0.0;
  int max_intervals = 4000;
};

template <class V>
struct QuadratureResult {
  V value{};
  double error = 0.0;
  int evaluations = 0;
  int intervals = 0;
};

inline double quadrature_magnitude(double v) { return std::abs(v); }
inline double quadrature_magnitude(const Complex& v) { return std::abs(v); }

namespace detail {

// 15-point Kronrod extension of the 7-point Gauss rule (QUADPACK qk15).
inline constexpr std::array<double, 8> kKronrodNodes = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
inline constexpr std::array<double, 8> kKronrodWeights = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
// Gauss weights for the odd-indexed Kronrod nodes (1, 3, 5, 7).
inline constexpr std::array<double, 4> kGaussWeights = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

template <class V>
struct Segment {
  double a = 0.0;
  double b = 0.0;
  V value{};
  double error = 0.0;
  double abs_integral = 0.0;
};

template <class V, class F>
Segment<V> gauss_kronrod_15(F& f, double a, double b) {
  constexpr double epmach = std::numeric_limits<double>::epsilon();
  constexpr double uflow = std::numeric_limits<double>::min();

  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);

  std::array<V, 15> samples;
  samples[0] = f(center);
  for (int j = 0; j < 7; ++j) {
    const double dx = half * kKronrodNodes[j];
    samples[1 + 2 * j] = f(center - dx);
    samples[2 + 2 * j] = f(center + dx);
  }

  V kronrod = samples[0] * kKronrodWeights[7];
  V gauss = samples[0] * kGaussWeights[3];
  double abs_sum = quadrature_magnitude(samples[0]) * kKronrodWeights[7];
  for (int j = 0; j < 7; ++j) {
    const V pair = samples[1 + 2 * j] + samples[2 + 2 * j];
    kronrod = kronrod + pair * kKronrodWeights[j];
    if (j % 2 == 1) gauss = gauss + pair * kGaussWeights[j / 2];
    abs_sum += kKronrodWeights[j] * (quadrature_magnitude(samples[1 + 2 * j]) +
                                     quadrature_magnitude(samples[2 + 2 * j]));
  }

  const V mean = kronrod * 0.5;
  double asc = kKronrodWeights[7] * quadrature_magnitude(samples[0] - mean);
  for (int j = 0; j < 7; ++j) {
    asc += kKronrodWeights[j] * (quadrature_magnitude(samples[1 + 2 * j] - mean) +
                                 quadrature_magnitude(samples[2 + 2 * j] - mean));
  }

  Segment<V> seg;
  seg.a = a;
  seg.b = b;
  seg.value = kronrod * half;
  seg.abs_integral = abs_sum * std::abs(half);
  asc *= std::abs(half);

  double err = quadrature_magnitude((kronrod - gauss) * half);
  if (asc != 0.0 && err != 0.0) err = asc * std::min(1.0, std::pow(200.0 * err / asc, 1.5));
  if (seg.abs_integral > uflow / (50.0 * epmach)) err = std::max(50.0 * epmach * seg.abs_integral, err);
  seg.error = err;
  return seg;
}

}  // namespace detail

/// Globally adaptive Gauss–Kronrod (7/15) quadrature with bisection of the
/// worst segment. V may be double, Complex or any small value type with
/// V+V, V*double and a quadrature_magnitude overload.
///
/// Stops when the summed error estimate is below max(abs_tol, rel_tol·|I|);
/// throws NonConvergent when max_intervals is reached first.
template <class F>
auto integrate_adaptive(F&& f, double a, double b, const QuadratureOptions& options = {})
    -> QuadratureResult<std::decay_t<std::invoke_result_t<F&, double>>> {
  using V = std::decay_t<std::invoke_result_t<F&, double>>;
  using Seg = detail::Segment<V>;

  QuadratureResult<V> result;
  if (a == b) return result;

  auto worse = [](const Seg& x, const Seg& y) { return x.error < y.error; };
  std::vector<Seg> heap;
  heap.push_back(detail::gauss_kronrod_15<V>(f, a, b));
  int evaluations = 15;

  for (;;) {
    V total = heap.front().value * 0.0;
    double total_error = 0.0;
    for (const auto& seg : heap) {
      total = total + seg.value;
      total_error += seg.error;
    }
    const double target = std::max(options.abs_tol, options.rel_tol * quadrature_magnitude(total));
    if (total_error <= target) {
      result.value = total;
      result.error = total_error;
      result.evaluations = evaluations;
      result.intervals = static_cast<int>(heap.size());
      return result;
    }
    if (static_cast<int>(heap.size()) >= options.max_intervals) {
      throw NonConvergent("adaptive quadrature exhausted " + std::to_string(options.max_intervals) +
                          " intervals (error estimate " + std::to_string(total_error) +
                          ", target " + std::to_string(target) + ")");
    }
    std::pop_heap(heap.begin(), heap.end(), worse);
    const Seg worst = heap.back();
    heap.pop_back();
    const double mid = 0.5 * (worst.a + worst.b);
    heap.push_back(detail::gauss_kronrod_15<V>(f, worst.a, mid));
    std::push_heap(heap.begin(), heap.end(), worse);
    heap.push_back(detail::gauss_kronrod_15<V>(f, mid, worst.b));
    std::push_heap(heap.begin(), heap.end(), worse);
    evaluations += 30;
  }
}

using ComplexIntegrand = std::function<Complex(double)>;

/// Independent numerical check for the closed forms: adaptive quadrature over
/// a truncated domain. Requires the integrand at both endpoints to be below
/// tol times its peak magnitude on [a, b] (TruncationTooTight otherwise).
QuadratureResult<Complex> quadrature_oracle(const ComplexIntegrand& f, double a, double b,
                                            double tol, int max_intervals = 4000);

}  // namespace slitpath
