#pragma once

#include <complex>
#include <span>

namespace slitpath {

using Complex = std::complex<double>;

/// Complex amplitude Γ·exp(c2·x² + c1·x + c0), stored with log Γ so that
/// long kernel chains never overflow or underflow the prefactor.
///
/// c0 is kept apart from log Γ because the closed-form constants are quoted
/// that way; transmission offsets accumulate in c0 and normalisation and
/// propagator prefactors in log Γ.
struct QuadraticForm {
  Complex log_prefactor{0.0};
  Complex c2{0.0};
  Complex c1{0.0};
  Complex c0{0.0};

  Complex exponent(double x) const { return log_prefactor + (c2 * x + c1) * x + c0; }
  Complex operator()(double x) const { return std::exp(exponent(x)); }
  double density(double x) const { return std::norm((*this)(x)); }

  Complex prefactor() const { return std::exp(log_prefactor); }

  /// Gaussian envelope decays in both directions.
  bool normalizable() const { return c2.real() < 0.0; }

  /// x → −x. Exact: only the sign of c1 changes.
  QuadraticForm mirrored() const { return {log_prefactor, c2, -c1, c0}; }
  QuadraticForm conjugated() const {
    return {std::conj(log_prefactor), std::conj(c2), std::conj(c1), std::conj(c0)};
  }
  /// factor·f(x); factor must be nonzero.
  QuadraticForm scaled(Complex factor) const {
    return {log_prefactor + std::log(factor), c2, c1, c0};
  }

  friend QuadraticForm operator*(const QuadraticForm& f, const QuadraticForm& g) {
    return {f.log_prefactor + g.log_prefactor, f.c2 + g.c2, f.c1 + g.c1, f.c0 + g.c0};
  }
};

/// Bivariate kernel in the integration variable x' ("old") and the output
/// variable x ("new"):
///
///   exp(log_prefactor + old2·x'² + cross·x'·x + new2·x² + old1·x' + new1·x + constant)
///
/// Covers the free propagator and the propagator preceded by a Gaussian slit
/// transmission in x'.
struct GaussianKernel {
  Complex log_prefactor{0.0};
  Complex old2{0.0};
  Complex cross{0.0};
  Complex new2{0.0};
  Complex old1{0.0};
  Complex new1{0.0};
  Complex constant{0.0};

  /// K(x, T; x', 0) = √(M/2πiT)·exp(iM(x−x')²/2T), with M = m/ħ.
  static GaussianKernel free_propagator(double duration, double mass_over_hbar);

  /// K(x, T; x', 0)·exp(−(x'−center)²/2·width²).
  static GaussianKernel transmitted(double center, double width, double duration,
                                    double mass_over_hbar);

  /// Multiplies the kernel by a Gaussian transmission profile in x'.
  GaussianKernel with_transmission(double center, double width) const;
};

/// log ∫exp(αx² + βx + γ)dx = log √(−π/α) + γ − β²/4α on the principal branch.
///
/// Re(α) = 0 with Im(α) ≠ 0 is accepted as the Fresnel limit; the caller is
/// responsible for only doing so when an envelope makes the full integral
/// convergent. Throws DivergentIntegral for Re(α) > 0 and DegenerateIntegral
/// for α = 0.
Complex gaussian_integral(Complex alpha, Complex beta, Complex gamma);

/// Integrates the old variable out of kernel(x, x')·form(x').
QuadraticForm compose(const QuadraticForm& form, const GaussianKernel& kernel);

/// log ∫ f(x) dx.
Complex log_integral(const QuadraticForm& f);

/// ∫ f(x)·conj(g(x)) dx.
Complex overlap(const QuadraticForm& f, const QuadraticForm& g);

/// ∫ |f(x)|² dx.
double norm_squared(const QuadraticForm& f);

struct WeightedForm {
  Complex weight{1.0};
  QuadraticForm form;
};

/// Σ_k w_k f_k(x).
Complex coherent_sum(std::span<const WeightedForm> terms, double x);

/// ∫ |Σ_k w_k f_k(x)|² dx, summed exactly over all cross terms.
double coherent_norm(std::span<const WeightedForm> terms);

}  // namespace slitpath
