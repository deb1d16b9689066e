#include "slitpath/gaussians.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "slitpath/error.hpp"

namespace slitpath {

namespace {

std::string describe(Complex z) {
  std::ostringstream os;
  os.precision(17);
  os << "(" << z.real() << (z.imag() < 0 ? " - " : " + ") << std::abs(z.imag()) << "i)";
  return os.str();
}

}  // namespace

GaussianKernel GaussianKernel::free_propagator(double duration, double mass_over_hbar) {
  if (!(duration > 0.0) || !(mass_over_hbar > 0.0)) {
    throw ParamsInvalid("free propagator needs positive duration and mass");
  }
  const Complex i{0.0, 1.0};
  const Complex k = i * mass_over_hbar / (2.0 * duration);
  GaussianKernel kernel;
  kernel.log_prefactor =
      0.5 * std::log(mass_over_hbar / (2.0 * std::numbers::pi * i * duration));
  kernel.old2 = k;
  kernel.new2 = k;
  kernel.cross = -2.0 * k;
  return kernel;
}

GaussianKernel GaussianKernel::transmitted(double center, double width, double duration,
                                           double mass_over_hbar) {
  return free_propagator(duration, mass_over_hbar).with_transmission(center, width);
}

GaussianKernel GaussianKernel::with_transmission(double center, double width) const {
  if (!(width > 0.0)) throw ParamsInvalid("transmission width must be positive");
  const double inv = 1.0 / (width * width);
  GaussianKernel kernel = *this;
  kernel.old2 += -0.5 * inv;
  kernel.old1 += center * inv;
  kernel.constant += -0.5 * center * center * inv;
  return kernel;
}

Complex gaussian_integral(Complex alpha, Complex beta, Complex gamma) {
  if (alpha == Complex{0.0, 0.0}) {
    throw DegenerateIntegral("gaussian integral with zero quadratic coefficient");
  }
  if (alpha.real() > 0.0) {
    throw DivergentIntegral("gaussian integral diverges: alpha = " + describe(alpha));
  }
  return 0.5 * std::log(-std::numbers::pi / alpha) + gamma - beta * beta / (4.0 * alpha);
}

QuadraticForm compose(const QuadraticForm& form, const GaussianKernel& kernel) {
  const Complex alpha = form.c2 + kernel.old2;
  const Complex p = form.c1 + kernel.old1;
  const Complex q = kernel.cross;

  // Throws for a divergent or degenerate alpha.
  gaussian_integral(alpha, p, 0.0);
  const Complex log_sqrt = 0.5 * std::log(-std::numbers::pi / alpha);

  QuadraticForm out;
  out.log_prefactor = form.log_prefactor + kernel.log_prefactor + log_sqrt;
  out.c2 = kernel.new2 - q * q / (4.0 * alpha);
  out.c1 = kernel.new1 - p * q / (2.0 * alpha);
  out.c0 = form.c0 + kernel.constant - p * p / (4.0 * alpha);
  return out;
}

Complex log_integral(const QuadraticForm& f) {
  return f.log_prefactor + gaussian_integral(f.c2, f.c1, f.c0);
}

Complex overlap(const QuadraticForm& f, const QuadraticForm& g) {
  return std::exp(log_integral(f * g.conjugated()));
}

double norm_squared(const QuadraticForm& f) { return overlap(f, f).real(); }

Complex coherent_sum(std::span<const WeightedForm> terms, double x) {
  Complex sum{0.0};
  for (const auto& term : terms) sum += term.weight * term.form(x);
  return sum;
}

double coherent_norm(std::span<const WeightedForm> terms) {
  double total = 0.0;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    total += std::norm(terms[i].weight) * norm_squared(terms[i].form);
    for (std::size_t j = i + 1; j < terms.size(); ++j) {
      const Complex cross =
          terms[i].weight * std::conj(terms[j].weight) * overlap(terms[i].form, terms[j].form);
      total += 2.0 * cross.real();
    }
  }
  return total;
}

}  // namespace slitpath
