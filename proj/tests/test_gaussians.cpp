#include <doctest.h>

#include <cmath>
#include <numbers>

#include "slitpath/error.hpp"
#include "slitpath/gaussians.hpp"
#include "slitpath/paths.hpp"
#include "slitpath/quadrature.hpp"

using namespace slitpath;

namespace {

double rel(Complex a, Complex b) { return std::abs(a - b) / std::abs(b); }

Complex numeric_integral(const QuadraticForm& f, double halfwidth) {
  QuadratureOptions opts;
  opts.rel_tol = 1e-13;
  return integrate_adaptive([&](double x) { return f(x); }, -halfwidth, halfwidth, opts).value;
}

}  // namespace

TEST_CASE("real gaussian integral") {
  // ∫exp(−x²) = √π
  const Complex v = std::exp(gaussian_integral(-1.0, 0.0, 0.0));
  CHECK(std::abs(v - std::sqrt(std::numbers::pi)) < 1e-15);

  // ∫exp(−2x² + 3x + 1) = √(π/2)·exp(1 + 9/8)
  const Complex w = std::exp(gaussian_integral(-2.0, 3.0, 1.0));
  CHECK(rel(w, std::sqrt(std::numbers::pi / 2.0) * std::exp(1.0 + 9.0 / 8.0)) < 1e-14);
}

TEST_CASE("complex gaussian integral matches quadrature") {
  const QuadraticForm f{{0.1, -0.2}, {-0.5, 0.7}, {0.3, -1.1}, {0.2, 0.4}};
  const Complex closed = std::exp(log_integral(f));
  CHECK(rel(closed, numeric_integral(f, 20.0)) < 1e-11);
}

TEST_CASE("fresnel limit is accepted, divergence and degeneracy are not") {
  CHECK_NOTHROW(gaussian_integral({0.0, 1.0}, 0.0, 0.0));
  // ∫exp(ix²) = √π·e^{iπ/4}
  const Complex fresnel = std::exp(gaussian_integral({0.0, 1.0}, 0.0, 0.0));
  CHECK(rel(fresnel, std::sqrt(std::numbers::pi) * std::polar(1.0, std::numbers::pi / 4.0)) < 1e-14);
  CHECK_THROWS_AS(gaussian_integral({0.1, 1.0}, 0.0, 0.0), DivergentIntegral);
  CHECK_THROWS_AS(gaussian_integral(0.0, 1.0, 0.0), DegenerateIntegral);
}

TEST_CASE("source packet is unit normalised") {
  for (double s : {0.1, 0.3, 2.0}) CHECK(norm_squared(SourcePacket{s}.form()) == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("free propagation conserves the norm") {
  const double M = PhysicalParams::defaults().mass_over_hbar;
  const QuadraticForm psi0 = SourcePacket{0.3}.form();
  const QuadraticForm psi = compose(psi0, GaussianKernel::free_propagator(5.0, M));
  CHECK(norm_squared(psi) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("free propagators compose into one over the summed time") {
  const double M = PhysicalParams::defaults().mass_over_hbar;
  const QuadraticForm psi0 = SourcePacket{0.3}.form();
  const QuadraticForm two_step = compose(compose(psi0, GaussianKernel::free_propagator(2.0, M)),
                                         GaussianKernel::free_propagator(3.0, M));
  const QuadraticForm one_step = compose(psi0, GaussianKernel::free_propagator(5.0, M));
  for (double x : {-3.0, 0.0, 0.7, 4.0}) CHECK(rel(two_step(x), one_step(x)) < 1e-12);
}

TEST_CASE("transmitted packet matches nested quadrature") {
  const double M = PhysicalParams::defaults().mass_over_hbar;
  const QuadraticForm psi0 = SourcePacket{0.3}.form();
  const QuadraticForm at_slit = compose(psi0, GaussianKernel::free_propagator(5.0, M));
  const GaussianKernel kernel = GaussianKernel::transmitted(2.5, 0.3, 5.0, M);
  const QuadraticForm screen = compose(at_slit, kernel);

  const double x = 1.3;
  const double T = 5.0;
  const Complex i{0.0, 1.0};
  auto integrand = [&](double s) {
    const Complex k = std::sqrt(M / (2.0 * std::numbers::pi * i * T)) * std::exp(i * M * (x - s) * (x - s) / (2.0 * T));
    return k * std::exp(-(s - 2.5) * (s - 2.5) / (2.0 * 0.3 * 0.3)) * at_slit(s);
  };
  QuadratureOptions opts;
  opts.rel_tol = 1e-13;
  const Complex numeric = integrate_adaptive(integrand, 2.5 - 8 * 0.3, 2.5 + 8 * 0.3, opts).value;
  CHECK(rel(screen(x), numeric) < 1e-10);
}

TEST_CASE("mirror flips only the linear coefficient") {
  const QuadraticForm f{{0.1, 0.0}, {-0.5, 0.2}, {0.3, -1.1}, {0.2, 0.4}};
  for (double x : {-2.0, 0.5, 3.0}) CHECK(rel(f.mirrored()(x), f(-x)) < 1e-15);
}

TEST_CASE("overlap and coherent norm include cross terms exactly") {
  const QuadraticForm f{{0.0, 0.0}, {-0.4, 0.1}, {0.5, 0.2}, {0.0, 0.0}};
  const QuadraticForm g{{0.0, 0.0}, {-0.6, -0.3}, {-0.2, 0.1}, {0.1, 0.0}};
  const Complex numeric = numeric_integral(f * g.conjugated(), 25.0);
  CHECK(rel(overlap(f, g), numeric) < 1e-11);

  const std::vector<WeightedForm> sum{{1.0, f}, {Complex{0.5, -0.5}, g}};
  QuadratureOptions opts;
  opts.rel_tol = 1e-13;
  const double direct = integrate_adaptive([&](double x) { return std::norm(coherent_sum(sum, x)); }, -25.0, 25.0,
                                           opts).value;
  CHECK(coherent_norm(sum) == doctest::Approx(direct).epsilon(1e-11));
}

TEST_CASE("adaptive quadrature on textbook integrals") {
  CHECK(integrate_adaptive([](double x) { return std::sin(x); }, 0.0, std::numbers::pi).value ==
        doctest::Approx(2.0).epsilon(1e-12));
  CHECK(integrate_adaptive([](double x) { return 1.0 / (1.0 + x * x); }, -1.0, 1.0).value ==
        doctest::Approx(std::numbers::pi / 2.0).epsilon(1e-12));
  // Oscillatory and peaked.
  CHECK(integrate_adaptive([](double x) { return std::cos(3.0 * x) * std::exp(-x * x); }, -10.0, 10.0).value ==
        doctest::Approx(std::sqrt(std::numbers::pi) * std::exp(-2.25)).epsilon(1e-12));
  QuadratureOptions tight;
  tight.max_intervals = 3;
  tight.rel_tol = 1e-15;
  CHECK_THROWS_AS(integrate_adaptive([](double x) { return std::sqrt(std::abs(x)); }, -1.0, 1.0, tight),
                  NonConvergent);
}

TEST_CASE("quadrature oracle refuses a truncated domain") {
  auto wide = [](double x) { return Complex{std::exp(-x * x / 50.0)}; };
  CHECK_THROWS_AS(quadrature_oracle(wide, -3.0, 3.0, 1e-6), TruncationTooTight);
  const auto r = quadrature_oracle(wide, -60.0, 60.0, 1e-10);
  CHECK(rel(r.value, Complex{std::sqrt(50.0 * std::numbers::pi)}) < 1e-9);
  CHECK_THROWS_AS(quadrature_oracle(wide, 1.0, -1.0, 1e-6), ParamsInvalid);
}
