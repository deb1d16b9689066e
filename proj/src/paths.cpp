#include "slitpath/paths.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "slitpath/error.hpp"

namespace slitpath {

namespace {

void require_positive(double value, const char* name) {
  if (!(value > 0.0) || !std::isfinite(value)) {
    std::ostringstream os;
    os << "parameter '" << name << "' must be a positive finite number (got " << value << ")";
    throw ParamsInvalid(os.str());
  }
}

double relative_difference(Complex x, Complex y) {
  const double scale = std::max(std::abs(x), std::abs(y));
  return scale == 0.0 ? 0.0 : std::abs(x - y) / scale;
}

void check_consistency(const ClosedFormConstants& formula, const QuadraticForm& engine,
                       std::string_view what) {
  const double diff = max_relative_difference(formula, ClosedFormConstants::from_form(engine));
  if (!(diff <= kConstantsTolerance)) {
    std::ostringstream os;
    os << what << ": closed-form constants and engine composition differ by " << diff
       << " (relative)";
    throw InternalConsistency(os.str());
  }
}

}  // namespace

PhysicalParams PhysicalParams::defaults() {
  PhysicalParams params;
  params.mass_over_hbar = mass_over_hbar_from_kg(1.44e-25);
  return params;
}

double PhysicalParams::mass_over_hbar_from_kg(double mass_kg) {
  // s/m² → ms/µm²: ×1e3 (s → ms) ÷ 1e12 (m² → µm²).
  return mass_kg / kReducedPlanck * 1e-9;
}

void PhysicalParams::validate() const {
  require_positive(mass_over_hbar, "mass_over_hbar");
  if (!(d >= 0.0) || !std::isfinite(d)) {
    std::ostringstream os;
    os << "parameter 'd' must be a non-negative finite number (got " << d << ")";
    throw ParamsInvalid(os.str());
  }
  require_positive(sigma0, "sigma0");
  require_positive(beta, "beta");
  require_positive(t, "t");
  require_positive(tau, "tau");
  require_positive(epsilon, "epsilon");
}

std::string_view to_string(PathLabel label) {
  switch (label) {
    case PathLabel::A: return "A";
    case PathLabel::B: return "B";
    case PathLabel::AB: return "AB";
    case PathLabel::BA: return "BA";
    case PathLabel::BAB: return "BAB";
    case PathLabel::ABA: return "ABA";
  }
  return "?";
}

int traversal_count(PathLabel label) { return static_cast<int>(slit_sequence(label).size()); }

PathLabel mirror(PathLabel label) {
  switch (label) {
    case PathLabel::A: return PathLabel::B;
    case PathLabel::B: return PathLabel::A;
    case PathLabel::AB: return PathLabel::BA;
    case PathLabel::BA: return PathLabel::AB;
    case PathLabel::BAB: return PathLabel::ABA;
    case PathLabel::ABA: return PathLabel::BAB;
  }
  return label;
}

std::vector<Slit> slit_sequence(PathLabel label) {
  using enum Slit;
  switch (label) {
    case PathLabel::A: return {A};
    case PathLabel::B: return {B};
    case PathLabel::AB: return {A, B};
    case PathLabel::BA: return {B, A};
    case PathLabel::BAB: return {B, A, B};
    case PathLabel::ABA: return {A, B, A};
  }
  return {};
}

double slit_center(Slit slit, const PhysicalParams& params) {
  return slit == Slit::A ? 0.5 * params.d : -0.5 * params.d;
}

QuadraticForm SourcePacket::form() const {
  QuadraticForm f;
  f.log_prefactor = -0.5 * std::log(sigma0 * std::sqrt(std::numbers::pi));
  f.c2 = -1.0 / (2.0 * sigma0 * sigma0);
  return f;
}

Complex SourcePacket::operator()(double x) const {
  return std::exp(-x * x / (2.0 * sigma0 * sigma0)) / std::sqrt(sigma0 * std::sqrt(std::numbers::pi));
}

QuadraticForm propagate_path(const PhysicalParams& params, PathLabel label) {
  params.validate();
  const auto slits = slit_sequence(label);
  const double m = params.mass_over_hbar;

  QuadraticForm psi = compose(SourcePacket{params.sigma0}.form(),
                              GaussianKernel::free_propagator(params.t, m));
  for (std::size_t i = 0; i < slits.size(); ++i) {
    const bool last = i + 1 == slits.size();
    psi = compose(psi, GaussianKernel::transmitted(slit_center(slits[i], params), params.beta,
                                                   last ? params.tau : params.epsilon, m));
  }
  return psi;
}

ClosedFormConstants ClosedFormConstants::from_form(const QuadraticForm& form) {
  return {std::exp(form.log_prefactor), form.c0, form.c1, form.c2};
}

QuadraticForm ClosedFormConstants::form() const { return {std::log(gamma), c2, c1, c0}; }

ClosedFormConstants classical_constants(const PhysicalParams& params) {
  params.validate();
  const Complex i{0.0, 1.0};
  const double m = params.mass_over_hbar;
  const double hb = 1.0;  // ħ, absorbed into m
  const double b = params.beta;
  const double s = params.sigma0;
  const double d = params.d;
  const double t = params.t;
  const double tau = params.tau;
  const double b2 = b * b;
  const double s2 = s * s;

  ClosedFormConstants k;
  const Complex ratio = (-i * m * m * b2 * s2 + m * (t * b2 + (b2 + s2) * tau) * hb +
                         i * t * tau * hb * hb) /
                        (m * s2 + i * t * hb);
  k.gamma = -i * m * b / (std::pow(std::numbers::pi, 0.25) * std::sqrt(-i * m * s + t * hb / s)) /
            std::sqrt(ratio);

  const Complex den = 8.0 * m * m * b2 * s2 + 8.0 * i * m * (t * b2 + (b2 + s2) * tau) * hb -
                      8.0 * t * tau * hb * hb;
  k.c0 = -m * (d * d * m * s2 + i * d * d * (t + tau) * hb) / den;
  k.c1 = m * (4.0 * d * m * s2 + 4.0 * i * d * t * hb) / den;
  k.c2 = -m * (4.0 * m * (b2 + s2) + 4.0 * i * t * hb) / den;
  return k;
}

ClosedFormConstants nonclassical_constants(const PhysicalParams& params) {
  params.validate();
  const Complex i{0.0, 1.0};
  const double m = params.mass_over_hbar;
  const double hb = 1.0;
  const double b = params.beta;
  const double s = params.sigma0;
  const double d = params.d;
  const double t = params.t;
  const double tau = params.tau;
  const double eps = params.epsilon;
  const double b2 = b * b;
  const double b4 = b2 * b2;
  const double s2 = s * s;
  const double d2 = d * d;
  const double h2 = hb * hb;
  const double h3 = h2 * hb;

  // (−1/π)^{1/4} on the principal branch.
  const Complex quartic_root = std::polar(std::pow(std::numbers::pi, -0.25), std::numbers::pi / 4.0);

  const Complex first = (-i * m * m * b2 * s2 + m * (t * b2 + eps * (b2 + s2)) * hb +
                         i * t * eps * h2) /
                        (m * s2 + i * t * hb);
  const Complex second =
      (-i * m * m * m * b4 * s2 +
       m * m * b2 * (t * b2 + b2 * (eps + tau) + s2 * (eps + 2.0 * tau)) * hb +
       i * m * (eps * (b2 + s2) * tau + t * b2 * (eps + 2.0 * tau)) * h2 - t * eps * tau * h3) /
      (m * m * b2 * s2 + i * m * (t * b2 + eps * (b2 + s2)) * hb - t * eps * h2);

  ClosedFormConstants k;
  k.gamma = -std::pow(m, 1.5) * b2 * quartic_root / std::sqrt(-i * m * s + t * hb / s) /
            std::sqrt(first) / std::sqrt(second);

  const Complex den =
      8.0 * (m * m * m * b4 * s2 +
             i * m * m * b2 * (t * b2 + b2 * (eps + tau) + s2 * (eps + 2.0 * tau)) * hb -
             m * (eps * (b2 + s2) * tau + t * b2 * (eps + 2.0 * tau)) * h2 -
             i * t * eps * tau * h3);
  k.c0 = -m *
         (2.0 * d2 * m * m * b2 * s2 +
          i * d2 * m * (2.0 * t * b2 + 2.0 * b2 * (eps + tau) + s2 * (eps + 4.0 * tau)) * hb -
          d2 * (eps * tau + t * (eps + 4.0 * tau)) * h2) /
         den;
  k.c1 = -m * (4.0 * i * d * m * eps * (b2 + s2) * hb - 4.0 * d * t * eps * h2) / den;
  k.c2 = -m *
         (4.0 * m * m * b2 * (b2 + 2.0 * s2) + 4.0 * i * m * (2.0 * t * b2 + eps * (b2 + s2)) * hb -
          4.0 * t * eps * h2) /
         den;
  return k;
}

double max_relative_difference(const ClosedFormConstants& x, const ClosedFormConstants& y) {
  return std::max({relative_difference(x.gamma, y.gamma), relative_difference(x.c0, y.c0),
                   relative_difference(x.c1, y.c1), relative_difference(x.c2, y.c2)});
}

QuadraticForm classical_form(const PhysicalParams& params, Slit slit) {
  const auto engine = propagate_path(params, PathLabel::A);
  check_consistency(classical_constants(params), engine, "classical path");
  return slit == Slit::A ? engine : propagate_path(params, PathLabel::B);
}

QuadraticForm nonclassical_form(const PhysicalParams& params, PathLabel order) {
  if (order != PathLabel::AB && order != PathLabel::BA) {
    throw ParamsInvalid("nonclassical_form expects AB or BA");
  }
  const auto engine = propagate_path(params, PathLabel::AB);
  check_consistency(nonclassical_constants(params), engine, "nonclassical path");
  return order == PathLabel::AB ? engine : propagate_path(params, PathLabel::BA);
}

QuadraticForm looped_form(const PhysicalParams& params, PathLabel order) {
  if (order != PathLabel::BAB && order != PathLabel::ABA) {
    throw ParamsInvalid("looped_form expects BAB or ABA");
  }
  return propagate_path(params, order);
}

QuadraticForm path_form(const PhysicalParams& params, PathLabel label) {
  switch (label) {
    case PathLabel::A: return classical_form(params, Slit::A);
    case PathLabel::B: return classical_form(params, Slit::B);
    case PathLabel::AB:
    case PathLabel::BA: return nonclassical_form(params, label);
    case PathLabel::BAB:
    case PathLabel::ABA: return looped_form(params, label);
  }
  throw ParamsInvalid("unknown path label");
}

double attenuation_factor(const PhysicalParams& params) {
  const double classical = norm_squared(propagate_path(params, PathLabel::A));
  const double nonclassical = norm_squared(propagate_path(params, PathLabel::AB));
  return std::sqrt(nonclassical / classical);
}

PathSet PathSet::from_params(const PhysicalParams& params, bool include_nonclassical) {
  PathSet set{classical_form(params, Slit::A), classical_form(params, Slit::B), std::nullopt,
              std::nullopt};
  if (include_nonclassical) {
    set.ab = nonclassical_form(params, PathLabel::AB);
    set.ba = nonclassical_form(params, PathLabel::BA);
  }
  return set;
}

ScreenGrid ScreenGrid::uniform(double halfwidth, int points) {
  if (!(halfwidth > 0.0) || !std::isfinite(halfwidth)) {
    throw ParamsInvalid("grid halfwidth must be positive and finite");
  }
  if (points < 2) throw ParamsInvalid("grid needs at least two points");
  ScreenGrid grid;
  grid.xs.resize(static_cast<std::size_t>(points));
  const int last = points - 1;
  // Integer numerators keep the grid exactly mirror-symmetric.
  for (int i = 0; i < points; ++i) {
    grid.xs[static_cast<std::size_t>(i)] = halfwidth * static_cast<double>(2 * i - last) / last;
  }
  return grid;
}

double auto_halfwidth(const PhysicalParams& params) {
  const double log_floor = std::log(1.0 / kGridEnvelopeFloor);
  double extent = 0.0;
  for (PathLabel label : {PathLabel::A, PathLabel::AB}) {
    const QuadraticForm f = propagate_path(params, label);
    const double curvature = -2.0 * f.c2.real();  // |ψ|² ∝ exp(−curvature·(x−xc)²)
    if (!(curvature > 0.0)) throw ParamsInvalid("path density is not normalizable");
    const double center = f.c1.real() / curvature;
    extent = std::max(extent, std::abs(center) + std::sqrt(log_floor / curvature));
  }
  return std::ceil(extent);
}

ScreenGrid default_grid(const PhysicalParams& params, int points, std::optional<double> halfwidth) {
  return ScreenGrid::uniform(halfwidth ? *halfwidth : auto_halfwidth(params), points);
}

}  // namespace slitpath
