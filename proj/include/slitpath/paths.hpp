#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "slitpath/gaussians.hpp"

namespace slitpath {

/// CODATA 2018 reduced Planck constant, J·s.
inline constexpr double kReducedPlanck = 1.054571817e-34;

/// Internal units: lengths in µm, times in ms, mass as m/ħ in ms/µm².
struct PhysicalParams {
  double mass_over_hbar = 0.0;  // set by defaults()
  double d = 5.0;               // slit separation, µm
  double sigma0 = 0.3;          // source packet width, µm
  double beta = 0.3;            // slit width, µm
  double t = 5.0;               // source → slit plane, ms
  double tau = 5.0;             // slit plane → screen, ms
  double epsilon = 2.9;         // slit → other slit, ms

  /// m = 1.44e−25 kg, d = 5 µm, σ0 = β = 0.3 µm, t = τ = 5 ms, ε = 2.9 ms.
  static PhysicalParams defaults();

  /// m [kg] → m/ħ [ms/µm²].
  static double mass_over_hbar_from_kg(double mass_kg);

  /// Throws ParamsInvalid naming the first offending field. d may be zero
  /// (coincident slits); everything else must be strictly positive.
  void validate() const;
};

enum class Slit { A, B };

/// Sequence of slits a Feynman path family traverses, in temporal order.
enum class PathLabel { A, B, AB, BA, BAB, ABA };

std::string_view to_string(PathLabel label);
int traversal_count(PathLabel label);
PathLabel mirror(PathLabel label);
std::vector<Slit> slit_sequence(PathLabel label);

/// Slit A sits at x = +d/2 and slit B at x = −d/2, the orientation under
/// which ψ_A = Γc·exp(c2x² + c1x + c0) with the tabulated c1.
double slit_center(Slit slit, const PhysicalParams& params);

/// ψ0(x) = exp(−x²/2σ0²)/√(σ0√π).
struct SourcePacket {
  double sigma0 = 0.3;

  QuadraticForm form() const;
  Complex operator()(double x) const;
};

/// ψ0 → K(t) → [T(slit) → K(ε)]… → T(last slit) → K(τ), composed in the
/// Gaussian engine. Valid for every label including the looped ones.
QuadraticForm propagate_path(const PhysicalParams& params, PathLabel label);

/// (Γ, c0, c1, c2) of ψ(x) = Γ·exp(c2x² + c1x + c0).
struct ClosedFormConstants {
  Complex gamma{0.0};
  Complex c0{0.0};
  Complex c1{0.0};
  Complex c2{0.0};

  static ClosedFormConstants from_form(const QuadraticForm& form);
  QuadraticForm form() const;
};

/// Closed-form constants for ψ_A, evaluated from the explicit expressions.
ClosedFormConstants classical_constants(const PhysicalParams& params);

/// Closed-form constants for ψ_AB, evaluated from the explicit expressions.
ClosedFormConstants nonclassical_constants(const PhysicalParams& params);

/// Largest coefficientwise relative difference; a pair of exact zeros counts
/// as agreement.
double max_relative_difference(const ClosedFormConstants& x, const ClosedFormConstants& y);

/// Relative tolerance for the formula-vs-engine agreement of the constants.
inline constexpr double kConstantsTolerance = 1e-9;

/// ψ_A or ψ_B. Derived both from the closed-form expressions and by engine
/// composition; throws InternalConsistency when the two disagree by more
/// than kConstantsTolerance.
QuadraticForm classical_form(const PhysicalParams& params, Slit slit);

/// ψ_AB or ψ_BA, dual-derived like classical_form.
QuadraticForm nonclassical_form(const PhysicalParams& params, PathLabel order);

/// ψ_BAB or ψ_ABA; engine composition only.
QuadraticForm looped_form(const PhysicalParams& params, PathLabel order);

/// Dispatches to classical_form / nonclassical_form / looped_form.
QuadraticForm path_form(const PhysicalParams& params, PathLabel label);

/// a = √(∫|ψ_AB|² / ∫|ψ_A|²), the per-traversal amplitude attenuation.
double attenuation_factor(const PhysicalParams& params);

/// The four path amplitudes entering the which-way analysis. The
/// nonclassical pair may be absent to study the textbook limit.
struct PathSet {
  QuadraticForm a;
  QuadraticForm b;
  std::optional<QuadraticForm> ab;
  std::optional<QuadraticForm> ba;

  static PathSet from_params(const PhysicalParams& params, bool include_nonclassical = true);
  bool has_nonclassical() const { return ab.has_value() && ba.has_value(); }
  PathSet without_nonclassical() const { return {a, b, std::nullopt, std::nullopt}; }
};

/// Uniform screen positions, µm.
struct ScreenGrid {
  std::vector<double> xs;

  static ScreenGrid uniform(double halfwidth, int points);
  std::size_t size() const { return xs.size(); }
  double spacing() const { return xs.size() > 1 ? xs[1] - xs[0] : 0.0; }
};

/// Fraction of the peak density at which the automatic grid edge is placed.
inline constexpr double kGridEnvelopeFloor = 1e-6;

/// Smallest whole-µm halfwidth X such that the classical and minimal
/// nonclassical densities have all fallen below kGridEnvelopeFloor of their
/// peaks at ±X.
double auto_halfwidth(const PhysicalParams& params);

ScreenGrid default_grid(const PhysicalParams& params, int points = 2001,
                        std::optional<double> halfwidth = std::nullopt);

}  // namespace slitpath
