#pragma once

#include <optional>

#include "slitpath/cavity.hpp"
#include "slitpath/curve.hpp"
#include "slitpath/paths.hpp"

namespace slitpath {

/// The five which-way distributions entering I_AB.
enum class Distribution {
  no_detectors,       // P_AB
  detector_a,         // P_D_A
  detector_b,         // P_D_B
  indistinguishable,  // P_D_AB
  distinguishable,    // P_D_AD_B
};

std::string_view to_string(Distribution distribution);

/// Initial atom level and single-photon cavity occupations. An empty field
/// means no atom preparation or no cavity in that slit.
struct SetupConfig {
  std::optional<AtomLevel> atom_init;
  std::optional<int> cavity_a;
  std::optional<int> cavity_b;

  auto operator<=>(const SetupConfig&) const = default;
};

SetupConfig setup_for(Distribution distribution);

/// Throws ParamsInvalid unless the setup is one of the tabulated rows.
void validate_setup(const SetupConfig& setup);

/// Atom and cavity state before the screen for a single-cavity setup:
/// |g⟩|1,0⟩ψ_B + |e⟩|0,0⟩(ψ_A + ψ_AB + ψ_BA) with the cavity in slit A,
/// mirrored for slit B.
WhichWayState build_single_cavity_state(const PathSet& paths, Slit cavity);

/// |ψ_A + ψ_B + ψ_AB + ψ_BA|² / N₀.
ProbabilityCurve p_no_detectors(const PathSet& paths, const ScreenGrid& grid);

/// Atom level and cavities traced out: (|ψ_A + ψ_AB + ψ_BA|² + |ψ_B|²)/N₁
/// for slit A.
ProbabilityCurve p_single_detector(const PathSet& paths, const ScreenGrid& grid, Slit cavity);

/// Indistinguishable: (|ψ_A + ψ_B|² + |ψ_AB + ψ_BA|²)/N₂.
/// Distinguishable: (|ψ_A|² + |ψ_B|² + |ψ_AB + ψ_BA|²)/N₂.
/// Each N is the curve's own exact integral.
ProbabilityCurve p_both_detectors(const PathSet& paths, const ScreenGrid& grid, bool distinguishable);

/// Both-detector curve assembled from eraser click-record selections, set
/// against the direct construction.
struct CompositionReport {
  ProbabilityCurve composed;  // normalised by the two-cavity N₂
  ProbabilityCurve direct;
  /// ∫composed_raw / ∫direct_raw.
  double scale = 0.0;
  /// max |composed − direct| after both are rescaled to unit trapezoid
  /// integral, relative to the direct peak.
  double normalized_difference = 0.0;
};

/// Distinguishable: every ground record plus twice the same-detector excited
/// records. Indistinguishable: ground +++, +−−, −+−, −−+ and excited ++, −−.
/// Requires gamma_t ≥ kLongDetectionGammaT.
CompositionReport compose_both_detectors(const PathSet& paths, const ScreenGrid& grid,
                                         bool distinguishable, double gamma_t);

struct QuachInputs {
  ProbabilityCurve p_ab;    // N₀
  ProbabilityCurve p_da;    // N₁
  ProbabilityCurve p_db;    // N₁
  ProbabilityCurve p_dab;   // N₂
  ProbabilityCurve p_dadb;  // N₂

  static QuachInputs build(const PathSet& paths, const ScreenGrid& grid);
  static QuachInputs build(const PhysicalParams& params, const ScreenGrid& grid);
};

/// N₀P_AB − N₁(P_D_A + P_D_B) − N₂P_D_AB + 2N₂P_D_AD_B, each term taken as
/// the curve's own raw values. Throws GridMismatch.
SampledFunction quach_parameter(const QuachInputs& inputs);

/// max|I_AB| / max(N₀P_AB).
double quach_null_ratio(const QuachInputs& inputs);

/// Each raw probability P replaced by P^(1+delta), renormalised by its
/// trapezoid integral.
QuachInputs with_born_violation(const QuachInputs& inputs, double delta);

/// P_ABC − P_AB − P_AC − P_BC + P_A + P_B + P_C on raw values.
SampledFunction sorkin_parameter(const ProbabilityCurve& p_abc, const ProbabilityCurve& p_ab,
                                 const ProbabilityCurve& p_ac, const ProbabilityCurve& p_bc,
                                 const ProbabilityCurve& p_a, const ProbabilityCurve& p_b,
                                 const ProbabilityCurve& p_c);

}  // namespace slitpath
