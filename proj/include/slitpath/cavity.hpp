#pragma once

#include <compare>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "slitpath/curve.hpp"
#include "slitpath/fock.hpp"
#include "slitpath/paths.hpp"

namespace slitpath {

enum class AtomLevel { ground, excited };

std::string_view to_string(AtomLevel level);

/// Photons left in the cavities when the atom arrives at the screen in the
/// given level (two-cavity setup).
int photon_budget(AtomLevel level);

/// Atom–cavity coupling and photodetection settings.
struct CavityParams {
  double omega = 1.0;           // cavity mode angular frequency, rad/ms
  int n_excitations = 1;        // photon number n before the exchange
  double gamma = 1.0;           // cavity width Γ, 1/ms
  double detection_time = 20.0; // ms

  /// π/(√(n+1)·Ω): the interaction time giving a unit-probability exchange.
  double pi_pulse_time() const;
  double gamma_t() const { return gamma * detection_time; }
  void validate() const;
};

enum class Click { plus, minus };

/// Photodetector clicks in temporal order.
struct OutcomeSequence {
  std::vector<Click> clicks;

  /// "" or "0" for no clicks, otherwise a string over {+, -}.
  static OutcomeSequence parse(std::string_view text);
  std::string str() const;
  std::size_t size() const { return clicks.size(); }
  int count(Click c) const;

  auto operator<=>(const OutcomeSequence&) const = default;
};

/// Every ordered sequence of length 0..max_length, shortest first.
std::vector<OutcomeSequence> all_outcomes(int max_length);

enum class Parity { plus, minus };

/// μ± = (|2,1⟩ ± |1,2⟩)/√2 for the ground level, ν± = (|2,0⟩ ± |0,2⟩)/√2
/// for the excited level, in cavity (A, B) labels.
FockVector which_way_marker(AtomLevel level, Parity parity);

/// One term of the atom ⊗ cavities ⊗ path state.
struct WhichWayTerm {
  AtomLevel level = AtomLevel::ground;
  FockPair fock;  // cavity labels (n_A, n_B)
  PathLabel path = PathLabel::A;
  QuadraticForm form;
  Complex weight{1.0};
};

/// Σ_terms weight·|level⟩|fock⟩|ψ_path⟩ / √N. Terms sharing (level, fock)
/// add coherently; distinct labels are orthogonal.
class WhichWayState {
 public:
  explicit WhichWayState(std::vector<WhichWayTerm> terms);

  std::span<const WhichWayTerm> terms() const { return terms_; }
  /// N, so that the state has unit norm.
  double normalization() const { return normalization_; }

  /// Unnormalised position density, optionally restricted to one level.
  IncoherentMixture mixture(std::optional<AtomLevel> level = std::nullopt) const;

  /// Probability of the level (or 1 for the whole state), from exact overlaps.
  double probability(std::optional<AtomLevel> level = std::nullopt) const;

  /// Position density divided by N.
  ProbabilityCurve marginal(const ScreenGrid& grid, std::optional<AtomLevel> level = std::nullopt) const;

  /// Spatial amplitude paired with `marker` in the given level:
  /// Σ_terms weight·⟨marker|fock⟩·ψ_path, unnormalised.
  std::vector<WeightedForm> marker_amplitude(AtomLevel level, const FockVector& marker) const;

 private:
  std::vector<WhichWayTerm> terms_;
  double normalization_ = 1.0;
};

/// |e⟩|1⟩_A|1⟩_B through both cavities:
/// |g⟩|2,1⟩ψ_A + |g⟩|1,2⟩ψ_B + |e⟩|2,0⟩ψ_AB + |e⟩|0,2⟩ψ_BA, normalised.
WhichWayState build_two_cavity_state(const PathSet& paths);
WhichWayState build_two_cavity_state(const PhysicalParams& params);

struct AtomConditionedCurves {
  ProbabilityCurve ground;   // (|ψ_A|² + |ψ_B|²)/N
  ProbabilityCurve excited;  // (|ψ_AB|² + |ψ_BA|²)/N
};

AtomConditionedCurves atom_conditioned_curves(const WhichWayState& state, const ScreenGrid& grid);

/// Coefficients of |ψ⁺|² and |ψ⁻|² (classical pair for ground, nonclassical
/// for excited) in the probability of an ordered click record, including the
/// e^{−2·budget·Γt} prefactor. Tabulated, not derived.
struct PhotocountWeights {
  double w_plus = 0.0;
  double w_minus = 0.0;
};

/// Throws InvalidOutcome if the record is longer than the photon budget and
/// ParamsInvalid for negative gamma_t.
PhotocountWeights photocount_weight(AtomLevel level, const OutcomeSequence& outcome, double gamma_t);

/// Detection time treated as infinite.
inline constexpr double kLongDetectionGammaT = 20.0;

struct EraserKey {
  AtomLevel level = AtomLevel::ground;
  OutcomeSequence outcome;
  auto operator<=>(const EraserKey&) const = default;
};

/// Joint probability density of the atom level, click record and screen
/// position, for every admissible record.
std::map<EraserKey, ProbabilityCurve> eraser_curves(const WhichWayState& state,
                                                    const ScreenGrid& grid, double gamma_t);

/// Excited-atom counts split by whether both photons hit the same detector.
struct EraserPatterns {
  ProbabilityCurve fringes;      // P_e^(++) + P_e^(--)
  ProbabilityCurve antifringes;  // P_e^(+-) + P_e^(-+)
  ProbabilityCurve sum;          // fringes + antifringes
  ProbabilityCurve excited;      // P_e, no photodetection
};

EraserPatterns eraser_patterns(const WhichWayState& state, const ScreenGrid& grid, double gamma_t);

/// Sum over the listed click records of one level's eraser curves.
ProbabilityCurve select_outcomes(const std::map<EraserKey, ProbabilityCurve>& curves,
                                 AtomLevel level, std::span<const std::string_view> outcomes);

}  // namespace slitpath
