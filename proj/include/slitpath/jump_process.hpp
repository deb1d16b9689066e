#pragma once

#include <map>

#include "slitpath/cavity.hpp"
#include "slitpath/fock.hpp"

namespace slitpath {

/// Gram entries of the conditioned (unnormalised) photon states reached from
/// two initial states: ‖φ⁺‖², ‖φ⁻‖² and Re⟨φ⁺|φ⁻⟩.
struct JumpWeights {
  double w_plus = 0.0;
  double w_minus = 0.0;
  double cross = 0.0;
};

/// Relative tolerance of the nested time quadrature.
inline constexpr double kJumpProcessTolerance = 1e-10;

/// Probability of an ordered click record for pure initial states given in
/// output-port labels, with photodetection as a jump process of rate 2Γ per
/// photon and no-click evolution e^{−ΓNt}. Time is in units of 1/Γ, so the
/// record window is [0, gamma_t]. Click times are integrated numerically.
JumpWeights jump_process_probability(const FockVector& plus_state, const FockVector& minus_state,
                                     const OutcomeSequence& outcome, double gamma_t);

/// Every record of length ≤ kMaxPhotons.
std::map<OutcomeSequence, JumpWeights> jump_process_oracle(const FockVector& plus_state,
                                                          const FockVector& minus_state,
                                                          double gamma_t);

/// Initial states are the beam-split markers of the given atom level.
std::map<OutcomeSequence, JumpWeights> jump_process_oracle(AtomLevel level, double gamma_t);

}  // namespace slitpath
