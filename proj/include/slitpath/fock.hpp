#pragma once

#include <compare>
#include <string>

#include <Eigen/Dense>

#include "slitpath/gaussians.hpp"

namespace slitpath {

/// Photon numbers in a pair of modes: (n_A, n_B) for the two cavities, or
/// (n_+, n_−) for the beam-splitter output ports.
struct FockPair {
  int first = 0;
  int second = 0;

  int total() const { return first + second; }
  auto operator<=>(const FockPair&) const = default;
};

std::string to_string(const FockPair& fock);

/// Largest total photon number tracked.
inline constexpr int kMaxPhotons = 3;
/// States with first + second ≤ kMaxPhotons.
inline constexpr int kFockDimension = (kMaxPhotons + 1) * (kMaxPhotons + 2) / 2;

using FockVector = Eigen::Matrix<Complex, kFockDimension, 1>;
using FockOperator = Eigen::Matrix<Complex, kFockDimension, kFockDimension>;

/// Index ordered by total photon number, then by decreasing first-mode count.
/// Throws PhotonOverflow past kMaxPhotons.
int fock_index(const FockPair& fock);
FockPair fock_from_index(int index);

FockVector fock_state(const FockPair& fock);

/// Maps |n_A, n_B⟩ to the output-port basis with a†_± = (a†_A ± a†_B)/√2.
FockVector beam_splitter_transform(const FockPair& fock);
/// Linear extension to superpositions given in cavity labels.
FockVector beam_splitter_transform(const FockVector& state);

/// Column j is the image of basis state j.
FockOperator beam_splitter_matrix();

/// Annihilation operator on mode 0 (first) or 1 (second).
FockOperator lowering_operator(int mode);
FockOperator number_operator();

}  // namespace slitpath
