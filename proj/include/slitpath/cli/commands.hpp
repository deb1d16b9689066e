#pragma once

#include <optional>
#include <string>
#include <vector>

#include "slitpath/cli/config.hpp"

namespace slitpath::cli {

/// CSV text plus an optional one-line summary meant for the terminal.
struct CommandOutput {
  std::string csv;
  std::string summary;
};

/// x, P_g, P_e, P_e/P_g(0).
CommandOutput cmd_paths(const RunConfig& config);

/// x, fringes, antifringes, sum, P_e.
CommandOutput cmd_eraser(const RunConfig& config);

/// x, P_AB, P_D_A, P_D_B, P_D_AB, P_D_AD_B, I_AB. born_violation replaces
/// each raw probability P by P^(1+delta) before the combination.
CommandOutput cmd_quach(const RunConfig& config, std::optional<double> born_violation = std::nullopt);

/// Writes text to path, or to stdout for an empty path or "-". Throws IoError.
void write_output(const std::string& path, const std::string& text);

/// Fixed "%.17g" rendering shared by every CSV column.
std::string format_number(double v);

}  // namespace slitpath::cli
