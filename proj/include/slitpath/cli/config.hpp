#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include "slitpath/paths.hpp"

namespace slitpath::cli {

inline constexpr std::string_view kVersion = "1.0.0";
inline constexpr double kDefaultMassKg = 1.44e-25;

/// Everything a command needs; defaults reproduce the reference parameter set.
struct RunConfig {
  PhysicalParams physical = PhysicalParams::defaults();
  double mass_kg = kDefaultMassKg;
  double gamma_t = 20.0;
  int grid_points = 2001;
  std::optional<double> grid_halfwidth;
  double oracle_tol = 1e-6;
  std::string output_path;

  ScreenGrid grid() const;
  /// Throws ConfigInvalid naming the field.
  void validate() const;
};

/// Flat key=value lines, "#" starts a comment, blank lines ignored. Every
/// key is optional. Throws ConfigInvalid with "source:line: field: reason".
RunConfig parse_config(std::istream& in, std::string_view source = "<config>");

/// Throws IoError if the file cannot be opened.
RunConfig load_config(const std::string& path);

/// Key=value lines that parse back to the same configuration.
std::string describe(const RunConfig& config);

}  // namespace slitpath::cli
