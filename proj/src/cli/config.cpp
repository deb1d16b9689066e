#include "slitpath/cli/config.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <string>

#include "slitpath/error.hpp"

namespace slitpath::cli {

namespace {

std::string_view trim(std::string_view s) {
  const auto begin = s.find_first_not_of(" \t\r");
  if (begin == std::string_view::npos) return {};
  const auto end = s.find_last_not_of(" \t\r");
  return s.substr(begin, end - begin + 1);
}

std::string where(std::string_view source, int line, std::string_view field) {
  return std::string(source) + ":" + std::to_string(line) + ": " + std::string(field) + ": ";
}

double parse_real(std::string_view text, const std::string& context) {
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size() || !std::isfinite(value)) {
    throw ConfigInvalid(context + "expected a finite number, got '" + std::string(text) + "'");
  }
  return value;
}

int parse_int(std::string_view text, const std::string& context) {
  int value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw ConfigInvalid(context + "expected an integer, got '" + std::string(text) + "'");
  }
  return value;
}

std::string number(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

ScreenGrid RunConfig::grid() const { return default_grid(physical, grid_points, grid_halfwidth); }

void RunConfig::validate() const {
  try {
    physical.validate();
  } catch (const ParamsInvalid& e) {
    throw ConfigInvalid(e.what());
  }
  if (!(mass_kg > 0.0)) throw ConfigInvalid("mass: must be positive");
  if (!(gamma_t >= 0.0)) throw ConfigInvalid("gamma_t: must be non-negative");
  if (grid_points < 2) throw ConfigInvalid("grid_points: need at least 2");
  if (grid_halfwidth && !(*grid_halfwidth > 0.0)) throw ConfigInvalid("grid_halfwidth: must be positive");
  if (!(oracle_tol > 0.0 && oracle_tol < 1.0)) throw ConfigInvalid("oracle_tol: must lie in (0, 1)");
}

RunConfig parse_config(std::istream& in, std::string_view source) {
  RunConfig config;
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    std::string_view text = raw;
    if (const auto hash = text.find('#'); hash != std::string_view::npos) text = text.substr(0, hash);
    text = trim(text);
    if (text.empty()) continue;

    const auto eq = text.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigInvalid(std::string(source) + ":" + std::to_string(line) + ": expected key=value");
    }
    const std::string_view key = trim(text.substr(0, eq));
    const std::string_view value = trim(text.substr(eq + 1));
    const std::string ctx = where(source, line, key);

    auto& p = config.physical;
    if (key == "mass") {
      config.mass_kg = parse_real(value, ctx);
      if (!(config.mass_kg > 0.0)) throw ConfigInvalid(ctx + "must be positive");
      p.mass_over_hbar = PhysicalParams::mass_over_hbar_from_kg(config.mass_kg);
    } else if (key == "d") {
      p.d = parse_real(value, ctx);
    } else if (key == "sigma0") {
      p.sigma0 = parse_real(value, ctx);
    } else if (key == "beta") {
      p.beta = parse_real(value, ctx);
    } else if (key == "t") {
      p.t = parse_real(value, ctx);
    } else if (key == "tau") {
      p.tau = parse_real(value, ctx);
    } else if (key == "epsilon") {
      p.epsilon = parse_real(value, ctx);
    } else if (key == "gamma_t") {
      config.gamma_t = parse_real(value, ctx);
    } else if (key == "grid_points") {
      config.grid_points = parse_int(value, ctx);
    } else if (key == "grid_halfwidth") {
      config.grid_halfwidth = parse_real(value, ctx);
    } else if (key == "oracle_tol") {
      config.oracle_tol = parse_real(value, ctx);
    } else if (key == "output_path") {
      config.output_path = std::string(value);
    } else {
      throw ConfigInvalid(ctx + "unknown key");
    }

    try {
      config.validate();
    } catch (const ConfigInvalid& e) {
      throw ConfigInvalid(std::string(source) + ":" + std::to_string(line) + ": " + e.what());
    }
  }
  return config;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open config " + path);
  return parse_config(in, path);
}

std::string describe(const RunConfig& c) {
  const auto& p = c.physical;
  std::string out;
  out += "mass=" + number(c.mass_kg) + "\n";
  out += "d=" + number(p.d) + "\n";
  out += "sigma0=" + number(p.sigma0) + "\n";
  out += "beta=" + number(p.beta) + "\n";
  out += "t=" + number(p.t) + "\n";
  out += "tau=" + number(p.tau) + "\n";
  out += "epsilon=" + number(p.epsilon) + "\n";
  out += "gamma_t=" + number(c.gamma_t) + "\n";
  out += "grid_points=" + std::to_string(c.grid_points) + "\n";
  if (c.grid_halfwidth) out += "grid_halfwidth=" + number(*c.grid_halfwidth) + "\n";
  out += "oracle_tol=" + number(c.oracle_tol) + "\n";
  return out;
}

}  // namespace slitpath::cli
