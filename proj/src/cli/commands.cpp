#include "slitpath/cli/commands.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <span>

#include "slitpath/cavity.hpp"
#include "slitpath/error.hpp"
#include "slitpath/quach.hpp"

namespace slitpath::cli {

namespace {

class CsvWriter {
 public:
  explicit CsvWriter(const RunConfig& config) {
    text_ += "# slitpath " + std::string(kVersion) + "\n";
    text_ += "# mass_over_hbar=" + format_number(config.physical.mass_over_hbar) + "\n";
    std::string params = describe(config);
    std::size_t start = 0;
    while (start < params.size()) {
      const std::size_t end = params.find('\n', start);
      text_ += "# " + params.substr(start, end - start) + "\n";
      start = end + 1;
    }
  }

  void meta(const std::string& key, double value) { text_ += "# " + key + "=" + format_number(value) + "\n"; }

  void header(std::initializer_list<std::string_view> columns) {
    bool first = true;
    for (auto c : columns) {
      if (!first) text_ += ",";
      text_ += c;
      first = false;
    }
    text_ += "\n";
  }

  void row(std::initializer_list<double> values) {
    bool first = true;
    for (double v : values) {
      if (!first) text_ += ",";
      text_ += format_number(v);
      first = false;
    }
    text_ += "\n";
  }

  std::string take() { return std::move(text_); }

 private:
  std::string text_;
};

std::size_t center_index(const ScreenGrid& grid) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < grid.size(); ++i) {
    if (std::abs(grid.xs[i]) < std::abs(grid.xs[best])) best = i;
  }
  return best;
}

}  // namespace

std::string format_number(double v) {
  if (v == 0.0) v = 0.0;  // no "-0"
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

CommandOutput cmd_paths(const RunConfig& config) {
  config.validate();
  const ScreenGrid grid = config.grid();
  const WhichWayState state = build_two_cavity_state(config.physical);
  const auto curves = atom_conditioned_curves(state, grid);
  const double pg0 = curves.ground[center_index(grid)];

  CsvWriter csv(config);
  csv.meta("N2", state.normalization());
  csv.meta("P_g(0)", pg0);
  csv.header({"x", "P_g", "P_e", "P_e/P_g(0)"});
  double peak = 0.0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double ratio = curves.excited[i] / pg0;
    peak = std::max(peak, ratio);
    csv.row({grid.xs[i], curves.ground[i], curves.excited[i], ratio});
  }
  return {csv.take(), "max P_e/P_g(0) = " + format_number(peak)};
}

CommandOutput cmd_eraser(const RunConfig& config) {
  config.validate();
  const ScreenGrid grid = config.grid();
  const WhichWayState state = build_two_cavity_state(config.physical);
  const EraserPatterns patterns = eraser_patterns(state, grid, config.gamma_t);
  const double pg0 = state.marginal(grid, AtomLevel::ground)[center_index(grid)];

  CsvWriter csv(config);
  csv.meta("N2", state.normalization());
  csv.meta("P_g(0)", pg0);
  csv.header({"x", "fringes", "antifringes", "sum", "P_e"});
  for (std::size_t i = 0; i < grid.size(); ++i) {
    csv.row({grid.xs[i], patterns.fringes[i], patterns.antifringes[i], patterns.sum[i], patterns.excited[i]});
  }
  return {csv.take(), "max fringes/P_g(0) = " + format_number(patterns.fringes.max() / pg0)};
}

CommandOutput cmd_quach(const RunConfig& config, std::optional<double> born_violation) {
  config.validate();
  const ScreenGrid grid = config.grid();
  QuachInputs inputs = QuachInputs::build(config.physical, grid);
  if (born_violation) inputs = with_born_violation(inputs, *born_violation);
  const SampledFunction iab = quach_parameter(inputs);
  const double ratio = quach_null_ratio(inputs);

  CsvWriter csv(config);
  if (born_violation) csv.meta("born_violation", *born_violation);
  csv.meta("N0", inputs.p_ab.norm_constant());
  csv.meta("N1_A", inputs.p_da.norm_constant());
  csv.meta("N1_B", inputs.p_db.norm_constant());
  csv.meta("N2_indistinguishable", inputs.p_dab.norm_constant());
  csv.meta("N2_distinguishable", inputs.p_dadb.norm_constant());
  csv.meta("max|I_AB|/max(N0*P_AB)", ratio);
  csv.header({"x", "P_AB", "P_D_A", "P_D_B", "P_D_AB", "P_D_AD_B", "I_AB"});
  for (std::size_t i = 0; i < grid.size(); ++i) {
    csv.row({grid.xs[i], inputs.p_ab[i], inputs.p_da[i], inputs.p_db[i], inputs.p_dab[i], inputs.p_dadb[i],
             iab.values[i]});
  }
  return {csv.take(), "max|I_AB|/max(N0*P_AB) = " + format_number(ratio)};
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    std::cout.flush();
    if (!std::cout) throw IoError("failed writing to stdout");
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open " + path + " for writing");
  out << text;
  if (!out) throw IoError("failed writing " + path);
}

}  // namespace slitpath::cli
