#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "slitpath/cli/commands.hpp"
#include "slitpath/cli/config.hpp"
#include "slitpath/cli/validate.hpp"
#include "slitpath/error.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kUsageError = 2;

}  // namespace

int main(int argc, char** argv) {
  using namespace slitpath;

  CLI::App app{"Double-slit Feynman paths with cavity which-way detectors"};
  app.set_version_flag("--version", std::string(cli::kVersion));
  app.require_subcommand(1);

  std::string config_path;
  std::string out_path;
  std::optional<double> born_violation;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--config", config_path, "key=value parameter file")->check(CLI::ExistingFile);
    sub->add_option("--out", out_path, "output file (default: output_path from config, else stdout)");
  };
  auto* paths = app.add_subcommand("paths", "P_g, P_e and P_e/P_g(0) on the screen");
  auto* eraser = app.add_subcommand("eraser", "eraser fringes and antifringes");
  auto* quach = app.add_subcommand("quach", "which-way distributions and I_AB");
  auto* validate = app.add_subcommand("validate", "run the oracle suite");
  for (auto* sub : {paths, eraser, quach, validate}) add_common(sub);
  quach->add_option("--born-violation", born_violation, "replace each probability P by P^(1+DELTA)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsageError;
  }

  cli::RunConfig config;
  try {
    if (!config_path.empty()) config = cli::load_config(config_path);
    config.validate();
  } catch (const Error& e) {
    std::cerr << "slitpath: " << e.what() << "\n";
    return kUsageError;
  }
  const std::string target = out_path.empty() ? config.output_path : out_path;
  const bool to_stdout = target.empty() || target == "-";

  try {
    if (validate->parsed()) {
      const cli::ValidationReport report = cli::run_validation(config);
      cli::write_output(target, report.text());
      return report.all_passed() ? kOk : kCheckFailed;
    }

    cli::CommandOutput output;
    if (paths->parsed()) output = cli::cmd_paths(config);
    if (eraser->parsed()) output = cli::cmd_eraser(config);
    if (quach->parsed()) output = cli::cmd_quach(config, born_violation);
    cli::write_output(target, output.csv);
    (to_stdout ? std::cerr : std::cout) << output.summary << "\n";
  } catch (const ConfigInvalid& e) {
    std::cerr << "slitpath: " << e.what() << "\n";
    return kUsageError;
  } catch (const Error& e) {
    std::cerr << "slitpath: " << e.what() << "\n";
    return kCheckFailed;
  }
  return kOk;
}
