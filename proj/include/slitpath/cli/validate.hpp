#pragma once

#include <span>
#include <string>
#include <vector>

#include "slitpath/cli/config.hpp"

namespace slitpath::cli {

enum class Bound { at_most, at_least, within };

struct Check {
  std::string name;
  bool passed = false;
  double measured = 0.0;
  double lower = 0.0;
  double upper = 0.0;
  Bound bound = Bound::at_most;
  std::string detail;  // error text when the check could not run

  std::string line() const;
};

struct ValidationReport {
  std::vector<Check> checks;

  bool all_passed() const;
  std::string text() const;
};

/// Screen positions at which closed forms are compared with quadrature.
std::vector<double> oracle_sample_points();

/// max over xs of |oracle − closed form| / |closed form|. The quadrature is
/// asked for tol/100 so that its own error stays well inside tol.
double oracle_relative_error(const PhysicalParams& params, PathLabel label, std::span<const double> xs,
                             double tol);

/// Closed forms against nested quadrature, Table II against the jump
/// process, conservation sums, limits and symmetries. Failures to compute are
/// recorded as failed checks, never thrown.
ValidationReport run_validation(const RunConfig& config);

}  // namespace slitpath::cli
