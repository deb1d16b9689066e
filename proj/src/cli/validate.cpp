#include "slitpath/cli/validate.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>

#include "slitpath/cavity.hpp"
#include "slitpath/error.hpp"
#include "slitpath/jump_process.hpp"
#include "slitpath/path_oracle.hpp"
#include "slitpath/quach.hpp"

namespace slitpath::cli {

namespace {

std::string short_number(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", v);
  return buf;
}

double relative(double a, double b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

double mirror_error(std::span<const double> values) {
  double peak = 0.0;
  double worst = 0.0;
  const std::size_t n = values.size();
  for (std::size_t i = 0; i < n; ++i) {
    peak = std::max(peak, std::abs(values[i]));
    worst = std::max(worst, std::abs(values[i] - values[n - 1 - i]));
  }
  return peak > 0.0 ? worst / peak : worst;
}

double mirror_error(std::span<const double> a, std::span<const double> b) {
  double peak = 0.0;
  double worst = 0.0;
  const std::size_t n = a.size();
  for (std::size_t i = 0; i < n; ++i) {
    peak = std::max(peak, std::abs(b[i]));
    worst = std::max(worst, std::abs(a[i] - b[n - 1 - i]));
  }
  return peak > 0.0 ? worst / peak : worst;
}

double form_mirror_error(const QuadraticForm& f, const QuadraticForm& g, std::span<const double> xs) {
  double worst = 0.0;
  for (double x : xs) {
    const Complex a = f(x);
    const Complex b = g(-x);
    worst = std::max(worst, std::abs(a - b) / std::max(std::abs(b), 1e-300));
  }
  return worst;
}

double curve_difference(const ProbabilityCurve& a, const ProbabilityCurve& b) {
  return max_abs_difference(a.values(), b.values()) / std::max(b.max(), 1e-300);
}

class Suite {
 public:
  void at_most(const std::string& name, double limit, const std::function<double()>& measure) {
    run(name, Bound::at_most, 0.0, limit, measure);
  }
  void at_least(const std::string& name, double limit, const std::function<double()>& measure) {
    run(name, Bound::at_least, limit, 0.0, measure);
  }
  void within(const std::string& name, double lower, double upper, const std::function<double()>& measure) {
    run(name, Bound::within, lower, upper, measure);
  }
  ValidationReport take() { return std::move(report_); }

 private:
  void run(const std::string& name, Bound bound, double lower, double upper,
           const std::function<double()>& measure) {
    Check check{name, false, 0.0, lower, upper, bound, {}};
    try {
      check.measured = measure();
      switch (bound) {
        case Bound::at_most: check.passed = check.measured <= upper; break;
        case Bound::at_least: check.passed = check.measured >= lower; break;
        case Bound::within: check.passed = check.measured >= lower && check.measured <= upper; break;
      }
    } catch (const Error& e) {
      check.detail = e.what();
    }
    report_.checks.push_back(std::move(check));
  }

  ValidationReport report_;
};

}  // namespace

std::string Check::line() const {
  char buf[160];
  switch (bound) {
    case Bound::at_most: std::snprintf(buf, sizeof buf, "measured %.3e <= %.1e", measured, upper); break;
    case Bound::at_least: std::snprintf(buf, sizeof buf, "measured %.3e >= %.1e", measured, lower); break;
    case Bound::within:
      std::snprintf(buf, sizeof buf, "measured %.3e in [%.1e, %.1e]", measured, lower, upper);
      break;
  }
  std::string out = (passed ? "PASS " : "FAIL ") + name + "  ";
  out += detail.empty() ? std::string(buf) : "error: " + detail;
  return out;
}

bool ValidationReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

std::string ValidationReport::text() const {
  std::string out;
  int failed = 0;
  for (const auto& c : checks) {
    out += c.line() + "\n";
    failed += c.passed ? 0 : 1;
  }
  out += std::to_string(checks.size() - failed) + "/" + std::to_string(checks.size()) + " checks passed\n";
  return out;
}

std::vector<double> oracle_sample_points() {
  std::vector<double> xs(21);
  for (int i = 0; i < 21; ++i) xs[i] = -20.0 + 2.0 * i;
  return xs;
}

double oracle_relative_error(const PhysicalParams& params, PathLabel label, std::span<const double> xs,
                             double tol) {
  const QuadraticForm closed = path_form(params, label);
  PathIntegralOracle oracle(params, label, tol * 1e-2);
  double worst = 0.0;
  for (double x : xs) {
    const Complex exact = closed(x);
    worst = std::max(worst, std::abs(oracle(x) - exact) / std::abs(exact));
  }
  return worst;
}

ValidationReport run_validation(const RunConfig& config) {
  config.validate();
  const PhysicalParams& p = config.physical;
  const ScreenGrid grid = config.grid();
  const auto xs = oracle_sample_points();
  Suite suite;

  suite.at_most("constants.classical", kConstantsTolerance, [&] {
    return max_relative_difference(classical_constants(p),
                                   ClosedFormConstants::from_form(propagate_path(p, PathLabel::A)));
  });
  suite.at_most("constants.nonclassical", kConstantsTolerance, [&] {
    return max_relative_difference(nonclassical_constants(p),
                                   ClosedFormConstants::from_form(propagate_path(p, PathLabel::AB)));
  });

  for (PathLabel label : {PathLabel::A, PathLabel::B, PathLabel::AB, PathLabel::BA, PathLabel::BAB}) {
    const bool looped = traversal_count(label) == 3;
    const double limit = looped ? 10.0 * config.oracle_tol : config.oracle_tol;
    suite.at_most("oracle." + std::string(to_string(label)), limit,
                  [&, label] { return oracle_relative_error(p, label, xs, config.oracle_tol); });
  }

  suite.at_most("symmetry.wavefunctions", 1e-12, [&] {
    double worst = 0.0;
    for (PathLabel label : {PathLabel::A, PathLabel::AB, PathLabel::BAB}) {
      worst = std::max(worst, form_mirror_error(path_form(p, label), path_form(p, mirror(label)), grid.xs));
    }
    return worst;
  });

  const PathSet paths = PathSet::from_params(p);
  const WhichWayState state = build_two_cavity_state(paths);
  const auto conditioned = atom_conditioned_curves(state, grid);
  const std::size_t center = grid.size() / 2;

  suite.at_most("symmetry.curves", 1e-12, [&] {
    const auto patterns = eraser_patterns(state, grid, kLongDetectionGammaT);
    const auto inputs = QuachInputs::build(paths, grid);
    double worst = 0.0;
    for (const auto* c : {&conditioned.ground, &conditioned.excited, &patterns.fringes, &patterns.antifringes,
                          &inputs.p_ab, &inputs.p_dab, &inputs.p_dadb}) {
      worst = std::max(worst, mirror_error(c->values()));
    }
    return std::max(worst, mirror_error(inputs.p_da.values(), inputs.p_db.values()));
  });

  suite.within("visibility.nonclassical", 0.005, 0.02,
               [&] { return conditioned.excited.max() / conditioned.ground[center]; });
  suite.within("magnitude.looped", 1e-5, 1e-3, [&] {
    const QuadraticForm bab = path_form(p, PathLabel::BAB);
    double peak = 0.0;
    for (double x : grid.xs) peak = std::max(peak, bab.density(x));
    return peak / state.normalization() / conditioned.ground[center];
  });
  suite.within("attenuation", 0.05, 0.2, [&] { return attenuation_factor(p); });

  for (double gt : {0.1, 1.0, 10.0}) {
    suite.at_most("table.oracle gamma_t=" + short_number(gt), 1e-8, [gt] {
      double worst = 0.0;
      for (AtomLevel level : {AtomLevel::ground, AtomLevel::excited}) {
        for (const auto& [outcome, w] : jump_process_oracle(level, gt)) {
          if (static_cast<int>(outcome.size()) > photon_budget(level)) {
            worst = std::max({worst, w.w_plus, w.w_minus});
            continue;
          }
          const PhotocountWeights t = photocount_weight(level, outcome, gt);
          worst = std::max({worst, relative(w.w_plus, t.w_plus), relative(w.w_minus, t.w_minus)});
        }
      }
      return worst;
    });
  }

  suite.at_most("table.conservation", 1e-10, [&] {
    double worst = 0.0;
    for (double gt : {0.0, 0.5, 2.0, 20.0}) {
      const auto curves = eraser_curves(state, grid, gt);
      for (AtomLevel level : {AtomLevel::ground, AtomLevel::excited}) {
        std::vector<double> sum(grid.size(), 0.0);
        for (const auto& [key, curve] : curves) {
          if (key.level != level) continue;
          for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += curve[i];
        }
        const auto& target = level == AtomLevel::ground ? conditioned.ground : conditioned.excited;
        worst = std::max(worst, max_abs_difference(sum, target.values()) / target.max());
      }
    }
    return worst;
  });

  suite.at_most("table.long_time", 1e-9, [] {
    const double gt = kLongDetectionGammaT;
    const auto e = photocount_weight(AtomLevel::excited, OutcomeSequence::parse("++"), gt);
    const auto e2 = photocount_weight(AtomLevel::excited, OutcomeSequence::parse("+-"), gt);
    const auto g3 = photocount_weight(AtomLevel::ground, OutcomeSequence::parse("+++"), gt);
    const auto g1 = photocount_weight(AtomLevel::ground, OutcomeSequence::parse("-+-"), gt);
    return std::max({std::abs(e.w_plus - 0.5), std::abs(e2.w_minus - 0.5), std::abs(g3.w_plus - 0.75),
                     std::abs(g1.w_plus - 1.0 / 12.0)});
  });

  const EraserPatterns patterns = eraser_patterns(state, grid, kLongDetectionGammaT);
  suite.at_most("eraser.recovery", 1e-10, [&] { return curve_difference(patterns.sum, patterns.excited); });
  suite.at_least("eraser.fringe_maxima", 3, [&] { return count_local_maxima(patterns.fringes.values()); });
  suite.within("eraser.excited_maxima", 2, 2, [&] { return count_local_maxima(patterns.excited.values()); });

  const QuachInputs inputs = QuachInputs::build(paths, grid);
  suite.at_most("quach.null", 1e-10, [&] { return quach_null_ratio(inputs); });
  suite.at_least("quach.violation_detected", 1e-3,
                 [&] { return quach_null_ratio(with_born_violation(inputs, 0.05)); });
  suite.at_most("quach.composition_distinguishable", 1e-10, [&] {
    return compose_both_detectors(paths, grid, true, kLongDetectionGammaT).normalized_difference;
  });
  suite.at_most("quach.composition_indistinguishable", 1e-10, [&] {
    return compose_both_detectors(paths, grid, false, kLongDetectionGammaT).normalized_difference;
  });

  return suite.take();
}

}  // namespace slitpath::cli
