#include "slitpath/quach.hpp"

#include <algorithm>
#include <cmath>
#include <string_view>

#include "slitpath/error.hpp"

namespace slitpath {

namespace {

std::vector<WeightedForm> nonclassical_terms(const PathSet& paths) {
  if (!paths.has_nonclassical()) return {};
  return {{1.0, *paths.ab}, {1.0, *paths.ba}};
}

std::vector<WeightedForm> with_nonclassical(std::vector<WeightedForm> group, const PathSet& paths) {
  for (auto& term : nonclassical_terms(paths)) group.push_back(term);
  return group;
}

double peak_abs(std::span<const double> values) {
  double peak = 0.0;
  for (double v : values) peak = std::max(peak, std::abs(v));
  return peak;
}

ProbabilityCurve powered(const ProbabilityCurve& curve, double exponent) {
  std::vector<double> raw = curve.raw();
  for (double& v : raw) v = std::pow(v, exponent);
  const double area = trapezoid(curve.xs(), raw);
  return ProbabilityCurve::from_raw(curve.xs(), raw, area);
}

}  // namespace

std::string_view to_string(Distribution distribution) {
  switch (distribution) {
    case Distribution::no_detectors: return "P_AB";
    case Distribution::detector_a: return "P_D_A";
    case Distribution::detector_b: return "P_D_B";
    case Distribution::indistinguishable: return "P_D_AB";
    case Distribution::distinguishable: return "P_D_AD_B";
  }
  return "?";
}

SetupConfig setup_for(Distribution distribution) {
  switch (distribution) {
    case Distribution::no_detectors: return {};
    case Distribution::detector_a: return {AtomLevel::ground, 1, std::nullopt};
    case Distribution::detector_b: return {AtomLevel::ground, std::nullopt, 1};
    case Distribution::indistinguishable:
    case Distribution::distinguishable: return {AtomLevel::excited, 1, 1};
  }
  return {};
}

void validate_setup(const SetupConfig& setup) {
  for (Distribution d : {Distribution::no_detectors, Distribution::detector_a, Distribution::detector_b,
                         Distribution::distinguishable}) {
    if (setup == setup_for(d)) return;
  }
  throw ParamsInvalid("setup matches no which-way configuration");
}

WhichWayState build_single_cavity_state(const PathSet& paths, Slit cavity) {
  const bool in_a = cavity == Slit::A;
  // The atom keeps its ground level only if it avoided the cavity slit.
  std::vector<WhichWayTerm> terms{
      {AtomLevel::ground, in_a ? FockPair{1, 0} : FockPair{0, 1}, in_a ? PathLabel::B : PathLabel::A,
       in_a ? paths.b : paths.a, 1.0},
      {AtomLevel::excited, {0, 0}, in_a ? PathLabel::A : PathLabel::B, in_a ? paths.a : paths.b, 1.0},
  };
  if (paths.has_nonclassical()) {
    terms.push_back({AtomLevel::excited, {0, 0}, PathLabel::AB, *paths.ab, 1.0});
    terms.push_back({AtomLevel::excited, {0, 0}, PathLabel::BA, *paths.ba, 1.0});
  }
  return WhichWayState(std::move(terms));
}

ProbabilityCurve p_no_detectors(const PathSet& paths, const ScreenGrid& grid) {
  IncoherentMixture mixture;
  mixture.add_group(with_nonclassical({{1.0, paths.a}, {1.0, paths.b}}, paths));
  return mixture.curve(grid);
}

ProbabilityCurve p_single_detector(const PathSet& paths, const ScreenGrid& grid, Slit cavity) {
  return build_single_cavity_state(paths, cavity).marginal(grid);
}

ProbabilityCurve p_both_detectors(const PathSet& paths, const ScreenGrid& grid, bool distinguishable) {
  IncoherentMixture mixture;
  if (distinguishable) {
    mixture.add_group({{1.0, paths.a}}).add_group({{1.0, paths.b}});
  } else {
    mixture.add_group({{1.0, paths.a}, {1.0, paths.b}});
  }
  if (paths.has_nonclassical()) mixture.add_group(nonclassical_terms(paths));
  return mixture.curve(grid);
}

CompositionReport compose_both_detectors(const PathSet& paths, const ScreenGrid& grid,
                                         bool distinguishable, double gamma_t) {
  if (!(gamma_t >= kLongDetectionGammaT)) {
    throw ParamsInvalid("composition needs gamma_t >= " + std::to_string(kLongDetectionGammaT));
  }
  const WhichWayState state = build_two_cavity_state(paths);
  const auto curves = eraser_curves(state, grid, gamma_t);

  std::vector<std::string> ground_texts;
  if (distinguishable) {
    for (const auto& [key, curve] : curves) {
      if (key.level == AtomLevel::ground) ground_texts.push_back(key.outcome.str());
    }
  } else {
    ground_texts = {"+++", "+--", "-+-", "--+"};
  }
  const std::vector<std::string_view> ground_views(ground_texts.begin(), ground_texts.end());
  constexpr std::string_view same[] = {"++", "--"};

  const ProbabilityCurve g = select_outcomes(curves, AtomLevel::ground, ground_views);
  const ProbabilityCurve e = select_outcomes(curves, AtomLevel::excited, same);
  const double e_factor = distinguishable ? 2.0 : 1.0;
  std::vector<double> values(g.size());
  for (std::size_t i = 0; i < values.size(); ++i) values[i] = g[i] + e_factor * e[i];

  CompositionReport report;
  report.composed = ProbabilityCurve(grid.xs, std::move(values), state.normalization());
  report.direct = p_both_detectors(paths, grid, distinguishable);
  report.scale = trapezoid(grid.xs, report.composed.raw()) / trapezoid(grid.xs, report.direct.raw());
  const ProbabilityCurve a = report.composed.normalize();
  const ProbabilityCurve b = report.direct.normalize();
  report.normalized_difference = max_abs_difference(a.values(), b.values()) / b.max();
  return report;
}

QuachInputs QuachInputs::build(const PathSet& paths, const ScreenGrid& grid) {
  return {p_no_detectors(paths, grid), p_single_detector(paths, grid, Slit::A),
          p_single_detector(paths, grid, Slit::B), p_both_detectors(paths, grid, false),
          p_both_detectors(paths, grid, true)};
}

QuachInputs QuachInputs::build(const PhysicalParams& params, const ScreenGrid& grid) {
  return build(PathSet::from_params(params), grid);
}

SampledFunction quach_parameter(const QuachInputs& in) {
  const auto& xs = in.p_ab.xs();
  for (const auto* c : {&in.p_da, &in.p_db, &in.p_dab, &in.p_dadb}) require_same_grid(xs, c->xs());
  const auto ab = in.p_ab.raw();
  const auto da = in.p_da.raw();
  const auto db = in.p_db.raw();
  const auto dab = in.p_dab.raw();
  const auto dadb = in.p_dadb.raw();
  SampledFunction out{xs, std::vector<double>(xs.size())};
  for (std::size_t i = 0; i < xs.size(); ++i) {
    out.values[i] = ab[i] - (da[i] + db[i]) - dab[i] + 2.0 * dadb[i];
  }
  return out;
}

double quach_null_ratio(const QuachInputs& inputs) {
  const double scale = peak_abs(inputs.p_ab.raw());
  if (!(scale > 0.0)) throw Error("P_AB vanishes on the grid");
  return peak_abs(quach_parameter(inputs).values) / scale;
}

QuachInputs with_born_violation(const QuachInputs& in, double delta) {
  if (!std::isfinite(delta) || delta <= -1.0) throw ParamsInvalid("born violation must exceed -1");
  const double e = 1.0 + delta;
  return {powered(in.p_ab, e), powered(in.p_da, e), powered(in.p_db, e), powered(in.p_dab, e),
          powered(in.p_dadb, e)};
}

SampledFunction sorkin_parameter(const ProbabilityCurve& p_abc, const ProbabilityCurve& p_ab,
                                 const ProbabilityCurve& p_ac, const ProbabilityCurve& p_bc,
                                 const ProbabilityCurve& p_a, const ProbabilityCurve& p_b,
                                 const ProbabilityCurve& p_c) {
  const auto& xs = p_abc.xs();
  for (const auto* c : {&p_ab, &p_ac, &p_bc, &p_a, &p_b, &p_c}) require_same_grid(xs, c->xs());
  const auto abc = p_abc.raw();
  const auto ab = p_ab.raw();
  const auto ac = p_ac.raw();
  const auto bc = p_bc.raw();
  const auto a = p_a.raw();
  const auto b = p_b.raw();
  const auto c = p_c.raw();
  SampledFunction out{xs, std::vector<double>(xs.size())};
  for (std::size_t i = 0; i < xs.size(); ++i) {
    out.values[i] = abc[i] - ab[i] - ac[i] - bc[i] + a[i] + b[i] + c[i];
  }
  return out;
}

}  // namespace slitpath
