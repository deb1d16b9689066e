#include <doctest.h>

#include <cmath>
#include <random>

#include "slitpath/error.hpp"
#include "slitpath/quach.hpp"

using namespace slitpath;

namespace {

const PhysicalParams kParams = PhysicalParams::defaults();

double mirror_error(const ProbabilityCurve& a, const ProbabilityCurve& b) {
  double worst = 0.0;
  const std::size_t n = a.size();
  for (std::size_t i = 0; i < n; ++i) worst = std::max(worst, std::abs(a[i] - b[n - 1 - i]));
  return worst / b.max();
}

QuadraticForm random_form(std::mt19937& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  return {{u(rng), u(rng)}, {-0.05 - 0.05 * std::abs(u(rng)), u(rng) * 0.1}, {u(rng), u(rng)}, {0.0, 0.0}};
}

}  // namespace

TEST_CASE("setup table") {
  CHECK(setup_for(Distribution::no_detectors) == SetupConfig{});
  CHECK(setup_for(Distribution::detector_a) == SetupConfig{AtomLevel::ground, 1, std::nullopt});
  CHECK(setup_for(Distribution::detector_b) == SetupConfig{AtomLevel::ground, std::nullopt, 1});
  CHECK(setup_for(Distribution::distinguishable) == setup_for(Distribution::indistinguishable));
  CHECK_NOTHROW(validate_setup(setup_for(Distribution::indistinguishable)));
  CHECK_THROWS_AS(validate_setup({AtomLevel::excited, 1, std::nullopt}), ParamsInvalid);
}

TEST_CASE("no-detector distribution") {
  const PathSet paths = PathSet::from_params(kParams);
  const ScreenGrid grid = default_grid(kParams);
  const ProbabilityCurve p = p_no_detectors(paths, grid);
  CHECK(mirror_error(p, p) < 1e-12);
  const std::size_t c = grid.size() / 2;
  CHECK(p.raw()[c] > paths.a.density(0.0) + paths.b.density(0.0));
  CHECK(p.integral() == doctest::Approx(1.0).epsilon(1e-6));

  const ProbabilityCurve classical = p_no_detectors(paths.without_nonclassical(), grid);
  for (std::size_t i = 0; i < grid.size(); i += 101) {
    const double x = grid.xs[i];
    CHECK(classical.raw()[i] == doctest::Approx(std::norm(paths.a(x) + paths.b(x))).epsilon(1e-13));
  }
}

TEST_CASE("single detector distributions") {
  const PathSet paths = PathSet::from_params(kParams);
  const ScreenGrid grid = default_grid(kParams);
  const ProbabilityCurve da = p_single_detector(paths, grid, Slit::A);
  const ProbabilityCurve db = p_single_detector(paths, grid, Slit::B);
  CHECK(mirror_error(da, db) < 1e-12);

  const std::size_t i = 700;
  const double x = grid.xs[i];
  const double expected = std::norm(paths.a(x) + (*paths.ab)(x) + (*paths.ba)(x)) + paths.b.density(x);
  CHECK(da.raw()[i] == doctest::Approx(expected).epsilon(1e-13));

  const ProbabilityCurve washout = p_single_detector(paths.without_nonclassical(), grid, Slit::A);
  CHECK(washout.raw()[i] == doctest::Approx(paths.a.density(x) + paths.b.density(x)).epsilon(1e-13));

  // The nonclassical cross term shifts P_D_A by about 2a relative to the washout.
  double deviation = 0.0;
  for (std::size_t k = 0; k < grid.size(); ++k) deviation = std::max(deviation, std::abs(da[k] - washout[k]));
  const double relative = deviation / washout.max();
  CHECK(relative > 0.01);
  CHECK(relative < 0.5);
}

TEST_CASE("both-detector distributions") {
  const PathSet paths = PathSet::from_params(kParams);
  const ScreenGrid grid = default_grid(kParams);
  const ProbabilityCurve indist = p_both_detectors(paths, grid, false);
  const ProbabilityCurve dist = p_both_detectors(paths, grid, true);
  CHECK(mirror_error(indist, indist) < 1e-12);
  CHECK(mirror_error(dist, dist) < 1e-12);
  CHECK(count_local_maxima(indist.values()) > count_local_maxima(dist.values()));
  CHECK(indist.integral() == doctest::Approx(1.0).epsilon(1e-6));
  CHECK(dist.integral() == doctest::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("measurement composition") {
  const PathSet paths = PathSet::from_params(kParams);
  const ScreenGrid grid = default_grid(kParams);

  const CompositionReport dist = compose_both_detectors(paths, grid, true, kLongDetectionGammaT);
  CHECK(dist.scale == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(dist.normalized_difference < 1e-10);

  // The six-record recipe carries half of each term.
  const CompositionReport indist = compose_both_detectors(paths, grid, false, kLongDetectionGammaT);
  CHECK(indist.scale == doctest::Approx(0.5).epsilon(1e-10));
  CHECK(indist.normalized_difference < 1e-10);

  // Ground records +++, +−−, −+−, −−+ sum to |ψ⁺_c|²/N₂.
  const WhichWayState state = build_two_cavity_state(paths);
  const auto curves = eraser_curves(state, grid, kLongDetectionGammaT);
  constexpr std::string_view records[] = {"+++", "+--", "-+-", "--+"};
  const ProbabilityCurve g = select_outcomes(curves, AtomLevel::ground, records);
  const std::size_t i = 1100;
  const double x = grid.xs[i];
  CHECK(g[i] == doctest::Approx(std::norm(paths.a(x) + paths.b(x)) / 2.0 / state.normalization()).epsilon(1e-12));

  CHECK_THROWS_AS(compose_both_detectors(paths, grid, true, 5.0), ParamsInvalid);
}

TEST_CASE("quach parameter vanishes under the Born rule") {
  const ScreenGrid grid = default_grid(kParams);
  const QuachInputs inputs = QuachInputs::build(kParams, grid);
  CHECK(quach_null_ratio(inputs) <= 1e-10);

  const QuachInputs classical = QuachInputs::build(PathSet::from_params(kParams).without_nonclassical(), grid);
  CHECK(quach_null_ratio(classical) <= 1e-12);

  const QuachInputs violated = with_born_violation(inputs, 0.05);
  CHECK(quach_null_ratio(violated) > 1e-3);
  CHECK(violated.p_ab.integral() == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("quach identity holds for arbitrary amplitudes") {
  std::mt19937 rng(11);
  const ScreenGrid grid = ScreenGrid::uniform(15.0, 301);
  for (int trial = 0; trial < 5; ++trial) {
    const PathSet paths{random_form(rng), random_form(rng), random_form(rng), random_form(rng)};
    CHECK(quach_null_ratio(QuachInputs::build(paths, grid)) <= 1e-10);
  }
}

TEST_CASE("normalisation round trip") {
  const ScreenGrid grid = default_grid(kParams);
  const ProbabilityCurve p = p_no_detectors(PathSet::from_params(kParams), grid);
  const ProbabilityCurve n = p.normalize();
  CHECK(n.integral() == doctest::Approx(1.0).epsilon(1e-14));
  const auto a = p.raw();
  const auto b = n.raw();
  double worst = 0.0;
  double peak = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    worst = std::max(worst, std::abs(a[i] - b[i]));
    peak = std::max(peak, a[i]);
  }
  CHECK(worst <= 1e-14 * peak);
}

TEST_CASE("grid mismatch is rejected") {
  const PathSet paths = PathSet::from_params(kParams);
  QuachInputs inputs = QuachInputs::build(paths, ScreenGrid::uniform(30.0, 101));
  inputs.p_dab = p_both_detectors(paths, ScreenGrid::uniform(30.0, 103), false);
  CHECK_THROWS_AS(quach_parameter(inputs), GridMismatch);
}

TEST_CASE("sorkin parameter") {
  std::mt19937 rng(3);
  const ScreenGrid grid = ScreenGrid::uniform(15.0, 201);
  const QuadraticForm a = random_form(rng);
  const QuadraticForm b = random_form(rng);
  const QuadraticForm c = random_form(rng);
  auto curve = [&](std::vector<WeightedForm> group) {
    IncoherentMixture m;
    m.add_group(std::move(group));
    return m.curve(grid);
  };
  const auto pa = curve({{1.0, a}});
  const auto pb = curve({{1.0, b}});
  const auto pc = curve({{1.0, c}});
  const auto pab = curve({{1.0, a}, {1.0, b}});
  const auto pac = curve({{1.0, a}, {1.0, c}});
  const auto pbc = curve({{1.0, b}, {1.0, c}});
  const auto pabc = curve({{1.0, a}, {1.0, b}, {1.0, c}});

  double peak = 0.0;
  for (double v : pabc.raw()) peak = std::max(peak, v);
  const auto null = sorkin_parameter(pabc, pab, pac, pbc, pa, pb, pc);
  for (double v : null.values) CHECK(std::abs(v) <= 1e-10 * peak);

  const QuadraticForm n = random_form(rng);
  const auto with_extra = curve({{1.0, a}, {1.0, b}, {1.0, c}, {0.3, n}});
  const auto signal = sorkin_parameter(with_extra, pab, pac, pbc, pa, pb, pc);
  double largest = 0.0;
  for (double v : signal.values) largest = std::max(largest, std::abs(v));
  CHECK(largest > 1e-3 * peak);

  const ProbabilityCurve zero(grid.xs, std::vector<double>(grid.size(), 0.0), 1.0);
  for (double v : sorkin_parameter(zero, zero, zero, zero, zero, zero, zero).values) CHECK(v == 0.0);
}
