#include "slitpath/cavity.hpp"

#include <cmath>
#include <numbers>
#include <utility>

#include "slitpath/error.hpp"

namespace slitpath {

namespace {

// Row coefficients of the ordered-record table, indexed by record length and
// number of + clicks: {coefficient of |ψ⁺|², coefficient of |ψ⁻|²}, already
// divided by the k! of the (e^{2Γt}−1)^k/k! factor.
struct RowCoefficients {
  double plus;
  double minus;
};

RowCoefficients ground_row(int length, int plus_clicks) {
  switch (length) {
    case 0:
      return {1.0, 1.0};
    case 1:
      return plus_clicks == 1 ? RowCoefficients{2.5, 0.5} : RowCoefficients{0.5, 2.5};
    case 2:
      if (plus_clicks == 2) return {4.5 / 2.0, 0.5 / 2.0};
      if (plus_clicks == 0) return {0.5 / 2.0, 4.5 / 2.0};
      return {0.5 / 2.0, 0.5 / 2.0};
    default:
      switch (plus_clicks) {
        case 3: return {4.5 / 6.0, 0.0};
        case 0: return {0.0, 4.5 / 6.0};
        case 1: return {0.5 / 6.0, 0.0};
        default: return {0.0, 0.5 / 6.0};
      }
  }
}

RowCoefficients excited_row(int length, int plus_clicks) {
  switch (length) {
    case 0:
    case 1:
      return {1.0, 1.0};
    default:
      return plus_clicks == 1 ? RowCoefficients{0.0, 0.5} : RowCoefficients{0.5, 0.0};
  }
}

ProbabilityCurve add_curves(const ProbabilityCurve& a, const ProbabilityCurve& b) {
  require_same_grid(a.xs(), b.xs());
  std::vector<double> values(a.size());
  for (std::size_t i = 0; i < values.size(); ++i) values[i] = a[i] + b[i];
  return {a.xs(), std::move(values), a.norm_constant()};
}

}  // namespace

std::string_view to_string(AtomLevel level) { return level == AtomLevel::ground ? "g" : "e"; }

int photon_budget(AtomLevel level) { return level == AtomLevel::ground ? 3 : 2; }

double CavityParams::pi_pulse_time() const {
  return std::numbers::pi / (std::sqrt(n_excitations + 1.0) * omega);
}

void CavityParams::validate() const {
  if (!(omega > 0.0) || !std::isfinite(omega)) throw ParamsInvalid("omega must be positive");
  if (n_excitations < 0) throw ParamsInvalid("n_excitations must be non-negative");
  if (!(gamma >= 0.0) || !std::isfinite(gamma)) throw ParamsInvalid("gamma must be non-negative");
  if (!(detection_time >= 0.0) || !std::isfinite(detection_time)) {
    throw ParamsInvalid("detection_time must be non-negative");
  }
}

OutcomeSequence OutcomeSequence::parse(std::string_view text) {
  OutcomeSequence out;
  if (text == "0") return out;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (c == '+') {
      out.clicks.push_back(Click::plus);
    } else if (c == '-') {
      out.clicks.push_back(Click::minus);
    } else if (text.substr(i, 3) == "−") {
      out.clicks.push_back(Click::minus);
      i += 2;
    } else {
      throw InvalidOutcome("unrecognised click '" + std::string(text) + "'");
    }
  }
  return out;
}

std::string OutcomeSequence::str() const {
  if (clicks.empty()) return "0";
  std::string s;
  for (Click c : clicks) s += c == Click::plus ? '+' : '-';
  return s;
}

int OutcomeSequence::count(Click c) const {
  int n = 0;
  for (Click k : clicks) n += k == c ? 1 : 0;
  return n;
}

std::vector<OutcomeSequence> all_outcomes(int max_length) {
  std::vector<OutcomeSequence> out{OutcomeSequence{}};
  std::size_t begin = 0;
  for (int length = 1; length <= max_length; ++length) {
    const std::size_t end = out.size();
    for (std::size_t i = begin; i < end; ++i) {
      for (Click c : {Click::plus, Click::minus}) {
        OutcomeSequence next = out[i];
        next.clicks.push_back(c);
        out.push_back(std::move(next));
      }
    }
    begin = end;
  }
  return out;
}

FockVector which_way_marker(AtomLevel level, Parity parity) {
  const double sign = parity == Parity::plus ? 1.0 : -1.0;
  const FockPair first = level == AtomLevel::ground ? FockPair{2, 1} : FockPair{2, 0};
  const FockPair second = level == AtomLevel::ground ? FockPair{1, 2} : FockPair{0, 2};
  return (fock_state(first) + sign * fock_state(second)) / std::numbers::sqrt2;
}

WhichWayState::WhichWayState(std::vector<WhichWayTerm> terms) : terms_(std::move(terms)) {
  if (terms_.empty()) throw ParamsInvalid("which-way state has no terms");
  for (const auto& term : terms_) fock_index(term.fock);
  normalization_ = mixture().total();
  if (!(normalization_ > 0.0)) throw ParamsInvalid("which-way state has zero norm");
}

IncoherentMixture WhichWayState::mixture(std::optional<AtomLevel> level) const {
  std::map<std::pair<AtomLevel, FockPair>, std::vector<WeightedForm>> groups;
  for (const auto& term : terms_) {
    if (level && term.level != *level) continue;
    groups[{term.level, term.fock}].push_back({term.weight, term.form});
  }
  IncoherentMixture out;
  for (auto& [key, group] : groups) out.add_group(std::move(group));
  return out;
}

double WhichWayState::probability(std::optional<AtomLevel> level) const {
  return mixture(level).total() / normalization_;
}

ProbabilityCurve WhichWayState::marginal(const ScreenGrid& grid, std::optional<AtomLevel> level) const {
  return ProbabilityCurve::from_raw(grid.xs, mixture(level).sample(grid.xs), normalization_);
}

std::vector<WeightedForm> WhichWayState::marker_amplitude(AtomLevel level, const FockVector& marker) const {
  std::vector<WeightedForm> out;
  for (const auto& term : terms_) {
    if (term.level != level) continue;
    const Complex c = std::conj(marker(fock_index(term.fock)));
    if (c == Complex{0.0}) continue;
    out.push_back({c * term.weight, term.form});
  }
  return out;
}

WhichWayState build_two_cavity_state(const PathSet& paths) {
  std::vector<WhichWayTerm> terms{
      {AtomLevel::ground, {2, 1}, PathLabel::A, paths.a, 1.0},
      {AtomLevel::ground, {1, 2}, PathLabel::B, paths.b, 1.0},
  };
  if (paths.has_nonclassical()) {
    terms.push_back({AtomLevel::excited, {2, 0}, PathLabel::AB, *paths.ab, 1.0});
    terms.push_back({AtomLevel::excited, {0, 2}, PathLabel::BA, *paths.ba, 1.0});
  }
  return WhichWayState(std::move(terms));
}

WhichWayState build_two_cavity_state(const PhysicalParams& params) {
  return build_two_cavity_state(PathSet::from_params(params));
}

AtomConditionedCurves atom_conditioned_curves(const WhichWayState& state, const ScreenGrid& grid) {
  return {state.marginal(grid, AtomLevel::ground), state.marginal(grid, AtomLevel::excited)};
}

PhotocountWeights photocount_weight(AtomLevel level, const OutcomeSequence& outcome, double gamma_t) {
  if (!(gamma_t >= 0.0)) throw ParamsInvalid("gamma_t must be non-negative");
  const int budget = photon_budget(level);
  const int length = static_cast<int>(outcome.size());
  if (length > budget) {
    throw InvalidOutcome("record " + outcome.str() + " exceeds the " + std::to_string(budget) +
                         "-photon budget of the " + std::string(to_string(level)) + " level");
  }
  const int plus_clicks = outcome.count(Click::plus);
  const RowCoefficients row =
      level == AtomLevel::ground ? ground_row(length, plus_clicks) : excited_row(length, plus_clicks);

  // (e^{2Γt}−1)^k·e^{−2·budget·Γt} = p^k·q^{budget−k}, free of overflow.
  const double p = -std::expm1(-2.0 * gamma_t);
  const double q = std::exp(-2.0 * gamma_t);
  const double scale = std::pow(p, length) * std::pow(q, budget - length);
  return {row.plus * scale, row.minus * scale};
}

std::map<EraserKey, ProbabilityCurve> eraser_curves(const WhichWayState& state, const ScreenGrid& grid,
                                                    double gamma_t) {
  std::map<EraserKey, ProbabilityCurve> out;
  for (AtomLevel level : {AtomLevel::ground, AtomLevel::excited}) {
    const auto plus = state.marker_amplitude(level, which_way_marker(level, Parity::plus));
    const auto minus = state.marker_amplitude(level, which_way_marker(level, Parity::minus));
    const std::vector<double> plus_density = IncoherentMixture().add_group(plus).sample(grid.xs);
    const std::vector<double> minus_density = IncoherentMixture().add_group(minus).sample(grid.xs);

    for (const auto& outcome : all_outcomes(photon_budget(level))) {
      const PhotocountWeights w = photocount_weight(level, outcome, gamma_t);
      std::vector<double> raw(grid.xs.size());
      for (std::size_t i = 0; i < raw.size(); ++i) {
        raw[i] = w.w_plus * plus_density[i] + w.w_minus * minus_density[i];
      }
      out.emplace(EraserKey{level, outcome},
                  ProbabilityCurve::from_raw(grid.xs, raw, state.normalization()));
    }
  }
  return out;
}

ProbabilityCurve select_outcomes(const std::map<EraserKey, ProbabilityCurve>& curves, AtomLevel level,
                                 std::span<const std::string_view> outcomes) {
  if (outcomes.empty()) throw InvalidOutcome("no click records selected");
  std::optional<ProbabilityCurve> sum;
  for (std::string_view text : outcomes) {
    const auto it = curves.find({level, OutcomeSequence::parse(text)});
    if (it == curves.end()) {
      throw InvalidOutcome("no curve for record " + std::string(text) + " at level " +
                           std::string(to_string(level)));
    }
    sum = sum ? add_curves(*sum, it->second) : it->second;
  }
  return *sum;
}

EraserPatterns eraser_patterns(const WhichWayState& state, const ScreenGrid& grid, double gamma_t) {
  const auto curves = eraser_curves(state, grid, gamma_t);
  constexpr std::string_view same[] = {"++", "--"};
  constexpr std::string_view different[] = {"+-", "-+"};
  EraserPatterns out;
  out.fringes = select_outcomes(curves, AtomLevel::excited, same);
  out.antifringes = select_outcomes(curves, AtomLevel::excited, different);
  out.sum = add_curves(out.fringes, out.antifringes);
  out.excited = state.marginal(grid, AtomLevel::excited);
  return out;
}

}  // namespace slitpath
