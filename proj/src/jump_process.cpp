#include "slitpath/jump_process.hpp"

#include <cmath>
#include <vector>

#include "slitpath/error.hpp"
#include "slitpath/quadrature.hpp"

namespace slitpath {

namespace {

struct Gram {
  double pp = 0.0;
  double mm = 0.0;
  double pm = 0.0;

  friend Gram operator+(const Gram& a, const Gram& b) { return {a.pp + b.pp, a.mm + b.mm, a.pm + b.pm}; }
  friend Gram operator-(const Gram& a, const Gram& b) { return {a.pp - b.pp, a.mm - b.mm, a.pm - b.pm}; }
  friend Gram operator*(const Gram& a, double s) { return {a.pp * s, a.mm * s, a.pm * s}; }
  friend Gram operator*(double s, const Gram& a) { return a * s; }
  friend double quadrature_magnitude(const Gram& g) {
    return std::abs(g.pp) + std::abs(g.mm) + std::abs(g.pm);
  }
};

// e^{−ΓN·dt} with Γ = 1.
FockVector decay(const FockVector& v, double dt) {
  FockVector out = v;
  for (int j = 0; j < kFockDimension; ++j) out(j) *= std::exp(-fock_from_index(j).total() * dt);
  return out;
}

class Recorder {
 public:
  Recorder(const OutcomeSequence& outcome, double window)
      : window_(window), lowering_{lowering_operator(0), lowering_operator(1)} {
    for (Click c : outcome.clicks) modes_.push_back(c == Click::plus ? 0 : 1);
  }

  // Integral over ordered click times t_level < ... < window of the Gram
  // entries, given the states just after click `level`−1 at time `since`.
  Gram integrate(const FockVector& plus, const FockVector& minus, std::size_t level, double since) const {
    if (level == modes_.size()) {
      const FockVector p = decay(plus, window_ - since);
      const FockVector m = decay(minus, window_ - since);
      return {p.squaredNorm(), m.squaredNorm(), p.dot(m).real()};
    }
    const FockOperator& a = lowering_[modes_[level]];
    auto body = [&](double t) {
      const FockVector p = a * decay(plus, t - since);
      const FockVector m = a * decay(minus, t - since);
      return 2.0 * integrate(p, m, level + 1, t);
    };
    QuadratureOptions options;
    options.rel_tol = kJumpProcessTolerance;
    options.abs_tol = 1e-300;
    return integrate_adaptive(body, since, window_, options).value;
  }

 private:
  double window_;
  std::vector<int> modes_;
  FockOperator lowering_[2];
};

}  // namespace

JumpWeights jump_process_probability(const FockVector& plus_state, const FockVector& minus_state,
                                     const OutcomeSequence& outcome, double gamma_t) {
  if (!(gamma_t >= 0.0) || !std::isfinite(gamma_t)) throw ParamsInvalid("gamma_t must be non-negative");
  if (static_cast<int>(outcome.size()) > kMaxPhotons) {
    throw InvalidOutcome("record " + outcome.str() + " is longer than " + std::to_string(kMaxPhotons));
  }
  const Gram g = Recorder(outcome, gamma_t).integrate(plus_state, minus_state, 0, 0.0);
  return {g.pp, g.mm, g.pm};
}

std::map<OutcomeSequence, JumpWeights> jump_process_oracle(const FockVector& plus_state,
                                                          const FockVector& minus_state,
                                                          double gamma_t) {
  std::map<OutcomeSequence, JumpWeights> out;
  for (const auto& outcome : all_outcomes(kMaxPhotons)) {
    out.emplace(outcome, jump_process_probability(plus_state, minus_state, outcome, gamma_t));
  }
  return out;
}

std::map<OutcomeSequence, JumpWeights> jump_process_oracle(AtomLevel level, double gamma_t) {
  return jump_process_oracle(beam_splitter_transform(which_way_marker(level, Parity::plus)),
                             beam_splitter_transform(which_way_marker(level, Parity::minus)), gamma_t);
}

}  // namespace slitpath
