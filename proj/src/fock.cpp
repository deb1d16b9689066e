#include "slitpath/fock.hpp"

#include <cmath>

#include "slitpath/error.hpp"

namespace slitpath {

namespace {

double factorial(int n) {
  double f = 1.0;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

double binomial(int n, int k) { return factorial(n) / (factorial(k) * factorial(n - k)); }

}  // namespace

std::string to_string(const FockPair& fock) {
  return "|" + std::to_string(fock.first) + "," + std::to_string(fock.second) + ">";
}

int fock_index(const FockPair& fock) {
  if (fock.first < 0 || fock.second < 0) throw ParamsInvalid("negative photon number");
  const int n = fock.total();
  if (n > kMaxPhotons) {
    throw PhotonOverflow("state " + to_string(fock) + " exceeds " + std::to_string(kMaxPhotons) +
                         " photons");
  }
  return n * (n + 1) / 2 + fock.second;
}

FockPair fock_from_index(int index) {
  int n = 0;
  while ((n + 1) * (n + 2) / 2 <= index) ++n;
  const int second = index - n * (n + 1) / 2;
  return {n - second, second};
}

FockVector fock_state(const FockPair& fock) {
  FockVector v = FockVector::Zero();
  v(fock_index(fock)) = 1.0;
  return v;
}

FockVector beam_splitter_transform(const FockPair& fock) {
  const int na = fock.first;
  const int nb = fock.second;
  fock_index(fock);  // range check

  // (a†_A)^na (a†_B)^nb / √(na! nb!) with a†_A = (a†_+ + a†_−)/√2 and
  // a†_B = (a†_+ − a†_−)/√2, expanded binomially; a†_+^p a†_−^q|0⟩ = √(p! q!)|p,q⟩.
  const double scale = std::pow(2.0, -0.5 * (na + nb)) / std::sqrt(factorial(na) * factorial(nb));
  FockVector out = FockVector::Zero();
  for (int i = 0; i <= na; ++i) {
    for (int j = 0; j <= nb; ++j) {
      const int p = i + j;
      const int q = na + nb - p;
      const double sign = (nb - j) % 2 == 0 ? 1.0 : -1.0;
      out(fock_index({p, q})) +=
          scale * binomial(na, i) * binomial(nb, j) * sign * std::sqrt(factorial(p) * factorial(q));
    }
  }
  return out;
}

FockVector beam_splitter_transform(const FockVector& state) { return beam_splitter_matrix() * state; }

FockOperator beam_splitter_matrix() {
  FockOperator u;
  for (int j = 0; j < kFockDimension; ++j) u.col(j) = beam_splitter_transform(fock_from_index(j));
  return u;
}

FockOperator lowering_operator(int mode) {
  FockOperator a = FockOperator::Zero();
  for (int j = 0; j < kFockDimension; ++j) {
    const FockPair in = fock_from_index(j);
    const int n = mode == 0 ? in.first : in.second;
    if (n == 0) continue;
    const FockPair out = mode == 0 ? FockPair{in.first - 1, in.second} : FockPair{in.first, in.second - 1};
    a(fock_index(out), j) = std::sqrt(static_cast<double>(n));
  }
  return a;
}

FockOperator number_operator() {
  FockOperator n = FockOperator::Zero();
  for (int j = 0; j < kFockDimension; ++j) n(j, j) = fock_from_index(j).total();
  return n;
}

}  // namespace slitpath
