#include "faraday/propagator.hpp"
#include "faraday/sampling.hpp"

#include "reference_values.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace faraday;

namespace {

constexpr double kPi = std::numbers::pi;

double max_abs(const Vector9& v) { return v.cwiseAbs().maxCoeff(); }

GateConfig case1(double l2, double d2) {
  GateConfig c;
  c.lambda2 = l2;
  c.delta2 = d2;
  return c;
}

Vector9 unit(Basis b) {
  Vector9 v = Vector9::Zero();
  amp(v, b) = 1.0;
  return v;
}

}  // namespace

TEST_CASE("zero time is the identity") {
  Rng rng(7);
  for (int i = 0; i < 5; ++i) {
    const GateConfig c = random_config(rng);
    const Vector9 psi = embed_input(random_input(rng));
    CHECK(max_abs(propagate(build_hamiltonian(c), psi, 0.0) - psi) < 1e-14);
  }
}

TEST_CASE("closed pair returns with a sign flip after t = pi") {
  const Vector9 out =
      propagate(build_hamiltonian(GateConfig{}), unit(Basis::APlusBPlus), kPi);
  CHECK(std::abs(amp(out, Basis::APlusBPlus) - Complex{-1.0, 0.0}) < 1e-12);
  CHECK(out.squaredNorm() == doctest::Approx(1.0).epsilon(1e-13));
}

TEST_CASE("resonant pair follows cos and i sin") {
  // Quarter period of a lambda1 = 1 pair: the excitation is fully transferred
  // with a +i factor.
  const Vector9 out = propagate(build_hamiltonian(GateConfig{}),
                                unit(Basis::APlusBPlus), kPi / 2.0);
  CHECK(std::abs(amp(out, Basis::APlusBPlus)) < 1e-12);
  CHECK(std::abs(amp(out, Basis::APlusUpMinus) - Complex{0.0, 1.0}) < 1e-12);
}

TEST_CASE("rabi oracle closed forms") {
  const GateConfig c;
  auto [u, l] = rabi_oracle(RabiBlock::B6_3, c, 1.0, 0.0, kPi / 2.0);
  CHECK(std::abs(u) < 1e-14);
  CHECK(std::abs(l - Complex{0.0, 1.0}) < 1e-14);
  std::tie(u, l) = rabi_oracle(RabiBlock::B6_3, c, 1.0, 0.0, kPi);
  CHECK(std::abs(u - Complex{-1.0, 0.0}) < 1e-14);
  CHECK(std::abs(l) < 1e-14);

  const auto [b1, b2] = block_states(RabiBlock::B9_4);
  CHECK(b1 == Basis::AMinusBMinus);
  CHECK(b2 == Basis::AMinusUpPlus);
}

TEST_CASE("detuned pair stays mostly in the photon state") {
  // delta1 = 15, lambda1 = 1: the excursion is bounded by 4 g^2 / (4 g^2 + d^2).
  GateConfig c;
  c.kind = CaseKind::CaseII;
  c.delta1 = 15.0;
  c.delta2 = 30.0;
  c.lambda2 = 2.5;
  const double bound = 1.0 - 4.0 / (4.0 + 225.0);
  const Matrix9 h = build_hamiltonian(c);
  for (double t : {0.3, 1.1, kPi, 2.4}) {
    const Vector9 out = propagate(h, unit(Basis::AMinusBMinus), t);
    const auto [u, l] =
        rabi_oracle(RabiBlock::B9_4, c, 1.0, 0.0, t);
    CHECK(std::abs(amp(out, Basis::AMinusBMinus) - u) < 1e-12);
    CHECK(std::abs(amp(out, Basis::AMinusUpPlus) - l) < 1e-12);
    CHECK(std::norm(u) >= bound - 1e-12);
  }
}

TEST_CASE("case I reference point") {
  const GateConfig c = case1(2.5, 30.0);
  const Vector9 out =
      propagate(build_hamiltonian(c), unit(Basis::AMinusBPlus), kPi);
  const Basis order[5] = {Basis::AMinusBPlus, Basis::AMinusUpMinus,
                          Basis::APlusUpPlus, Basis::APlusBMinus,
                          Basis::Upper};
  for (int i = 0; i < 5; ++i) {
    CHECK(std::norm(amp(out, order[i])) ==
          doctest::Approx(reference::kFig3End[i]).epsilon(1e-9));
  }
}

TEST_CASE("spectral propagation agrees with RK4") {
  Rng rng(11);
  for (int i = 0; i < 4; ++i) {
    const GateConfig c = random_config(rng);
    const Matrix9 h = build_hamiltonian(c);
    const Vector9 psi = embed_input(random_input(rng));
    const double scale = rate_norm(h) * c.time;
    const long steps = std::max(100000L, static_cast<long>(scale / 2e-3) + 1);
    CHECK(max_abs(propagate_rk4(h, psi, c.time, steps) -
                  propagate(h, psi, c.time)) < 1e-8);
  }
}

TEST_CASE("RK4 refuses coarse steps") {
  const Matrix9 h = build_hamiltonian(case1(2.5, 30.0));
  const Vector9 psi = unit(Basis::AMinusBPlus);
  CHECK_THROWS_AS(propagate_rk4(h, psi, kPi, 100), StepCountTooSmall);
  CHECK_THROWS_AS(propagate_rk4(h, psi, kPi, 0), StepCountTooSmall);
}

TEST_CASE("unitarity, semigroup and energy conservation") {
  Rng rng(3);
  for (int i = 0; i < 10; ++i) {
    const GateConfig c = random_config(rng);
    const Matrix9 h = build_hamiltonian(c);
    const SpectralDecomposition s(h);
    const Matrix9 u = s.evolution_operator(c.time);
    CHECK((u.adjoint() * u - Matrix9::Identity()).cwiseAbs().maxCoeff() <
          1e-12);
    CHECK((s.reconstruct() - h).cwiseAbs().maxCoeff() < 1e-11);

    const double t1 = 0.37 * c.time;
    const double t2 = c.time - t1;
    CHECK((s.evolution_operator(t1) * s.evolution_operator(t2) - u)
              .cwiseAbs()
              .maxCoeff() < 1e-11);

    const Vector9 psi = embed_input(random_input(rng));
    const Vector9 out = s.evolve(psi, c.time);
    const double e0 = (psi.adjoint() * h * psi)(0, 0).real();
    const double e1 = (out.adjoint() * h * out)(0, 0).real();
    CHECK(std::abs(e1 - e0) < 1e-10);
    CHECK(std::abs(out.squaredNorm() - 1.0) < 1e-12);
  }
}

TEST_CASE("rate norm") {
  GateConfig c;
  c.kind = CaseKind::CaseII;
  c.delta1 = 3.0;
  c.delta2 = -7.0;
  c.lambda2 = 2.0;
  // row |2>: |delta2| + 2 lambda2
  CHECK(rate_norm(build_hamiltonian(c)) == doctest::Approx(11.0));
}
