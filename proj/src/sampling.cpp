#include "faraday/sampling.hpp"

#include <cmath>
#include <numbers>

namespace faraday {

namespace {

double uniform(Rng& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

std::pair<Complex, Complex> random_qubit(Rng& rng) {
  const double theta = uniform(rng, 0.0, std::numbers::pi / 2.0);
  const double p1 = uniform(rng, -std::numbers::pi, std::numbers::pi);
  const double p2 = uniform(rng, -std::numbers::pi, std::numbers::pi);
  return {std::polar(std::cos(theta), p1), std::polar(std::sin(theta), p2)};
}

}  // namespace

GateConfig random_config(Rng& rng) {
  GateConfig c;
  c.kind = uniform(rng, 0.0, 1.0) < 0.5 ? CaseKind::CaseI : CaseKind::CaseII;
  c.lambda1 = uniform(rng, 0.5, 2.0);
  c.lambda2 = uniform(rng, 0.0, 7.0);
  c.delta1 = c.kind == CaseKind::CaseII ? uniform(rng, 5.0, 70.0) : 0.0;
  c.delta2 = uniform(rng, -70.0, 70.0);
  c.time = uniform(rng, 0.0, 2.0 * std::numbers::pi);
  return c;
}

QubitInput random_input(Rng& rng) {
  const auto [ap, am] = random_qubit(rng);
  const auto [bp, bm] = random_qubit(rng);
  return {ap, am, bp, bm};
}

QubitInput random_real_input(Rng& rng) {
  const double ta = uniform(rng, -std::numbers::pi, std::numbers::pi);
  const double tb = uniform(rng, -std::numbers::pi, std::numbers::pi);
  return {std::cos(ta), std::sin(ta), std::cos(tb), std::sin(tb)};
}

QubitInput mirrored(const QubitInput& q) {
  return {q.alpha_minus, q.alpha_plus, q.beta_minus, q.beta_plus};
}

}  // namespace faraday
