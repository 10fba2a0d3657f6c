#include "faraday/analysis.hpp"

#include "faraday/propagator.hpp"

#include <cmath>
#include <numbers>

namespace faraday {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTieTolerance = 1e-12;

std::optional<double> halved(std::optional<double> a, std::optional<double> b,
                             double sign, double input_term) {
  if (!a || !b) return std::nullopt;
  return wrap_phase(*a + sign * *b - input_term) / 2.0;
}

const Complex& alpha(const QubitInput& q, Branch b) {
  return (b == Branch::PP || b == Branch::PM) ? q.alpha_plus : q.alpha_minus;
}
const Complex& beta(const QubitInput& q, Branch b) {
  return (b == Branch::PP || b == Branch::MP) ? q.beta_plus : q.beta_minus;
}

}  // namespace

Basis basis_of(Branch b) {
  switch (b) {
    case Branch::PP: return Basis::APlusBPlus;
    case Branch::PM: return Basis::APlusBMinus;
    case Branch::MP: return Basis::AMinusBPlus;
    case Branch::MM: return Basis::AMinusBMinus;
  }
  return Basis::APlusBPlus;
}

double wrap_phase(double x) {
  double r = std::remainder(x, 2.0 * kPi);
  if (r <= -kPi) r += 2.0 * kPi;
  return r;
}

double to_degrees(double rad) { return rad * 180.0 / kPi; }
double to_radians(double deg) { return deg * kPi / 180.0; }

GroundProjection project_ground(const Vector9& psi_out) {
  GroundProjection g;
  for (Branch b : kBranches) {
    g.c[index(b)] = amp(psi_out, basis_of(b));
    g.p0 += std::norm(g.c[index(b)]);
  }
  return g;
}

BranchValues amplitude_ratios(const BranchAmplitudes& c, const QubitInput& q) {
  BranchValues eta;
  for (Branch b : kBranches) {
    const double product = std::abs(alpha(q, b) * beta(q, b));
    if (product > kGuard) eta[index(b)] = std::abs(c[index(b)]) / product;
  }
  return eta;
}

BranchValues branch_phases(const BranchAmplitudes& c) {
  BranchValues phi;
  for (Branch b : kBranches) {
    if (std::abs(c[index(b)]) > kGuard) phi[index(b)] = std::arg(c[index(b)]);
  }
  return phi;
}

InputPhases input_phases(const QubitInput& q) {
  return {std::arg(q.alpha_plus), std::arg(q.alpha_minus),
          std::arg(q.beta_plus), std::arg(q.beta_minus)};
}

PhaseObservables phase_observables(const BranchValues& phi,
                                   const InputPhases& in) {
  const auto& pp = phi[index(Branch::PP)];
  const auto& pm = phi[index(Branch::PM)];
  const auto& mp = phi[index(Branch::MP)];
  const auto& mm = phi[index(Branch::MM)];
  const double a_sum = in.a_plus + in.a_minus;
  const double a_diff = in.a_plus - in.a_minus;

  PhaseObservables out;
  // phi_bar_j = (phi_+j + phi_-j - phi+^a - phi-^a)/2 - phi_j^b
  if (auto h = halved(pp, mp, +1.0, a_sum)) {
    out.phi_bar_plus = wrap_phase(*h - in.b_plus);
  }
  if (auto h = halved(pm, mm, +1.0, a_sum)) {
    out.phi_bar_minus = wrap_phase(*h - in.b_minus);
  }
  // dphi_j = (phi_+j - phi_-j - phi+^a + phi-^a)/2
  out.dphi_plus = halved(pp, mp, -1.0, a_diff);
  out.dphi_minus = halved(pm, mm, -1.0, a_diff);
  return out;
}

std::optional<double> retention(const BranchAmplitudes& c,
                                const QubitInput& q) {
  const double bp = std::abs(q.beta_plus);
  const double bm = std::abs(q.beta_minus);
  if (bp <= kGuard || bm <= kGuard) return std::nullopt;
  const double den = std::norm(c[index(Branch::PM)]) +
                     std::norm(c[index(Branch::MM)]);
  if (den <= kGuard * kGuard) return std::nullopt;
  const double num = std::norm(c[index(Branch::PP)]) +
                     std::norm(c[index(Branch::MP)]);
  return (num / den) * (bm * bm) / (bp * bp);
}

std::optional<double> quality_factor(const BranchValues& eta,
                                     const QubitInput& q) {
  auto sq = [](const std::optional<double>& e) -> std::optional<double> {
    if (!e) return std::nullopt;
    return *e * *e;
  };
  const auto upper = sq(eta[index(Branch::MP)]);
  const auto lower = sq(eta[index(Branch::PM)]);
  const double am2 = std::norm(q.alpha_minus);
  if (std::abs(am2 - 0.5) <= kTieTolerance) {
    if (upper && lower) return std::min(*upper, *lower);
    return upper ? upper : lower;
  }
  return am2 > 0.5 ? upper : lower;
}

Matrix4 ideal_unitary(CaseKind kind, double phi_bar, double dphi) {
  constexpr Complex kI{0.0, 1.0};
  Matrix4 u = Matrix4::Zero();
  if (kind == CaseKind::CaseI) {
    const Complex g = std::exp(kI * phi_bar);
    u(0, 0) = g * std::exp(kI * dphi);
    u(1, 1) = g * std::exp(-kI * dphi);
    u(2, 2) = g * std::exp(-kI * dphi);
    u(3, 3) = g * std::exp(kI * dphi);
  } else {
    u(0, 0) = 1.0;
    u(1, 1) = 1.0;
    u(2, 2) = std::exp(kI * (phi_bar - dphi));
    u(3, 3) = std::exp(kI * (phi_bar + dphi));
  }
  return u;
}

GateAnalysis analyze(const Vector9& psi_out, const QubitInput& q) {
  GateAnalysis a;
  const GroundProjection g = project_ground(psi_out);
  a.p0 = g.p0;
  a.c = g.c;
  a.eta = amplitude_ratios(g.c, q);
  a.phi = branch_phases(g.c);
  a.phases = phase_observables(a.phi, input_phases(q));
  a.retention = retention(g.c, q);
  a.quality = quality_factor(a.eta, q);
  return a;
}

GateAnalysis run_gate(const GateConfig& config, const QubitInput& q) {
  const Vector9 out =
      propagate(build_hamiltonian(config), embed_input(q), config.time);
  return analyze(out, q);
}

}  // namespace faraday
