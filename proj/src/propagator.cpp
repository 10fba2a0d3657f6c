#include "faraday/propagator.hpp"

#include <cmath>
#include <sstream>

namespace faraday {

namespace {
constexpr Complex kI{0.0, 1.0};
}

SpectralDecomposition::SpectralDecomposition(const Matrix9& h) {
  Eigen::SelfAdjointEigenSolver<Matrix9> solver(h);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("Hermitian eigendecomposition failed");
  }
  values_ = solver.eigenvalues();
  vectors_ = solver.eigenvectors();
}

Matrix9 SpectralDecomposition::evolution_operator(double t) const {
  Matrix9 scaled = vectors_;
  for (int k = 0; k < kDim; ++k) {
    scaled.col(k) *= std::exp(kI * values_(k) * t);
  }
  return scaled * vectors_.adjoint();
}

Vector9 SpectralDecomposition::evolve(const Vector9& psi0, double t) const {
  Vector9 coeffs = vectors_.adjoint() * psi0;
  for (int k = 0; k < kDim; ++k) {
    coeffs(k) *= std::exp(kI * values_(k) * t);
  }
  return vectors_ * coeffs;
}

Matrix9 SpectralDecomposition::reconstruct() const {
  return vectors_ * values_.cast<Complex>().asDiagonal() * vectors_.adjoint();
}

Vector9 propagate(const Matrix9& h, const Vector9& psi0, double t) {
  if (t < 0.0) throw std::invalid_argument("propagation time must be >= 0");
  if (t == 0.0) return psi0;
  return SpectralDecomposition(h).evolve(psi0, t);
}

double rate_norm(const Matrix9& h) {
  return h.cwiseAbs().rowwise().sum().maxCoeff();
}

Vector9 propagate_rk4(const Matrix9& h, const Vector9& psi0, double t,
                      long steps) {
  if (t < 0.0) throw std::invalid_argument("propagation time must be >= 0");
  if (steps <= 0) throw StepCountTooSmall("step count must be positive");
  if (t == 0.0) return psi0;
  const double dt = t / static_cast<double>(steps);
  if (rate_norm(h) * dt >= 0.1) {
    std::ostringstream os;
    os << "RK4 needs ||H|| * dt < 0.1; got " << rate_norm(h) * dt << " with "
       << steps << " steps";
    throw StepCountTooSmall(os.str());
  }

  const Matrix9 gen = kI * h;
  Vector9 psi = psi0;
  for (long s = 0; s < steps; ++s) {
    const Vector9 k1 = gen * psi;
    const Vector9 k2 = gen * (psi + 0.5 * dt * k1);
    const Vector9 k3 = gen * (psi + 0.5 * dt * k2);
    const Vector9 k4 = gen * (psi + dt * k3);
    psi += (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
  }
  return psi;
}

std::pair<Basis, Basis> block_states(RabiBlock block) {
  return block == RabiBlock::B6_3
             ? std::pair{Basis::APlusBPlus, Basis::APlusUpMinus}
             : std::pair{Basis::AMinusBMinus, Basis::AMinusUpPlus};
}

std::pair<Complex, Complex> rabi_oracle(RabiBlock block,
                                        const GateConfig& config,
                                        Complex upper, Complex lower,
                                        double t) {
  config.validate();
  const double g = config.lambda1;
  // Only a-|+1> (c4) can sit off resonance.
  const double detuning =
      (block == RabiBlock::B9_4 && config.kind == CaseKind::CaseII)
          ? config.delta1
          : 0.0;

  // H = [[0, g], [g, d]] = d/2 + W (n.sigma), W = sqrt(g^2 + d^2/4).
  const double w = std::sqrt(g * g + 0.25 * detuning * detuning);
  const double c = std::cos(w * t);
  const double s = std::sin(w * t);
  const Complex frame = std::exp(kI * 0.5 * detuning * t);
  const double dz = 0.5 * detuning / w;
  const double dx = g / w;

  const Complex up = frame * ((c - kI * dz * s) * upper + kI * dx * s * lower);
  const Complex lo = frame * (kI * dx * s * upper + (c + kI * dz * s) * lower);
  return {up, lo};
}

}  // namespace faraday
