#pragma once

// Time evolution of the nine-state system.
//
// Sign convention: amplitudes evolve as psi(t) = exp(+iHt) psi(0), so a
// resonant pair coupled with strength g follows
//   c1(t) = cos(gt) c1 + i sin(gt) c2.
// The conditional phases reported by the analysis layer (positive shift for
// the b+ branch, negative light-shift phase on the detuned b- branch) are
// quoted under this convention.

#include "faraday/model.hpp"

#include <stdexcept>
#include <utility>

namespace faraday {

// Hermitian eigendecomposition H = V diag(E) V^dagger. Immutable after
// construction and safe to share between threads.
class SpectralDecomposition {
 public:
  explicit SpectralDecomposition(const Matrix9& h);

  const Eigen::Matrix<double, kDim, 1>& eigenvalues() const { return values_; }
  const Matrix9& eigenvectors() const { return vectors_; }

  // exp(+iHt)
  Matrix9 evolution_operator(double t) const;
  Vector9 evolve(const Vector9& psi0, double t) const;
  Matrix9 reconstruct() const;

 private:
  Eigen::Matrix<double, kDim, 1> values_;
  Matrix9 vectors_;
};

Vector9 propagate(const Matrix9& h, const Vector9& psi0, double t);

class StepCountTooSmall : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Largest absolute row sum; bounds the spectral radius.
double rate_norm(const Matrix9& h);

// Fixed-step classical RK4 on d(psi)/dt = iH psi. The state is never
// renormalized, so norm drift measures the integration error. Requires
// rate_norm(h) * t / steps < 0.1.
Vector9 propagate_rk4(const Matrix9& h, const Vector9& psi0, double t,
                      long steps);

// The two pairs that never couple to the rest of the space: a+b+|0> with
// a+|-1>, and a-b-|0> with a-|+1>.
enum class RabiBlock { B6_3, B9_4 };

// Closed-form two-level evolution of a closed pair. `upper` is the
// two-photon amplitude (c6 or c9), `lower` the atomic-excitation one (c3 or
// c4). The 9-4 pair carries detuning delta1 on c4 in CaseII.
std::pair<Complex, Complex> rabi_oracle(RabiBlock block,
                                        const GateConfig& config,
                                        Complex upper, Complex lower,
                                        double t);

std::pair<Basis, Basis> block_states(RabiBlock block);

}  // namespace faraday
