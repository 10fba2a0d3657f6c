#pragma once

// The conditional photon map and the Controlled-NOT built from it.

#include "faraday/analysis.hpp"
#include "faraday/model.hpp"
#include "faraday/propagator.hpp"

#include <array>
#include <numbers>

namespace faraday {

// Ground-state-projected map on {a-b-, a+b-, a-b+, a+b+}. Columns are
// sub-normalized; leakage is the largest norm deficit over the columns.
struct EffectiveGate {
  Matrix4 m = Matrix4::Identity();
  double leakage = 0.0;

  static EffectiveGate from_matrix(const Matrix4& m);
};

// Position of a branch in the canonical 4x4 ordering.
int photon_index(Branch b);

EffectiveGate effective_gate(const GateConfig& config);
EffectiveGate effective_gate(const SpectralDecomposition& spectrum, double t);

// Phase observables of basis-state (single) inputs read off the diagonal,
// with real, zero-phase input amplitudes.
PhaseObservables diagonal_observables(const EffectiveGate& g);

// Max-norm gap between gate * input and a direct propagation of the
// superposition input, both restricted to the two-photon states.
double linearity_check(const GateConfig& config, const QubitInput& q);

// g^n, n >= 1.
EffectiveGate compose(const EffectiveGate& g, int n);

// Conjugation T^dagger m T with T = 1 (control) x t (target), where t maps
// a+- -> (a+ +- a-)/sqrt2.
EffectiveGate basis_change_target(const EffectiveGate& g);
Matrix4 target_rotation();

enum class PhaseMode { Global, PerBlock };

// Global: min over theta of max |m - e^{i theta} target|.
// PerBlock: one independent theta for each control block (rows {0,1} and
// {2,3}), then the max over the whole matrix.
double gate_distance(const Matrix4& m, const Matrix4& target, PhaseMode mode);

// Identity on the b- block, target flip on the b+ block.
Matrix4 ideal_cnot();

struct CnotParams {
  double lambda1 = 2.0;
  double lambda2 = 6.85;
  double delta1 = 65.0;
  double delta2 = 70.0;
  double time = std::numbers::pi;
  int repetitions = 3;

  GateConfig config() const;
};

struct CnotScore {
  // Relative phase of a+b+ against a-b+ after one application (rad).
  double conditional_phase = 0.0;
  // Common phase of the b- block after one application (rad).
  double single_b_minus_phase = 0.0;
  std::array<double, 2> upper_magnitudes{};  // |m00|, |m11|
  std::array<double, 2> lower_magnitudes{};  // |m23|, |m32|
  double upper_phase = 0.0;                  // arg(m00 + m11)
  double lower_phase = 0.0;                  // arg(m23 + m32)
  double max_offblock = 0.0;                 // eight control-flipping entries
  double max_inblock_small = 0.0;            // m01, m10, m22, m33
  double distance = 0.0;                     // per-block vs ideal CNOT
  double leakage = 0.0;
};

struct CnotResult {
  CnotParams params;
  EffectiveGate single;
  EffectiveGate composite;
  EffectiveGate cnot;
  CnotScore score;
};

CnotResult cnot_synthesis(const CnotParams& params = {});

}  // namespace faraday
