#pragma once

// Gate-quality observables extracted from a propagated state after the atom
// has been found back in |0>.

#include "faraday/model.hpp"

#include <array>
#include <optional>

namespace faraday {

// Below this magnitude an amplitude (or an input product alpha_i beta_j) is
// treated as zero: ratios, phases and the retention are left undefined.
inline constexpr double kGuard = 1e-6;

// Index into the four ground-state amplitudes C_ij, i = target, j = control.
enum class Branch : int { PP = 0, PM = 1, MP = 2, MM = 3 };
inline constexpr std::array<Branch, 4> kBranches = {Branch::PP, Branch::PM,
                                                    Branch::MP, Branch::MM};
constexpr int index(Branch b) { return static_cast<int>(b); }
Basis basis_of(Branch b);

using BranchAmplitudes = std::array<Complex, 4>;
using BranchValues = std::array<std::optional<double>, 4>;

struct GroundProjection {
  double p0 = 0.0;
  BranchAmplitudes c{};  // C++, C+-, C-+, C-- = c6, c7, c8, c9
};

struct InputPhases {
  double a_plus = 0.0;
  double a_minus = 0.0;
  double b_plus = 0.0;
  double b_minus = 0.0;
};

struct PhaseObservables {
  std::optional<double> phi_bar_plus;
  std::optional<double> phi_bar_minus;
  std::optional<double> dphi_plus;
  std::optional<double> dphi_minus;
};

struct GateAnalysis {
  double p0 = 0.0;
  BranchAmplitudes c{};
  BranchValues eta{};
  BranchValues phi{};
  PhaseObservables phases;
  std::optional<double> retention;
  std::optional<double> quality;
};

// Wraps into (-pi, pi].
double wrap_phase(double x);
double to_degrees(double rad);
double to_radians(double deg);

GroundProjection project_ground(const Vector9& psi_out);

// eta_ij = |C_ij| / |alpha_i beta_j|.
BranchValues amplitude_ratios(const BranchAmplitudes& c, const QubitInput& q);

// phi_ij = arg C_ij, undefined where |C_ij| <= kGuard.
BranchValues branch_phases(const BranchAmplitudes& c);

InputPhases input_phases(const QubitInput& q);

// Common and differential phase shifts of the target qubit, one pair per
// control polarization. Each numerator is wrapped before halving, so the
// differential shifts lie in (-pi/2, pi/2]. An observable is absent when
// either phase it needs is.
PhaseObservables phase_observables(const BranchValues& phi,
                                   const InputPhases& in);

// Ratio of the control-qubit intensities after/before the gate.
std::optional<double> retention(const BranchAmplitudes& c,
                                const QubitInput& q);

// eta-+^2 for |alpha-|^2 > 1/2, eta+-^2 below, the smaller of the two at 1/2.
std::optional<double> quality_factor(const BranchValues& eta,
                                     const QubitInput& q);

// Ideal diagonal maps over {a-b-, a+b-, a-b+, a+b+}:
//   CaseI:  e^{i phi_bar} diag(e^{i d}, e^{-i d}, e^{-i d}, e^{i d})
//   CaseII: diag(1, 1, e^{i(phi_bar - d)}, e^{i(phi_bar + d)})
// with phi_bar, d the b+ branch observables.
Matrix4 ideal_unitary(CaseKind kind, double phi_bar, double dphi);

GateAnalysis analyze(const Vector9& psi_out, const QubitInput& q);

// Builds the Hamiltonian, propagates the embedded input for config.time and
// analyzes the result.
GateAnalysis run_gate(const GateConfig& config, const QubitInput& q);

}  // namespace faraday
