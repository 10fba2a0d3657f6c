#pragma once

// Four-level atom coupled to two polarization-encoded photons.
//
// The atom has a ground state |0>, two intermediate levels |+1>, |-1> and an
// upper level |2>. A photon b+/b- drives |0> -> |-1>/|+1> with coupling
// lambda1; a photon a+/a- drives |+1> -> |2> / |-1> -> |2> with coupling
// lambda2. With at most one photon per mode the dynamics close on nine
// states, numbered 1..9 everywhere outside this library.

#include <Eigen/Dense>

#include <array>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>
#include <string_view>

namespace faraday {

using Complex = std::complex<double>;
inline constexpr int kDim = 9;

using Matrix9 = Eigen::Matrix<Complex, kDim, kDim>;
using Vector9 = Eigen::Matrix<Complex, kDim, 1>;
using Matrix4 = Eigen::Matrix<Complex, 4, 4>;
using Vector4 = Eigen::Matrix<Complex, 4, 1>;

class InvalidConfig : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class CaseKind {
  CaseI,   // |+-1> degenerate, both lower transitions resonant
  CaseII,  // |0> -> |+1> detuned by delta1, |0> -> |-1> resonant
};

std::string_view to_string(CaseKind c);
CaseKind parse_case(std::string_view s);

// Basis states, numbered as they appear in every external artifact.
enum class Basis : int {
  Upper = 1,       // |2>, both photons absorbed
  APlusUpPlus,     // a+ |+1>
  APlusUpMinus,    // a+ |-1>
  AMinusUpPlus,    // a- |+1>
  AMinusUpMinus,   // a- |-1>
  APlusBPlus,      // a+ b+ |0>
  APlusBMinus,     // a+ b- |0>
  AMinusBPlus,     // a- b+ |0>
  AMinusBMinus,    // a- b- |0>
};

constexpr int number(Basis b) { return static_cast<int>(b); }
constexpr int slot(Basis b) { return static_cast<int>(b) - 1; }
std::string_view label(Basis b);

inline constexpr std::array<Basis, kDim> kAllBasis = {
    Basis::Upper,        Basis::APlusUpPlus,  Basis::APlusUpMinus,
    Basis::AMinusUpPlus, Basis::AMinusUpMinus, Basis::APlusBPlus,
    Basis::APlusBMinus,  Basis::AMinusBPlus,  Basis::AMinusBMinus};

// Two-photon subspace in the canonical two-qubit order used for every 4x4
// matrix: {a-b-, a+b-, a-b+, a+b+}. The control (b) is the outer factor.
inline constexpr std::array<Basis, 4> kPhotonOrder = {
    Basis::AMinusBMinus, Basis::APlusBMinus, Basis::AMinusBPlus,
    Basis::APlusBPlus};

struct GateConfig {
  CaseKind kind = CaseKind::CaseI;
  double lambda1 = 1.0;
  double lambda2 = 1.0;
  double delta1 = 0.0;  // |0> -> |+1>, zero in CaseI
  double delta2 = 5.0;  // two-photon detuning of |2>
  double time = std::numbers::pi;

  // Throws InvalidConfig naming the violated constraint.
  void validate() const;
};

// Detunings expressed through raw level and photon frequencies. Only these
// combinations enter the model:
//   delta1 = w1p - w0 - W1,  delta2 = w2 - w0 - W1 - W2.
struct LevelFrequencies {
  double w0 = 0.0;
  double w1_plus = 0.0;
  double w1_minus = 0.0;
  double w2 = 0.0;
  double photon_b = 0.0;  // Omega1
  double photon_a = 0.0;  // Omega2
};

// Builds a config from raw frequencies. CaseII requires |0> -> |-1> to be
// resonant; CaseI additionally requires w1+ == w1-.
GateConfig config_from_frequencies(CaseKind kind, const LevelFrequencies& f,
                                   double lambda1, double lambda2,
                                   double time);

struct QubitInput {
  Complex alpha_plus{0.0, 0.0};
  Complex alpha_minus{1.0, 0.0};
  Complex beta_plus{1.0, 0.0};
  Complex beta_minus{0.0, 0.0};

  static constexpr double kNormTolerance = 1e-12;

  // Throws InvalidInput when either qubit is off the unit sphere.
  void validate() const;

  // Real target amplitudes with |alpha-|^2 = alpha_minus_sq.
  static QubitInput real(double alpha_minus_sq, double beta_plus,
                         double beta_minus);
  static QubitInput basis(Basis two_photon_state);
};

// Control-qubit states used by the superposition experiments.
struct BetaState {
  std::string_view name;
  double plus;
  double minus;
};
inline const BetaState kBeta1{"beta1", std::numbers::sqrt2 / 2.0,
                              std::numbers::sqrt2 / 2.0};
inline const BetaState kBeta2{"beta2", std::numbers::sqrt3 / 2.0, 0.5};

// Rotating-frame Hamiltonian; Hermitian by construction.
Matrix9 build_hamiltonian(const GateConfig& config);

// c6..c9 = a+b+, a+b-, a-b+, a-b-; the atom starts in |0>.
Vector9 embed_input(const QubitInput& q);

inline Complex& amp(Vector9& v, Basis b) { return v(slot(b)); }
inline const Complex& amp(const Vector9& v, Basis b) { return v(slot(b)); }

}  // namespace faraday
