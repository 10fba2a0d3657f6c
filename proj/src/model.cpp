#include "faraday/model.hpp"

#include <cmath>
#include <sstream>

namespace faraday {

std::string_view to_string(CaseKind c) {
  return c == CaseKind::CaseI ? "I" : "II";
}

CaseKind parse_case(std::string_view s) {
  if (s == "I" || s == "1" || s == "CaseI") return CaseKind::CaseI;
  if (s == "II" || s == "2" || s == "CaseII") return CaseKind::CaseII;
  throw InvalidConfig("case must be I or II, got '" + std::string(s) + "'");
}

std::string_view label(Basis b) {
  switch (b) {
    case Basis::Upper: return "|2>";
    case Basis::APlusUpPlus: return "a+|+1>";
    case Basis::APlusUpMinus: return "a+|-1>";
    case Basis::AMinusUpPlus: return "a-|+1>";
    case Basis::AMinusUpMinus: return "a-|-1>";
    case Basis::APlusBPlus: return "a+b+|0>";
    case Basis::APlusBMinus: return "a+b-|0>";
    case Basis::AMinusBPlus: return "a-b+|0>";
    case Basis::AMinusBMinus: return "a-b-|0>";
  }
  return "?";
}

void GateConfig::validate() const {
  auto fail = [](const std::string& what) { throw InvalidConfig(what); };
  if (!std::isfinite(lambda1) || !std::isfinite(lambda2) ||
      !std::isfinite(delta1) || !std::isfinite(delta2) ||
      !std::isfinite(time)) {
    fail("config values must be finite");
  }
  if (!(lambda1 > 0.0)) fail("lambda1 must be > 0");
  if (lambda2 < 0.0) fail("lambda2 must be >= 0");
  if (time < 0.0) fail("time must be >= 0");
  if (kind == CaseKind::CaseI && delta1 != 0.0) {
    std::ostringstream os;
    os << "case I requires delta1 = 0 (degenerate |+-1> levels), got "
       << delta1;
    fail(os.str());
  }
}

GateConfig config_from_frequencies(CaseKind kind, const LevelFrequencies& f,
                                   double lambda1, double lambda2,
                                   double time) {
  constexpr double kResonance = 1e-12;
  const double minus_detuning = f.w1_minus - f.w0 - f.photon_b;
  if (std::abs(minus_detuning) > kResonance) {
    throw InvalidConfig("|0> -> |-1> must be resonant: w1- - w0 - Omega1 = 0");
  }
  if (kind == CaseKind::CaseI &&
      std::abs(f.w1_plus - f.w1_minus) > kResonance) {
    throw InvalidConfig("case I requires degenerate |+1> and |-1>");
  }
  GateConfig c;
  c.kind = kind;
  c.lambda1 = lambda1;
  c.lambda2 = lambda2;
  c.delta1 =
      kind == CaseKind::CaseI ? 0.0 : f.w1_plus - f.w0 - f.photon_b;
  c.delta2 = f.w2 - f.w0 - f.photon_b - f.photon_a;
  c.time = time;
  c.validate();
  return c;
}

void QubitInput::validate() const {
  const double na = std::norm(alpha_plus) + std::norm(alpha_minus);
  const double nb = std::norm(beta_plus) + std::norm(beta_minus);
  if (std::abs(na - 1.0) > kNormTolerance) {
    std::ostringstream os;
    os.precision(17);
    os << "target qubit not normalized: |a+|^2 + |a-|^2 = " << na;
    throw InvalidInput(os.str());
  }
  if (std::abs(nb - 1.0) > kNormTolerance) {
    std::ostringstream os;
    os.precision(17);
    os << "control qubit not normalized: |b+|^2 + |b-|^2 = " << nb;
    throw InvalidInput(os.str());
  }
}

QubitInput QubitInput::real(double alpha_minus_sq, double beta_plus,
                            double beta_minus) {
  if (alpha_minus_sq < 0.0 || alpha_minus_sq > 1.0) {
    throw InvalidInput("alpha-^2 must lie in [0, 1]");
  }
  QubitInput q;
  q.alpha_plus = std::sqrt(1.0 - alpha_minus_sq);
  q.alpha_minus = std::sqrt(alpha_minus_sq);
  q.beta_plus = beta_plus;
  q.beta_minus = beta_minus;
  return q;
}

QubitInput QubitInput::basis(Basis two_photon_state) {
  QubitInput q{0.0, 0.0, 0.0, 0.0};
  switch (two_photon_state) {
    case Basis::APlusBPlus: q.alpha_plus = q.beta_plus = 1.0; break;
    case Basis::APlusBMinus: q.alpha_plus = q.beta_minus = 1.0; break;
    case Basis::AMinusBPlus: q.alpha_minus = q.beta_plus = 1.0; break;
    case Basis::AMinusBMinus: q.alpha_minus = q.beta_minus = 1.0; break;
    default:
      throw InvalidInput("state " + std::to_string(number(two_photon_state)) +
                         " is not a two-photon input");
  }
  return q;
}

Matrix9 build_hamiltonian(const GateConfig& config) {
  config.validate();
  Matrix9 h = Matrix9::Zero();

  const double d_plus = config.kind == CaseKind::CaseI ? 0.0 : config.delta1;
  h(slot(Basis::Upper), slot(Basis::Upper)) = config.delta2;
  h(slot(Basis::APlusUpPlus), slot(Basis::APlusUpPlus)) = d_plus;
  h(slot(Basis::AMinusUpPlus), slot(Basis::AMinusUpPlus)) = d_plus;
  // |-1> is resonant in both cases; two-photon states sit at zero.

  auto couple = [&h](Basis i, Basis j, double g) {
    h(slot(i), slot(j)) = g;
    h(slot(j), slot(i)) = g;
  };
  // b- : |0> -> |+1>,  b+ : |0> -> |-1>
  couple(Basis::APlusBMinus, Basis::APlusUpPlus, config.lambda1);
  couple(Basis::AMinusBMinus, Basis::AMinusUpPlus, config.lambda1);
  couple(Basis::APlusBPlus, Basis::APlusUpMinus, config.lambda1);
  couple(Basis::AMinusBPlus, Basis::AMinusUpMinus, config.lambda1);
  // a+ : |+1> -> |2>,  a- : |-1> -> |2>
  couple(Basis::Upper, Basis::APlusUpPlus, config.lambda2);
  couple(Basis::Upper, Basis::AMinusUpMinus, config.lambda2);
  return h;
}

Vector9 embed_input(const QubitInput& q) {
  q.validate();
  Vector9 v = Vector9::Zero();
  amp(v, Basis::APlusBPlus) = q.alpha_plus * q.beta_plus;
  amp(v, Basis::APlusBMinus) = q.alpha_plus * q.beta_minus;
  amp(v, Basis::AMinusBPlus) = q.alpha_minus * q.beta_plus;
  amp(v, Basis::AMinusBMinus) = q.alpha_minus * q.beta_minus;
  return v;
}

}  // namespace faraday
