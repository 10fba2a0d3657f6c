#include "faraday/gate.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <vector>

namespace faraday {

namespace {

constexpr Complex kI{0.0, 1.0};

struct Entry {
  Complex value;
  Complex target;
};

double worst(const std::vector<Entry>& es, double theta) {
  const Complex rot = std::exp(kI * theta);
  double w = 0.0;
  for (const auto& e : es) w = std::max(w, std::abs(e.value - rot * e.target));
  return w;
}

// min over theta of max_k |m_k - e^{i theta} t_k|: coarse scan, then a
// golden-section refinement around the best sample.
double minimax_phase_gap(const std::vector<Entry>& es) {
  constexpr int kSamples = 720;
  constexpr double kTwoPi = 2.0 * std::numbers::pi;
  const double step = kTwoPi / kSamples;

  double best_theta = 0.0;
  double best = worst(es, 0.0);
  for (int k = 1; k < kSamples; ++k) {
    const double th = k * step;
    const double w = worst(es, th);
    if (w < best) {
      best = w;
      best_theta = th;
    }
  }

  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double lo = best_theta - step;
  double hi = best_theta + step;
  double x1 = hi - inv_phi * (hi - lo);
  double x2 = lo + inv_phi * (hi - lo);
  double f1 = worst(es, x1);
  double f2 = worst(es, x2);
  for (int it = 0; it < 200 && hi - lo > 1e-15; ++it) {
    if (f1 < f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - inv_phi * (hi - lo);
      f1 = worst(es, x1);
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + inv_phi * (hi - lo);
      f2 = worst(es, x2);
    }
  }
  return std::min({best, f1, f2});
}

}  // namespace

EffectiveGate EffectiveGate::from_matrix(const Matrix4& m) {
  EffectiveGate g;
  g.m = m;
  double deficit = 0.0;
  for (int k = 0; k < 4; ++k) {
    deficit = std::max(deficit, 1.0 - m.col(k).squaredNorm());
  }
  g.leakage = deficit;
  return g;
}

int photon_index(Branch b) {
  switch (b) {
    case Branch::MM: return 0;
    case Branch::PM: return 1;
    case Branch::MP: return 2;
    case Branch::PP: return 3;
  }
  return 0;
}

EffectiveGate effective_gate(const SpectralDecomposition& spectrum, double t) {
  Matrix4 m;
  for (int col = 0; col < 4; ++col) {
    Vector9 in = Vector9::Zero();
    amp(in, kPhotonOrder[col]) = 1.0;
    const Vector9 out = spectrum.evolve(in, t);
    for (int row = 0; row < 4; ++row) m(row, col) = amp(out, kPhotonOrder[row]);
  }
  return EffectiveGate::from_matrix(m);
}

EffectiveGate effective_gate(const GateConfig& config) {
  if (config.time == 0.0) {
    config.validate();
    return EffectiveGate::from_matrix(Matrix4::Identity());
  }
  return effective_gate(SpectralDecomposition(build_hamiltonian(config)),
                        config.time);
}

PhaseObservables diagonal_observables(const EffectiveGate& g) {
  BranchAmplitudes diag{};
  for (Branch b : kBranches) {
    const int k = photon_index(b);
    diag[index(b)] = g.m(k, k);
  }
  return phase_observables(branch_phases(diag), InputPhases{});
}

double linearity_check(const GateConfig& config, const QubitInput& q) {
  const Matrix9 h = build_hamiltonian(config);
  const SpectralDecomposition spectrum(h);
  const EffectiveGate g = effective_gate(spectrum, config.time);

  const Vector9 psi0 = embed_input(q);
  Vector4 in;
  for (int k = 0; k < 4; ++k) in(k) = amp(psi0, kPhotonOrder[k]);
  const Vector4 via_gate = g.m * in;

  const Vector9 direct = spectrum.evolve(psi0, config.time);
  double gap = 0.0;
  for (int k = 0; k < 4; ++k) {
    gap = std::max(gap, std::abs(via_gate(k) - amp(direct, kPhotonOrder[k])));
  }
  return gap;
}

EffectiveGate compose(const EffectiveGate& g, int n) {
  if (n < 1) throw std::invalid_argument("compose needs n >= 1");
  Matrix4 acc = g.m;
  for (int k = 1; k < n; ++k) acc = g.m * acc;
  return EffectiveGate::from_matrix(acc);
}

Matrix4 target_rotation() {
  const double r = 1.0 / std::sqrt(2.0);
  Eigen::Matrix<Complex, 2, 2> t;
  // columns: new a-, new a+ expressed over (a-, a+)
  t << -r, r,
        r, r;
  Matrix4 full = Matrix4::Zero();
  full.block<2, 2>(0, 0) = t;
  full.block<2, 2>(2, 2) = t;
  return full;
}

EffectiveGate basis_change_target(const EffectiveGate& g) {
  const Matrix4 t = target_rotation();
  return EffectiveGate::from_matrix(t.adjoint() * g.m * t);
}

double gate_distance(const Matrix4& m, const Matrix4& target,
                     PhaseMode mode) {
  auto collect = [&](int row_begin, int row_end) {
    std::vector<Entry> es;
    for (int r = row_begin; r < row_end; ++r) {
      for (int c = 0; c < 4; ++c) es.push_back({m(r, c), target(r, c)});
    }
    return es;
  };
  if (mode == PhaseMode::Global) return minimax_phase_gap(collect(0, 4));
  return std::max(minimax_phase_gap(collect(0, 2)),
                  minimax_phase_gap(collect(2, 4)));
}

Matrix4 ideal_cnot() {
  Matrix4 u = Matrix4::Zero();
  u(0, 0) = 1.0;
  u(1, 1) = 1.0;
  u(2, 3) = 1.0;
  u(3, 2) = 1.0;
  return u;
}

GateConfig CnotParams::config() const {
  GateConfig c;
  c.kind = CaseKind::CaseII;
  c.lambda1 = lambda1;
  c.lambda2 = lambda2;
  c.delta1 = delta1;
  c.delta2 = delta2;
  c.time = time;
  return c;
}

CnotResult cnot_synthesis(const CnotParams& params) {
  CnotResult r;
  r.params = params;
  r.single = effective_gate(params.config());
  r.composite = compose(r.single, params.repetitions);
  r.cnot = basis_change_target(r.composite);

  const Matrix4& s = r.single.m;
  const Matrix4& m = r.cnot.m;
  CnotScore& sc = r.score;
  sc.conditional_phase = wrap_phase(std::arg(s(3, 3)) - std::arg(s(2, 2)));
  sc.single_b_minus_phase = std::arg(s(0, 0) + s(1, 1));
  sc.upper_magnitudes = {std::abs(m(0, 0)), std::abs(m(1, 1))};
  sc.lower_magnitudes = {std::abs(m(2, 3)), std::abs(m(3, 2))};
  sc.upper_phase = std::arg(m(0, 0) + m(1, 1));
  sc.lower_phase = std::arg(m(2, 3) + m(3, 2));
  for (int row = 0; row < 4; ++row) {
    for (int col = 0; col < 4; ++col) {
      if ((row < 2) != (col < 2)) {
        sc.max_offblock = std::max(sc.max_offblock, std::abs(m(row, col)));
      }
    }
  }
  sc.max_inblock_small = std::max({std::abs(m(0, 1)), std::abs(m(1, 0)),
                                   std::abs(m(2, 2)), std::abs(m(3, 3))});
  sc.distance = gate_distance(m, ideal_cnot(), PhaseMode::PerBlock);
  sc.leakage = r.cnot.leakage;
  return r;
}

}  // namespace faraday
