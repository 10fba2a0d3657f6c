#include "faraday/sweep.hpp"

#include "faraday/analysis.hpp"
#include "faraday/gate.hpp"
#include "faraday/propagator.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace faraday {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr const char* kPhotonOrderNote =
    "two-photon order {a-b-, a+b-, a-b+, a+b+}; basis states numbered 1..9 "
    "as {|2>, a+|+1>, a+|-1>, a-|+1>, a-|-1>, a+b+|0>, a+b-|0>, a-b+|0>, "
    "a-b-|0>}";

Cell opt(const std::optional<double>& v) {
  if (v) return *v;
  return std::monostate{};
}

Cell opt_sq(const std::optional<double>& v) {
  if (v) return *v * *v;
  return std::monostate{};
}

Cell opt_deg(const std::optional<double>& v) {
  if (v) return to_degrees(*v);
  return std::monostate{};
}

std::string describe(const std::vector<double>& g) {
  std::ostringstream os;
  os.precision(17);
  if (g.empty()) return "empty";
  os << g.size() << " points [" << g.front() << ", " << g.back() << "]";
  return os.str();
}

void check_alpha_grid(const std::vector<double>& grid) {
  for (double a : grid) {
    if (!(a >= 0.0 && a <= 1.0)) {
      throw InvalidInput("alpha-^2 grid values must lie in [0, 1]");
    }
  }
}

}  // namespace

std::vector<double> linspace(double a, double b, std::size_t n) {
  std::vector<double> out(n);
  if (n == 1) out[0] = a;
  if (n < 2) return out;
  for (std::size_t i = 0; i < n; ++i) {
    out[i] = a + (b - a) * static_cast<double>(i) / static_cast<double>(n - 1);
  }
  out.back() = b;
  return out;
}

std::vector<double> default_detunings(CaseKind kind) {
  return kind == CaseKind::CaseI ? std::vector<double>{5, 10, 20, 30}
                                 : std::vector<double>{10, 20, 30, 40};
}

std::vector<double> default_lambda2_grid(CaseKind kind) {
  return kind == CaseKind::CaseI ? linspace(0.1, 3.0, 30)
                                 : linspace(0.25, 7.5, 30);
}

std::vector<double> default_alpha_grid() { return linspace(0.0, 1.0, 41); }

GateConfig reference_config(CaseKind kind) {
  GateConfig c;
  c.kind = kind;
  c.lambda1 = 1.0;
  c.lambda2 = 2.5;
  c.delta2 = 30.0;
  c.delta1 = kind == CaseKind::CaseII ? 15.0 : 0.0;
  c.time = kPi;
  return c;
}

SweepResult fig2_sweep(CaseKind kind, const std::vector<double>& detunings,
                       const std::vector<double>& lambda2_grid,
                       Execution exec) {
  GateConfig base;
  base.kind = kind;
  base.lambda1 = 1.0;
  base.time = kPi;

  std::vector<GateConfig> configs;
  configs.reserve(detunings.size() * lambda2_grid.size());
  for (double d2 : detunings) {
    for (double l2 : lambda2_grid) {
      GateConfig c = base;
      c.delta2 = d2;
      c.delta1 = kind == CaseKind::CaseII ? d2 / 2.0 : 0.0;
      c.lambda2 = l2;
      c.validate();
      configs.push_back(c);
    }
  }

  const int col = photon_index(Branch::MP);
  auto point = [&configs, col](std::size_t i) -> Row {
    const GateConfig& c = configs[i];
    const EffectiveGate g = effective_gate(c);
    const PhaseObservables ph = diagonal_observables(g);
    return {c.delta2,
            c.delta1,
            c.lambda2,
            std::norm(g.m(col, col)),
            opt_deg(ph.dphi_plus),
            g.m.col(col).squaredNorm()};
  };

  SweepResult r;
  r.metadata.experiment = "fig2";
  r.metadata.config = base;
  r.metadata.grid = "delta2 in " + describe(detunings) + " x lambda2 in " +
                    describe(lambda2_grid) +
                    (kind == CaseKind::CaseII ? "; delta1 = delta2/2" : "");
  r.metadata.basis_order = kPhotonOrderNote;
  r.columns = {"delta2", "delta1", "lambda2", "eta2_mp", "dphi_plus_deg", "p0"};
  r.rows = map_grid(configs.size(), point, exec);
  return r;
}

SweepResult fig3_timeseries(std::size_t n_samples, Execution exec) {
  if (n_samples == 0) throw std::invalid_argument("need at least one sample");
  const GateConfig config = reference_config(CaseKind::CaseI);
  const SpectralDecomposition spectrum(build_hamiltonian(config));
  const Vector9 psi0 = embed_input(QubitInput::basis(Basis::AMinusBPlus));
  const std::vector<double> times = linspace(0.0, config.time, n_samples);

  static constexpr std::array<Basis, 5> kTracked = {
      Basis::AMinusBPlus, Basis::AMinusUpMinus, Basis::APlusUpPlus,
      Basis::APlusBMinus, Basis::Upper};

  auto point = [&](std::size_t i) -> Row {
    const Vector9 psi = spectrum.evolve(psi0, times[i]);
    Row row{times[i]};
    for (Basis b : kTracked) row.emplace_back(std::norm(amp(psi, b)));
    return row;
  };

  SweepResult r;
  r.metadata.experiment = "fig3";
  r.metadata.config = config;
  r.metadata.grid = "t in " + describe(times) + "; input a-b+|0>";
  r.metadata.basis_order = kPhotonOrderNote;
  r.columns = {"t"};
  for (Basis b : kTracked) {
    r.columns.push_back("P" + std::to_string(number(b)) + "[" +
                        std::string(label(b)) + "]");
  }
  r.rows = map_grid(times.size(), point, exec);
  return r;
}

SweepResult fig4_sweep(CaseKind kind, const std::vector<double>& alpha_grid,
                       Execution exec) {
  check_alpha_grid(alpha_grid);
  const GateConfig config = reference_config(kind);
  const SpectralDecomposition spectrum(build_hamiltonian(config));
  const std::array<BetaState, 2> betas = {kBeta1, kBeta2};
  const std::size_t n = alpha_grid.size();

  auto point = [&](std::size_t i) -> Row {
    const BetaState& b = betas[i / n];
    const double a2 = alpha_grid[i % n];
    const QubitInput q = QubitInput::real(a2, b.plus, b.minus);
    const GateAnalysis a = analyze(spectrum.evolve(embed_input(q), config.time), q);
    return {std::string(b.name),
            a2,
            opt(a.retention),
            opt(a.quality),
            opt_sq(a.eta[index(Branch::MP)]),
            opt_sq(a.eta[index(Branch::PM)]),
            a.p0};
  };

  SweepResult r;
  r.metadata.experiment = "fig4";
  r.metadata.config = config;
  r.metadata.grid = "beta in {beta1, beta2} x alpha-^2 in " + describe(alpha_grid);
  r.metadata.basis_order = kPhotonOrderNote;
  r.columns = {"beta",    "alpha_minus_sq", "retention", "quality",
               "eta2_mp", "eta2_pm",        "p0"};
  r.rows = map_grid(betas.size() * n, point, exec);
  return r;
}

SweepResult fig5_sweep(const std::vector<double>& alpha_grid,
                       bool with_phase_variant, CaseKind kind,
                       Execution exec) {
  check_alpha_grid(alpha_grid);
  const GateConfig config = reference_config(kind);
  const SpectralDecomposition spectrum(build_hamiltonian(config));

  struct Curve {
    BetaState beta;
    bool variant;
  };
  std::vector<Curve> curves = {{kBeta1, false}, {kBeta2, false}};
  if (with_phase_variant) curves.push_back({kBeta1, true});
  const std::size_t n = alpha_grid.size();

  auto point = [&](std::size_t i) -> Row {
    const Curve& cv = curves[i / n];
    const double a2 = alpha_grid[i % n];
    QubitInput q = QubitInput::real(a2, cv.beta.plus, cv.beta.minus);
    if (cv.variant) q.alpha_plus *= std::polar(1.0, kPi / 4.0);
    const GateAnalysis a = analyze(spectrum.evolve(embed_input(q), config.time), q);
    return {std::string(cv.beta.name), cv.variant, a2,
            opt_deg(a.phases.dphi_plus), opt_deg(a.phases.dphi_minus)};
  };

  SweepResult r;
  r.metadata.experiment = "fig5";
  r.metadata.config = config;
  r.metadata.grid = std::string("curves {beta1, beta2") +
                    (with_phase_variant ? ", beta1 with arg(alpha+) = pi/4" : "") +
                    "} x alpha-^2 in " + describe(alpha_grid);
  r.metadata.basis_order = kPhotonOrderNote;
  r.columns = {"beta", "phase_variant", "alpha_minus_sq", "dphi_plus_deg",
               "dphi_minus_deg"};
  r.rows = map_grid(curves.size() * n, point, exec);
  return r;
}

std::size_t column_index(const SweepResult& r, const std::string& name) {
  for (std::size_t i = 0; i < r.columns.size(); ++i) {
    if (r.columns[i] == name) return i;
  }
  throw std::out_of_range("no column named " + name);
}

std::optional<double> number_at(const SweepResult& r, std::size_t row,
                                const std::string& column) {
  const Cell& c = r.rows.at(row).at(column_index(r, column));
  if (const double* d = std::get_if<double>(&c)) return *d;
  return std::nullopt;
}

}  // namespace faraday
