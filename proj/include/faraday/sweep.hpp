#pragma once

// Canned experiments: single-input phase/retention trade-off (fig2), the
// CaseI population dynamics (fig3), retention and quality over superposition
// inputs (fig4) and the phase shifts over superposition inputs (fig5).

#include "faraday/model.hpp"
#include "faraday/parallel.hpp"

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace faraday {

inline constexpr const char* kVersion = "faraday-gate 1.0.0";

// Absent values are std::monostate.
using Cell = std::variant<std::monostate, double, std::string, bool>;
using Row = std::vector<Cell>;

struct SweepMetadata {
  std::string experiment;
  std::optional<GateConfig> config;  // template for fig2
  std::string grid;
  std::string basis_order;
  std::string version = kVersion;
};

struct SweepResult {
  SweepMetadata metadata;
  std::vector<std::string> columns;
  std::vector<Row> rows;
};

// n >= 2 points with exact endpoints; n == 1 gives {a}.
std::vector<double> linspace(double a, double b, std::size_t n);

std::vector<double> default_detunings(CaseKind kind);
std::vector<double> default_lambda2_grid(CaseKind kind);
std::vector<double> default_alpha_grid();  // 41 points over [0, 1]
inline constexpr std::size_t kDefaultSamples = 400;

// Scenario shared by fig3..fig5: lambda1 = 1, lambda2 = 2.5, delta2 = 30,
// delta1 = 15 in CaseII, t = pi.
GateConfig reference_config(CaseKind kind);

// Input a-b+|0>, lambda1 = 1, t = pi; CaseII uses delta1 = delta2 / 2.
// Columns: delta2, delta1, lambda2, eta2_mp, dphi_plus_deg, p0.
SweepResult fig2_sweep(CaseKind kind, const std::vector<double>& detunings,
                       const std::vector<double>& lambda2_grid,
                       Execution exec = Execution::Parallel);

// CaseI populations of states 8, 5, 2, 7, 1 over t in [0, pi].
SweepResult fig3_timeseries(std::size_t n_samples,
                            Execution exec = Execution::Parallel);

// Rows per beta state: beta, alpha_minus_sq, retention, quality, eta2_mp,
// eta2_pm, p0.
SweepResult fig4_sweep(CaseKind kind, const std::vector<double>& alpha_grid,
                       Execution exec = Execution::Parallel);

// Rows: beta, phase_variant, alpha_minus_sq, dphi_plus_deg, dphi_minus_deg.
// The variant uses beta1 with arg(alpha+) = pi/4.
SweepResult fig5_sweep(const std::vector<double>& alpha_grid,
                       bool with_phase_variant,
                       CaseKind kind = CaseKind::CaseII,
                       Execution exec = Execution::Parallel);

// Column lookup helpers for consumers of SweepResult.
std::size_t column_index(const SweepResult& r, const std::string& name);
std::optional<double> number_at(const SweepResult& r, std::size_t row,
                                const std::string& column);

}  // namespace faraday
