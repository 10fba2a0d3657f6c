#pragma once

#include "faraday/gate.hpp"
#include "faraday/io.hpp"
#include "faraday/model.hpp"

#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace faraday::cli {

enum class Command { Run, Fig2, Fig3, Fig4, Fig5, Cnot, Accept, Help };

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kIo = 2,
  kAcceptanceFail = 3,
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunSpec {
  Command command = Command::Run;
  GateConfig config;  // defaults: CaseI, lambda1=1, lambda2=1, delta2=5, t=pi
  QubitInput input = QubitInput::basis(Basis::AMinusBPlus);
  Format format = Format::Csv;
  std::optional<std::string> output;  // stdout when empty

  std::size_t samples = kDefaultSamples;
  std::size_t alpha_points = 41;
  bool phase_variant = true;
  std::vector<double> detunings;      // fig2; empty = defaults
  std::vector<double> lambda2_grid;   // fig2; empty = defaults
  CnotParams cnot;
  std::string help_text;
};

// Parses "magnitude@phase_degrees" (or a bare magnitude).
Complex parse_amplitude(const std::string& text);

// Throws UsageError naming the offending flag.
RunSpec parse_args(int argc, const char* const* argv);
RunSpec parse_args(const std::vector<std::string>& args);

// Writes results to spec.output (or out) and returns the exit status.
int execute(const RunSpec& spec, std::ostream& out, std::ostream& err);

}  // namespace faraday::cli
