#include "faraday/cli.hpp"

#include "faraday/acceptance.hpp"
#include "faraday/analysis.hpp"
#include "faraday/sweep.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>

namespace faraday::cli {

namespace {

double parse_real(std::string_view s, const std::string& what) {
  double v = 0.0;
  const char* first = s.data();
  const char* last = s.data() + s.size();
  const auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last || !std::isfinite(v)) {
    throw UsageError(what + ": '" + std::string(s) + "' is not a number");
  }
  return v;
}

void add_output_flags(CLI::App* sub, RunSpec& spec, std::string& format) {
  sub->add_option("--format", format, "Output encoding")
      ->check(CLI::IsMember({"csv", "json"}));
  sub->add_option("-o,--output", spec.output, "Output file (default stdout)");
}

void check_config_flags(const GateConfig& c) {
  if (!(c.lambda1 > 0.0)) throw UsageError("--lambda1: must be > 0");
  if (c.lambda2 < 0.0) throw UsageError("--lambda2: must be >= 0");
  if (c.time < 0.0) throw UsageError("--time: must be >= 0");
  if (c.kind == CaseKind::CaseI && c.delta1 != 0.0) {
    throw UsageError("--delta1: case I requires delta1 = 0 (got " +
                     std::to_string(c.delta1) + ")");
  }
  try {
    c.validate();
  } catch (const InvalidConfig& e) {
    throw UsageError(e.what());
  }
}

CaseKind case_flag(const std::string& s) {
  try {
    return parse_case(s);
  } catch (const InvalidConfig& e) {
    throw UsageError(std::string("--case: ") + e.what());
  }
}

int emit(const RunSpec& spec, std::ostream& out, std::ostream& err,
         const std::function<void(std::ostream&)>& body) {
  if (!spec.output) {
    body(out);
    return out ? kOk : kIo;
  }
  std::ofstream file(*spec.output);
  if (!file) {
    err << "error: cannot open " << *spec.output << " for writing\n";
    return kIo;
  }
  body(file);
  file.flush();
  if (!file) {
    err << "error: failed writing " << *spec.output << '\n';
    return kIo;
  }
  return kOk;
}

}  // namespace

Complex parse_amplitude(const std::string& text) {
  const auto at = text.find('@');
  const double mag = parse_real(std::string_view(text).substr(0, at), "amplitude");
  const double deg =
      at == std::string::npos
          ? 0.0
          : parse_real(std::string_view(text).substr(at + 1), "phase");
  if (mag < 0.0) throw UsageError("amplitude magnitude must be >= 0");
  return std::polar(mag, to_radians(deg));
}

RunSpec parse_args(int argc, const char* const* argv) {
  RunSpec spec;
  std::string format = "csv";
  std::string case_text = "I";
  std::string ap = "0", am = "1", bp = "1", bm = "0";

  CLI::App app{"Conditional-Faraday two-photon gate simulator",
               "faraday_gate"};
  app.require_subcommand(1);

  auto* run = app.add_subcommand("run", "Propagate one input and analyze it");
  run->add_option("--case", case_text, "I or II");
  run->add_option("--lambda1", spec.config.lambda1, "Lower coupling");
  run->add_option("--lambda2", spec.config.lambda2, "Upper coupling");
  run->add_option("--delta1", spec.config.delta1, "Detuning of |0> -> |+1>");
  run->add_option("--delta2", spec.config.delta2, "Detuning of |2>");
  run->add_option("--time", spec.config.time, "Interaction time");
  run->add_option("--alpha-plus", ap, "a+ amplitude as mag@deg");
  run->add_option("--alpha-minus", am, "a- amplitude as mag@deg");
  run->add_option("--beta-plus", bp, "b+ amplitude as mag@deg");
  run->add_option("--beta-minus", bm, "b- amplitude as mag@deg");
  add_output_flags(run, spec, format);

  auto* fig2 = app.add_subcommand("fig2", "Phase shift vs retention, single input");
  fig2->add_option("--case", case_text, "I or II");
  fig2->add_option("--detunings", spec.detunings, "delta2 values");
  fig2->add_option("--lambda2-grid", spec.lambda2_grid, "lambda2 values");
  add_output_flags(fig2, spec, format);

  auto* fig3 = app.add_subcommand("fig3", "Case I populations over time");
  fig3->add_option("--samples", spec.samples, "Number of time samples")
      ->check(CLI::PositiveNumber);
  add_output_flags(fig3, spec, format);

  auto* fig4 = app.add_subcommand("fig4", "Retention and quality factor");
  fig4->add_option("--case", case_text, "I or II");
  fig4->add_option("--alpha-points", spec.alpha_points, "Grid size over [0, 1]")
      ->check(CLI::PositiveNumber);
  add_output_flags(fig4, spec, format);

  auto* fig5 = app.add_subcommand("fig5", "Phase shifts over superposition inputs");
  fig5->add_option("--case", case_text, "I or II (default II)");
  fig5->add_option("--alpha-points", spec.alpha_points, "Grid size over [0, 1]")
      ->check(CLI::PositiveNumber);
  bool no_variant = false;
  fig5->add_flag("--no-phase-variant", no_variant, "Skip the arg(a+)=pi/4 curve");
  add_output_flags(fig5, spec, format);

  auto* cnot = app.add_subcommand("cnot", "Controlled-NOT from repeated gates");
  cnot->add_option("--lambda1", spec.cnot.lambda1, "Lower coupling");
  cnot->add_option("--lambda2", spec.cnot.lambda2, "Upper coupling");
  cnot->add_option("--delta1", spec.cnot.delta1, "Detuning of |0> -> |+1>");
  cnot->add_option("--delta2", spec.cnot.delta2, "Detuning of |2>");
  cnot->add_option("--time", spec.cnot.time, "Interaction time");
  cnot->add_option("--repetitions", spec.cnot.repetitions, "Applications")
      ->check(CLI::PositiveNumber);
  add_output_flags(cnot, spec, format);

  auto* accept = app.add_subcommand("accept", "Run the acceptance checks");
  add_output_flags(accept, spec, format);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    spec.command = Command::Help;
    spec.help_text = app.help();
    if (auto subs = app.get_subcommands(); !subs.empty()) {
      spec.help_text = subs.front()->help();
    }
    return spec;
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }

  spec.format = format == "json" ? Format::Json : Format::Csv;
  if (fig5->parsed() && fig5->count("--case") == 0) case_text = "II";
  const CaseKind kind = case_flag(case_text);

  if (run->parsed()) {
    spec.command = Command::Run;
    spec.config.kind = kind;
    check_config_flags(spec.config);
    spec.input = {parse_amplitude(ap), parse_amplitude(am),
                  parse_amplitude(bp), parse_amplitude(bm)};
    try {
      spec.input.validate();
    } catch (const InvalidInput& e) {
      throw UsageError(
          std::string("--alpha-plus/--alpha-minus/--beta-plus/--beta-minus: ") +
          e.what());
    }
  } else if (fig2->parsed()) {
    spec.command = Command::Fig2;
    spec.config.kind = kind;
    for (double l2 : spec.lambda2_grid) {
      if (l2 < 0.0) throw UsageError("--lambda2-grid: values must be >= 0");
    }
  } else if (fig3->parsed()) {
    spec.command = Command::Fig3;
  } else if (fig4->parsed()) {
    spec.command = Command::Fig4;
    spec.config.kind = kind;
  } else if (fig5->parsed()) {
    spec.command = Command::Fig5;
    spec.config.kind = kind;
    spec.phase_variant = !no_variant;
  } else if (cnot->parsed()) {
    spec.command = Command::Cnot;
    check_config_flags(spec.cnot.config());
  } else if (accept->parsed()) {
    spec.command = Command::Accept;
  }
  return spec;
}

RunSpec parse_args(const std::vector<std::string>& args) {
  std::vector<const char*> argv{"faraday_gate"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return parse_args(static_cast<int>(argv.size()), argv.data());
}

int execute(const RunSpec& spec, std::ostream& out, std::ostream& err) {
  try {
    switch (spec.command) {
      case Command::Help:
        out << spec.help_text;
        return kOk;
      case Command::Run: {
        const GateAnalysis a = run_gate(spec.config, spec.input);
        const SweepResult r = analysis_record(spec.config, spec.input, a);
        return emit(spec, out, err,
                    [&](std::ostream& os) { write(r, spec.format, os); });
      }
      case Command::Fig2: {
        const CaseKind k = spec.config.kind;
        const SweepResult r = fig2_sweep(
            k, spec.detunings.empty() ? default_detunings(k) : spec.detunings,
            spec.lambda2_grid.empty() ? default_lambda2_grid(k)
                                      : spec.lambda2_grid);
        return emit(spec, out, err,
                    [&](std::ostream& os) { write(r, spec.format, os); });
      }
      case Command::Fig3: {
        const SweepResult r = fig3_timeseries(spec.samples);
        return emit(spec, out, err,
                    [&](std::ostream& os) { write(r, spec.format, os); });
      }
      case Command::Fig4: {
        const SweepResult r = fig4_sweep(
            spec.config.kind, linspace(0.0, 1.0, spec.alpha_points));
        return emit(spec, out, err,
                    [&](std::ostream& os) { write(r, spec.format, os); });
      }
      case Command::Fig5: {
        const SweepResult r = fig5_sweep(linspace(0.0, 1.0, spec.alpha_points),
                                         spec.phase_variant, spec.config.kind);
        return emit(spec, out, err,
                    [&](std::ostream& os) { write(r, spec.format, os); });
      }
      case Command::Cnot: {
        const CnotResult r = cnot_synthesis(spec.cnot);
        return emit(spec, out, err,
                    [&](std::ostream& os) { write(r, spec.format, os); });
      }
      case Command::Accept: {
        const auto results = run_acceptance();
        const int io = emit(spec, out, err, [&](std::ostream& os) {
          if (spec.format == Format::Json) {
            nlohmann::json j = nlohmann::json::array();
            for (const auto& c : results) {
              j.push_back({{"id", c.id},
                           {"name", c.name},
                           {"pass", c.pass},
                           {"detail", c.detail}});
            }
            os << j.dump(2) << '\n';
          } else {
            print_acceptance(results, os);
          }
        });
        if (io != kOk) return io;
        return all_passed(results) ? kOk : kAcceptanceFail;
      }
    }
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kOk;
}

}  // namespace faraday::cli
