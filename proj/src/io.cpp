#include "faraday/io.hpp"

#include <iomanip>
#include <sstream>

namespace faraday {

namespace {

std::string csv_number(double v) {
  std::ostringstream os;
  os << std::setprecision(17) << v;
  return os.str();
}

std::string csv_field(const Cell& c) {
  struct Visitor {
    std::string operator()(std::monostate) const { return ""; }
    std::string operator()(double v) const { return csv_number(v); }
    std::string operator()(const std::string& s) const { return s; }
    std::string operator()(bool b) const { return b ? "1" : "0"; }
  };
  return std::visit(Visitor{}, c);
}

nlohmann::json json_cell(const Cell& c) {
  struct Visitor {
    nlohmann::json operator()(std::monostate) const { return nullptr; }
    nlohmann::json operator()(double v) const { return v; }
    nlohmann::json operator()(const std::string& s) const { return s; }
    nlohmann::json operator()(bool b) const { return b; }
  };
  return std::visit(Visitor{}, c);
}

Cell maybe(const std::optional<double>& v) {
  if (v) return *v;
  return std::monostate{};
}

Cell maybe_deg(const std::optional<double>& v) {
  if (v) return to_degrees(*v);
  return std::monostate{};
}

const char* branch_tag(Branch b) {
  switch (b) {
    case Branch::PP: return "pp";
    case Branch::PM: return "pm";
    case Branch::MP: return "mp";
    case Branch::MM: return "mm";
  }
  return "?";
}

}  // namespace

nlohmann::json to_json(const GateConfig& c) {
  return {{"case", std::string(to_string(c.kind))},
          {"lambda1", c.lambda1},
          {"lambda2", c.lambda2},
          {"delta1", c.delta1},
          {"delta2", c.delta2},
          {"time", c.time}};
}

nlohmann::json to_json(const SweepResult& r) {
  nlohmann::json meta = {{"experiment", r.metadata.experiment},
                         {"grid", r.metadata.grid},
                         {"basis_order", r.metadata.basis_order},
                         {"version", r.metadata.version},
                         {"columns", r.columns}};
  meta["config"] = r.metadata.config ? to_json(*r.metadata.config)
                                     : nlohmann::json(nullptr);
  nlohmann::json rows = nlohmann::json::array();
  for (const Row& row : r.rows) {
    nlohmann::json obj = nlohmann::json::object();
    for (std::size_t i = 0; i < r.columns.size(); ++i) {
      obj[r.columns[i]] = json_cell(row.at(i));
    }
    rows.push_back(std::move(obj));
  }
  return {{"metadata", std::move(meta)}, {"rows", std::move(rows)}};
}

void write_csv(const SweepResult& r, std::ostream& os) {
  for (std::size_t i = 0; i < r.columns.size(); ++i) {
    os << (i ? "," : "") << r.columns[i];
  }
  os << '\n';
  for (const Row& row : r.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      os << (i ? "," : "") << csv_field(row[i]);
    }
    os << '\n';
  }
}

SweepResult analysis_record(const GateConfig& config, const QubitInput& q,
                            const GateAnalysis& a) {
  SweepResult r;
  r.metadata.experiment = "run";
  r.metadata.config = config;
  std::ostringstream grid;
  grid << std::setprecision(17) << "input a+=" << q.alpha_plus
       << " a-=" << q.alpha_minus << " b+=" << q.beta_plus
       << " b-=" << q.beta_minus;
  r.metadata.grid = grid.str();
  r.metadata.basis_order = "C_ij: i = target (a), j = control (b)";

  Row row;
  r.columns.push_back("p0");
  row.emplace_back(a.p0);
  for (Branch b : kBranches) {
    const std::string t = branch_tag(b);
    const Complex c = a.c[index(b)];
    r.columns.insert(r.columns.end(),
                     {"c_" + t + "_re", "c_" + t + "_im", "eta_" + t,
                      "phi_" + t + "_deg"});
    row.emplace_back(c.real());
    row.emplace_back(c.imag());
    row.push_back(maybe(a.eta[index(b)]));
    row.push_back(maybe_deg(a.phi[index(b)]));
  }
  r.columns.insert(r.columns.end(),
                   {"phi_bar_plus_deg", "phi_bar_minus_deg", "dphi_plus_deg",
                    "dphi_minus_deg", "retention", "quality"});
  row.push_back(maybe_deg(a.phases.phi_bar_plus));
  row.push_back(maybe_deg(a.phases.phi_bar_minus));
  row.push_back(maybe_deg(a.phases.dphi_plus));
  row.push_back(maybe_deg(a.phases.dphi_minus));
  row.push_back(maybe(a.retention));
  row.push_back(maybe(a.quality));
  r.rows.push_back(std::move(row));
  return r;
}

SweepResult cnot_matrix_table(const CnotResult& res) {
  SweepResult r;
  r.metadata.experiment = "cnot";
  r.metadata.config = res.params.config();
  r.metadata.grid = std::to_string(res.params.repetitions) +
                    " applications, then target basis change";
  r.metadata.basis_order = "rows/cols {a-b-, a+b-, a-b+, a+b+}, 0-based";
  r.columns = {"row", "col", "re", "im", "abs", "arg_deg"};
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      const Complex z = res.cnot.m(i, j);
      r.rows.push_back({double(i), double(j), z.real(), z.imag(), std::abs(z),
                        to_degrees(std::arg(z))});
    }
  }
  return r;
}

nlohmann::json to_json(const CnotScore& s) {
  return {{"conditional_phase_deg", to_degrees(s.conditional_phase)},
          {"single_b_minus_phase_deg", to_degrees(s.single_b_minus_phase)},
          {"upper_magnitudes", {s.upper_magnitudes[0], s.upper_magnitudes[1]}},
          {"lower_magnitudes", {s.lower_magnitudes[0], s.lower_magnitudes[1]}},
          {"upper_phase_deg", to_degrees(s.upper_phase)},
          {"lower_phase_deg", to_degrees(s.lower_phase)},
          {"max_offblock", s.max_offblock},
          {"max_inblock_small", s.max_inblock_small},
          {"per_block_distance", s.distance},
          {"leakage", s.leakage}};
}

nlohmann::json to_json(const CnotResult& r) {
  nlohmann::json j = to_json(cnot_matrix_table(r));
  j["score"] = to_json(r.score);
  return j;
}

void write_csv(const CnotResult& r, std::ostream& os) {
  write_csv(cnot_matrix_table(r), os);
  os << '\n' << "field,value\n";
  const nlohmann::json score = to_json(r.score);
  for (const auto& [key, value] : score.items()) {
    if (value.is_array()) {
      for (std::size_t i = 0; i < value.size(); ++i) {
        os << key << '[' << i << "]," << csv_number(value[i].get<double>())
           << '\n';
      }
    } else {
      os << key << ',' << csv_number(value.get<double>()) << '\n';
    }
  }
}

void write(const SweepResult& r, Format f, std::ostream& os) {
  if (f == Format::Json) {
    os << to_json(r).dump(2) << '\n';
  } else {
    write_csv(r, os);
  }
}

void write(const CnotResult& r, Format f, std::ostream& os) {
  if (f == Format::Json) {
    os << to_json(r).dump(2) << '\n';
  } else {
    write_csv(r, os);
  }
}

}  // namespace faraday
