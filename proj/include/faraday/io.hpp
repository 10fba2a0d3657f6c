#pragma once

// CSV and JSON encodings of experiment tables.
//
// CSV: header row, comma separator, '.' decimals, 17 significant digits,
// absent values as empty fields, booleans as 0/1.
// JSON: one object {"metadata": {...}, "rows": [{column: value|null}, ...]}.

#include "faraday/analysis.hpp"
#include "faraday/gate.hpp"
#include "faraday/sweep.hpp"

#include <json.hpp>

#include <ostream>

namespace faraday {

enum class Format { Csv, Json };

nlohmann::json to_json(const GateConfig& c);
nlohmann::json to_json(const SweepResult& r);
void write_csv(const SweepResult& r, std::ostream& os);

// One-row table for a single gate run. Phases are reported in degrees.
SweepResult analysis_record(const GateConfig& config, const QubitInput& q,
                            const GateAnalysis& a);

// Sixteen rows (row, col, re, im, abs, arg_deg) over the CNOT matrix.
SweepResult cnot_matrix_table(const CnotResult& r);
nlohmann::json to_json(const CnotScore& s);
nlohmann::json to_json(const CnotResult& r);
// Matrix table, a blank line, then "field,value" pairs for the score.
void write_csv(const CnotResult& r, std::ostream& os);

void write(const SweepResult& r, Format f, std::ostream& os);
void write(const CnotResult& r, Format f, std::ostream& os);

}  // namespace faraday
