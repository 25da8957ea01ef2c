#pragma once

#include <string>
#include <vector>

#include "lplab/experiments.hpp"
#include "lplab/multipliers.hpp"
#include "lplab/sequences.hpp"
#include "lplab/square_function.hpp"
#include "lplab/trig_poly.hpp"

namespace lplab {

// CSV with fixed leading columns
//   experiment, lambda, rho, sigma, p, N, M, grid, seed
// followed by the union of measured keys in alphabetical order. Missing
// fields are left empty. Numbers use '.' as decimal separator and 17
// significant digits regardless of locale.
std::string records_to_csv(const std::vector<ExperimentRecord>& records);
void write_records_csv(const std::string& path, const std::vector<ExperimentRecord>& records);

// JSON summary: name, fits (slope/intercept/r_squared/points_used), notes,
// record count, and an ISO-8601 UTC timestamp (timestamp appears only here,
// never in the CSV).
std::string scan_summary_json(const ScanResult& scan);
void write_scan_summary(const std::string& path, const ScanResult& scan);

// Sequence files are JSON arrays of integers.
LacunarySequence read_sequence_json(const std::string& path);
void write_sequence_json(const std::string& path, const LacunarySequence& seq);

// Symbol tables export as CSV rows "n,value" over the window.
void write_symbol_csv(const std::string& path, const SymbolTable& symbol);

// Coefficient list as JSON: [{"freq": n, "re": ..., "im": ...}, ...]
std::string trig_poly_to_json(const TrigPoly& f);
void write_trig_poly_json(const std::string& path, const TrigPoly& f);

// Grid export "k,x,value" plus a JSON sidecar with per-block l2 norms.
void write_square_function_csv(const std::string& path, const SquareFunctionResult& result);
std::string square_function_summary_json(const SquareFunctionResult& result);

// Shared formatting helper: shortest representation at 17 significant digits.
std::string format_double(double v);

bool all_finite(const std::vector<ExperimentRecord>& records);

}  // namespace lplab
