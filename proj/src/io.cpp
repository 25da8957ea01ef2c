#include "lplab/io.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace lplab {

namespace {

using nlohmann::json;

const char* const kLeadingColumns[] = {"lambda", "rho", "sigma", "p",
                                       "N",      "M",   "grid",  "seed"};

std::string iso8601_utc_now() {
  const auto now = std::chrono::system_clock::now();
  const std::time_t t = std::chrono::system_clock::to_time_t(now);
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

json fit_to_json(const FitResult& fit) {
  return json{{"slope", fit.slope},
              {"intercept", fit.intercept},
              {"r_squared", fit.r_squared},
              {"points_used", fit.points_used}};
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out << text;
  if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace

std::string format_double(double v) {
  // snprintf %.17g is locale-independent for the C locale digits we need;
  // integers print without a trailing ".0" which keeps seed columns exact.
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string records_to_csv(const std::vector<ExperimentRecord>& records) {
  std::set<std::string> measured_keys;
  for (const auto& rec : records)
    for (const auto& [k, v] : rec.measured) measured_keys.insert(k);

  std::ostringstream out;
  out << "experiment";
  for (const char* col : kLeadingColumns) out << ',' << col;
  for (const auto& k : measured_keys) out << ',' << k;
  out << '\n';
  for (const auto& rec : records) {
    out << rec.experiment;
    for (const char* col : kLeadingColumns) {
      out << ',';
      auto it = rec.params.find(col);
      if (it != rec.params.end()) out << format_double(it->second);
    }
    for (const auto& k : measured_keys) {
      out << ',';
      auto it = rec.measured.find(k);
      if (it != rec.measured.end()) out << format_double(it->second);
    }
    out << '\n';
  }
  return out.str();
}

void write_records_csv(const std::string& path, const std::vector<ExperimentRecord>& records) {
  write_text(path, records_to_csv(records));
}

std::string scan_summary_json(const ScanResult& scan) {
  json j;
  j["name"] = scan.name;
  j["timestamp"] = iso8601_utc_now();
  j["num_records"] = scan.records.size();
  j["fits"] = json::object();
  for (const auto& [name, fit] : scan.fits) j["fits"][name] = fit_to_json(fit);
  j["notes"] = scan.notes;
  return j.dump(2) + "\n";
}

void write_scan_summary(const std::string& path, const ScanResult& scan) {
  write_text(path, scan_summary_json(scan));
}

LacunarySequence read_sequence_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open sequence file: " + path);
  json j;
  in >> j;
  if (!j.is_array()) throw std::runtime_error("sequence file must be a JSON array: " + path);
  LacunarySequence seq;
  seq.label = path;
  for (const auto& e : j) {
    if (!e.is_number_integer())
      throw std::runtime_error("sequence file must contain integers: " + path);
    seq.terms.push_back(e.get<long long>());
  }
  seq.validate();
  return seq;
}

void write_sequence_json(const std::string& path, const LacunarySequence& seq) {
  json j = seq.terms;
  write_text(path, j.dump() + "\n");
}

void write_symbol_csv(const std::string& path, const SymbolTable& symbol) {
  std::ostringstream out;
  out << "n,value\n";
  for (long long n = symbol.window_lo; n <= symbol.window_hi; ++n)
    out << n << ',' << format_double(symbol.at(n)) << '\n';
  write_text(path, out.str());
}

std::string trig_poly_to_json(const TrigPoly& f) {
  json j = json::array();
  for (const auto& [n, c] : f.coeffs())
    j.push_back(json{{"freq", n}, {"re", c.real()}, {"im", c.imag()}});
  return j.dump(2) + "\n";
}

void write_trig_poly_json(const std::string& path, const TrigPoly& f) {
  write_text(path, trig_poly_to_json(f));
}

void write_square_function_csv(const std::string& path, const SquareFunctionResult& result) {
  std::ostringstream out;
  out << "k,x,value\n";
  const double step = 2.0 * M_PI / static_cast<double>(result.grid_size);
  for (std::size_t k = 0; k < result.samples.size(); ++k)
    out << k << ',' << format_double(static_cast<double>(k) * step) << ','
        << format_double(result.samples[k]) << '\n';
  write_text(path, out.str());
}

std::string square_function_summary_json(const SquareFunctionResult& result) {
  json j;
  j["grid_size"] = result.grid_size;
  j["blocks_used"] = result.blocks_used;
  j["per_block_l2"] = result.per_block_l2;
  j["timestamp"] = iso8601_utc_now();
  return j.dump(2) + "\n";
}

bool all_finite(const std::vector<ExperimentRecord>& records) {
  for (const auto& rec : records) {
    for (const auto& [k, v] : rec.params)
      if (!std::isfinite(v)) return false;
    for (const auto& [k, v] : rec.measured)
      if (!std::isfinite(v)) return false;
  }
  return true;
}

}  // namespace lplab
