#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "lplab/sequences.hpp"
#include "lplab/square_function.hpp"
#include "lplab/trig_poly.hpp"

namespace lplab {

struct FitResult {
  double slope = 0.0;
  double intercept = 0.0;
  double r_squared = 0.0;
  int points_used = 0;
};

// OLS of log y against log x; inputs must be positive
FitResult fit_exponent(const std::vector<double>& xs, const std::vector<double>& ys);

struct ExperimentRecord {
  std::string experiment;
  std::map<std::string, double> params;    // lambda, rho, sigma, p, N, M, grid, seed
  std::map<std::string, double> measured;
};

struct ScanResult {
  std::string name;
  std::vector<ExperimentRecord> records;
  std::map<std::string, FitResult> fits;
  std::vector<std::string> notes;  // inconclusive fits, skipped points
};

// Regression envelopes frozen after the pilot run. The scans measure
// exponents; these absolute constants are artifact-owned, not literature
// values.
namespace envelopes {
inline constexpr double zygmund_quotient_cap = 10.0;
inline constexpr double lambda_p_quotient_cap = 10.0;
inline constexpr double weak_type_cap = 20.0;
inline constexpr double dual_scan_sequence_spread = 4.0;
inline constexpr double khintchine_lo = 0.4;
inline constexpr double khintchine_hi = 2.5;
inline constexpr double fit_r2_gate = 0.9;
}  // namespace envelopes

// Default scan grids, frozen after the pilot run together with the
// envelopes. The cardinality grid sits closer to ratio 1 where the count is
// large enough for a clean fit; the sharpness grid stays where the rescaled
// sequences keep several usable blocks per octave.
namespace defaults {
std::vector<double> cardinality_lambda_grid();  // {1.02 .. 1.10}
std::vector<double> sharpness_lambda_grid();    // {1.03 .. 1.15}
std::vector<long long> sharpness_N_grid();      // 512 .. 8192, half octaves
std::vector<double> scan_lambda_grid();         // {1.05 .. 1.25}
std::vector<long long> sigma_grid();            // {4, 8, 16, 32}
inline constexpr std::uint64_t base_seed = 1815;
}  // namespace defaults

// #A_N under the exact pairing N = ceil(e^{4/(lambda-1)}); fit of the count
// against (lambda-1)^{-1}, slope target 1.
ScanResult cardinality_scan(const std::vector<double>& lambda_grid);

// Desk-scale lower-bound functional
//   L(lambda, N) = (sum_{j in A_N, mu_{j-1} > N} ||Delta_j f_N||_1^2)^{1/2}
//                  / ||f_N||_p,   p = 1 + 1/log N.
// Fits: L vs (lambda-1)^{-1} at the largest N (slope target 0.5) and
// L vs log N at the middle lambda (slope target 1).
ScanResult sharpness_scan_hp(const std::vector<double>& lambda_grid,
                             const std::vector<long long>& N_grid);

// R(sigma) over sigma_block_example sequences; fit vs sigma, slope target 0.5.
ScanResult sigma_scan(const std::vector<long long>& sigma_grid, long long M);

// Paley quotient Q = (sum_j |f_hat(mu_j)|^2)^{1/2} / ||f||_1 on f_N; fit vs
// (lambda-1)^{-1}, slope target 0.5. Includes a 2-D product point at a
// smaller N2d, checking Q2 = Q1^2 exactly.
ScanResult paley_scan(const std::vector<double>& lambda_grid, long long N, long long N2d = 128);

// (sum_j |f_hat(l_j)|^2)^{1/2} / zygmund_functional(f)
double zygmund_check(const LacunarySequence& seq, const TrigPoly& f);
ScanResult zygmund_scan(const std::vector<long long>& sigma_grid, long long M);

// max over trials of ||g||_p / (sigma^{1/2} sqrt(p) ||g||_2), spectrum in seq
ScanResult lambda_p_check(const LacunarySequence& seq, const std::vector<double>& p_grid,
                          int trials, std::uint64_t base_seed);

// weak_l1(S(f)) * (rho-1)^{1/2} / (2||f||_1  or  the L log^{1/2} L bracket)
double weak_type_ratio(const LacunarySequence& seq, const TrigPoly& f, bool analytic_mode);
ScanResult weak_type_scan(const std::vector<double>& lambda_grid, long long N);

// max over random analytic f of ||S(f)||_p / ||f||_p per (seq, p), p > 2
ScanResult dual_range_scan(const std::vector<LacunarySequence>& seqs,
                           const std::vector<double>& p_grid, int trials,
                           std::uint64_t base_seed);

// Empirical Khintchine bracket plus the exact per-draw L2 identity
ScanResult khintchine_scan(const LacunarySequence& seq, const std::vector<double>& p_grid,
                           int num_functions, int draws, std::uint64_t base_seed);

// seed derivation: hash(base_seed, experiment_name, params...)
std::uint64_t derive_seed(std::uint64_t base_seed, const std::string& name,
                          const std::vector<double>& params);

}  // namespace lplab
