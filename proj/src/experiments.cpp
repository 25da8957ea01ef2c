#include "lplab/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <stdexcept>

#include "lplab/fft.hpp"
#include "lplab/kernels.hpp"
#include "lplab/norms.hpp"
#include "lplab/rng.hpp"

namespace lplab {

namespace {

double inv_gap(double lambda) { return 1.0 / (lambda - 1.0); }

void flag_if_inconclusive(ScanResult& res, const std::string& fit_name) {
  const FitResult& fit = res.fits.at(fit_name);
  if (fit.r_squared < envelopes::fit_r2_gate)
    res.notes.push_back("inconclusive: fit '" + fit_name + "' has r^2 = " +
                        std::to_string(fit.r_squared) + " < " +
                        std::to_string(envelopes::fit_r2_gate));
}

double block_l1_norm(const LacunarySequence& seq, std::size_t j, const TrigPoly& f,
                     std::size_t grid) {
  TrigPoly pj = apply(sharp_symbol(seq, j), f);
  if (pj.empty()) return 0.0;
  return lp_norm(evaluate(pj, grid), 1.0);
}

}  // namespace

namespace defaults {
std::vector<double> cardinality_lambda_grid() {
  return {1.02, 1.025, 1.03, 1.035, 1.04, 1.05, 1.06, 1.07, 1.08, 1.10};
}
std::vector<double> sharpness_lambda_grid() { return {1.03, 1.05, 1.07, 1.09, 1.12, 1.15}; }
std::vector<long long> sharpness_N_grid() {
  return {512, 724, 1024, 1448, 2048, 2896, 4096, 5792, 8192};
}
std::vector<double> scan_lambda_grid() { return {1.05, 1.08, 1.1, 1.15, 1.2, 1.25}; }
std::vector<long long> sigma_grid() { return {4, 8, 16, 32}; }
}  // namespace defaults

std::uint64_t derive_seed(std::uint64_t base_seed, const std::string& name,
                          const std::vector<double>& params) {
  std::uint64_t h = hash_string(base_seed, name);
  for (double p : params) {
    std::uint64_t bits;
    std::memcpy(&bits, &p, sizeof(bits));
    h = hash_combine(h, bits);
  }
  return h;
}

FitResult fit_exponent(const std::vector<double>& xs, const std::vector<double>& ys) {
  if (xs.size() != ys.size() || xs.size() < 3)
    throw std::invalid_argument("fit_exponent: need >= 3 paired points");
  const std::size_t n = xs.size();
  std::vector<double> lx(n), ly(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (xs[i] <= 0.0 || ys[i] <= 0.0)
      throw std::invalid_argument("fit_exponent: inputs must be positive");
    lx[i] = std::log(xs[i]);
    ly[i] = std::log(ys[i]);
  }
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    mx += lx[i];
    my += ly[i];
  }
  mx /= static_cast<double>(n);
  my /= static_cast<double>(n);
  double sxx = 0.0, sxy = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    sxx += (lx[i] - mx) * (lx[i] - mx);
    sxy += (lx[i] - mx) * (ly[i] - my);
    syy += (ly[i] - my) * (ly[i] - my);
  }
  FitResult fit;
  fit.points_used = static_cast<int>(n);
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  fit.r_squared = syy == 0.0 ? 1.0 : std::clamp(sxy * sxy / (sxx * syy), 0.0, 1.0);
  return fit;
}

ScanResult cardinality_scan(const std::vector<double>& lambda_grid) {
  ScanResult res;
  res.name = "cardinality-scan";
  std::vector<double> xs, ys;
  for (double lambda : lambda_grid) {
    long long count = cardinality_AN_exact(lambda);
    ExperimentRecord rec;
    rec.experiment = res.name;
    rec.params["lambda"] = lambda;
    rec.measured["a_count"] = static_cast<double>(count);
    rec.measured["count_times_gap"] = static_cast<double>(count) * (lambda - 1.0);
    res.records.push_back(rec);
    if (count < 1) {
      res.notes.push_back("empty A_N at lambda = " + std::to_string(lambda));
      continue;
    }
    xs.push_back(inv_gap(lambda));
    ys.push_back(static_cast<double>(count));
  }
  res.fits["count_vs_inverse_gap"] = fit_exponent(xs, ys);
  flag_if_inconclusive(res, "count_vs_inverse_gap");
  return res;
}

ScanResult sharpness_scan_hp(const std::vector<double>& lambda_grid,
                             const std::vector<long long>& N_grid) {
  ScanResult res;
  res.name = "sharpness-scan";
  for (double lambda : lambda_grid) {
    for (long long N : N_grid) {
      LacunarySequence seq = rescaled_near_ratio(lambda, N, 4 * N + 3);
      TrigPoly f = extremal_fN(N);
      const std::size_t grid = default_grid_size(f);
      const double p = 1.0 + 1.0 / std::log(static_cast<double>(N));
      const double fp = lp_norm(evaluate(f, grid), p);

      double sumsq = 0.0;
      long long a_count = 0;
      for (std::size_t j = 1; j < seq.size(); ++j) {
        if (seq.terms[j] < N || seq.terms[j] > 2 * N) continue;
        ++a_count;
        if (seq.terms[j - 1] <= N) continue;  // plateau identity needs lambda_{j-1} > N
        double l1 = block_l1_norm(seq, j, f, grid);
        sumsq += l1 * l1;
      }
      if (sumsq == 0.0) {
        res.notes.push_back("skipped: empty usable A_N at lambda = " + std::to_string(lambda) +
                            ", N = " + std::to_string(N));
        continue;
      }
      const double L = std::sqrt(sumsq) / fp;
      ExperimentRecord rec;
      rec.experiment = res.name;
      rec.params["lambda"] = lambda;
      rec.params["rho"] = ratio(seq);
      rec.params["N"] = static_cast<double>(N);
      rec.params["p"] = p;
      rec.params["grid"] = static_cast<double>(grid);
      rec.measured["lower_bound_functional"] = L;
      rec.measured["a_count"] = static_cast<double>(a_count);
      res.records.push_back(rec);
    }
  }

  // Fixed-N fit: the largest N covered by every lambda. Fixed-lambda fit: the
  // lambda whose A_N is most populated (smallest gap), which has the least
  // block-count jitter across the N grid.
  long long fit_N = -1;
  for (long long N : N_grid) {
    std::size_t covered = 0;
    for (const auto& rec : res.records)
      if (rec.params.at("N") == static_cast<double>(N)) ++covered;
    if (covered == lambda_grid.size() && N > fit_N) fit_N = N;
  }
  if (fit_N < 0) throw std::runtime_error("sharpness_scan: no N covered by every lambda");
  double fit_lambda = lambda_grid.front();
  double best_count = -1.0;
  for (const auto& rec : res.records) {
    if (rec.measured.at("a_count") > best_count) {
      best_count = rec.measured.at("a_count");
      fit_lambda = rec.params.at("lambda");
    }
  }
  std::vector<double> xs_gap, ys_gap, xs_logN, ys_logN;
  for (const auto& rec : res.records) {
    const double L = rec.measured.at("lower_bound_functional");
    if (rec.params.at("N") == static_cast<double>(fit_N)) {
      xs_gap.push_back(inv_gap(rec.params.at("lambda")));
      ys_gap.push_back(L);
    }
    if (rec.params.at("lambda") == fit_lambda) {
      xs_logN.push_back(std::log(rec.params.at("N")));
      ys_logN.push_back(L);
    }
  }
  res.fits["slope_vs_inverse_gap"] = fit_exponent(xs_gap, ys_gap);
  res.fits["slope_vs_logN"] = fit_exponent(xs_logN, ys_logN);
  flag_if_inconclusive(res, "slope_vs_inverse_gap");
  flag_if_inconclusive(res, "slope_vs_logN");
  return res;
}

ScanResult sigma_scan(const std::vector<long long>& sigma_grid, long long M) {
  ScanResult res;
  res.name = "sigma-scan";
  std::vector<double> xs, ys;
  TrigPoly f = extremal_fM(M);
  const std::size_t grid = default_grid_size(f);
  const double p = 1.0 + 1.0 / std::log(static_cast<double>(M));
  const double fp = lp_norm(evaluate(f, grid), p);
  for (long long sig : sigma_grid) {
    if (sig > M / 4) throw std::invalid_argument("sigma_scan: sigma > M/4");
    LacunarySequence seq = sigma_block_example(sig, M);
    double sumsq = 0.0;
    for (long long j = 1; j < sig; ++j) {
      double l1 = block_l1_norm(seq, static_cast<std::size_t>(j), f, grid);
      sumsq += l1 * l1;
    }
    const double R = std::sqrt(sumsq) / fp;
    ExperimentRecord rec;
    rec.experiment = res.name;
    rec.params["sigma"] = static_cast<double>(sig);
    rec.params["M"] = static_cast<double>(M);
    rec.params["p"] = p;
    rec.params["grid"] = static_cast<double>(grid);
    rec.measured["lower_bound_functional"] = R;
    rec.measured["sigma_measured"] = static_cast<double>(sigma(seq));
    res.records.push_back(rec);
    xs.push_back(static_cast<double>(sig));
    ys.push_back(R);
  }
  res.fits["slope_vs_sigma"] = fit_exponent(xs, ys);
  flag_if_inconclusive(res, "slope_vs_sigma");
  return res;
}

namespace {

double paley_numerator(const LacunarySequence& seq, const TrigPoly& f) {
  double acc = 0.0;
  for (long long t : seq.terms) acc += std::norm(f.coeff(t));
  return std::sqrt(acc);
}

}  // namespace

ScanResult paley_scan(const std::vector<double>& lambda_grid, long long N, long long N2d) {
  ScanResult res;
  res.name = "paley-scan";
  TrigPoly f = extremal_fN(N);
  if (!f.is_analytic()) throw std::invalid_argument("paley_scan: f must be analytic");
  const double f_l1 = lp_norm(f, 1.0);
  std::vector<double> xs, ys;
  for (double lambda : lambda_grid) {
    LacunarySequence seq = rescaled_near_ratio(lambda, N, 4 * N + 3);
    const double Q = paley_numerator(seq, f) / f_l1;
    ExperimentRecord rec;
    rec.experiment = res.name;
    rec.params["lambda"] = lambda;
    rec.params["rho"] = ratio(seq);
    rec.params["N"] = static_cast<double>(N);
    rec.measured["paley_quotient"] = Q;
    res.records.push_back(rec);
    xs.push_back(inv_gap(lambda));
    ys.push_back(Q);
  }
  res.fits["slope_vs_inverse_gap"] = fit_exponent(xs, ys);
  flag_if_inconclusive(res, "slope_vs_inverse_gap");

  // 2-D product point: Q2 must equal Q1^2 when f2 = f (x) f and the L1 norms
  // are taken on matching per-axis grids
  {
    const double lambda = lambda_grid.front();
    LacunarySequence seq = rescaled_near_ratio(lambda, N2d, 4 * N2d + 3);
    TrigPoly g = extremal_fN(N2d);
    const std::size_t axis_grid =
        next_power_of_two(static_cast<std::size_t>(2 * g.max_abs_freq() + 1) * 2);
    const double g_l1 = lp_norm(evaluate(g, axis_grid), 1.0);
    const double Q1 = paley_numerator(seq, g) / g_l1;
    TrigPoly2D g2 = TrigPoly2D::tensor(g, g);
    double acc = 0.0;
    for (long long t1 : seq.terms)
      for (long long t2 : seq.terms) acc += std::norm(g2.coeff(t1, t2));
    const double g2_l1 = lp_norm(evaluate_2d(g2, axis_grid, axis_grid), 1.0);
    const double Q2 = std::sqrt(acc) / g2_l1;
    ExperimentRecord rec;
    rec.experiment = res.name + "-2d";
    rec.params["lambda"] = lambda;
    rec.params["N"] = static_cast<double>(N2d);
    rec.measured["q1"] = Q1;
    rec.measured["q2"] = Q2;
    rec.measured["factorization_err"] = std::abs(Q2 - Q1 * Q1) / (Q1 * Q1);
    res.records.push_back(rec);
  }
  return res;
}

double zygmund_check(const LacunarySequence& seq, const TrigPoly& f) {
  check_coverage(seq, f);
  if (f.empty()) return 0.0;
  const double denom = zygmund_functional(evaluate(f, default_grid_size(f)));
  return paley_numerator(seq, f) / denom;
}

ScanResult zygmund_scan(const std::vector<long long>& sigma_grid, long long M) {
  ScanResult res;
  res.name = "zygmund";
  TrigPoly f = extremal_fM(M);
  std::vector<double> xs, ys;
  for (long long sig : sigma_grid) {
    LacunarySequence seq = sigma_block_example(sig, M);
    const double q = zygmund_check(seq, f);
    ExperimentRecord rec;
    rec.experiment = res.name;
    rec.params["sigma"] = static_cast<double>(sig);
    rec.params["M"] = static_cast<double>(M);
    rec.measured["zygmund_quotient"] = q;
    rec.measured["quotient_over_sqrt_sigma"] = q / std::sqrt(static_cast<double>(sig));
    res.records.push_back(rec);
    xs.push_back(static_cast<double>(sig));
    ys.push_back(q);
  }
  res.fits["slope_vs_sigma"] = fit_exponent(xs, ys);
  flag_if_inconclusive(res, "slope_vs_sigma");
  return res;
}

ScanResult lambda_p_check(const LacunarySequence& seq, const std::vector<double>& p_grid,
                          int trials, std::uint64_t base_seed) {
  ScanResult res;
  res.name = "lambda-p";
  const double sq_sigma = std::sqrt(static_cast<double>(sigma(seq)));
  for (double p : p_grid) {
    if (p < 2.0) throw std::invalid_argument("lambda_p_check: p < 2");
    double worst = 0.0;
    for (int t = 0; t < trials; ++t) {
      CounterRng rng(derive_seed(base_seed, res.name, {p, static_cast<double>(t)}));
      TrigPoly g;
      for (long long term : seq.terms) g.set(term, rng.next_complex_gaussian());
      const double quotient =
          lp_norm(g, p) / (sq_sigma * std::sqrt(p) * l2_norm_parseval(g));
      worst = std::max(worst, quotient);
    }
    ExperimentRecord rec;
    rec.experiment = res.name;
    rec.params["p"] = p;
    rec.params["sigma"] = sq_sigma * sq_sigma;
    rec.params["seed"] = static_cast<double>(base_seed);
    rec.measured["max_quotient"] = worst;
    res.records.push_back(rec);
    if (worst > envelopes::lambda_p_quotient_cap)
      res.notes.push_back("envelope exceeded at p = " + std::to_string(p));
  }
  return res;
}

double weak_type_ratio(const LacunarySequence& seq, const TrigPoly& f, bool analytic_mode) {
  check_coverage(seq, f);
  if (analytic_mode && !f.is_analytic())
    throw std::invalid_argument("weak_type_ratio: analytic mode needs freq_lo >= 0");
  const std::size_t grid = default_grid_size(f);
  SquareFunctionResult sf = square_function(seq, f, grid);
  const double num = weak_l1(sf.as_grid());
  GridSamples samples = evaluate(f, grid);
  const double denom =
      analytic_mode ? 2.0 * lp_norm(samples, 1.0) : zygmund_functional(samples);
  return num / denom * std::sqrt(ratio(seq) - 1.0);
}

ScanResult weak_type_scan(const std::vector<double>& lambda_grid, long long N) {
  ScanResult res;
  res.name = "weak-type";
  TrigPoly f = extremal_fN(N);
  std::vector<double> xs, ys;
  for (double lambda : lambda_grid) {
    LacunarySequence seq = rescaled_near_ratio(lambda, N, 4 * N + 3);
    const double r = weak_type_ratio(seq, f, true);
    ExperimentRecord rec;
    rec.experiment = res.name;
    rec.params["lambda"] = lambda;
    rec.params["rho"] = ratio(seq);
    rec.params["N"] = static_cast<double>(N);
    rec.measured["normalized_ratio"] = r;
    res.records.push_back(rec);
    xs.push_back(inv_gap(lambda));
    ys.push_back(r);
    if (r > envelopes::weak_type_cap)
      res.notes.push_back("envelope exceeded at lambda = " + std::to_string(lambda));
  }
  res.fits["slope_vs_inverse_gap"] = fit_exponent(xs, ys);
  // flatness is the target here; r^2 is reported but deliberately not gated
  return res;
}

ScanResult dual_range_scan(const std::vector<LacunarySequence>& seqs,
                           const std::vector<double>& p_grid, int trials,
                           std::uint64_t base_seed) {
  ScanResult res;
  res.name = "dual-scan";
  for (double p : p_grid)
    if (p <= 2.0) throw std::invalid_argument("dual_range_scan: p <= 2");
  for (std::size_t si = 0; si < seqs.size(); ++si) {
    const LacunarySequence& seq = seqs[si];
    std::vector<double> worst(p_grid.size(), 0.0);
    for (int t = 0; t < trials; ++t) {
      TrigPoly f = random_analytic(seq.max_term() - 1,
                                   derive_seed(base_seed, res.name,
                                               {static_cast<double>(si), static_cast<double>(t)}));
      const std::size_t grid = default_grid_size(f);
      SquareFunctionResult sf = square_function(seq, f, grid);
      GridSamples fs = evaluate(f, grid);
      GridSamples ss = sf.as_grid();
      for (std::size_t pi = 0; pi < p_grid.size(); ++pi)
        worst[pi] = std::max(worst[pi], lp_norm(ss, p_grid[pi]) / lp_norm(fs, p_grid[pi]));
    }
    std::vector<double> xs, ys;
    for (std::size_t pi = 0; pi < p_grid.size(); ++pi) {
      ExperimentRecord rec;
      rec.experiment = res.name;
      rec.params["seq_index"] = static_cast<double>(si);
      rec.params["p"] = p_grid[pi];
      rec.params["seed"] = static_cast<double>(base_seed);
      rec.measured["max_ratio"] = worst[pi];
      res.records.push_back(rec);
      xs.push_back(p_grid[pi]);
      ys.push_back(worst[pi]);
    }
    if (xs.size() >= 3)
      res.fits["slope_vs_p_seq" + std::to_string(si)] = fit_exponent(xs, ys);
  }
  // Lambda-independence: spread across sequences at matching p
  for (std::size_t pi = 0; pi < p_grid.size(); ++pi) {
    double lo = 1e300, hi = 0.0;
    for (const auto& rec : res.records) {
      if (rec.params.at("p") != p_grid[pi]) continue;
      lo = std::min(lo, rec.measured.at("max_ratio"));
      hi = std::max(hi, rec.measured.at("max_ratio"));
    }
    if (hi / lo > envelopes::dual_scan_sequence_spread)
      res.notes.push_back("sequence spread " + std::to_string(hi / lo) +
                          " exceeds envelope at p = " + std::to_string(p_grid[pi]));
  }
  return res;
}

ScanResult khintchine_scan(const LacunarySequence& seq, const std::vector<double>& p_grid,
                           int num_functions, int draws, std::uint64_t base_seed) {
  ScanResult res;
  res.name = "khintchine";
  const std::size_t J = num_sharp_symbols(seq);
  std::vector<double> ratio_lo(p_grid.size(), 1e300), ratio_hi(p_grid.size(), 0.0);
  double l2_identity_err = 0.0;
  for (int fi = 0; fi < num_functions; ++fi) {
    TrigPoly f = random_analytic(seq.max_term() - 1,
                                 derive_seed(base_seed, res.name, {static_cast<double>(fi)}));
    const std::size_t grid = default_grid_size(f);
    SquareFunctionResult sf = square_function(seq, f, grid);
    GridSamples ss = sf.as_grid();
    std::vector<double> s_norms(p_grid.size());
    for (std::size_t pi = 0; pi < p_grid.size(); ++pi) s_norms[pi] = lp_norm(ss, p_grid[pi]);
    double block_sumsq = 0.0;
    for (double b : sf.per_block_l2) block_sumsq += b * b;

    std::vector<double> mean_t(p_grid.size(), 0.0);
    for (int d = 0; d < draws; ++d) {
      SignVector signs = make_sign_vector(
          J, derive_seed(base_seed, res.name + "/signs",
                         {static_cast<double>(fi), static_cast<double>(d)}));
      TrigPoly tf = randomized_operator(seq, signs, f, false);
      const double t2 = l2_norm_parseval(tf);
      l2_identity_err = std::max(l2_identity_err, std::abs(t2 * t2 - block_sumsq));
      GridSamples ts = evaluate(tf, grid);
      for (std::size_t pi = 0; pi < p_grid.size(); ++pi)
        mean_t[pi] += lp_norm(ts, p_grid[pi]);
    }
    for (std::size_t pi = 0; pi < p_grid.size(); ++pi) {
      const double r = (mean_t[pi] / static_cast<double>(draws)) / s_norms[pi];
      ratio_lo[pi] = std::min(ratio_lo[pi], r);
      ratio_hi[pi] = std::max(ratio_hi[pi], r);
    }
  }
  for (std::size_t pi = 0; pi < p_grid.size(); ++pi) {
    ExperimentRecord rec;
    rec.experiment = res.name;
    rec.params["p"] = p_grid[pi];
    rec.params["seed"] = static_cast<double>(base_seed);
    rec.measured["ratio_min"] = ratio_lo[pi];
    rec.measured["ratio_max"] = ratio_hi[pi];
    rec.measured["l2_identity_max_err"] = l2_identity_err;
    res.records.push_back(rec);
    if (ratio_lo[pi] < envelopes::khintchine_lo || ratio_hi[pi] > envelopes::khintchine_hi)
      res.notes.push_back("bracket exceeded at p = " + std::to_string(p_grid[pi]));
  }
  return res;
}

}  // namespace lplab
