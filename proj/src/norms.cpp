#include "lplab/norms.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace lplab {

namespace {

double mean_abs_pow(const std::vector<cplx>& v, double p) {
  double acc = 0.0;
  for (const auto& z : v) acc += std::pow(std::abs(z), p);
  return acc / static_cast<double>(v.size());
}

double phi_r(double t, double r) { return t * std::pow(1.0 + std::log1p(t), r); }

}  // namespace

double lp_norm(const GridSamples& samples, double p) {
  if (samples.values.empty()) throw std::invalid_argument("lp_norm: empty samples");
  if (p < 1.0) throw std::invalid_argument("lp_norm: p < 1");
  return std::pow(mean_abs_pow(samples.values, p), 1.0 / p);
}

double lp_norm(const GridSamples2D& samples, double p) {
  if (samples.values.empty()) throw std::invalid_argument("lp_norm: empty samples");
  if (p < 1.0) throw std::invalid_argument("lp_norm: p < 1");
  return std::pow(mean_abs_pow(samples.values, p), 1.0 / p);
}

double lp_norm(const TrigPoly& f, double p, std::size_t oversampling) {
  return lp_norm(evaluate(f, default_grid_size(f, oversampling)), p);
}

double max_abs(const GridSamples& samples) {
  double m = 0.0;
  for (const auto& z : samples.values) m = std::max(m, std::abs(z));
  return m;
}

double l2_norm_parseval(const TrigPoly& f) {
  double acc = 0.0;
  for (const auto& [n, c] : f.coeffs()) {
    (void)n;
    acc += std::norm(c);
  }
  return std::sqrt(acc);
}

double l2_norm_parseval(const TrigPoly2D& f) {
  double acc = 0.0;
  for (const auto& [nn, c] : f.coeffs()) {
    (void)nn;
    acc += std::norm(c);
  }
  return std::sqrt(acc);
}

double weak_l1(const GridSamples& samples) {
  if (samples.values.empty()) throw std::invalid_argument("weak_l1: empty samples");
  const std::size_t M = samples.grid_size();
  std::vector<double> mags(M);
  for (std::size_t k = 0; k < M; ++k) mags[k] = std::abs(samples.values[k]);
  std::sort(mags.begin(), mags.end(), std::greater<>());
  double best = 0.0;
  for (std::size_t k = 0; k < M; ++k)
    best = std::max(best, mags[k] * static_cast<double>(k + 1) / static_cast<double>(M));
  return best;
}

double llogl_norm(const GridSamples& samples, double r) {
  if (r <= 0.0) throw std::invalid_argument("llogl_norm: r <= 0");
  if (samples.values.empty()) throw std::invalid_argument("llogl_norm: empty samples");
  const double vmax = max_abs(samples);
  if (vmax == 0.0) return 0.0;
  const std::size_t M = samples.grid_size();
  auto mean_phi = [&](double lam) {
    double acc = 0.0;
    for (const auto& z : samples.values) acc += phi_r(std::abs(z) / lam, r);
    return acc / static_cast<double>(M);
  };
  // Phi_r^{-1}(M) by bisection on [0, M] (Phi_r(t) >= t)
  double tlo = 0.0, thi = static_cast<double>(M);
  for (int it = 0; it < 200; ++it) {
    double mid = 0.5 * (tlo + thi);
    (phi_r(mid, r) < static_cast<double>(M) ? tlo : thi) = mid;
  }
  double lo = vmax / thi;                                 // mean_phi(lo) >= 1
  double hi = vmax * std::pow(1.0 + std::log1p(vmax), r);  // usually mean_phi(hi) <= 1
  while (mean_phi(hi) > 1.0) hi *= 2.0;
  for (int it = 0; it < 200 && (hi - lo) > 1e-6 * hi; ++it) {
    double mid = 0.5 * (lo + hi);
    (mean_phi(mid) > 1.0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

double zygmund_functional(const GridSamples& samples) {
  double acc = 0.0;
  for (const auto& z : samples.values) {
    double a = std::abs(z);
    acc += a * std::sqrt(std::log(M_E + a));
  }
  return 1.0 + acc / static_cast<double>(samples.grid_size());
}

}  // namespace lplab
