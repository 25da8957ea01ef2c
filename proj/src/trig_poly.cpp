#include "lplab/trig_poly.hpp"

#include <cmath>
#include <stdexcept>

#include "lplab/fft.hpp"

namespace lplab {

void TrigPoly::set(long long n, cplx c) {
  if (std::abs(c) == 0.0)
    coeffs_.erase(n);
  else
    coeffs_[n] = c;
}

void TrigPoly::add(long long n, cplx c) {
  auto it = coeffs_.find(n);
  if (it == coeffs_.end()) {
    set(n, c);
  } else {
    it->second += c;
    if (std::abs(it->second) == 0.0) coeffs_.erase(it);
  }
}

cplx TrigPoly::coeff(long long n) const {
  auto it = coeffs_.find(n);
  return it == coeffs_.end() ? cplx(0.0, 0.0) : it->second;
}

long long TrigPoly::freq_lo() const { return coeffs_.empty() ? 0 : coeffs_.begin()->first; }

long long TrigPoly::freq_hi() const { return coeffs_.empty() ? 0 : coeffs_.rbegin()->first; }

long long TrigPoly::max_abs_freq() const {
  if (coeffs_.empty()) return 0;
  return std::max(std::llabs(freq_lo()), std::llabs(freq_hi()));
}

TrigPoly TrigPoly::modulate(long long shift) const {
  TrigPoly out;
  for (const auto& [n, c] : coeffs_) out.set(n + shift, c);
  return out;
}

std::size_t default_grid_size(const TrigPoly& f, std::size_t oversampling) {
  std::size_t width = static_cast<std::size_t>(f.empty() ? 1 : f.freq_hi() - f.freq_lo() + 1);
  std::size_t no_alias = static_cast<std::size_t>(f.empty() ? 1 : 2 * f.max_abs_freq() + 1);
  return next_power_of_two(std::max({std::size_t(16), oversampling * width, no_alias}));
}

GridSamples evaluate(const TrigPoly& f, std::size_t M) {
  if (M == 0) throw std::invalid_argument("evaluate: empty grid");
  if (static_cast<long long>(M) < 2 * f.max_abs_freq() + 1)
    throw std::invalid_argument("evaluate: grid size " + std::to_string(M) +
                                " aliases support up to |n|=" + std::to_string(f.max_abs_freq()));
  std::vector<cplx> buf(M, cplx(0.0, 0.0));
  for (const auto& [n, c] : f.coeffs()) {
    long long idx = ((n % static_cast<long long>(M)) + static_cast<long long>(M)) %
                    static_cast<long long>(M);
    buf[static_cast<std::size_t>(idx)] += c;
  }
  if (is_power_of_two(M))
    fft_pow2(buf, +1);
  else
    buf = dft_direct(buf, +1);
  return GridSamples{std::move(buf)};
}

TrigPoly forward_transform(const GridSamples& samples) {
  const std::size_t M = samples.grid_size();
  if (M == 0) throw std::invalid_argument("forward_transform: empty grid");
  std::vector<cplx> buf = samples.values;
  if (is_power_of_two(M))
    fft_pow2(buf, -1);
  else
    buf = dft_direct(buf, -1);
  TrigPoly out;
  const double inv = 1.0 / static_cast<double>(M);
  double peak = 0.0;
  for (const auto& v : buf) peak = std::max(peak, std::abs(v));
  const double floor = peak * inv * 1e-13;  // FFT round-off, relative to the largest bin
  const long long half = static_cast<long long>(M) / 2;
  for (std::size_t k = 0; k < M; ++k) {
    cplx c = buf[k] * inv;
    if (std::abs(c) <= floor) continue;
    long long n = static_cast<long long>(k);
    if (n > half) n -= static_cast<long long>(M);
    out.set(n, c);
  }
  return out;
}

void TrigPoly2D::set(long long n1, long long n2, cplx c) {
  if (std::abs(c) == 0.0)
    coeffs_.erase({n1, n2});
  else
    coeffs_[{n1, n2}] = c;
}

cplx TrigPoly2D::coeff(long long n1, long long n2) const {
  auto it = coeffs_.find({n1, n2});
  return it == coeffs_.end() ? cplx(0.0, 0.0) : it->second;
}

long long TrigPoly2D::max_abs_freq(int axis) const {
  long long m = 0;
  for (const auto& [nn, c] : coeffs_) {
    (void)c;
    m = std::max(m, std::llabs(axis == 0 ? nn.first : nn.second));
  }
  return m;
}

bool TrigPoly2D::is_analytic() const {
  for (const auto& [nn, c] : coeffs_) {
    (void)c;
    if (nn.first < 0 || nn.second < 0) return false;
  }
  return true;
}

TrigPoly2D TrigPoly2D::tensor(const TrigPoly& g, const TrigPoly& h) {
  TrigPoly2D out;
  for (const auto& [n1, c1] : g.coeffs())
    for (const auto& [n2, c2] : h.coeffs()) out.set(n1, n2, c1 * c2);
  return out;
}

GridSamples2D evaluate_2d(const TrigPoly2D& f, std::size_t M1, std::size_t M2) {
  if (!is_power_of_two(M1) || !is_power_of_two(M2))
    throw std::invalid_argument("evaluate_2d: grid sizes must be powers of two");
  if (static_cast<long long>(M1) < 2 * f.max_abs_freq(0) + 1 ||
      static_cast<long long>(M2) < 2 * f.max_abs_freq(1) + 1)
    throw std::invalid_argument("evaluate_2d: grid too small for support");
  std::vector<cplx> buf(M1 * M2, cplx(0.0, 0.0));
  auto wrap = [](long long n, std::size_t M) {
    return static_cast<std::size_t>(((n % static_cast<long long>(M)) + static_cast<long long>(M)) %
                                    static_cast<long long>(M));
  };
  for (const auto& [nn, c] : f.coeffs()) buf[wrap(nn.first, M1) * M2 + wrap(nn.second, M2)] += c;
  // rows then columns
  std::vector<cplx> tmp(std::max(M1, M2));
  for (std::size_t i = 0; i < M1; ++i) {
    std::vector<cplx> row(buf.begin() + static_cast<long long>(i * M2),
                          buf.begin() + static_cast<long long>((i + 1) * M2));
    fft_pow2(row, +1);
    std::copy(row.begin(), row.end(), buf.begin() + static_cast<long long>(i * M2));
  }
  std::vector<cplx> col(M1);
  for (std::size_t j = 0; j < M2; ++j) {
    for (std::size_t i = 0; i < M1; ++i) col[i] = buf[i * M2 + j];
    fft_pow2(col, +1);
    for (std::size_t i = 0; i < M1; ++i) buf[i * M2 + j] = col[i];
  }
  return GridSamples2D{std::move(buf), M1, M2};
}

}  // namespace lplab
