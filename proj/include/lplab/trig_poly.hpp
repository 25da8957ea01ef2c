#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

namespace lplab {

using cplx = std::complex<double>;

// Finitely supported Fourier coefficients on Z. Coefficient convention:
// f(x) = sum_n c[n] e^{inx},  c[n] = (2*pi)^{-1} integral f e^{-inx} dx.
class TrigPoly {
 public:
  TrigPoly() = default;

  void set(long long n, cplx c);
  void add(long long n, cplx c);
  cplx coeff(long long n) const;

  const std::map<long long, cplx>& coeffs() const& { return coeffs_; }
  const std::map<long long, cplx>& coeffs() const&& = delete;  // would dangle
  bool empty() const { return coeffs_.empty(); }
  long long freq_lo() const;  // 0 for the zero polynomial
  long long freq_hi() const;
  long long max_abs_freq() const;
  bool is_analytic() const { return empty() || freq_lo() >= 0; }

  TrigPoly modulate(long long shift) const;  // multiply by e^{i*shift*x}

 private:
  std::map<long long, cplx> coeffs_;
};

struct GridSamples {
  std::vector<cplx> values;  // values[k] = f(2*pi*k/M), M = values.size()
  std::size_t grid_size() const { return values.size(); }
};

// Default grid: smallest power of two >= 8 * (support width), at least 16.
std::size_t default_grid_size(const TrigPoly& f, std::size_t oversampling = 8);

// values[k] = sum_n c[n] e^{i n 2 pi k / M}. Requires M >= 2*max|freq|+1.
GridSamples evaluate(const TrigPoly& f, std::size_t M);

// Inverse of evaluate: recovers coefficients on frequencies in
// [-(M-1)/2, M/2] from alias-free samples.
TrigPoly forward_transform(const GridSamples& samples);

// 2-D coefficients on Z^2, same conventions per axis.
class TrigPoly2D {
 public:
  void set(long long n1, long long n2, cplx c);
  cplx coeff(long long n1, long long n2) const;
  const std::map<std::pair<long long, long long>, cplx>& coeffs() const& { return coeffs_; }
  const std::map<std::pair<long long, long long>, cplx>& coeffs() const&& = delete;
  bool empty() const { return coeffs_.empty(); }
  long long max_abs_freq(int axis) const;
  bool is_analytic() const;

  static TrigPoly2D tensor(const TrigPoly& g, const TrigPoly& h);

 private:
  std::map<std::pair<long long, long long>, cplx> coeffs_;
};

struct GridSamples2D {
  std::vector<cplx> values;  // row-major, values[k1 * M2 + k2]
  std::size_t M1 = 0, M2 = 0;
};

GridSamples2D evaluate_2d(const TrigPoly2D& f, std::size_t M1, std::size_t M2);

}  // namespace lplab
