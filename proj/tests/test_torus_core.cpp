#include <doctest.h>

#include <cmath>
#include <complex>

#include "lplab/fft.hpp"
#include "lplab/kernels.hpp"
#include "lplab/norms.hpp"
#include "lplab/trig_poly.hpp"

using namespace lplab;

namespace {

std::vector<TrigPoly> corpus() {
  std::vector<TrigPoly> out;
  out.push_back(fejer(16));
  out.push_back(fejer(64));
  out.push_back(dirichlet_block(0, 64));
  out.push_back(dirichlet_block(100, 32));
  out.push_back(extremal_fN(32));
  out.push_back(extremal_fN(128));
  out.push_back(random_analytic(100, 42));
  return out;
}

}  // namespace

TEST_CASE("evaluate: constant polynomial") {
  TrigPoly f;
  f.set(0, 1.0);
  GridSamples s = evaluate(f, 8);
  for (const auto& v : s.values) CHECK(std::abs(v - cplx(1.0, 0.0)) < 1e-14);
}

TEST_CASE("evaluate: single mode e^{i3x} on M=8") {
  TrigPoly f;
  f.set(3, 1.0);
  GridSamples s = evaluate(f, 8);
  for (std::size_t k = 0; k < 8; ++k) {
    cplx expected = std::polar(1.0, 3.0 * 2.0 * M_PI * static_cast<double>(k) / 8.0);
    CHECK(std::abs(s.values[k] - expected) < 1e-13);
  }
}

TEST_CASE("evaluate: Fejer kernel value at zero is n+1") {
  GridSamples s = evaluate(fejer(4), 16);
  CHECK(s.values[0].real() == doctest::Approx(5.0).epsilon(1e-13));
  CHECK(std::abs(s.values[0].imag()) < 1e-13);
}

TEST_CASE("evaluate rejects aliasing grids") {
  TrigPoly f;
  f.set(10, 1.0);
  CHECK_THROWS(evaluate(f, 16));
  CHECK_NOTHROW(evaluate(f, 21));
}

TEST_CASE("round trip: forward transform recovers coefficients") {
  for (const auto& f : corpus()) {
    const std::size_t M = default_grid_size(f);
    TrigPoly back = forward_transform(evaluate(f, M));
    double worst = 0.0, scale = 0.0;
    for (const auto& [n, c] : f.coeffs()) {
      worst = std::max(worst, std::abs(back.coeff(n) - c));
      scale = std::max(scale, std::abs(c));
    }
    for (const auto& [n, c] : back.coeffs()) worst = std::max(worst, std::abs(f.coeff(n) - c));
    CHECK(worst <= 1e-10 * scale);
  }
}

TEST_CASE("fft agrees with direct DFT") {
  std::vector<cplx> data(32);
  for (std::size_t k = 0; k < data.size(); ++k)
    data[k] = cplx(std::sin(0.37 * static_cast<double>(k)), std::cos(1.1 * static_cast<double>(k)));
  auto direct = dft_direct(data, -1);
  auto fast = data;
  fft_pow2(fast, -1);
  for (std::size_t k = 0; k < data.size(); ++k) CHECK(std::abs(direct[k] - fast[k]) < 1e-10);
}

TEST_CASE("modulate") {
  TrigPoly one;
  one.set(0, 1.0);
  CHECK(one.modulate(5).coeff(5) == cplx(1.0, 0.0));

  TrigPoly e2;
  e2.set(2, 1.0);
  TrigPoly back = e2.modulate(-2);
  CHECK(back.coeff(0) == cplx(1.0, 0.0));
  CHECK(back.coeffs().size() == 1);

  CHECK(de_la_vallee_poussin(8).modulate(17).coeff(17) == cplx(1.0, 0.0));
}

TEST_CASE("TrigPoly drops zero coefficients and tracks support") {
  TrigPoly f;
  f.set(3, 1.0);
  f.add(3, -1.0);
  CHECK(f.empty());
  f.set(-2, 1.0);
  f.set(7, 2.0);
  CHECK(f.freq_lo() == -2);
  CHECK(f.freq_hi() == 7);
  CHECK(f.max_abs_freq() == 7);
  CHECK_FALSE(f.is_analytic());
}

TEST_CASE("2-D tensor evaluation matches 1-D products") {
  TrigPoly gx = fejer(6);
  TrigPoly hy = dirichlet_block(0, 5);
  TrigPoly2D f = TrigPoly2D::tensor(gx, hy);
  const std::size_t M = 32;
  GridSamples2D s2 = evaluate_2d(f, M, M);
  GridSamples sx = evaluate(gx, M);
  GridSamples sy = evaluate(hy, M);
  double worst = 0.0;
  for (std::size_t i = 0; i < M; ++i)
    for (std::size_t j = 0; j < M; ++j)
      worst = std::max(worst, std::abs(s2.values[i * M + j] - sx.values[i] * sy.values[j]));
  CHECK(worst < 1e-11);
}
