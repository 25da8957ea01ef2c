#include <doctest.h>

#include <cmath>

#include "lplab/kernels.hpp"
#include "lplab/norms.hpp"

using namespace lplab;

namespace {

GridSamples constant_samples(double c, std::size_t M) {
  GridSamples s;
  s.values.assign(M, cplx(c, 0.0));
  return s;
}

double phi_r(double t, double r) { return t * std::pow(1.0 + std::log1p(t), r); }

// independent scalar root finder for phi_r(c / lambda) = 1, bisection on a
// wide bracket
double luxemburg_constant_oracle(double c, double r) {
  double lo = 1e-12, hi = 1e12;
  for (int it = 0; it < 200; ++it) {
    double mid = 0.5 * (lo + hi);
    (phi_r(c / mid, r) > 1.0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace

TEST_CASE("lp_norm basics") {
  CHECK(lp_norm(constant_samples(1.0, 64), 1.0) == doctest::Approx(1.0));
  CHECK(lp_norm(constant_samples(1.0, 64), 3.7) == doctest::Approx(1.0));

  TrigPoly mode;
  mode.set(5, 1.0);
  CHECK(lp_norm(mode, 1.3) == doctest::Approx(1.0).epsilon(1e-12));

  CHECK_THROWS(lp_norm(constant_samples(1.0, 8), 0.5));
}

TEST_CASE("lp_norm of a Dirichlet block matches a fine-grid oracle") {
  TrigPoly d = dirichlet_block(0, 64);
  const double coarse = lp_norm(d, 1.0);
  const double fine = lp_norm(evaluate(d, 1 << 18), 1.0);
  CHECK(std::abs(coarse - fine) <= 0.02 * fine);
}

TEST_CASE("l2_norm_parseval closed forms") {
  TrigPoly e7;
  e7.set(7, 1.0);
  CHECK(l2_norm_parseval(e7) == doctest::Approx(1.0));

  TrigPoly pyth;
  pyth.set(2, 3.0);
  pyth.set(-5, 4.0);
  CHECK(l2_norm_parseval(pyth) == doctest::Approx(5.0));

  double sum = 0.0;
  for (int j = -9; j <= 9; ++j) {
    double c = 1.0 - std::abs(j) / 10.0;
    sum += c * c;
  }
  CHECK(l2_norm_parseval(fejer(9)) == doctest::Approx(std::sqrt(sum)).epsilon(1e-12));
}

TEST_CASE("weak_l1") {
  CHECK(weak_l1(constant_samples(1.0, 32)) == doctest::Approx(1.0));

  TrigPoly mode;
  mode.set(3, 1.0);
  CHECK(weak_l1(evaluate(mode, 16)) == doctest::Approx(1.0).epsilon(1e-12));

  GridSamples s;
  s.values = {cplx(4, 0), cplx(2, 0), cplx(1, 0), cplx(1, 0)};
  CHECK(weak_l1(s) == doctest::Approx(1.0));
}

TEST_CASE("llogl_norm against a scalar oracle") {
  GridSamples zero;
  zero.values.assign(16, cplx(0.0, 0.0));
  CHECK(llogl_norm(zero, 0.5) == 0.0);

  for (double c : {1.0, 0.3, 7.5}) {
    for (double r : {0.5, 1.0}) {
      const double got = llogl_norm(constant_samples(c, 32), r);
      const double want = luxemburg_constant_oracle(c, r);
      CHECK(got == doctest::Approx(want).epsilon(1e-5));
    }
  }

  // the Luxemburg norm is positively homogeneous
  const double r = 0.5;
  GridSamples g, g2;
  for (int k = 0; k < 32; ++k) {
    g.values.push_back(cplx(0.25 * k, 0.0));
    g2.values.push_back(cplx(0.75 * k, 0.0));
  }
  CHECK(llogl_norm(g2, r) == doctest::Approx(3.0 * llogl_norm(g, r)).epsilon(1e-6));
}

TEST_CASE("llogl_norm is strictly increasing in the scale") {
  double prev = 0.0;
  for (double c : {0.5, 1.0, 2.0, 4.0, 8.0}) {
    double cur = llogl_norm(constant_samples(c, 16), 0.5);
    CHECK(cur > prev);
    prev = cur;
  }
}

TEST_CASE("zygmund_functional") {
  GridSamples zero;
  zero.values.assign(8, cplx(0.0, 0.0));
  CHECK(zygmund_functional(zero) == doctest::Approx(1.0));

  CHECK(zygmund_functional(constant_samples(1.0, 8)) ==
        doctest::Approx(1.0 + std::sqrt(std::log(M_E + 1.0))).epsilon(1e-12));

  TrigPoly f = extremal_fN(256);
  const double coarse = zygmund_functional(evaluate(f, default_grid_size(f)));
  const double fine = zygmund_functional(evaluate(f, 1 << 18));
  CHECK(std::abs(coarse - fine) <= 0.02 * fine);
}

TEST_CASE("quadrature convergence and Parseval consistency on the corpus") {
  std::vector<TrigPoly> corpus{fejer(16), fejer(64),     dirichlet_block(0, 64),
                               extremal_fN(32),          extremal_fN(128),
                               dirichlet_block(50, 100)};
  for (const auto& f : corpus) {
    const std::size_t M = default_grid_size(f);
    for (double p : {1.0, 2.0, 3.0, 4.0}) {
      const double a = lp_norm(evaluate(f, M), p);
      const double b = lp_norm(evaluate(f, 2 * M), p);
      CHECK(std::abs(a - b) <= 0.01 * b);
    }
    const double l2 = l2_norm_parseval(f);
    CHECK(std::abs(lp_norm(evaluate(f, default_grid_size(f, 4)), 2.0) - l2) <= 1e-6 * l2);

    // Hoelder chain on the probability space
    GridSamples s = evaluate(f, M);
    const double l1 = lp_norm(s, 1.0);
    CHECK(weak_l1(s) <= l1 * (1.0 + 1e-12));
    double prev = l1;
    for (double p : {1.5, 2.0, 3.0}) {
      double cur = lp_norm(s, p);
      CHECK(prev <= cur * (1.0 + 1e-12));
      prev = cur;
    }
  }
}
