#include "lplab/kernels.hpp"

#include <cstdlib>
#include <stdexcept>

#include "lplab/norms.hpp"
#include "lplab/rng.hpp"

namespace lplab {

TrigPoly fejer(long long n) {
  if (n < 0) throw std::invalid_argument("fejer: n < 0");
  TrigPoly out;
  for (long long j = -n; j <= n; ++j)
    out.set(j, cplx(1.0 - static_cast<double>(std::llabs(j)) / static_cast<double>(n + 1), 0.0));
  return out;
}

TrigPoly de_la_vallee_poussin(long long N) {
  if (N < 1) throw std::invalid_argument("de_la_vallee_poussin: N < 1");
  // 2*K_{2N+1} - K_N; written out directly so the plateau is exactly 1
  TrigPoly out;
  for (long long n = -(2 * N + 1); n <= 2 * N + 1; ++n) {
    const long long a = std::llabs(n);
    const double c = a <= N + 1
                         ? 1.0
                         : 2.0 * (1.0 - static_cast<double>(a) / static_cast<double>(2 * N + 2));
    out.set(n, cplx(c, 0.0));
  }
  return out;
}

TrigPoly extremal_fN(long long N) {
  if (N < 1) throw std::invalid_argument("extremal_fN: N < 1");
  return de_la_vallee_poussin(N).modulate(2 * N + 1);
}

TrigPoly extremal_fM(long long M) { return extremal_fN(M); }

TrigPoly dirichlet_block(long long lo, long long len) {
  if (len < 1) throw std::invalid_argument("dirichlet_block: len < 1");
  TrigPoly out;
  for (long long n = lo; n < lo + len; ++n) out.set(n, cplx(1.0, 0.0));
  return out;
}

TrigPoly random_analytic(long long deg, std::uint64_t seed) {
  if (deg < 1) throw std::invalid_argument("random_analytic: deg < 1");
  CounterRng rng(seed);
  TrigPoly out;
  for (long long n = 0; n <= deg; ++n) out.set(n, rng.next_complex_gaussian());
  double norm = l2_norm_parseval(out);
  TrigPoly scaled;
  for (const auto& [n, c] : out.coeffs()) scaled.set(n, c / norm);
  return scaled;
}

}  // namespace lplab
