#pragma once

#include <cstdint>

#include "lplab/trig_poly.hpp"

namespace lplab {

// Fejer kernel K_n: coefficients (1 - |j|/(n+1)) on |j| <= n
TrigPoly fejer(long long n);

// de la Vallee Poussin kernel V_N = 2 K_{2N+1} - K_N
TrigPoly de_la_vallee_poussin(long long N);

// f_N = e^{i(2N+1)x} V_N: analytic, unit coefficients on [N, 3N+2]
TrigPoly extremal_fN(long long N);
TrigPoly extremal_fM(long long M);

// sum_{n=lo}^{lo+len-1} e^{inx}
TrigPoly dirichlet_block(long long lo, long long len);

// i.i.d. complex Gaussian coefficients on 0..deg, normalized to unit l2
TrigPoly random_analytic(long long deg, std::uint64_t seed);

}  // namespace lplab
