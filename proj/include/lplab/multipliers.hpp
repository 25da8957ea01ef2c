#pragma once

#include <cstdint>
#include <vector>

#include "lplab/sequences.hpp"
#include "lplab/trig_poly.hpp"

namespace lplab {

// Real multiplier symbol on an integer window; zero outside the window.
struct SymbolTable {
  long long window_lo = 0;
  long long window_hi = -1;
  std::vector<double> values;
  bool is_even_extension = false;  // metadata: built even around 0
  bool degenerate_ramp = false;    // flagged when a ramp has no interior

  double at(long long n) const {
    if (n < window_lo || n > window_hi) return 0.0;
    return values[static_cast<std::size_t>(n - window_lo)];
  }
};

struct SignVector {
  std::vector<int> signs;  // entries in {-1, +1}
  std::uint64_t seed = 0;
};

SignVector make_sign_vector(std::size_t count, std::uint64_t seed);

// Sharp projection symbol: j = 0 is the indicator of {-l0+1, ..., l0-1};
// j >= 1 is the indicator of +-[l_{j-1}, l_j - 1].
SymbolTable sharp_symbol(const LacunarySequence& seq, std::size_t j);

// Trapezoidal symbol: plateau 1 on [l_{j-1}, l_j], affine ramps to 0 at
// l_{j-2} and l_{j+1}, extended evenly. j = 1 uses l_{-1} = floor(l0/rho).
// Valid j: 0 .. num_terms-2.
SymbolTable smoothed_symbol(const LacunarySequence& seq, std::size_t j);

// output coefficient at n = symbol(n) * f_hat(n)
TrigPoly apply(const SymbolTable& symbol, const TrigPoly& f);

// sup over the window (extended by one on each side) of |n| |m(n+1) - m(n)|
double mikhlin_constant(const SymbolTable& symbol);

// sum_j signs[j] * symbol_j; smoothed symbols run over j = 0..num_terms-2,
// sharp over j = 0..num_terms-1
SymbolTable randomized_sum(const LacunarySequence& seq, const SignVector& signs, bool smoothed);

std::size_t num_sharp_symbols(const LacunarySequence& seq);
std::size_t num_smoothed_symbols(const LacunarySequence& seq);

}  // namespace lplab
