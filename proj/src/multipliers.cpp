#include "lplab/multipliers.hpp"

#include <cmath>
#include <stdexcept>

#include "lplab/rng.hpp"

namespace lplab {

SignVector make_sign_vector(std::size_t count, std::uint64_t seed) {
  CounterRng rng(seed);
  SignVector sv;
  sv.seed = seed;
  sv.signs.reserve(count);
  for (std::size_t i = 0; i < count; ++i) sv.signs.push_back(rng.next_sign());
  return sv;
}

std::size_t num_sharp_symbols(const LacunarySequence& seq) { return seq.size(); }

std::size_t num_smoothed_symbols(const LacunarySequence& seq) {
  return seq.size() < 2 ? 0 : seq.size() - 1;
}

SymbolTable sharp_symbol(const LacunarySequence& seq, std::size_t j) {
  seq.validate();
  if (j >= seq.size()) throw std::out_of_range("sharp_symbol: index out of range");
  SymbolTable s;
  s.is_even_extension = true;
  if (j == 0) {
    const long long l0 = seq.terms[0];
    s.window_lo = -l0 + 1;
    s.window_hi = l0 - 1;
    s.values.assign(static_cast<std::size_t>(2 * l0 - 1), 1.0);
    return s;
  }
  const long long a = seq.terms[j - 1], b = seq.terms[j];
  s.window_lo = -b + 1;
  s.window_hi = b - 1;
  s.values.assign(static_cast<std::size_t>(2 * b - 1), 0.0);
  for (long long n = a; n <= b - 1; ++n) {
    s.values[static_cast<std::size_t>(n - s.window_lo)] = 1.0;
    s.values[static_cast<std::size_t>(-n - s.window_lo)] = 1.0;
  }
  return s;
}

SymbolTable smoothed_symbol(const LacunarySequence& seq, std::size_t j) {
  seq.validate();
  if (seq.size() < 2 || j > seq.size() - 2)
    throw std::out_of_range("smoothed_symbol: index out of range (needs lambda_{j+1})");
  SymbolTable s;
  s.is_even_extension = true;
  if (j == 0) {
    const long long l0 = seq.terms[0], l1 = seq.terms[1];
    s.window_lo = -l1 + 1;
    s.window_hi = l1 - 1;
    s.values.assign(static_cast<std::size_t>(2 * l1 - 1), 0.0);
    for (long long n = 0; n <= l1 - 1; ++n) {
      double v = n <= l0 ? 1.0
                         : static_cast<double>(l1 - n) / static_cast<double>(l1 - l0);
      s.values[static_cast<std::size_t>(n - s.window_lo)] = v;
      s.values[static_cast<std::size_t>(-n - s.window_lo)] = v;
    }
    s.degenerate_ramp = (l1 == l0 + 1);
    return s;
  }
  long long lm2;  // lambda_{j-2}, with the j = 1 convention
  if (j == 1) {
    lm2 = static_cast<long long>(std::floor(static_cast<double>(seq.terms[0]) / ratio(seq)));
    if (lm2 < 1)
      throw std::invalid_argument("smoothed_symbol: degenerate lambda_{-1} (lambda_0 < rho)");
  } else {
    lm2 = seq.terms[j - 2];
  }
  const long long lm1 = seq.terms[j - 1], l = seq.terms[j], lp1 = seq.terms[j + 1];
  s.window_lo = -lp1 + 1;
  s.window_hi = lp1 - 1;
  s.values.assign(static_cast<std::size_t>(2 * lp1 - 1), 0.0);
  for (long long n = lm2 + 1; n <= lp1 - 1; ++n) {
    double v;
    if (n < lm1)
      v = static_cast<double>(n - lm2) / static_cast<double>(lm1 - lm2);
    else if (n <= l)
      v = 1.0;
    else
      v = static_cast<double>(lp1 - n) / static_cast<double>(lp1 - l);
    s.values[static_cast<std::size_t>(n - s.window_lo)] = v;
    s.values[static_cast<std::size_t>(-n - s.window_lo)] = v;
  }
  s.degenerate_ramp = (lm1 == lm2 + 1) || (lp1 == l + 1);
  return s;
}

TrigPoly apply(const SymbolTable& symbol, const TrigPoly& f) {
  TrigPoly out;
  for (const auto& [n, c] : f.coeffs()) {
    double m = symbol.at(n);
    if (m != 0.0) out.set(n, m * c);
  }
  return out;
}

double mikhlin_constant(const SymbolTable& symbol) {
  double best = 0.0;
  for (long long n = symbol.window_lo - 1; n <= symbol.window_hi; ++n) {
    double d = std::abs(symbol.at(n + 1) - symbol.at(n));
    best = std::max(best, static_cast<double>(std::llabs(n)) * d);
  }
  return best;
}

SymbolTable randomized_sum(const LacunarySequence& seq, const SignVector& signs, bool smoothed) {
  seq.validate();
  const std::size_t count = smoothed ? num_smoothed_symbols(seq) : num_sharp_symbols(seq);
  if (signs.signs.size() < count)
    throw std::invalid_argument("randomized_sum: sign vector shorter than symbol count");
  SymbolTable sum;
  sum.is_even_extension = true;
  const long long hi = seq.max_term() - 1;
  sum.window_lo = -hi;
  sum.window_hi = hi;
  sum.values.assign(static_cast<std::size_t>(2 * hi + 1), 0.0);
  for (std::size_t j = 0; j < count; ++j) {
    SymbolTable s = smoothed ? smoothed_symbol(seq, j) : sharp_symbol(seq, j);
    sum.degenerate_ramp = sum.degenerate_ramp || s.degenerate_ramp;
    for (long long n = s.window_lo; n <= s.window_hi; ++n)
      sum.values[static_cast<std::size_t>(n - sum.window_lo)] +=
          static_cast<double>(signs.signs[j]) * s.at(n);
  }
  return sum;
}

}  // namespace lplab
