#pragma once

#include <complex>
#include <vector>

namespace lplab {

bool is_power_of_two(std::size_t n);
std::size_t next_power_of_two(std::size_t n);

// In-place radix-2 transform, data.size() must be a power of two.
// sign = -1: forward (e^{-i...}), sign = +1: inverse kernel. Unnormalized.
void fft_pow2(std::vector<std::complex<double>>& data, int sign);

// Unnormalized DFT for arbitrary sizes (O(n^2) fallback).
std::vector<std::complex<double>> dft_direct(const std::vector<std::complex<double>>& in,
                                             int sign);

}  // namespace lplab
