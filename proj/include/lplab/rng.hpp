#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <string>

namespace lplab {

// Counter-based generator: the k-th output depends only on (seed, k), so
// streams are reproducible and safe to draw from concurrently.
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline std::uint64_t hash_combine(std::uint64_t seed, std::uint64_t v) {
  return splitmix64(seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2)));
}

inline std::uint64_t hash_string(std::uint64_t seed, const std::string& s) {
  std::uint64_t h = seed;
  for (unsigned char c : s) h = hash_combine(h, c);
  return h;
}

class CounterRng {
 public:
  explicit CounterRng(std::uint64_t seed) : seed_(seed) {}

  std::uint64_t next_u64() { return splitmix64(seed_ + 0x632be59bd9b4e019ULL * ++counter_); }

  // uniform in (0,1)
  double next_uniform() {
    return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
  }

  int next_sign() { return (next_u64() & 1u) ? 1 : -1; }

  double next_gaussian() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u = next_uniform(), v = next_uniform();
    double r = std::sqrt(-2.0 * std::log(u));
    spare_ = r * std::sin(2.0 * M_PI * v);
    have_spare_ = true;
    return r * std::cos(2.0 * M_PI * v);
  }

  std::complex<double> next_complex_gaussian() {
    double re = next_gaussian(), im = next_gaussian();
    return {re, im};
  }

 private:
  std::uint64_t seed_;
  std::uint64_t counter_ = 0;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace lplab
