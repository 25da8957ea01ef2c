// Compares the OpenMP square-function kernel against the serial reference
// on growing problem sizes and verifies bit-identical output.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>

#include "lplab/kernels.hpp"
#include "lplab/norms.hpp"
#include "lplab/sequences.hpp"
#include "lplab/square_function.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace lplab;

static double now_s() {
  using namespace std::chrono;
  return duration<double>(steady_clock::now().time_since_epoch()).count();
}

int main(int argc, char** argv) {
  int repeats = 3;
  if (argc > 1) repeats = std::atoi(argv[1]);
#ifdef _OPENMP
  std::printf("openmp threads: %d\n", omp_get_max_threads());
#else
  std::printf("openmp: disabled at build time\n");
#endif
  std::printf("%-28s %8s %10s %10s %8s %s\n", "case", "blocks", "serial_s", "parallel_s",
              "speedup", "bitwise");
  for (double lambda : {1.05, 1.1}) {
    for (long long N : {2048LL, 8192LL}) {
      LacunarySequence seq = rescaled_near_ratio(lambda, N, 4 * N + 3);
      TrigPoly f = extremal_fN(N);
      double ts = 1e300, tp = 1e300;
      SquareFunctionResult rs, rp;
      for (int r = 0; r < repeats; ++r) {
        double t0 = now_s();
        rs = square_function_serial(seq, f);
        ts = std::min(ts, now_s() - t0);
        t0 = now_s();
        rp = square_function(seq, f);
        tp = std::min(tp, now_s() - t0);
      }
      bool identical = rs.samples == rp.samples;
      std::string name = "fN lambda=" + std::to_string(lambda).substr(0, 4) +
                         " N=" + std::to_string(N);
      std::printf("%-28s %8zu %10.4f %10.4f %8.2f %s\n", name.c_str(), rs.blocks_used, ts, tp,
                  ts / tp, identical ? "yes" : "NO");
      if (!identical) return 1;
    }
  }
  return 0;
}
