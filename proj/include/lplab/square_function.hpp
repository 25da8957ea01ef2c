#pragma once

#include "lplab/multipliers.hpp"
#include "lplab/sequences.hpp"
#include "lplab/trig_poly.hpp"

namespace lplab {

struct SquareFunctionResult {
  std::vector<double> samples;        // S(f)(x_k) >= 0
  std::vector<double> per_block_l2;   // l2 norm of each block projection
  std::size_t grid_size = 0;
  std::size_t blocks_used = 0;

  GridSamples as_grid() const;
};

// Throws unless f's support lies in {-l_J+1, ..., l_J-1}; the message names
// the smallest required top term.
void check_coverage(const LacunarySequence& seq, const TrigPoly& f);

// S(f)(x_k) = (sum_j |Delta_j(f)(x_k)|^2)^{1/2}, sharp projections.
// grid 0 selects the default (oversampling 8 on f's support).
// The parallel version accumulates block contributions in index order, so
// results are bit-identical to the serial reference for any thread count.
SquareFunctionResult square_function(const LacunarySequence& seq, const TrigPoly& f,
                                     std::size_t grid = 0);
SquareFunctionResult square_function_serial(const LacunarySequence& seq, const TrigPoly& f,
                                            std::size_t grid = 0);

struct SquareFunction2DResult {
  std::vector<double> samples;  // row-major M1 x M2
  std::size_t M1 = 0, M2 = 0;
  std::size_t blocks_used = 0;

  GridSamples2D as_grid() const;
};

SquareFunction2DResult square_function_2d(const LacunarySequence& seq1,
                                          const LacunarySequence& seq2, const TrigPoly2D& f);

// apply(randomized_sum(seq, signs, smoothed), f) with coverage checking
TrigPoly randomized_operator(const LacunarySequence& seq, const SignVector& signs,
                             const TrigPoly& f, bool smoothed);

struct DominationReport {
  double max_ratio = 0.0;   // max over the grid of S^seq / S^refined
  double cap = 0.0;         // sqrt(m)
  long long max_subblocks = 0;  // m from the refinement trace
  bool within_cap = false;
};

// refined must contain every term of seq (e.g. the output of refine()).
DominationReport domination_check(const LacunarySequence& seq, const LacunarySequence& refined,
                                  const TrigPoly& f);

}  // namespace lplab
