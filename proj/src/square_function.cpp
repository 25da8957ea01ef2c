#include "lplab/square_function.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "lplab/fft.hpp"
#include "lplab/norms.hpp"

namespace lplab {

GridSamples SquareFunctionResult::as_grid() const {
  GridSamples g;
  g.values.reserve(samples.size());
  for (double v : samples) g.values.emplace_back(v, 0.0);
  return g;
}

GridSamples2D SquareFunction2DResult::as_grid() const {
  GridSamples2D g;
  g.M1 = M1;
  g.M2 = M2;
  g.values.reserve(samples.size());
  for (double v : samples) g.values.emplace_back(v, 0.0);
  return g;
}

void check_coverage(const LacunarySequence& seq, const TrigPoly& f) {
  seq.validate();
  const long long need = f.max_abs_freq();
  if (need > seq.max_term() - 1)
    throw std::invalid_argument("square_function: support reaches |n|=" + std::to_string(need) +
                                ", needs a top term >= " + std::to_string(need + 1));
}

namespace {

SquareFunctionResult square_function_impl(const LacunarySequence& seq, const TrigPoly& f,
                                          std::size_t grid, bool parallel) {
  check_coverage(seq, f);
  const std::size_t M = grid ? grid : default_grid_size(f);
  const std::size_t J = num_sharp_symbols(seq);

  SquareFunctionResult res;
  res.grid_size = M;
  res.blocks_used = J;
  res.per_block_l2.assign(J, 0.0);
  res.samples.assign(M, 0.0);

  // block projections are independent; keep them in index order so the
  // per-sample reduction is deterministic
  std::vector<std::vector<cplx>> blocks(J);
#pragma omp parallel for schedule(dynamic) if (parallel)
  for (std::size_t j = 0; j < J; ++j) {
    TrigPoly pj = apply(sharp_symbol(seq, j), f);
    res.per_block_l2[j] = l2_norm_parseval(pj);
    if (!pj.empty()) blocks[j] = evaluate(pj, M).values;
  }
  for (std::size_t j = 0; j < J; ++j) {
    if (blocks[j].empty()) continue;
    const std::vector<cplx>& b = blocks[j];
#pragma omp parallel for schedule(static) if (parallel)
    for (std::size_t k = 0; k < M; ++k) res.samples[k] += std::norm(b[k]);
  }
#pragma omp parallel for schedule(static) if (parallel)
  for (std::size_t k = 0; k < M; ++k) res.samples[k] = std::sqrt(res.samples[k]);
  return res;
}

}  // namespace

SquareFunctionResult square_function(const LacunarySequence& seq, const TrigPoly& f,
                                     std::size_t grid) {
  return square_function_impl(seq, f, grid, true);
}

SquareFunctionResult square_function_serial(const LacunarySequence& seq, const TrigPoly& f,
                                            std::size_t grid) {
  return square_function_impl(seq, f, grid, false);
}

SquareFunction2DResult square_function_2d(const LacunarySequence& seq1,
                                          const LacunarySequence& seq2, const TrigPoly2D& f) {
  seq1.validate();
  seq2.validate();
  if (f.max_abs_freq(0) > seq1.max_term() - 1 || f.max_abs_freq(1) > seq2.max_term() - 1)
    throw std::invalid_argument("square_function_2d: support not covered per axis");
  const std::size_t M1 = next_power_of_two(
      std::max<std::size_t>(16, 8 * static_cast<std::size_t>(2 * f.max_abs_freq(0) + 1)));
  const std::size_t M2 = next_power_of_two(
      std::max<std::size_t>(16, 8 * static_cast<std::size_t>(2 * f.max_abs_freq(1) + 1)));
  const std::size_t J1 = num_sharp_symbols(seq1), J2 = num_sharp_symbols(seq2);

  SquareFunction2DResult res;
  res.M1 = M1;
  res.M2 = M2;
  res.blocks_used = J1 * J2;
  res.samples.assign(M1 * M2, 0.0);
  for (std::size_t j1 = 0; j1 < J1; ++j1) {
    SymbolTable s1 = sharp_symbol(seq1, j1);
    for (std::size_t j2 = 0; j2 < J2; ++j2) {
      SymbolTable s2 = sharp_symbol(seq2, j2);
      TrigPoly2D pj;
      for (const auto& [nn, c] : f.coeffs()) {
        double m = s1.at(nn.first) * s2.at(nn.second);
        if (m != 0.0) pj.set(nn.first, nn.second, m * c);
      }
      if (pj.empty()) continue;
      GridSamples2D g = evaluate_2d(pj, M1, M2);
      for (std::size_t k = 0; k < res.samples.size(); ++k) res.samples[k] += std::norm(g.values[k]);
    }
  }
  for (double& v : res.samples) v = std::sqrt(v);
  return res;
}

TrigPoly randomized_operator(const LacunarySequence& seq, const SignVector& signs,
                             const TrigPoly& f, bool smoothed) {
  check_coverage(seq, f);
  return apply(randomized_sum(seq, signs, smoothed), f);
}

DominationReport domination_check(const LacunarySequence& seq, const LacunarySequence& refined,
                                  const TrigPoly& f) {
  seq.validate();
  refined.validate();
  for (long long t : seq.terms)
    if (!std::binary_search(refined.terms.begin(), refined.terms.end(), t))
      throw std::invalid_argument("domination_check: refined sequence must contain the original");

  // m = max number of refined sub-blocks inside one original block
  long long m = 0;
  auto count_in = [&](long long lo, long long hi) {  // refined blocks within (lo, hi]
    auto a = std::upper_bound(refined.terms.begin(), refined.terms.end(), lo);
    auto b = std::upper_bound(refined.terms.begin(), refined.terms.end(), hi);
    return static_cast<long long>(b - a);
  };
  m = std::max(m, count_in(0, seq.terms[0]));
  for (std::size_t j = 1; j < seq.size(); ++j)
    m = std::max(m, count_in(seq.terms[j - 1], seq.terms[j]));

  const std::size_t M = default_grid_size(f);
  SquareFunctionResult coarse = square_function(seq, f, M);
  SquareFunctionResult fine = square_function(refined, f, M);

  DominationReport rep;
  rep.max_subblocks = m;
  rep.cap = std::sqrt(static_cast<double>(m));
  for (std::size_t k = 0; k < M; ++k) {
    double a = coarse.samples[k], b = fine.samples[k];
    double r = (a < 1e-13 && b < 1e-13) ? 1.0 : a / b;
    rep.max_ratio = std::max(rep.max_ratio, r);
  }
  rep.within_cap = rep.max_ratio <= rep.cap * (1.0 + 1e-9);
  return rep;
}

}  // namespace lplab
