#pragma once

#include <string>
#include <vector>

namespace lplab {

// Finite prefix of a strictly increasing sequence of positive integers.
struct LacunarySequence {
  std::vector<long long> terms;
  std::string label;

  std::size_t size() const { return terms.size(); }
  long long max_term() const { return terms.empty() ? 0 : terms.back(); }
  void validate() const;  // throws unless strictly increasing and >= 1
};

struct SequenceStats {
  double rho = 0.0;   // inf of successive ratios over the prefix
  long long sigma = 0;
  std::size_t num_terms = 0;
  long long max_term = 0;
};

// inf_j terms[j+1]/terms[j]; +infinity for a single term
double ratio(const LacunarySequence& seq);

// max count of terms in any closed dyadic block {2^{N-1}, ..., 2^N}
long long sigma(const LacunarySequence& seq);

SequenceStats stats(const LacunarySequence& seq);

// Terms ceil(ltilde^{j+j0}), ltilde = lambda^{7/4}, with j0 the smallest j
// such that ltilde^j/(ltilde^j+1) >= lambda/ltilde. Requires lambda^3 < 2.
// Postconditions checked: 1 < lambda_0*(lambda-1) < 4 and
// lambda <= lambda_{j+1}/lambda_j < lambda^3.
LacunarySequence construct_near_ratio(double lambda, std::size_t count);

// Same geometric construction shifted so the first term is the largest
// term < anchor; extends until a term >= cover_hi. Used by the desk-scale
// scans, which pin the lowest block near the test function's spectrum.
LacunarySequence rescaled_near_ratio(double lambda, long long anchor, long long cover_hi);

// Sorted union of seq, the powers of two in [8, max_term], and equal split
// points for every gap longer than 2^{j-3} inside dyadic block [2^{j-1}, 2^j).
// Requires terms[0] >= 8 and ratio > 1.
LacunarySequence refine(const LacunarySequence& seq);

// lambda_j = M + j*floor(M/sigma) for j < sigma, then tripling while <= 16*M.
// M must be a power of two, 2 <= sigma <= M.
LacunarySequence sigma_block_example(long long sigma, long long M);

// Greedy first-fit split into parts with ratio >= 2 (strict doubling rule).
// Parts are disjoint, their sorted union is the input, and the part count
// is at most 2*sigma + 2.
std::vector<LacunarySequence> decompose_into_lacunary(const LacunarySequence& seq);

// #A_N for the asymptotic pairing N = ceil(e^{4/(lambda-1)}), where
// A_N = { j : N <= ceil(ltilde^{j+j0}) <= 2N }, evaluated in 256-bit
// arithmetic. No polynomial is ever built at this scale.
long long cardinality_AN_exact(double lambda);

// 200-bit re-evaluation of the j0 bracket used by construct_near_ratio;
// returns true when the double-precision j0 satisfies both sides.
bool check_j0_bigfloat(double lambda, long long j0);

// j0 as used by construct_near_ratio (exposed for the big-float oracle).
long long construct_j0(double lambda);

}  // namespace lplab
