#include "lplab/sequences.hpp"

#include <gmp.h>
#include <mpfr.h>

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <set>
#include <stdexcept>

namespace lplab {

void LacunarySequence::validate() const {
  if (terms.empty()) throw std::invalid_argument("sequence: no terms");
  if (terms.front() < 1) throw std::invalid_argument("sequence: terms must be >= 1");
  for (std::size_t k = 0; k + 1 < terms.size(); ++k)
    if (terms[k + 1] <= terms[k])
      throw std::invalid_argument("sequence: terms must be strictly increasing");
}

double ratio(const LacunarySequence& seq) {
  seq.validate();
  if (seq.size() < 2) return std::numeric_limits<double>::infinity();
  double r = std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k + 1 < seq.size(); ++k)
    r = std::min(r, static_cast<double>(seq.terms[k + 1]) / static_cast<double>(seq.terms[k]));
  return r;
}

long long sigma(const LacunarySequence& seq) {
  seq.validate();
  long long best = 0;
  for (int N = 1; (1LL << (N - 1)) <= seq.max_term() && N < 63; ++N) {
    const long long lo = 1LL << (N - 1), hi = 1LL << N;
    auto lo_it = std::lower_bound(seq.terms.begin(), seq.terms.end(), lo);
    auto hi_it = std::upper_bound(seq.terms.begin(), seq.terms.end(), hi);
    best = std::max<long long>(best, hi_it - lo_it);
  }
  return std::max<long long>(best, 1);
}

SequenceStats stats(const LacunarySequence& seq) {
  return SequenceStats{ratio(seq), sigma(seq), seq.size(), seq.max_term()};
}

namespace {

long double lambda_tilde(double lambda) { return powl(static_cast<long double>(lambda), 1.75L); }

long long ceil_pow(long double base, long long e) {
  long double v = powl(base, static_cast<long double>(e));
  if (v >= 4.0e18L) throw std::overflow_error("sequence term exceeds 64-bit range");
  return static_cast<long long>(ceill(v));
}

}  // namespace

long long construct_j0(double lambda) {
  const long double lt = lambda_tilde(lambda);
  const long double target = static_cast<long double>(lambda) / lt;
  for (long long j = 1; j < 100000; ++j) {
    long double p = powl(lt, static_cast<long double>(j));
    if (p / (p + 1.0L) >= target) return j;
  }
  throw std::logic_error("construct_j0: no j0 found");
}

LacunarySequence construct_near_ratio(double lambda, std::size_t count) {
  if (lambda <= 1.0) throw std::invalid_argument("construct_near_ratio: lambda <= 1");
  if (lambda * lambda * lambda >= 2.0)
    throw std::invalid_argument("construct_near_ratio: lambda^3 >= 2");
  if (count < 2) throw std::invalid_argument("construct_near_ratio: count < 2");
  const long double lt = lambda_tilde(lambda);
  const long long j0 = construct_j0(lambda);
  LacunarySequence seq;
  seq.label = "near_ratio(" + std::to_string(lambda) + ")";
  for (std::size_t j = 0; j < count; ++j)
    seq.terms.push_back(ceil_pow(lt, static_cast<long long>(j) + j0));
  seq.validate();
  // construction guarantees, checked on every call
  const double l0 = static_cast<double>(seq.terms[0]);
  if (!(1.0 < l0 * (lambda - 1.0) && l0 * (lambda - 1.0) < 4.0))
    throw std::logic_error("construct_near_ratio: first-term bracket violated");
  const double l3 = lambda * lambda * lambda;
  for (std::size_t j = 0; j + 1 < seq.size(); ++j) {
    double q = static_cast<double>(seq.terms[j + 1]) / static_cast<double>(seq.terms[j]);
    if (!(lambda <= q && q < l3))
      throw std::logic_error("construct_near_ratio: ratio bracket violated");
  }
  return seq;
}

LacunarySequence rescaled_near_ratio(double lambda, long long anchor, long long cover_hi) {
  if (lambda <= 1.0 || lambda * lambda * lambda >= 2.0)
    throw std::invalid_argument("rescaled_near_ratio: lambda out of range");
  if (anchor < 4) throw std::invalid_argument("rescaled_near_ratio: anchor too small");
  const long double lt = lambda_tilde(lambda);
  // largest e with ceil(lt^e) < anchor
  long long e = static_cast<long long>(
      floorl(logl(static_cast<long double>(anchor)) / logl(lt)));
  while (ceil_pow(lt, e) >= anchor) --e;
  while (ceil_pow(lt, e + 1) < anchor) ++e;
  LacunarySequence seq;
  seq.label = "rescaled(" + std::to_string(lambda) + ")";
  for (long long term = 0; term < cover_hi;) {
    term = ceil_pow(lt, e++);
    if (seq.terms.empty() || term > seq.terms.back()) seq.terms.push_back(term);
  }
  seq.validate();
  return seq;
}

LacunarySequence refine(const LacunarySequence& seq) {
  seq.validate();
  if (seq.terms.front() < 8)
    throw std::invalid_argument(
        "refine: first term must be >= 8 (shift the sequence up before refining)");
  std::set<long long> pts(seq.terms.begin(), seq.terms.end());
  for (long long p = 8; p <= seq.max_term() && p > 0; p *= 2) pts.insert(p);
  std::vector<long long> base(pts.begin(), pts.end());
  for (std::size_t k = 0; k + 1 < base.size(); ++k) {
    const long long a = base[k], b = base[k + 1];
    // dyadic block [2^{j-1}, 2^j) containing [a, b); powers of two are in
    // the set, so b <= 2^j and a >= 2^{j-1}
    const int j = std::bit_width(static_cast<unsigned long long>(b - 1));
    const long long piece = 1LL << (j - 3);
    const long long gap = b - a;
    if (gap > piece) {
      const long long parts = (gap + piece - 1) / piece;
      for (long long i = 1; i < parts; ++i) pts.insert(a + (i * gap) / parts);
    }
  }
  LacunarySequence out;
  out.terms.assign(pts.begin(), pts.end());
  out.label = seq.label.empty() ? "refined" : seq.label + "+refined";
  out.validate();
  // Postconditions of the refinement, checked exactly in integer arithmetic.
  for (std::size_t k = 0; k + 1 < out.terms.size(); ++k) {
    const long long a = out.terms[k], b = out.terms[k + 1];
    const int j = std::bit_width(static_cast<unsigned long long>(b - 1));
    if (a < (1LL << (j - 1)) || b - a > (1LL << (j - 3)))
      throw std::logic_error("refine: gap property violated");
  }
  for (int N = 1; (1LL << (N - 1)) <= out.max_term() && N < 63; ++N) {
    auto count_in = [N](const std::vector<long long>& t) {
      const long long lo = 1LL << (N - 1), hi = 1LL << N;
      return std::upper_bound(t.begin(), t.end(), hi) - std::lower_bound(t.begin(), t.end(), lo);
    };
    if (count_in(out.terms) > 9 * (count_in(seq.terms) + 2))
      throw std::logic_error("refine: block-count property violated");
  }
  return out;
}

LacunarySequence sigma_block_example(long long sigma, long long M) {
  if (sigma < 2) throw std::invalid_argument("sigma_block_example: sigma < 2");
  if (sigma > M) throw std::invalid_argument("sigma_block_example: sigma > M");
  if (M < 1 || (M & (M - 1)) != 0)
    throw std::invalid_argument("sigma_block_example: M must be a power of two");
  LacunarySequence seq;
  seq.label = "sigma_block(" + std::to_string(sigma) + "," + std::to_string(M) + ")";
  const long long step = M / sigma;
  for (long long j = 0; j < sigma; ++j) seq.terms.push_back(M + j * step);
  while (3 * seq.terms.back() <= 16 * M) seq.terms.push_back(3 * seq.terms.back());
  seq.validate();
  return seq;
}

std::vector<LacunarySequence> decompose_into_lacunary(const LacunarySequence& seq) {
  seq.validate();
  std::vector<LacunarySequence> parts;
  for (long long t : seq.terms) {
    bool placed = false;
    for (auto& part : parts) {
      if (t > 2 * part.terms.back()) {
        part.terms.push_back(t);
        placed = true;
        break;
      }
    }
    if (!placed) parts.push_back(LacunarySequence{{t}, ""});
  }
  for (std::size_t i = 0; i < parts.size(); ++i)
    parts[i].label = seq.label + "/part" + std::to_string(i);
  if (static_cast<long long>(parts.size()) > 2 * sigma(seq) + 2)
    throw std::logic_error("decompose_into_lacunary: part-count bound violated");
  return parts;
}

long long cardinality_AN_exact(double lambda) {
  if (lambda <= 1.0 || lambda * lambda * lambda >= 2.0)
    throw std::invalid_argument("cardinality_AN_exact: lambda out of range");
  const mpfr_prec_t prec = 256;
  mpfr_t lt, lam, target, p, q, N, twoN, t;
  mpfr_inits2(prec, lt, lam, target, p, q, N, twoN, t, static_cast<mpfr_ptr>(nullptr));
  mpfr_set_d(lam, lambda, MPFR_RNDN);
  // lt = lambda^{7/4}
  mpfr_set_d(q, 1.75, MPFR_RNDN);
  mpfr_pow(lt, lam, q, MPFR_RNDN);
  // target = lambda / lt
  mpfr_div(target, lam, lt, MPFR_RNDN);
  // j0: smallest j >= 1 with lt^j/(lt^j+1) >= target
  long long j0 = 0;
  mpfr_set(p, lt, MPFR_RNDN);
  for (long long j = 1; j < 100000; ++j) {
    mpfr_add_ui(q, p, 1, MPFR_RNDN);
    mpfr_div(q, p, q, MPFR_RNDN);
    if (mpfr_cmp(q, target) >= 0) {
      j0 = j;
      break;
    }
    mpfr_mul(p, p, lt, MPFR_RNDN);
  }
  // N = ceil(exp(4/(lambda-1))), 2N
  mpfr_sub_ui(q, lam, 1, MPFR_RNDN);
  mpfr_ui_div(q, 4, q, MPFR_RNDN);
  mpfr_exp(N, q, MPFR_RNDN);
  mpfr_ceil(N, N);
  mpfr_mul_ui(twoN, N, 2, MPFR_RNDN);
  // count terms ceil(lt^{j+j0}) in [N, 2N]
  mpfr_pow_si(t, lt, j0, MPFR_RNDN);
  long long count = 0;
  for (long long j = 0; j < 1000000; ++j) {
    mpfr_ceil(q, t);
    if (mpfr_cmp(q, twoN) > 0) break;
    if (mpfr_cmp(q, N) >= 0) ++count;
    mpfr_mul(t, t, lt, MPFR_RNDN);
  }
  mpfr_clears(lt, lam, target, p, q, N, twoN, t, static_cast<mpfr_ptr>(nullptr));
  return count;
}

bool check_j0_bigfloat(double lambda, long long j0) {
  const mpfr_prec_t prec = 200;
  mpfr_t lt, lam, target, p, q;
  mpfr_inits2(prec, lt, lam, target, p, q, static_cast<mpfr_ptr>(nullptr));
  mpfr_set_d(lam, lambda, MPFR_RNDN);
  mpfr_set_d(q, 1.75, MPFR_RNDN);
  mpfr_pow(lt, lam, q, MPFR_RNDN);
  mpfr_div(target, lam, lt, MPFR_RNDN);
  auto side = [&](long long j) {
    mpfr_pow_si(p, lt, j, MPFR_RNDN);
    mpfr_add_ui(q, p, 1, MPFR_RNDN);
    mpfr_div(q, p, q, MPFR_RNDN);
    return mpfr_cmp(q, target);
  };
  bool ok = side(j0) >= 0 && side(j0 - 1) < 0;
  mpfr_clears(lt, lam, target, p, q, static_cast<mpfr_ptr>(nullptr));
  return ok;
}

}  // namespace lplab
