#include <doctest.h>

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <set>

#include "lplab/sequences.hpp"

using namespace lplab;

namespace {

LacunarySequence seq_of(std::vector<long long> t) { return LacunarySequence{std::move(t), ""}; }

const std::vector<double> kLambdaGrid{1.05, 1.08, 1.1, 1.15, 1.2, 1.25};

}  // namespace

TEST_CASE("ratio") {
  CHECK(ratio(seq_of({1, 2, 4, 8, 16})) == doctest::Approx(2.0));
  CHECK(ratio(seq_of({5})) == std::numeric_limits<double>::infinity());
  CHECK(ratio(seq_of({10, 13, 17, 22, 29})) == doctest::Approx(22.0 / 17.0));
  CHECK_THROWS(ratio(seq_of({})));
}

TEST_CASE("sigma") {
  std::vector<long long> dyadic;
  for (int e = 0; e <= 10; ++e) dyadic.push_back(1LL << e);
  CHECK(sigma(seq_of(dyadic)) == 2);  // both endpoints of a closed block

  CHECK(sigma(seq_of({1, 3, 9, 27, 81, 243})) == 1);

  CHECK(sigma(sigma_block_example(4, 4096)) == 4);
}

TEST_CASE("construct_near_ratio preconditions and bounds") {
  CHECK_THROWS(construct_near_ratio(1.3, 5));  // 1.3^3 >= 2
  CHECK_THROWS(construct_near_ratio(0.9, 5));

  LacunarySequence s = construct_near_ratio(1.2, 5);
  CHECK(s.size() == 5);
  CHECK(s.terms[0] > 1.0 / 0.2);
  CHECK(s.terms[0] < 4.0 / 0.2);

  for (double lambda : kLambdaGrid) {
    LacunarySequence seq = construct_near_ratio(lambda, 12);
    const double l0_gap = static_cast<double>(seq.terms[0]) * (lambda - 1.0);
    CHECK(l0_gap > 1.0);
    CHECK(l0_gap < 4.0);
    for (std::size_t j = 0; j + 1 < seq.size(); ++j) {
      const double q = static_cast<double>(seq.terms[j + 1]) / static_cast<double>(seq.terms[j]);
      CHECK(q >= lambda - 1e-12);
      CHECK(q < lambda * lambda * lambda);
    }
  }
}

TEST_CASE("construct_near_ratio j0 bracket re-verified at 200-bit precision") {
  for (double lambda : kLambdaGrid) CHECK(check_j0_bigfloat(lambda, construct_j0(lambda)));
}

TEST_CASE("sigma times gap stays bracketed on constructed sequences") {
  for (double lambda : kLambdaGrid) {
    LacunarySequence seq = construct_near_ratio(lambda, 14);
    const double v = static_cast<double>(sigma(seq)) * (ratio(seq) - 1.0);
    CHECK(v >= 0.3);
    CHECK(v <= 6.0);
  }
}

namespace {

// property (1): every consecutive gap lies inside one dyadic block [2^{j-1}, 2^j)
// and is at most 2^{j-3}
void check_gap_property(const LacunarySequence& r) {
  for (std::size_t k = 1; k < r.size(); ++k) {
    const long long b = r.terms[k];
    const int j = std::bit_width(static_cast<unsigned long long>(b - 1));
    CHECK(r.terms[k] - r.terms[k - 1] <= (1LL << (j - 3)));
  }
}

long long block_count(const LacunarySequence& s, int N) {
  const long long lo = 1LL << (N - 1), hi = 1LL << N;
  return static_cast<long long>(std::count_if(s.terms.begin(), s.terms.end(),
                                              [&](long long t) { return lo <= t && t <= hi; }));
}

}  // namespace

TEST_CASE("refine: input with dyadics and small gaps is a fixed point") {
  LacunarySequence s = seq_of({8, 10, 12, 14, 16, 20, 24, 28, 32, 40, 48, 56, 64});
  LacunarySequence r = refine(s);
  CHECK(r.terms == s.terms);
}

TEST_CASE("refine: gap and block-count properties, exact integer arithmetic") {
  LacunarySequence s = seq_of({12, 15, 19, 24, 31, 40, 52, 68, 88, 115});
  LacunarySequence r = refine(s);
  for (long long t : s.terms) CHECK(std::binary_search(r.terms.begin(), r.terms.end(), t));
  for (long long d : {8, 16, 32, 64}) CHECK(std::binary_search(r.terms.begin(), r.terms.end(), d));
  check_gap_property(r);
  for (int N = 1; (1LL << N) <= 2 * r.max_term(); ++N)
    CHECK(block_count(r, N) <= 9 * (block_count(s, N) + 2));
}

TEST_CASE("refine: idempotent up to the dyadic tail") {
  LacunarySequence r = refine(seq_of({12, 15, 19, 24, 31, 40, 52, 68, 88, 115}));
  LacunarySequence rr = refine(r);
  std::set<long long> extra(rr.terms.begin(), rr.terms.end());
  for (long long t : r.terms) extra.erase(t);
  for (long long t : extra) CHECK(std::has_single_bit(static_cast<unsigned long long>(t)));
}

TEST_CASE("refine rejects sequences starting below 8") {
  CHECK_THROWS(refine(seq_of({4, 16, 64})));
}

TEST_CASE("sigma_block_example") {
  LacunarySequence s = sigma_block_example(4, 4096);
  REQUIRE(s.size() >= 6);
  CHECK(s.terms[0] == 4096);
  CHECK(s.terms[1] == 5120);
  CHECK(s.terms[2] == 6144);
  CHECK(s.terms[3] == 7168);
  CHECK(s.terms[4] == 21504);
  CHECK(s.terms[5] == 64512);
  CHECK(sigma(s) == 4);

  LacunarySequence tiny = sigma_block_example(2, 2);
  CHECK(tiny.terms == std::vector<long long>{2, 3, 9, 27});
  CHECK(sigma(tiny) == 2);

  CHECK_THROWS(sigma_block_example(8, 4));  // sigma > M
}

TEST_CASE("decompose_into_lacunary") {
  std::vector<long long> dyadic;
  for (int e = 0; e <= 7; ++e) dyadic.push_back(1LL << e);
  auto parts = decompose_into_lacunary(seq_of(dyadic));
  REQUIRE(parts.size() == 2);
  CHECK(parts[0].terms == std::vector<long long>{1, 4, 16, 64});
  CHECK(parts[1].terms == std::vector<long long>{2, 8, 32, 128});

  auto one = decompose_into_lacunary(seq_of({1, 3, 9, 27, 81}));
  CHECK(one.size() == 1);

  LacunarySequence blocky = sigma_block_example(4, 4096);
  auto bp = decompose_into_lacunary(blocky);
  CHECK(bp.size() >= 4);
  CHECK(bp.size() <= static_cast<std::size_t>(2 * sigma(blocky) + 2));

  // sorted union of the parts reproduces the input
  std::vector<long long> merged;
  for (const auto& p : bp) {
    CHECK(ratio(p) >= 2.0 - 1e-12);
    merged.insert(merged.end(), p.terms.begin(), p.terms.end());
  }
  std::sort(merged.begin(), merged.end());
  CHECK(merged == blocky.terms);
}

TEST_CASE("cardinality of A_N under the exact pairing") {
  const long long count = cardinality_AN_exact(1.2);
  CHECK(count >= 1);
  const double normalized = static_cast<double>(count) * 0.2;
  CHECK(normalized >= 0.3);
  CHECK(normalized <= 6.0);

  for (double lambda : kLambdaGrid) CHECK(cardinality_AN_exact(lambda) >= 1);
}

TEST_CASE("validate") {
  CHECK_THROWS(seq_of({}).validate());
  CHECK_THROWS(seq_of({3, 3}).validate());
  CHECK_THROWS(seq_of({0, 2}).validate());
  CHECK_NOTHROW(seq_of({1, 2, 5}).validate());
}
