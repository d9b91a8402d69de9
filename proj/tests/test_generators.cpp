#include <doctest.h>

#include <cmath>

#include "cubelab/generators.hpp"
#include "cubelab/influence.hpp"
#include "test_helpers.hpp"

using namespace cubelab;
using testref::Rng;

namespace {

// closed-form ones count for tribes: 2^(ws) - (2^w - 1)^s
uint64_t tribes_ones(int w, int s) {
  uint64_t miss = 1;
  for (int i = 0; i < s; ++i) miss *= (uint64_t{1} << w) - 1;
  return (uint64_t{1} << (w * s)) - miss;
}

}  // namespace

TEST_CASE("tribes: layout and measure") {
  CHECK(tribes(1, 4).count_ones() == 15);                         // OR of 4
  CHECK(tribes(3, 1) == subcube_indicator(3, make_term({1, 2, 3}, {}, 3)));  // AND of 3
  for (int w = 1; w <= 3; ++w)
    for (int s = 1; s <= 4; ++s) {
      if (w * s > 12) continue;
      CHECK(tribes(w, s).count_ones() == tribes_ones(w, s));
    }
  CHECK(tribes(2, 4).measure() == Dyadic(175, 8));
  // pointwise evaluator agrees with the table
  const BooleanFunction t24 = tribes(2, 4);
  for (uint64_t x = 0; x < 256; ++x) CHECK(t24.get(x) == tribes_eval(2, 4, x));
}

TEST_CASE("dual tribes") {
  const BooleanFunction d = dual_tribes(2, 4);
  CHECK(d.count_ones() == 81);  // (3/4)^4 of 256
  // the printed dualization: complement of tribes with all inputs flipped
  CHECK(d == tribes(2, 4).negate_inputs(0xff).complement());
  for (uint64_t x = 0; x < 256; ++x) CHECK(d.get(x) == dual_tribes_eval(2, 4, x));
  CHECK(dual_tribes(1, 1) == subcube_indicator(1, make_term({1}, {}, 1)));  // x1

  // desk-scale dual tribes influence, against the per-point reference
  uint64_t icount = 0;
  for (int k = 1; k <= 8; ++k) icount += testref::naive_influence_count(d, k);
  CHECK(total_influence(d) == Dyadic(static_cast<long long>(icount), 8));
  CHECK(icount > 0);
}

TEST_CASE("sharpness example") {
  CHECK(sharpness_dimension(2, 2) == 10);
  const BooleanFunction f = sharpness_example(2, 2);
  CHECK(f.measure() == Dyadic(81, 10));  // 81/1024 = 2^-2 * (3/4)^4
  CHECK(sharpness_example(2, 0) == dual_tribes(2, 4));
  for (uint64_t x = 0; x < f.domain_size(); ++x) CHECK(f.get(x) == sharpness_eval(2, 2, x));

  // appending AND-coordinates shifts the log term only: M is stable in l
  const double m0 = excess(sharpness_example(2, 0));
  for (int l = 1; l <= 6; ++l)
    CHECK(excess(sharpness_example(2, l)) == doctest::Approx(m0).epsilon(1e-9));
  CHECK(m0 > 0.0);
}

TEST_CASE("lex segment") {
  CHECK(lex_segment(3, 4) == subcube_indicator(3, make_term({1}, {}, 3)));  // dictator x1
  for (int k = 0; k <= 3; ++k) {
    const BooleanFunction f = lex_segment(3, uint64_t{1} << (3 - k));
    std::vector<int> fixed(k);
    for (int i = 0; i < k; ++i) fixed[i] = i + 1;
    CHECK(f == subcube_indicator(3, make_term(fixed, {}, 3)));
    // sub-cube segments attain isoperimetric equality: icount == 2 * ones * k
    uint64_t icount = 0;
    for (int c = 1; c <= 3; ++c) icount += influence_count(f, c);
    CHECK(icount == 2 * f.count_ones() * static_cast<uint64_t>(k));
  }
  // n=3, m=3: the three lex-largest points 111, 110, 101 (x1 most significant)
  const BooleanFunction seg = lex_segment(3, 3);
  CHECK(seg.count_ones() == 3);
  CHECK(seg.get(0b111));
  CHECK(seg.get(0b011));  // (x1,x2,x3) = (1,1,0)
  CHECK(seg.get(0b101));  // (x1,x2,x3) = (1,0,1)
  CHECK(lex_segment(3, 0).count_ones() == 0);
  CHECK(lex_segment(3, 8).count_ones() == 8);
  CHECK_THROWS(lex_segment(3, 9));
}

TEST_CASE("parity and majority") {
  CHECK(parity_function(3).measure() == Dyadic(1, 1));
  const BooleanFunction maj = majority_function(3);
  CHECK(maj.measure() == Dyadic(1, 1));
  CHECK(total_influence(maj) == Dyadic(3, 1));
  CHECK_THROWS(majority_function(4));
}

TEST_CASE("random function: determinism and pointwise consistency") {
  CHECK(random_function(10, 7) == random_function(10, 7));
  CHECK(random_function(10, 7) != random_function(10, 8));
  Rng rng(51);
  for (int n : {3, 6, 9}) {
    const BooleanFunction f = random_function(n, 1234);
    for (int trial = 0; trial < 50; ++trial) {
      const uint64_t x = rng.next() & (f.domain_size() - 1);
      CHECK(f.get(x) == random_function_eval(n, 1234, x));
    }
  }
}

TEST_CASE("random monotone") {
  const BooleanFunction f = random_monotone(6, 99);
  CHECK(f == random_monotone(6, 99));
  for (uint64_t x = 0; x < f.domain_size(); ++x)
    for (int p = 0; p < 6; ++p)
      if (!((x >> p) & 1)) CHECK(f.get(x) <= f.get(x | (uint64_t{1} << p)));
}

TEST_CASE("junta embedding") {
  const BooleanFunction and2 = subcube_indicator(2, make_term({1, 2}, {}, 2));
  const BooleanFunction f = junta_embed(and2, 5, {2, 4});
  const auto counts = influence_counts(f);
  CHECK(counts[1] == f.domain_size() / 2);  // I_2 = 1/2
  CHECK(counts[3] == f.domain_size() / 2);  // I_4 = 1/2
  CHECK(counts[0] == 0);
  CHECK(counts[2] == 0);
  CHECK(counts[4] == 0);
  CHECK_THROWS(junta_embed(and2, 5, {2}));
  CHECK_THROWS(junta_embed(and2, 5, {2, 2}));
}
