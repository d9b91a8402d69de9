#include <doctest.h>

#include "cubelab/generators.hpp"
#include "cubelab/influence.hpp"
#include "cubelab/shifting.hpp"
#include "test_helpers.hpp"

using namespace cubelab;
using testref::Rng;

namespace {

bool lower_half_zero(const BooleanFunction& f) {
  for (uint64_t x = 0; x < f.domain_size(); x += 2)
    if (f.get(x)) return false;
  return true;
}

}  // namespace

TEST_CASE("shift: three-case definition on spec points") {
  // indicator of {(1,0)} moves to {(0,1)} under S={1}, T={2}
  const BooleanFunction f = testref::from_table_bits(2, 0b0010);
  const BooleanFunction g = shift(f, ShiftSpec{0b01, 0b10});
  CHECK(g == testref::from_table_bits(2, 0b0100));

  // indicator of {(0,1)} is already on the T-side: unchanged
  const BooleanFunction h = testref::from_table_bits(2, 0b0100);
  CHECK(shift(h, ShiftSpec{0b01, 0b10}) == h);

  // S = T = {} is the identity
  Rng rng(31);
  const BooleanFunction r = random_function(5, rng.next());
  CHECK(shift(r, ShiftSpec{0, 0}) == r);

  CHECK_THROWS(shift(r, ShiftSpec{0b11, 0b10}));   // overlapping
  CHECK_THROWS(shift(r, ShiftSpec{0b100000, 0}));  // out of range
}

TEST_CASE("shift kernel vs reference: all n=2 tables and all disjoint S,T") {
  for (uint64_t t = 0; t < 16; ++t) {
    const BooleanFunction f = testref::from_table_bits(2, t);
    for (uint32_t s = 0; s < 4; ++s)
      for (uint32_t tt = 0; tt < 4; ++tt) {
        if (s & tt) continue;
        CHECK(shift(f, ShiftSpec{s, tt}) == testref::naive_shift(f, s, tt));
      }
  }
  Rng rng(32);
  for (int n : {4, 6, 7, 8}) {
    for (int trial = 0; trial < 10; ++trial) {
      const BooleanFunction f = random_function(n, rng.next());
      const uint32_t full = f.full_coord_mask();
      const uint32_t s = static_cast<uint32_t>(rng.next()) & full;
      const uint32_t tt = static_cast<uint32_t>(rng.next()) & full & ~s;
      CHECK(shift(f, ShiftSpec{s, tt}) == testref::naive_shift(f, s, tt));
    }
  }
}

TEST_CASE("shift preserves measure and is idempotent") {
  Rng rng(33);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 2 + static_cast<int>(rng.below(8));
    const BooleanFunction f = random_function(n, rng.next());
    const uint32_t full = f.full_coord_mask();
    const uint32_t s = static_cast<uint32_t>(rng.next()) & full;
    const uint32_t tt = static_cast<uint32_t>(rng.next()) & full & ~s;
    const BooleanFunction once = shift(f, ShiftSpec{s, tt});
    CHECK(once.count_ones() == f.count_ones());
    CHECK(shift(once, ShiftSpec{s, tt}) == once);
  }
}

TEST_CASE("monotone up-shift produces a monotone function") {
  Rng rng(34);
  for (int trial = 0; trial < 10; ++trial) {
    const int n = 2 + static_cast<int>(rng.below(7));
    const BooleanFunction g = monotone_upshift(random_function(n, rng.next()));
    for (uint64_t x = 0; x < g.domain_size(); ++x)
      for (int p = 0; p < n; ++p)
        if (!((x >> p) & 1)) CHECK(g.get(x) <= g.get(x | (uint64_t{1} << p)));
  }
}

TEST_CASE("pipeline: spec examples") {
  // indicator of {(0,1)} compresses to {(1,1)}
  const auto stages = compress_pipeline(testref::from_table_bits(2, 0b0100));
  CHECK(stages.size() == 3);
  CHECK(stages.back() == testref::from_table_bits(2, 0b1000));

  // constant 0 stays constant 0 at every stage
  for (const auto& stage : compress_pipeline(BooleanFunction(3)))
    CHECK(stage.count_ones() == 0);

  // a sub-cube on x1, x2 is already compressed
  const BooleanFunction cube = subcube_indicator(3, make_term({1, 2}, {}, 3));
  CHECK(compress_pipeline(cube).back() == cube);

  CHECK_THROWS(compress_pipeline(BooleanFunction(3, true)));  // mu > 1/2 refused
}

TEST_CASE("pipeline: compression properties, exhaustive n=3 and random n<=10") {
  auto check_properties = [](const BooleanFunction& f) {
    const auto stages = compress_pipeline(f);
    const uint64_t ones = f.count_ones();
    for (const auto& stage : stages) CHECK(stage.count_ones() == ones);
    const auto before = influence_counts(f);
    const auto after = influence_counts(stages.back());
    for (int i = 2; i <= f.n(); ++i) CHECK(after[i - 1] <= before[i - 1]);
    uint64_t total_before = 0, total_after = 0;
    for (int i = 1; i <= f.n(); ++i) {
      total_before += before[i - 1];
      total_after += after[i - 1];
    }
    CHECK(total_after <= total_before);
    CHECK(lower_half_zero(stages.back()));
  };

  for (uint64_t t = 0; t < 256; ++t) {
    const BooleanFunction f = testref::from_table_bits(3, t);
    if (2 * f.count_ones() <= 8) check_properties(f);
  }
  Rng rng(35);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 4 + static_cast<int>(rng.below(7));
    BooleanFunction f = random_function(n, rng.next());
    if (2 * f.count_ones() > f.domain_size()) f = f.complement();
    check_properties(f);
  }
}
