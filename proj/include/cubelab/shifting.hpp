#pragma once

#include <cstdint>
#include <vector>

#include "cubelab/bool_function.hpp"

namespace cubelab {

// Disjoint coordinate sets S, T as bitmasks (bit i-1 = coordinate i).
// Empty-set membership conditions are vacuously true, which makes
// shift with S = {} and T = {j} the monotone up-shift in direction j.
struct ShiftSpec {
  uint32_t s_mask = 0;
  uint32_t t_mask = 0;
};

// The compression operator: at x with x_S = 1 and x_T = 0 the value becomes
// f(x) AND f(x ^ 1_{S u T}); at x with x_T = 1 and x_S = 0 it becomes
// f(x) OR f(x ^ 1_{S u T}); everywhere else it is unchanged. Measure is
// always preserved and the operator is idempotent.
BooleanFunction shift(const BooleanFunction& f, const ShiftSpec& spec);

// One pass of monotone up-shifts, directions n down to 1. The result is
// monotone.
BooleanFunction monotone_upshift(const BooleanFunction& f);

// The full compression sequence f^0..f^n for mu(f) <= 1/2 (refused
// otherwise; complement first if needed):
//   f^0 — monotone up-shifts, j = n..1;
//   f^k — shifts S_{S {1}} over all S in {2..n} with |S| = k, ascending
//         bitmask order (k = 1..n-1);
//   f^n — the single shift with S = {2..n}.
// Returns all n+1 stages. f^n vanishes on the x_1 = 0 half, its total
// influence and its I_i for i >= 2 never exceed those of f.
std::vector<BooleanFunction> compress_pipeline(const BooleanFunction& f);

}  // namespace cubelab
