#pragma once

#include <cstdint>
#include <vector>

#include "cubelab/bool_function.hpp"
#include "cubelab/dnf.hpp"

namespace cubelab {

// OR of s disjoint ANDs of w consecutive coordinates; block t covers
// coordinates (t-1)w+1 .. tw. n = w*s.
BooleanFunction tribes(int w, int s);
bool tribes_eval(int w, int s, uint64_t x);

// dual_tribes(x) = 1 - tribes(all coordinates of x flipped).
BooleanFunction dual_tribes(int w, int s);
bool dual_tribes_eval(int w, int s, uint64_t x);

// dual_tribes(w, 2^w) on the first w*2^w coordinates, conjoined with the
// last l coordinates all being 1. n = w*2^w + l.
BooleanFunction sharpness_example(int w, int l);
bool sharpness_eval(int w, int l, uint64_t x);
int sharpness_dimension(int w, int l);

// Indicator of the m lexicographically largest points; for the lex order
// (only) coordinate 1 is the most significant bit.
BooleanFunction lex_segment(int n, uint64_t m);
bool lex_segment_eval(int n, uint64_t m, uint64_t x);

BooleanFunction parity_function(int n);
BooleanFunction majority_function(int n);  // n odd

// Seed-deterministic uniformly random table. The bit stream is a keyed
// splitmix64 over word indices, identical for table construction and
// pointwise evaluation at any n.
BooleanFunction random_function(int n, uint64_t seed);
bool random_function_eval(int n, uint64_t seed, uint64_t x);

// Random table pushed through one pass of monotone up-shifts.
BooleanFunction random_monotone(int n, uint64_t seed);

// f(x) = g(x restricted to coords, in the given order); coords are distinct
// 1-based coordinates of the ambient n-cube.
BooleanFunction junta_embed(const BooleanFunction& g, int n, const std::vector<int>& coords);

BooleanFunction subcube_indicator(int n, const Term& t);

}  // namespace cubelab
