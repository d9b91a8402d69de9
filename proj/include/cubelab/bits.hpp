#pragma once

#include <bit>
#include <cstdint>

namespace cubelab {

// splitmix64: fast, statistically solid 64-bit mixer. Used both as a seed
// expander and as the keyed bit stream behind random truth tables, so that
// the exact-mode table and the sampling-mode point evaluator always agree.
inline uint64_t splitmix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// kHalfMask[p]: bits whose index has bit p equal to 0.
inline constexpr uint64_t kHalfMask[6] = {
    0x5555555555555555ULL, 0x3333333333333333ULL, 0x0f0f0f0f0f0f0f0fULL,
    0x00ff00ff00ff00ffULL, 0x0000ffff0000ffffULL, 0x00000000ffffffffULL,
};

// Exchange bit x with bit x ^ (1 << p) inside a word (p < 6).
inline uint64_t swap_halves(uint64_t w, int p) {
  const int s = 1 << p;
  return ((w >> s) & kHalfMask[p]) | ((w & kHalfMask[p]) << s);
}

// Keep the bits whose index has bit p equal to b (p < 6) and pack them into
// the low 32 bits, preserving relative order.
inline uint64_t compress_half(uint64_t w, int p, int b) {
  if (b) w >>= (1 << p);
  w &= kHalfMask[p];
  for (int s = p; s < 5; ++s) w = (w | (w >> (1u << s))) & kHalfMask[s + 1];
  return w;
}

inline int popcount64(uint64_t w) { return std::popcount(w); }

}  // namespace cubelab
