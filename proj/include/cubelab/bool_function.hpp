#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cubelab/dyadic.hpp"

namespace cubelab {

// Hard ceiling on the exact-mode dimension: CUBELAB_MAX_N in the
// environment, default 24 (a 16 MiB table). Anything larger must go through
// the sampling path.
int max_dimension();
void set_max_dimension(int n);

// A Boolean function on {0,1}^n as a bit-packed truth table of 2^n bits.
// Point x is read as an n-bit integer with coordinate 1 in the least
// significant bit; bit x of the table is f(x). Coordinates are 1-based
// throughout the public API. Values are immutable in spirit: every
// operation returns a fresh function.
class BooleanFunction {
 public:
  BooleanFunction() = default;  // empty placeholder, n() == 0
  explicit BooleanFunction(int n, bool fill = false);

  static BooleanFunction from_hex(const std::string& text);  // "n=2:8"

  int n() const { return n_; }
  uint64_t domain_size() const { return uint64_t{1} << n_; }

  bool get(uint64_t x) const { return (words_[x >> 6] >> (x & 63)) & 1; }
  void set(uint64_t x, bool v) {
    const uint64_t m = uint64_t{1} << (x & 63);
    if (v)
      words_[x >> 6] |= m;
    else
      words_[x >> 6] &= ~m;
  }

  uint64_t count_ones() const;
  Dyadic measure() const { return Dyadic(static_cast<long long>(count_ones()), n_); }
  bool is_constant() const;

  // Fix coordinate i to bit b; surviving coordinates are renumbered 1..n-1
  // keeping their relative order.
  BooleanFunction restrict_coord(int i, int b) const;

  // g(y) = f(y_{pi(1)}, ..., y_{pi(n)}); pi is 1-based and must be a
  // permutation of [n].
  BooleanFunction permute(const std::vector<int>& pi) const;

  // g(x) = f(x ^ mask); mask has bit i-1 set for each negated coordinate i.
  BooleanFunction negate_inputs(uint32_t coord_mask) const;

  BooleanFunction complement() const;

  std::string to_hex() const;

  const std::vector<uint64_t>& words() const { return words_; }
  std::vector<uint64_t>& words() { return words_; }

  friend bool operator==(const BooleanFunction& a, const BooleanFunction& b) {
    return a.n_ == b.n_ && a.words_ == b.words_;
  }
  friend bool operator!=(const BooleanFunction& a, const BooleanFunction& b) {
    return !(a == b);
  }

  // Zeroes the invalid high bits of the last word (n < 6 only has a partial
  // word). Kernels that write whole words call this afterwards.
  void mask_tail();

  uint32_t full_coord_mask() const { return (n_ >= 32) ? ~0u : ((1u << n_) - 1); }

 private:
  int n_ = 0;
  std::vector<uint64_t> words_;
};

// Evaluation with an explicit dimension check, for callers that hold x as an
// n-bit integer of stated arity.
bool evaluate(const BooleanFunction& f, uint64_t x, int n_of_x);

uint32_t coord_mask(const std::vector<int>& coords, int n);  // validates 1..n, distinct

}  // namespace cubelab
