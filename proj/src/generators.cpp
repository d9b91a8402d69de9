#include "cubelab/generators.hpp"

#include <stdexcept>

#include "cubelab/bits.hpp"
#include "cubelab/shifting.hpp"

namespace cubelab {

namespace {

void check_block_params(int w, int s) {
  if (w < 1 || s < 1) throw std::invalid_argument("tribes parameters must be positive");
  if (w * s > max_dimension())
    throw std::invalid_argument("tribes dimension " + std::to_string(w * s) + " exceeds cap");
}

uint64_t random_table_key(int n, uint64_t seed) {
  return splitmix64(splitmix64(seed) ^ (static_cast<uint64_t>(n) * 0x9e3779b97f4a7c15ULL));
}

uint64_t low_mask(int k) {  // safe for k in [0, 64]
  return k >= 64 ? ~uint64_t{0} : (uint64_t{1} << k) - 1;
}

}  // namespace

bool tribes_eval(int w, int s, uint64_t x) {
  for (int t = 0; t < s; ++t) {
    const uint64_t block = ((uint64_t{1} << w) - 1) << (t * w);
    if ((x & block) == block) return true;
  }
  return false;
}

BooleanFunction tribes(int w, int s) {
  check_block_params(w, s);
  BooleanFunction f(w * s);
  for (uint64_t x = 0; x < f.domain_size(); ++x)
    if (tribes_eval(w, s, x)) f.set(x, true);
  return f;
}

bool dual_tribes_eval(int w, int s, uint64_t x) {
  for (int t = 0; t < s; ++t) {
    const uint64_t block = ((uint64_t{1} << w) - 1) << (t * w);
    if ((x & block) == 0) return false;  // flipped block would satisfy tribes
  }
  return true;
}

BooleanFunction dual_tribes(int w, int s) {
  check_block_params(w, s);
  return tribes(w, s).negate_inputs((1u << (w * s)) - 1).complement();
}

int sharpness_dimension(int w, int l) {
  if (w < 1 || w > 4 || l < 0) throw std::invalid_argument("bad sharpness parameters");
  return w * (1 << w) + l;
}

bool sharpness_eval(int w, int l, uint64_t x) {
  const int base = w * (1 << w);
  if (l > 0) {
    const uint64_t tail = low_mask(l) << base;
    if ((x & tail) != tail) return false;
  }
  return dual_tribes_eval(w, 1 << w, x & low_mask(base));
}

BooleanFunction sharpness_example(int w, int l) {
  const int n = sharpness_dimension(w, l);
  if (n > max_dimension())
    throw std::invalid_argument("sharpness dimension " + std::to_string(n) +
                                " exceeds cap (use the sampling path)");
  BooleanFunction f(n);
  for (uint64_t x = 0; x < f.domain_size(); ++x)
    if (sharpness_eval(w, l, x)) f.set(x, true);
  return f;
}

bool lex_segment_eval(int n, uint64_t m, uint64_t x) {
  // lexicographic rank: coordinate 1 most significant
  uint64_t rank = 0;
  for (int i = 0; i < n; ++i) rank = (rank << 1) | ((x >> i) & 1);
  return rank >= (uint64_t{1} << n) - m;
}

BooleanFunction lex_segment(int n, uint64_t m) {
  BooleanFunction f(n);
  if (m > f.domain_size()) throw std::invalid_argument("segment size exceeds 2^n");
  for (uint64_t x = 0; x < f.domain_size(); ++x)
    if (lex_segment_eval(n, m, x)) f.set(x, true);
  return f;
}

BooleanFunction parity_function(int n) {
  BooleanFunction f(n);
  for (uint64_t x = 0; x < f.domain_size(); ++x)
    if (popcount64(x) & 1) f.set(x, true);
  return f;
}

BooleanFunction majority_function(int n) {
  if (!(n & 1)) throw std::invalid_argument("majority needs odd n");
  BooleanFunction f(n);
  for (uint64_t x = 0; x < f.domain_size(); ++x)
    if (2 * popcount64(x) > n) f.set(x, true);
  return f;
}

bool random_function_eval(int n, uint64_t seed, uint64_t x) {
  return (splitmix64(random_table_key(n, seed) + (x >> 6)) >> (x & 63)) & 1;
}

BooleanFunction random_function(int n, uint64_t seed) {
  BooleanFunction f(n);
  const uint64_t key = random_table_key(n, seed);
  auto& words = f.words();
  for (size_t w = 0; w < words.size(); ++w) words[w] = splitmix64(key + w);
  f.mask_tail();
  return f;
}

BooleanFunction random_monotone(int n, uint64_t seed) {
  return monotone_upshift(random_function(n, seed));
}

BooleanFunction junta_embed(const BooleanFunction& g, int n, const std::vector<int>& coords) {
  if (static_cast<int>(coords.size()) != g.n())
    throw std::invalid_argument("junta coordinate list must match the junta's arity");
  coord_mask(coords, n);  // validates range and distinctness
  BooleanFunction f(n);
  for (uint64_t x = 0; x < f.domain_size(); ++x) {
    uint64_t y = 0;
    for (size_t i = 0; i < coords.size(); ++i)
      if ((x >> (coords[i] - 1)) & 1) y |= uint64_t{1} << i;
    if (g.get(y)) f.set(x, true);
  }
  return f;
}

BooleanFunction subcube_indicator(int n, const Term& t) {
  Dnf d;
  d.n = n;
  d.terms.push_back(t);
  return to_function(d);
}

}  // namespace cubelab
