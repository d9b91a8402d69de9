#include "cubelab/shifting.hpp"

#include <stdexcept>

#include "cubelab/bits.hpp"

namespace cubelab {

namespace {

BooleanFunction shift_scalar(const BooleanFunction& f, uint64_t s, uint64_t t) {
  const uint64_t flip = s | t;
  BooleanFunction out(f.n());
  for (uint64_t x = 0; x < f.domain_size(); ++x) {
    const bool fx = f.get(x);
    bool v = fx;
    if ((x & s) == s && (x & t) == 0) {
      v = fx && f.get(x ^ flip);
    } else if ((x & t) == t && (x & s) == 0) {
      v = fx || f.get(x ^ flip);
    }
    if (v) out.set(x, true);
  }
  return out;
}

}  // namespace

BooleanFunction shift(const BooleanFunction& f, const ShiftSpec& spec) {
  const uint32_t full = f.full_coord_mask();
  if ((spec.s_mask | spec.t_mask) & ~full)
    throw std::invalid_argument("shift coordinates out of range");
  if (spec.s_mask & spec.t_mask) throw std::invalid_argument("S and T must be disjoint");

  if (f.n() < 6) return shift_scalar(f, spec.s_mask, spec.t_mask);

  // Word-parallel: the two active regions are cut out by per-word masks on
  // the low 6 index bits plus a word-index condition on the high bits, and
  // the partner table f(x ^ 1_{S u T}) is a word permutation composed with
  // in-word butterflies.
  const size_t s_hi = spec.s_mask >> 6, t_hi = spec.t_mask >> 6;
  const size_t flip_hi = s_hi | t_hi;
  const int s_lo = spec.s_mask & 63, t_lo = spec.t_mask & 63;
  const int flip_lo = s_lo | t_lo;
  uint64_t mask_and = ~uint64_t{0}, mask_or = ~uint64_t{0};
  for (int p = 0; p < 6; ++p) {
    if ((s_lo >> p) & 1) {
      mask_and &= ~kHalfMask[p];
      mask_or &= kHalfMask[p];
    }
    if ((t_lo >> p) & 1) {
      mask_and &= kHalfMask[p];
      mask_or &= ~kHalfMask[p];
    }
  }

  const auto& words = f.words();
  BooleanFunction out(f.n());
  for (size_t w = 0; w < words.size(); ++w) {
    const bool hi_and = ((w & s_hi) == s_hi) && ((w & t_hi) == 0);
    const bool hi_or = ((w & t_hi) == t_hi) && ((w & s_hi) == 0);
    uint64_t v = words[w];
    if (hi_and || hi_or) {
      uint64_t partner = words[w ^ flip_hi];
      for (int p = 0; p < 6; ++p)
        if ((flip_lo >> p) & 1) partner = swap_halves(partner, p);
      const uint64_t ma = hi_and ? mask_and : 0;
      const uint64_t mo = hi_or ? mask_or : 0;
      v = (v & ~(ma | mo)) | (v & partner & ma) | ((v | partner) & mo);
    }
    out.words()[w] = v;
  }
  return out;
}

BooleanFunction monotone_upshift(const BooleanFunction& f) {
  BooleanFunction g = f;
  for (int j = f.n(); j >= 1; --j) g = shift(g, ShiftSpec{0, 1u << (j - 1)});
  return g;
}

std::vector<BooleanFunction> compress_pipeline(const BooleanFunction& f) {
  const uint64_t ones = f.count_ones();
  if (2 * ones > f.domain_size())
    throw std::invalid_argument("compression pipeline requires mu <= 1/2; complement first");

  const int n = f.n();
  std::vector<BooleanFunction> stages;
  stages.reserve(n + 1);
  stages.push_back(monotone_upshift(f));

  const uint32_t rest = f.full_coord_mask() & ~1u;  // {2..n}
  for (int k = 1; k <= n; ++k) {
    BooleanFunction g = stages.back();
    if (k < n) {
      for (uint32_t s = 2; s <= rest && rest != 0; ++s) {
        if ((s & ~rest) == 0 && popcount64(s) == k) g = shift(g, ShiftSpec{s, 1u});
      }
    } else {
      g = shift(g, ShiftSpec{rest, 1u});
    }
    stages.push_back(std::move(g));
  }
  return stages;
}

}  // namespace cubelab
