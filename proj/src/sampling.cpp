#include "cubelab/sampling.hpp"

#include <cmath>
#include <stdexcept>

#include "cubelab/bits.hpp"

namespace cubelab {

namespace {

constexpr uint64_t kBatch = 1 << 16;

// Per-batch keyed counter stream: sample j of batch b uses
// splitmix64(batch_key + j). Batches can be evaluated in any order (or in
// parallel) and merge to the same totals.
class BatchRng {
 public:
  BatchRng(uint64_t seed, uint64_t batch) : state_(splitmix64(seed ^ (batch * 0x8f1bbcdcbbccULL))) {}
  uint64_t next() { return splitmix64(state_ + (counter_++)); }

 private:
  uint64_t state_;
  uint64_t counter_ = 0;
};

uint64_t point_mask(int n) { return n >= 64 ? ~uint64_t{0} : (uint64_t{1} << n) - 1; }

template <typename PerSample>
double mean_over_samples(int n, uint64_t samples, uint64_t seed, PerSample&& value) {
  if (samples == 0) throw std::invalid_argument("need at least one sample");
  const uint64_t mask = point_mask(n);
  uint64_t hits = 0;
  uint64_t done = 0;
  for (uint64_t batch = 0; done < samples; ++batch) {
    BatchRng rng(seed, batch);
    const uint64_t in_batch = std::min(kBatch, samples - done);
    for (uint64_t j = 0; j < in_batch; ++j) hits += value(rng, mask);
    done += in_batch;
  }
  return static_cast<double>(hits) / static_cast<double>(samples);
}

}  // namespace

double hoeffding_half_width(uint64_t samples, double confidence) {
  if (confidence <= 0.0 || confidence >= 1.0)
    throw std::invalid_argument("confidence must lie in (0,1)");
  return std::sqrt(std::log(2.0 / (1.0 - confidence)) / (2.0 * static_cast<double>(samples)));
}

Estimate estimate_measure(const FunctionSpec& spec, uint64_t samples, uint64_t seed,
                          double confidence) {
  const auto f = spec.evaluator();
  const int n = spec.dimension();
  Estimate e;
  e.quantity = "measure";
  e.value = mean_over_samples(n, samples, seed,
                              [&](BatchRng& rng, uint64_t mask) { return f(rng.next() & mask); });
  e.half_width = hoeffding_half_width(samples, confidence);
  e.samples = samples;
  e.confidence = confidence;
  e.seed = seed;
  return e;
}

Estimate estimate_influence(const FunctionSpec& spec, int k, uint64_t samples, uint64_t seed,
                            double confidence) {
  const auto f = spec.evaluator();
  const int n = spec.dimension();
  if (k < 1 || k > n) throw std::out_of_range("coordinate out of range");
  const uint64_t flip = uint64_t{1} << (k - 1);
  Estimate e;
  e.quantity = "influence:" + std::to_string(k);
  e.value = mean_over_samples(n, samples, seed, [&](BatchRng& rng, uint64_t mask) {
    const uint64_t x = rng.next() & mask;
    return f(x) != f(x ^ flip);
  });
  e.half_width = hoeffding_half_width(samples, confidence);
  e.samples = samples;
  e.confidence = confidence;
  e.seed = seed;
  return e;
}

Estimate estimate_total_influence(const FunctionSpec& spec, uint64_t samples, uint64_t seed,
                                  double confidence) {
  const auto f = spec.evaluator();
  const int n = spec.dimension();
  Estimate e;
  e.quantity = "total-influence";
  e.value = mean_over_samples(n, samples, seed, [&](BatchRng& rng, uint64_t mask) {
    const uint64_t x = rng.next() & mask;
    // rejection-free bounded draw: take the high bits modulo n via
    // multiply-shift (exact enough for a coordinate pick, and fully
    // deterministic across platforms)
    const uint64_t r = rng.next();
    const int k = static_cast<int>((static_cast<unsigned __int128>(r) * n) >> 64);
    return f(x) != f(x ^ (uint64_t{1} << k));
  });
  e.value *= n;
  e.scale = n;
  e.half_width = e.scale * hoeffding_half_width(samples, confidence);
  e.samples = samples;
  e.confidence = confidence;
  e.seed = seed;
  return e;
}

Estimate estimate_dnf_error(const FunctionSpec& spec, const Dnf& d, uint64_t samples,
                            uint64_t seed, double confidence) {
  const auto f = spec.evaluator();
  const int n = spec.dimension();
  if (d.n != n) throw std::invalid_argument("DNF dimension does not match spec");
  Estimate e;
  e.quantity = "dnf-error";
  e.value = mean_over_samples(n, samples, seed, [&](BatchRng& rng, uint64_t mask) {
    const uint64_t x = rng.next() & mask;
    return f(x) != d.eval(x);
  });
  e.half_width = hoeffding_half_width(samples, confidence);
  e.samples = samples;
  e.confidence = confidence;
  e.seed = seed;
  return e;
}

}  // namespace cubelab
