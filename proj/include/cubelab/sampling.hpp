#pragma once

#include <cstdint>
#include <string>

#include "cubelab/dnf.hpp"
#include "cubelab/function_spec.hpp"

namespace cubelab {

inline constexpr double kDefaultConfidence = 0.999;

// A Monte-Carlo estimate with a distribution-free (Hoeffding) two-sided
// radius: half_width = scale * sqrt(ln(2/(1-confidence)) / (2*samples)).
// scale is 1 for probabilities and n for the total-influence estimator,
// whose samples live in [0, n].
struct Estimate {
  std::string quantity;
  double value = 0.0;
  double half_width = 0.0;
  uint64_t samples = 0;
  double confidence = kDefaultConfidence;
  uint64_t seed = 0;
  double scale = 1.0;
};

double hoeffding_half_width(uint64_t samples, double confidence);

Estimate estimate_measure(const FunctionSpec& spec, uint64_t samples, uint64_t seed,
                          double confidence = kDefaultConfidence);
Estimate estimate_influence(const FunctionSpec& spec, int k, uint64_t samples, uint64_t seed,
                            double confidence = kDefaultConfidence);
// n * Pr[f(x) != f(x ^ e_k)] over jointly uniform (x, k); one point
// evaluation pair per sample.
Estimate estimate_total_influence(const FunctionSpec& spec, uint64_t samples, uint64_t seed,
                                  double confidence = kDefaultConfidence);
Estimate estimate_dnf_error(const FunctionSpec& spec, const Dnf& d, uint64_t samples,
                            uint64_t seed, double confidence = kDefaultConfidence);

}  // namespace cubelab
