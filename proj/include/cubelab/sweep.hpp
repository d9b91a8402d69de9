#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "cubelab/rational.hpp"

namespace cubelab {

inline constexpr int kSweepSchemaVersion = 1;

// One bound-verification run over a family of functions. Checks are the
// published tokens: iso, kkl, infind, lemma6, lemma12, lemma14, approx-cert.
// Every item is labeled by a spec string that regenerates it, so a sweep is
// reproducible from its summary alone.
struct SweepConfig {
  std::string family = "exhaustive-n";  // exhaustive-n | random | generator-grid
  int n = 4;
  int n_min = 0;  // random family: dimensions drawn from [n_min, n]; 0 = fixed n
  uint64_t count = 1000;
  uint64_t seed = 1;
  std::vector<std::string> checks;
  std::string grid;  // generator-grid pattern, e.g. "sharpness:w=2,l=0..4"
  std::vector<Rational> eps_list{Rational(1, 20), Rational(1, 10), Rational(1, 5),
                                 Rational(1, 2)};
  int jobs = 1;
};

struct SweepOutcome {
  nlohmann::json summary;
  uint64_t items = 0;
  uint64_t failures = 0;
};

// Runs the sweep; when csv is non-null a row per (item, check grid) is
// streamed to it. The summary JSON carries the config echo, pass/fail/skip
// totals per check, capped failure records with reproducer specs, and the
// empirical-constant reports (lemma11 min ratio, lemma4 ratio curve and
// c1_hat, lemma12 min slack, c5 relative-gain minimum, iso equality count).
SweepOutcome run_sweep(const SweepConfig& config, std::ostream* csv);

std::string sweep_csv_header();

}  // namespace cubelab
