#include "cubelab/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <functional>
#include <future>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "cubelab/approx.hpp"
#include "cubelab/bits.hpp"
#include "cubelab/bool_function.hpp"
#include "cubelab/dnf.hpp"
#include "cubelab/function_spec.hpp"
#include "cubelab/generators.hpp"
#include "cubelab/influence.hpp"
#include "cubelab/json_io.hpp"
#include "cubelab/shifting.hpp"

namespace cubelab {

namespace {

constexpr double kLogTol = 1e-12;   // isoperimetric log-side tolerance
constexpr double kBoundTol = 1e-9;  // kkl / split-gain tolerances
const double kNan = std::numeric_limits<double>::quiet_NaN();

const std::vector<std::string> kAllChecks = {"iso",     "kkl",     "infind",     "lemma6",
                                             "lemma12", "lemma14", "approx-cert"};

const std::vector<double> kLemma4Grid = {0.25, 0.5, 0.75, 1.0, 1.5, 2.0, 3.0, 4.0};

struct ItemRow {
  std::string spec;
  std::string hex;  // reproducer table, filled for small n
  int n = 0;
  uint64_t ones = 0;
  uint64_t icount = 0;
  double M = kNan;
  uint64_t max_ic = 0;
  // per requested check: 'P', 'F', 'S' (skipped / not applicable)
  std::vector<char> status;
  std::string failure_check, failure_detail;
  bool iso_equality = false;
  double lemma11_ratio = kNan;
  double lemma12_slack = kNan;
  double lemma4_c1 = kNan;
  double c5_rel_gain = kNan;
  std::vector<double> lemma4_curve;     // per kLemma4Grid entry, ratio for this f
  std::vector<double> claim1_failing;   // per eps: small-side fraction if the
                                        // zero-the-small-side accounting fails
};

struct SplitStats {
  bool valid = false;       // n >= 2 and f non-constant
  int coord = 1;            // max-influence coordinate, smallest on ties
  uint64_t ones0 = 0, ones1 = 0;
  bool both_nonconstant = false;
  double gain = kNan, bound = kNan;
  double ex0 = 0.0, ex1 = 0.0;  // restriction excesses, 0 for constants
};

SplitStats max_influence_split(const BooleanFunction& f, const std::vector<uint64_t>& counts) {
  SplitStats s;
  if (f.n() < 2 || f.is_constant()) return s;
  s.valid = true;
  for (int k = 2; k <= f.n(); ++k)
    if (counts[k - 1] > counts[s.coord - 1]) s.coord = k;
  const BooleanFunction f1 = f.restrict_coord(s.coord, 1);
  const BooleanFunction f0 = f.restrict_coord(s.coord, 0);
  s.ones1 = f1.count_ones();
  s.ones0 = f0.count_ones();
  s.both_nonconstant = !f1.is_constant() && !f0.is_constant();
  s.gain = split_gain(f, s.coord);
  s.bound = split_gain_lower_bound(f, s.coord);
  s.ex0 = excess(f0);
  s.ex1 = excess(f1);
  return s;
}

// f vanishes on the x_1 = 0 half.
bool vanishes_on_lower_half(const BooleanFunction& f) {
  for (uint64_t w : f.words())
    if (w & kHalfMask[0]) return false;
  return true;
}

Dnf random_dnf(int n, uint64_t seed) {
  Dnf d;
  d.n = n;
  uint64_t state = splitmix64(seed);
  auto next = [&state]() { return state = splitmix64(state); };
  const int size = 1 + static_cast<int>(next() % 8);
  for (int t = 0; t < size; ++t) {
    Term term;
    const int width = static_cast<int>(next() % (n + 1));
    uint32_t chosen = 0;
    while (popcount64(chosen) < width) chosen |= 1u << (next() % n);
    const uint32_t signs = static_cast<uint32_t>(next());
    term.pos = chosen & signs;
    term.neg = chosen & ~signs;
    d.terms.push_back(term);
  }
  return d;
}

class Tracker {
 public:
  void see_min(double value, const std::string& spec) {
    if (std::isnan(value)) return;
    if (!has_ || value < best_) {
      has_ = true;
      best_ = value;
      witness_ = spec;
    }
  }
  void see_max(double value, const std::string& spec) {
    if (std::isnan(value)) return;
    if (!has_ || value > best_) {
      has_ = true;
      best_ = value;
      witness_ = spec;
    }
  }
  bool has() const { return has_; }
  json to_json(const char* key) const {
    if (!has_) return json{{key, nullptr}, {"witness", nullptr}};
    return json{{key, real_to_string(best_)}, {"witness", witness_}};
  }

 private:
  bool has_ = false;
  double best_ = 0;
  std::string witness_;
};

struct CheckEngine {
  const SweepConfig& config;
  std::vector<std::string> checks;  // validated, in request order

  bool wants(const std::string& name) const {
    return std::find(checks.begin(), checks.end(), name) != checks.end();
  }

  // Evaluates all requested checks for one function. check_seed drives the
  // per-item randomness (infind coordinate, lemma14 DNF).
  ItemRow evaluate(const BooleanFunction& f, const std::string& spec, uint64_t check_seed,
                   bool exhaustive) const {
    ItemRow row;
    row.spec = spec;
    if (f.n() <= 16) row.hex = f.to_hex();
    row.n = f.n();
    row.ones = f.count_ones();
    row.status.assign(checks.size(), 'S');

    const auto counts = influence_counts(f);
    for (uint64_t c : counts) row.icount += c;
    row.max_ic = *std::max_element(counts.begin(), counts.end());
    const bool constant = row.ones == 0 || row.ones == f.domain_size();
    if (!constant) row.M = excess_from_counts(row.icount, row.ones, f.n());

    auto set = [&](const std::string& name, bool pass, const std::string& detail) {
      const auto it = std::find(checks.begin(), checks.end(), name);
      if (it == checks.end()) return;
      row.status[it - checks.begin()] = pass ? 'P' : 'F';
      if (!pass && row.failure_check.empty()) {
        row.failure_check = name;
        row.failure_detail = detail;
      }
    };

    SplitStats split;
    if (!constant) split = max_influence_split(f, counts);

    if (wants("iso") && !constant) {
      const double total = std::ldexp(static_cast<double>(row.icount), -f.n());
      const double mu = std::ldexp(static_cast<double>(row.ones), -f.n());
      const double lower = 2.0 * mu * std::log2(1.0 / mu);
      const double lower_c = 2.0 * (1.0 - mu) * std::log2(1.0 / (1.0 - mu));
      bool equality = false;
      bool pass = total >= lower - kLogTol && total >= lower_c - kLogTol;
      if ((row.ones & (row.ones - 1)) == 0) {
        // mu a power of two: the bound is k*ones/2^(n-1), compare exactly
        const int k = f.n() - std::countr_zero(row.ones);
        equality = row.icount == 2 * row.ones * static_cast<uint64_t>(k);
        if (row.icount < 2 * row.ones * static_cast<uint64_t>(k)) pass = false;
      }
      row.iso_equality = equality;
      // equality must happen exactly on sub-cube indicators
      const bool subcube = subcube_indicator_check(f, row.ones);
      if (equality != subcube) pass = false;
      set("iso", pass, "isoperimetric bound or equality-classification failed");
    }

    if (wants("kkl") && !constant) {
      const double total = std::ldexp(static_cast<double>(row.icount), -f.n());
      const double mu = std::ldexp(static_cast<double>(row.ones), -f.n());
      const double itilde = total / (4.0 * mu * (1.0 - mu));
      const double bound = 9.0 / (itilde * itilde) * std::pow(9.0, -itilde);
      const double maxi = std::ldexp(static_cast<double>(row.max_ic), -f.n());
      set("kkl", maxi >= bound - kBoundTol, "KKL max-influence bound failed");
    }

    if (wants("infind") && f.n() >= 2) {
      bool pass = true;
      if (exhaustive) {
        for (int i = 1; i <= f.n() && pass; ++i) {
          const auto [lhs, rhs] = decomposition_check(f, i);
          pass = lhs == rhs;
        }
      } else {
        const int i = 1 + static_cast<int>(splitmix64(check_seed ^ 0x1f) % f.n());
        const auto [lhs, rhs] = decomposition_check(f, i);
        pass = lhs == rhs;
      }
      set("infind", pass, "restriction identity violated");
    }

    if (wants("lemma6")) {
      if (2 * row.ones > f.domain_size()) {
        // stays 'S': the pipeline hypothesis mu <= 1/2 does not hold
      } else {
        bool pass = true;
        std::string what;
        const auto stages = compress_pipeline(f);
        for (const auto& stage : stages)
          if (stage.count_ones() != row.ones) {
            pass = false;
            what = "measure not preserved";
          }
        const auto& last = stages.back();
        const auto final_counts = influence_counts(last);
        for (int i = 2; i <= f.n() && pass; ++i)
          if (final_counts[i - 1] > counts[i - 1]) {
            pass = false;
            what = "per-coordinate influence increased";
          }
        uint64_t final_total = 0;
        for (uint64_t c : final_counts) final_total += c;
        if (pass && final_total > row.icount) {
          pass = false;
          what = "total influence increased";
        }
        if (pass && !vanishes_on_lower_half(last)) {
          pass = false;
          what = "compressed function does not vanish on the x1=0 half";
        }
        set("lemma6", pass, what);
      }
    }

    if (wants("lemma12") && split.valid && split.both_nonconstant) {
      set("lemma12", split.gain >= split.bound - kBoundTol, "split-gain lower bound failed");
    }

    if (wants("lemma14")) {
      const Dnf d = random_dnf(f.n(), check_seed ^ 0xd9f);
      const BooleanFunction full = to_function(d);
      bool pass = true;
      for (int w = 0; w <= d.width() && pass; ++w) {
        const uint64_t disagree = dnf_error_count(full, truncate(d, w));
        // contract: Pr <= size * 2^-w, i.e. count <= size * 2^(n-w)
        if (w <= f.n())
          pass = disagree <= (static_cast<uint64_t>(d.size()) << (f.n() - w));
      }
      set("lemma14", pass, "truncation union bound failed for " + format_dnf(d));
    }

    if (wants("approx-cert")) {
      bool pass = true;
      std::string what;
      for (const Rational& eps : config.eps_list) {
        const ApproxResult res = approximate(f, eps);
        const __int128 lhs = static_cast<__int128>(res.error_points) * eps.den;
        const __int128 rhs = static_cast<__int128>(eps.num) * row.ones;
        if (lhs > rhs || dnf_error_count(f, res.dnf) != res.error_points) {
          pass = false;
          what = "certification failed at eps " + eps.to_string();
          break;
        }
      }
      set("approx-cert", pass, what);
    }

    // empirical-constant reports (no assertions)
    if (split.valid) {
      const uint64_t zeta_num =
          std::min({counts[split.coord - 1], 2 * split.ones0, 2 * split.ones1});
      if (zeta_num > 0)
        row.lemma11_ratio = split.gain / std::ldexp(static_cast<double>(zeta_num), -f.n());
      if (split.both_nonconstant) {
        row.lemma12_slack = split.gain - split.bound;
        if (!std::isnan(row.M) && row.M > 1e-12) {
          const double mu = std::ldexp(static_cast<double>(row.ones), -f.n());
          row.c5_rel_gain = split.gain / (2.0 * row.M * mu);
        }
      }
      // does zeroing the small side stay within the eps*M*mu allowance?
      if (!std::isnan(row.M) && row.M > 1e-12) {
        const uint64_t small = std::min(split.ones0, split.ones1);
        const uint64_t large = split.ones0 + split.ones1 - small;
        const double m_large = split.ones1 >= split.ones0 ? split.ex1 : split.ex0;
        row.claim1_failing.reserve(config.eps_list.size());
        for (const Rational& eps_r : config.eps_list) {
          const double eps = eps_r.to_double();
          const double lhs =
              eps * m_large * static_cast<double>(large) + static_cast<double>(small);
          const double rhs = eps * row.M * static_cast<double>(row.ones);
          // exact ties (e.g. an empty small side with M unchanged) must close
          const bool closes = lhs <= rhs + kBoundTol * (1.0 + std::abs(rhs));
          row.claim1_failing.push_back(
              closes ? kNan : 2.0 * static_cast<double>(small) / static_cast<double>(row.ones));
        }
      }
    }
    if (!constant && !std::isnan(row.M) && row.M > 1e-12) {
      const double mu = std::ldexp(static_cast<double>(row.ones), -f.n());
      const double maxi = std::ldexp(static_cast<double>(row.max_ic), -f.n());
      const double delta = 1.0 - mu;
      row.lemma4_c1 = std::max(0.0, delta * std::log2(mu / maxi) / row.M);
      row.lemma4_curve.reserve(kLemma4Grid.size());
      for (double x : kLemma4Grid)
        row.lemma4_curve.push_back(maxi / (mu * std::exp2(-x * row.M / delta)));
    }
    return row;
  }

  static bool subcube_indicator_check(const BooleanFunction& f, uint64_t ones) {
    if (ones == 0) return false;
    uint64_t and_mask = ~uint64_t{0}, or_mask = 0;
    for (uint64_t x = 0; x < f.domain_size(); ++x)
      if (f.get(x)) {
        and_mask &= x;
        or_mask |= x;
      }
    const uint64_t full = f.full_coord_mask();
    const int free = f.n() - popcount64(and_mask & full) - popcount64(~or_mask & full);
    return ones == (uint64_t{1} << free);
  }
};

std::string dyadic_text(uint64_t num, int pow) {
  return std::to_string(num) + "/2^" + std::to_string(pow);
}

void write_row(std::ostream& out, const CheckEngine& engine, const ItemRow& row) {
  // spec strings carry commas, so the field is always quoted
  out << kSweepSchemaVersion << ',' << '"' << row.spec << '"' << ',' << row.n << ','
      << dyadic_text(row.ones, row.n) << ',' << dyadic_text(row.icount, row.n) << ','
      << (std::isnan(row.M) ? "" : real_to_string(row.M)) << ','
      << dyadic_text(row.max_ic, row.n);
  for (const std::string& name : kAllChecks) {
    const auto it = std::find(engine.checks.begin(), engine.checks.end(), name);
    out << ',';
    if (it != engine.checks.end()) out << row.status[it - engine.checks.begin()];
  }
  auto real_cell = [&out](double v) {
    out << ',';
    if (!std::isnan(v)) out << real_to_string(v);
  };
  real_cell(row.lemma11_ratio);
  real_cell(row.lemma12_slack);
  real_cell(row.lemma4_c1);
  real_cell(row.c5_rel_gain);
  out << '\n';
}

// Expands "kind:a=1,b=0..4" into the list of concrete specs, ranges last
// parameter varying fastest (parameters iterate in name order).
std::vector<FunctionSpec> expand_grid(const std::string& pattern) {
  const auto colon = pattern.find(':');
  if (colon == std::string::npos) return {FunctionSpec::parse(pattern)};
  const std::string kind = pattern.substr(0, colon);
  struct Range {
    std::string key;
    int64_t lo, hi;
  };
  std::vector<Range> ranges;
  std::stringstream body(pattern.substr(colon + 1));
  std::string item;
  while (std::getline(body, item, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw std::invalid_argument("bad grid parameter: " + item);
    const std::string key = item.substr(0, eq);
    const std::string value = item.substr(eq + 1);
    const auto dots = value.find("..");
    if (dots == std::string::npos) {
      const int64_t v = std::stoll(value);
      ranges.push_back({key, v, v});
    } else {
      ranges.push_back({key, std::stoll(value.substr(0, dots)), std::stoll(value.substr(dots + 2))});
    }
  }
  std::vector<FunctionSpec> specs;
  std::vector<int64_t> cursor;
  for (const Range& r : ranges) {
    if (r.hi < r.lo) throw std::invalid_argument("empty range for " + r.key);
    cursor.push_back(r.lo);
  }
  while (true) {
    FunctionSpec spec;
    spec.kind = kind;
    for (size_t i = 0; i < ranges.size(); ++i) spec.params[ranges[i].key] = cursor[i];
    specs.push_back(std::move(spec));
    int i = static_cast<int>(ranges.size()) - 1;
    while (i >= 0 && cursor[i] == ranges[i].hi) {
      cursor[i] = ranges[i].lo;
      --i;
    }
    if (i < 0) break;
    ++cursor[i];
  }
  return specs;
}

}  // namespace

std::string sweep_csv_header() {
  std::string header = "schema_version,spec,n,mu,total_influence,M,max_influence";
  for (const std::string& name : kAllChecks) header += "," + name;
  header += ",lemma11_ratio,lemma12_slack,lemma4_c1,c5_rel_gain";
  return header;
}

SweepOutcome run_sweep(const SweepConfig& config, std::ostream* csv) {
  CheckEngine engine{config, {}};
  for (const std::string& c : config.checks) {
    if (std::find(kAllChecks.begin(), kAllChecks.end(), c) == kAllChecks.end())
      throw std::invalid_argument("unknown check: " + c);
    engine.checks.push_back(c);
  }
  if (engine.checks.empty()) throw std::invalid_argument("no checks requested");

  if (csv) *csv << sweep_csv_header() << '\n';

  // trackers and totals
  std::vector<uint64_t> passed(engine.checks.size()), failed(engine.checks.size()),
      skipped(engine.checks.size());
  Tracker lemma11_min, lemma12_min_slack, lemma4_c1_max, c5_min;
  std::vector<Tracker> curve_min(kLemma4Grid.size());
  std::vector<Tracker> claim1_min(config.eps_list.size());
  uint64_t iso_equalities = 0;
  json failures = json::array();
  uint64_t items = 0, total_failures = 0;

  auto consume = [&](const ItemRow& row) {
    ++items;
    bool failed_any = false;
    for (size_t c = 0; c < engine.checks.size(); ++c) {
      switch (row.status[c]) {
        case 'P': ++passed[c]; break;
        case 'F': ++failed[c]; failed_any = true; break;
        default: ++skipped[c]; break;
      }
    }
    if (failed_any) {
      ++total_failures;
      if (failures.size() < 32) {
        json record{{"check", row.failure_check},
                    {"spec", row.spec},
                    {"detail", row.failure_detail}};
        if (!row.hex.empty()) record["witness_hex"] = row.hex;
        failures.push_back(std::move(record));
      }
    }
    if (row.iso_equality) ++iso_equalities;
    lemma11_min.see_min(row.lemma11_ratio, row.spec);
    lemma12_min_slack.see_min(row.lemma12_slack, row.spec);
    lemma4_c1_max.see_max(row.lemma4_c1, row.spec);
    c5_min.see_min(row.c5_rel_gain, row.spec);
    for (size_t i = 0; i < row.lemma4_curve.size(); ++i)
      curve_min[i].see_min(row.lemma4_curve[i], row.spec);
    for (size_t i = 0; i < row.claim1_failing.size(); ++i)
      claim1_min[i].see_min(row.claim1_failing[i], row.spec);
  };

  // Item generators are cheap; functions are materialized block-wise and the
  // blocks are mapped by a small worker pool when jobs > 1. Rows are consumed
  // in item order regardless of scheduling, so output is canonical.
  struct Job {
    BooleanFunction f;
    std::string label;
    uint64_t check_seed = 0;
    bool exhaustive = false;
  };
  std::function<bool(uint64_t, Job&)> make_job;
  uint64_t total_items = 0;

  std::vector<FunctionSpec> grid_specs;
  if (config.family == "exhaustive-n") {
    if (config.n < 1 || config.n > 4)
      throw std::invalid_argument("exhaustive-n supports n <= 4 (2^16 functions)");
    total_items = uint64_t{1} << (uint64_t{1} << config.n);
    make_job = [&config](uint64_t t, Job& job) {
      job.f = BooleanFunction(config.n);
      job.f.words()[0] = t;
      job.label = job.f.to_hex();
      job.check_seed = splitmix64(config.seed ^ t);
      job.exhaustive = true;
      return true;
    };
  } else if (config.family == "random") {
    const int n_lo = config.n_min > 0 ? config.n_min : config.n;
    if (n_lo < 1 || n_lo > config.n) throw std::invalid_argument("bad dimension range");
    total_items = config.count;
    make_job = [&config, n_lo](uint64_t i, Job& job) {
      const uint64_t item_seed = config.seed + i;
      const int n = n_lo == config.n
                        ? config.n
                        : n_lo + static_cast<int>(splitmix64(item_seed ^ 0x77) %
                                                  static_cast<uint64_t>(config.n - n_lo + 1));
      FunctionSpec spec;
      spec.kind = "random";
      spec.params["n"] = n;
      spec.params["seed"] = static_cast<int64_t>(item_seed);
      job.f = spec.materialize();
      job.label = spec.to_string();
      job.check_seed = splitmix64(item_seed ^ 0xc0ffee);
      job.exhaustive = false;
      return true;
    };
  } else if (config.family == "generator-grid") {
    if (config.grid.empty()) throw std::invalid_argument("generator-grid needs a grid pattern");
    grid_specs = expand_grid(config.grid);
    total_items = grid_specs.size();
    make_job = [&config, &grid_specs](uint64_t i, Job& job) {
      const FunctionSpec& spec = grid_specs[i];
      job.f = spec.materialize();
      job.label = spec.to_string();
      uint64_t label_hash = 0xcbf29ce484222325ULL;  // FNV-1a, platform-stable
      for (char c : job.label) label_hash = (label_hash ^ static_cast<uint8_t>(c)) * 0x100000001b3ULL;
      job.check_seed = splitmix64(config.seed ^ label_hash);
      job.exhaustive = false;
      return true;
    };
  } else {
    throw std::invalid_argument("unknown family: " + config.family);
  }

  const int jobs = std::max(1, config.jobs);
  const uint64_t block_size = 4096;
  std::vector<Job> block;
  std::vector<ItemRow> rows;
  for (uint64_t base = 0; base < total_items; base += block_size) {
    const uint64_t in_block = std::min(block_size, total_items - base);
    block.assign(in_block, Job{});
    for (uint64_t i = 0; i < in_block; ++i) make_job(base + i, block[i]);
    rows.assign(in_block, ItemRow{});
    if (jobs == 1) {
      for (uint64_t i = 0; i < in_block; ++i)
        rows[i] = engine.evaluate(block[i].f, block[i].label, block[i].check_seed,
                                  block[i].exhaustive);
    } else {
      std::vector<std::future<void>> workers;
      std::atomic<uint64_t> cursor{0};
      for (int w = 0; w < jobs; ++w) {
        workers.push_back(std::async(std::launch::async, [&]() {
          for (uint64_t i; (i = cursor.fetch_add(1)) < in_block;)
            rows[i] = engine.evaluate(block[i].f, block[i].label, block[i].check_seed,
                                      block[i].exhaustive);
        }));
      }
      for (auto& w : workers) w.get();
    }
    for (uint64_t i = 0; i < in_block; ++i) {
      if (csv) write_row(*csv, engine, rows[i]);
      consume(rows[i]);
    }
  }

  json checks_json = json::object();
  for (size_t c = 0; c < engine.checks.size(); ++c) {
    checks_json[engine.checks[c]] = {
        {"passed", passed[c]}, {"failed", failed[c]}, {"skipped", skipped[c]}};
  }
  json eps = json::array();
  for (const Rational& r : config.eps_list) eps.push_back(r.to_string());

  json curve = json::array();
  for (size_t i = 0; i < kLemma4Grid.size(); ++i) {
    json point = curve_min[i].to_json("min_ratio");
    point["x"] = kLemma4Grid[i];
    curve.push_back(std::move(point));
  }
  // smallest small-side fraction at which zeroing the small side ever
  // overran the eps*M*mu allowance (null: the accounting always closed)
  json claim1 = json::array();
  for (size_t i = 0; i < config.eps_list.size(); ++i) {
    json entry = claim1_min[i].to_json("min_failing_fraction");
    entry["eps"] = config.eps_list[i].to_string();
    claim1.push_back(std::move(entry));
  }

  SweepOutcome outcome;
  outcome.items = items;
  outcome.failures = total_failures;
  outcome.summary = json{
      {"schema_version", kSweepSchemaVersion},
      {"config",
       {{"family", config.family},
        {"n", config.n},
        {"n_min", config.n_min},
        {"count", config.count},
        {"seed", config.seed},
        {"checks", engine.checks},
        {"grid", config.grid},
        {"eps", eps}}},
      {"items", items},
      {"failures", total_failures},
      {"checks", checks_json},
      {"failure_records", failures},
      {"reports",
       {{"iso_equality_count", iso_equalities},
        {"lemma11", lemma11_min.to_json("min_ratio")},
        {"lemma12", lemma12_min_slack.to_json("min_slack")},
        {"lemma4",
         {{"c1_hat", lemma4_c1_max.to_json("max")},
          {"curve", curve}}},
        {"c5_analogue", c5_min.to_json("min_relative_gain")},
        {"claim1_closure", claim1}}},
  };
  return outcome;
}

}  // namespace cubelab
