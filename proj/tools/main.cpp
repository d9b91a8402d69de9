// cubelab: exact analysis of Boolean functions on the discrete cube.
//
// Subcommands: analyze, shift, approx, oracle, sweep, estimate. All output
// is JSON (CSV for sweep rows); schemas are documented in the README.
// CUBELAB_MAX_N overrides the default exact-mode dimension cap of 24.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "cubelab/approx.hpp"
#include "cubelab/function_spec.hpp"
#include "cubelab/influence.hpp"
#include "cubelab/json_io.hpp"
#include "cubelab/sampling.hpp"
#include "cubelab/shifting.hpp"
#include "cubelab/sweep.hpp"

namespace {

using namespace cubelab;

std::vector<int> parse_coord_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream body(text);
  std::string item;
  while (std::getline(body, item, ','))
    if (!item.empty()) out.push_back(std::stoi(item));
  return out;
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

int run(int argc, char** argv) {
  CLI::App app{"cubelab: influences, isoperimetric/KKL bounds, shifting and certified DNF "
               "approximation for Boolean functions"};
  app.require_subcommand(1);

  // analyze
  std::string fn_spec;
  bool fourier_check = false;
  auto* analyze = app.add_subcommand("analyze", "influence report for one function");
  analyze->add_option("--fn", fn_spec, "function spec, e.g. 'tribes:w=2,s=4'")->required();
  analyze->add_flag("--fourier-check", fourier_check,
                    "also run the Walsh-Hadamard influence cross-check");

  // shift
  std::string shift_fn, s_list, t_list;
  bool pipeline = false;
  auto* shift_cmd = app.add_subcommand("shift", "apply a compression operator or the pipeline");
  shift_cmd->add_option("--fn", shift_fn, "function spec")->required();
  shift_cmd->add_option("--S", s_list, "coordinates of S, e.g. '1,3'");
  shift_cmd->add_option("--T", t_list, "coordinates of T, e.g. '2'");
  shift_cmd->add_flag("--pipeline", pipeline, "run the full compression pipeline f^0..f^n");

  // approx
  std::string approx_fn, eps_text, rule_name = "proportional-to-Mmu", rho_text = "1/16";
  int oracle_cap = 4, scan_cap = 12;
  bool no_trace = false;
  auto* approx_cmd = app.add_subcommand("approx", "certified recursive DNF approximation");
  approx_cmd->add_option("--fn", approx_fn, "function spec")->required();
  approx_cmd->add_option("--eps", eps_text, "relative error budget (error <= eps * mu)")
      ->required();
  approx_cmd->add_option("--split-rule", rule_name,
                         "proportional-to-Mmu | proportional-to-mu | equal");
  approx_cmd->add_option("--rho", rho_text, "small-side factor in (0,1)");
  approx_cmd->add_option("--oracle-cap", oracle_cap, "max n for the exhaustive 2-term fallback");
  approx_cmd->add_option("--scan-cap", scan_cap, "max n for the full best-sub-cube scan");
  approx_cmd->add_flag("--no-trace", no_trace, "omit the recursion trace from the output");

  // oracle
  std::string oracle_fn;
  int oracle_size = 2;
  auto* oracle_cmd = app.add_subcommand("oracle", "exhaustive minimum-error small DNF");
  oracle_cmd->add_option("--fn", oracle_fn, "function spec")->required();
  oracle_cmd->add_option("--size", oracle_size, "maximum number of terms (<= 2)")->required();

  // sweep
  SweepConfig sweep_config;
  std::string checks_text, eps_list_text, csv_path, summary_path;
  auto* sweep_cmd = app.add_subcommand("sweep", "bound-verification sweep over a family");
  sweep_cmd->add_option("--family", sweep_config.family,
                        "exhaustive-n | random | generator-grid");
  sweep_cmd->add_option("--n", sweep_config.n, "dimension (max dimension for random)");
  sweep_cmd->add_option("--n-min", sweep_config.n_min, "min dimension for the random family");
  sweep_cmd->add_option("--count", sweep_config.count, "number of random functions");
  sweep_cmd->add_option("--seed", sweep_config.seed, "base seed");
  sweep_cmd->add_option("--checks", checks_text,
                        "comma list of iso,kkl,infind,lemma6,lemma12,lemma14,approx-cert")
      ->required();
  sweep_cmd->add_option("--grid", sweep_config.grid,
                        "generator grid, e.g. 'sharpness:w=2,l=0..4'");
  sweep_cmd->add_option("--eps", eps_list_text, "eps list for approx-cert (default 0.05,0.1,0.2,0.5)");
  sweep_cmd->add_option("--csv", csv_path, "write per-function rows to this file");
  sweep_cmd->add_option("--summary", summary_path, "write the summary JSON to this file");
  sweep_cmd->add_option("--jobs", sweep_config.jobs, "parallel workers");

  // estimate
  std::string est_fn, quantity = "measure", dnf_text;
  uint64_t samples = 1000000, est_seed = 1;
  int est_k = 1;
  double confidence = kDefaultConfidence;
  auto* est_cmd = app.add_subcommand("estimate", "Monte-Carlo estimates beyond the exact cap");
  est_cmd->add_option("--fn", est_fn, "function spec")->required();
  est_cmd->add_option("--quantity", quantity, "measure | influence | total-influence | dnf-error");
  est_cmd->add_option("--k", est_k, "coordinate for --quantity influence");
  est_cmd->add_option("--dnf", dnf_text, "DNF text for --quantity dnf-error");
  est_cmd->add_option("--samples", samples, "sample count");
  est_cmd->add_option("--seed", est_seed, "seed");
  est_cmd->add_option("--confidence", confidence, "two-sided confidence level");

  CLI11_PARSE(app, argc, argv);

  if (analyze->parsed()) {
    const FunctionSpec spec = FunctionSpec::parse(fn_spec);
    const BooleanFunction f = spec.materialize();
    json out = to_json(report(f));
    out["spec"] = spec.to_string();
    if (fourier_check) out["fourier_max_deviation"] = real_to_string(fourier_influence_check(f));
    emit(out);
    return 0;
  }

  if (shift_cmd->parsed()) {
    const FunctionSpec spec = FunctionSpec::parse(shift_fn);
    const BooleanFunction f = spec.materialize();
    if (pipeline) {
      const auto stages = compress_pipeline(f);
      json stage_list = json::array();
      for (size_t i = 0; i < stages.size(); ++i) {
        stage_list.push_back(json{{"stage", "f" + std::to_string(i)},
                                  {"hex", stages[i].to_hex()},
                                  {"mu", to_json(stages[i].measure())},
                                  {"total_influence", to_json(total_influence(stages[i]))}});
      }
      emit(json{{"spec", spec.to_string()}, {"stages", stage_list}});
      return 0;
    }
    ShiftSpec sspec;
    sspec.s_mask = coord_mask(parse_coord_list(s_list), f.n());
    sspec.t_mask = coord_mask(parse_coord_list(t_list), f.n());
    const BooleanFunction g = shift(f, sspec);
    emit(json{{"spec", spec.to_string()},
              {"S", parse_coord_list(s_list)},
              {"T", parse_coord_list(t_list)},
              {"input_hex", f.to_hex()},
              {"output_hex", g.to_hex()},
              {"mu", to_json(g.measure())}});
    return 0;
  }

  if (approx_cmd->parsed()) {
    const FunctionSpec spec = FunctionSpec::parse(approx_fn);
    const BooleanFunction f = spec.materialize();
    BudgetPolicy policy;
    policy.split_rule = BudgetPolicy::parse_rule(rule_name);
    policy.small_side_factor = Rational::parse(rho_text);
    policy.oracle_cap = oracle_cap;
    policy.subcube_scan_cap = scan_cap;
    const ApproxResult result = approximate(f, Rational::parse(eps_text), policy);
    json out = to_json(result, !no_trace);
    out["spec"] = spec.to_string();
    out["eps"] = to_json(Rational::parse(eps_text));
    out["policy"] = json{{"split_rule", rule_name},
                         {"small_side_factor", to_json(policy.small_side_factor)},
                         {"oracle_cap", policy.oracle_cap},
                         {"subcube_scan_cap", policy.subcube_scan_cap}};
    emit(out);
    return 0;
  }

  if (oracle_cmd->parsed()) {
    const FunctionSpec spec = FunctionSpec::parse(oracle_fn);
    const BooleanFunction f = spec.materialize();
    const auto [dnf, error] = best_dnf_oracle(f, oracle_size);
    emit(json{{"spec", spec.to_string()},
              {"size_cap", oracle_size},
              {"dnf", to_json(dnf)},
              {"error", to_json(error)}});
    return 0;
  }

  if (sweep_cmd->parsed()) {
    std::stringstream checks(checks_text);
    std::string check;
    while (std::getline(checks, check, ','))
      if (!check.empty()) sweep_config.checks.push_back(check);
    if (!eps_list_text.empty()) {
      sweep_config.eps_list.clear();
      std::stringstream eps_stream(eps_list_text);
      std::string eps;
      while (std::getline(eps_stream, eps, ','))
        if (!eps.empty()) sweep_config.eps_list.push_back(Rational::parse(eps));
    }
    std::ofstream csv_file;
    std::ostream* csv = nullptr;
    if (!csv_path.empty()) {
      csv_file.open(csv_path);
      if (!csv_file) throw std::runtime_error("cannot write " + csv_path);
      csv = &csv_file;
    }
    const SweepOutcome outcome = run_sweep(sweep_config, csv);
    if (!summary_path.empty()) {
      std::ofstream summary_file(summary_path);
      if (!summary_file) throw std::runtime_error("cannot write " + summary_path);
      summary_file << outcome.summary.dump(2) << "\n";
    }
    emit(outcome.summary);
    return outcome.failures == 0 ? 0 : 1;
  }

  if (est_cmd->parsed()) {
    const FunctionSpec spec = FunctionSpec::parse(est_fn);
    Estimate e;
    if (quantity == "measure") {
      e = estimate_measure(spec, samples, est_seed, confidence);
    } else if (quantity == "influence") {
      e = estimate_influence(spec, est_k, samples, est_seed, confidence);
    } else if (quantity == "total-influence") {
      e = estimate_total_influence(spec, samples, est_seed, confidence);
    } else if (quantity == "dnf-error") {
      e = estimate_dnf_error(spec, parse_dnf(dnf_text, spec.dimension()), samples, est_seed,
                             confidence);
    } else {
      throw std::invalid_argument("unknown quantity: " + quantity);
    }
    json out = to_json(e);
    out["spec"] = spec.to_string();
    emit(out);
    return 0;
  }

  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const std::exception& err) {
    std::cerr << json{{"error", err.what()}}.dump() << "\n";
    return 2;
  }
}
