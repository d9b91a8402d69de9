#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cubelab/bool_function.hpp"
#include "cubelab/dnf.hpp"
#include "cubelab/dyadic.hpp"
#include "cubelab/rational.hpp"

namespace cubelab {

// How a recursion node divides its error allowance between the two
// restrictions of the split coordinate.
struct BudgetPolicy {
  enum class SplitRule { proportional_m_mu, proportional_mu, equal };

  SplitRule split_rule = SplitRule::proportional_m_mu;
  // A restriction whose mass is at most this fraction of the node's mass is
  // approximated by the constant 0, handing its whole budget share to the
  // other side.
  Rational small_side_factor{1, 16};
  // Below this dimension a node may fall back to the exhaustive small-DNF
  // oracle.
  int oracle_cap = 4;
  // Below this dimension the best-single-sub-cube base does a full 3^m scan;
  // above it only cheap heuristic candidates are tried.
  int subcube_scan_cap = 12;

  static SplitRule parse_rule(const std::string& name);
  static std::string rule_name(SplitRule r);
};

// One recursion node of an approximation run, in depth-first order.
// Budgets are exact allowed-disagreement-point counts (rationals: the
// global denominator is the denominator of eps).
struct TraceNode {
  int id = 0;
  int parent = -1;
  int depth = 0;
  int m = 0;                  // node dimension
  std::string branch;         // constant-zero | subcube-base | oracle-base | split
  int split_coord = 0;        // original 1-based coordinate, 0 for leaves
  Dyadic mu0, mu1;            // restriction measures (split nodes)
  double M0 = 0.0, M1 = 0.0;  // restriction excesses, 0 for constants
  Rational budget_points;
  Rational child_budget1, child_budget0;  // split nodes
  uint64_t error_points = 0;
};

struct ApproxResult {
  Dnf dnf;
  Dyadic error;                // exact Pr[f != dnf]
  uint64_t error_points = 0;
  Rational budget;             // eps * mu, as a probability
  Rational budget_points;      // eps * |f^-1(1)|
  int size = 0;
  int width = 0;
  std::vector<TraceNode> trace;
};

// Certified recursive DNF approximation: the returned DNF always satisfies
// error <= eps * mu(f), checked exactly before returning. The recursion
// splits on the exact maximal-influence coordinate (smallest index on
// ties), combines children as (x_i AND D1) OR (!x_i AND D0), and uses three
// bases: constant zero when the node's mass fits its budget, an exact
// sub-cube when the function is one, and the best single sub-cube / small
// oracle DNF when that fits the budget.
ApproxResult approximate(const BooleanFunction& f, const Rational& eps,
                         const BudgetPolicy& policy = {});

// Exhaustive best single sub-cube: all 3^n terms plus the constant 0, in
// lexicographic order (per coordinate: positive < negated < free), first
// minimum wins. The returned DNF has at most one term (empty = constant 0).
std::pair<Dnf, Dyadic> best_subcube(const BooleanFunction& f);

// Exhaustive minimum-error DNF with at most max_terms terms (max_terms <= 2,
// n <= 8 enforced; intended for tiny ground-truth comparisons).
std::pair<Dnf, Dyadic> best_dnf_oracle(const BooleanFunction& f, int max_terms);

}  // namespace cubelab
