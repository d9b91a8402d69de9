#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "cubelab/bool_function.hpp"
#include "cubelab/dyadic.hpp"

namespace cubelab {

// Number of points x with f(x) != f(x ^ e_k); I_k(f) is this over 2^n.
uint64_t influence_count(const BooleanFunction& f, int k);
std::vector<uint64_t> influence_counts(const BooleanFunction& f);

Dyadic influence(const BooleanFunction& f, int k);
Dyadic total_influence(const BooleanFunction& f);

// Everything the analyzer reports about one function. Exact rationals for
// the probabilistic quantities; binary logs (M and the two lower bounds)
// are doubles.
struct InfluenceReport {
  int n = 0;
  Dyadic mu;
  std::vector<Dyadic> per_coord;
  Dyadic total;
  double M = 0.0;              // I = 2*mu*(log2(1/mu) + M)
  bool M_degenerate = false;   // constant function: M fixed to 0 by convention
  double iso_bound = 0.0;      // 2*mu*log2(1/mu)
  double kkl_bound = 0.0;      // (9/Itilde^2) * 9^(-Itilde), Itilde = I/(4 mu (1-mu))
  bool kkl_defined = false;    // false for constant functions
  int max_coord = 1;           // maximal influence, smallest index on ties
};

InfluenceReport report(const BooleanFunction& f);

// M for a non-constant function given the raw counts.
double excess_from_counts(uint64_t influence_count_total, uint64_t ones, int n);

// M with the constant-function convention M = 0.
double excess(const BooleanFunction& f);

// lhs = I(f), rhs = (I(f1)+I(f0))/2 + I_i(f); equal for every f and i.
std::pair<Dyadic, Dyadic> decomposition_check(const BooleanFunction& f, int i);

// max_k | I_k - 4 * sum_{S contains k} fhat(S)^2 |, computed exactly over
// the integer Walsh-Hadamard spectrum and returned as a double.
double fourier_influence_check(const BooleanFunction& f);

// sum_S fhat(S)^2 - mu, exactly zero for 0/1-valued f.
double parseval_deviation(const BooleanFunction& f);

// Integer Walsh-Hadamard spectrum: w[S] = sum_x f(x) * (-1)^{|x & S|},
// so fhat(S) = w[S] / 2^n.
std::vector<long long> walsh_spectrum(const BooleanFunction& f);

// 2*M*mu - M1*mu1 - M0*mu0 for the split at coordinate i, with M of a
// constant restriction taken as 0. All quantities live on their own cube.
double split_gain(const BooleanFunction& f, int i);

// min(mu0,mu1) * log2(mu / (2*min(mu0,mu1))); the proved lower bound for
// split_gain when both restrictions are non-constant. 0 when the small side
// is empty.
double split_gain_lower_bound(const BooleanFunction& f, int i);

}  // namespace cubelab
