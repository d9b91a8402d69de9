#include "cubelab/influence.hpp"

#include <cmath>
#include <stdexcept>

#include "cubelab/bits.hpp"

namespace cubelab {

uint64_t influence_count(const BooleanFunction& f, int k) {
  if (k < 1 || k > f.n()) throw std::out_of_range("coordinate out of range");
  const auto& w = f.words();
  const int p = k - 1;
  uint64_t count = 0;
  if (p >= 6) {
    const size_t stride = size_t{1} << (p - 6);
    for (size_t i = 0; i < w.size(); ++i) count += popcount64(w[i] ^ w[i ^ stride]);
  } else {
    for (uint64_t word : w) count += popcount64(word ^ swap_halves(word, p));
  }
  return count;
}

std::vector<uint64_t> influence_counts(const BooleanFunction& f) {
  std::vector<uint64_t> counts(f.n());
  for (int k = 1; k <= f.n(); ++k) counts[k - 1] = influence_count(f, k);
  return counts;
}

Dyadic influence(const BooleanFunction& f, int k) {
  return Dyadic(static_cast<long long>(influence_count(f, k)), f.n());
}

Dyadic total_influence(const BooleanFunction& f) {
  uint64_t total = 0;
  for (uint64_t c : influence_counts(f)) total += c;
  return Dyadic(static_cast<long long>(total), f.n());
}

double excess_from_counts(uint64_t influence_count_total, uint64_t ones, int n) {
  // M = I/(2 mu) - log2(1/mu) = icount/(2*ones) - n + log2(ones)
  return static_cast<double>(influence_count_total) / (2.0 * static_cast<double>(ones)) -
         static_cast<double>(n) + std::log2(static_cast<double>(ones));
}

InfluenceReport report(const BooleanFunction& f) {
  InfluenceReport r;
  r.n = f.n();
  const uint64_t size = f.domain_size();
  const uint64_t ones = f.count_ones();
  r.mu = f.measure();

  const auto counts = influence_counts(f);
  uint64_t total = 0;
  r.per_coord.reserve(counts.size());
  for (uint64_t c : counts) {
    r.per_coord.emplace_back(static_cast<long long>(c), f.n());
    total += c;
  }
  r.total = Dyadic(static_cast<long long>(total), f.n());

  uint64_t best = 0;
  for (size_t k = 0; k < counts.size(); ++k) {
    if (counts[k] > best) {
      best = counts[k];
      r.max_coord = static_cast<int>(k) + 1;
    }
  }

  if (ones == 0 || ones == size) {
    r.M = 0.0;
    r.M_degenerate = true;
    r.iso_bound = 0.0;
    r.kkl_defined = false;
    return r;
  }
  const double mu = r.mu.to_double();
  r.M = excess_from_counts(total, ones, f.n());
  r.iso_bound = 2.0 * mu * std::log2(1.0 / mu);
  const double itilde = r.total.to_double() / (4.0 * mu * (1.0 - mu));
  r.kkl_bound = (9.0 / (itilde * itilde)) * std::pow(9.0, -itilde);
  r.kkl_defined = true;
  return r;
}

std::pair<Dyadic, Dyadic> decomposition_check(const BooleanFunction& f, int i) {
  if (f.n() < 2) throw std::invalid_argument("decomposition needs n >= 2");
  const Dyadic lhs = total_influence(f);
  const BooleanFunction f1 = f.restrict_coord(i, 1);
  const BooleanFunction f0 = f.restrict_coord(i, 0);
  const Dyadic rhs =
      (total_influence(f1) + total_influence(f0)).halved() + influence(f, i);
  return {lhs, rhs};
}

std::vector<long long> walsh_spectrum(const BooleanFunction& f) {
  const uint64_t size = f.domain_size();
  std::vector<long long> a(size);
  for (uint64_t x = 0; x < size; ++x) a[x] = f.get(x);
  for (uint64_t len = 1; len < size; len <<= 1) {
    for (uint64_t i = 0; i < size; i += len << 1) {
      for (uint64_t j = i; j < i + len; ++j) {
        const long long u = a[j], v = a[j + len];
        a[j] = u + v;
        a[j + len] = u - v;
      }
    }
  }
  return a;
}

double fourier_influence_check(const BooleanFunction& f) {
  const auto spectrum = walsh_spectrum(f);
  const auto counts = influence_counts(f);
  const uint64_t size = f.domain_size();
  unsigned __int128 worst = 0;
  for (int k = 0; k < f.n(); ++k) {
    unsigned __int128 sum_sq = 0;
    for (uint64_t s = 0; s < size; ++s) {
      if ((s >> k) & 1) {
        const long long w = spectrum[s];
        sum_sq += static_cast<unsigned __int128>(w) * static_cast<unsigned __int128>(w);
      }
    }
    // exact comparison: I_k = 4 sum fhat^2  <=>  count * 2^n == 4 * sum w^2
    const unsigned __int128 lhs = static_cast<unsigned __int128>(counts[k]) << f.n();
    const unsigned __int128 rhs = 4 * sum_sq;
    const unsigned __int128 diff = lhs > rhs ? lhs - rhs : rhs - lhs;
    if (diff > worst) worst = diff;
  }
  return std::ldexp(static_cast<double>(worst), -2 * f.n());
}

double parseval_deviation(const BooleanFunction& f) {
  const auto spectrum = walsh_spectrum(f);
  unsigned __int128 sum_sq = 0;
  for (long long w : spectrum)
    sum_sq += static_cast<unsigned __int128>(w < 0 ? -w : w) *
              static_cast<unsigned __int128>(w < 0 ? -w : w);
  const unsigned __int128 rhs = static_cast<unsigned __int128>(f.count_ones()) << f.n();
  const unsigned __int128 diff = sum_sq > rhs ? sum_sq - rhs : rhs - sum_sq;
  return std::ldexp(static_cast<double>(diff), -2 * f.n());
}

namespace {

// I - 2*mu*log2(1/mu) = 2*M*mu, with the constant-function convention M=0.
double two_m_mu(const BooleanFunction& f) {
  const uint64_t ones = f.count_ones();
  if (ones == 0 || ones == f.domain_size()) return 0.0;
  uint64_t icount = 0;
  for (uint64_t c : influence_counts(f)) icount += c;
  const double total = std::ldexp(static_cast<double>(icount), -f.n());
  const double mu = std::ldexp(static_cast<double>(ones), -f.n());
  return total - 2.0 * mu * (f.n() - std::log2(static_cast<double>(ones)));
}

}  // namespace

double excess(const BooleanFunction& f) {
  const uint64_t ones = f.count_ones();
  if (ones == 0 || ones == f.domain_size()) return 0.0;
  uint64_t icount = 0;
  for (uint64_t c : influence_counts(f)) icount += c;
  return excess_from_counts(icount, ones, f.n());
}

double split_gain(const BooleanFunction& f, int i) {
  const BooleanFunction f1 = f.restrict_coord(i, 1);
  const BooleanFunction f0 = f.restrict_coord(i, 0);
  return two_m_mu(f) - 0.5 * two_m_mu(f1) - 0.5 * two_m_mu(f0);
}

double split_gain_lower_bound(const BooleanFunction& f, int i) {
  const uint64_t ones1 = f.restrict_coord(i, 1).count_ones();
  const uint64_t ones0 = f.restrict_coord(i, 0).count_ones();
  const uint64_t small = ones0 < ones1 ? ones0 : ones1;
  if (small == 0) return 0.0;
  // mu_small * log2(mu / (2*mu_small)) with mu on the parent cube and
  // mu_small on the child cube; in counts mu/(2*mu_small) =
  // (ones0+ones1)/(4*small).
  const double mu_small = std::ldexp(static_cast<double>(small), -(f.n() - 1));
  return mu_small * std::log2(static_cast<double>(ones0 + ones1) /
                              (4.0 * static_cast<double>(small)));
}

}  // namespace cubelab
