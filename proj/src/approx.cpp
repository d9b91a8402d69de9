#include "cubelab/approx.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

#include "cubelab/bits.hpp"
#include "cubelab/influence.hpp"

namespace cubelab {

BudgetPolicy::SplitRule BudgetPolicy::parse_rule(const std::string& name) {
  if (name == "proportional-to-Mmu") return SplitRule::proportional_m_mu;
  if (name == "proportional-to-mu") return SplitRule::proportional_mu;
  if (name == "equal") return SplitRule::equal;
  throw std::invalid_argument("unknown split rule: " + name);
}

std::string BudgetPolicy::rule_name(SplitRule r) {
  switch (r) {
    case SplitRule::proportional_m_mu: return "proportional-to-Mmu";
    case SplitRule::proportional_mu: return "proportional-to-mu";
    case SplitRule::equal: return "equal";
  }
  return "?";
}

namespace {

// If g is exactly a sub-cube indicator (constant 1 included), the term.
std::optional<Term> exact_subcube(const BooleanFunction& g, uint64_t ones) {
  if (ones == 0) return std::nullopt;
  uint64_t and_mask = ~uint64_t{0}, or_mask = 0;
  const auto& words = g.words();
  for (size_t w = 0; w < words.size(); ++w) {
    uint64_t bits = words[w];
    while (bits) {
      const int b = std::countr_zero(bits);
      bits &= bits - 1;
      const uint64_t x = (static_cast<uint64_t>(w) << 6) | static_cast<uint64_t>(b);
      and_mask &= x;
      or_mask |= x;
    }
  }
  const uint64_t full = g.full_coord_mask();
  const uint64_t fixed1 = and_mask & full;
  const uint64_t fixed0 = ~or_mask & full;
  const int free = g.n() - popcount64(fixed1) - popcount64(fixed0);
  if (ones != (uint64_t{1} << free)) return std::nullopt;
  Term t;
  t.pos = static_cast<uint32_t>(fixed1);
  t.neg = static_cast<uint32_t>(fixed0);
  return t;
}

// Points of f inside the sub-cube of t that are 1.
uint64_t ones_in_box(const BooleanFunction& f, const Term& t) {
  const uint64_t all = f.domain_size() - 1;
  const uint64_t free = all & ~static_cast<uint64_t>(t.pos | t.neg);
  uint64_t count = 0;
  uint64_t sub = free;
  while (true) {
    count += f.get(t.pos | sub);
    if (sub == 0) break;
    sub = (sub - 1) & free;
  }
  return count;
}

uint64_t term_error_count(const BooleanFunction& f, const Term& t, uint64_t ones) {
  const uint64_t box = uint64_t{1} << (f.n() - t.width());
  return ones + box - 2 * ones_in_box(f, t);
}

// Best single sub-cube with error at most max_err points, or nullopt.
// Whole width layers are skipped when even a perfectly filled box of that
// size cannot reach max_err: any width-k term errs at least |ones - 2^(n-k)|.
std::optional<std::pair<Term, uint64_t>> best_subcube_bounded(const BooleanFunction& f,
                                                              uint64_t ones, uint64_t max_err) {
  const int n = f.n();
  std::optional<std::pair<Term, uint64_t>> best;
  for (int k = 0; k <= n; ++k) {
    const uint64_t box = uint64_t{1} << (n - k);
    const uint64_t layer_floor = ones > box ? ones - box : box - ones;
    if (layer_floor > max_err) continue;
    if (best && layer_floor >= best->second) continue;
    // all coordinate subsets of size k, ascending mask order
    uint32_t subset = (k == 0) ? 0 : (1u << k) - 1;
    while (true) {
      for (uint32_t signs = 0;; ++signs) {
        // spread the sign pattern over the chosen coordinates
        uint32_t neg = 0, s = signs;
        for (uint32_t rest = subset; rest; rest &= rest - 1, s >>= 1)
          if (s & 1) neg |= rest & ~(rest - 1);
        Term t;
        t.pos = subset & ~neg;
        t.neg = neg;
        const uint64_t err = term_error_count(f, t, ones);
        if (err <= max_err && (!best || err < best->second)) best = {t, err};
        if (k == 0 || signs + 1 == (1u << k)) break;
      }
      if (k == 0) break;
      // next subset of the same popcount (Gosper)
      const uint32_t c = subset & -subset;
      const uint32_t r = subset + c;
      subset = (((subset ^ r) >> 2) / c) | r;
      if (subset >= (1u << n)) break;
    }
  }
  return best;
}

struct Ctx {
  BudgetPolicy policy;
  long long den;  // global budget denominator (denominator of eps)
  std::vector<TraceNode> trace;
};

struct NodeOut {
  Dnf dnf;  // over the node's local coordinates
  uint64_t err = 0;
};

int push_node(Ctx& ctx, int parent, int depth, int m, __int128 budget_num) {
  TraceNode node;
  node.id = static_cast<int>(ctx.trace.size());
  node.parent = parent;
  node.depth = depth;
  node.m = m;
  node.budget_points = Rational(static_cast<long long>(budget_num), ctx.den);
  ctx.trace.push_back(std::move(node));
  return static_cast<int>(ctx.trace.size()) - 1;
}

// Insert the literal of local coordinate i (1-based) into every term of a
// child DNF over m-1 coordinates: child coordinate j maps to j for j < i and
// to j+1 otherwise.
void lift_terms(const Dnf& child, int i, bool positive, Dnf& out) {
  const uint32_t low = (1u << (i - 1)) - 1;
  for (const Term& t : child.terms) {
    Term lifted;
    lifted.pos = (t.pos & low) | ((t.pos & ~low) << 1);
    lifted.neg = (t.neg & low) | ((t.neg & ~low) << 1);
    if (positive)
      lifted.pos |= 1u << (i - 1);
    else
      lifted.neg |= 1u << (i - 1);
    out.terms.push_back(lifted);
  }
}

NodeOut solve(Ctx& ctx, const BooleanFunction& g, __int128 budget_num,
              const std::vector<int>& alive, int parent, int depth) {
  const int m = g.n();
  const uint64_t ones = g.count_ones();
  const long long den = ctx.den;
  const int id = push_node(ctx, parent, depth, m, budget_num);

  NodeOut out;
  out.dnf.n = m;

  if (ones == 0) {
    ctx.trace[id].branch = "constant-zero";
    return out;
  }
  if (auto cube = exact_subcube(g, ones)) {
    ctx.trace[id].branch = "subcube-base";
    out.dnf.terms.push_back(*cube);
    return out;
  }
  if (static_cast<__int128>(ones) * den <= budget_num) {
    ctx.trace[id].branch = "constant-zero";
    out.err = ones;
    ctx.trace[id].error_points = ones;
    return out;
  }

  if (budget_num >= den) {  // at least one disagreement point allowed
    const uint64_t max_err = static_cast<uint64_t>(budget_num / den);
    std::optional<std::pair<Term, uint64_t>> base;
    if (m <= ctx.policy.subcube_scan_cap) {
      base = best_subcube_bounded(g, ones, max_err);
    } else {
      // cheap candidates only: the bounding box of the 1-set and the full cube
      uint64_t and_mask = ~uint64_t{0}, or_mask = 0;
      const auto& words = g.words();
      for (size_t w = 0; w < words.size(); ++w) {
        if (!words[w]) continue;
        uint64_t bits = words[w];
        while (bits) {
          const uint64_t x = (static_cast<uint64_t>(w) << 6) |
                             static_cast<uint64_t>(std::countr_zero(bits));
          bits &= bits - 1;
          and_mask &= x;
          or_mask |= x;
        }
      }
      Term bounding;
      bounding.pos = static_cast<uint32_t>(and_mask & g.full_coord_mask());
      bounding.neg = static_cast<uint32_t>(~or_mask & g.full_coord_mask());
      // the box covers every 1-point, so its error is just box size - ones
      const uint64_t box = uint64_t{1} << (m - bounding.width());
      if (box - ones <= max_err) base = {bounding, box - ones};
    }
    if (base) {
      ctx.trace[id].branch = "subcube-base";
      ctx.trace[id].error_points = base->second;
      out.dnf.terms.push_back(base->first);
      out.err = base->second;
      return out;
    }
    if (m <= ctx.policy.oracle_cap) {
      auto [oracle_dnf, oracle_err] = best_dnf_oracle(g, 2);
      const uint64_t err = static_cast<uint64_t>(oracle_err.num)
                           << (m - oracle_err.log2_den);
      if (static_cast<__int128>(err) * den <= budget_num) {
        ctx.trace[id].branch = "oracle-base";
        ctx.trace[id].error_points = err;
        out.dnf = oracle_dnf;
        out.err = err;
        return out;
      }
    }
  }

  // Split on the exact maximal-influence coordinate, smallest index on ties.
  const auto counts = influence_counts(g);
  int i = 1;
  for (int k = 2; k <= m; ++k)
    if (counts[k - 1] > counts[i - 1]) i = k;

  const BooleanFunction g1 = g.restrict_coord(i, 1);
  const BooleanFunction g0 = g.restrict_coord(i, 0);
  const uint64_t ones1 = g1.count_ones(), ones0 = g0.count_ones();
  const double m1 = excess(g1), m0 = excess(g0);

  ctx.trace[id].branch = "split";
  ctx.trace[id].split_coord = alive[i - 1];
  ctx.trace[id].mu1 = g1.measure();
  ctx.trace[id].mu0 = g0.measure();
  ctx.trace[id].M1 = m1;
  ctx.trace[id].M0 = m0;

  std::vector<int> child_alive = alive;
  child_alive.erase(child_alive.begin() + (i - 1));

  // Small-side rule: a light restriction is approximated by constant 0 and
  // its entire share goes to the heavy side.
  const uint64_t small = std::min(ones0, ones1);
  const bool zero_side1 = ones1 < ones0;  // side to zero when the rule fires
  const Rational& rho = ctx.policy.small_side_factor;
  const bool small_enough =
      static_cast<__int128>(small) * rho.den <= static_cast<__int128>(ones) * rho.num;
  const bool affordable = static_cast<__int128>(small) * den <= budget_num;
  if (small_enough && affordable && small > 0) {
    const __int128 heavy_budget = budget_num - static_cast<__int128>(small) * den;
    const int zero_id =
        push_node(ctx, id, depth + 1, m - 1, static_cast<__int128>(small) * den);
    ctx.trace[zero_id].branch = "constant-zero";
    ctx.trace[zero_id].error_points = small;
    const NodeOut heavy =
        solve(ctx, zero_side1 ? g0 : g1, heavy_budget, child_alive, id, depth + 1);
    const Rational small_r(static_cast<long long>(small), 1);
    const Rational heavy_r(static_cast<long long>(heavy_budget), den);
    ctx.trace[id].child_budget1 = zero_side1 ? small_r : heavy_r;
    ctx.trace[id].child_budget0 = zero_side1 ? heavy_r : small_r;
    lift_terms(heavy.dnf, i, !zero_side1, out.dnf);
    out.err = heavy.err + small;
    ctx.trace[id].error_points = out.err;
    return out;
  }

  // Regular split: divide the budget by policy weight, solve the 1-side
  // first, hand its unused allowance to the 0-side.
  double w1 = 1.0, w0 = 1.0;
  switch (ctx.policy.split_rule) {
    case BudgetPolicy::SplitRule::proportional_m_mu:
      w1 = std::max(0.0, m1) * static_cast<double>(ones1);
      w0 = std::max(0.0, m0) * static_cast<double>(ones0);
      break;
    case BudgetPolicy::SplitRule::proportional_mu:
      w1 = static_cast<double>(ones1);
      w0 = static_cast<double>(ones0);
      break;
    case BudgetPolicy::SplitRule::equal:
      break;
  }
  if (w1 + w0 <= 0.0) w1 = w0 = 1.0;
  __int128 budget1 =
      static_cast<__int128>(static_cast<double>(budget_num) * (w1 / (w1 + w0)));
  if (budget1 < 0) budget1 = 0;
  if (budget1 > budget_num) budget1 = budget_num;

  const NodeOut r1 = solve(ctx, g1, budget1, child_alive, id, depth + 1);
  const __int128 budget0 = budget_num - static_cast<__int128>(r1.err) * den;
  const NodeOut r0 = solve(ctx, g0, budget0, child_alive, id, depth + 1);

  ctx.trace[id].child_budget1 = Rational(static_cast<long long>(budget1), den);
  ctx.trace[id].child_budget0 = Rational(static_cast<long long>(budget0), den);

  lift_terms(r1.dnf, i, true, out.dnf);
  lift_terms(r0.dnf, i, false, out.dnf);
  out.err = r1.err + r0.err;
  ctx.trace[id].error_points = out.err;
  return out;
}

}  // namespace

ApproxResult approximate(const BooleanFunction& f, const Rational& eps,
                         const BudgetPolicy& policy) {
  if (eps.num <= 0) throw std::invalid_argument("eps must be positive");
  if (policy.small_side_factor.num <= 0 || policy.small_side_factor >= Rational(1, 1))
    throw std::invalid_argument("small_side_factor must lie in (0,1)");

  Ctx ctx;
  ctx.policy = policy;
  ctx.den = eps.den;

  const uint64_t ones = f.count_ones();
  // A budget beyond the total mass behaves identically to one equal to it
  // (every base comparison saturates), so clamp before recursing; the
  // reported budget stays the true eps * ones.
  __int128 budget_num = static_cast<__int128>(eps.num) * ones;
  const __int128 full_mass = static_cast<__int128>(ones) * eps.den;
  if (budget_num > full_mass) budget_num = full_mass;
  if (budget_num > INT64_MAX)
    throw std::invalid_argument("eps resolution too fine for this dimension");
  std::vector<int> alive(f.n());
  for (int i = 0; i < f.n(); ++i) alive[i] = i + 1;

  const NodeOut root = solve(ctx, f, budget_num, alive, -1, 0);

  if (static_cast<__int128>(root.err) * eps.den > budget_num)
    throw std::logic_error("internal certification failure");  // structurally impossible

  ApproxResult result;
  result.dnf = root.dnf;
  result.error = Dyadic(static_cast<long long>(root.err), f.n());
  result.error_points = root.err;
  result.budget_points = eps * Rational(static_cast<long long>(ones), 1);
  result.budget = result.budget_points * Rational(1, static_cast<long long>(f.domain_size()));
  result.size = result.dnf.size();
  result.width = result.dnf.width();
  result.trace = std::move(ctx.trace);

  // Independent recount of the certified error.
  if (dnf_error_count(f, result.dnf) != root.err)
    throw std::logic_error("trace error does not match recomputed DNF error");
  return result;
}

std::pair<Dnf, Dyadic> best_subcube(const BooleanFunction& f) {
  const int n = f.n();
  if (n > 12) throw std::invalid_argument("best_subcube enumerates 3^n terms, n <= 12 only");
  const uint64_t ones = f.count_ones();

  // lexicographic enumeration: coordinate 1 varies slowest, symbol order
  // positive < negated < free
  std::vector<int> digits(n, 0);
  std::optional<Term> best_term;
  uint64_t best_err = ones + 1;  // error of the constant-0 candidate, ranked last
  while (true) {
    Term t;
    for (int c = 0; c < n; ++c) {
      if (digits[c] == 0) t.pos |= 1u << c;
      if (digits[c] == 1) t.neg |= 1u << c;
    }
    const uint64_t err = term_error_count(f, t, ones);
    if (err < best_err) {
      best_err = err;
      best_term = t;
    }
    int c = n - 1;
    while (c >= 0 && digits[c] == 2) digits[c--] = 0;
    if (c < 0) break;
    ++digits[c];
  }

  Dnf d;
  d.n = n;
  uint64_t err = ones;  // the constant-0 candidate, ranked after all terms
  if (best_term && best_err <= ones) {
    d.terms.push_back(*best_term);
    err = best_err;
  }
  return {d, Dyadic(static_cast<long long>(err), n)};
}

std::pair<Dnf, Dyadic> best_dnf_oracle(const BooleanFunction& f, int max_terms) {
  const int n = f.n();
  if (n > 6) throw std::invalid_argument("best_dnf_oracle supports n <= 6");
  if (max_terms < 0 || max_terms > 2)
    throw std::invalid_argument("best_dnf_oracle supports at most 2 terms");

  const uint64_t table_mask = (n == 6) ? ~uint64_t{0} : (uint64_t{1} << (1 << n)) - 1;
  const uint64_t f_bits = f.words()[0];

  // all 3^n terms as table masks, in lexicographic term order
  std::vector<Term> terms;
  std::vector<uint64_t> boxes;
  {
    std::vector<int> digits(n, 0);
    while (true) {
      Term t;
      for (int c = 0; c < n; ++c) {
        if (digits[c] == 0) t.pos |= 1u << c;
        if (digits[c] == 1) t.neg |= 1u << c;
      }
      uint64_t box = 0;
      for (uint64_t x = 0; x < (uint64_t{1} << n); ++x)
        if (t.eval(x)) box |= uint64_t{1} << x;
      terms.push_back(t);
      boxes.push_back(box);
      int c = n - 1;
      while (c >= 0 && digits[c] == 2) digits[c--] = 0;
      if (c < 0) break;
      ++digits[c];
    }
  }

  Dnf best;
  best.n = n;
  uint64_t best_err = static_cast<uint64_t>(popcount64(f_bits & table_mask));  // empty DNF
  auto consider = [&](uint64_t cover, std::initializer_list<Term> ts) {
    const uint64_t err = static_cast<uint64_t>(popcount64((f_bits ^ cover) & table_mask));
    if (err < best_err) {
      best_err = err;
      best.terms.assign(ts);
    }
  };
  if (max_terms >= 1)
    for (size_t a = 0; a < terms.size(); ++a) consider(boxes[a], {terms[a]});
  if (max_terms >= 2)
    for (size_t a = 0; a < terms.size(); ++a)
      for (size_t b = a + 1; b < terms.size(); ++b)
        consider(boxes[a] | boxes[b], {terms[a], terms[b]});

  return {best, Dyadic(static_cast<long long>(best_err), n)};
}

}  // namespace cubelab
