#include <doctest.h>

#include "cubelab/approx.hpp"
#include "cubelab/generators.hpp"
#include "test_helpers.hpp"

using namespace cubelab;
using testref::Rng;

namespace {

const std::vector<Rational> kEpsGrid = {Rational(1, 20), Rational(1, 10), Rational(1, 5),
                                        Rational(1, 2)};

// brute-force single-term minimum via recursive literal assignment,
// independent of the scan order used by best_subcube
uint64_t brute_best_term_error(const BooleanFunction& f) {
  const uint64_t ones = f.count_ones();
  uint64_t best = ones;  // constant 0
  std::vector<int> digits(f.n(), 0);
  while (true) {
    Term t;
    for (int c = 0; c < f.n(); ++c) {
      if (digits[c] == 0) t.pos |= 1u << c;
      if (digits[c] == 1) t.neg |= 1u << c;
    }
    uint64_t err = 0;
    for (uint64_t x = 0; x < f.domain_size(); ++x) err += f.get(x) != t.eval(x);
    best = std::min(best, err);
    int c = f.n() - 1;
    while (c >= 0 && digits[c] == 2) digits[c--] = 0;
    if (c < 0) break;
    ++digits[c];
  }
  return best;
}

void check_certified(const BooleanFunction& f, const Rational& eps) {
  const ApproxResult res = approximate(f, eps);
  const __int128 lhs = static_cast<__int128>(res.error_points) * eps.den;
  const __int128 rhs = static_cast<__int128>(eps.num) * f.count_ones();
  CHECK(lhs <= rhs);
  CHECK(testref::naive_dnf_error_count(f, res.dnf) == res.error_points);
  CHECK(res.size == res.dnf.size());
  CHECK(res.width == res.dnf.width());
  // every trace node stayed within its granted budget
  for (const TraceNode& node : res.trace)
    CHECK(Rational(static_cast<long long>(node.error_points), 1) <= node.budget_points);
}

}  // namespace

TEST_CASE("best_subcube: frozen examples") {
  const auto [d_and, e_and] = best_subcube(subcube_indicator(2, make_term({1, 2}, {}, 2)));
  CHECK(e_and.is_zero());
  CHECK(d_and.terms.size() == 1);
  CHECK(d_and.terms[0] == make_term({1, 2}, {}, 2));

  const auto [d_par, e_par] = best_subcube(parity_function(2));
  CHECK(e_par == Dyadic(1, 2));
  CHECK(d_par.terms[0] == make_term({1}, {2}, 2));  // x1 & !x2, lexicographically least

  // majority of 3: minimum error is 1/4 (any |ADelta B| with |B| even is even,
  // and odd |B| forces error >= 3/8); (x1 & x2) is the least optimal term
  const auto [d_maj, e_maj] = best_subcube(majority_function(3));
  CHECK(e_maj == Dyadic(1, 2));
  CHECK(d_maj.terms[0] == make_term({1, 2}, {}, 3));

  // constant 0 is only optimal for the zero function
  const auto [d_zero, e_zero] = best_subcube(BooleanFunction(3));
  CHECK(d_zero.terms.empty());
  CHECK(e_zero.is_zero());
}

TEST_CASE("best_subcube equals brute force on every n=3 function") {
  for (uint64_t t = 0; t < 256; ++t) {
    const BooleanFunction f = testref::from_table_bits(3, t);
    const auto [dnf, err] = best_subcube(f);
    const uint64_t err_points = static_cast<uint64_t>(err.num) << (3 - err.log2_den);
    CHECK(err_points == brute_best_term_error(f));
    CHECK(testref::naive_dnf_error_count(f, dnf) == err_points);
  }
}

TEST_CASE("best_dnf_oracle") {
  const auto [d2, e2] = best_dnf_oracle(parity_function(2), 2);
  CHECK(e2.is_zero());
  CHECK(d2.size() == 2);  // (x1 & !x2) | (!x1 & x2)

  const auto [d1, e1] = best_dnf_oracle(subcube_indicator(2, make_term({1, 2}, {}, 2)), 1);
  CHECK(e1.is_zero());

  // oracle error is monotone non-increasing in the size cap
  for (uint64_t t = 0; t < 256; ++t) {
    const BooleanFunction f = testref::from_table_bits(3, t);
    const Dyadic e0 = best_dnf_oracle(f, 0).second;
    const Dyadic ea = best_dnf_oracle(f, 1).second;
    const Dyadic eb = best_dnf_oracle(f, 2).second;
    CHECK(ea <= e0);
    CHECK(eb <= ea);
  }
  CHECK_THROWS(best_dnf_oracle(parity_function(2), 3));
}

TEST_CASE("approximate: sub-cubes come back exact with one term at any eps") {
  Rng rng(61);
  for (const Rational& eps : {Rational(1, 100), Rational(1, 5), Rational(2, 1), Rational(10, 1)}) {
    const BooleanFunction cube =
        subcube_indicator(8, make_term({1, 3, 4}, {6, 7}, 8));
    const ApproxResult res = approximate(cube, eps);
    CHECK(res.size == 1);
    CHECK(res.error_points == 0);
    CHECK(res.dnf.terms[0] == make_term({1, 3, 4}, {6, 7}, 8));
  }
  // the constant 1 function is the empty term
  const ApproxResult ones = approximate(BooleanFunction(4, true), Rational(1, 10));
  CHECK(ones.size == 1);
  CHECK(ones.error_points == 0);
  CHECK(ones.dnf.terms[0].width() == 0);
  // the constant 0 function is the empty DNF
  const ApproxResult zeros = approximate(BooleanFunction(4), Rational(1, 10));
  CHECK(zeros.size == 0);
  CHECK(zeros.error_points == 0);
}

TEST_CASE("approximate: union of two disjoint sub-cubes, tiny eps, exact size 2") {
  const Dnf d = parse_dnf("1&2&3|!1&4&5", 6);
  const BooleanFunction f = to_function(d);
  const ApproxResult res = approximate(f, Rational(1, 100));
  CHECK(res.error_points == 0);  // budget below one point forces exactness
  CHECK(res.size <= 2);
}

TEST_CASE("approximate: certification on random functions and named families") {
  Rng rng(62);
  for (int trial = 0; trial < 15; ++trial) {
    const int n = 2 + static_cast<int>(rng.below(7));
    const BooleanFunction f = random_function(n, rng.next());
    for (const Rational& eps : kEpsGrid) check_certified(f, eps);
  }
  for (const Rational& eps : kEpsGrid) {
    check_certified(sharpness_example(2, 2), eps);
    check_certified(tribes(2, 4), eps);
    check_certified(majority_function(5), eps);
  }
  CHECK_THROWS(approximate(majority_function(3), Rational(0, 1)));
  CHECK_THROWS(approximate(majority_function(3), Rational(-1, 5)));
}

TEST_CASE("combination identity: error splits exactly across a lifted pair") {
  Rng rng(63);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 3 + static_cast<int>(rng.below(6));
    const BooleanFunction f = random_function(n, rng.next());
    // random child DNFs over coordinates 2..n, lifted with the x1 literal
    auto random_child = [&](int terms) {
      Dnf d;
      d.n = n - 1;
      for (int t = 0; t < terms; ++t) {
        const uint32_t chosen = static_cast<uint32_t>(rng.next()) & ((1u << (n - 1)) - 1);
        const uint32_t signs = static_cast<uint32_t>(rng.next());
        d.terms.push_back(Term{chosen & signs, chosen & ~signs});
      }
      return d;
    };
    const Dnf d1 = random_child(2), d0 = random_child(2);
    Dnf combined;
    combined.n = n;
    for (const Term& t : d1.terms) combined.terms.push_back(Term{(t.pos << 1) | 1u, t.neg << 1});
    for (const Term& t : d0.terms) combined.terms.push_back(Term{t.pos << 1, (t.neg << 1) | 1u});
    const Dyadic whole = dnf_error(f, combined);
    const Dyadic split = (dnf_error(f.restrict_coord(1, 1), d1) +
                          dnf_error(f.restrict_coord(1, 0), d0))
                             .halved();
    CHECK(whole == split);
  }
}

TEST_CASE("budget bound is monotone in eps") {
  const BooleanFunction f = random_function(6, 777);
  Rational previous(0, 1);
  for (const Rational& eps : kEpsGrid) {
    const ApproxResult res = approximate(f, eps);
    CHECK(previous <= res.budget_points);
    previous = res.budget_points;
    CHECK(Rational(static_cast<long long>(res.error_points), 1) <= res.budget_points);
  }
}

TEST_CASE("oracle dominance on every n=3 function") {
  for (uint64_t t = 0; t < 256; ++t) {
    const BooleanFunction f = testref::from_table_bits(3, t);
    const Dyadic oracle_err = best_dnf_oracle(f, 2).second;
    for (const Rational& eps : kEpsGrid) {
      const ApproxResult res = approximate(f, eps);
      if (res.size <= 2) CHECK(oracle_err <= res.error);
    }
  }
}

TEST_CASE("trace structure") {
  const BooleanFunction f = sharpness_example(2, 1);
  const ApproxResult res = approximate(f, Rational(1, 5));
  REQUIRE(!res.trace.empty());
  CHECK(res.trace[0].parent == -1);
  CHECK(res.trace[0].m == f.n());
  for (const TraceNode& node : res.trace) {
    CHECK((node.branch == "constant-zero" || node.branch == "subcube-base" ||
           node.branch == "oracle-base" || node.branch == "split"));
    if (node.branch == "split") {
      CHECK(node.split_coord >= 1);
      CHECK(node.split_coord <= f.n());
    }
    if (node.parent >= 0) CHECK(node.depth == res.trace[node.parent].depth + 1);
  }
}
