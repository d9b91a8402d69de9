#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cubelab/bool_function.hpp"
#include "cubelab/dyadic.hpp"

namespace cubelab {

// One conjunction of literals over disjoint coordinate sets, as bitmasks
// with bit i-1 standing for coordinate i. The empty term is the constant 1.
struct Term {
  uint32_t pos = 0;
  uint32_t neg = 0;

  int width() const;
  bool eval(uint64_t x) const { return (x & pos) == pos && (x & neg) == 0; }

  friend bool operator==(const Term& a, const Term& b) { return a.pos == b.pos && a.neg == b.neg; }
};

Term make_term(const std::vector<int>& pos, const std::vector<int>& neg, int n);

// An OR of terms in insertion order. The empty DNF is the constant 0.
// No implicit simplification ever happens; size counts raw terms.
struct Dnf {
  int n = 0;
  std::vector<Term> terms;

  int size() const { return static_cast<int>(terms.size()); }
  int width() const;  // max term width, 0 for the empty DNF

  bool eval(uint64_t x) const {
    for (const Term& t : terms)
      if (t.eval(x)) return true;
    return false;
  }
};

// Validated evaluation entry point (dimension check on x).
bool dnf_eval(const Dnf& d, uint64_t x, int n_of_x);

BooleanFunction to_function(const Dnf& d);

uint64_t dnf_error_count(const BooleanFunction& f, const Dnf& d);
Dyadic dnf_error(const BooleanFunction& f, const Dnf& d);

// Drop every term with more than w literals. Disagreement with the original
// is at most size * 2^-w by the union bound.
Dnf truncate(const Dnf& d, int w);

// Optional cleanup pass: removes duplicate terms and terms implied by an
// earlier, more general term. Never runs implicitly.
Dnf normalize(const Dnf& d);

// Text format: terms separated by '|', literals by '&', negation '!',
// e.g. "1&!2|2&3". "0" is the empty DNF and "T" the empty term (constant 1).
std::string format_dnf(const Dnf& d);
Dnf parse_dnf(const std::string& text, int n);

}  // namespace cubelab
