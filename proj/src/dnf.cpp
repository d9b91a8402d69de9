#include "cubelab/dnf.hpp"

#include <sstream>
#include <stdexcept>

#include "cubelab/bits.hpp"

namespace cubelab {

int Term::width() const { return popcount64(pos) + popcount64(neg); }

Term make_term(const std::vector<int>& pos, const std::vector<int>& neg, int n) {
  Term t;
  t.pos = coord_mask(pos, n);
  t.neg = coord_mask(neg, n);
  if (t.pos & t.neg) throw std::invalid_argument("term with contradictory literals");
  return t;
}

int Dnf::width() const {
  int w = 0;
  for (const Term& t : terms) w = std::max(w, t.width());
  return w;
}

bool dnf_eval(const Dnf& d, uint64_t x, int n_of_x) {
  if (n_of_x != d.n) throw std::invalid_argument("point dimension does not match DNF");
  if (x >= (uint64_t{1} << d.n)) throw std::out_of_range("point outside {0,1}^n");
  return d.eval(x);
}

BooleanFunction to_function(const Dnf& d) {
  BooleanFunction f(d.n);
  const uint64_t all = f.domain_size() - 1;
  for (const Term& t : d.terms) {
    if ((t.pos | t.neg) & ~static_cast<uint64_t>(f.full_coord_mask()))
      throw std::invalid_argument("term literal outside [n]");
    const uint64_t free = all & ~static_cast<uint64_t>(t.pos | t.neg);
    // walk the sub-cube: fixed part t.pos, all submasks of the free part
    uint64_t sub = free;
    while (true) {
      f.set(t.pos | sub, true);
      if (sub == 0) break;
      sub = (sub - 1) & free;
    }
  }
  return f;
}

uint64_t dnf_error_count(const BooleanFunction& f, const Dnf& d) {
  if (f.n() != d.n) throw std::invalid_argument("dimension mismatch");
  const BooleanFunction g = to_function(d);
  uint64_t count = 0;
  for (size_t w = 0; w < f.words().size(); ++w)
    count += popcount64(f.words()[w] ^ g.words()[w]);
  return count;
}

Dyadic dnf_error(const BooleanFunction& f, const Dnf& d) {
  return Dyadic(static_cast<long long>(dnf_error_count(f, d)), f.n());
}

Dnf truncate(const Dnf& d, int w) {
  if (w < 0) throw std::invalid_argument("width bound must be non-negative");
  Dnf out;
  out.n = d.n;
  for (const Term& t : d.terms)
    if (t.width() <= w) out.terms.push_back(t);
  return out;
}

Dnf normalize(const Dnf& d) {
  // t is implied by u when u's literals are a subset of t's; drop t if some
  // other term implies it (first occurrence wins among duplicates)
  auto implies = [](const Term& u, const Term& t) {
    return (u.pos & ~t.pos) == 0 && (u.neg & ~t.neg) == 0;
  };
  Dnf out;
  out.n = d.n;
  for (size_t i = 0; i < d.terms.size(); ++i) {
    bool redundant = false;
    for (size_t j = 0; j < d.terms.size() && !redundant; ++j) {
      if (j == i || !implies(d.terms[j], d.terms[i])) continue;
      redundant = !(d.terms[j] == d.terms[i]) || j < i;
    }
    if (!redundant) out.terms.push_back(d.terms[i]);
  }
  return out;
}

std::string format_dnf(const Dnf& d) {
  if (d.terms.empty()) return "0";
  std::ostringstream out;
  bool first_term = true;
  for (const Term& t : d.terms) {
    if (!first_term) out << '|';
    first_term = false;
    if (t.pos == 0 && t.neg == 0) {
      out << 'T';  // the empty term; bare "1" would collide with literal x1
      continue;
    }
    bool first_lit = true;
    for (int i = 1; i <= d.n; ++i) {
      const uint32_t bit = 1u << (i - 1);
      if (t.pos & bit) {
        out << (first_lit ? "" : "&") << i;
        first_lit = false;
      } else if (t.neg & bit) {
        out << (first_lit ? "" : "&") << '!' << i;
        first_lit = false;
      }
    }
  }
  return out.str();
}

Dnf parse_dnf(const std::string& text, int n) {
  Dnf d;
  d.n = n;
  if (text.empty() || text == "0") return d;
  std::stringstream terms(text);
  std::string term_text;
  while (std::getline(terms, term_text, '|')) {
    if (term_text == "T") {
      d.terms.push_back(Term{});
      continue;
    }
    Term t;
    std::stringstream lits(term_text);
    std::string lit;
    while (std::getline(lits, lit, '&')) {
      bool negated = false;
      if (!lit.empty() && lit[0] == '!') {
        negated = true;
        lit = lit.substr(1);
      }
      if (lit.empty()) throw std::invalid_argument("empty literal in DNF: " + text);
      const int c = std::stoi(lit);
      if (c < 1 || c > n) throw std::invalid_argument("literal out of range in DNF: " + lit);
      const uint32_t bit = 1u << (c - 1);
      if ((t.pos | t.neg) & bit) throw std::invalid_argument("repeated coordinate in term: " + lit);
      (negated ? t.neg : t.pos) |= bit;
    }
    d.terms.push_back(t);
  }
  return d;
}

}  // namespace cubelab
