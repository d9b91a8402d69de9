#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

#include "cubelab/dyadic.hpp"

namespace cubelab {

// Small exact rational. Only needed where denominators are not powers of
// two: epsilon values parsed from the command line and the budgets derived
// from them. Intermediate products go through __int128.
struct Rational {
  long long num = 0;
  long long den = 1;

  Rational() = default;
  Rational(long long n, long long d) : num(n), den(d) { normalize(); }
  Rational(const Dyadic& d) : num(d.num), den(1LL << d.log2_den) { normalize(); }

  void normalize() {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    const long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
    if (num == 0) den = 1;
  }

  bool is_zero() const { return num == 0; }
  double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }

  friend Rational operator*(const Rational& a, const Rational& b) {
    return make(static_cast<__int128>(a.num) * b.num, static_cast<__int128>(a.den) * b.den);
  }
  friend Rational operator+(const Rational& a, const Rational& b) {
    return make(static_cast<__int128>(a.num) * b.den + static_cast<__int128>(b.num) * a.den,
                static_cast<__int128>(a.den) * b.den);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return make(static_cast<__int128>(a.num) * b.den - static_cast<__int128>(b.num) * a.den,
                static_cast<__int128>(a.den) * b.den);
  }
  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num == b.num && a.den == b.den;
  }
  friend bool operator<(const Rational& a, const Rational& b) {
    return static_cast<__int128>(a.num) * b.den < static_cast<__int128>(b.num) * a.den;
  }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

  std::string to_string() const { return std::to_string(num) + "/" + std::to_string(den); }

  // Accepts "3/40", decimal strings like "0.05" or "5e-3", and plain
  // integers. Decimal parsing is exact (digits over a power of ten).
  static Rational parse(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty rational");
    const auto slash = text.find('/');
    if (slash != std::string::npos) {
      return Rational(std::stoll(text.substr(0, slash)), std::stoll(text.substr(slash + 1)));
    }
    std::string mantissa = text;
    int exp10 = 0;
    const auto e = text.find_first_of("eE");
    if (e != std::string::npos) {
      mantissa = text.substr(0, e);
      exp10 = std::stoi(text.substr(e + 1));
    }
    bool negative = false;
    size_t pos = 0;
    if (pos < mantissa.size() && (mantissa[pos] == '+' || mantissa[pos] == '-')) {
      negative = mantissa[pos] == '-';
      ++pos;
    }
    __int128 digits = 0;
    int frac_digits = 0;
    bool seen_dot = false, seen_digit = false;
    for (; pos < mantissa.size(); ++pos) {
      const char c = mantissa[pos];
      if (c == '.') {
        if (seen_dot) throw std::invalid_argument("bad rational: " + text);
        seen_dot = true;
      } else if (c >= '0' && c <= '9') {
        digits = digits * 10 + (c - '0');
        if (seen_dot) ++frac_digits;
        seen_digit = true;
        if (digits > (static_cast<__int128>(1) << 100))
          throw std::overflow_error("rational literal too long: " + text);
      } else {
        throw std::invalid_argument("bad rational: " + text);
      }
    }
    if (!seen_digit) throw std::invalid_argument("bad rational: " + text);
    __int128 n = negative ? -digits : digits;
    __int128 d = 1;
    int net = exp10 - frac_digits;
    for (; net > 0; --net) n *= 10;
    for (; net < 0; ++net) d *= 10;
    return make(n, d);
  }

 private:
  static Rational make(__int128 n, __int128 d) {
    if (d < 0) {
      n = -n;
      d = -d;
    }
    __int128 a = n < 0 ? -n : n;
    __int128 b = d;
    while (b != 0) {
      const __int128 t = a % b;
      a = b;
      b = t;
    }
    if (a > 1) {
      n /= a;
      d /= a;
    }
    if (n > INT64_MAX || n < INT64_MIN || d > INT64_MAX)
      throw std::overflow_error("rational overflow");
    Rational r;
    r.num = static_cast<long long>(n);
    r.den = static_cast<long long>(d == 0 ? 1 : d);
    if (r.num == 0) r.den = 1;
    return r;
  }
};

}  // namespace cubelab
