#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace cubelab {

// Exact dyadic rational num / 2^log2_den. Measures, influences and DNF
// errors are all of this form; numerators stay far below 2^63 for any
// dimension this library accepts, so plain integer arithmetic is exact.
struct Dyadic {
  long long num = 0;
  int log2_den = 0;

  Dyadic() = default;
  Dyadic(long long count, int pow2) : num(count), log2_den(pow2) { normalize(); }

  void normalize() {
    if (num == 0) {
      log2_den = 0;
      return;
    }
    while (log2_den > 0 && (num & 1) == 0) {
      num >>= 1;
      --log2_den;
    }
  }

  double to_double() const { return std::ldexp(static_cast<double>(num), -log2_den); }

  bool is_zero() const { return num == 0; }
  bool is_one() const { return num == 1 && log2_den == 0; }

  // True when the value is 2^-k for some k >= 0 (or zero exponent power 1).
  bool is_power_of_two() const { return num == 1 || (num > 0 && (num & (num - 1)) == 0); }

  friend Dyadic operator+(Dyadic a, Dyadic b) { return combine(a, b, +1); }
  friend Dyadic operator-(Dyadic a, Dyadic b) { return combine(a, b, -1); }

  friend Dyadic operator*(Dyadic a, Dyadic b) {
    return Dyadic(a.num * b.num, a.log2_den + b.log2_den);
  }

  Dyadic halved() const { return Dyadic(num, log2_den + 1); }

  friend bool operator==(const Dyadic& a, const Dyadic& b) {
    return a.num == b.num && a.log2_den == b.log2_den;  // both normalized
  }
  friend bool operator!=(const Dyadic& a, const Dyadic& b) { return !(a == b); }
  friend bool operator<(const Dyadic& a, const Dyadic& b) {
    const int e = std::max(a.log2_den, b.log2_den);
    return (static_cast<__int128>(a.num) << (e - a.log2_den)) <
           (static_cast<__int128>(b.num) << (e - b.log2_den));
  }
  friend bool operator<=(const Dyadic& a, const Dyadic& b) { return !(b < a); }
  friend bool operator>(const Dyadic& a, const Dyadic& b) { return b < a; }
  friend bool operator>=(const Dyadic& a, const Dyadic& b) { return !(a < b); }

  std::string to_string() const {
    return std::to_string(num) + "/2^" + std::to_string(log2_den);
  }

 private:
  static Dyadic combine(Dyadic a, Dyadic b, int sign) {
    const int e = std::max(a.log2_den, b.log2_den);
    if (e > 62) throw std::overflow_error("dyadic exponent too large");
    const long long an = a.num << (e - a.log2_den);
    const long long bn = b.num << (e - b.log2_den);
    return Dyadic(an + sign * bn, e);
  }
};

}  // namespace cubelab
