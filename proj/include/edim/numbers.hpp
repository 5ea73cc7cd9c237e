#pragma once

#include <cstdint>
#include <numeric>
#include <span>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "error.hpp"

namespace edim {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline std::string to_string(const Integer& v) { return v.str(); }

inline std::string to_string(const Rational& v) {
  auto num = boost::multiprecision::numerator(v);
  auto den = boost::multiprecision::denominator(v);
  if (den == 1)
    return num.str();
  return num.str() + "/" + den.str();
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r))
    throw internal_error("64-bit overflow in checked_mul");
  return r;
}

inline std::int64_t checked_lcm(std::int64_t a, std::int64_t b) {
  if (a == 0 || b == 0)
    return 0;
  return checked_mul(a / std::gcd(a, b), b);
}

inline std::int64_t gcd_of(std::span<const int> values) {
  std::int64_t g = 0;
  for (int v : values)
    g = std::gcd(g, static_cast<std::int64_t>(v));
  return g;
}

inline bool is_prime(std::int64_t n) {
  if (n < 2)
    return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0)
      return false;
  return true;
}

inline Integer factorial(int n) {
  Integer f = 1;
  for (int i = 2; i <= n; ++i)
    f *= i;
  return f;
}

// Euler's totient.
inline std::int64_t totient(std::int64_t n) {
  std::int64_t result = n;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0)
        n /= p;
      result -= result / p;
    }
  }
  if (n > 1)
    result -= result / n;
  return result;
}

} // namespace edim
