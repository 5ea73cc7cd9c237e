#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <numeric>
#include <ostream>
#include <string>

#include "error.hpp"

namespace edim {

// A root of unity exp(2*pi*i * num/den), stored as a reduced fraction of a
// full rotation with 0 <= num < den. Turn(0,1) is the eigenvalue 1 and
// Turn(1,m) is the primitive root zeta_m.
class Turn {
public:
  constexpr Turn() = default;

  // Accepts any integer numerator (taken mod 1) and a positive denominator.
  Turn(std::int64_t num, std::int64_t den) {
    if (den <= 0)
      throw invalid_argument("Turn denominator must be positive");
    num %= den;
    if (num < 0)
      num += den;
    std::int64_t g = std::gcd(num, den);
    num_ = num / g;
    den_ = den / g;
  }

  constexpr std::int64_t num() const noexcept { return num_; }
  constexpr std::int64_t den() const noexcept { return den_; }

  // Multiplicative order of the root of unity.
  constexpr std::int64_t order() const noexcept { return den_; }
  constexpr bool is_one() const noexcept { return num_ == 0; }

  // Product of roots of unity is the sum of their angles.
  friend Turn operator+(const Turn& a, const Turn& b) {
    __int128 num = static_cast<__int128>(a.num_) * b.den_ +
                   static_cast<__int128>(b.num_) * a.den_;
    __int128 den = static_cast<__int128>(a.den_) * b.den_;
    return from_wide(num, den);
  }

  // Complex conjugate / inverse.
  Turn inverse() const { return Turn(den_ - num_, den_); }

  // Exponent e such that this root equals x^e in the N-th roots of unity.
  // Requires den() | n.
  std::int64_t exponent_in(std::int64_t n) const {
    if (n <= 0 || n % den_ != 0)
      throw invalid_argument("Turn " + str() + " is not an N-th root of unity for N=" +
                             std::to_string(n));
    return num_ * (n / den_);
  }

  std::string str() const {
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

  friend constexpr bool operator==(const Turn&, const Turn&) = default;
  friend constexpr auto operator<=>(const Turn& a, const Turn& b) {
    // Order by angle.
    __int128 l = static_cast<__int128>(a.num_) * b.den_;
    __int128 r = static_cast<__int128>(b.num_) * a.den_;
    if (l != r)
      return l <=> r;
    return a.den_ <=> b.den_;
  }

  friend std::ostream& operator<<(std::ostream& os, const Turn& t) {
    return os << t.str();
  }

private:
  static Turn from_wide(__int128 num, __int128 den) {
    num %= den;
    if (num < 0)
      num += den;
    __int128 a = num, b = den;
    while (b != 0) {
      __int128 t = a % b;
      a = b;
      b = t;
    }
    num /= a;
    den /= a;
    if (den > INT64_MAX)
      throw internal_error("Turn denominator overflow");
    Turn t;
    t.num_ = static_cast<std::int64_t>(num);
    t.den_ = static_cast<std::int64_t>(den);
    return t;
  }

  friend Turn turn_pow(const Turn& t, std::int64_t k);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

// t^k, reduced: the angle k*num/den mod 1.
inline Turn turn_pow(const Turn& t, std::int64_t k) {
  __int128 kk = k % t.den_;
  return Turn::from_wide(kk * t.num_, t.den_);
}

} // namespace edim

template <>
struct std::hash<edim::Turn> {
  std::size_t operator()(const edim::Turn& t) const noexcept {
    return std::hash<std::int64_t>{}(t.num()) * 1000003u ^
           std::hash<std::int64_t>{}(t.den());
  }
};
