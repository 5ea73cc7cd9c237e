#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <ostream>
#include <utility>
#include <vector>

#include "error.hpp"
#include "numbers.hpp"

namespace edim {

// Polynomial or truncated power series in one variable t with exact
// coefficients. With a truncation bound B only the coefficients of
// t^0..t^B are meaningful and every operation keeps exactly those; without
// a bound the object is an exact polynomial.
//
// T must be an exact ring constructible from int (Rational, Integer,
// CyclotomicNumber).
template <typename T>
class PolySeries {
public:
  PolySeries() = default;

  explicit PolySeries(std::vector<T> coeffs,
                      std::optional<std::size_t> bound = std::nullopt)
      : coeffs_(std::move(coeffs)), bound_(bound) {
    normalize();
  }

  static PolySeries constant(T c, std::optional<std::size_t> bound = std::nullopt) {
    return PolySeries(std::vector<T>{std::move(c)}, bound);
  }

  // c * t^k
  static PolySeries monomial(T c, std::size_t k,
                             std::optional<std::size_t> bound = std::nullopt) {
    std::vector<T> v(k + 1, T(0));
    v[k] = std::move(c);
    return PolySeries(std::move(v), bound);
  }

  const std::optional<std::size_t>& bound() const noexcept { return bound_; }
  bool is_polynomial() const noexcept { return !bound_.has_value(); }

  // Coefficient of t^k (zero past the stored range).
  T coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : T(0); }
  const std::vector<T>& coeffs() const noexcept { return coeffs_; }

  // Degree of the stored part; -1 for zero.
  long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }

  PolySeries with_bound(std::optional<std::size_t> bound) const {
    return PolySeries(coeffs_, bound);
  }

  friend PolySeries operator+(const PolySeries& a, const PolySeries& b) {
    auto bound = meet(a.bound_, b.bound_);
    std::vector<T> out(std::max(a.coeffs_.size(), b.coeffs_.size()), T(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
      out[i] += a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i)
      out[i] += b.coeffs_[i];
    return PolySeries(std::move(out), bound);
  }

  friend PolySeries operator-(const PolySeries& a) {
    std::vector<T> out = a.coeffs_;
    for (auto& c : out)
      c = -c;
    return PolySeries(std::move(out), a.bound_);
  }

  friend PolySeries operator-(const PolySeries& a, const PolySeries& b) { return a + (-b); }

  friend PolySeries operator*(const PolySeries& a, const PolySeries& b) {
    auto bound = meet(a.bound_, b.bound_);
    if (a.is_zero() || b.is_zero())
      return PolySeries({}, bound);
    std::size_t len = a.coeffs_.size() + b.coeffs_.size() - 1;
    if (bound)
      len = std::min(len, *bound + 1);
    std::vector<T> out(len, T(0));
    for (std::size_t i = 0; i < a.coeffs_.size() && i < len; ++i) {
      if (a.coeffs_[i] == T(0))
        continue;
      for (std::size_t j = 0; j < b.coeffs_.size() && i + j < len; ++j)
        out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return PolySeries(std::move(out), bound);
  }

  friend PolySeries operator*(const T& c, const PolySeries& a) {
    std::vector<T> out = a.coeffs_;
    for (auto& x : out)
      x = c * x;
    return PolySeries(std::move(out), a.bound_);
  }

  friend bool operator==(const PolySeries& a, const PolySeries& b) {
    return a.bound_ == b.bound_ && a.coeffs_ == b.coeffs_;
  }

  // Equality of the coefficients both sides know, up to the smaller bound.
  bool agrees_with(const PolySeries& other) const {
    auto bound = meet(bound_, other.bound_);
    std::size_t n = std::max(coeffs_.size(), other.coeffs_.size());
    if (bound)
      n = std::min(n, *bound + 1);
    for (std::size_t i = 0; i < n; ++i)
      if (coeff(i) != other.coeff(i))
        return false;
    return true;
  }

  friend std::ostream& operator<<(std::ostream& os, const PolySeries& s) {
    bool first = true;
    for (std::size_t i = 0; i < s.coeffs_.size(); ++i) {
      if (s.coeffs_[i] == T(0))
        continue;
      if (!first)
        os << " + ";
      first = false;
      os << "(" << s.coeffs_[i] << ")";
      if (i > 0)
        os << "*t^" << i;
    }
    if (first)
      os << "0";
    if (s.bound_)
      os << " + O(t^" << (*s.bound_ + 1) << ")";
    return os;
  }

private:
  static std::optional<std::size_t> meet(const std::optional<std::size_t>& a,
                                         const std::optional<std::size_t>& b) {
    if (a && b)
      return std::min(*a, *b);
    return a ? a : b;
  }

  void normalize() {
    if (bound_ && coeffs_.size() > *bound_ + 1)
      coeffs_.resize(*bound_ + 1);
    while (!coeffs_.empty() && coeffs_.back() == T(0))
      coeffs_.pop_back();
  }

  std::vector<T> coeffs_;
  std::optional<std::size_t> bound_;
};

// a / b as a power series truncated at `bound`. The constant term of b must
// be invertible in T.
template <typename T>
PolySeries<T> series_divide(const PolySeries<T>& a, const PolySeries<T>& b,
                            std::size_t bound) {
  const T b0 = b.coeff(0);
  if (b0 == T(0))
    throw invalid_argument("not invertible as a series: zero constant term");
  const T inv_b0 = T(1) / b0;
  std::vector<T> q(bound + 1, T(0));
  for (std::size_t k = 0; k <= bound; ++k) {
    T acc = a.coeff(k);
    for (std::size_t j = 1; j <= k && j < b.coeffs().size(); ++j)
      acc -= b.coeffs()[j] * q[k - j];
    q[k] = acc * inv_b0;
  }
  return PolySeries<T>(std::move(q), bound);
}

// 1/s truncated at s.bound(), or at `bound` when s is an exact polynomial.
template <typename T>
PolySeries<T> series_reciprocal(const PolySeries<T>& s,
                                std::optional<std::size_t> bound = std::nullopt) {
  auto b = bound ? bound : s.bound();
  if (!b)
    throw invalid_argument("series_reciprocal of a polynomial needs an explicit truncation bound");
  return series_divide(PolySeries<T>::constant(T(1)), s, *b);
}

template <typename T>
struct DivisionResult {
  PolySeries<T> quotient;
  PolySeries<T> remainder;
};

// Polynomial long division a = q*b + r with deg r < deg b. The leading
// coefficient of b must be invertible in T.
template <typename T>
DivisionResult<T> poly_divmod(const PolySeries<T>& a, const PolySeries<T>& b) {
  if (!a.is_polynomial() || !b.is_polynomial())
    throw invalid_argument("poly_divmod needs exact polynomials");
  if (b.is_zero())
    throw invalid_argument("division by the zero polynomial");
  std::vector<T> r = a.coeffs();
  const auto& bc = b.coeffs();
  const std::size_t db = bc.size() - 1;
  if (r.size() < bc.size())
    return {PolySeries<T>(), a};
  std::vector<T> q(r.size() - db, T(0));
  const T lead_inv = T(1) / bc.back();
  for (std::size_t i = r.size(); i-- > db;) {
    T c = r[i] * lead_inv;
    if (c == T(0))
      continue;
    q[i - db] = c;
    for (std::size_t j = 0; j <= db; ++j)
      r[i - db + j] -= c * bc[j];
  }
  return {PolySeries<T>(std::move(q)), PolySeries<T>(std::move(r))};
}

// Exact quotient a/b; throws if b does not divide a.
template <typename T>
PolySeries<T> poly_divide_exact(const PolySeries<T>& a, const PolySeries<T>& b) {
  auto [q, r] = poly_divmod(a, b);
  if (!r.is_zero())
    throw invalid_argument("polynomial division is not exact");
  return q;
}

// The N-th cyclotomic polynomial, obtained by dividing x^N - 1 exactly by
// Phi_d for every proper divisor d of N (smaller divisors first).
inline PolySeries<Rational> cyclotomic_minpoly(std::int64_t n) {
  if (n < 1)
    throw invalid_argument("cyclotomic_minpoly needs N >= 1");
  std::vector<std::int64_t> divisors;
  for (std::int64_t d = 1; d <= n; ++d)
    if (n % d == 0)
      divisors.push_back(d);
  std::vector<PolySeries<Rational>> phi;
  phi.reserve(divisors.size());
  for (std::size_t i = 0; i < divisors.size(); ++i) {
    const std::int64_t d = divisors[i];
    auto p = PolySeries<Rational>::monomial(Rational(1), static_cast<std::size_t>(d)) -
             PolySeries<Rational>::constant(Rational(1));
    for (std::size_t j = 0; j < i; ++j)
      if (d % divisors[j] == 0)
        p = poly_divide_exact(p, phi[j]);
    phi.push_back(std::move(p));
  }
  return phi.back();
}

} // namespace edim
