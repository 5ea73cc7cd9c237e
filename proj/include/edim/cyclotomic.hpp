#pragma once

#include <cstdint>
#include <memory>
#include <ostream>
#include <span>
#include <utility>
#include <vector>

#include "error.hpp"
#include "numbers.hpp"
#include "series.hpp"
#include "turn.hpp"

namespace edim {

namespace detail {

struct CyclotomicData {
  std::int64_t order = 1;
  std::size_t degree = 1;
  // Coefficients of Phi_N, low to high, monic.
  std::vector<Integer> minpoly;
  // powers[k] = x^k mod Phi_N for 0 <= k < N, each of length `degree`.
  std::vector<std::vector<Integer>> powers;
};

inline std::shared_ptr<const CyclotomicData> make_cyclotomic_data(std::int64_t n) {
  auto data = std::make_shared<CyclotomicData>();
  data->order = n;
  const auto phi = cyclotomic_minpoly(n);
  data->degree = static_cast<std::size_t>(phi.degree());
  for (const auto& c : phi.coeffs()) {
    if (boost::multiprecision::denominator(c) != 1)
      throw internal_error("cyclotomic polynomial with non-integer coefficient");
    data->minpoly.push_back(boost::multiprecision::numerator(c));
  }
  const std::size_t deg = data->degree;
  std::vector<Integer> cur(deg, Integer(0));
  cur[0] = 1;
  data->powers.reserve(static_cast<std::size_t>(n));
  for (std::int64_t k = 0; k < n; ++k) {
    data->powers.push_back(cur);
    // cur <- x * cur mod Phi_N
    Integer top = cur[deg - 1];
    for (std::size_t i = deg - 1; i > 0; --i)
      cur[i] = cur[i - 1];
    cur[0] = 0;
    if (top != 0)
      for (std::size_t i = 0; i < deg; ++i)
        cur[i] -= top * data->minpoly[i];
  }
  return data;
}

} // namespace detail

// Element of Q(zeta_N) in the power basis 1, x, ..., x^(phi(N)-1) modulo
// the N-th cyclotomic polynomial, x = zeta_N = Turn(1,N).
//
// A default-constructed or integer-constructed value is a plain rational
// (order 1); it mixes freely with elements of any fixed order. Mixing two
// different orders > 1 is an error: callers fix one order per computation.
class CyclotomicNumber {
public:
  CyclotomicNumber() : coeffs_{Rational(0)} {}
  CyclotomicNumber(int v) : coeffs_{Rational(v)} {}
  CyclotomicNumber(Rational v) : coeffs_{std::move(v)} {}

  std::int64_t order() const noexcept { return field_ ? field_->order : 1; }
  const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }

  bool is_rational() const {
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
      if (coeffs_[i] != 0)
        return false;
    return true;
  }

  // Requires is_rational().
  Rational to_rational() const {
    if (!is_rational())
      throw internal_error("cyclotomic number is not rational");
    return coeffs_[0];
  }

  friend CyclotomicNumber operator+(const CyclotomicNumber& a, const CyclotomicNumber& b) {
    auto [x, y] = promote(a, b);
    for (std::size_t i = 0; i < x.coeffs_.size(); ++i)
      x.coeffs_[i] += y.coeffs_[i];
    return x;
  }

  friend CyclotomicNumber operator-(const CyclotomicNumber& a) {
    CyclotomicNumber r = a;
    for (auto& c : r.coeffs_)
      c = -c;
    return r;
  }

  friend CyclotomicNumber operator-(const CyclotomicNumber& a, const CyclotomicNumber& b) {
    return a + (-b);
  }

  friend CyclotomicNumber operator*(const CyclotomicNumber& a, const CyclotomicNumber& b) {
    if (!a.field_ || !b.field_) {
      const CyclotomicNumber& scalar = a.field_ ? b : a;
      CyclotomicNumber r = a.field_ ? a : b;
      for (auto& c : r.coeffs_)
        c *= scalar.coeffs_[0];
      return r;
    }
    check_same(a, b);
    const auto& f = *a.field_;
    const std::size_t deg = f.degree;
    std::vector<Rational> wide(2 * deg - 1, Rational(0));
    for (std::size_t i = 0; i < deg; ++i) {
      if (a.coeffs_[i] == 0)
        continue;
      for (std::size_t j = 0; j < deg; ++j)
        wide[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    CyclotomicNumber r = zero_like(a);
    for (std::size_t k = 0; k < wide.size(); ++k) {
      if (wide[k] == 0)
        continue;
      const auto& pw = f.powers[k % static_cast<std::size_t>(f.order)];
      for (std::size_t i = 0; i < deg; ++i)
        if (pw[i] != 0)
          r.coeffs_[i] += wide[k] * Rational(pw[i]);
    }
    return r;
  }

  CyclotomicNumber& operator+=(const CyclotomicNumber& o) { return *this = *this + o; }
  CyclotomicNumber& operator-=(const CyclotomicNumber& o) { return *this = *this - o; }
  CyclotomicNumber& operator*=(const CyclotomicNumber& o) { return *this = *this * o; }

  // Multiplicative inverse, by solving the linear system of multiplication
  // by *this over Q.
  CyclotomicNumber inverse() const;

  friend CyclotomicNumber operator/(const CyclotomicNumber& a, const CyclotomicNumber& b) {
    return a * b.inverse();
  }

  friend bool operator==(const CyclotomicNumber& a, const CyclotomicNumber& b) {
    if (!a.field_ || !b.field_) {
      const CyclotomicNumber& other = a.field_ ? a : b;
      const CyclotomicNumber& scalar = a.field_ ? b : a;
      return other.is_rational() && other.coeffs_[0] == scalar.coeffs_[0];
    }
    check_same(a, b);
    return a.coeffs_ == b.coeffs_;
  }

  friend std::ostream& operator<<(std::ostream& os, const CyclotomicNumber& z) {
    bool first = true;
    for (std::size_t i = 0; i < z.coeffs_.size(); ++i) {
      if (z.coeffs_[i] == 0)
        continue;
      if (!first)
        os << " + ";
      first = false;
      os << to_string(z.coeffs_[i]);
      if (i > 0)
        os << "*z" << z.order() << "^" << i;
    }
    if (first)
      os << "0";
    return os;
  }

private:
  friend class CyclotomicField;

  static void check_same(const CyclotomicNumber& a, const CyclotomicNumber& b) {
    if (a.field_->order != b.field_->order)
      throw invalid_argument("cyclotomic numbers of different orders " +
                             std::to_string(a.field_->order) + " and " +
                             std::to_string(b.field_->order));
  }

  static CyclotomicNumber zero_like(const CyclotomicNumber& a) {
    CyclotomicNumber r;
    r.field_ = a.field_;
    r.coeffs_.assign(a.field_ ? a.field_->degree : 1, Rational(0));
    return r;
  }

  // Brings both operands to the same representation.
  static std::pair<CyclotomicNumber, CyclotomicNumber> promote(const CyclotomicNumber& a,
                                                               const CyclotomicNumber& b) {
    if (a.field_ && b.field_)
      check_same(a, b);
    if (a.field_ && !b.field_) {
      CyclotomicNumber lifted = zero_like(a);
      lifted.coeffs_[0] = b.coeffs_[0];
      return {a, lifted};
    }
    if (!a.field_ && b.field_) {
      CyclotomicNumber lifted = zero_like(b);
      lifted.coeffs_[0] = a.coeffs_[0];
      return {lifted, b};
    }
    return {a, b};
  }

  std::shared_ptr<const detail::CyclotomicData> field_;
  std::vector<Rational> coeffs_;
};

// Q(zeta_N) for one fixed N. Cheap to copy; shares its reduction tables.
class CyclotomicField {
public:
  explicit CyclotomicField(std::int64_t order) {
    if (order < 1)
      throw invalid_argument("cyclotomic order must be positive");
    data_ = detail::make_cyclotomic_data(order);
  }

  std::int64_t order() const noexcept { return data_->order; }
  std::size_t degree() const noexcept { return data_->degree; }

  PolySeries<Rational> minpoly() const {
    std::vector<Rational> c(data_->minpoly.begin(), data_->minpoly.end());
    return PolySeries<Rational>(std::move(c));
  }

  CyclotomicNumber zero() const {
    CyclotomicNumber r;
    r.field_ = data_;
    r.coeffs_.assign(data_->degree, Rational(0));
    return r;
  }

  CyclotomicNumber from_rational(const Rational& q) const {
    CyclotomicNumber r = zero();
    r.coeffs_[0] = q;
    return r;
  }

  // zeta_N^e
  CyclotomicNumber power_of_generator(std::int64_t e) const {
    e %= data_->order;
    if (e < 0)
      e += data_->order;
    CyclotomicNumber r = zero();
    const auto& pw = data_->powers[static_cast<std::size_t>(e)];
    for (std::size_t i = 0; i < data_->degree; ++i)
      r.coeffs_[i] = Rational(pw[i]);
    return r;
  }

  // The root of unity t, which must have order dividing N.
  CyclotomicNumber embed(const Turn& t) const {
    return power_of_generator(t.exponent_in(data_->order));
  }

  // Image of sum_k c_k x^k in Z[x]/(x^N - 1) under x -> zeta_N.
  CyclotomicNumber reduce(std::span<const Integer> group_ring) const {
    if (group_ring.size() != static_cast<std::size_t>(data_->order))
      throw invalid_argument("group ring element must have exactly N coefficients");
    std::vector<Integer> acc(data_->degree, Integer(0));
    for (std::size_t k = 0; k < group_ring.size(); ++k) {
      if (group_ring[k] == 0)
        continue;
      const auto& pw = data_->powers[k];
      for (std::size_t i = 0; i < data_->degree; ++i)
        if (pw[i] != 0)
          acc[i] += group_ring[k] * pw[i];
    }
    CyclotomicNumber r = zero();
    for (std::size_t i = 0; i < data_->degree; ++i)
      r.coeffs_[i] = Rational(acc[i]);
    return r;
  }

private:
  std::shared_ptr<const detail::CyclotomicData> data_;
};

inline CyclotomicNumber CyclotomicNumber::inverse() const {
  if (!field_) {
    if (coeffs_[0] == 0)
      throw invalid_argument("division by zero");
    return CyclotomicNumber(Rational(1) / coeffs_[0]);
  }
  const std::size_t deg = field_->degree;
  // Column j of M is (*this) * x^j; solve M y = e_0.
  std::vector<std::vector<Rational>> m(deg, std::vector<Rational>(deg + 1, Rational(0)));
  for (std::size_t j = 0; j < deg; ++j) {
    CyclotomicNumber xj = zero_like(*this);
    const auto& pw = field_->powers[j];
    for (std::size_t i = 0; i < deg; ++i)
      xj.coeffs_[i] = Rational(pw[i]);
    CyclotomicNumber col = (*this) * xj;
    for (std::size_t i = 0; i < deg; ++i)
      m[i][j] = col.coeffs_[i];
  }
  m[0][deg] = 1;
  for (std::size_t c = 0; c < deg; ++c) {
    std::size_t piv = c;
    while (piv < deg && m[piv][c] == 0)
      ++piv;
    if (piv == deg)
      throw invalid_argument("division by zero");
    std::swap(m[c], m[piv]);
    Rational inv = Rational(1) / m[c][c];
    for (auto& v : m[c])
      v *= inv;
    for (std::size_t r = 0; r < deg; ++r) {
      if (r == c || m[r][c] == 0)
        continue;
      Rational f = m[r][c];
      for (std::size_t k = c; k <= deg; ++k)
        m[r][k] -= f * m[c][k];
    }
  }
  CyclotomicNumber out = zero_like(*this);
  for (std::size_t i = 0; i < deg; ++i)
    out.coeffs_[i] = m[i][deg];
  return out;
}

} // namespace edim
