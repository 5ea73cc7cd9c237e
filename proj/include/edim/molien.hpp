#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "catalog.hpp"
#include "cyclotomic.hpp"
#include "enumerate.hpp"
#include "error.hpp"
#include "numbers.hpp"
#include "series.hpp"
#include "spectra.hpp"

namespace edim {

// Hilbert series of the invariant ring k[V]^G, truncated at `bound`.
struct MolienSeries {
  GroupSpec group;
  std::size_t bound = 0;
  std::vector<Rational> coeffs;

  Rational coeff(std::size_t k) const { return k < coeffs.size() ? coeffs[k] : Rational(0); }
  PolySeries<Rational> as_series() const { return PolySeries<Rational>(coeffs, bound); }
};

// Largest bound molien_series picks on its own.
inline constexpr std::size_t max_default_molien_bound = 20000;

// sum(d_i) + 1 when the catalog has degrees; otherwise |G| + rank, which
// covers every generator degree by the Noether bound.
inline std::size_t default_molien_bound(const GroupSpec& g) {
  if (g.is_reflection_group())
    return static_cast<std::size_t>(degrees(g).sum()) + 1;
  const Integer b = group_order(g) + g.rank();
  if (b > max_default_molien_bound)
    throw invalid_argument("default Molien bound |G| + rank = " + b.str() +
                           " is too large; pass an explicit bound");
  return static_cast<std::size_t>(b);
}

// (1/|G|) sum_g 1/det(1 - t g), summed over signature families.
//
// All eigenvalues lie in mu_N with N the lcm of their orders. Each family's
// term prod_lambda 1/(1 - lambda t) is expanded by dividing by one linear
// factor at a time, b_k += lambda * b_{k-1}, with coefficients in the group
// ring Z[x]/(x^N - 1), where multiplying by a root of unity is a rotation.
// The weighted total is then mapped into Q(zeta_N); every coefficient must
// land in Q, and after dividing by |G| must be a non-negative integer.
inline MolienSeries molien_series(const GroupSpec& g, std::optional<std::size_t> bound = std::nullopt,
                                  unsigned long long budget = default_budget) {
  if (!is_enumerable(g))
    throw refusal("no Molien series for " + g.expression() + ": no group elements are shipped");
  const std::size_t b = bound ? *bound : default_molien_bound(g);
  const RepRule rule = rep_rule(g);

  struct Term {
    Integer count;
    std::vector<Turn> eigen;
  };
  std::vector<Term> terms;
  std::int64_t n_order = 1;
  visit_families(g, budget, [&](const ClassFamily& f) {
    Term t{f.element_count, {}};
    for (const auto& [turn, mult] : eigenvalues_of_signature(f.signature, rule).entries) {
      n_order = checked_lcm(n_order, turn.den());
      t.eigen.insert(t.eigen.end(), mult, turn);
    }
    terms.push_back(std::move(t));
  });

  const std::size_t n = static_cast<std::size_t>(n_order);
  std::vector<std::vector<Integer>> total(b + 1, std::vector<Integer>(n, Integer(0)));
  std::vector<std::vector<Integer>> series(b + 1, std::vector<Integer>(n));
  for (const auto& t : terms) {
    for (auto& row : series)
      std::fill(row.begin(), row.end(), Integer(0));
    series[0][0] = 1;
    for (const auto& lambda : t.eigen) {
      const std::size_t e = static_cast<std::size_t>(lambda.exponent_in(n_order));
      for (std::size_t k = 1; k <= b; ++k) {
        const auto& prev = series[k - 1];
        auto& cur = series[k];
        for (std::size_t j = 0; j < n; ++j)
          if (prev[j] != 0)
            cur[(j + e) % n] += prev[j];
      }
    }
    for (std::size_t k = 0; k <= b; ++k)
      for (std::size_t j = 0; j < n; ++j)
        if (series[k][j] != 0)
          total[k][j] += t.count * series[k][j];
  }

  const CyclotomicField field(n_order);
  const Integer order = group_order(g);
  MolienSeries out{g, b, {}};
  out.coeffs.reserve(b + 1);
  for (std::size_t k = 0; k <= b; ++k) {
    const CyclotomicNumber z = field.reduce(total[k]);
    if (!z.is_rational())
      throw internal_error("Molien coefficient of t^" + std::to_string(k) + " for " +
                           g.expression() + " is not rational");
    const Rational c = z.to_rational() / Rational(order);
    if (c < 0 || boost::multiprecision::denominator(c) != 1)
      throw internal_error("Molien coefficient of t^" + std::to_string(k) + " for " +
                           g.expression() + " is not a non-negative integer: " + to_string(c));
    out.coeffs.push_back(c);
  }
  if (out.coeffs[0] != 1)
    throw internal_error("Molien series constant term is not 1");
  return out;
}

// Reads the degrees d_1..d_n off a Molien series equal to
// 1/prod(1 - t^{d_i}). The reciprocal Q = prod(1 - t^{d_i}) has lowest
// non-constant term -k t^{d_min}; divide out one (1 - t^{d_min}) and repeat.
inline DegreeVector extract_degrees(const PolySeries<Rational>& molien, std::size_t rank) {
  if (!molien.bound())
    throw invalid_argument("extract_degrees needs a truncated series");
  const std::size_t bound = *molien.bound();
  auto q = series_reciprocal(molien);
  DegreeVector out;
  std::size_t used = 0;
  for (std::size_t i = 0; i < rank; ++i) {
    std::size_t d = 0;
    for (std::size_t k = 1; k <= bound; ++k)
      if (q.coeff(k) != 0) {
        d = k;
        break;
      }
    if (d == 0)
      throw invalid_argument(q.is_zero() || q.coeff(0) != 1
                                 ? "series is not a product of (1 - t^d) factors"
                                 : "truncation bound too small: only " + std::to_string(i) +
                                       " of " + std::to_string(rank) + " degrees visible");
    const Rational lead = q.coeff(d);
    if (lead >= 0 || boost::multiprecision::denominator(lead) != 1)
      throw invalid_argument("series is not a product of (1 - t^d) factors (coefficient " +
                             to_string(lead) + " at t^" + std::to_string(d) + ")");
    used += d;
    if (used > bound)
      throw invalid_argument("truncation bound too small: degrees sum past " +
                             std::to_string(bound));
    auto factor = PolySeries<Rational>(std::vector<Rational>{Rational(1)}) -
                  PolySeries<Rational>::monomial(Rational(1), d);
    q = series_divide(q, factor, bound);
    out.values.push_back(static_cast<int>(d));
  }
  if (!(q == PolySeries<Rational>::constant(Rational(1), bound)))
    throw invalid_argument("series is not a product of " + std::to_string(rank) +
                           " factors (1 - t^d)");
  std::sort(out.values.begin(), out.values.end());
  return out;
}

inline DegreeVector extract_degrees(const MolienSeries& ms, std::size_t rank) {
  return extract_degrees(ms.as_series(), rank);
}

} // namespace edim
