#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "catalog.hpp"
#include "enumerate.hpp"
#include "error.hpp"
#include "numbers.hpp"
#include "spectra.hpp"

namespace edim {

// Tags attached to every reported number, naming the rule that produced it.
namespace provenance {
inline constexpr const char* family_formula = "family-formula";
inline constexpr const char* table_anchored = "table-anchored";
inline constexpr const char* table_external = "table-external";
inline constexpr const char* springer_count = "springer-degree-count";
inline constexpr const char* reflection_ed = "reflection-ed-equals-a";
inline constexpr const char* symmetric_ed_floor = "symmetric-ed-floor-n-over-p";
inline constexpr const char* direct_eigenspace = "direct-eigenspace-max";
inline constexpr const char* alternating_ed2 = "alternating-ed-at-2";
inline constexpr const char* pmed_max_a = "pmed-max-a-p";
inline constexpr const char* alternating_pmed = "alternating-pmed";
inline constexpr const char* a_group_rank = "a-group-sylow-rank";
inline constexpr const char* abs_ed_e6 = "abs-ed-w-e6";
inline constexpr const char* abs_ed_gmmn = "abs-ed-gmmn-coprime";
inline constexpr const char* abs_ed_rank = "abs-ed-full-rank";
inline constexpr const char* abs_ed_squeeze = "abs-ed-squeeze";
inline constexpr const char* symmetric_bounds = "symmetric-ed-bounds";
inline constexpr const char* symmetric_s5 = "symmetric-s5-klein";
inline constexpr const char* centre_gcd = "centre-gcd-of-degrees";
inline constexpr const char* oracle_molien = "oracle-molien";
} // namespace provenance

// a(m) read off the degrees: the number of d_i divisible by m, or 0 when m
// is a multiple of the base characteristic.
inline int a_springer(const DegreeVector& d, int m, int base_char = 0) {
  if (m < 1)
    throw invalid_argument("a(m) needs m >= 1");
  if (base_char != 0 && m % base_char == 0)
    return 0;
  return static_cast<int>(
      std::count_if(d.values.begin(), d.values.end(), [m](int di) { return di % m == 0; }));
}

// Degrees used for group-level statements: S_n in either representation
// uses its reflection representation.
inline DegreeVector reflection_degrees(const GroupSpec& g) {
  if (auto s = g.as<Symmetric>(); s && s->rep == SymmetricRep::natural)
    return degrees(GroupSpec::symmetric(s->n, SymmetricRep::standard, g.base_char()));
  return degrees(g);
}

// ed(G;p) = a(p) for groups generated by pseudo-reflections. For S_n the
// value is also computed as floor(n/p) and the two must agree.
inline int ed_at_p(const GroupSpec& g, int p) {
  if (!is_prime(p))
    throw invalid_argument("ed(G;p) needs a prime p, got " + std::to_string(p));
  if (g.as<Alternating>())
    throw refusal("ed(G;p) = a(p) holds only for groups generated by pseudo-reflections; "
                  "for A_n only a(p) and pmed are available");
  const int value = a_springer(reflection_degrees(g), p, g.base_char());
  if (auto s = g.as<Symmetric>(); s && p != g.base_char()) {
    if (value != s->n / p)
      throw internal_error("degree count " + std::to_string(value) + " differs from floor(n/p) = " +
                           std::to_string(s->n / p) + " for " + g.expression());
  }
  return value;
}

// Exact value or closed interval [lo, hi], with the rule that produced it.
struct EdValue {
  enum class Kind { exact, interval };
  Kind kind = Kind::exact;
  int lo = 0;
  int hi = 0;
  std::string provenance;

  static EdValue exact(int v, std::string tag) { return {Kind::exact, v, v, std::move(tag)}; }

  // Collapses to exact when lo == hi.
  static EdValue interval(int lo, int hi, std::string tag) {
    if (lo > hi)
      throw internal_error("empty interval [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
    return {lo == hi ? Kind::exact : Kind::interval, lo, hi, std::move(tag)};
  }

  bool is_exact() const noexcept { return kind == Kind::exact; }
  friend bool operator==(const EdValue&, const EdValue&) = default;
};

// Primes up to and including n.
inline std::vector<int> primes_up_to(int n) {
  std::vector<int> out;
  for (int p = 2; p <= n; ++p)
    if (is_prime(p))
      out.push_back(p);
  return out;
}

// Absolute essential dimension.
//   W(E6) (ST35)                      -> 4
//   G(m,m,n), m >= 2, gcd(m,n) = 1    -> n - 1
//   other irreducible reflection group -> dim V
//   reducible reflection group         -> dim V when max_p a(p) = dim V
//   S_n: 2 for n = 5, [floor((n+1)/2), n-3] for n >= 6, char 0 only.
inline EdValue ed_absolute(const GroupSpec& g) {
  if (auto s = g.as<Symmetric>()) {
    if (g.base_char() != 0)
      throw refusal("ed(S_n) in positive characteristic is not determined by the implemented "
                    "results (bounds hold in characteristic 0 only)");
    if (s->n <= 4)
      throw refusal("ed(S_n) for n <= 4 is not determined by the implemented results");
    if (s->n == 5)
      return EdValue::exact(2, provenance::symmetric_s5);
    // floor((n+1)/2) >= floor(n/2), so it is the binding lower bound.
    return EdValue::interval((s->n + 1) / 2, s->n - 3, provenance::symmetric_bounds);
  }
  if (!g.is_reflection_group())
    throw refusal("absolute essential dimension formula applies only to irreducible groups "
                  "generated by pseudo-reflections; " + g.expression() + " is not one");
  if (!g.is_irreducible()) {
    // ed(G;p) <= ed(G) <= dim V, so a(p) = dim V for some p pins ed(G).
    const auto d = degrees(g);
    int best = 0;
    for (int p : primes_up_to(d.max()))
      best = std::max(best, a_springer(d, p, g.base_char()));
    if (best > 0 && best == g.rank())
      return EdValue::exact(best, provenance::abs_ed_squeeze);
    throw refusal("absolute essential dimension formula requires irreducibility; " +
                  g.expression() + " is reducible or trivial");
  }
  if (auto e = g.as<Exceptional>(); e && e->index == 35)
    return EdValue::exact(4, provenance::abs_ed_e6);
  if (auto im = g.as<Imprimitive>(); im && im->m == im->l && std::gcd(im->m, im->n) == 1)
    return EdValue::exact(im->n - 1, provenance::abs_ed_gmmn);
  return EdValue::exact(g.rank(), provenance::abs_ed_rank);
}

// Poor man's essential dimension: max_p a(p) for reflection groups (primes
// beyond the largest degree contribute 0), 2*floor(n/4) for A_n in
// characteristic 0.
inline int pmed(const GroupSpec& g, unsigned long long budget = default_budget) {
  if (auto a = g.as<Alternating>()) {
    if (a->n <= 3)
      throw refusal("pmed(A_n) is determined only for n >= 4");
    if (g.base_char() != 0)
      throw refusal("pmed(A_n) = 2*floor(n/4) is established in characteristic 0 only");
    const int closed = 2 * (a->n / 4);
    int direct = 0;
    for (int p : primes_up_to(a->n))
      direct = std::max(direct, a_direct(g, p, budget));
    if (direct != closed)
      throw internal_error("pmed(A" + std::to_string(a->n) + "): direct maximum " +
                           std::to_string(direct) + " differs from 2*floor(n/4) = " +
                           std::to_string(closed));
    return closed;
  }
  const auto d = reflection_degrees(g);
  int best = 0;
  for (int p : primes_up_to(d.max()))
    best = std::max(best, a_springer(d, p, g.base_char()));
  if (auto s = g.as<Symmetric>(); s && best != s->n / 2)
    throw internal_error("pmed(S_n) mismatch with floor(n/2)");
  return best;
}

struct AGroupResult {
  int value = 0;
  std::vector<std::string> notes;
};

// pmed of an A-group (all Sylow subgroups abelian) is the largest Sylow
// rank. The abelian-Sylow hypothesis is the caller's and is not checked.
inline AGroupResult pmed_a_group(const std::map<int, int>& sylow_ranks) {
  AGroupResult r;
  r.notes.push_back("caller asserts every Sylow subgroup is abelian (A-group); not verified");
  if (sylow_ranks.empty()) {
    r.notes.push_back("trivial group");
    return r;
  }
  for (const auto& [p, rank] : sylow_ranks) {
    if (rank < 0)
      throw invalid_argument("Sylow rank must be non-negative");
    r.value = std::max(r.value, rank);
  }
  return r;
}

// Largest q >= 0 with no solution of sum a_i d_i = q in non-negative
// integers; std::nullopt when 1 is among the d_i (nothing is missing).
inline std::optional<long long> frobenius_number(std::span<const int> d) {
  if (d.empty())
    throw invalid_argument("frobenius_number needs a nonempty list");
  long long g = 0;
  int lo = d[0], hi = d[0];
  for (int x : d) {
    if (x < 1)
      throw invalid_argument("frobenius_number needs positive integers");
    g = std::gcd(g, static_cast<long long>(x));
    lo = std::min(lo, x);
    hi = std::max(hi, x);
  }
  if (g > 1)
    throw invalid_argument("infinitely many non-representable values: gcd is " + std::to_string(g));
  if (lo == 1)
    return std::nullopt;
  // Every q > (lo-1)(hi-1) - 1 is representable, so a table up to lo*hi
  // suffices.
  const long long limit = static_cast<long long>(lo) * hi;
  std::vector<char> rep(static_cast<std::size_t>(limit + 1), 0);
  rep[0] = 1;
  for (long long q = 1; q <= limit; ++q)
    for (int x : d)
      if (q >= x && rep[q - x]) {
        rep[q] = 1;
        break;
      }
  long long last = -1;
  for (long long q = 0; q <= limit; ++q)
    if (!rep[q])
      last = q;
  return last;
}

struct PrimeEntry {
  int a_p = 0;
  std::optional<int> ed_at_p;
  std::string provenance;
  friend bool operator==(const PrimeEntry&, const PrimeEntry&) = default;
};

// Everything known about one group.
struct EdReport {
  GroupSpec group;
  Integer order;
  int rank = 0;
  std::optional<DegreeVector> degrees;
  std::string degrees_provenance;
  std::optional<int> centre_order;
  std::map<int, PrimeEntry> per_prime;
  std::optional<int> pmed;
  std::string pmed_provenance;
  std::optional<EdValue> ed_abs;
  std::vector<std::string> notes;
};

inline EdReport build_report(const GroupSpec& g, unsigned long long budget = default_budget) {
  EdReport r{g, group_order(g), g.rank(), {}, {}, {}, {}, {}, {}, {}, g.notes()};
  if (g.base_char() != 0)
    r.notes.push_back("characteristic " + std::to_string(g.base_char()) + ": a(m) = 0 for m divisible by it");

  if (g.is_reflection_group()) {
    r.degrees = degrees(g);
    if (g.as<Exceptional>())
      r.degrees_provenance = degrees_are_external(g) ? provenance::table_external
                                                     : provenance::table_anchored;
    else
      r.degrees_provenance = provenance::family_formula;
    if (degrees_are_external(g))
      r.notes.push_back("degrees of " + g.expression() + " come from external reference data: " +
                        ExceptionalTable::builtin().source());
    r.centre_order = centre_order(g);

    const char* tag = g.as<Symmetric>() ? provenance::symmetric_ed_floor : provenance::reflection_ed;
    for (int p : primes_up_to(r.degrees->max())) {
      bool divides = std::any_of(r.degrees->values.begin(), r.degrees->values.end(),
                                 [p](int d) { return d % p == 0; });
      if (!divides)
        continue;
      int a = a_springer(*r.degrees, p, g.base_char());
      r.per_prime[p] = {a, ed_at_p(g, p), tag};
    }
    r.notes.push_back("a(p) = ed(G;p) = 0 for every prime dividing no degree");
    r.pmed = pmed(g, budget);
    r.pmed_provenance = provenance::pmed_max_a;
  } else if (auto a = g.as<Alternating>()) {
    for (int p : primes_up_to(a->n)) {
      PrimeEntry e{a_direct(g, p, budget), std::nullopt, provenance::direct_eigenspace};
      if (p == 2 && a->n >= 4 && g.base_char() == 0) {
        e.ed_at_p = 2 * (a->n / 4);
        e.provenance = provenance::alternating_ed2;
      }
      r.per_prime[p] = e;
    }
    r.notes.push_back("A_n contains no pseudo-reflections: ed(A_n;p) = a(p) is not available, "
                      "so ed(A_n;p) is reported only at p = 2");
    r.notes.push_back("a(p) = 0 for every prime p > n");
    try {
      r.pmed = pmed(g, budget);
      r.pmed_provenance = provenance::alternating_pmed;
    } catch (const refusal& e) {
      r.notes.push_back(std::string("pmed: ") + e.what());
    }
  } else if (auto s = g.as<Symmetric>()) {
    // Natural representation: group-level quantities via S_n's reflection
    // representation.
    for (int p : primes_up_to(s->n))
      r.per_prime[p] = {a_direct(g, p, budget), ed_at_p(g, p), provenance::symmetric_ed_floor};
    r.notes.push_back("natural representation: a(p) computed directly; ed(S_n;p) from the "
                      "reflection representation degrees");
    r.pmed = pmed(g, budget);
    r.pmed_provenance = provenance::pmed_max_a;
  }

  try {
    r.ed_abs = ed_absolute(g);
  } catch (const refusal& e) {
    r.notes.push_back(std::string("ed(G): ") + e.what());
  }
  return r;
}

} // namespace edim
