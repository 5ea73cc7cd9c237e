#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "catalog.hpp"
#include "error.hpp"
#include "numbers.hpp"

namespace edim {

inline constexpr unsigned long long default_budget = 2'000'000;

// One cycle of a monomial element: the permutation cycle length and the sum
// (mod m) of the phase exponents along it.
struct Cycle {
  int length = 1;
  int phase = 0;
  friend auto operator<=>(const Cycle&, const Cycle&) = default;
};

// Conjugacy data of a monomial element of G(m,l,n): the multiset of its
// (cycle length, phase sum) pairs. Cycles are kept sorted by length
// descending, then phase ascending, so equal signatures compare equal.
struct CycleSignature {
  int modulus = 1;
  std::vector<Cycle> cycles;

  int degree() const {
    int n = 0;
    for (const auto& c : cycles)
      n += c.length;
    return n;
  }

  int phase_total() const {
    int s = 0;
    for (const auto& c : cycles)
      s = (s + c.phase) % modulus;
    return s;
  }

  void canonicalize() {
    std::sort(cycles.begin(), cycles.end(), [](const Cycle& a, const Cycle& b) {
      return a.length != b.length ? a.length > b.length : a.phase < b.phase;
    });
  }

  friend auto operator<=>(const CycleSignature&, const CycleSignature&) = default;

  friend std::ostream& operator<<(std::ostream& os, const CycleSignature& s) {
    os << "[";
    for (std::size_t i = 0; i < s.cycles.size(); ++i) {
      if (i)
        os << " ";
      os << s.cycles[i].length;
      if (s.modulus > 1)
        os << ":" << s.cycles[i].phase;
    }
    return os << "]";
  }
};

struct ClassFamily {
  CycleSignature signature;
  Integer element_count;
};

using FamilyVisitor = std::function<void(const ClassFamily&)>;

namespace detail {

// Partitions of n as non-increasing part lists, in lexicographic order
// (1+1+...+1 first, n last).
inline void for_each_partition(int n, const std::function<void(const std::vector<int>&)>& f) {
  if (n == 0) {
    f({});
    return;
  }
  std::vector<int> parts(n, 1);
  while (true) {
    f(parts);
    // Next partition in lexicographic order of non-increasing sequences:
    // find the rightmost position i where parts[i] can grow by absorbing
    // the tail, then refill the tail with 1s.
    int tail = 0;
    int i = static_cast<int>(parts.size()) - 1;
    while (i >= 0) {
      tail += parts[i];
      // parts[i] can grow if it is allowed (i == 0 or parts[i-1] > parts[i])
      // and there is something after it to absorb.
      if (i < static_cast<int>(parts.size()) - 1 && (i == 0 || parts[i - 1] > parts[i]))
        break;
      --i;
    }
    if (i < 0)
      return;
    int grown = parts[i] + 1;
    int rest = tail - grown;
    parts.resize(i);
    parts.push_back(grown);
    parts.insert(parts.end(), rest, 1);
  }
}

class FamilyBudget {
public:
  FamilyBudget(unsigned long long budget, std::string what)
      : budget_(budget), what_(std::move(what)) {}
  void charge() {
    if (++used_ > budget_)
      throw budget_exceeded(budget_, what_);
  }

private:
  unsigned long long budget_;
  unsigned long long used_ = 0;
  std::string what_;
};

// Enumerates every signature of G(m,l,n) whose cycle type is `parts` and
// whose phase total is 0 mod l. Phases of equal-length cycles form a
// non-decreasing sequence so each multiset appears once.
//
// Count of elements with a given signature: the permutations of that cycle
// type number n!/prod(c^{k_c} k_c!); the k_c cycles of length c can be
// labelled by the phase multiset in k_c!/prod_s r_{c,s}! ways; and each
// cycle of length c has m^{c-1} phase vectors with a prescribed sum.
inline void visit_cycle_type(int m, int l, int n, const std::vector<int>& parts,
                             FamilyBudget& budget, const FamilyVisitor& visit) {
  const std::size_t k = parts.size();
  std::vector<int> phase(k, 0);
  const Integer n_fact = factorial(n);
  const Integer m_pow = boost::multiprecision::pow(Integer(m), static_cast<unsigned>(n - static_cast<int>(k)));

  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == k) {
      int total = 0;
      for (int p : phase)
        total += p;
      if (total % l != 0)
        return;
      Integer denom = 1;
      std::size_t run_start = 0;
      for (std::size_t j = 0; j < k; ++j) {
        denom *= parts[j];
        // runs of equal (length, phase)
        if (j + 1 == k || parts[j + 1] != parts[j] || phase[j + 1] != phase[j]) {
          denom *= factorial(static_cast<int>(j + 1 - run_start));
          run_start = j + 1;
        }
      }
      ClassFamily fam;
      fam.signature.modulus = m;
      for (std::size_t j = 0; j < k; ++j)
        fam.signature.cycles.push_back({parts[j], phase[j]});
      fam.signature.canonicalize();
      fam.element_count = n_fact / denom * m_pow;
      budget.charge();
      visit(fam);
      return;
    }
    int lo = (i > 0 && parts[i - 1] == parts[i]) ? phase[i - 1] : 0;
    for (int s = lo; s < m; ++s) {
      phase[i] = s;
      rec(i + 1);
    }
  };
  // Parts arrive non-increasing; enumerate in that order and report each
  // cycle type with phases ascending.
  rec(0);
}

} // namespace detail

// All signature families of G(m,l,n), ordered by cycle type (partitions in
// lexicographic order) and then by phases ascending. Element counts sum to
// m^n n!/l. Throws budget_exceeded after `budget` families.
inline void visit_imprimitive(int m, int l, int n, unsigned long long budget,
                              const FamilyVisitor& visit) {
  if (m < 1 || l < 1 || n < 1 || m % l != 0)
    throw invalid_argument("G(m,l,n) needs positive parameters with l | m");
  detail::FamilyBudget charge(budget, "G(" + std::to_string(m) + "," + std::to_string(l) + "," +
                                          std::to_string(n) + ")");
  detail::for_each_partition(n, [&](const std::vector<int>& parts) {
    detail::visit_cycle_type(m, l, n, parts, charge, visit);
  });
}

inline void visit_symmetric(int n, unsigned long long budget, const FamilyVisitor& visit) {
  if (n < 1)
    throw invalid_argument("S_n needs n >= 1");
  detail::FamilyBudget charge(budget, "S" + std::to_string(n));
  detail::for_each_partition(n, [&](const std::vector<int>& parts) {
    detail::visit_cycle_type(1, 1, n, parts, charge, visit);
  });
}

// Even cycle types only (an even number of even-length cycles). Classes that
// split in A_n are not separated; only eigenvalue data matters here.
inline void visit_alternating(int n, unsigned long long budget, const FamilyVisitor& visit) {
  if (n < 2)
    throw invalid_argument("A_n needs n >= 2");
  detail::FamilyBudget charge(budget, "A" + std::to_string(n));
  detail::for_each_partition(n, [&](const std::vector<int>& parts) {
    int even = 0;
    for (int c : parts)
      even += (c % 2 == 0);
    if (even % 2 == 0)
      detail::visit_cycle_type(1, 1, n, parts, charge, visit);
  });
}

inline std::vector<ClassFamily> collect(const std::function<void(const FamilyVisitor&)>& source) {
  std::vector<ClassFamily> out;
  source([&](const ClassFamily& f) { out.push_back(f); });
  return out;
}

inline std::vector<ClassFamily> signatures_symmetric(int n,
                                                     unsigned long long budget = default_budget) {
  return collect([&](const FamilyVisitor& v) { visit_symmetric(n, budget, v); });
}

inline std::vector<ClassFamily> signatures_alternating(int n,
                                                       unsigned long long budget = default_budget) {
  return collect([&](const FamilyVisitor& v) { visit_alternating(n, budget, v); });
}

inline std::vector<ClassFamily> signatures_imprimitive(int m, int l, int n,
                                                       unsigned long long budget = default_budget) {
  return collect([&](const FamilyVisitor& v) { visit_imprimitive(m, l, n, budget, v); });
}

// Signature stream of any enumerable spec. Cyclic(m) is G(m,1,1); the
// representation rule for S_n is applied later, in spectra.
inline void visit_families(const GroupSpec& g, unsigned long long budget,
                           const FamilyVisitor& visit) {
  if (auto c = g.as<Cyclic>())
    return visit_imprimitive(c->m, 1, 1, budget, visit);
  if (auto s = g.as<Symmetric>())
    return visit_symmetric(s->n, budget, visit);
  if (auto a = g.as<Alternating>())
    return visit_alternating(a->n, budget, visit);
  if (auto im = g.as<Imprimitive>())
    return visit_imprimitive(im->m, im->l, im->n, budget, visit);
  throw refusal("no signature enumeration for exceptional group " + g.expression() +
                " (no generators are shipped); use the degree table");
}

inline bool is_enumerable(const GroupSpec& g) { return g.as<Exceptional>() == nullptr; }

} // namespace edim
