#pragma once

#include <algorithm>
#include <map>
#include <string>

#include "catalog.hpp"
#include "enumerate.hpp"
#include "error.hpp"
#include "turn.hpp"

namespace edim {

// Eigenvalues of one group element with multiplicities, keyed by angle.
struct EigenvalueMultiset {
  std::map<Turn, int> entries;

  int multiplicity(const Turn& t) const {
    auto it = entries.find(t);
    return it == entries.end() ? 0 : it->second;
  }

  int dimension() const {
    int n = 0;
    for (const auto& [t, k] : entries)
      n += k;
    return n;
  }

  friend bool operator==(const EigenvalueMultiset&, const EigenvalueMultiset&) = default;
};

enum class RepRule {
  // Monomial action on k^n.
  natural,
  // S_n on the sum-zero hyperplane: the natural multiset minus one 1.
  standard,
};

inline RepRule rep_rule(const GroupSpec& g) {
  if (auto s = g.as<Symmetric>())
    return s->rep == SymmetricRep::standard ? RepRule::standard : RepRule::natural;
  return RepRule::natural;
}

// A cycle of length c whose phases multiply to zeta_m^s acts on its c
// coordinates with characteristic polynomial x^c - zeta_m^s, so it
// contributes the c roots (s + j*m)/(m*c), j = 0..c-1.
inline EigenvalueMultiset eigenvalues_of_signature(const CycleSignature& sig,
                                                   RepRule rule = RepRule::natural) {
  EigenvalueMultiset out;
  const std::int64_t m = sig.modulus;
  for (const auto& cyc : sig.cycles) {
    for (std::int64_t j = 0; j < cyc.length; ++j)
      ++out.entries[Turn(cyc.phase + j * m, m * cyc.length)];
  }
  if (rule == RepRule::standard) {
    auto it = out.entries.find(Turn());
    if (it == out.entries.end())
      throw internal_error("permutation signature without eigenvalue 1");
    if (--it->second == 0)
      out.entries.erase(it);
  }
  return out;
}

// max over g of dim V(g, zeta) for a fixed root of unity zeta, by direct
// maximization over the signature stream. Stops early at the full dimension.
inline int max_eigenspace_dimension(const GroupSpec& g, const Turn& zeta,
                                    unsigned long long budget = default_budget) {
  const RepRule rule = rep_rule(g);
  const int full = g.rank();
  int best = 0;
  struct done {};
  try {
    visit_families(g, budget, [&](const ClassFamily& f) {
      best = std::max(best, eigenvalues_of_signature(f.signature, rule).multiplicity(zeta));
      if (best >= full)
        throw done{};
    });
  } catch (const done&) {
  }
  return best;
}

// a(m): the largest zeta_m-eigenspace, using zeta_m = Turn(1,m). Zero when
// m is a multiple of the base characteristic.
inline int a_direct(const GroupSpec& g, int m, unsigned long long budget = default_budget) {
  if (m < 1)
    throw invalid_argument("a(m) needs m >= 1");
  if (!is_enumerable(g))
    throw refusal("no element enumeration for " + g.expression() + "; use a_springer");
  if (g.base_char() != 0 && m % g.base_char() == 0)
    return 0;
  return max_eigenspace_dimension(g, Turn(1, m), budget);
}

// Number of pseudo-reflections: elements whose eigenvalue 1 has
// multiplicity exactly dim - 1.
inline Integer reflection_count(const GroupSpec& g, unsigned long long budget = default_budget) {
  if (!is_enumerable(g))
    throw refusal("no element enumeration for " + g.expression() + "; use a_springer");
  const RepRule rule = rep_rule(g);
  const int n = g.rank();
  Integer count = 0;
  visit_families(g, budget, [&](const ClassFamily& f) {
    if (eigenvalues_of_signature(f.signature, rule).multiplicity(Turn()) == n - 1)
      count += f.element_count;
  });
  return count;
}

} // namespace edim
