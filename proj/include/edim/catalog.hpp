#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "error.hpp"
#include "exceptional_table.hpp"
#include "numbers.hpp"

namespace edim {

// Base characteristic divides the group order.
class characteristic_violation : public refusal {
public:
  using refusal::refusal;
};

struct Cyclic {
  int m = 1;
  friend bool operator==(const Cyclic&, const Cyclic&) = default;
};

enum class SymmetricRep { standard, natural };

struct Symmetric {
  int n = 2;
  SymmetricRep rep = SymmetricRep::standard;
  friend bool operator==(const Symmetric&, const Symmetric&) = default;
};

// Alt_n on its natural n-dimensional permutation module.
struct Alternating {
  int n = 4;
  friend bool operator==(const Alternating&, const Alternating&) = default;
};

// G(m,l,n): monomial matrices with m-th root of unity entries whose
// exponents sum to 0 mod l.
struct Imprimitive {
  int m = 2;
  int l = 1;
  int n = 2;
  friend bool operator==(const Imprimitive&, const Imprimitive&) = default;
};

struct Exceptional {
  int index = 4;
  friend bool operator==(const Exceptional&, const Exceptional&) = default;
};

using GroupFamily = std::variant<Cyclic, Symmetric, Alternating, Imprimitive, Exceptional>;

// Sorted fundamental degrees d_1 <= ... <= d_n.
struct DegreeVector {
  std::vector<int> values;

  std::size_t size() const noexcept { return values.size(); }
  int max() const { return values.empty() ? 0 : values.back(); }
  Integer product() const {
    Integer p = 1;
    for (int d : values)
      p *= d;
    return p;
  }
  int sum() const { return std::accumulate(values.begin(), values.end(), 0); }
  friend bool operator==(const DegreeVector&, const DegreeVector&) = default;
};

namespace detail {

inline Integer family_order(const GroupFamily& f) {
  struct {
    Integer operator()(const Cyclic& c) const { return c.m; }
    Integer operator()(const Symmetric& s) const { return factorial(s.n); }
    Integer operator()(const Alternating& a) const { return factorial(a.n) / 2; }
    Integer operator()(const Imprimitive& g) const {
      Integer o = boost::multiprecision::pow(Integer(g.m), static_cast<unsigned>(g.n));
      return o * factorial(g.n) / g.l;
    }
    Integer operator()(const Exceptional& e) const {
      return ExceptionalTable::builtin().at(e.index).order;
    }
  } visitor;
  return std::visit(visitor, f);
}

inline void check_family(const GroupFamily& f) {
  struct {
    void operator()(const Cyclic& c) const {
      if (c.m < 1)
        throw invalid_argument("C_m needs m >= 1");
    }
    void operator()(const Symmetric& s) const {
      if (s.rep == SymmetricRep::standard && s.n < 2)
        throw invalid_argument("standard representation of S_n needs n >= 2");
      if (s.n < 1)
        throw invalid_argument("S_n needs n >= 1");
    }
    void operator()(const Alternating& a) const {
      if (a.n < 2)
        throw invalid_argument("A_n needs n >= 2");
    }
    void operator()(const Imprimitive& g) const {
      if (g.m < 1 || g.l < 1 || g.n < 1)
        throw invalid_argument("G(m,l,n) needs positive parameters");
      if (g.m % g.l != 0)
        throw invalid_argument("G(m,l,n) needs l | m");
    }
    void operator()(const Exceptional& e) const {
      (void)ExceptionalTable::builtin().at(e.index);
    }
  } visitor;
  std::visit(visitor, f);
}

} // namespace detail

// Outcome of checking the standing hypothesis char(k) does not divide |G|.
struct CharacteristicReport {
  bool ok = true;
  int base_char = 0;
  Integer order;
  // a(m) is forced to 0 for every multiple m of base_char.
  bool zero_convention_active = false;
  std::string message;
};

inline CharacteristicReport validate_characteristic(const GroupFamily& f, int base_char) {
  detail::check_family(f);
  if (base_char != 0 && !is_prime(base_char))
    throw invalid_argument("base characteristic must be 0 or a prime, got " +
                           std::to_string(base_char));
  CharacteristicReport r;
  r.base_char = base_char;
  r.order = detail::family_order(f);
  r.zero_convention_active = base_char != 0;
  if (base_char != 0 && r.order % base_char == 0) {
    r.ok = false;
    r.message = "characteristic " + std::to_string(base_char) + " divides the group order " +
                r.order.str();
  } else {
    r.message = base_char == 0 ? "characteristic 0"
                               : "characteristic " + std::to_string(base_char) +
                                     " is prime to the group order; a(m) = 0 for multiples of " +
                                     std::to_string(base_char);
  }
  return r;
}

// A validated pseudo-reflection group (or Alt_n / natural S_n) together
// with its base characteristic. Degenerate G(m,l,n) parameters are
// normalized at construction and the rewrite is recorded in notes().
class GroupSpec {
public:
  static GroupSpec create(GroupFamily family, int base_char = 0) {
    GroupSpec g;
    g.family_ = normalize(std::move(family), g.notes_);
    auto report = validate_characteristic(g.family_, base_char);
    if (!report.ok)
      throw characteristic_violation(report.message + " (the theory needs char(k) prime to |G|)");
    g.base_char_ = base_char;
    return g;
  }

  static GroupSpec cyclic(int m, int base_char = 0) { return create(Cyclic{m}, base_char); }
  static GroupSpec symmetric(int n, SymmetricRep rep = SymmetricRep::standard,
                             int base_char = 0) {
    return create(Symmetric{n, rep}, base_char);
  }
  static GroupSpec alternating(int n, int base_char = 0) {
    return create(Alternating{n}, base_char);
  }
  static GroupSpec imprimitive(int m, int l, int n, int base_char = 0) {
    return create(Imprimitive{m, l, n}, base_char);
  }
  static GroupSpec exceptional(int index, int base_char = 0) {
    return create(Exceptional{index}, base_char);
  }

  const GroupFamily& family() const noexcept { return family_; }
  int base_char() const noexcept { return base_char_; }
  const std::vector<std::string>& notes() const noexcept { return notes_; }

  template <typename F>
  const F* as() const noexcept {
    return std::get_if<F>(&family_);
  }

  // Dimension of the representation space.
  int rank() const {
    struct {
      int operator()(const Cyclic&) const { return 1; }
      int operator()(const Symmetric& s) const {
        return s.rep == SymmetricRep::standard ? s.n - 1 : s.n;
      }
      int operator()(const Alternating& a) const { return a.n; }
      int operator()(const Imprimitive& g) const { return g.n; }
      int operator()(const Exceptional& e) const {
        return ExceptionalTable::builtin().at(e.index).rank;
      }
    } visitor;
    return std::visit(visitor, family_);
  }

  // True when the representation is generated by pseudo-reflections and
  // catalogued with fundamental degrees.
  bool is_reflection_group() const {
    if (as<Alternating>())
      return false;
    if (auto s = as<Symmetric>())
      return s->rep == SymmetricRep::standard;
    return true;
  }

  bool is_irreducible() const {
    if (auto c = as<Cyclic>())
      return c->m >= 2;
    if (auto s = as<Symmetric>())
      return s->rep == SymmetricRep::standard;
    if (as<Alternating>())
      return false;
    if (auto g = as<Imprimitive>())
      return !(g->m == 2 && g->l == 2 && g->n == 2);
    return true;
  }

  // Canonical group expression, e.g. "G(4,2,3)", "ST37", "S8[natural]".
  std::string expression() const {
    struct {
      std::string operator()(const Cyclic& c) const { return "C" + std::to_string(c.m); }
      std::string operator()(const Symmetric& s) const {
        return "S" + std::to_string(s.n) + (s.rep == SymmetricRep::natural ? "[natural]" : "");
      }
      std::string operator()(const Alternating& a) const { return "A" + std::to_string(a.n); }
      std::string operator()(const Imprimitive& g) const {
        return "G(" + std::to_string(g.m) + "," + std::to_string(g.l) + "," +
               std::to_string(g.n) + ")";
      }
      std::string operator()(const Exceptional& e) const {
        return "ST" + std::to_string(e.index);
      }
    } visitor;
    return std::visit(visitor, family_);
  }

  std::string name() const {
    if (auto e = as<Exceptional>())
      return ExceptionalTable::builtin().at(e->index).name;
    return expression();
  }

  friend bool operator==(const GroupSpec& a, const GroupSpec& b) {
    return a.family_ == b.family_ && a.base_char_ == b.base_char_;
  }

private:
  static GroupFamily normalize(GroupFamily f, std::vector<std::string>& notes) {
    detail::check_family(f);
    if (auto g = std::get_if<Imprimitive>(&f)) {
      const std::string orig = "G(" + std::to_string(g->m) + "," + std::to_string(g->l) + "," +
                               std::to_string(g->n) + ")";
      if (g->n == 1) {
        notes.push_back(orig + " is cyclic of order m/l; normalized to C" +
                        std::to_string(g->m / g->l));
        return Cyclic{g->m / g->l};
      }
      if (g->m == 1) {
        notes.push_back(orig + " is S_" + std::to_string(g->n) +
                        " permuting coordinates; normalized to its irreducible (n-1)-dimensional "
                        "reflection representation S" +
                        std::to_string(g->n));
        return Symmetric{g->n, SymmetricRep::standard};
      }
      if (g->m == 2 && g->l == 2 && g->n == 2)
        notes.push_back("G(2,2,2) is reducible (Klein four-group acting diagonally)");
    }
    return f;
  }

  GroupFamily family_;
  int base_char_ = 0;
  std::vector<std::string> notes_;
};

inline Integer group_order(const GroupSpec& g) { return detail::family_order(g.family()); }

// Fundamental degrees of a pseudo-reflection representation.
inline DegreeVector degrees(const GroupSpec& g) {
  DegreeVector d;
  if (auto c = g.as<Cyclic>()) {
    d.values = {c->m};
  } else if (auto s = g.as<Symmetric>()) {
    if (s->rep == SymmetricRep::natural)
      throw refusal("no fundamental degrees: only the irreducible (n-1)-dimensional reflection "
                    "representation of S_n is catalogued, not the natural representation");
    for (int k = 2; k <= s->n; ++k)
      d.values.push_back(k);
  } else if (g.as<Alternating>()) {
    throw refusal("no fundamental degrees: representation is not generated by "
                  "pseudo-reflections (A_n contains no pseudo-reflections)");
  } else if (auto im = g.as<Imprimitive>()) {
    for (int k = 1; k < im->n; ++k)
      d.values.push_back(k * im->m);
    d.values.push_back(im->m * im->n / im->l);
  } else {
    d.values = ExceptionalTable::builtin().at(g.as<Exceptional>()->index).degrees;
  }
  std::sort(d.values.begin(), d.values.end());
  return d;
}

// Order of the centre: gcd of the degrees.
inline int centre_order(const GroupSpec& g) {
  auto d = degrees(g);
  return static_cast<int>(gcd_of(d.values));
}

// Degrees that come from the external data file rather than a closed formula
// or an independently fixed list.
inline bool degrees_are_external(const GroupSpec& g) {
  auto e = g.as<Exceptional>();
  return e && !ExceptionalTable::builtin().at(e->index).anchored();
}

} // namespace edim
