#pragma once

#include <optional>
#include <string>
#include <vector>

#include "catalog.hpp"
#include "eddim.hpp"
#include "enumerate.hpp"
#include "error.hpp"
#include "molien.hpp"
#include "spectra.hpp"

namespace edim {

enum class Oracle { springer_vs_direct, molien, counts };

inline std::string to_string(Oracle o) {
  switch (o) {
  case Oracle::springer_vs_direct:
    return "springer-vs-direct";
  case Oracle::molien:
    return "molien";
  case Oracle::counts:
    return "counts";
  }
  return "?";
}

inline Oracle parse_oracle(const std::string& s) {
  if (s == "springer-vs-direct")
    return Oracle::springer_vs_direct;
  if (s == "molien")
    return Oracle::molien;
  if (s == "counts")
    return Oracle::counts;
  throw invalid_argument("unknown oracle '" + s + "' (springer-vs-direct, molien, counts)");
}

struct Assertion {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct VerifyResult {
  enum class Status { pass, fail, skipped };
  Oracle oracle = Oracle::counts;
  Status status = Status::pass;
  std::vector<Assertion> assertions;
  std::vector<std::string> notes;
  std::optional<DegreeVector> degrees;
  std::optional<Integer> total_elements;

  void check(std::string name, bool ok, std::string detail = {}) {
    assertions.push_back({std::move(name), ok, std::move(detail)});
    if (!ok)
      status = Status::fail;
  }
};

inline std::string to_string(VerifyResult::Status s) {
  switch (s) {
  case VerifyResult::Status::pass:
    return "pass";
  case VerifyResult::Status::fail:
    return "fail";
  case VerifyResult::Status::skipped:
    return "skipped";
  }
  return "?";
}

namespace detail {

inline std::string join_degrees(const DegreeVector& d) {
  std::string s = "[";
  for (std::size_t i = 0; i < d.values.size(); ++i)
    s += (i ? "," : "") + std::to_string(d.values[i]);
  return s + "]";
}

inline void verify_springer(const GroupSpec& g, unsigned long long budget, VerifyResult& r) {
  const auto d = degrees(g);
  r.degrees = d;
  for (int m = 1; m <= 2 * d.max(); ++m) {
    const int direct = a_direct(g, m, budget);
    const int springer = a_springer(d, m, g.base_char());
    r.check("a(" + std::to_string(m) + ")", direct == springer,
            "direct " + std::to_string(direct) + ", degree count " + std::to_string(springer));
  }
}

inline void verify_molien(const GroupSpec& g, unsigned long long budget, VerifyResult& r) {
  const auto expected = degrees(g);
  const auto ms = molien_series(g, std::nullopt, budget);
  const auto found = extract_degrees(ms, static_cast<std::size_t>(g.rank()));
  r.degrees = found;
  r.check("extracted degrees match catalog", found == expected,
          "molien " + join_degrees(found) + ", catalog " + join_degrees(expected));
  std::size_t first = 0;
  for (std::size_t k = 1; k <= ms.bound; ++k)
    if (ms.coeff(k) != 0) {
      first = k;
      break;
    }
  r.check("first nonzero coefficient at min degree",
          first == static_cast<std::size_t>(expected.values.front()),
          "t^" + std::to_string(first));
  auto product = PolySeries<Rational>::constant(Rational(1));
  for (int d : found.values)
    product = product * (PolySeries<Rational>::constant(Rational(1)) -
                         PolySeries<Rational>::monomial(Rational(1), static_cast<std::size_t>(d)));
  r.check("peeled product reproduces the reciprocal series",
          series_reciprocal(ms.as_series()).agrees_with(product.with_bound(ms.bound)));
}

inline void verify_counts(const GroupSpec& g, unsigned long long budget, VerifyResult& r) {
  Integer total = 0;
  visit_families(g, budget, [&](const ClassFamily& f) { total += f.element_count; });
  r.total_elements = total;
  const Integer order = group_order(g);
  r.check("class sizes sum to |G|", total == order, total.str() + " vs " + order.str());
  if (g.is_reflection_group()) {
    const auto d = degrees(g);
    Integer expected = d.sum() - static_cast<int>(d.size());
    Integer found = reflection_count(g, budget);
    r.check("reflections = sum(d_i - 1)", found == expected,
            found.str() + " vs " + expected.str());
  } else {
    r.notes.push_back("no degree vector: reflection count rule not applicable");
  }
}

} // namespace detail

// Runs one cross-check. Groups the oracle cannot handle, and budget
// overruns, give status skipped rather than fail.
inline VerifyResult verify(const GroupSpec& g, Oracle oracle,
                           unsigned long long budget = default_budget) {
  VerifyResult r;
  r.oracle = oracle;
  auto skip = [&](std::string why) {
    r.status = VerifyResult::Status::skipped;
    r.notes.push_back(std::move(why));
    return r;
  };
  if (!is_enumerable(g))
    return skip(g.expression() + ": no element enumeration for exceptional groups");
  if (oracle != Oracle::counts && !g.is_reflection_group())
    return skip(g.expression() + ": no degree vector (not a catalogued pseudo-reflection representation)");
  try {
    switch (oracle) {
    case Oracle::springer_vs_direct:
      detail::verify_springer(g, budget, r);
      break;
    case Oracle::molien:
      detail::verify_molien(g, budget, r);
      break;
    case Oracle::counts:
      detail::verify_counts(g, budget, r);
      break;
    }
  } catch (const budget_exceeded& e) {
    r.assertions.clear();
    return skip(e.what());
  }
  return r;
}

} // namespace edim
