#include <numeric>

#include <gtest/gtest.h>

#include "edim/eddim.hpp"
#include "edim/spectra.hpp"
#include "oracles/brute_force.hpp"

using namespace edim;

namespace {

const DegreeVector e8{{2, 8, 12, 14, 18, 20, 24, 30}};
const DegreeVector e6{{2, 5, 6, 8, 9, 12}};

int max_ed_at_p(const GroupSpec& g) {
  int best = 0;
  for (int p : primes_up_to(reflection_degrees(g).max()))
    best = std::max(best, ed_at_p(g, p));
  return best;
}

} // namespace

TEST(ASpringer, Examples) {
  EXPECT_EQ(a_springer(e8, 2), 8);
  EXPECT_EQ(a_springer(e6, 2), 4);
  EXPECT_EQ(a_springer(e6, 1), 6);
  EXPECT_EQ(a_springer(e8, 1), 8);
  EXPECT_EQ(a_springer(e6, 5), 1);
  EXPECT_EQ(a_springer(e6, 5, 5), 0);
  EXPECT_EQ(a_springer(e6, 10, 5), 0);
  EXPECT_THROW(a_springer(e6, 0), invalid_argument);
}

TEST(EdAtP, Examples) {
  auto e8g = GroupSpec::exceptional(37);
  EXPECT_EQ(ed_at_p(e8g, 2), 8);
  EXPECT_EQ(ed_at_p(e8g, 3), 4);
  EXPECT_EQ(ed_at_p(e8g, 5), 2);
  EXPECT_EQ(ed_at_p(e8g, 7), 1);
  EXPECT_EQ(ed_at_p(e8g, 11), 0);
  EXPECT_EQ(ed_at_p(GroupSpec::symmetric(10), 3), 3);
  EXPECT_EQ(ed_at_p(GroupSpec::symmetric(10, SymmetricRep::natural), 3), 3);
  auto g = GroupSpec::imprimitive(4, 2, 3);
  EXPECT_EQ(ed_at_p(g, 2), 3);
  EXPECT_EQ(a_direct(g, 2), 3);
  EXPECT_THROW(ed_at_p(GroupSpec::alternating(6), 2), refusal);
  EXPECT_THROW(ed_at_p(e8g, 4), invalid_argument);
}

TEST(EdAtP, MatchesDirectOnGrid) {
  for (int m = 1; m <= 4; ++m)
    for (int l = 1; l <= m; ++l) {
      if (m % l)
        continue;
      for (int n = 1; n <= 5; ++n) {
        auto g = GroupSpec::imprimitive(m, l, n);
        if (!g.is_reflection_group() || degrees(g).values.empty())
          continue;
        for (int p : primes_up_to(degrees(g).max()))
          EXPECT_EQ(ed_at_p(g, p), a_direct(g, p)) << g.expression() << " p=" << p;
      }
    }
}

TEST(EdAbsolute, Examples) {
  EXPECT_EQ(ed_absolute(GroupSpec::exceptional(35)), EdValue::exact(4, provenance::abs_ed_e6));
  EXPECT_EQ(ed_absolute(GroupSpec::imprimitive(5, 5, 2)).lo, 1);
  auto g423 = ed_absolute(GroupSpec::imprimitive(4, 2, 3));
  EXPECT_TRUE(g423.is_exact());
  EXPECT_EQ(g423.lo, 3);
  EXPECT_EQ(ed_absolute(GroupSpec::exceptional(37)).lo, 8);
  EXPECT_EQ(ed_absolute(GroupSpec::cyclic(7)).lo, 1);
  EXPECT_EQ(ed_absolute(GroupSpec::symmetric(5)), EdValue::exact(2, provenance::symmetric_s5));
}

TEST(EdAbsolute, SymmetricBounds) {
  auto s6 = ed_absolute(GroupSpec::symmetric(6));
  EXPECT_TRUE(s6.is_exact());
  EXPECT_EQ(s6.lo, 3);
  auto s7 = ed_absolute(GroupSpec::symmetric(7));
  EXPECT_TRUE(s7.is_exact());
  EXPECT_EQ(s7.lo, 4);
  auto s8 = ed_absolute(GroupSpec::symmetric(8));
  EXPECT_FALSE(s8.is_exact());
  EXPECT_EQ(s8.lo, 4);
  EXPECT_EQ(s8.hi, 5);
  for (int n = 9; n <= 30; ++n) {
    auto v = ed_absolute(GroupSpec::symmetric(n));
    EXPECT_EQ(v.lo, (n + 1) / 2);
    EXPECT_EQ(v.hi, n - 3);
    EXPECT_FALSE(v.is_exact());
  }
  EXPECT_THROW(ed_absolute(GroupSpec::symmetric(4)), refusal);
  EXPECT_THROW(ed_absolute(GroupSpec::symmetric(7, SymmetricRep::standard, 11)), refusal);
}

TEST(EdAbsolute, Refusals) {
  EXPECT_EQ(ed_absolute(GroupSpec::imprimitive(2, 2, 2)),
            EdValue::exact(2, provenance::abs_ed_squeeze));
  EXPECT_THROW(ed_absolute(GroupSpec::alternating(6)), refusal);
  EXPECT_THROW(ed_absolute(GroupSpec::cyclic(1)), refusal);
}

TEST(EdAbsolute, CoprimeImprimitiveRule) {
  for (int m = 2; m <= 8; ++m)
    for (int n = 2; n <= 8; ++n) {
      auto v = ed_absolute(GroupSpec::imprimitive(m, m, n));
      ASSERT_TRUE(v.is_exact());
      EXPECT_EQ(v.lo, std::gcd(m, n) == 1 ? n - 1 : n) << "G(" << m << "," << m << "," << n << ")";
    }
}

TEST(EdValue, IntervalCollapses) {
  EXPECT_TRUE(EdValue::interval(3, 3, "x").is_exact());
  EXPECT_FALSE(EdValue::interval(3, 4, "x").is_exact());
  EXPECT_THROW(EdValue::interval(4, 3, "x"), internal_error);
}

TEST(Pmed, Examples) {
  EXPECT_EQ(pmed(GroupSpec::exceptional(37)), 8);
  EXPECT_EQ(pmed(GroupSpec::symmetric(7)), 3);
  EXPECT_EQ(pmed(GroupSpec::alternating(9)), 4);
  EXPECT_EQ(pmed(GroupSpec::cyclic(12)), 1);
  EXPECT_THROW(pmed(GroupSpec::alternating(3)), refusal);
  EXPECT_THROW(pmed(GroupSpec::alternating(6, 5)), refusal);
  for (int n = 2; n <= 30; ++n)
    EXPECT_EQ(pmed(GroupSpec::symmetric(n)), n / 2);
}

TEST(Pmed, AGroups) {
  EXPECT_EQ(pmed_a_group({{5, 1}, {2, 1}}).value, 1);
  EXPECT_EQ(pmed_a_group({{3, 1}, {7, 1}}).value, 1);
  EXPECT_EQ(pmed_a_group({{2, 3}, {3, 2}}).value, 3);
  auto trivial = pmed_a_group({});
  EXPECT_EQ(trivial.value, 0);
  EXPECT_EQ(trivial.notes.back(), "trivial group");
  EXPECT_THROW(pmed_a_group({{2, -1}}), invalid_argument);
}

TEST(Sandwich, HoldsOnGrid) {
  std::vector<GroupSpec> groups;
  for (int m = 2; m <= 8; ++m)
    for (int n = 2; n <= 8; ++n)
      groups.push_back(GroupSpec::imprimitive(m, m, n));
  for (int m = 2; m <= 4; ++m)
    for (int l = 1; l <= m; ++l)
      if (m % l == 0)
        for (int n = 1; n <= 6; ++n)
          groups.push_back(GroupSpec::imprimitive(m, l, n));
  for (int n = 5; n <= 12; ++n)
    groups.push_back(GroupSpec::symmetric(n));
  for (int idx = 4; idx <= 37; ++idx)
    groups.push_back(GroupSpec::exceptional(idx));
  int checked = 0;
  for (const auto& g : groups) {
    if (!g.is_irreducible() && !(g == GroupSpec::imprimitive(2, 2, 2)))
      continue;
    const int lower = max_ed_at_p(g);
    const int mid = pmed(g);
    const auto top = ed_absolute(g);
    EXPECT_LE(lower, mid) << g.expression();
    EXPECT_LE(mid, top.hi) << g.expression();
    ++checked;
  }
  EXPECT_GT(checked, 100);
}

TEST(Frobenius, Examples) {
  std::vector<int> a{3, 5}, b{2, 3}, c{1, 4}, d{4, 6};
  EXPECT_EQ(frobenius_number(a), 7);
  EXPECT_EQ(frobenius_number(b), 1);
  EXPECT_EQ(frobenius_number(c), std::nullopt);
  EXPECT_THROW(frobenius_number(d), invalid_argument);
  EXPECT_THROW(frobenius_number(std::vector<int>{}), invalid_argument);
  EXPECT_THROW(frobenius_number(std::vector<int>{0, 3}), invalid_argument);
}

TEST(Frobenius, MatchesScan) {
  int cases = 0;
  auto check = [&](const std::vector<int>& d) {
    int g = 0, lo = 13;
    long long prod = 1;
    for (int x : d) {
      g = std::gcd(g, x);
      lo = std::min(lo, x);
      prod *= x;
    }
    if (g != 1 || lo == 1)
      return;
    EXPECT_EQ(frobenius_number(d), oracle::frobenius_scan(d, prod)) << d.size();
    ++cases;
  };
  for (int x = 2; x <= 12; ++x)
    for (int y = x; y <= 12; ++y) {
      check({x, y});
      for (int z = y; z <= 12; ++z)
        check({x, y, z});
    }
  EXPECT_GT(cases, 100);
}

TEST(Report, Invariants) {
  for (int idx = 4; idx <= 37; ++idx) {
    auto r = build_report(GroupSpec::exceptional(idx));
    ASSERT_TRUE(r.degrees);
    int best = 0;
    for (int p : primes_up_to(r.degrees->max())) {
      bool divides = std::any_of(r.degrees->values.begin(), r.degrees->values.end(),
                                 [p](int d) { return d % p == 0; });
      EXPECT_EQ(r.per_prime.count(p), divides ? 1u : 0u);
    }
    for (const auto& [p, e] : r.per_prime) {
      ASSERT_TRUE(e.ed_at_p);
      EXPECT_EQ(*e.ed_at_p, e.a_p);
      best = std::max(best, *e.ed_at_p);
    }
    ASSERT_TRUE(r.pmed);
    EXPECT_EQ(*r.pmed, best);
    ASSERT_TRUE(r.ed_abs);
    EXPECT_EQ(r.ed_abs->hi, idx == 35 ? 4 : r.rank);
  }
  auto alt = build_report(GroupSpec::alternating(8));
  EXPECT_EQ(alt.per_prime.at(2).ed_at_p, 4);
  EXPECT_EQ(alt.per_prime.at(3).a_p, 2);
  EXPECT_FALSE(alt.per_prime.at(3).ed_at_p);
  EXPECT_EQ(alt.pmed, 4);
  EXPECT_FALSE(alt.ed_abs);

  auto s4 = build_report(GroupSpec::symmetric(4));
  EXPECT_FALSE(s4.ed_abs);
  EXPECT_EQ(s4.pmed, 2);
}
