#include "tripleforge/power_relations.hpp"

#include <gtest/gtest.h>

using namespace tripleforge;

namespace {

// Literal term-by-term evaluation of the bracketed sums.
Integer geometric_by_terms(const Integer& x, unsigned long m) {
  Integer sum = 1;
  for (unsigned long p = 1; p + 1 <= m; ++p) sum += pow(x, 2 * p);
  return sum;
}

Integer alternating_by_terms(const Integer& x, unsigned long m) {
  Integer sum = (m - 1) % 2 == 0 ? 1 : -1;
  for (unsigned long p = 1; p + 1 <= m; ++p) {
    const Integer term = pow(x, 2 * p);
    if ((m - 1 - p) % 2 == 0) sum += term;
    else sum -= term;
  }
  return sum;
}

}  // namespace

TEST(BaseTriple, Examples) {
  auto check = [](unsigned long x, unsigned long y, unsigned long z) {
    const Triple t = base_triple(x);
    EXPECT_EQ(t.x(), x);
    EXPECT_EQ(t.y(), y);
    EXPECT_EQ(t.z(), z);
    EXPECT_EQ(t.d(), 1);
    EXPECT_TRUE(t.primitive());
  };
  check(3, 4, 5);
  check(5, 12, 13);
  check(7, 24, 25);
  EXPECT_THROW(base_triple(4), std::invalid_argument);
  EXPECT_THROW(base_triple(1), std::invalid_argument);
}

TEST(BaseTriple, MatchesHalfLegForm) {
  // x = 2n + 1 gives y = 2n^2 + 2n and z = y + 1.
  for (unsigned long n = 1; n < 500; ++n) {
    const Triple t = base_triple(2 * n + 1);
    ASSERT_EQ(t.y(), 2 * n * n + 2 * n);
    ASSERT_EQ(t.z(), 2 * n * n + 2 * n + 1);
  }
}

TEST(PowerTriple, Examples) {
  const Triple a = power_triple(3, 2);
  EXPECT_EQ(a.x(), 9);
  EXPECT_EQ(a.y(), 40);
  EXPECT_EQ(a.z(), 41);

  EXPECT_EQ(power_triple(3, 1), base_triple(3));

  const Triple c = power_triple(3, 6);
  EXPECT_EQ(c.x(), 729);
  EXPECT_EQ(c.y(), 265720);
  EXPECT_EQ(c.z(), 265721);

  EXPECT_THROW(power_triple(6, 2), std::invalid_argument);
  EXPECT_THROW(power_triple(1, 2), std::invalid_argument);
  EXPECT_THROW(power_triple(3, 0), std::invalid_argument);
}

TEST(Factors, Examples) {
  EXPECT_EQ(geometric_factor(3, 2), 10);
  EXPECT_EQ(geometric_factor(3, 4), 820);
  EXPECT_EQ(geometric_factor(11, 1), 1);
  EXPECT_EQ(alternating_factor(3, 2), 8);
  EXPECT_EQ(alternating_factor(3, 3), 73);
  EXPECT_EQ(alternating_factor(11, 1), 1);
  EXPECT_THROW(geometric_factor(3, 0), std::invalid_argument);
  EXPECT_THROW(alternating_factor(2, 3), std::invalid_argument);
}

TEST(Factors, HornerMatchesTermwiseSums) {
  for (unsigned long x = 3; x <= 99; x += 2) {
    for (unsigned long m = 1; m <= 15; ++m) {
      ASSERT_EQ(geometric_factor(x, m), geometric_by_terms(x, m)) << x << '^' << m;
      ASSERT_EQ(alternating_factor(x, m), alternating_by_terms(x, m)) << x << '^' << m;
      ASSERT_GT(alternating_factor(x, m), 0);
    }
  }
}

TEST(Factors, TelescopingIdentities) {
  for (unsigned long x = 3; x <= 199; x += 2) {
    const Integer sq = Integer(x) * x;
    for (unsigned long m = 1; m <= 12; ++m) {
      const Integer top = pow(Integer(x), 2 * m);
      ASSERT_EQ(geometric_factor(x, m) * (sq - 1), top - 1);
      ASSERT_EQ(alternating_factor(x, m) * (sq + 1), m % 2 == 1 ? Integer(top + 1) : Integer(top - 1));
    }
  }
}

TEST(Relate, Examples) {
  const PowerRelationReport a = relate(3, 2);
  EXPECT_EQ(a.y_prime, 40);
  EXPECT_EQ(a.z_prime, 41);
  EXPECT_TRUE(a.agreed);
  EXPECT_EQ(a.geometric_factor, 10);
  EXPECT_EQ(a.alternating_factor, 8);
  EXPECT_EQ(a.base, base_triple(3));

  const PowerRelationReport b = relate(3, 5);
  EXPECT_EQ(b.y_prime, 29524);
  EXPECT_EQ(b.z_prime, 29525);
  EXPECT_TRUE(b.agreed);

  const PowerRelationReport c = relate(3, 1);
  EXPECT_EQ(c.y_prime, 4);
  EXPECT_EQ(c.z_prime, 5);

  const PowerRelationReport d = relate(5, 3);
  EXPECT_EQ(d.y_prime, 7812);
  EXPECT_EQ(d.z_prime, 7813);
  EXPECT_TRUE(d.agreed);

  EXPECT_THROW(relate(8, 2), std::invalid_argument);
  EXPECT_THROW(relate(1, 2), std::invalid_argument);
  EXPECT_THROW(relate(3, 0), std::invalid_argument);
}

TEST(Relate, AlternatingPathRoutesByParity) {
  // Even m: z * bracket is y'. Odd m: it is z'.
  const PowerRelationReport even = relate(3, 4);
  EXPECT_EQ(even.base.z() * even.alternating_factor, even.y_prime);
  EXPECT_EQ(even.path(RelationPath::AlternatingSum).y_prime, 3280);

  const PowerRelationReport odd = relate(3, 3);
  EXPECT_EQ(odd.base.z() * odd.alternating_factor, odd.z_prime);
  EXPECT_EQ(odd.path(RelationPath::AlternatingSum).z_prime, 365);
  EXPECT_EQ(odd.path(RelationPath::AlternatingSum).y_prime, 364);
}

TEST(Relate, ReportsEveryPathInOrder) {
  const PowerRelationReport r = relate(7, 3);
  ASSERT_EQ(r.paths.size(), kRelationPaths.size());
  for (std::size_t i = 0; i < r.paths.size(); ++i) {
    EXPECT_EQ(r.paths[i].path, kRelationPaths[i]);
    EXPECT_EQ(r.paths[i].y_prime, 58824);
    EXPECT_EQ(r.paths[i].z_prime, 58825);
  }
  EXPECT_EQ(to_string(RelationPath::Direct), "direct");
  EXPECT_EQ(to_string(RelationPath::GeometricSum), "eq2.1");
  EXPECT_EQ(to_string(RelationPath::AlternatingSum), "eq2.2-2.3");
  EXPECT_EQ(to_string(RelationPath::Equivalent), "equivalent");
}

TEST(Relate, UnitExponentCollapsesToBase) {
  for (unsigned long x = 3; x <= 301; x += 2) {
    const PowerRelationReport r = relate(x, 1);
    const Triple base = base_triple(x);
    ASSERT_TRUE(r.agreed);
    for (const auto& p : r.paths) {
      ASSERT_EQ(p.y_prime, base.y());
      ASSERT_EQ(p.z_prime, base.z());
    }
  }
}

TEST(Relate, PathsAgreeAcrossSweep) {
  for (unsigned long x = 3; x <= 199; x += 2) {
    for (unsigned long m = 1; m <= 12; ++m) {
      const PowerRelationReport r = relate(x, m);
      ASSERT_TRUE(r.agreed) << x << '^' << m;
      ASSERT_EQ(r.z_prime - r.y_prime, 1);
      const Triple t = power_triple(x, m);
      ASSERT_TRUE(t.primitive());
      ASSERT_EQ(t.y(), r.y_prime);
    }
  }
}

TEST(Relate, ArbitraryPrecisionDepth) {
  const PowerRelationReport r = relate(3, 200);
  EXPECT_TRUE(r.agreed);
  EXPECT_EQ(r.y_prime, (pow(Integer(3), 400) - 1) / 2);
  EXPECT_EQ(to_decimal(r.y_prime).size(), 191u);

  const Integer big_leg("123456789012345678901234567890123");
  const PowerRelationReport s = relate(big_leg, 9);
  EXPECT_TRUE(s.agreed);
}
