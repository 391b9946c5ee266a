#include <gtest/gtest.h>

#include <random>

#include "pmonoid/powerset.hpp"

using namespace pmonoid;

namespace {

Rational q(long long n, long long d = 1) { return Rational::reduce(n, d); }

FinSet ints(std::initializer_list<int> xs) {
  std::vector<Rational> v;
  for (int x : xs) v.push_back(q(x));
  return FinSet::from(v);
}

FinSet random_set(std::mt19937& rng, const std::vector<Rational>& pool, int max_size) {
  std::uniform_int_distribution<int> size(1, max_size);
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  std::vector<Rational> v;
  for (int i = size(rng); i > 0; --i) v.push_back(pool[pick(rng)]);
  return FinSet::from(v);
}

}  // namespace

TEST(Powerset, MinkowskiSum) {
  EXPECT_EQ(minkowski_sum(ints({0, 1}), ints({0, 2})), ints({0, 1, 2, 3}));
  EXPECT_EQ(minkowski_sum(ints({0}), ints({4, 9})), ints({4, 9}));
  auto s = minkowski_sum(ints({0, 3}), ints({0, 1, 5}));
  EXPECT_EQ(s, ints({0, 1, 3, 4, 5, 8}));
  EXPECT_EQ(s.size(), 6u);
}

TEST(Powerset, SizeBound) {
  EXPECT_TRUE(size_bound_check(ints({5}), ints({0, 1, 2})));
  EXPECT_EQ(minkowski_sum(ints({5}), ints({0, 1, 2})).size(), 3u);
  EXPECT_TRUE(size_bound_check(ints({0, 1}), ints({0, 2})));
  auto big = minkowski_sum(ints({0, 1, 7}), ints({0, 1, 2, 3}));
  EXPECT_EQ(big, ints({0, 1, 2, 3, 4, 7, 8, 9, 10}));
  EXPECT_TRUE(size_bound_check(ints({0, 1, 7}), ints({0, 1, 2, 3})));
}

TEST(Powerset, ShiftAndNormalize) {
  auto [n, m] = normalize(ints({2, 3, 5}));
  EXPECT_EQ(n, ints({0, 1, 3}));
  EXPECT_EQ(m, q(2));
  EXPECT_EQ(shift(ints({0, 1}), q(1, 2)), FinSet({q(1, 2), q(3, 2)}));
  EXPECT_EQ(normalize(ints({0, 4})).first, ints({0, 4}));
  try {
    shift_down(ints({1, 2}), q(2));
    FAIL();
  } catch (const monoid_error& e) {
    EXPECT_EQ(e.kind(), error_kind::would_go_negative);
  }
}

TEST(Powerset, ParseAndPrint) {
  EXPECT_EQ(parse_finset("{3, 0, 1/2, 3}"), FinSet({q(0), q(1, 2), q(3)}));
  EXPECT_EQ(parse_finset("{0, 1/2}").str(), "{0, 1/2}");
  EXPECT_THROW(parse_finset("0, 1"), monoid_error);
  EXPECT_THROW(parse_finset("{}"), monoid_error);
  EXPECT_THROW(FinSet::from({}), monoid_error);
}

TEST(Powerset, Membership) {
  auto m = PuiseuxMonoid::from_generators({q(2), q(3)});
  EXPECT_TRUE(in_power_monoid(ints({0, 2, 5}), m, true));
  EXPECT_FALSE(in_power_monoid(ints({2, 5}), m, true));
  EXPECT_TRUE(in_power_monoid(ints({2, 5}), m, false));
  EXPECT_FALSE(in_power_monoid(ints({0, 1}), m, false));
}

TEST(PowersetProperty, SumLaws) {
  std::mt19937 rng(31337);
  std::vector<Rational> pool;
  for (int n = 0; n <= 12; ++n)
    for (int d : {1, 2, 3}) pool.push_back(q(n, d));
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  for (int t = 0; t < 2000; ++t) {
    FinSet a = random_set(rng, pool, 6), b = random_set(rng, pool, 6), c = random_set(rng, pool, 6);
    ASSERT_EQ(minkowski_sum(a, b), minkowski_sum(b, a));
    ASSERT_EQ(minkowski_sum(minkowski_sum(a, b), c), minkowski_sum(a, minkowski_sum(b, c)));
    Rational d = pool[pick(rng)];
    ASSERT_EQ(minkowski_sum(shift(a, d), b), shift(minkowski_sum(a, b), d));
    // Direct definition.
    std::vector<Rational> all;
    for (const auto& x : a.elements())
      for (const auto& y : b.elements()) all.push_back(x + y);
    ASSERT_EQ(minkowski_sum(a, b), FinSet::from(all));
    ASSERT_GE(minkowski_sum(a, b).size(), a.size() + b.size() - 1);
  }
}

TEST(PowersetProperty, SizeBoundOverTwoAmbients) {
  std::mt19937 rng(2718);
  for (const auto& gens : {std::vector<int>{1}, std::vector<int>{2, 3}}) {
    std::vector<Rational> pool;
    std::vector<std::int64_t> g(gens.begin(), gens.end());
    auto n = NumericalMonoid::from_generators(g);
    for (int x = 0; x <= 40; ++x)
      if (n.contains(x)) pool.push_back(q(x));
    for (int t = 0; t < 3000; ++t) {
      FinSet b = random_set(rng, pool, 8), c = random_set(rng, pool, 8);
      ASSERT_TRUE(size_bound_check(b, c)) << b.str() << " " << c.str();
    }
  }
}
