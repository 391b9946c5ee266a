#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "pmonoid/puiseux.hpp"

using namespace pmonoid;

namespace {

Rational q(long long n, long long d = 1) { return Rational::reduce(n, d); }

PuiseuxMonoid pm(std::vector<Rational> gens, Route route = Route::automatic) {
  return PuiseuxMonoid::from_generators(std::move(gens), route);
}

std::vector<Rational> rats(std::initializer_list<std::pair<long long, long long>> xs) {
  std::vector<Rational> out;
  for (auto [n, d] : xs) out.push_back(q(n, d));
  return out;
}

}  // namespace

TEST(Puiseux, ScaleAndUnderlyingMonoid) {
  auto m = pm(rats({{1, 2}, {1, 3}}));
  EXPECT_EQ(m.scale(), q(6));
  ASSERT_NE(m.numerical(), nullptr);
  EXPECT_EQ(m.numerical()->atoms(), (std::vector<std::int64_t>{2, 3}));

  auto two = pm({q(2)});
  EXPECT_EQ(two.scale(), q(1, 2));
  EXPECT_EQ(two.numerical()->atoms(), (std::vector<std::int64_t>{1}));

  auto m2 = pm(rats({{4, 5}, {6, 7}}));
  EXPECT_EQ(m2.scale(), q(35, 2));
  EXPECT_EQ(m2.numerical()->atoms(), (std::vector<std::int64_t>{14, 15}));
  EXPECT_THROW(pm({}), monoid_error);
  EXPECT_THROW(pm({q(0)}), monoid_error);
}

TEST(Puiseux, Membership) {
  auto m = pm(rats({{1, 2}, {1, 3}}));
  EXPECT_TRUE(m.contains(q(5, 6)));
  EXPECT_FALSE(m.contains(q(1, 6)));
  EXPECT_TRUE(m.contains(q(0)));
  EXPECT_FALSE(m.contains(q(1, 7)));
}

TEST(Puiseux, Atoms) {
  EXPECT_EQ(geometric(q(2, 3), 3).atoms(), rats({{8, 27}, {4, 9}, {2, 3}, {1, 1}}));
  EXPECT_EQ(pm(rats({{1, 2}, {1, 3}, {5, 6}})).atoms(), rats({{1, 3}, {1, 2}}));
  EXPECT_EQ(pm({q(2)}).atoms(), (std::vector<Rational>{q(2)}));
  EXPECT_EQ(pm(rats({{1, 2}, {1, 3}, {5, 6}}), Route::congruence).atoms(), rats({{1, 3}, {1, 2}}));
}

TEST(Puiseux, Divisors) {
  auto m = pm(rats({{1, 2}, {1, 3}}));
  EXPECT_EQ(m.divisors(q(5, 6)), rats({{0, 1}, {1, 3}, {1, 2}, {5, 6}}));
  EXPECT_EQ(m.divisors(q(0)), (std::vector<Rational>{q(0)}));
  EXPECT_EQ(pm({q(2), q(3)}).divisors(q(4)), rats({{0, 1}, {2, 1}, {4, 1}}));
  try {
    m.divisors(q(1, 6));
    FAIL();
  } catch (const monoid_error& e) {
    EXPECT_EQ(e.kind(), error_kind::not_a_member);
  }
}

TEST(Puiseux, Factorizations) {
  auto m = pm(rats({{1, 2}, {1, 3}}));
  auto one = m.factorizations(q(1));
  std::set<std::vector<Rational>> got;
  for (const auto& z : one.items) got.insert(z.expanded());
  EXPECT_EQ(got, (std::set<std::vector<Rational>>{rats({{1, 2}, {1, 2}}), rats({{1, 3}, {1, 3}, {1, 3}})}));
  EXPECT_EQ(m.factorizations(q(1, 3)).items.size(), 1u);

  auto g = geometric(q(2, 3), 2);
  std::set<std::vector<Rational>> two;
  for (const auto& z : g.factorizations(q(2)).items) two.insert(z.expanded());
  EXPECT_TRUE(two.count(rats({{1, 1}, {1, 1}})));
  EXPECT_TRUE(two.count(rats({{2, 3}, {2, 3}, {2, 3}})));
  EXPECT_EQ(m.length_set(q(1)), (std::set<std::uint64_t>{2, 3}));
  EXPECT_THROW(m.length_set(q(0)), monoid_error);
}

TEST(Puiseux, MaximalCommonDivisors) {
  auto m = pm({q(2), q(3)});
  std::vector<Rational> a{q(4), q(6)}, b{q(2), q(3)}, c{q(5)};
  EXPECT_EQ(m.mcd(a), (std::vector<Rational>{q(4)}));
  EXPECT_EQ(m.mcd(b), (std::vector<Rational>{q(0)}));
  EXPECT_EQ(m.mcd(c), (std::vector<Rational>{q(5)}));
}

TEST(Puiseux, GeometricFamily) {
  EXPECT_EQ(geometric(q(2, 3), 0).atoms(), (std::vector<Rational>{q(1)}));
  auto g = geometric(q(3, 4), 2);
  EXPECT_EQ(g.atoms(), rats({{9, 16}, {3, 4}, {1, 1}}));
  EXPECT_EQ(g.scale(), q(16));
  EXPECT_EQ(g.label(), "geometric(3/4) at truncation level 2");
  for (auto bad : {q(1, 2), q(3, 2), q(0), q(1)}) {
    try {
      geometric(bad, 2);
      FAIL() << bad;
    } catch (const monoid_error& e) {
      EXPECT_EQ(e.kind(), error_kind::family_precondition);
    }
  }
}

TEST(Puiseux, GeometricChain) {
  auto c2 = geometric_chain(q(2, 3), 2);
  ASSERT_EQ(c2.links.size(), 2u);
  EXPECT_EQ(c2.links[0].x, q(2));
  EXPECT_EQ(c2.links[0].next, q(4, 3));
  EXPECT_EQ(c2.links[0].step, q(2, 3));
  auto c3 = geometric_chain(q(2, 3), 3);
  EXPECT_EQ(c3.links[2].x, q(8, 9));
  EXPECT_EQ(c3.links[1].step, q(4, 9));
  EXPECT_TRUE(c3.verified);
  auto c = geometric_chain(q(3, 5), 6);
  EXPECT_TRUE(c.verified);
  for (const auto& link : c.links) EXPECT_EQ(link.step, q(2) * power(q(3, 5), link.n));
}

TEST(Puiseux, Example33Construction) {
  auto m0 = example33(0);
  const auto& f0 = std::get<Example33Family>(m0.family());
  EXPECT_EQ(f0.primes.front(), 17);
  EXPECT_EQ(f0.a[0], q(1, 17));
  EXPECT_EQ(m0.generators().size(), 3u);
  EXPECT_TRUE(verify_atoms_by_valuation(m0).passed);

  auto m1 = example33(1);
  const auto& f = std::get<Example33Family>(m1.family());
  ASSERT_EQ(f.primes.size(), 6u);
  EXPECT_GT(f.primes[3], f.primes[2]);
  EXPECT_GT(f.primes[3], integer(120));
  Rational s = q(1, 17) + Rational::reduce(1, f.primes[3]);
  EXPECT_GT(f.primes[4], sub(q(4, 5), s).num());
  EXPECT_GT(f.primes[4], sub(q(6, 7), s).num());
  EXPECT_EQ(m1.numerical(), nullptr);

  auto report = verify_atoms_by_valuation(example33(2));
  EXPECT_EQ(report.generators.size(), 9u);
  EXPECT_TRUE(report.passed);
  EXPECT_THROW(verify_atoms_by_valuation(pm({q(1)})), monoid_error);
}

TEST(PuiseuxProperty, ScaleIsSound) {
  std::mt19937 rng(99);
  std::uniform_int_distribution<int> num(1, 12), den(1, 12), count(1, 3);
  for (int t = 0; t < 200; ++t) {
    std::vector<Rational> gens;
    for (int i = count(rng); i > 0; --i) gens.push_back(q(num(rng), den(rng)));
    auto m = pm(gens);
    // Oracle: integer membership of scale * q over the scaled input generators.
    std::vector<std::int64_t> scaled;
    for (const auto& g : m.generators()) scaled.push_back(static_cast<std::int64_t>((g * m.scale()).num()));
    auto in = oracle::members(scaled, 400);
    for (int n = 0; n <= 60; ++n)
      for (int d : {1, 2, 3, 4, 5, 6, 7, 12}) {
        Rational x = q(n, d);
        Rational y = x * m.scale();
        bool expect = y.is_integer() && y.num() <= 400 && in[static_cast<std::size_t>(y.num())];
        if (y.is_integer() && y.num() > 400) continue;
        ASSERT_EQ(m.contains(x), expect) << m.str() << " " << x;
      }
  }
}

TEST(PuiseuxProperty, RoutesAgree) {
  std::mt19937 rng(4242);
  std::uniform_int_distribution<int> num(1, 9), den(1, 9), count(1, 4);
  for (int t = 0; t < 80; ++t) {
    std::vector<Rational> gens;
    for (int i = count(rng); i > 0; --i) gens.push_back(q(num(rng), den(rng)));
    auto a = pm(gens, Route::apery);
    auto c = pm(gens, Route::congruence);
    ASSERT_EQ(a.atoms(), c.atoms()) << a.str();
    std::vector<Rational> sample;
    for (int n = 0; n <= 30; ++n)
      for (int d : {1, 2, 3, 6}) sample.push_back(q(n, d));
    for (const auto& x : sample) {
      ASSERT_EQ(a.contains(x), c.contains(x)) << a.str() << " " << x;
      if (!a.contains(x) || x > q(6)) continue;
      ASSERT_EQ(a.divisors(x), c.divisors(x)) << a.str() << " " << x;
      auto za = a.factorizations(x).items, zc = c.factorizations(x).items;
      std::sort(za.begin(), za.end());
      std::sort(zc.begin(), zc.end());
      ASSERT_EQ(za, zc) << a.str() << " " << x;
    }
    std::vector<Rational> members;
    for (const auto& x : sample)
      if (a.contains(x) && x <= q(4) && !x.is_zero()) members.push_back(x);
    for (std::size_t i = 0; i < members.size(); i += 3)
      for (std::size_t j = i; j < members.size(); j += 4) {
        std::vector<Rational> pair{members[i], members[j]};
        ASSERT_EQ(a.common_divisors(pair), c.common_divisors(pair)) << a.str();
        ASSERT_EQ(a.mcd(pair), c.mcd(pair)) << a.str();
      }
  }
}
