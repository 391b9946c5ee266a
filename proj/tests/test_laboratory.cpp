#include <gtest/gtest.h>

#include "pmonoid/laboratory.hpp"

using namespace pmonoid;

namespace {

Rational q(long long n, long long d = 1) { return Rational::reduce(n, d); }

FinSet ints(std::initializer_list<int> xs) {
  std::vector<Rational> v;
  for (int x : xs) v.push_back(q(x));
  return FinSet::from(v);
}

PuiseuxMonoid pm(std::vector<Rational> gens) { return PuiseuxMonoid::from_generators(std::move(gens)); }

}  // namespace

TEST(Laboratory, AccpFinitelyGenerated) {
  auto r = accp_chain_search(pm({q(2), q(3)}), q(6), 5);
  EXPECT_TRUE(r.passed);
  EXPECT_TRUE(r.results["stabilizes"].get<bool>());
  EXPECT_EQ(r.results["longest_proper_chain"].get<int>(), 3);
  auto zero = accp_chain_search(pm({q(2), q(3)}), q(0), 3);
  EXPECT_EQ(zero.results["longest_proper_chain"].get<int>(), 0);
  EXPECT_THROW(accp_chain_search(pm({q(2), q(3)}), q(1), 3), monoid_error);
}

TEST(Laboratory, AccpGeometricChain) {
  auto r = accp_chain_search(geometric(q(2, 3), 5), q(2), 4);
  EXPECT_TRUE(r.passed);
  EXPECT_FALSE(r.results["stabilizes"].get<bool>());
  EXPECT_EQ(r.results["chain"], (json{"2", "4/3", "8/9", "16/27"}));
  EXPECT_EQ(r.certificates.size(), 3u);

  PowerMonoid p(geometric(q(2, 3), 5), false);
  auto lifted = accp_chain_search(p, FinSet{q(2)}, 4);
  EXPECT_FALSE(lifted.results["stabilizes"].get<bool>());
  EXPECT_TRUE(lifted.certificates[0]["singleton_lift"].get<bool>());
}

TEST(Laboratory, AccpPowerMonoid) {
  PowerMonoid p(pm({q(1)}), true);
  auto r = accp_chain_search(p, ints({0, 1, 2, 3}), 4);
  EXPECT_TRUE(r.passed);
  EXPECT_EQ(r.results["longest_proper_chain"].get<int>(), 3);
}

TEST(Laboratory, BoundedFactorization) {
  PowerMonoid p(pm({q(1)}), true);
  auto r = bfm_check(p, {ints({0, 1, 2, 3})}, 10);
  EXPECT_TRUE(r.passed);
  EXPECT_EQ(r.results[0]["max_length"].get<int>(), 3);
  EXPECT_EQ(bfm_check(pm({q(2), q(3)}), {q(6)}, 10).results[0]["max_length"].get<int>(), 3);
  EXPECT_EQ(bfm_check(pm({q(2), q(3)}), {q(3)}, 10).results[0]["max_length"].get<int>(), 1);
  auto capped = bfm_check(pm({q(2), q(3)}), {q(12)}, 4);
  EXPECT_TRUE(capped.partial);
  EXPECT_FALSE(capped.passed);
}

TEST(Laboratory, FiniteFactorization) {
  PowerMonoid p(pm({q(1)}), true);
  auto r = ffm_check(p, {ints({0, 1, 2, 3}), ints({0, 1, 2, 3, 4, 5})});
  EXPECT_TRUE(r.passed);
  EXPECT_EQ(r.results[0]["factorizations"].get<int>(), 2);
  EXPECT_GE(r.results[1]["per_length"]["3"].get<int>(), 2);
  EXPECT_EQ(ffm_check(pm({q(2), q(3)}), {q(2)}).results[0]["factorizations"].get<int>(), 1);
}

TEST(Laboratory, McdProbe) {
  auto m = pm({q(2), q(3)});
  EXPECT_EQ(mcd_probe(m, q(4), q(6)).results["mcds"], (json{"4"}));
  EXPECT_EQ(mcd_probe(m, q(5), q(5)).results["mcds"], (json{"5"}));
  EXPECT_EQ(mcd_probe(m, q(2), q(3)).results["mcds"], (json{"0"}));
  auto e = mcd_probe(example33(1), q(4, 5), q(6, 7));
  EXPECT_TRUE(e.passed);
  EXPECT_TRUE(e.results.contains("witness"));
}

TEST(Laboratory, Non2McdWitness) {
  auto r = non_2mcd_witness({0, 1});
  EXPECT_TRUE(r.passed);
  auto a1 = std::get<Example33Family>(example33(1).family()).a[1];
  EXPECT_EQ(r.certificates[0]["extensions"][0]["extended"].get<std::string>(), (q(1, 17) + a1).str());
  auto deep = non_2mcd_witness({0, 1, 2});
  EXPECT_TRUE(deep.passed);
  EXPECT_EQ(deep.certificates.back()["chain"].size(), 3u);
  EXPECT_THROW(non_2mcd_witness({1, 0}), monoid_error);
}

TEST(Laboratory, AtomicitySweep) {
  auto r = atomicity_sweep(pm({q(2), q(3)}), 3, q(8));
  EXPECT_TRUE(r.passed);
  EXPECT_EQ(r.results["failures"].get<int>(), 0);
  EXPECT_TRUE(atomicity_sweep(pm({q(1)}), 2, q(6)).passed);
  PowerMonoid p(pm({q(1)}), true);
  auto zs = p.factorizations(ints({0}));
  ASSERT_EQ(zs.items.size(), 1u);
  EXPECT_EQ(zs.items[0].length(), 0u);
}

TEST(Laboratory, Example33Check) {
  auto r = example33_check(1);
  EXPECT_TRUE(r.passed) << r.text();
  EXPECT_EQ(r.results["primes"][0].get<int>(), 17);
  EXPECT_TRUE(r.to_json().contains("certificates"));
}
