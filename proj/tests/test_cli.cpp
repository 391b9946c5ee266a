#include <gtest/gtest.h>

#include <sstream>

#include "pmonoid/cli.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = pmonoid::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, FactorizeSetOverNaturals) {
  auto r = run({"factorize-set", "--monoid", "1", "--restricted", "{0,1,2,3}"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "{0, 1} + {0, 2}\n{0, 1} + {0, 1} + {0, 1}\n");
  auto l = run({"lengths-set", "--monoid", "1", "--restricted", "{0,1,2,3}"});
  EXPECT_EQ(l.out, "{2, 3}\n");
}

TEST(Cli, ElementVerbs) {
  EXPECT_EQ(run({"mcd", "--monoid", "2,3", "4", "6"}).out, "4\n");
  EXPECT_EQ(run({"member", "--family", "geometric:2/3:3", "4/3"}).out, "true\n");
  EXPECT_EQ(run({"atoms", "--monoid", "<1/2, 1/3, 5/6>"}).out, "<1/3, 1/2>\n");
  EXPECT_EQ(run({"divisors", "--monoid", "1/2,1/3", "5/6"}).out, "0, 1/3, 1/2, 5/6\n");
  EXPECT_EQ(run({"lengths", "--monoid", "3,5,7", "10"}).out, "{2}\n");
  EXPECT_EQ(run({"factorize", "--monoid", "2,3", "6"}).out, "3 + 3\n2 + 2 + 2\n");
}

TEST(Cli, SetVerbs) {
  EXPECT_EQ(run({"minkowski", "{0,3}", "{0,1,5}"}).out, "{0, 1, 3, 4, 5, 8}\n");
  EXPECT_EQ(run({"is-atom", "--monoid", "1", "--restricted", "{0,1}"}).out, "true\n");
  EXPECT_EQ(run({"is-atom", "--monoid", "1", "--restricted", "{0,1,2}"}).out, "false ({0, 1} + {0, 1})\n");
  EXPECT_EQ(run({"divisor-closure", "--monoid", "2,3", "{4,6}"}).out, "0, 2, 3, 4, 6\n");
  auto d = run({"decompose", "--monoid", "1", "{0,3}"});
  EXPECT_EQ(d.out, "{0} + {0, 3} (trivial)\n");
}

TEST(Cli, JsonGolden) {
  auto r = run({"factorize-set", "--monoid", "1", "--restricted", "--json", "{0,1,2,3}"});
  ASSERT_EQ(r.code, 0);
  auto doc = pmonoid::json::parse(r.out);
  const char* golden = R"json({
    "command": "factorize-set",
    "partial": false,
    "monoid": "P_fin,0(<1>)",
    "set": ["0", "1", "2", "3"],
    "factorizations": [[["0", "1"], ["0", "2"]], [["0", "1"], ["0", "1"], ["0", "1"]]],
    "lengths": [2, 3]
  })json";
  EXPECT_EQ(doc, pmonoid::json::parse(golden));
  EXPECT_EQ(r.out, run({"factorize-set", "--monoid", "1", "--restricted", "--json", "{0,1,2,3}"}).out);
}

TEST(Cli, PartialFlag) {
  auto r = run({"factorize", "--monoid", "2,3", "--max-length", "4", "--json", "12"});
  ASSERT_EQ(r.code, 0);
  EXPECT_TRUE(pmonoid::json::parse(r.out)["partial"].get<bool>());
  auto t = run({"factorize", "--monoid", "2,3", "--max-length", "4", "12"});
  EXPECT_NE(t.out.find("partial"), std::string::npos);
}

TEST(Cli, FamilyAndVerify) {
  auto f = run({"family", "example33", "--level", "1", "--json"});
  ASSERT_EQ(f.code, 0);
  auto doc = pmonoid::json::parse(f.out);
  EXPECT_EQ(doc["label"], "example33 at truncation level 1");
  EXPECT_EQ(doc["monoid"]["family"]["primes"][0], 17);
  auto g = run({"family", "geometric:2/3:3"});
  EXPECT_EQ(g.out, "geometric(2/3) at truncation level 3\n<8/27, 4/9, 2/3, 1>\n");

  auto v = run({"verify", "example33", "1", "--json"});
  EXPECT_EQ(v.code, 0);
  EXPECT_TRUE(pmonoid::json::parse(v.out).contains("certificates"));
  EXPECT_EQ(run({"verify", "accp", "--family", "geometric:2/3:5", "2", "4"}).code, 0);
  EXPECT_EQ(run({"verify", "bfm", "--monoid", "1", "--restricted", "{0,1,2,3}"}).code, 0);
  EXPECT_EQ(run({"verify", "ffm", "--monoid", "2,3", "6", "7"}).code, 0);
  EXPECT_EQ(run({"verify", "mcd", "--monoid", "2,3", "4", "6"}).code, 0);
  EXPECT_EQ(run({"verify", "mcd", "2"}).code, 0);
  EXPECT_EQ(run({"verify", "atomicity", "--monoid", "2,3", "2", "6"}).code, 0);
}

TEST(Cli, ExitCodes) {
  auto domain = run({"geometric", "--monoid", "1"});
  EXPECT_EQ(domain.code, 2);
  auto family = run({"member", "--family", "geometric:1/2:3", "1"});
  EXPECT_EQ(family.code, 1);
  EXPECT_NE(family.err.find("family-precondition"), std::string::npos);
  auto missing = run({"divisors", "--monoid", "2,3", "1"});
  EXPECT_EQ(missing.code, 1);
  EXPECT_NE(missing.err.find("not-a-member"), std::string::npos);
  auto unknown = run({"frobnicate"});
  EXPECT_EQ(unknown.code, 2);
  EXPECT_NE(unknown.err.find("Usage"), std::string::npos);
  EXPECT_EQ(run({"member", "--monoid", "2,3", "--bogus", "2"}).code, 2);
  EXPECT_EQ(run({"member", "2"}).code, 2);
  EXPECT_EQ(run({"verify", "nonsense"}).code, 2);
}
