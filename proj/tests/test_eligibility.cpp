#include <gtest/gtest.h>

#include <algorithm>

#include "tsym/commands.hpp"
#include "tsym/eligibility.hpp"

using namespace tsym;

namespace {

std::vector<std::string> violations_of(int ell, long a, long b, long c) {
  try {
    check_triple(ell, a, b, c);
  } catch (const IneligibleTriple& e) {
    return e.violations();
  }
  return {};
}

bool contains(const std::vector<std::string>& v, const std::string& s) {
  return std::find(v.begin(), v.end(), s) != v.end();
}

}  // namespace

TEST(Eligibility, CubicTripleIsNormalized) {
  const auto ctx = check_triple(3, -17, -593, -53);
  EXPECT_EQ(ctx.p1, -17);
  EXPECT_EQ(ctx.p3, -53);
  EXPECT_EQ(ctx.q3(), 53);
  const auto pos = check_triple(3, 17, 593, 53);
  EXPECT_EQ(pos.p1, ctx.p1);
  EXPECT_EQ(pos.p2, ctx.p2);
  EXPECT_EQ(pos.p3, ctx.p3);
  const auto again = check_triple(3, pos.p1, pos.p2, pos.p3);
  EXPECT_EQ(again.p2, pos.p2);
  EXPECT_TRUE(std::all_of(ctx.checks.begin(), ctx.checks.end(), [](const ConditionCheck& c) { return c.holds; }));
}

TEST(Eligibility, SplitPrimeIsRejected) {
  const auto v = violations_of(3, -17, -593, -19);
  EXPECT_TRUE(contains(v, "NotInert(-19)"));
  EXPECT_EQ(v.size(), 1u);
  try {
    check_triple(3, -17, -593, -19);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::IneligibleTriple);
  }
}

TEST(Eligibility, AllViolationsAreReported) {
  const auto v = violations_of(3, 11, -19, 15);
  EXPECT_TRUE(contains(v, "NormNotOneMod9(11)"));
  EXPECT_TRUE(contains(v, "NotInert(-19)"));
  EXPECT_TRUE(contains(v, "NotPrime(15)"));
}

TEST(Eligibility, RepeatedPrime) {
  EXPECT_TRUE(contains(violations_of(3, -17, 17, -53), "NotDistinct(-17,-17)"));
  EXPECT_TRUE(contains(violations_of(2, 13, 13, 17), "NotDistinct(13,13)"));
}

TEST(Eligibility, QuadraticTriples) {
  const auto ctx = check_triple(2, 13, 17, 101);
  EXPECT_EQ(ctx.p3, 101);
  EXPECT_TRUE(contains(violations_of(2, 13, 17, 7), "NotOneMod4(7)"));
  EXPECT_TRUE(contains(violations_of(2, 13, 17, -13), "NotPrime(-13)"));
  const auto v = violations_of(2, 5, 13, 17);
  EXPECT_TRUE(contains(v, "NotQuadraticResidue(5|13)"));
  EXPECT_TRUE(contains(v, "NotQuadraticResidue(13|5)"));
}

TEST(Eligibility, PairChecks) {
  const auto pair = check_pair(3, 17, 593);
  EXPECT_EQ(pair.p1, -17);
  EXPECT_EQ(pair.p2, -593);
  EXPECT_THROW(check_pair(2, 5, 13), IneligibleTriple);
}

TEST(Eligibility, BadEll) {
  try {
    check_triple(5, 13, 17, 101);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InvalidArgument);
  }
}

TEST(Eligibility, VerdictIsInvariantUnderPermutation) {
  for (int ell : {2, 3}) {
    const auto primes = candidate_primes(ell, ell == 2 ? 200 : 1000);
    for (std::size_t i = 0; i + 2 < primes.size(); i += 2) {
      for (std::size_t j = i + 1; j < primes.size(); j += 3) {
        for (std::size_t k = j + 1; k < primes.size(); k += 5) {
          std::array<BigInt, 3> t = {primes[i], primes[j], primes[k]};
          const bool base = violations_of(ell, t[0].get_si(), t[1].get_si(), t[2].get_si()).empty();
          for (const auto& perm : kPermutations) {
            const bool other = violations_of(ell, t[perm.index[0]].get_si(), t[perm.index[1]].get_si(),
                                             t[perm.index[2]].get_si())
                                   .empty();
            EXPECT_EQ(base, other);
          }
        }
      }
    }
  }
}

TEST(Eligibility, EveryListTripleIsEligible) {
  const auto list = candidate_primes(3, 1000);
  for (const auto& a : list) {
    for (const auto& b : list) {
      if (a == b) continue;
      EXPECT_NO_THROW(check_pair(3, a, b));
    }
  }
}
