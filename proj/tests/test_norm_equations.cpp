#include <gtest/gtest.h>

#include <set>

#include "tsym/commands.hpp"
#include "tsym/norm_equations.hpp"

using namespace tsym;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::InternalInvariantViolation;
}

}  // namespace

TEST(NormEquations, CubicFirstSolution) {
  const auto sol = solve_l3_assumption_a(-17, -593, {});
  EXPECT_EQ(sol, (NormEquationSolution{3, 9, 2, -1}));
  EXPECT_TRUE(verify_solution(sol, -17, -593));
  // Positive inputs are normalized first.
  EXPECT_EQ(solve_l3_assumption_a(17, 593, {}), sol);
}

TEST(NormEquations, QuadraticRegressionValues) {
  EXPECT_EQ(solve_l2(13, 17, {50}), (NormEquationSolution{2, -15, 4, 1}));
  EXPECT_EQ(solve_l2(5, 29, {50}), (NormEquationSolution{2, 7, 2, 1}));
}

TEST(NormEquations, SolverIsDeterministic) {
  for (const auto& [a, b] : std::vector<std::pair<long, long>>{{-17, -53}, {-107, -449}, {-593, -17}}) {
    EXPECT_EQ(solve(3, a, b, {}), solve(3, a, b, {}));
  }
  EXPECT_EQ(solve(2, 13, 17, {}), solve(2, 13, 17, {}));
}

TEST(NormEquations, EnumerationIsOrderedVerifiedAndDistinct) {
  for (int ell : {2, 3}) {
    const BigInt p1 = ell == 2 ? 13 : -17;
    const BigInt p2 = ell == 2 ? 17 : -593;
    const auto sols = enumerate_solutions(ell, p1, p2, {60}, 50);
    ASSERT_GE(sols.size(), 2u);
    EXPECT_EQ(sols.front(), solve(ell, p1, p2, {60}));
    std::set<std::tuple<BigInt, BigInt, BigInt>> seen;
    for (const auto& s : sols) {
      EXPECT_TRUE(verify_solution(s, p1, p2)) << s;
      EXPECT_TRUE(seen.emplace(s.x, s.y, s.w).second) << s;
    }
  }
}

TEST(NormEquations, EnumerationRespectsLimit) {
  EXPECT_TRUE(enumerate_solutions(3, -17, -593, {}, 0).empty());
  EXPECT_EQ(enumerate_solutions(3, -17, -593, {}, 1).size(), 1u);
}

TEST(NormEquations, VerifyRejectsBadCandidates) {
  EXPECT_FALSE(verify_solution({3, 9, 2, 1}, -17, -593));
  EXPECT_FALSE(verify_solution({2, 15, 4, 1}, 13, 17));       // x - y = 3 mod 4
  EXPECT_FALSE(verify_solution({2, -15, 4, 1}, 13, 19));
  EXPECT_FALSE(verify_solution({4, 1, 1, 1}, 13, 17));
  EXPECT_TRUE(verify_solution({2, -15, 4, 1}, 13, 17));
}

TEST(NormEquations, ScaledSolutionsAreKeptButNeverFirst) {
  EXPECT_TRUE(verify_solution({3, 18, 4, -2}, -17, -593));
  const auto all = enumerate_solutions(3, -17, -593, {20}, 1000);
  EXPECT_NE(std::find(all.begin(), all.end(), NormEquationSolution{3, 18, 4, -2}), all.end());
  for (const auto& [a, b] : std::vector<std::pair<long, long>>{{-17, -593}, {-17, -557}, {-557, -17}, {-107, -449}}) {
    const auto s = solve(3, a, b, {});
    EXPECT_EQ(gcd(s.x, s.y), 1) << a << "," << b;
  }
}

TEST(NormEquations, TableReferenceSolutionsAreEnumerated) {
  // Reference alphas that satisfy their norm equation appear in the scan.
  std::size_t found = 0;
  for (const auto& e : table2_entries()) {
    auto sol = complete_l3_solution(e.ref_x, e.ref_y, e.p1, e.p2);
    if (!sol) continue;
    const auto all = enumerate_solutions(3, e.p1, e.p2, {100}, 100000);
    EXPECT_NE(std::find(all.begin(), all.end(), *sol), all.end()) << e.p1 << " " << e.p2;
    ++found;
  }
  EXPECT_EQ(found, 16u);
}

TEST(NormEquations, Errors) {
  EXPECT_EQ(code_of([] { solve_l2(13, 17, {1}); }), ErrorCode::NotFoundWithinBound);
  EXPECT_EQ(code_of([] { solve_l3_assumption_a(-17, -593, {5}); }), ErrorCode::AssumptionANotWitnessed);
  EXPECT_EQ(code_of([] { solve(3, -17, -17, {}); }), ErrorCode::InputsEqual);
  EXPECT_EQ(code_of([] { solve(3, -17, -19, {}); }), ErrorCode::IneligibleTriple);
  EXPECT_EQ(code_of([] { solve(3, -17, -593, {100, true}); }), ErrorCode::InvalidArgument);
  EXPECT_EQ(code_of([] { solve(4, 13, 17, {}); }), ErrorCode::InvalidArgument);
}
