#include <gtest/gtest.h>

#include <complex>
#include <random>

#include "oracles.hpp"
#include "tsym/eisenstein.hpp"

using namespace tsym;

namespace {

std::complex<long double> as_complex(const EisensteinInt& e) {
  const std::complex<long double> w(-0.5L, std::sqrt(3.0L) / 2);
  return static_cast<long double>(e.a.get_d()) + static_cast<long double>(e.b.get_d()) * w;
}

}  // namespace

TEST(Eisenstein, OmegaSatisfiesItsMinimalPolynomial) {
  const auto w = EisensteinInt::omega();
  EXPECT_EQ(w * w + w + EisensteinInt{1}, EisensteinInt{0});
  EXPECT_EQ(w * w * w, EisensteinInt{1});
  EXPECT_EQ(w * w, EisensteinInt::omega_squared());
  EXPECT_EQ(EisensteinInt::sqrt_minus3() * EisensteinInt::sqrt_minus3(), EisensteinInt{-3});
}

TEST(Eisenstein, ProductMatchesComplexEmbedding) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> d(-1000, 1000);
  for (int i = 0; i < 2000; ++i) {
    EisensteinInt x{d(rng), d(rng)}, y{d(rng), d(rng)};
    const auto got = as_complex(x * y);
    const auto want = as_complex(x) * as_complex(y);
    EXPECT_NEAR(static_cast<double>(got.real()), static_cast<double>(want.real()), 1e-6);
    EXPECT_NEAR(static_cast<double>(got.imag()), static_cast<double>(want.imag()), 1e-6);
  }
}

TEST(Eisenstein, ConjugateTimesSelfIsNorm) {
  const EisensteinInt e{5, 3};
  EXPECT_EQ(eis_norm(e), 19);
  EXPECT_EQ(e * e.conj(), EisensteinInt{19});
  EXPECT_EQ(e.conj().conj(), e);
}

TEST(Eisenstein, NormIsMultiplicative) {
  std::mt19937_64 rng(20240601);
  std::uniform_int_distribution<long> d(-1000000, 1000000);
  for (int i = 0; i < 10000; ++i) {
    EisensteinInt x{d(rng), d(rng)}, y{d(rng), d(rng)};
    ASSERT_EQ(eis_norm(x * y), eis_norm(x) * eis_norm(y)) << x << " " << y;
  }
}

TEST(Eisenstein, SixDistinctUnits) {
  const auto units = eis_units();
  for (std::size_t i = 0; i < units.size(); ++i) {
    EXPECT_EQ(eis_norm(units[i]), 1);
    for (std::size_t j = i + 1; j < units.size(); ++j) EXPECT_NE(units[i], units[j]);
  }
}

TEST(Eisenstein, ExactDivision) {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<long> d(-500, 500);
  for (int i = 0; i < 1000; ++i) {
    EisensteinInt x{d(rng), d(rng)}, y{d(rng), d(rng)};
    if (y == EisensteinInt{0}) continue;
    auto q = eis_exact_div(x * y, y);
    ASSERT_TRUE(q.has_value());
    EXPECT_EQ(*q, x);
    EXPECT_TRUE(eis_divides(y, x * y));
  }
  EXPECT_FALSE(eis_exact_div(EisensteinInt{1}, EisensteinInt{2}).has_value());
  try {
    eis_exact_div(EisensteinInt{1}, EisensteinInt{0});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DivisorZero);
  }
}

TEST(Eisenstein, NormalizesSeventeen) {
  const auto np = normalize_prime_l3(17);
  EXPECT_EQ(np.p, -17);
  EXPECT_EQ(np.q, 17);
  EXPECT_TRUE(is_one_mod_3sqrt_minus3(np.element()));
  EXPECT_EQ(normalize_prime_l3(53).p, -53);
}

TEST(Eisenstein, ExactlyOneAssociateIsNormalized) {
  for (long q = 3; q < 5000; ++q) {
    if (!oracle::is_prime_naive(q) || q % 9 != 8) continue;
    int hits = 0;
    for (const auto& u : eis_units()) hits += is_one_mod_3sqrt_minus3(u * EisensteinInt{q});
    EXPECT_EQ(hits, 1) << q;
    EXPECT_EQ(normalize_prime_l3(q).p, -q);
  }
}

TEST(Eisenstein, NormalizationErrors) {
  auto code_of = [](long q) {
    try {
      normalize_prime_l3(q);
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::InternalInvariantViolation;
  };
  EXPECT_EQ(code_of(15), ErrorCode::NotPrime);
  EXPECT_EQ(code_of(19), ErrorCode::NotInert);
  EXPECT_EQ(code_of(11), ErrorCode::NormNotOneMod9);
  EXPECT_EQ(code_of(-17), ErrorCode::NotPrime);
}

TEST(Eisenstein, PrimalityAgreesWithTrialDivision) {
  for (long n = -5; n < 20000; ++n) ASSERT_EQ(is_prime(n), oracle::is_prime_naive(n)) << n;
  EXPECT_TRUE(is_prime(BigInt("2305843009213693951")));  // 2^61 - 1
  EXPECT_FALSE(is_prime(BigInt("3215031751")));          // strong pseudoprime to 2, 3, 5, 7
}

TEST(Eisenstein, PrimalityRejectsHugeInputs) {
  try {
    is_prime(BigInt("4000000000000000000"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::PrimeOutOfRange);
  }
}

TEST(Eisenstein, PrimeListMatchesNaiveEnumeration) {
  std::vector<BigInt> expected;
  for (long q = 2; q <= 1000; ++q) {
    if (oracle::is_prime_naive(q) && q % 9 == 8) expected.push_back(-q);
  }
  const auto list = enumerate_prime_list(1000);
  ASSERT_EQ(list.size(), 29u);
  ASSERT_EQ(list.size(), expected.size());
  for (std::size_t i = 0; i < list.size(); ++i) EXPECT_EQ(list[i].p, expected[i]);
  EXPECT_EQ(list.front().p, -17);
  EXPECT_EQ(list.back().p, -971);
  EXPECT_TRUE(enumerate_prime_list(16).empty());
}
