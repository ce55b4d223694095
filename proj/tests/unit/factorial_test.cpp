#include <gtest/gtest.h>

#include "lucaspf/error.hpp"
#include "lucaspf/factorial.hpp"
#include "oracles/oracles.hpp"

using namespace lucaspf;

TEST(Factorial, LegendreMatchesRepeatedDivision) {
  for (std::uint64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47}) {
    for (std::uint64_t k = 0; k <= 5000; k += (k < 300 ? 1 : 97)) {
      ASSERT_EQ(legendre_valuation(p, k), oracle::valuation_by_division(p, k)) << p << " " << k;
    }
  }
  EXPECT_EQ(legendre_valuation(2, 10), 8U);
  EXPECT_EQ(legendre_valuation(5, 100), 24U);
  try {
    (void)legendre_valuation(4, 10);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::not_prime);
  }
}

TEST(Factorial, FastRejectReasons) {
  EXPECT_EQ(pf_fast_reject(mpz_class(15)), RejectReason::odd);
  // nu_2 = 1 allows at most 3!^1 = 6.
  EXPECT_EQ(pf_fast_reject(mpz_class(2 * 7)), RejectReason::size);
  EXPECT_FALSE(pf_fast_reject(mpz_class(6)).has_value());
  EXPECT_FALSE(pf_fast_reject(mpz_class(39916800)).has_value());
}

TEST(Factorial, FastRejectNeverRejectsMembers) {
  const auto member = oracle::pf_table(1'000'000);
  for (std::uint32_t n = 2; n <= 1'000'000; ++n) {
    if (member[n]) ASSERT_FALSE(pf_fast_reject(mpz_class(n)).has_value()) << n;
  }
}

TEST(Factorial, MembershipExamples) {
  EXPECT_TRUE(pf_member(mpz_class(144)));
  EXPECT_TRUE(pf_member(mpz_class(1)));
  EXPECT_TRUE(pf_member(mpz_class(-24)));
  EXPECT_FALSE(pf_member(mpz_class(10)));
  EXPECT_FALSE(pf_member(mpz_class(3)));
  try {
    (void)pf_member(mpz_class(0));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::zero_input);
  }
}

TEST(Factorial, MembershipMatchesOracleOnSmallRange) {
  const auto member = oracle::pf_table(200'000);
  for (std::uint32_t n = 2; n <= 200'000; ++n) {
    ASSERT_EQ(pf_member(mpz_class(n)), member[n] != 0) << n;
  }
}

TEST(Factorial, OddNumbersAreNeverMembers) {
  for (std::uint32_t n = 3; n <= 20001; n += 2) ASSERT_FALSE(pf_member(mpz_class(n)));
}

TEST(Factorial, DecompositionsMatchBruteForce) {
  for (const char* text : {"144", "39916800", "1036800", "24883200", "288", "-720"}) {
    const mpz_class n(text);
    const auto expected = oracle::pf_all_decompositions(n);
    const auto got = pf_decompose(n, 1000);
    ASSERT_EQ(got.size(), expected.size()) << text;
    for (std::size_t i = 0; i < got.size(); ++i) {
      EXPECT_EQ(got[i].args, expected[i]) << text;
      EXPECT_EQ(got[i].value(), n);
    }
  }
  const auto w144 = pf_decompose(mpz_class(144), 10);
  ASSERT_EQ(w144.size(), 2U);
  EXPECT_EQ(w144[0].to_string(), "2!*2!*3!*3!");
  EXPECT_EQ(w144[1].to_string(), "3!*4!");
  EXPECT_EQ(pf_decompose(mpz_class(144), 1).size(), 1U);
}

TEST(Factorial, ElevenFactorialHasSingleFactorWitness) {
  const auto ws = pf_decompose(mpz_class(39916800), 100);
  bool found = false;
  for (const auto& w : ws) found = found || w.args == std::vector<std::uint32_t>{11};
  EXPECT_TRUE(found);
}

TEST(Factorial, LargeMembersAreFound) {
  const FactorialTable t(60);
  const mpz_class n = t.factorial(60) * t.factorial(37) * t.factorial(5);
  EXPECT_TRUE(pf_member(n));
  EXPECT_FALSE(pf_member(n * 7));
  EXPECT_FALSE(pf_member(n + 2));
}
