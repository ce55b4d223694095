#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "lucaspf/bounds.hpp"
#include "lucaspf/lucas.hpp"
#include "lucaspf/cyclotomic.hpp"
#include "lucaspf/search.hpp"
#include "oracles/oracles.hpp"

using namespace lucaspf;

namespace {

// sum of log p / (p - 1) over primes p <= m with p = +-1 (mod n).
double exact_logp_sum(const std::vector<char>& prime, std::uint64_t m, std::uint64_t n) {
  double sum = 0;
  for (std::uint64_t p = 2; p <= m; ++p) {
    if (!prime[p]) continue;
    const std::uint64_t r = p % n;
    if (r == 1 || r == n - 1) sum += std::log(static_cast<double>(p)) / static_cast<double>(p - 1);
  }
  return sum;
}

}  // namespace

TEST(Bounds, RosserSchoenfeldExamples) {
  const Interval b = phi_lower_rs(1'000'000, 64);
  EXPECT_NEAR(b.midpoint(), 1.77e5, 0.01e5);
  EXPECT_LE(phi_lower_rs(150, 64).upper(), 40.0);
  EXPECT_GT(phi_lower_rs(3, 64).lower(), 0.0);
  EXPECT_LE(phi_lower_rs(3, 64).upper(), 2.0);
  EXPECT_THROW((void)phi_lower_rs(2), Error);
}

TEST(Bounds, OmegaProductExamples) {
  EXPECT_TRUE(oracle::encloses(phi_lower_omega(105, 3, Parity::odd, 64), 48.0));
  EXPECT_TRUE(oracle::encloses(phi_lower_omega(2, 1, Parity::even, 64), 1.0));
  const double prod = (1.0 / 2) * (2.0 / 3) * (4.0 / 5) * (6.0 / 7) * (10.0 / 11) * (12.0 / 13) *
                      (16.0 / 17) * (18.0 / 19);
  EXPECT_NEAR(phi_lower_omega(9699690, 8, Parity::even, 128).midpoint(), 9699690 * prod, 1e-6);
}

TEST(Bounds, PhiAndOmegaBoundsHoldUpToOneMillion) {
  const auto phi = oracle::totients(1'000'000);
  const auto w = oracle::distinct_prime_counts(1'000'000);
  for (std::uint64_t n = 3; n <= 1'000'000; ++n) {
    const double exact = static_cast<double>(phi[n]);
    ASSERT_LE(phi_lower_rs(n, 64).lower(), exact) << n;
    ASSERT_LE(phi_lower_omega(n, w[n], parity_of(n), 64).lower(), exact) << n;
    if (n >= 26) ASSERT_LE(w[n], omega_upper(n)) << n;
  }
}

TEST(Bounds, OmegaUpperExamples) {
  EXPECT_EQ(omega_upper(18'000'000), 8);
  EXPECT_EQ(omega_upper(3'900'000), 7);
  EXPECT_GE(omega_upper(1000), 2);
  EXPECT_THROW((void)omega_upper(25), Error);
}

TEST(Bounds, BrunTitchmarsh) {
  EXPECT_TRUE(oracle::encloses(pi_ap_upper(450, 150, 128), 2.0 * 450 / (40 * std::log(3.0))));
  EXPECT_THROW((void)pi_ap_upper(150, 150), Error);
  const auto prime = oracle::prime_flags(10'000'000);
  for (std::uint64_t n : {150, 151, 210, 331, 500, 997, 1200, 2000}) {
    std::uint64_t count = 0;
    std::uint64_t next_check = 2 * n;
    for (std::uint64_t x = 2; x <= 10'000'000; ++x) {
      if (prime[x] && (x % n == 1 || x % n == n - 1)) ++count;
      if (x == next_check) {
        ASSERT_LE(static_cast<double>(count), 2 * pi_ap_upper(static_cast<double>(x), n).upper())
            << n << " " << x;
        next_check = next_check * 3 / 2;
      }
    }
  }
}

TEST(Bounds, LogpSumDominatesSievedSum) {
  const auto prime = oracle::prime_flags(4'000'000);
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<std::uint64_t> pick(150, 2000);
  for (int i = 0; i < 30; ++i) {
    const std::uint64_t n = pick(rng);
    for (std::uint64_t m : {3 * n, n * n, 10 * n * n}) {
      if (m > 4'000'000) continue;
      const double exact = exact_logp_sum(prime, m, n);
      ASSERT_LE(exact, logp_sum_upper(m, n, parity_of(n), 64).upper()) << n << " " << m;
      ASSERT_LE(exact, logp_sum_upper(m, n, Parity::both, 64).upper()) << n << " " << m;
    }
  }
  EXPECT_LE(exact_logp_sum(oracle::prime_flags(1'000'000), 1'000'000, 151),
            logp_sum_upper(1'000'000, 151, Parity::odd, 64).upper());
}

TEST(Bounds, LogpSumSeamIsConsistent) {
  const std::uint64_t n = 200;
  const double at = logp_sum_upper(n * n, n, Parity::even, 64).midpoint();
  const double below = logp_sum_upper(n * n - 1, n, Parity::even, 64).midpoint();
  EXPECT_TRUE(std::isfinite(at));
  EXPECT_TRUE(std::isfinite(below));
}

TEST(Bounds, VoutierBranchSelection) {
  EXPECT_EQ(voutier_branch(3), VoutierBranch::ab1);
  EXPECT_EQ(voutier_branch(5358), VoutierBranch::ab1);
  EXPECT_EQ(voutier_branch(6001), VoutierBranch::ab2);
  // Even m is compared at m/2.
  EXPECT_EQ(voutier_branch(6000), VoutierBranch::ab1);
  EXPECT_EQ(voutier_branch(12000), VoutierBranch::ab2);
}

TEST(Bounds, VoutierLowerBoundIsBelowExactValue) {
  for (auto [r, s] : oracle::random_params(20, 40, 37, true)) {
    const LucasParams p = validate_params(r, s);
    const Interval la = alpha_log(p, 128);
    const Interval log_gap = log_abs(p.delta(), 128) / 2;
    for (std::uint64_t m = 3; m <= 5000; m += (m < 200 ? 1 : 61)) {
      const Interval exact = log_abs(u_at(p, m).value, 128) + log_gap;
      ASSERT_LE(voutier_pair_lower(la, m).lower(), exact.upper()) << r << "," << s << " m=" << m;
    }
  }
  const LucasParams p = validate_params(1, -3);
  const Interval exact = log_abs(u_at(p, 4).value, 128) + log_abs(p.delta(), 128) / 2;
  EXPECT_LE(voutier_pair_lower(alpha_log(p, 128), 4).lower(), exact.upper());
}

TEST(Bounds, LemmaTables) {
  const double l5 = std::log(1e5);
  EXPECT_TRUE(oracle::encloses(g_omega(100000, 6, 128), 73 * (11 * l5 * l5 - 87.5 * l5 + 194.1) +
                                               0.0027 * 1e5 + 3.1));
  const double l4 = std::log(1e4);
  EXPECT_TRUE(oracle::encloses(g_omega(10000, 2, 128), 73 * l4 * l4));
  EXPECT_THROW((void)g_omega(100000, 7), Error);
  const double lh = std::log(5000.0);
  EXPECT_TRUE(oracle::encloses(h_omega(10000, 3, 128), 73 * (2 * lh * lh - 6.8 * lh + 11.6)));
  EXPECT_TRUE(std::isfinite(h_omega(200000, 7, 128).midpoint()));
  EXPECT_THROW((void)h_omega(10000, 8), Error);
}

TEST(Bounds, LemmaVariantsNeedMatchingParity) {
  const Precision bits = 128;
  const BoundContext odd = make_context(149999, 5, Parity::odd,
                                        phi_lower_omega(149999, 5, Parity::odd, bits),
                                        RootCase::general, AlphaFloor::half, bits);
  EXPECT_TRUE(std::isfinite(mn_lower(MnBoundVariant::lemma_gw, odd).midpoint()));
  EXPECT_THROW((void)mn_lower(MnBoundVariant::lemma_hw, odd), Error);
  const BoundContext even = make_context(269999, 6, Parity::even,
                                         phi_lower_omega(269999, 6, Parity::even, bits),
                                         RootCase::general, AlphaFloor::half, bits);
  EXPECT_TRUE(std::isfinite(mn_lower(MnBoundVariant::lemma_hw, even).midpoint()));
  const BoundContext w1 = make_context(1001, 1, Parity::odd,
                                       phi_lower_omega(1001, 1, Parity::odd, bits),
                                       RootCase::general, AlphaFloor::half, bits);
  EXPECT_TRUE(std::isfinite(mn_lower_lemma(w1).midpoint()));
}

TEST(Bounds, UnitVariant) {
  const Precision bits = 128;
  const LucasParams fib = validate_params(1, 1);
  BoundContext ctx = make_context(150, 1, Parity::even, phi_bound(PhiBound::exact, 150, 1,
                                                                  Parity::even, bits),
                                  RootCase::unit, alpha_log(fib, bits), bits);
  const double expected = 40 * std::log((1 + std::sqrt(5.0)) / 2) - 1.28 - std::log(150.0);
  EXPECT_TRUE(oracle::encloses(mn_lower(MnBoundVariant::unit_eq55, ctx), expected));
  ctx.root_case = RootCase::general;
  EXPECT_THROW((void)mn_lower(MnBoundVariant::unit_eq55, ctx), Error);
}

TEST(Bounds, RealVariantUnderestimatesExactCyclotomicValue) {
  const Precision bits = 128;
  for (auto [r, s] : std::vector<std::pair<int, int>>{{1, 1}, {3, -2}, {1, 2}, {5, 3}, {4, -3}}) {
    const LucasParams p = validate_params(r, s);
    for (std::uint64_t n = 150; n <= 260; ++n) {
      const int w = static_cast<int>(factorize(n).size());
      BoundContext ctx = make_context(n, w, parity_of(n), phi_lower_omega(n, w, Parity::both, bits),
                                      RootCase::real, alpha_log(p, bits), bits);
      const Interval bound = mn_lower(MnBoundVariant::real_eq5, ctx);
      const Interval exact = primitive_part_lower(p, n, bits);
      ASSERT_LE(bound.lower(), exact.upper() + 1e-9) << r << "," << s << " n=" << n;
      ctx.divide_by_n = false;
      ASSERT_LE(mn_lower(MnBoundVariant::real_eq5, ctx).lower(),
                exact.upper() + std::log(static_cast<double>(n)) + 1e-9);
    }
  }
}

TEST(Bounds, SieveUpperBoundShrinksWithLargerPhi) {
  const Precision bits = 64;
  const auto rs = make_context(150, 3, Parity::even, phi_lower_rs(150, bits), RootCase::general,
                               AlphaFloor::half, bits);
  const auto ex = make_context(150, 3, Parity::even, phi_bound(PhiBound::exact, 150, 3,
                                                               Parity::even, bits),
                               RootCase::general, AlphaFloor::half, bits);
  EXPECT_LT(mn_upper_sieve(ex).upper(), mn_upper_sieve(rs).lower());
  const auto big = make_context(1'000'000, 7, Parity::even, phi_lower_rs(1'000'000, bits),
                                RootCase::general, AlphaFloor::half, bits);
  const double l = std::log(1e6);
  const double expected = 4 * (1 + std::log(l)) * 1e6 * (l / 2) / phi_lower_rs(1'000'000).midpoint();
  EXPECT_NEAR(mn_upper_sieve(big).midpoint() / expected, 1.0, 1e-12);
}

TEST(Bounds, ContextRejectsSmallN) {
  EXPECT_THROW((void)make_context(149, 1, Parity::odd, Interval(1, 64), RootCase::general,
                                  AlphaFloor::half, 64),
               Error);
}

TEST(Bounds, UnitCaseConstant) {
  const Interval c = unit_case_product(128);
  EXPECT_TRUE(c.certainly_greater(Interval::decimal("0.278293", 128)));
  EXPECT_NEAR(c.midpoint(), static_cast<double>(oracle::theta_unit_constant()), 1e-15);
  EXPECT_LT(c.width(), 1e-30);
}
