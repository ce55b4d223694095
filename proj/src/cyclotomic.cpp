#include "lucaspf/cyclotomic.hpp"

#include <string>

#include "lucaspf/error.hpp"

namespace lucaspf {

mpz_class cyclotomic_value(const LucasParams& p, std::uint64_t n) {
  if (n < 2) fail(ErrorCode::domain, "cyclotomic_value needs n >= 2");
  const ArithmeticProfile prof = arithmetic_profile(n);
  mpz_class num = 1, den = 1;
  for (std::uint64_t d : prof.divisors) {
    const int mu = prof.mu.at(d);
    if (mu == 0) continue;
    const mpz_class u = u_at(p, n / d).value;
    (mu > 0 ? num : den) *= u;
  }
  if (!mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t())) {
    fail(ErrorCode::non_integer_result,
         "divisor product for Phi_" + std::to_string(n) + " is not an integer");
  }
  mpz_class out;
  mpz_divexact(out.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return out;
}

Interval primitive_part_lower(const LucasParams& p, std::uint64_t n, Precision bits) {
  const mpz_class phi = cyclotomic_value(p, n);
  return log_abs(phi, bits) - log(Interval::exact(static_cast<std::int64_t>(n), bits));
}

PrimitivePartResult m_n_exact(const LucasParams& p, std::uint64_t n, std::uint64_t trial_bound) {
  if (n < 2) fail(ErrorCode::domain, "m_n_exact needs n >= 2");
  if (trial_bound < 2 || trial_bound > (1ULL << 32)) {
    fail(ErrorCode::domain, "trial bound must lie in [2, 2^32]");
  }
  PrimitivePartResult res;
  res.n = n;
  res.phi_value = cyclotomic_value(p, n);
  res.mn_lower_log = primitive_part_lower(p, n);

  mpz_class rest = abs(u_at(p, n).value);
  mpz_class mn = 1;
  auto congruent = [n](const mpz_class& q) {
    const std::uint64_t r = mpz_fdiv_ui(q.get_mpz_t(), n);
    return r == 1 % n || r == n - 1;
  };
  for (std::uint32_t q : primes_up_to(static_cast<std::uint32_t>(trial_bound))) {
    if (rest == 1) break;
    const mpz_class qz = q;
    mpz_class qpow = 1;
    while (mpz_divisible_ui_p(rest.get_mpz_t(), q)) {
      mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), q);
      qpow *= qz;
    }
    if (qpow > 1 && congruent(qz)) mn *= qpow;
  }
  const mpz_class bound_sq = mpz_class(std::to_string(trial_bound)) * trial_bound;
  if (rest == 1) {
    res.mn_value = mn;
  } else if (rest < bound_sq) {
    // No prime factor <= trial_bound remains, so the cofactor is prime.
    if (congruent(rest)) mn *= rest;
    res.mn_value = mn;
  }
  return res;
}

bool primitive_prime_filter(const LucasParams& p, std::uint64_t n, std::uint64_t q) {
  if (!is_prime(q)) fail(ErrorCode::not_prime, std::to_string(q) + " is not prime");
  const mpz_class dn = p.delta() * mpz_class(std::to_string(n));
  if (mpz_divisible_ui_p(dn.get_mpz_t(), q)) return false;
  const mpz_class phi = cyclotomic_value(p, n);
  return mpz_divisible_ui_p(phi.get_mpz_t(), q) != 0;
}

}  // namespace lucaspf
