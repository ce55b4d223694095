#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>

#include "lucaspf/arithmetic.hpp"
#include "lucaspf/interval.hpp"
#include "lucaspf/lucas.hpp"

namespace lucaspf {

// Phi_n(alpha, beta) as the exact integer prod_{d|n} U_{n/d}^{mu(d)}, n >= 2.
mpz_class cyclotomic_value(const LucasParams& p, std::uint64_t n);

// Enclosure of log(|Phi_n(alpha,beta)| / n), a lower bound for log M_n.
Interval primitive_part_lower(const LucasParams& p, std::uint64_t n,
                              Precision bits = default_precision());

struct PrimitivePartResult {
  std::uint64_t n = 0;
  mpz_class phi_value;               // Phi_n(alpha, beta)
  std::optional<mpz_class> mn_value; // M_n, only when certified
  Interval mn_lower_log;             // log(|Phi_n| / n)
};

/// M_n = product of the prime powers p^a || U_n with p = +-1 (mod n).
///
/// |U_n| is trial-divided by every prime <= trial_bound. The value is
/// reported only when the leftover cofactor is 1 or below trial_bound^2
/// (hence prime); otherwise mn_value is empty.
PrimitivePartResult m_n_exact(const LucasParams& p, std::uint64_t n, std::uint64_t trial_bound);

// q does not divide Delta*n and q divides Phi_n(alpha,beta).
bool primitive_prime_filter(const LucasParams& p, std::uint64_t n, std::uint64_t q);

}  // namespace lucaspf
