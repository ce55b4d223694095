#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

namespace lucaspf {

// All primes <= limit (sieve of Eratosthenes).
std::vector<std::uint32_t> primes_up_to(std::uint32_t limit);

// Deterministic Miller-Rabin for 64-bit inputs.
bool is_prime(std::uint64_t n);

// Smallest prime > n. n < 2^63.
std::uint64_t next_prime(std::uint64_t n);

// Prime factorization by trial division, ascending primes.
std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n);

std::uint64_t euler_phi(std::uint64_t n);

// Largest k with (product of the first k primes) <= bound; when skip_two is set
// the product starts at 3. This is the largest omega(n) possible for n <= bound
// (odd n when skip_two).
int max_omega_below(std::uint64_t bound, bool skip_two);

// Smallest n with omega(n) = k (odd n when skip_two).
std::uint64_t primorial(int k, bool skip_two);

struct ArithmeticProfile {
  std::uint64_t n = 0;
  std::vector<std::uint64_t> divisors;   // ascending
  std::map<std::uint64_t, int> mu;       // Moebius value per divisor
  std::uint64_t phi = 0;
  int omega = 0;
  std::uint64_t radical = 0;
  std::uint64_t largest_prime_factor = 0;
  std::vector<std::pair<std::uint64_t, unsigned>> factors;

  [[nodiscard]] int mobius() const { return mu.at(n); }
};

// Throws DomainError for n < 2.
ArithmeticProfile arithmetic_profile(std::uint64_t n);

}  // namespace lucaspf
