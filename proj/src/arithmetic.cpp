#include "lucaspf/arithmetic.hpp"

#include <algorithm>
#include <string>

#include "lucaspf/error.hpp"

namespace lucaspf {

std::vector<std::uint32_t> primes_up_to(std::uint32_t limit) {
  std::vector<std::uint32_t> primes;
  if (limit < 2) return primes;
  std::vector<bool> composite(static_cast<std::size_t>(limit) + 1, false);
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (composite[i]) continue;
    primes.push_back(static_cast<std::uint32_t>(i));
    for (std::uint64_t j = i * i; j <= limit; j += i) composite[j] = true;
  }
  return primes;
}

namespace {

using u128 = unsigned __int128;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t e, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (e) {
    if (e & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    e >>= 1;
  }
  return result;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int i = 1; i < s; ++i) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

std::uint64_t next_prime(std::uint64_t n) {
  std::uint64_t c = n + 1;
  while (!is_prime(c)) ++c;
  return c;
}

std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n) {
  std::vector<std::pair<std::uint64_t, unsigned>> out;
  auto take = [&](std::uint64_t p) {
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e) out.emplace_back(p, e);
  };
  take(2);
  take(3);
  for (std::uint64_t p = 5; p * p <= n; p += 6) {
    take(p);
    take(p + 2);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

std::uint64_t euler_phi(std::uint64_t n) {
  if (n == 0) return 0;
  std::uint64_t phi = n;
  for (auto [p, e] : factorize(n)) phi = phi / p * (p - 1);
  return phi;
}

std::uint64_t primorial(int k, bool skip_two) {
  std::uint64_t product = 1;
  std::uint64_t p = skip_two ? 2 : 1;
  for (int i = 0; i < k; ++i) {
    p = next_prime(p);
    product *= p;
  }
  return product;
}

int max_omega_below(std::uint64_t bound, bool skip_two) {
  int k = 0;
  std::uint64_t product = 1;
  std::uint64_t p = skip_two ? 2 : 1;
  while (true) {
    p = next_prime(p);
    if (static_cast<u128>(product) * p > bound) return k;
    product *= p;
    ++k;
  }
}

ArithmeticProfile arithmetic_profile(std::uint64_t n) {
  if (n < 2) fail(ErrorCode::domain, "arithmetic_profile needs n >= 2, got " + std::to_string(n));
  ArithmeticProfile prof;
  prof.n = n;
  prof.factors = factorize(n);
  prof.omega = static_cast<int>(prof.factors.size());
  prof.phi = n;
  prof.radical = 1;
  for (auto [p, e] : prof.factors) {
    prof.phi = prof.phi / p * (p - 1);
    prof.radical *= p;
  }
  prof.largest_prime_factor = prof.factors.back().first;

  // Divisors with their Moebius values, built prime by prime.
  std::vector<std::pair<std::uint64_t, int>> divs{{1, 1}};
  for (auto [p, e] : prof.factors) {
    const std::size_t base = divs.size();
    std::uint64_t pk = 1;
    for (unsigned k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) {
        divs.emplace_back(divs[i].first * pk, k == 1 ? -divs[i].second : 0);
      }
    }
  }
  std::sort(divs.begin(), divs.end());
  for (auto [d, m] : divs) {
    prof.divisors.push_back(d);
    prof.mu[d] = m;
  }
  return prof;
}

}  // namespace lucaspf
