#include "oracles/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "lucaspf/error.hpp"
#include "lucaspf/lucas.hpp"

namespace oracle {

std::pair<mpz_class, mpz_class> lucas_naive(std::int64_t r, std::int64_t s, std::uint64_t n) {
  const mpz_class rr = static_cast<long>(r), ss = static_cast<long>(s);
  mpz_class u0 = 0, u1 = 1, v0 = 2, v1 = rr;
  for (std::uint64_t i = 0; i < n; ++i) {
    mpz_class u2 = rr * u1 + ss * u0;
    mpz_class v2 = rr * v1 + ss * v0;
    u0 = std::move(u1);
    u1 = std::move(u2);
    v0 = std::move(v1);
    v1 = std::move(v2);
  }
  return {u0, v0};
}

std::vector<char> pf_table(std::uint32_t limit) {
  std::vector<std::uint64_t> facts;
  for (std::uint64_t f = 2, m = 3; f <= limit; f *= m, ++m) facts.push_back(f);
  std::vector<char> member(limit + 1, 0);
  if (limit >= 1) member[1] = 1;
  for (std::uint64_t n = 2; n <= limit; ++n) {
    for (std::uint64_t f : facts) {
      if (f > n) break;
      if (n % f == 0 && member[n / f]) {
        member[n] = 1;
        break;
      }
    }
  }
  return member;
}

namespace {

void decompose_from(const mpz_class& rest, std::uint32_t max_arg, std::vector<std::uint32_t>& cur,
                    std::vector<std::vector<std::uint32_t>>& out) {
  if (rest == 1) {
    out.emplace_back(cur.rbegin(), cur.rend());
    return;
  }
  mpz_class f = 1;
  for (std::uint32_t m = 2; m <= max_arg; ++m) {
    f *= m;
    if (f > rest) break;
    if (mpz_divisible_p(rest.get_mpz_t(), f.get_mpz_t())) {
      cur.push_back(m);
      decompose_from(rest / f, m, cur, out);
      cur.pop_back();
    } else {
      break;  // m! does not divide, so no larger factorial does
    }
  }
}

}  // namespace

std::vector<std::vector<std::uint32_t>> pf_all_decompositions(const mpz_class& n) {
  std::vector<std::vector<std::uint32_t>> out;
  std::vector<std::uint32_t> cur;
  const mpz_class a = abs(n);
  if (a == 0) return out;
  decompose_from(a, 1000000, cur, out);
  std::sort(out.begin(), out.end());
  return out;
}

bool pf_brute(const mpz_class& n) { return !pf_all_decompositions(n).empty(); }

std::vector<std::uint64_t> totients(std::uint64_t limit) {
  std::vector<std::uint64_t> phi(limit + 1);
  std::iota(phi.begin(), phi.end(), 0);
  for (std::uint64_t p = 2; p <= limit; ++p) {
    if (phi[p] != p) continue;
    for (std::uint64_t m = p; m <= limit; m += p) phi[m] -= phi[m] / p;
  }
  return phi;
}

std::vector<int> distinct_prime_counts(std::uint64_t limit) {
  std::vector<int> w(limit + 1, 0);
  for (std::uint64_t p = 2; p <= limit; ++p) {
    if (w[p] != 0) continue;
    for (std::uint64_t m = p; m <= limit; m += p) ++w[m];
  }
  return w;
}

std::vector<char> prime_flags(std::uint64_t limit) {
  std::vector<char> is(limit + 1, 1);
  is[0] = 0;
  if (limit >= 1) is[1] = 0;
  for (std::uint64_t p = 2; p * p <= limit; ++p) {
    if (!is[p]) continue;
    for (std::uint64_t m = p * p; m <= limit; m += p) is[m] = 0;
  }
  return is;
}

std::uint64_t valuation_by_division(std::uint64_t p, std::uint64_t k) {
  std::uint64_t v = 0;
  for (std::uint64_t i = 2; i <= k; ++i) {
    for (std::uint64_t x = i; x % p == 0; x /= p) ++v;
  }
  return v;
}

namespace {

mpz_class rho(const mpz_class& n, unsigned long c) {
  if (mpz_even_p(n.get_mpz_t())) return 2;
  mpz_class x = 2, y = 2, d = 1;
  auto step = [&](mpz_class& v) {
    v = v * v + c;
    v %= n;
  };
  while (d == 1) {
    step(x);
    step(y);
    step(y);
    mpz_class diff = abs(x - y);
    mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
  }
  return d;
}

void split(const mpz_class& n, std::vector<mpz_class>& out) {
  if (n == 1) return;
  if (mpz_probab_prime_p(n.get_mpz_t(), 40) > 0) {
    out.push_back(n);
    return;
  }
  for (unsigned long c = 1;; ++c) {
    mpz_class d = rho(n, c);
    if (d != n) {
      split(d, out);
      split(n / d, out);
      return;
    }
  }
}

}  // namespace

std::vector<mpz_class> prime_factors(const mpz_class& n) {
  mpz_class a = abs(n);
  std::vector<mpz_class> out;
  for (unsigned long p = 2; p < 10000 && a > 1; ++p) {
    while (mpz_divisible_ui_p(a.get_mpz_t(), p)) {
      out.emplace_back(p);
      a /= p;
    }
  }
  split(a, out);
  std::sort(out.begin(), out.end());
  return out;
}

long double theta_unit_constant() {
  const long double q = (3.0L - std::sqrt(5.0L)) / 2.0L;
  long double sum = 1.0L;
  for (int k = 1; k < 40; ++k) {
    sum += 2.0L * (k % 2 ? -1.0L : 1.0L) * std::pow(q, static_cast<long double>(k) * k);
  }
  return sum;
}

std::vector<std::pair<std::int64_t, std::int64_t>> random_params(std::size_t count, int bound,
                                                                 std::uint64_t seed,
                                                                 bool complex_only) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> dist(-bound, bound);
  std::vector<std::pair<std::int64_t, std::int64_t>> out;
  while (out.size() < count) {
    const std::int64_t r = dist(rng), s = dist(rng);
    if (complex_only && r * r + 4 * s >= 0) continue;
    try {
      (void)lucaspf::validate_params(r, s);
    } catch (const lucaspf::Error&) {
      continue;
    }
    out.emplace_back(r, s);
  }
  return out;
}

std::vector<std::uint64_t> brute_search(std::int64_t r, std::int64_t s, bool v_kind,
                                        std::uint64_t n_max) {
  std::vector<std::uint64_t> hits;
  for (std::uint64_t n = 1; n <= n_max; ++n) {
    const auto [u, v] = lucas_naive(r, s, n);
    const mpz_class& t = v_kind ? v : u;
    if (t != 0 && pf_brute(t)) hits.push_back(n);
  }
  return hits;
}

}  // namespace oracle
