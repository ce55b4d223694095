#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace lucaspf {

// nu_p(k!) via Legendre's digit-sum formula (k - s_p(k)) / (p - 1).
// Throws NotPrime when p is not prime.
std::uint64_t legendre_valuation(std::uint64_t p, std::uint64_t k);

/// Certificate that sign * prod(args[i]!) equals some integer.
/// args is nondecreasing with every entry >= 2; empty args means 1.
struct PFWitness {
  int sign = 1;
  std::vector<std::uint32_t> args;

  [[nodiscard]] mpz_class value() const;
  [[nodiscard]] std::string to_string() const;
  friend bool operator==(const PFWitness&, const PFWitness&) = default;
};

/// Exact factorials 0!..max_arg! and nu_p(m!) for every prime p <= max_arg.
class FactorialTable {
 public:
  explicit FactorialTable(std::uint32_t max_arg);

  [[nodiscard]] std::uint32_t max_arg() const { return max_arg_; }
  [[nodiscard]] const mpz_class& factorial(std::uint32_t m) const { return factorials_.at(m); }
  [[nodiscard]] const std::vector<std::uint32_t>& primes() const { return primes_; }
  // nu_{primes()[i]}(m!)
  [[nodiscard]] std::uint32_t valuation(std::size_t prime_index, std::uint32_t m) const {
    return valuations_[prime_index][m];
  }

 private:
  std::uint32_t max_arg_;
  std::vector<mpz_class> factorials_;
  std::vector<std::uint32_t> primes_;
  std::vector<std::vector<std::uint32_t>> valuations_;
};

enum class RejectReason { odd, size };

std::string to_string(RejectReason reason);

// Necessary-condition filter; never rejects a member. Requires |N| > 1.
// (a) N odd; (b) with v = nu_2(N), every witness has at most v factors,
// each with argument <= 2v+1, so |N| > ((2v+1)!)^v is impossible.
std::optional<RejectReason> pf_fast_reject(const mpz_class& n);

// |N| is a product of factorials > 1 (|N| = 1 is the empty product).
// Throws ZeroInput for N = 0.
bool pf_member(const mpz_class& n);

// Up to `limit` distinct witnesses for N, in lexicographic order of args.
// Each witness is verified by exact multiplication. Throws ZeroInput for N = 0.
std::vector<PFWitness> pf_decompose(const mpz_class& n, std::size_t limit);

}  // namespace lucaspf
