#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lucaspf/factorial.hpp"
#include "lucaspf/lucas.hpp"

namespace lucaspf {

inline constexpr std::uint64_t kDefaultSearchCap = 5000;

/// An index whose term is, up to sign, a product of factorials.
struct SearchHit {
  std::uint64_t index = 0;
  SeqKind kind = SeqKind::U;
  std::size_t value_digits = 0;
  PFWitness witness;
  bool trivial = false;  // |term| = 1, the empty product
};

struct SearchConfig {
  std::int64_t r = 1;
  std::int64_t s = 1;
  SeqKind kind = SeqKind::U;
  std::uint64_t n_min = 1;
  std::uint64_t n_max = 150;
  unsigned workers = 1;
  bool reject_log = false;
};

struct SearchResult {
  std::vector<SearchHit> hits;
  // "exhaustive" when n_max reaches the theorem bound for these parameters,
  // otherwise "partial up to <n_max>".
  std::string coverage;
  std::vector<std::string> reject_log;  // "n: reason", when requested
};

// Hits sorted by index. n = 0 is skipped. Throws DomainError for an empty
// range or n_max above kDefaultSearchCap, and validation errors for (r, s).
SearchResult search_pf_terms(const SearchConfig& cfg);

// Theorem bound on n for a sequence: 150/75 for s = +-1, 300000/150000 otherwise.
std::uint64_t theorem_index_bound(const LucasParams& p, SeqKind kind);

// 1*1*2*3*5*8*21*55*144 == 11!
bool verify_fibonacci_identity();
// Same check for an arbitrary index set.
bool fibonacci_product_is_factorial(const std::vector<std::uint64_t>& indices, std::uint32_t m);

// Primes p <= x with p = +-1 (mod n), by segmented sieve. x >= n >= 3.
std::vector<std::uint64_t> sieve_primes_in_classes(std::uint64_t n, std::uint64_t x);

}  // namespace lucaspf
