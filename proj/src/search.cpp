#include "lucaspf/search.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>

#include "lucaspf/arithmetic.hpp"
#include "lucaspf/error.hpp"
#include "lucaspf/parallel.hpp"

namespace lucaspf {
namespace {

constexpr std::uint64_t kBlock = 16;

struct IndexOutcome {
  std::optional<SearchHit> hit;
  std::string rejected;
};

IndexOutcome examine(const LucasParams& p, SeqKind kind, std::uint64_t n) {
  IndexOutcome out;
  const mpz_class value = term_at(p, kind, n).value;
  if (value == 0) return out;
  if (auto reason = pf_fast_reject(value)) {
    out.rejected = std::to_string(n) + ": " + to_string(*reason);
    return out;
  }
  auto witnesses = pf_decompose(value, 1);
  if (witnesses.empty()) return out;
  SearchHit hit;
  hit.index = n;
  hit.kind = kind;
  hit.value_digits = mpz_class(abs(value)).get_str().size();
  hit.witness = std::move(witnesses.front());
  hit.trivial = hit.witness.args.empty();
  out.hit = std::move(hit);
  return out;
}

}  // namespace

std::uint64_t theorem_index_bound(const LucasParams& p, SeqKind kind) {
  std::uint64_t bound = 300000;
  if (p.unit_norm()) {
    bound = 150;
  } else if (p.roots_real()) {
    bound = 210;
  }
  return kind == SeqKind::V ? bound / 2 : bound;
}

SearchResult search_pf_terms(const SearchConfig& cfg) {
  const LucasParams p = validate_params(cfg.r, cfg.s);
  const std::uint64_t lo = std::max<std::uint64_t>(cfg.n_min, 1);
  if (cfg.n_max < lo) fail(ErrorCode::domain, "search range is empty");
  if (cfg.n_max > kDefaultSearchCap) {
    fail(ErrorCode::domain, "n_max above the search cap " + std::to_string(kDefaultSearchCap));
  }

  const std::uint64_t count = cfg.n_max - lo + 1;
  std::vector<IndexOutcome> outcomes(count);
  const std::size_t blocks = (count + kBlock - 1) / kBlock;
  parallel_for(blocks, cfg.workers, [&](std::size_t b) {
    const std::uint64_t end = std::min<std::uint64_t>(count, (b + 1) * kBlock);
    for (std::uint64_t i = b * kBlock; i < end; ++i) outcomes[i] = examine(p, cfg.kind, lo + i);
  });

  SearchResult res;
  for (auto& o : outcomes) {
    if (o.hit) res.hits.push_back(std::move(*o.hit));
    if (cfg.reject_log && !o.rejected.empty()) res.reject_log.push_back(std::move(o.rejected));
  }
  const bool exhaustive = lo == 1 && cfg.n_max >= theorem_index_bound(p, cfg.kind);
  res.coverage = exhaustive ? "exhaustive" : "partial up to " + std::to_string(cfg.n_max);
  return res;
}

bool fibonacci_product_is_factorial(const std::vector<std::uint64_t>& indices, std::uint32_t m) {
  const LucasParams fib = validate_params(1, 1);
  mpz_class product = 1;
  for (std::uint64_t i : indices) product *= u_at(fib, i).value;
  return product == FactorialTable(m).factorial(m);
}

bool verify_fibonacci_identity() {
  return fibonacci_product_is_factorial({1, 2, 3, 4, 5, 6, 8, 10, 12}, 11);
}

std::vector<std::uint64_t> sieve_primes_in_classes(std::uint64_t n, std::uint64_t x) {
  if (n < 3 || x < n) fail(ErrorCode::domain, "sieve_primes_in_classes needs x >= n >= 3");
  const auto root = static_cast<std::uint32_t>(std::sqrt(static_cast<long double>(x))) + 1;
  const std::vector<std::uint32_t> base = primes_up_to(root);
  constexpr std::uint64_t kSegment = 1 << 16;

  std::vector<std::uint64_t> out;
  std::vector<char> composite;
  for (std::uint64_t seg = 2; seg <= x; seg += kSegment) {
    const std::uint64_t end = std::min(x, seg + kSegment - 1);
    composite.assign(end - seg + 1, 0);
    for (std::uint32_t q : base) {
      const std::uint64_t qq = std::uint64_t{q} * q;
      if (qq > end) break;
      std::uint64_t start = std::max(qq, (seg + q - 1) / q * q);
      for (std::uint64_t m = start; m <= end; m += q) composite[m - seg] = 1;
    }
    for (std::uint64_t v = seg; v <= end; ++v) {
      if (composite[v - seg]) continue;
      const std::uint64_t r = v % n;
      if (r == 1 || r == n - 1) out.push_back(v);
    }
  }
  return out;
}

}  // namespace lucaspf
