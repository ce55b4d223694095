#include "lucaspf/factorial.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <set>
#include <string>

#include "lucaspf/arithmetic.hpp"
#include "lucaspf/error.hpp"

namespace lucaspf {

std::uint64_t legendre_valuation(std::uint64_t p, std::uint64_t k) {
  if (!is_prime(p)) fail(ErrorCode::not_prime, std::to_string(p) + " is not prime");
  std::uint64_t digit_sum = 0;
  for (std::uint64_t t = k; t > 0; t /= p) digit_sum += t % p;
  return (k - digit_sum) / (p - 1);
}

mpz_class PFWitness::value() const {
  mpz_class v = sign;
  mpz_class f;
  for (std::uint32_t m : args) {
    mpz_fac_ui(f.get_mpz_t(), m);
    v *= f;
  }
  return v;
}

std::string PFWitness::to_string() const {
  std::string out = sign < 0 ? "-" : "";
  if (args.empty()) return out + "1";
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (i) out += "*";
    out += std::to_string(args[i]) + "!";
  }
  return out;
}

FactorialTable::FactorialTable(std::uint32_t max_arg)
    : max_arg_(max_arg), primes_(primes_up_to(max_arg)) {
  factorials_.reserve(max_arg + 1);
  factorials_.emplace_back(1);
  for (std::uint32_t m = 1; m <= max_arg; ++m) factorials_.push_back(factorials_.back() * m);
  valuations_.resize(primes_.size());
  for (std::size_t i = 0; i < primes_.size(); ++i) {
    auto& row = valuations_[i];
    row.assign(max_arg + 1, 0);
    const std::uint32_t p = primes_[i];
    for (std::uint32_t m = 1; m <= max_arg; ++m) {
      std::uint32_t e = 0;
      for (std::uint32_t t = m; t % p == 0; t /= p) ++e;
      row[m] = row[m - 1] + e;
    }
  }
}

std::string to_string(RejectReason reason) {
  return reason == RejectReason::odd ? "odd" : "size";
}

std::optional<RejectReason> pf_fast_reject(const mpz_class& n) {
  const mpz_class a = abs(n);
  if (a <= 1) return std::nullopt;
  if (mpz_odd_p(a.get_mpz_t())) return RejectReason::odd;
  const std::uint64_t v = mpz_scan1(a.get_mpz_t(), 0);
  if (v > (1U << 20)) return std::nullopt;
  mpz_class cap;
  mpz_fac_ui(cap.get_mpz_t(), 2 * v + 1);
  const std::uint64_t n_bits = mpz_sizeinbase(a.get_mpz_t(), 2);
  const std::uint64_t cap_bits = mpz_sizeinbase(cap.get_mpz_t(), 2);
  // cap^v < 2^(v*cap_bits) <= 2^(n_bits-1) <= |N|
  if (n_bits - 1 >= v * cap_bits) return RejectReason::size;
  if (v * cap_bits > (1U << 22)) return std::nullopt;
  mpz_class bound;
  mpz_pow_ui(bound.get_mpz_t(), cap.get_mpz_t(), v);
  if (a > bound) return RejectReason::size;
  return std::nullopt;
}

namespace {

// Quotients below this many bits have their dead ends memoized.
constexpr double kMemoCutoffBits = 64.0;

const FactorialTable& table_at_least(std::uint32_t max_arg) {
  thread_local std::unique_ptr<FactorialTable> table;
  if (!table || table->max_arg() < max_arg) {
    std::uint32_t size = table ? table->max_arg() : 64;
    while (size < max_arg) size *= 2;
    table = std::make_unique<FactorialTable>(size);
  }
  return *table;
}

// Depth-first search over factorial factors in nonincreasing order, on the
// prime-exponent vector of |N|. The largest factor m must satisfy q <= m < q'
// where q is the largest prime still present and q' the next prime.
class Decomposer {
 public:
  Decomposer(const FactorialTable& table, std::vector<std::uint32_t> exps, std::uint32_t max_arg,
             bool first_only)
      : table_(table), e_(std::move(exps)), max_arg_(max_arg), first_only_(first_only) {}

  void run() {
    path_.clear();
    search(max_arg_);
  }

  [[nodiscard]] const std::vector<std::vector<std::uint32_t>>& solutions() const {
    return solutions_;
  }

 private:
  struct Frame {
    std::int64_t next_m;  // next candidate, descending
    std::int64_t lo;
    std::uint32_t applied = 0;
    std::size_t solutions_at_entry = 0;
    std::vector<std::uint32_t> key;
  };

  int top_index() const {
    for (int i = static_cast<int>(e_.size()) - 1; i >= 0; --i) {
      if (e_[i]) return i;
    }
    return -1;
  }

  bool fits(std::uint32_t m) const {
    const auto& primes = table_.primes();
    for (std::size_t j = 0; j < primes.size() && primes[j] <= m; ++j) {
      if (table_.valuation(j, m) > e_[j]) return false;
    }
    return true;
  }

  void apply(std::uint32_t m, int sign) {
    const auto& primes = table_.primes();
    for (std::size_t j = 0; j < primes.size() && primes[j] <= m; ++j) {
      e_[j] = static_cast<std::uint32_t>(static_cast<std::int64_t>(e_[j]) -
                                         sign * static_cast<std::int64_t>(table_.valuation(j, m)));
    }
  }

  double quotient_bits() const {
    double bits = 0;
    for (std::size_t j = 0; j < e_.size(); ++j) {
      if (e_[j]) bits += e_[j] * std::log2(static_cast<double>(table_.primes()[j]));
    }
    return bits;
  }

  // Records a solution when only powers of two remain; returns true if the
  // state was terminal (solved or hopeless) so no frame is needed.
  bool terminal(std::uint32_t cap) {
    const int top = top_index();
    if (top < 0) {
      record({});
      return true;
    }
    if (top == 0) {
      if (cap >= 2) record(std::vector<std::uint32_t>(e_[0], 2));
      return true;
    }
    return false;
  }

  void record(const std::vector<std::uint32_t>& tail) {
    std::vector<std::uint32_t> args(path_);
    args.insert(args.end(), tail.begin(), tail.end());
    std::reverse(args.begin(), args.end());
    solutions_.push_back(std::move(args));
  }

  bool done() const { return first_only_ && !solutions_.empty(); }

  std::optional<Frame> open_frame(std::uint32_t cap) {
    if (terminal(cap)) return std::nullopt;
    std::vector<std::uint32_t> key;
    if (quotient_bits() < kMemoCutoffBits) {
      key = e_;
      key.push_back(cap);
      if (dead_.count(key)) return std::nullopt;
    }
    const int top = top_index();
    const std::uint32_t q = table_.primes()[top];
    const std::uint64_t q_next = static_cast<std::size_t>(top) + 1 < table_.primes().size()
                                     ? table_.primes()[top + 1]
                                     : next_prime(q);
    const std::uint64_t hi = std::min<std::uint64_t>({cap, q_next - 1, max_arg_});
    Frame f;
    f.next_m = static_cast<std::int64_t>(hi);
    f.lo = q;
    f.solutions_at_entry = solutions_.size();
    f.key = std::move(key);
    return f;
  }

  void search(std::uint32_t cap) {
    std::vector<Frame> stack;
    if (auto f = open_frame(cap)) stack.push_back(std::move(*f));
    while (!stack.empty() && !done()) {
      Frame& f = stack.back();
      if (f.applied) {
        apply(f.applied, -1);
        path_.pop_back();
        f.applied = 0;
      }
      std::uint32_t chosen = 0;
      while (f.next_m >= f.lo) {
        const auto m = static_cast<std::uint32_t>(f.next_m--);
        if (fits(m)) {
          chosen = m;
          break;
        }
      }
      if (!chosen) {
        if (!f.key.empty() && solutions_.size() == f.solutions_at_entry) dead_.insert(f.key);
        stack.pop_back();
        continue;
      }
      apply(chosen, +1);
      path_.push_back(chosen);
      f.applied = chosen;
      if (auto child = open_frame(chosen)) stack.push_back(std::move(*child));
    }
  }

  const FactorialTable& table_;
  std::vector<std::uint32_t> e_;
  std::uint32_t max_arg_;
  bool first_only_;
  std::vector<std::uint32_t> path_;
  std::vector<std::vector<std::uint32_t>> solutions_;
  std::set<std::vector<std::uint32_t>> dead_;
};

// Splits |N| over the primes <= 2*nu_2(N)+1. Returns nullopt when a larger
// prime factor remains (then N cannot be a factorial product).
struct Reduced {
  std::vector<std::uint32_t> exps;
  std::uint32_t max_arg;
};

std::optional<Reduced> reduce(const mpz_class& abs_n) {
  const std::uint64_t v = mpz_scan1(abs_n.get_mpz_t(), 0);
  const auto max_arg = static_cast<std::uint32_t>(2 * v + 1);
  const FactorialTable& table = table_at_least(max_arg);
  mpz_class rest = abs_n;
  Reduced red{{}, max_arg};
  for (std::uint32_t p : table.primes()) {
    if (p > max_arg) break;
    const mpz_class pz = p;
    red.exps.push_back(
        static_cast<std::uint32_t>(mpz_remove(rest.get_mpz_t(), rest.get_mpz_t(), pz.get_mpz_t())));
  }
  if (rest != 1) return std::nullopt;
  return red;
}

std::vector<std::vector<std::uint32_t>> decompose_args(const mpz_class& n, bool first_only) {
  if (n == 0) fail(ErrorCode::zero_input, "0 is not a product of factorials");
  const mpz_class a = abs(n);
  if (a == 1) return {{}};
  if (pf_fast_reject(a)) return {};
  auto red = reduce(a);
  if (!red) return {};
  Decomposer dec(table_at_least(red->max_arg), std::move(red->exps), red->max_arg, first_only);
  dec.run();
  return dec.solutions();
}

}  // namespace

bool pf_member(const mpz_class& n) { return !decompose_args(n, true).empty(); }

std::vector<PFWitness> pf_decompose(const mpz_class& n, std::size_t limit) {
  auto all = decompose_args(n, false);
  std::sort(all.begin(), all.end());
  std::vector<PFWitness> out;
  const mpz_class a = abs(n);
  for (auto& args : all) {
    if (out.size() >= limit) break;
    PFWitness w{n < 0 ? -1 : 1, std::move(args)};
    if (w.value() != n) {
      fail(ErrorCode::non_integer_result, "witness " + w.to_string() + " does not reproduce N");
    }
    out.push_back(std::move(w));
  }
  return out;
}

}  // namespace lucaspf
