#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <utility>

#include "lucaspf/interval.hpp"

namespace lucaspf {

enum class SeqKind { U, V };

std::string to_string(SeqKind kind);
SeqKind parse_seq_kind(const std::string& text);

/// Parameters (r, s) of x^2 - r x - s with roots alpha, beta, |alpha| >= |beta|.
///
/// Only constructible through validate_params(), so every instance satisfies
/// gcd(|r|,|s|) = 1, s != 0, Delta != 0 and alpha/beta not a root of unity.
class LucasParams {
 public:
  [[nodiscard]] std::int64_t r() const { return r_; }
  [[nodiscard]] std::int64_t s() const { return s_; }
  // Delta = r^2 + 4s.
  [[nodiscard]] const mpz_class& delta() const { return delta_; }
  [[nodiscard]] bool roots_real() const { return delta_ > 0; }
  [[nodiscard]] bool unit_norm() const { return s_ == 1 || s_ == -1; }
  // Enclosure of log|alpha| at the default precision.
  [[nodiscard]] const Interval& alpha_abs_log() const { return alpha_abs_log_; }

 private:
  friend LucasParams validate_params(std::int64_t r, std::int64_t s);
  LucasParams(std::int64_t r, std::int64_t s, mpz_class delta, Interval log_alpha)
      : r_(r), s_(s), delta_(std::move(delta)), alpha_abs_log_(std::move(log_alpha)) {}

  std::int64_t r_;
  std::int64_t s_;
  mpz_class delta_;
  Interval alpha_abs_log_;
};

// Throws Error{not_coprime | zero_discriminant | degenerate}.
LucasParams validate_params(std::int64_t r, std::int64_t s);

struct SeqTerm {
  std::uint64_t index = 0;
  mpz_class value;
  SeqKind kind = SeqKind::U;
};

// (U_n, V_n) by binary fast doubling.
std::pair<mpz_class, mpz_class> uv_at(const LucasParams& p, std::uint64_t n);

SeqTerm u_at(const LucasParams& p, std::uint64_t n);
SeqTerm v_at(const LucasParams& p, std::uint64_t n);
SeqTerm term_at(const LucasParams& p, SeqKind kind, std::uint64_t n);

// Enclosure of log|alpha|. Real roots: |alpha| = (|r| + sqrt(Delta))/2.
// Complex roots: log|alpha| = log|s| / 2.
Interval alpha_log(const LucasParams& p, Precision bits);

// Enclosure of log 2 + m(log m - 1), a lower bound for log(m!). m >= 2.
Interval stirling_log_factorial_lower(std::int64_t m, Precision bits = default_precision());

}  // namespace lucaspf
