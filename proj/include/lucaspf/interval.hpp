#pragma once

#include <mpfr.h>
#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include "lucaspf/error.hpp"

namespace lucaspf {

using Precision = mpfr_prec_t;

// Precision ladder used by every inequality decider.
inline constexpr std::array<Precision, 4> kPrecisionLadder{64, 128, 256, 512};

// Default working precision in bits. Reads LUCASPF_PRECISION_BITS once;
// falls back to 64.
Precision default_precision();
void set_default_precision(Precision bits);

/// Closed real interval [lo, hi] with endpoints rounded outward.
///
/// Every arithmetic operation rounds the lower endpoint toward -inf and the
/// upper endpoint toward +inf, so the true real value of any expression
/// evaluated on Intervals is contained in the result. The result of a binary
/// operation carries the larger of the two operand precisions.
class Interval {
 public:
  explicit Interval(Precision bits = default_precision());
  Interval(long value, Precision bits);
  ~Interval();

  Interval(const Interval& other);
  Interval(Interval&& other) noexcept;
  Interval& operator=(const Interval& other);
  Interval& operator=(Interval&& other) noexcept;

  static Interval exact(const mpz_class& value, Precision bits);
  static Interval exact(std::int64_t value, Precision bits);
  // Enclosure of num/den.
  static Interval ratio(const mpz_class& num, const mpz_class& den, Precision bits);
  // Enclosure of a decimal literal such as "2.50637" or "1e-3".
  static Interval decimal(std::string_view text, Precision bits);
  static Interval hull(const Interval& a, const Interval& b);
  // Builds [lo, hi] from doubles taken as exact binary values.
  static Interval from_bounds(double lo, double hi, Precision bits);

  static Interval euler_gamma(Precision bits);
  static Interval ln2(Precision bits);

  [[nodiscard]] Precision precision() const { return mpfr_get_prec(lo_); }

  // Endpoints rounded outward to double.
  [[nodiscard]] double lower() const;
  [[nodiscard]] double upper() const;
  [[nodiscard]] double midpoint() const;
  // hi - lo, rounded up.
  [[nodiscard]] double width() const;

  [[nodiscard]] bool contains(double x) const;
  [[nodiscard]] bool contains(const Interval& inner) const;

  // Certified comparisons: true only when the enclosures are separated.
  [[nodiscard]] bool certainly_less(const Interval& other) const;
  [[nodiscard]] bool certainly_greater(const Interval& other) const;
  [[nodiscard]] bool certainly_positive() const;
  [[nodiscard]] bool certainly_negative() const;

  // Raw endpoint access for code that needs full precision.
  [[nodiscard]] mpfr_srcptr lo() const { return lo_; }
  [[nodiscard]] mpfr_srcptr hi() const { return hi_; }

  // Decimal rendering of the endpoints with `digits` significant digits.
  [[nodiscard]] std::string to_string(int digits = 12) const;

  Interval& operator+=(const Interval& rhs);
  Interval& operator-=(const Interval& rhs);
  Interval& operator*=(const Interval& rhs);
  Interval& operator/=(const Interval& rhs);

  friend Interval operator-(const Interval& x);
  friend Interval log(const Interval& x);
  friend Interval exp(const Interval& x);
  friend Interval sqrt(const Interval& x);
  friend Interval square(const Interval& x);
  friend Interval pow(const Interval& x, unsigned k);
  friend Interval max(const Interval& a, const Interval& b);
  friend Interval min(const Interval& a, const Interval& b);

 private:
  mpfr_t lo_;
  mpfr_t hi_;
};

inline Interval operator+(Interval a, const Interval& b) { return a += b; }
inline Interval operator-(Interval a, const Interval& b) { return a -= b; }
inline Interval operator*(Interval a, const Interval& b) { return a *= b; }
inline Interval operator/(Interval a, const Interval& b) { return a /= b; }

inline Interval operator+(Interval a, long b) { return a += Interval(b, a.precision()); }
inline Interval operator-(Interval a, long b) { return a -= Interval(b, a.precision()); }
inline Interval operator*(Interval a, long b) { return a *= Interval(b, a.precision()); }
inline Interval operator/(Interval a, long b) { return a /= Interval(b, a.precision()); }
inline Interval operator*(long a, Interval b) { return b *= Interval(a, b.precision()); }
inline Interval operator-(long a, const Interval& b) { return Interval(a, b.precision()) - b; }
inline Interval operator+(long a, Interval b) { return b += Interval(a, b.precision()); }

Interval log(const Interval& x);
Interval exp(const Interval& x);
Interval sqrt(const Interval& x);
Interval square(const Interval& x);
Interval pow(const Interval& x, unsigned k);
Interval max(const Interval& a, const Interval& b);
Interval min(const Interval& a, const Interval& b);

// log|v| for a nonzero integer, enclosed at `bits`.
Interval log_abs(const mpz_class& v, Precision bits);

std::ostream& operator<<(std::ostream& os, const Interval& x);

enum class Decision { yes, no, unknown };

// Runs `decide(bits)` along the precision ladder until it returns yes or no.
// Throws Undecidable (with `context`) if every rung is inconclusive.
template <typename Decider>
bool decide_with_escalation(Decider&& decide, std::string_view context) {
  for (Precision bits : kPrecisionLadder) {
    switch (decide(bits)) {
      case Decision::yes: return true;
      case Decision::no: return false;
      case Decision::unknown: break;
    }
  }
  fail(ErrorCode::undecidable, std::string(context) + " is not decided at 512 bits");
}

}  // namespace lucaspf
