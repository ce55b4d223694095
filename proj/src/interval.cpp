#include "lucaspf/interval.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <ostream>
#include <utility>

namespace lucaspf {

namespace {

Precision initial_precision() {
  if (const char* env = std::getenv("LUCASPF_PRECISION_BITS")) {
    char* end = nullptr;
    long bits = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && bits >= MPFR_PREC_MIN && bits <= 1 << 16) {
      return static_cast<Precision>(bits);
    }
  }
  return kPrecisionLadder.front();
}

std::atomic<Precision>& precision_slot() {
  static std::atomic<Precision> slot{initial_precision()};
  return slot;
}

// Temporary mpfr value with RAII cleanup.
struct Scratch {
  explicit Scratch(Precision bits) { mpfr_init2(v, bits); }
  ~Scratch() { mpfr_clear(v); }
  Scratch(const Scratch&) = delete;
  Scratch& operator=(const Scratch&) = delete;
  mpfr_t v;
};

void raise_precision(mpfr_t x, Precision bits) {
  if (mpfr_get_prec(x) < bits) mpfr_prec_round(x, bits, MPFR_RNDN);  // exact when widening
}

}  // namespace

Precision default_precision() { return precision_slot().load(std::memory_order_relaxed); }

void set_default_precision(Precision bits) {
  if (bits < MPFR_PREC_MIN) fail(ErrorCode::domain, "precision must be positive");
  precision_slot().store(bits, std::memory_order_relaxed);
}

Interval::Interval(Precision bits) {
  mpfr_init2(lo_, bits);
  mpfr_init2(hi_, bits);
  mpfr_set_zero(lo_, 1);
  mpfr_set_zero(hi_, 1);
}

Interval::Interval(long value, Precision bits) {
  mpfr_init2(lo_, bits);
  mpfr_init2(hi_, bits);
  mpfr_set_si(lo_, value, MPFR_RNDD);
  mpfr_set_si(hi_, value, MPFR_RNDU);
}

Interval::~Interval() {
  mpfr_clear(lo_);
  mpfr_clear(hi_);
}

Interval::Interval(const Interval& other) {
  mpfr_init2(lo_, other.precision());
  mpfr_init2(hi_, other.precision());
  mpfr_set(lo_, other.lo_, MPFR_RNDD);
  mpfr_set(hi_, other.hi_, MPFR_RNDU);
}

Interval::Interval(Interval&& other) noexcept {
  // Leave `other` as a valid (zero) interval of the same precision.
  mpfr_init2(lo_, other.precision());
  mpfr_init2(hi_, other.precision());
  mpfr_swap(lo_, other.lo_);
  mpfr_swap(hi_, other.hi_);
  mpfr_set_zero(other.lo_, 1);
  mpfr_set_zero(other.hi_, 1);
}

Interval& Interval::operator=(const Interval& other) {
  if (this == &other) return *this;
  mpfr_set_prec(lo_, other.precision());
  mpfr_set_prec(hi_, other.precision());
  mpfr_set(lo_, other.lo_, MPFR_RNDD);
  mpfr_set(hi_, other.hi_, MPFR_RNDU);
  return *this;
}

Interval& Interval::operator=(Interval&& other) noexcept {
  mpfr_swap(lo_, other.lo_);
  mpfr_swap(hi_, other.hi_);
  return *this;
}

Interval Interval::exact(const mpz_class& value, Precision bits) {
  Interval r(bits);
  mpfr_set_z(r.lo_, value.get_mpz_t(), MPFR_RNDD);
  mpfr_set_z(r.hi_, value.get_mpz_t(), MPFR_RNDU);
  return r;
}

Interval Interval::exact(std::int64_t value, Precision bits) {
  return exact(mpz_class(std::to_string(value)), bits);
}

Interval Interval::ratio(const mpz_class& num, const mpz_class& den, Precision bits) {
  if (den == 0) fail(ErrorCode::domain, "ratio with zero denominator");
  mpq_class q(num, den);
  q.canonicalize();
  Interval r(bits);
  mpfr_set_q(r.lo_, q.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(r.hi_, q.get_mpq_t(), MPFR_RNDU);
  return r;
}

Interval Interval::decimal(std::string_view text, Precision bits) {
  std::string s(text);
  Interval r(bits);
  if (mpfr_set_str(r.lo_, s.c_str(), 10, MPFR_RNDD) != 0 ||
      mpfr_set_str(r.hi_, s.c_str(), 10, MPFR_RNDU) != 0) {
    fail(ErrorCode::domain, "not a decimal literal: " + s);
  }
  return r;
}

Interval Interval::hull(const Interval& a, const Interval& b) {
  Interval r(std::max(a.precision(), b.precision()));
  mpfr_min(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
  mpfr_max(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
  return r;
}

Interval Interval::from_bounds(double lo, double hi, Precision bits) {
  if (!(lo <= hi)) fail(ErrorCode::domain, "interval bounds out of order");
  Interval r(bits);
  mpfr_set_d(r.lo_, lo, MPFR_RNDD);
  mpfr_set_d(r.hi_, hi, MPFR_RNDU);
  return r;
}

Interval Interval::euler_gamma(Precision bits) {
  Interval r(bits);
  mpfr_const_euler(r.lo_, MPFR_RNDD);
  mpfr_const_euler(r.hi_, MPFR_RNDU);
  return r;
}

Interval Interval::ln2(Precision bits) {
  Interval r(bits);
  mpfr_const_log2(r.lo_, MPFR_RNDD);
  mpfr_const_log2(r.hi_, MPFR_RNDU);
  return r;
}

double Interval::lower() const { return mpfr_get_d(lo_, MPFR_RNDD); }
double Interval::upper() const { return mpfr_get_d(hi_, MPFR_RNDU); }

double Interval::midpoint() const {
  Scratch s(precision() + 1);
  mpfr_add(s.v, lo_, hi_, MPFR_RNDN);
  mpfr_div_2ui(s.v, s.v, 1, MPFR_RNDN);
  return mpfr_get_d(s.v, MPFR_RNDN);
}

double Interval::width() const {
  Scratch s(precision());
  mpfr_sub(s.v, hi_, lo_, MPFR_RNDU);
  return mpfr_get_d(s.v, MPFR_RNDU);
}

bool Interval::contains(double x) const {
  return mpfr_cmp_d(lo_, x) <= 0 && mpfr_cmp_d(hi_, x) >= 0;
}

bool Interval::contains(const Interval& inner) const {
  return mpfr_lessequal_p(lo_, inner.lo_) && mpfr_greaterequal_p(hi_, inner.hi_);
}

bool Interval::certainly_less(const Interval& other) const { return mpfr_less_p(hi_, other.lo_); }
bool Interval::certainly_greater(const Interval& other) const { return mpfr_greater_p(lo_, other.hi_); }
bool Interval::certainly_positive() const { return mpfr_sgn(lo_) > 0; }
bool Interval::certainly_negative() const { return mpfr_sgn(hi_) < 0; }

std::string Interval::to_string(int digits) const {
  char* lo_text = nullptr;
  char* hi_text = nullptr;
  mpfr_asprintf(&lo_text, "%.*RDg", digits, lo_);
  mpfr_asprintf(&hi_text, "%.*RUg", digits, hi_);
  std::string out = "[" + std::string(lo_text) + ", " + std::string(hi_text) + "]";
  mpfr_free_str(lo_text);
  mpfr_free_str(hi_text);
  return out;
}

Interval& Interval::operator+=(const Interval& rhs) {
  raise_precision(lo_, rhs.precision());
  raise_precision(hi_, rhs.precision());
  mpfr_add(lo_, lo_, rhs.lo_, MPFR_RNDD);
  mpfr_add(hi_, hi_, rhs.hi_, MPFR_RNDU);
  return *this;
}

Interval& Interval::operator-=(const Interval& rhs) {
  raise_precision(lo_, rhs.precision());
  raise_precision(hi_, rhs.precision());
  if (this == &rhs) {
    Interval copy(rhs);
    return *this -= copy;
  }
  mpfr_sub(lo_, lo_, rhs.hi_, MPFR_RNDD);
  mpfr_sub(hi_, hi_, rhs.lo_, MPFR_RNDU);
  return *this;
}

namespace {

using BinaryOp = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_srcptr, mpfr_rnd_t);

// Evaluates op over the four endpoint pairs, keeping the outward extremes.
void corner_hull(mpfr_t lo, mpfr_t hi, mpfr_srcptr alo, mpfr_srcptr ahi, mpfr_srcptr blo,
                 mpfr_srcptr bhi, BinaryOp op) {
  const Precision bits = mpfr_get_prec(lo);
  Scratch down(bits), up(bits), best_lo(bits), best_hi(bits);
  mpfr_srcptr as[2] = {alo, ahi};
  mpfr_srcptr bs[2] = {blo, bhi};
  bool first = true;
  for (mpfr_srcptr a : as) {
    for (mpfr_srcptr b : bs) {
      op(down.v, a, b, MPFR_RNDD);
      op(up.v, a, b, MPFR_RNDU);
      if (first) {
        mpfr_set(best_lo.v, down.v, MPFR_RNDD);
        mpfr_set(best_hi.v, up.v, MPFR_RNDU);
        first = false;
      } else {
        mpfr_min(best_lo.v, best_lo.v, down.v, MPFR_RNDD);
        mpfr_max(best_hi.v, best_hi.v, up.v, MPFR_RNDU);
      }
    }
  }
  mpfr_set(lo, best_lo.v, MPFR_RNDD);
  mpfr_set(hi, best_hi.v, MPFR_RNDU);
}

}  // namespace

Interval& Interval::operator*=(const Interval& rhs) {
  raise_precision(lo_, rhs.precision());
  raise_precision(hi_, rhs.precision());
  Interval a(*this);
  corner_hull(lo_, hi_, a.lo_, a.hi_, rhs.lo_, rhs.hi_, mpfr_mul);
  return *this;
}

Interval& Interval::operator/=(const Interval& rhs) {
  if (mpfr_sgn(rhs.lo_) <= 0 && mpfr_sgn(rhs.hi_) >= 0) {
    fail(ErrorCode::domain, "interval division by an enclosure of zero " + rhs.to_string());
  }
  raise_precision(lo_, rhs.precision());
  raise_precision(hi_, rhs.precision());
  Interval a(*this);
  corner_hull(lo_, hi_, a.lo_, a.hi_, rhs.lo_, rhs.hi_, mpfr_div);
  return *this;
}

Interval operator-(const Interval& x) {
  Interval r(x.precision());
  mpfr_neg(r.lo_, x.hi_, MPFR_RNDD);
  mpfr_neg(r.hi_, x.lo_, MPFR_RNDU);
  return r;
}

Interval log(const Interval& x) {
  if (mpfr_sgn(x.lo_) <= 0) fail(ErrorCode::domain, "log of non-positive enclosure " + x.to_string());
  Interval r(x.precision());
  mpfr_log(r.lo_, x.lo_, MPFR_RNDD);
  mpfr_log(r.hi_, x.hi_, MPFR_RNDU);
  return r;
}

Interval exp(const Interval& x) {
  Interval r(x.precision());
  mpfr_exp(r.lo_, x.lo_, MPFR_RNDD);
  mpfr_exp(r.hi_, x.hi_, MPFR_RNDU);
  return r;
}

Interval sqrt(const Interval& x) {
  if (mpfr_sgn(x.lo_) < 0) fail(ErrorCode::domain, "sqrt of negative enclosure " + x.to_string());
  Interval r(x.precision());
  mpfr_sqrt(r.lo_, x.lo_, MPFR_RNDD);
  mpfr_sqrt(r.hi_, x.hi_, MPFR_RNDU);
  return r;
}

Interval square(const Interval& x) { return pow(x, 2); }

Interval pow(const Interval& x, unsigned k) {
  Interval r(x.precision());
  if (k == 0) return Interval(1, x.precision());
  const bool even = k % 2 == 0;
  if (mpfr_sgn(x.lo_) >= 0 || !even) {
    mpfr_pow_ui(r.lo_, x.lo_, k, MPFR_RNDD);
    mpfr_pow_ui(r.hi_, x.hi_, k, MPFR_RNDU);
  } else if (mpfr_sgn(x.hi_) <= 0) {
    mpfr_pow_ui(r.lo_, x.hi_, k, MPFR_RNDD);
    mpfr_pow_ui(r.hi_, x.lo_, k, MPFR_RNDU);
  } else {
    Scratch a(x.precision()), b(x.precision());
    mpfr_pow_ui(a.v, x.lo_, k, MPFR_RNDU);
    mpfr_pow_ui(b.v, x.hi_, k, MPFR_RNDU);
    mpfr_set_zero(r.lo_, 1);
    mpfr_max(r.hi_, a.v, b.v, MPFR_RNDU);
  }
  return r;
}

Interval max(const Interval& a, const Interval& b) {
  Interval r(std::max(a.precision(), b.precision()));
  mpfr_max(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
  mpfr_max(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
  return r;
}

Interval min(const Interval& a, const Interval& b) {
  Interval r(std::max(a.precision(), b.precision()));
  mpfr_min(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
  mpfr_min(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
  return r;
}

Interval log_abs(const mpz_class& v, Precision bits) {
  if (v == 0) fail(ErrorCode::domain, "log|0|");
  mpz_class a = abs(v);
  return log(Interval::exact(a, bits));
}

std::ostream& operator<<(std::ostream& os, const Interval& x) { return os << x.to_string(); }

}  // namespace lucaspf
