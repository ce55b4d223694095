#include "lucaspf/bounds.hpp"

#include <string>

#include "lucaspf/arithmetic.hpp"
#include "lucaspf/error.hpp"

namespace lucaspf {

namespace {

Interval dec(const char* literal, Precision bits) { return Interval::decimal(literal, bits); }

Interval num(std::uint64_t v, Precision bits) {
  return Interval::exact(static_cast<std::int64_t>(v), bits);
}

// 2^k for k >= -1 as an exact interval.
Interval two_pow(int k, Precision bits) {
  if (k >= 0) return Interval::exact(std::int64_t{1} << k, bits);
  return Interval::ratio(1, mpz_class(1) << -k, bits);
}

// a*l^2 - b*l + c with literal coefficients.
Interval quadratic(const Interval& l, const char* a, const char* b, const char* c) {
  const Precision bits = l.precision();
  return dec(a, bits) * square(l) - dec(b, bits) * l + dec(c, bits);
}

}  // namespace

std::string to_string(Parity parity) {
  switch (parity) {
    case Parity::even: return "even";
    case Parity::odd: return "odd";
    case Parity::both: return "both";
  }
  return "?";
}

std::string to_string(MnBoundVariant variant) {
  switch (variant) {
    case MnBoundVariant::real_eq5: return "real_eq5";
    case MnBoundVariant::unit_eq55: return "unit_eq55";
    case MnBoundVariant::complex_trivial_f: return "complex_trivial_f";
    case MnBoundVariant::complex_voutier128: return "complex_voutier128";
    case MnBoundVariant::complex_voutier64: return "complex_voutier64";
    case MnBoundVariant::lemma_gw: return "lemma_gw";
    case MnBoundVariant::lemma_hw: return "lemma_hw";
  }
  return "?";
}

std::string to_string(PhiBound bound) {
  switch (bound) {
    case PhiBound::rosser_schoenfeld: return "rosser_schoenfeld";
    case PhiBound::omega_product: return "omega_product";
    case PhiBound::exact: return "exact";
  }
  return "?";
}

std::string to_string(RootCase root_case) {
  switch (root_case) {
    case RootCase::general: return "general";
    case RootCase::real: return "real";
    case RootCase::unit: return "unit";
  }
  return "?";
}

Parity parity_of(std::uint64_t n) { return n % 2 == 0 ? Parity::even : Parity::odd; }

Interval alpha_floor(const Interval& logn, AlphaFloor floor) {
  return floor == AlphaFloor::half ? logn / 2 : logn * 3 / 4;
}

BoundContext make_context(std::uint64_t n, int omega, Parity parity, const Interval& phi,
                          RootCase root_case, const Interval& log_alpha, Precision bits) {
  if (n < 150) fail(ErrorCode::domain, "bound context needs n >= 150, got " + std::to_string(n));
  if (omega < 1) fail(ErrorCode::domain, "omega must be >= 1");
  BoundContext ctx;
  ctx.n = n;
  ctx.n_value = num(n, bits);
  ctx.logn = log(ctx.n_value);
  ctx.loglogn = log(ctx.logn);
  ctx.omega = omega;
  ctx.parity = parity;
  ctx.log_alpha = log_alpha;
  ctx.phi = phi;
  ctx.root_case = root_case;
  return ctx;
}

BoundContext make_context(std::uint64_t n, int omega, Parity parity, const Interval& phi,
                          RootCase root_case, AlphaFloor floor, Precision bits) {
  if (n < 150) fail(ErrorCode::domain, "bound context needs n >= 150, got " + std::to_string(n));
  return make_context(n, omega, parity, phi, root_case, alpha_floor(log(num(n, bits)), floor),
                      bits);
}

Interval phi_lower_rs(std::uint64_t n, Precision bits) {
  if (n < 3) fail(ErrorCode::domain, "phi_lower_rs needs n >= 3");
  const Interval nn = num(n, bits);
  const Interval ll = log(log(nn));
  return nn / (exp(Interval::euler_gamma(bits)) * ll + dec("2.50637", bits) / ll);
}

Interval phi_lower_omega(std::uint64_t n, int omega, Parity parity, Precision bits) {
  if (omega < 1) fail(ErrorCode::domain, "phi_lower_omega needs omega >= 1");
  mpz_class numer = static_cast<unsigned long>(n);
  mpz_class denom = 1;
  std::uint64_t p = parity == Parity::odd ? 2 : 1;
  for (int k = 0; k < omega; ++k) {
    p = next_prime(p);
    numer *= static_cast<unsigned long>(p - 1);
    denom *= static_cast<unsigned long>(p);
  }
  return Interval::ratio(numer, denom, bits);
}

Interval phi_bound(PhiBound kind, std::uint64_t n, int omega, Parity parity, Precision bits) {
  switch (kind) {
    case PhiBound::rosser_schoenfeld: return phi_lower_rs(n, bits);
    case PhiBound::omega_product: return phi_lower_omega(n, omega, parity, bits);
    case PhiBound::exact: return num(euler_phi(n), bits);
  }
  fail(ErrorCode::domain, "unknown phi bound");
}

int omega_upper(std::uint64_t n) {
  if (n < 26) fail(ErrorCode::domain, "omega_upper needs n >= 26");
  const Precision bits = default_precision();
  const Interval logn = log(num(n, bits));
  const Interval bound = dec("1.3841", bits) * logn / log(logn);
  return static_cast<int>(mpfr_get_si(bound.hi(), MPFR_RNDD));
}

Interval pi_ap_upper(double x, std::uint64_t n, Precision bits) {
  if (!(x > static_cast<double>(n))) fail(ErrorCode::domain, "pi_ap_upper needs x > n");
  const Interval xx = Interval::from_bounds(x, x, bits);
  const Interval phi = num(euler_phi(n), bits);
  return 2 * xx / (phi * log(xx / num(n, bits)));
}

Interval logp_sum_upper(std::uint64_t m, std::uint64_t n, Parity parity, Precision bits) {
  if (n < 150) fail(ErrorCode::domain, "logp_sum_upper needs n >= 150");
  if (m + 1 < n) fail(ErrorCode::domain, "logp_sum_upper needs m >= n - 1");
  const Interval nn = num(n, bits);
  const Interval phi = num(euler_phi(n), bits);
  const Interval loglogn = log(log(nn));
  const bool beyond_square = static_cast<unsigned __int128>(m) >=
                             static_cast<unsigned __int128>(n) * n;
  const Interval bracket = beyond_square ? 1 + loglogn / 2 : 1 + loglogn;
  const Interval main = 4 * (log(num(m, bits)) - 1) / phi * bracket;
  const Interval three_n = 3 * nn;
  const Interval small =
      dec(parity == Parity::odd ? "3.1" : "10.1", bits) * log(three_n) / three_n;
  return main + small;
}

VoutierBranch voutier_branch(std::uint64_t m) {
  if (m < 3) fail(ErrorCode::domain, "voutier bounds need m >= 3");
  const Precision bits = kPrecisionLadder.back();
  const Interval reduced = num(m % 2 == 0 ? m / 2 : m, bits);
  const Interval loss1 = reduced + Interval::ln2(bits) / 4 + dec("0.02", bits);
  const Interval loss2 = 73 * square(log(reduced));
  return loss1.certainly_greater(loss2) ? VoutierBranch::ab2 : VoutierBranch::ab1;
}

Interval voutier_pair_lower(const Interval& log_alpha, std::uint64_t m) {
  if (m < 3) fail(ErrorCode::domain, "voutier bounds need m >= 3");
  const Precision bits = log_alpha.precision();
  const Interval mm = num(m, bits);
  const Interval reduced = num(m % 2 == 0 ? m / 2 : m, bits);
  const Interval ab1 =
      mm * log_alpha - (reduced + Interval::ln2(bits) / 4 + dec("0.02", bits)) * log_alpha;
  const Interval ab2 = mm * log_alpha - 73 * log_alpha * square(log(reduced));
  return max(ab1, ab2);
}

Interval g_omega(std::uint64_t n, int omega, Precision bits) {
  if (omega < 1 || omega > 6) fail(ErrorCode::domain, "g_omega is tabulated for 1 <= omega <= 6");
  const Interval nn = num(n, bits);
  const Interval l = log(nn);
  switch (omega) {
    case 6:
      return 73 * quadratic(l, "11", "87.5", "194.1") + dec("0.0027", bits) * nn + dec("3.1", bits);
    case 5:
      return 73 * quadratic(l, "7", "49.1", "101.6") + nn / 1155 + dec("0.2", bits);
    case 4: return 73 * quadratic(l, "4", "22.6", "43.1");
    case 3: return 73 * quadratic(l, "2", "6.8", "11.6");
    default: return 73 * square(l);
  }
}

Interval h_omega(std::uint64_t n, int omega, Precision bits) {
  if (omega < 1 || omega > 7) fail(ErrorCode::domain, "h_omega is tabulated for 1 <= omega <= 7");
  const Interval nn = num(n, bits);
  const Interval l = log(nn / 2);
  switch (omega) {
    case 7:
      return 73 * quadratic(l, "16", "139", "327") + dec("0.0032", bits) * nn + dec("3.1", bits);
    case 6:
      return 73 * quadratic(l, "11", "87.5", "194.1") + dec("0.002", bits) * nn +
             dec("0.97", bits);
    case 5:
      return 73 * quadratic(l, "7", "49.1", "101.6") + dec("0.0005", bits) * nn +
             dec("0.2", bits);
    case 4: return 73 * quadratic(l, "4", "22.6", "43.1");
    case 3: return 73 * quadratic(l, "2", "6.8", "11.6");
    default: return 73 * square(l);
  }
}

Interval mn_lower(MnBoundVariant variant, const BoundContext& ctx) {
  const Precision bits = ctx.logn.precision();
  const Interval& L = ctx.log_alpha;
  const Interval& logn = ctx.logn;
  const Interval ln2 = Interval::ln2(bits);
  const Interval phi_minus_one = ctx.phi - 1;
  const int w = ctx.omega;
  switch (variant) {
    case MnBoundVariant::real_eq5: {
      if (ctx.root_case == RootCase::general) {
        fail(ErrorCode::domain, "real_eq5 needs real roots");
      }
      Interval v = ctx.phi * L - two_pow(w - 1, bits) * (ln2 + L);
      return ctx.divide_by_n ? v - logn : v;
    }
    case MnBoundVariant::unit_eq55: {
      if (ctx.root_case != RootCase::unit) fail(ErrorCode::domain, "unit_eq55 needs s = +-1");
      Interval v = ctx.phi * L - dec("1.28", bits);
      return ctx.divide_by_n ? v - logn : v;
    }
    case MnBoundVariant::complex_trivial_f:
      return phi_minus_one * L - logn - two_pow(w - 1, bits) * (ln2 + 73 * L * square(logn));
    case MnBoundVariant::complex_voutier128:
      return phi_minus_one * L - logn - two_pow(w - 1, bits) * ln2 -
             73 * L * quadratic(logn, "128", "1886", "7913");
    case MnBoundVariant::complex_voutier64:
      return phi_minus_one * L - logn - two_pow(w - 1, bits) * ln2 -
             73 * L * quadratic(logn, "64", "775", "2718");
    case MnBoundVariant::lemma_gw:
    case MnBoundVariant::lemma_hw: {
      const bool odd = variant == MnBoundVariant::lemma_gw;
      if (ctx.parity != (odd ? Parity::odd : Parity::even)) {
        fail(ErrorCode::domain, to_string(variant) + " does not apply to parity " +
                                    to_string(ctx.parity));
      }
      return mn_lower_lemma(ctx);
    }
  }
  fail(ErrorCode::domain, "unknown variant");
}

Interval mn_lower_lemma(const BoundContext& ctx) {
  const Precision bits = ctx.logn.precision();
  const Interval& L = ctx.log_alpha;
  const int w = ctx.omega;
  const Interval common =
      (ctx.phi - 1) * L - two_pow(w - 2, bits) * Interval::ln2(bits);
  switch (ctx.parity) {
    case Parity::odd: {
      const Interval log_coeff = 1 + two_pow(w, bits) / (4 * w);
      return common - log_coeff * ctx.logn - g_omega(ctx.n, w, bits) * L;
    }
    case Parity::even:
      return common - ctx.logn - h_omega(ctx.n, w, bits) * L;
    case Parity::both: break;
  }
  fail(ErrorCode::domain, "the lemma bound needs a definite parity");
}

Interval mn_upper_sieve(const BoundContext& ctx) {
  return 4 * (1 + ctx.loglogn) * ctx.n_value * ctx.log_alpha / ctx.phi;
}

Interval unit_case_product(Precision bits) {
  const Interval x = (3 - sqrt(Interval(5, bits))) / 2;  // golden ratio^-2
  const unsigned terms = static_cast<unsigned>(bits);
  Interval product(1, bits);
  Interval xd = x;
  for (unsigned d = 1; d <= terms; ++d) {
    product *= (1 - xd) / (1 + xd);
    xd *= x;
  }
  // Remaining factors lie in [exp(-S), 1] with
  // S = sum_{d>D} 2x^d/(1-x^d) <= 2x^(D+1) / ((1-x)(1-x^(D+1))).
  const Interval tail_sum = 2 * xd / ((1 - x) * (1 - xd));
  const Interval tail = Interval::hull(exp(-tail_sum), Interval(1, bits));
  return product * tail;
}

}  // namespace lucaspf
