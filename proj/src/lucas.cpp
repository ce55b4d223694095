#include "lucaspf/lucas.hpp"

#include <bit>
#include <numeric>

namespace lucaspf {

std::string to_string(SeqKind kind) { return kind == SeqKind::U ? "U" : "V"; }

SeqKind parse_seq_kind(const std::string& text) {
  if (text == "U" || text == "u") return SeqKind::U;
  if (text == "V" || text == "v") return SeqKind::V;
  fail(ErrorCode::domain, "sequence kind must be U or V, got '" + text + "'");
}

LucasParams validate_params(std::int64_t r, std::int64_t s) {
  const mpz_class rz(std::to_string(r));
  const mpz_class sz(std::to_string(s));
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), rz.get_mpz_t(), sz.get_mpz_t());
  if (g != 1) {
    fail(ErrorCode::not_coprime, "gcd(|r|,|s|) = " + g.get_str() + " for (r,s) = (" +
                                     std::to_string(r) + "," + std::to_string(s) + ")");
  }
  const mpz_class delta = rz * rz + 4 * sz;
  if (delta == 0) fail(ErrorCode::zero_discriminant, "r^2 + 4s = 0");
  if (s == 0) fail(ErrorCode::degenerate, "s = 0 makes beta = 0");
  // alpha/beta is a root of unity iff r^2 / (-s) = 2 + 2cos(theta) is in {0,1,2,3,4}.
  const mpz_class r2 = rz * rz;
  for (int k = 0; k <= 4; ++k) {
    if (r2 == -k * sz) {
      fail(ErrorCode::degenerate, "r^2 = " + std::to_string(k) +
                                      "(-s): alpha/beta is a root of unity");
    }
  }
  auto p = LucasParams(r, s, delta, Interval(kPrecisionLadder.front()));
  p.alpha_abs_log_ = alpha_log(p, default_precision());
  return p;
}

std::pair<mpz_class, mpz_class> uv_at(const LucasParams& p, std::uint64_t n) {
  const mpz_class r(std::to_string(p.r()));
  const mpz_class q(std::to_string(-p.s()));  // q = alpha*beta
  const mpz_class& d = p.delta();
  mpz_class u = 0, v = 2, qk = 1;  // (U_k, V_k, q^k) for k = 0
  mpz_class u2, v2;
  for (int bit = std::bit_width(n) - 1; bit >= 0; --bit) {
    // k -> 2k
    u2 = u * v;
    v2 = v * v - 2 * qk;
    qk *= qk;
    u.swap(u2);
    v.swap(v2);
    if ((n >> bit) & 1U) {
      // 2k -> 2k+1
      u2 = r * u + v;
      v2 = d * u + r * v;
      mpz_divexact_ui(u.get_mpz_t(), u2.get_mpz_t(), 2);
      mpz_divexact_ui(v.get_mpz_t(), v2.get_mpz_t(), 2);
      qk *= q;
    }
  }
  return {u, v};
}

SeqTerm u_at(const LucasParams& p, std::uint64_t n) {
  return {n, uv_at(p, n).first, SeqKind::U};
}

SeqTerm v_at(const LucasParams& p, std::uint64_t n) {
  return {n, uv_at(p, n).second, SeqKind::V};
}

SeqTerm term_at(const LucasParams& p, SeqKind kind, std::uint64_t n) {
  return kind == SeqKind::U ? u_at(p, n) : v_at(p, n);
}

Interval alpha_log(const LucasParams& p, Precision bits) {
  if (p.roots_real()) {
    const mpz_class abs_r(std::to_string(p.r() < 0 ? -p.r() : p.r()));
    Interval alpha = (Interval::exact(abs_r, bits) + sqrt(Interval::exact(p.delta(), bits))) / 2;
    return log(alpha);
  }
  const std::int64_t abs_s = p.s() < 0 ? -p.s() : p.s();
  return log(Interval::exact(abs_s, bits)) / 2;
}

Interval stirling_log_factorial_lower(std::int64_t m, Precision bits) {
  if (m < 2) fail(ErrorCode::domain, "Stirling lower bound needs m >= 2, got " + std::to_string(m));
  const Interval mm = Interval::exact(m, bits);
  return Interval::ln2(bits) + mm * (log(mm) - 1);
}

}  // namespace lucaspf
