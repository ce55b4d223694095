#pragma once

#include <cstdint>
#include <string>

#include "lucaspf/interval.hpp"

namespace lucaspf {

enum class Parity { even, odd, both };

enum class MnBoundVariant {
  real_eq5,            // real roots: phi*L - 2^(w-1)(log 2 + L)
  unit_eq55,           // s = +-1: phi*L - 1.28
  complex_trivial_f,   // f(n) <= 2^(w-1) log^2 n
  complex_voutier128,  // f(n) <= 128 log^2 n - 1886 log n + 7913
  complex_voutier64,   // f(n) <= 64 log^2 n - 775 log n + 2718
  lemma_gw,            // odd n, g_omega table
  lemma_hw,            // even n, h_omega table
};

enum class PhiBound { rosser_schoenfeld, omega_product, exact };

// Which roots the bound is allowed to assume.
enum class RootCase { general, real, unit };

// Lower bound used for log|alpha| in the worst case: c * log n.
enum class AlphaFloor { half, three_quarters };

std::string to_string(Parity parity);
std::string to_string(MnBoundVariant variant);
std::string to_string(PhiBound bound);
std::string to_string(RootCase root_case);
Parity parity_of(std::uint64_t n);

/// Everything a lower or upper bound for log M_n needs at one n.
struct BoundContext {
  std::uint64_t n = 0;
  Interval n_value;
  Interval logn;
  Interval loglogn;
  int omega = 1;
  Parity parity = Parity::both;
  Interval log_alpha;  // lower bound for log|alpha| (worst case)
  Interval phi;        // lower bound (or exact value) for phi(n)
  RootCase root_case = RootCase::general;
  // Subtract log n in real_eq5 / unit_eq55 (M_n >= |Phi_n| / n).
  bool divide_by_n = true;
};

// Builds a context; n >= 150. log_alpha defaults to the worst case c*log n.
BoundContext make_context(std::uint64_t n, int omega, Parity parity, const Interval& phi,
                          RootCase root_case, AlphaFloor floor, Precision bits);
BoundContext make_context(std::uint64_t n, int omega, Parity parity, const Interval& phi,
                          RootCase root_case, const Interval& log_alpha, Precision bits);

Interval alpha_floor(const Interval& logn, AlphaFloor floor);

// n / (e^gamma loglog n + 2.50637 / loglog n) <= phi(n), n >= 3.
Interval phi_lower_rs(std::uint64_t n, Precision bits = default_precision());

// n * prod (1 - 1/p_k) over the first `omega` primes, starting at 3 for odd.
Interval phi_lower_omega(std::uint64_t n, int omega, Parity parity,
                         Precision bits = default_precision());

// The phi(n) lower bound selected by `kind`.
Interval phi_bound(PhiBound kind, std::uint64_t n, int omega, Parity parity, Precision bits);

// floor of 1.3841 log n / loglog n (upper endpoint); omega(n) <= result. n >= 26.
int omega_upper(std::uint64_t n);

// 2x / (phi(n) log(x/n)), x > n.
Interval pi_ap_upper(double x, std::uint64_t n, Precision bits = default_precision());

// Upper bound for sum_{p <= m, p = +-1 (mod n)} log p / (p - 1); m >= n-1, n >= 150.
Interval logp_sum_upper(std::uint64_t m, std::uint64_t n, Parity parity,
                        Precision bits = default_precision());

enum class VoutierBranch { ab1, ab2 };

// The larger of the two lower bounds for log|alpha^m - beta^m|, m >= 3.
Interval voutier_pair_lower(const Interval& log_alpha, std::uint64_t m);
VoutierBranch voutier_branch(std::uint64_t m);

Interval g_omega(std::uint64_t n, int omega, Precision bits = default_precision());
Interval h_omega(std::uint64_t n, int omega, Precision bits = default_precision());

// Lower bound for log M_n under `variant`.
Interval mn_lower(MnBoundVariant variant, const BoundContext& ctx);

// Lemma bound: g_omega for odd n, h_omega for even n.
Interval mn_lower_lemma(const BoundContext& ctx);

// 4(1 + loglog n) n log|alpha| / phi(n): upper bound for log M_n when U_n is
// a product of factorials.
Interval mn_upper_sieve(const BoundContext& ctx);

// prod_{d>=1} (1 - g^{-2d}) / (1 + g^{-2d}) with g the golden ratio, with a
// rigorous tail enclosure.
Interval unit_case_product(Precision bits = default_precision());

}  // namespace lucaspf
