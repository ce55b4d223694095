#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lucaspf/bounds.hpp"
#include "lucaspf/lucas.hpp"

namespace lucaspf {

enum class OmegaPolicy {
  from_omega_upper,  // omega = omega_upper(n) at each n
  worst_case,        // a single evaluation at omega_max
  each,              // violated only if violated for every omega in [omega_min, omega_max]
};

/// One stage of the bound cascade, encoded as data.
///
/// The stage inequality is mn_lower(variant) <= mn_upper_sieve evaluated at
/// the worst-case log|alpha| = c*log n. A stage is "violated" at n when the
/// lower bound certifiably exceeds the upper bound, which rules n out.
struct StageConfig {
  std::string name;
  Parity parity = Parity::both;  // class scanned; `both` uses each n's own parity
  MnBoundVariant variant = MnBoundVariant::complex_trivial_f;  // lemma_* picks g or h by parity
  PhiBound phi_bound = PhiBound::rosser_schoenfeld;
  OmegaPolicy omega_policy = OmegaPolicy::from_omega_upper;
  int omega_min = 1;
  int omega_max_even = 0;  // largest omega for even n (worst_case/each)
  int omega_max_odd = 0;   // largest omega for odd n
  bool derive_omega = false;  // take omega_max from the previous stage's threshold
  RootCase root_case = RootCase::general;
  AlphaFloor floor = AlphaFloor::half;
  bool divide_by_n = true;
  bool exhaustive = false;  // scan every n instead of stride + bisection
  std::uint64_t scan_lower = 150;
  std::uint64_t domain_upper = 0;  // 0: previous stage's threshold
  std::int64_t paper_threshold = 0;
};

struct BoundStageReport {
  std::string stage_name;
  SeqKind sequence_kind = SeqKind::U;
  Parity parity = Parity::both;
  std::string omega_assumption;
  PhiBound phi_bound_used = PhiBound::rosser_schoenfeld;
  MnBoundVariant mn_lower_variant = MnBoundVariant::complex_trivial_f;
  std::int64_t computed_threshold = 0;
  std::int64_t paper_threshold = 0;
  bool decisive = false;
  // Crossing per omega value, for per-omega stages.
  std::vector<std::pair<int, std::int64_t>> per_omega;
};

struct CascadeResult {
  std::string case_label;  // general | real | unit
  SeqKind kind = SeqKind::U;
  std::vector<BoundStageReport> stages;
  std::int64_t final_bound = 0;
  std::int64_t stated_bound = 0;  // the theorem's envelope for this case
};

struct PipelineOptions {
  unsigned workers = 1;
  AlphaFloor floor = AlphaFloor::half;
  std::uint64_t scan_cap = 1'000'000'000'000'000'000ULL;
};

// Shipped stage lists reproducing the theorem's cascade.
std::vector<StageConfig> general_stage_configs(AlphaFloor floor = AlphaFloor::half);
std::vector<StageConfig> real_stage_configs(AlphaFloor floor = AlphaFloor::half);
StageConfig unit_stage_config(AlphaFloor floor = AlphaFloor::half);

// Throws DomainError for n < 150 or an under-specified omega range, and
// Undecidable if the comparison cannot be separated at 512 bits.
bool stage_violated(std::uint64_t n, const StageConfig& cfg);
// Same, with an explicit lower bound for log|alpha| instead of c*log n.
bool stage_violated(std::uint64_t n, const StageConfig& cfg, const Interval& log_alpha);

// Largest n in [cfg.scan_lower, upper] (in the stage's parity class) that the
// stage does not rule out; scan_lower - 1 if it rules out every n.
std::int64_t stage_threshold(const StageConfig& cfg, std::uint64_t upper, unsigned workers,
                             std::vector<std::pair<int, std::int64_t>>* per_omega = nullptr);

// Runs stages in order; each stage's domain ends at the previous threshold.
CascadeResult run_cascade(const std::vector<StageConfig>& stages, const std::string& case_label,
                          const PipelineOptions& opts);

CascadeResult run_general_cascade(SeqKind kind, const PipelineOptions& opts = {});
CascadeResult run_real_cascade(SeqKind kind, const PipelineOptions& opts = {});
CascadeResult run_unit_case(const LucasParams& p, SeqKind kind, const PipelineOptions& opts = {});

}  // namespace lucaspf
