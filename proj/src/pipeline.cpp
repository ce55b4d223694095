#include "lucaspf/pipeline.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "lucaspf/arithmetic.hpp"
#include "lucaspf/error.hpp"
#include "lucaspf/parallel.hpp"

namespace lucaspf {
namespace {

constexpr std::int64_t kGeneralStated = 300000;
constexpr std::int64_t kRealStated = 210;
constexpr std::int64_t kUnitStated = 150;
constexpr std::uint64_t kRealDomain = 300000;

bool is_lemma(MnBoundVariant v) {
  return v == MnBoundVariant::lemma_gw || v == MnBoundVariant::lemma_hw;
}

int lemma_table_max(Parity parity) { return parity == Parity::odd ? 6 : 7; }

// Parity the bound formulas see at n.
Parity eval_parity(const StageConfig& cfg, std::uint64_t n) {
  if (is_lemma(cfg.variant) && cfg.parity == Parity::both) return parity_of(n);
  return cfg.parity;
}

int omega_max_for(const StageConfig& cfg, Parity parity) {
  switch (parity) {
    case Parity::even: return cfg.omega_max_even;
    case Parity::odd: return cfg.omega_max_odd;
    case Parity::both: break;
  }
  return std::max(cfg.omega_max_even, cfg.omega_max_odd);
}

// One evaluation of the stage inequality at fixed omega.
bool violated_at(std::uint64_t n, const StageConfig& cfg, Parity parity, int omega,
                 const std::optional<Interval>& log_alpha) {
  const MnBoundVariant variant =
      is_lemma(cfg.variant)
          ? (parity == Parity::odd ? MnBoundVariant::lemma_gw : MnBoundVariant::lemma_hw)
          : cfg.variant;
  auto decide = [&](Precision bits) {
    const Interval phi = phi_bound(cfg.phi_bound, n, omega, parity, bits);
    BoundContext ctx =
        log_alpha ? make_context(n, omega, parity, phi, cfg.root_case, *log_alpha, bits)
                  : make_context(n, omega, parity, phi, cfg.root_case, cfg.floor, bits);
    ctx.divide_by_n = cfg.divide_by_n;
    const Interval lower = mn_lower(variant, ctx);
    const Interval upper = mn_upper_sieve(ctx);
    if (lower.certainly_greater(upper)) return Decision::yes;
    if (lower.certainly_less(upper)) return Decision::no;
    return Decision::unknown;
  };
  return decide_with_escalation(
      decide, cfg.name + " at n=" + std::to_string(n) + ", omega=" + std::to_string(omega));
}

bool violated(std::uint64_t n, const StageConfig& cfg, const std::optional<Interval>& log_alpha) {
  if (n < 150) fail(ErrorCode::domain, "stages apply to n >= 150, got " + std::to_string(n));
  const Parity parity = eval_parity(cfg, n);
  if (cfg.omega_policy == OmegaPolicy::from_omega_upper) {
    return violated_at(n, cfg, parity, omega_upper(n), log_alpha);
  }
  const int omax = omega_max_for(cfg, parity);
  if (omax < 1) fail(ErrorCode::domain, cfg.name + " has no omega range for this parity");
  if (cfg.omega_policy == OmegaPolicy::worst_case) {
    return violated_at(n, cfg, parity, omax, log_alpha);
  }
  for (int w = cfg.omega_min; w <= omax; ++w) {
    if (!violated_at(n, cfg, parity, w, log_alpha)) return false;
  }
  return true;
}

/// Integers of one parity class inside [lo, hi], addressed by index.
struct ClassRange {
  Parity cls;
  std::uint64_t first_index = 0;
  std::uint64_t last_index = 0;
  bool empty = true;

  ClassRange(Parity c, std::uint64_t lo, std::uint64_t hi) : cls(c) {
    if (lo > hi) return;
    std::uint64_t a = index_at_or_above(lo);
    std::uint64_t b = index_at_or_below(hi);
    if (at(a) > hi || a > b) return;
    first_index = a;
    last_index = b;
    empty = false;
  }
  [[nodiscard]] std::uint64_t at(std::uint64_t i) const {
    switch (cls) {
      case Parity::even: return 2 * i;
      case Parity::odd: return 2 * i + 1;
      case Parity::both: break;
    }
    return i;
  }
  [[nodiscard]] std::uint64_t index_at_or_above(std::uint64_t n) const {
    switch (cls) {
      case Parity::even: return (n + 1) / 2;
      case Parity::odd: return n / 2;
      case Parity::both: break;
    }
    return n;
  }
  [[nodiscard]] std::uint64_t index_at_or_below(std::uint64_t n) const {
    switch (cls) {
      case Parity::even: return n / 2;
      case Parity::odd: return n == 0 ? 0 : (n - 1) / 2;
      case Parity::both: break;
    }
    return n;
  }
};

using Predicate = std::function<bool(std::uint64_t)>;

// Smallest n in [lo, hi] with omega_upper(n) >= k, for every k that changes
// inside the range.
std::vector<std::uint64_t> omega_upper_breakpoints(std::uint64_t lo, std::uint64_t hi) {
  std::vector<std::uint64_t> out;
  lo = std::max<std::uint64_t>(lo, 26);
  if (lo > hi) return out;
  const int k_lo = omega_upper(lo);
  const int k_hi = omega_upper(hi);
  for (int k = k_lo + 1; k <= k_hi; ++k) {
    std::uint64_t a = lo, b = hi;  // omega_upper(a) < k <= omega_upper(b)
    while (b - a > 1) {
      const std::uint64_t m = a + (b - a) / 2;
      (omega_upper(m) >= k ? b : a) = m;
    }
    out.push_back(b);
  }
  return out;
}

// Largest n in the class range where pred(n) is false, assuming pred is
// monotone between consecutive sample points. lo - 1 when pred holds
// everywhere.
std::int64_t crossing(const ClassRange& range, std::uint64_t lo, const Predicate& pred,
                      bool exhaustive, const std::vector<std::uint64_t>& breakpoints,
                      unsigned workers) {
  const auto none = static_cast<std::int64_t>(lo) - 1;
  if (range.empty) return none;

  std::vector<std::uint64_t> samples;
  if (exhaustive) {
    for (std::uint64_t i = range.last_index + 1; i-- > range.first_index;) samples.push_back(i);
  } else {
    std::uint64_t i = range.last_index;
    while (i > range.first_index) {
      samples.push_back(i);
      i -= std::min<std::uint64_t>(std::max<std::uint64_t>(1, i / 256), i - range.first_index);
    }
    samples.push_back(range.first_index);
    for (std::uint64_t bp : breakpoints) {
      for (std::uint64_t n : {bp, bp - 1}) {
        if (n < range.at(range.first_index) || n > range.at(range.last_index)) continue;
        samples.push_back(range.index_at_or_below(n));
        samples.push_back(range.index_at_or_above(n));
      }
    }
    std::sort(samples.begin(), samples.end(), std::greater<>());
    samples.erase(std::unique(samples.begin(), samples.end()), samples.end());
    while (!samples.empty() && samples.back() < range.first_index) samples.pop_back();
  }

  const std::size_t window = std::max<std::size_t>(1, workers) * 8;
  for (std::size_t start = 0; start < samples.size(); start += window) {
    const std::size_t count = std::min(window, samples.size() - start);
    std::vector<char> result(count, 0);
    parallel_for(count, workers,
                 [&](std::size_t k) { result[k] = pred(range.at(samples[start + k])) ? 1 : 0; });
    for (std::size_t k = 0; k < count; ++k) {
      if (result[k]) continue;
      const std::size_t pos = start + k;
      if (pos == 0) return static_cast<std::int64_t>(range.at(samples[0]));
      std::uint64_t good = samples[pos];
      std::uint64_t bad = samples[pos - 1];
      while (bad - good > 1) {
        const std::uint64_t mid = good + (bad - good) / 2;
        (pred(range.at(mid)) ? bad : good) = mid;
      }
      return static_cast<std::int64_t>(range.at(good));
    }
  }
  return none;
}

std::string omega_label(const StageConfig& cfg) {
  if (cfg.omega_policy == OmegaPolicy::from_omega_upper) return "omega_upper(n)";
  auto range = [&](int lo, int hi) {
    if (lo == hi) return "=" + std::to_string(hi);
    if (lo == 1) return "<=" + std::to_string(hi);
    return std::to_string(lo) + ".." + std::to_string(hi);
  };
  const int lo = cfg.omega_policy == OmegaPolicy::each ? cfg.omega_min : 0;
  auto one = [&](int hi) { return lo == 0 ? "<=" + std::to_string(hi) : range(lo, hi); };
  if (cfg.parity == Parity::both && is_lemma(cfg.variant)) {
    return "even" + one(cfg.omega_max_even) + ",odd" + one(cfg.omega_max_odd);
  }
  return one(omega_max_for(cfg, cfg.parity));
}

BoundStageReport blank_report(const StageConfig& cfg) {
  BoundStageReport r;
  r.stage_name = cfg.name;
  r.parity = cfg.parity;
  r.phi_bound_used = cfg.phi_bound;
  r.mn_lower_variant = cfg.variant;
  r.paper_threshold = cfg.paper_threshold;
  return r;
}

CascadeResult halve_for_v(CascadeResult res) {
  res.kind = SeqKind::V;
  for (auto& st : res.stages) {
    st.sequence_kind = SeqKind::V;
    st.computed_threshold /= 2;
    st.paper_threshold /= 2;
    for (auto& [w, t] : st.per_omega) t /= 2;
  }
  res.final_bound /= 2;
  res.stated_bound /= 2;
  return res;
}

StageConfig lemma_stage(std::string name, Parity parity, std::int64_t paper, AlphaFloor floor) {
  StageConfig c;
  c.name = std::move(name);
  c.parity = parity;
  c.variant = parity == Parity::odd ? MnBoundVariant::lemma_gw : MnBoundVariant::lemma_hw;
  c.phi_bound = PhiBound::omega_product;
  c.omega_policy = OmegaPolicy::each;
  c.derive_omega = true;
  c.floor = floor;
  c.paper_threshold = paper;
  return c;
}

}  // namespace

std::vector<StageConfig> general_stage_configs(AlphaFloor floor) {
  std::vector<StageConfig> out;

  StageConfig s1;
  s1.name = "rosser-schoenfeld";
  s1.variant = MnBoundVariant::complex_trivial_f;
  s1.phi_bound = PhiBound::rosser_schoenfeld;
  s1.omega_policy = OmegaPolicy::from_omega_upper;
  s1.floor = floor;
  s1.paper_threshold = 18'000'000;
  out.push_back(s1);

  StageConfig s2;
  s2.name = "voutier-128";
  s2.variant = MnBoundVariant::complex_voutier128;
  s2.phi_bound = PhiBound::omega_product;
  s2.omega_policy = OmegaPolicy::worst_case;
  s2.derive_omega = true;
  s2.floor = floor;
  s2.paper_threshold = 3'900'000;
  out.push_back(s2);

  StageConfig s3 = s2;
  s3.name = "voutier-64";
  s3.variant = MnBoundVariant::complex_voutier64;
  s3.paper_threshold = 1'852'000;
  out.push_back(s3);

  out.push_back(lemma_stage("lemma", Parity::both, 500'000, floor));
  out.push_back(lemma_stage("lemma-even", Parity::even, 270'000, floor));
  out.push_back(lemma_stage("lemma-odd", Parity::odd, 150'000, floor));
  return out;
}

std::vector<StageConfig> real_stage_configs(AlphaFloor floor) {
  auto row = [floor](std::string name, int lo, int hi, std::int64_t paper) {
    StageConfig c;
    c.name = std::move(name);
    c.variant = MnBoundVariant::real_eq5;
    c.phi_bound = PhiBound::omega_product;
    c.omega_policy = OmegaPolicy::each;
    c.omega_min = lo;
    c.omega_max_even = hi;
    c.omega_max_odd = hi;
    c.root_case = RootCase::real;
    c.floor = floor;
    c.divide_by_n = false;
    c.domain_upper = kRealDomain;
    c.paper_threshold = paper;
    return c;
  };
  return {row("real omega<=3", 1, 3, 167), row("real omega=4", 4, 4, 252),
          row("real omega>4", 5, 7, 1000)};
}

StageConfig unit_stage_config(AlphaFloor floor) {
  StageConfig c;
  c.name = "unit";
  c.variant = MnBoundVariant::unit_eq55;
  c.phi_bound = PhiBound::exact;
  c.omega_policy = OmegaPolicy::worst_case;
  c.omega_max_even = 1;
  c.omega_max_odd = 1;
  c.root_case = RootCase::unit;
  c.floor = floor;
  c.divide_by_n = false;
  c.exhaustive = true;
  c.scan_lower = 151;
  c.paper_threshold = 150;
  return c;
}

bool stage_violated(std::uint64_t n, const StageConfig& cfg) {
  return violated(n, cfg, std::nullopt);
}

bool stage_violated(std::uint64_t n, const StageConfig& cfg, const Interval& log_alpha) {
  return violated(n, cfg, log_alpha);
}

std::int64_t stage_threshold(const StageConfig& cfg, std::uint64_t upper, unsigned workers,
                             std::vector<std::pair<int, std::int64_t>>* per_omega) {
  const std::uint64_t lo = std::max<std::uint64_t>(cfg.scan_lower, 150);
  const auto none = static_cast<std::int64_t>(lo) - 1;

  std::vector<Parity> classes;
  if (cfg.parity == Parity::both && is_lemma(cfg.variant)) {
    classes = {Parity::even, Parity::odd};
  } else {
    classes = {cfg.parity};
  }

  std::int64_t best = none;
  if (cfg.omega_policy == OmegaPolicy::from_omega_upper) {
    const auto bps = omega_upper_breakpoints(lo, upper);
    for (Parity cls : classes) {
      const ClassRange range(cls, lo, upper);
      Predicate pred = [&](std::uint64_t n) { return violated(n, cfg, std::nullopt); };
      best = std::max(best, crossing(range, lo, pred, cfg.exhaustive, bps, workers));
    }
    return best;
  }

  std::vector<std::pair<int, std::int64_t>> by_omega;
  for (Parity cls : classes) {
    const int omax = omega_max_for(cfg, cls);
    if (omax < 1) fail(ErrorCode::domain, cfg.name + " has no omega range");
    const int omin = cfg.omega_policy == OmegaPolicy::each ? cfg.omega_min : omax;
    const ClassRange range(cls, lo, upper);
    for (int w = omin; w <= omax; ++w) {
      const Parity eval = is_lemma(cfg.variant) ? cls : cfg.parity;
      Predicate pred = [&, w, eval](std::uint64_t n) {
        return violated_at(n, cfg, eval, w, std::nullopt);
      };
      const std::int64_t t = crossing(range, lo, pred, cfg.exhaustive, {}, workers);
      auto it = std::find_if(by_omega.begin(), by_omega.end(),
                             [w](const auto& e) { return e.first == w; });
      if (it == by_omega.end()) {
        by_omega.emplace_back(w, t);
      } else {
        it->second = std::max(it->second, t);
      }
      best = std::max(best, t);
    }
  }
  std::sort(by_omega.begin(), by_omega.end());
  if (per_omega) *per_omega = std::move(by_omega);
  return best;
}

CascadeResult run_cascade(const std::vector<StageConfig>& stages, const std::string& case_label,
                          const PipelineOptions& opts) {
  if (stages.empty()) fail(ErrorCode::domain, "empty stage cascade");
  CascadeResult res;
  res.case_label = case_label;
  std::optional<std::int64_t> prev_even, prev_odd;

  for (StageConfig cfg : stages) {
    BoundStageReport rep = blank_report(cfg);

    std::optional<std::int64_t> prev;
    switch (cfg.parity) {
      case Parity::even: prev = prev_even; break;
      case Parity::odd: prev = prev_odd; break;
      case Parity::both:
        if (prev_even && prev_odd) prev = std::max(*prev_even, *prev_odd);
        break;
    }

    std::optional<std::uint64_t> upper;
    if (cfg.domain_upper != 0) {
      upper = cfg.domain_upper;
    } else if (prev) {
      upper = static_cast<std::uint64_t>(std::max<std::int64_t>(*prev, 0));
    } else if (cfg.omega_policy == OmegaPolicy::from_omega_upper) {
      upper = opts.scan_cap;
    }

    bool runnable = upper.has_value();
    if (runnable && cfg.derive_omega) {
      const std::optional<std::int64_t> src_even = prev_even, src_odd = prev_odd;
      if (!src_even || !src_odd) {
        runnable = false;
      } else {
        cfg.omega_max_even = max_omega_below(static_cast<std::uint64_t>(*src_even), false);
        cfg.omega_max_odd = max_omega_below(static_cast<std::uint64_t>(*src_odd), true);
        if (is_lemma(cfg.variant)) {
          if (cfg.parity != Parity::odd && cfg.omega_max_even > lemma_table_max(Parity::even)) {
            runnable = false;
          }
          if (cfg.parity != Parity::even && cfg.omega_max_odd > lemma_table_max(Parity::odd)) {
            runnable = false;
          }
        }
      }
    }
    rep.omega_assumption = omega_label(cfg);

    if (!runnable) {
      rep.decisive = false;
      rep.computed_threshold = upper ? static_cast<std::int64_t>(*upper) : 0;
      res.stages.push_back(std::move(rep));
      continue;
    }

    rep.computed_threshold = stage_threshold(cfg, *upper, opts.workers, &rep.per_omega);
    rep.decisive = true;
    if (cfg.parity != Parity::odd) prev_even = rep.computed_threshold;
    if (cfg.parity != Parity::even) prev_odd = rep.computed_threshold;
    res.stages.push_back(std::move(rep));
  }

  if (prev_even || prev_odd) res.final_bound = std::max(prev_even.value_or(0), prev_odd.value_or(0));
  return res;
}

CascadeResult run_general_cascade(SeqKind kind, const PipelineOptions& opts) {
  CascadeResult res = run_cascade(general_stage_configs(opts.floor), "general", opts);
  res.stated_bound = kGeneralStated;
  return kind == SeqKind::V ? halve_for_v(std::move(res)) : res;
}

CascadeResult run_real_cascade(SeqKind kind, const PipelineOptions& opts) {
  CascadeResult res = run_cascade(real_stage_configs(opts.floor), "real", opts);
  // Past each per-omega crossing nothing survives, so the bound is the
  // largest n up to the crossing that actually has that many prime factors.
  std::int64_t final_bound = 150;
  for (const auto& st : res.stages) {
    for (const auto& [w, t] : st.per_omega) {
      for (std::int64_t n = t; n >= 150; --n) {
        if (static_cast<int>(factorize(static_cast<std::uint64_t>(n)).size()) == w) {
          final_bound = std::max(final_bound, n);
          break;
        }
      }
    }
  }
  res.final_bound = final_bound;
  res.stated_bound = kRealStated;
  return kind == SeqKind::V ? halve_for_v(std::move(res)) : res;
}

CascadeResult run_unit_case(const LucasParams& p, SeqKind kind, const PipelineOptions& opts) {
  if (!p.unit_norm()) fail(ErrorCode::domain, "the unit case needs s = +-1");
  CascadeResult res = run_real_cascade(SeqKind::U, opts);
  res.case_label = "unit";
  StageConfig cfg = unit_stage_config(opts.floor);
  BoundStageReport rep = blank_report(cfg);
  rep.omega_assumption = "any";
  rep.computed_threshold =
      stage_threshold(cfg, static_cast<std::uint64_t>(res.final_bound), opts.workers);
  rep.decisive = true;
  res.final_bound = rep.computed_threshold;
  res.stages.push_back(std::move(rep));
  res.stated_bound = kUnitStated;
  return kind == SeqKind::V ? halve_for_v(std::move(res)) : res;
}

}  // namespace lucaspf
