#include "lucaspf/cli.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>
#include <thread>

#include <CLI11.hpp>

#include "lucaspf/arithmetic.hpp"
#include "lucaspf/bounds.hpp"
#include "lucaspf/cyclotomic.hpp"
#include "lucaspf/error.hpp"
#include "lucaspf/factorial.hpp"
#include "lucaspf/pipeline.hpp"
#include "lucaspf/report.hpp"
#include "lucaspf/search.hpp"

namespace lucaspf {
namespace {

struct Check {
  std::string name;
  bool ok;
};

std::vector<Check> identity_checks() {
  std::vector<Check> out;
  out.push_back({"fibonacci product identity", verify_fibonacci_identity()});
  const LucasParams fib = validate_params(1, 1);
  out.push_back({"Phi_12 = 6 for (1,1)", cyclotomic_value(fib, 12) == 6});
  bool product_ok = true;
  for (std::uint64_t n = 2; n <= 120 && product_ok; ++n) {
    mpz_class prod = 1;
    for (std::uint64_t d : arithmetic_profile(n).divisors) {
      if (d > 1) prod *= cyclotomic_value(fib, d);
    }
    product_ok = prod == u_at(fib, n).value;
  }
  out.push_back({"prod_{d|n,d>1} Phi_d = U_n, (1,1), n <= 120", product_ok});
  return out;
}

std::vector<Check> bound_checks() {
  std::vector<Check> out;
  const Precision bits = default_precision();
  out.push_back({"unit-case product > 0.278293",
                 unit_case_product(bits).certainly_greater(Interval::decimal("0.278293", bits))});
  bool phi_ok = true;
  bool omega_ok = true;
  for (std::uint64_t n = 3; n <= 20000; ++n) {
    const auto phi = static_cast<double>(euler_phi(n));
    if (phi_lower_rs(n, bits).lower() > phi) phi_ok = false;
    if (n >= 26 && static_cast<int>(factorize(n).size()) > omega_upper(n)) omega_ok = false;
  }
  out.push_back({"Rosser-Schoenfeld phi bound, n <= 20000", phi_ok});
  out.push_back({"omega_upper, 26 <= n <= 20000", omega_ok});
  return out;
}

unsigned default_workers() { return std::max(1U, std::thread::hardware_concurrency()); }

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Lucas sequence terms that are products of factorials", "lucaspf"};
  app.require_subcommand(1);
  int precision = 0;
  app.add_option("--precision", precision, "working precision in bits (default from "
                                           "LUCASPF_PRECISION_BITS, else 64)")
      ->check(CLI::Range(32, 4096));

  std::string bcase = "general", bkind = "U", bjson;
  std::int64_t br = 1, bs = 1;
  unsigned bworkers = default_workers();
  auto* bounds = app.add_subcommand("bounds", "run the bound cascade");
  bounds->add_option("--case", bcase)->check(CLI::IsMember({"general", "real", "unit"}));
  bounds->add_option("--kind", bkind)->check(CLI::IsMember({"U", "V"}));
  bounds->add_option("--r", br);
  bounds->add_option("--s", bs);
  bounds->add_option("--json", bjson, "write the report to this file");
  bounds->add_option("--workers", bworkers)->check(CLI::PositiveNumber);

  SearchConfig scfg;
  std::string skind = "U", scsv, sjson;
  auto* search = app.add_subcommand("search", "search a sequence for factorial products");
  search->add_option("--r", scfg.r)->required();
  search->add_option("--s", scfg.s)->required();
  search->add_option("--kind", skind)->check(CLI::IsMember({"U", "V"}));
  search->add_option("--max-n", scfg.n_max)->required();
  search->add_option("--min-n", scfg.n_min);
  search->add_option("--workers", scfg.workers)->check(CLI::PositiveNumber);
  search->add_option("--csv", scsv, "write hits as CSV to this file");
  search->add_option("--json", sjson, "write hits as JSON to this file");
  search->add_flag("--reject-log", scfg.reject_log, "list indices removed by the fast filter");

  std::string pf_n;
  bool pf_dec = false;
  std::size_t pf_limit = 10;
  auto* pf = app.add_subcommand("pf", "test membership in the factorial products");
  pf->add_option("N", pf_n)->required();
  pf->add_flag("--decompose", pf_dec);
  pf->add_option("--limit", pf_limit)->check(CLI::PositiveNumber);

  std::int64_t cr = 0, cs = 0;
  std::uint64_t cn = 0;
  auto* cyc = app.add_subcommand("cyclotomic", "evaluate Phi_n(alpha, beta)");
  cyc->add_option("--r", cr)->required();
  cyc->add_option("--s", cs)->required();
  cyc->add_option("--n", cn)->required();

  std::string vsuite = "all";
  auto* verify = app.add_subcommand("verify", "run built-in consistency checks");
  verify->add_option("--suite", vsuite)->check(CLI::IsMember({"identities", "bounds", "all"}));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n" << app.help();
    return kExitUsage;
  }

  try {
    if (precision > 0) set_default_precision(precision);

    if (*bounds) {
      const SeqKind kind = parse_seq_kind(bkind);
      const LucasParams p = validate_params(br, bs);
      PipelineOptions opts;
      opts.workers = bworkers;
      CascadeResult res;
      if (bcase == "general") {
        res = run_general_cascade(kind, opts);
      } else if (bcase == "real") {
        res = run_real_cascade(kind, opts);
      } else {
        res = run_unit_case(p, kind, opts);
      }
      out << format_cascade_table(res);
      if (!bjson.empty()) {
        std::ofstream f(bjson, std::ios::binary);
        if (!f) fail(ErrorCode::domain, "cannot write " + bjson);
        f << emit_report(res);
      }
      const bool decisive = std::all_of(res.stages.begin(), res.stages.end(),
                                        [](const auto& st) { return st.decisive; });
      return decisive ? kExitOk : kExitFailure;
    }

    if (*search) {
      scfg.kind = parse_seq_kind(skind);
      const SearchResult res = search_pf_terms(scfg);
      out << format_search_table(scfg, res);
      if (scfg.reject_log) {
        for (const auto& line : res.reject_log) out << "rejected " << line << '\n';
      }
      if (!scsv.empty()) {
        std::ofstream f(scsv, std::ios::binary);
        if (!f) fail(ErrorCode::domain, "cannot write " + scsv);
        f << emit_search_csv(res);
      }
      if (!sjson.empty()) {
        std::ofstream f(sjson, std::ios::binary);
        if (!f) fail(ErrorCode::domain, "cannot write " + sjson);
        f << emit_search_json(scfg, res);
      }
      return kExitOk;
    }

    if (*pf) {
      mpz_class n;
      if (n.set_str(pf_n, 10) != 0) fail(ErrorCode::domain, "not an integer: " + pf_n);
      if (auto reason = pf_fast_reject(n)) {
        out << pf_n << ": not a product of factorials (" << to_string(*reason) << ")\n";
        return kExitOk;
      }
      const bool member = pf_member(n);
      out << pf_n << ": " << (member ? "product of factorials" : "not a product of factorials")
          << '\n';
      if (member && pf_dec) {
        for (const auto& w : pf_decompose(n, pf_limit)) out << "  " << w.to_string() << '\n';
      }
      return kExitOk;
    }

    if (*cyc) {
      const LucasParams p = validate_params(cr, cs);
      const mpz_class phi = cyclotomic_value(p, cn);
      out << "Phi_" << cn << " = " << phi.get_str() << '\n';
      if (phi != 0) {
        out << "log(|Phi_n|/n) in " << primitive_part_lower(p, cn).to_string() << '\n';
      }
      return kExitOk;
    }

    if (*verify) {
      std::vector<Check> checks;
      if (vsuite != "bounds") checks = identity_checks();
      if (vsuite != "identities") {
        auto more = bound_checks();
        checks.insert(checks.end(), more.begin(), more.end());
      }
      bool all = true;
      for (const auto& c : checks) {
        out << (c.ok ? "PASS " : "FAIL ") << c.name << '\n';
        all = all && c.ok;
      }
      return all ? kExitOk : kExitFailure;
    }
  } catch (const Error& e) {
    err << "error (" << to_string(e.code()) << "): " << e.what() << '\n';
    return e.code() == ErrorCode::undecidable ? kExitUndecidable : kExitUsage;
  }
  return kExitUsage;
}

}  // namespace lucaspf
