#include "lucaspf/report.hpp"

#include <iomanip>
#include <sstream>

#include <json.hpp>

#include "lucaspf/error.hpp"

namespace lucaspf {
namespace {

using Json = nlohmann::ordered_json;

Json stage_json(const BoundStageReport& st) {
  Json j;
  j["name"] = st.stage_name;
  j["parity"] = to_string(st.parity);
  j["omega"] = st.omega_assumption;
  j["phiBound"] = to_string(st.phi_bound_used);
  j["variant"] = to_string(st.mn_lower_variant);
  j["computed"] = st.computed_threshold;
  j["paper"] = st.paper_threshold;
  j["decisive"] = st.decisive;
  if (!st.per_omega.empty()) {
    Json per = Json::array();
    for (const auto& [w, t] : st.per_omega) per.push_back({{"omega", w}, {"computed", t}});
    j["perOmega"] = per;
  }
  return j;
}

Json hit_json(const SearchHit& h) {
  return {{"index", h.index},
          {"kind", to_string(h.kind)},
          {"digits", h.value_digits},
          {"witness", h.witness.to_string()},
          {"trivial", h.trivial}};
}

}  // namespace

std::string emit_report(const CascadeResult& c) {
  if (c.stages.empty()) fail(ErrorCode::domain, "a report needs at least one stage");
  Json j;
  j["case"] = c.case_label;
  j["kind"] = to_string(c.kind);
  Json stages = Json::array();
  for (const auto& st : c.stages) stages.push_back(stage_json(st));
  j["stages"] = stages;
  j["finalBound"] = c.final_bound;
  j["statedBound"] = c.stated_bound;
  return j.dump(2) + "\n";
}

std::string emit_search_json(const SearchConfig& cfg, const SearchResult& res) {
  Json j;
  j["r"] = cfg.r;
  j["s"] = cfg.s;
  j["kind"] = to_string(cfg.kind);
  j["nMin"] = cfg.n_min;
  j["nMax"] = cfg.n_max;
  j["coverage"] = res.coverage;
  Json hits = Json::array();
  for (const auto& h : res.hits) hits.push_back(hit_json(h));
  j["hits"] = hits;
  if (cfg.reject_log) j["rejected"] = res.reject_log;
  return j.dump(2) + "\n";
}

std::string emit_search_csv(const SearchResult& res) {
  std::ostringstream os;
  os << "index,kind,digits,witness,trivial\n";
  for (const auto& h : res.hits) {
    os << h.index << ',' << to_string(h.kind) << ',' << h.value_digits << ",\""
       << h.witness.to_string() << "\"," << (h.trivial ? "true" : "false") << '\n';
  }
  return os.str();
}

std::string format_cascade_table(const CascadeResult& c) {
  std::ostringstream os;
  os << "case " << c.case_label << ", kind " << to_string(c.kind) << '\n';
  os << std::left << std::setw(18) << "stage" << std::setw(7) << "parity" << std::setw(22)
     << "omega" << std::setw(19) << "phi bound" << std::setw(20) << "variant" << std::right
     << std::setw(14) << "computed" << std::setw(14) << "paper" << "  decisive\n";
  for (const auto& st : c.stages) {
    os << std::left << std::setw(18) << st.stage_name << std::setw(7) << to_string(st.parity)
       << std::setw(22) << st.omega_assumption << std::setw(19) << to_string(st.phi_bound_used)
       << std::setw(20) << to_string(st.mn_lower_variant) << std::right << std::setw(14)
       << st.computed_threshold << std::setw(14) << st.paper_threshold << "  "
       << (st.decisive ? "yes" : "no") << '\n';
  }
  os << "final bound " << c.final_bound << " (stated " << c.stated_bound << ")\n";
  return os.str();
}

std::string format_search_table(const SearchConfig& cfg, const SearchResult& res) {
  std::ostringstream os;
  os << "(r,s)=(" << cfg.r << ',' << cfg.s << "), " << to_string(cfg.kind) << ", n in ["
     << cfg.n_min << ',' << cfg.n_max << "]: " << res.coverage << '\n';
  os << std::right << std::setw(8) << "index" << std::setw(8) << "digits" << "  witness\n";
  for (const auto& h : res.hits) {
    os << std::setw(8) << h.index << std::setw(8) << h.value_digits << "  "
       << h.witness.to_string() << (h.trivial ? "  (trivial)" : "") << '\n';
  }
  os << res.hits.size() << " hit(s)\n";
  return os.str();
}

}  // namespace lucaspf
