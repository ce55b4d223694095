#pragma once

#include <string>

#include "lucaspf/pipeline.hpp"
#include "lucaspf/search.hpp"

namespace lucaspf {

// Stable-key-order JSON: {case, kind, stages:[...], finalBound, statedBound}.
// Throws DomainError for a cascade with no stages.
std::string emit_report(const CascadeResult& c);

std::string emit_search_json(const SearchConfig& cfg, const SearchResult& res);
std::string emit_search_csv(const SearchResult& res);

// Fixed-width text tables for standard output.
std::string format_cascade_table(const CascadeResult& c);
std::string format_search_table(const SearchConfig& cfg, const SearchResult& res);

}  // namespace lucaspf
