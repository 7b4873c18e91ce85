#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "multigraph.hpp"

namespace swapsmith {

// Graph file format (UTF-8 text):
//   line 1:  n <count>
//   then one line per nonzero pair:  u v m   with u <= v, sorted lexicographically
// Trace file format:
//   line 1:  fingerprint <hex>
//   then:    swap v1 v2 v3 v4    per step
// Game records interleave `devil u v` annotation lines before swaps.

std::string write_graph(const LoopyMultigraph& g);
LoopyMultigraph parse_graph(const std::string& text);

std::string write_trace(const SwapTrace& t);
// optional per-step devil annotations (used by game records)
std::string write_trace_annotated(const SwapTrace& t, const std::vector<VertexPair>& devil_picks);

// parses a trace, tolerating devil annotation lines; when picks != nullptr the
// annotations are collected (one optional pick per swap)
SwapTrace parse_trace(const std::string& text, std::vector<std::optional<VertexPair>>* picks = nullptr);

// comma-separated degree list; must be weakly decreasing (rejected otherwise,
// not silently sorted)
std::vector<std::uint64_t> parse_degree_list(const std::string& text);
std::string format_degree_list(const std::vector<std::uint64_t>& d);

} // namespace swapsmith
