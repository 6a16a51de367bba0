#pragma once

#include <filesystem>
#include <string>

#include "zdg/analysis.hpp"
#include "zdg/graph.hpp"
#include "zdg/semigroup.hpp"
#include "zdg/verifier.hpp"

namespace zdg::io {

/// Cayley-table document: fields `order`, `zero`, `labels`, `table`, written
/// in that order. parse accepts any field order.
Semigroup parse_semigroup(const std::string& text);
std::string serialize_semigroup(const Semigroup& s);

/// Reads the file and parses it; I/O failures surface as ParseError.
Semigroup load_semigroup(const std::filesystem::path& path);

/// DOT export: one node per vertex labeled by the graph label, undirected
/// edges emitted once with endpoints in vertex order. Byte-deterministic.
std::string to_dot(const Graph& g);

/// {"vertices": [labels], "edges": [[u, v], ...]} with u < v, ascending.
std::string graph_to_json(const Graph& g);

/// {"classes": [[member labels], ...], "edges": [[ci, cj], ...]}.
/// `source` is the graph the reduction was computed from.
std::string reduced_to_json(const Reduction& r, const Graph& source);

std::string report_to_json(const AnalysisReport& report);
std::string report_to_text(const AnalysisReport& report);

std::string checks_to_json(const std::vector<CheckResult>& checks);
std::string checks_to_text(const std::vector<CheckResult>& checks);

std::string search_to_json(const SearchResult& result);
std::string search_to_text(const SearchResult& result);

}  // namespace zdg::io
