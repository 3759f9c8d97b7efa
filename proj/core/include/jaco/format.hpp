#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "jaco/conjectures.hpp"
#include "jaco/dompath.hpp"
#include "jaco/graph_params.hpp"
#include "jaco/jaco_graph.hpp"

namespace jaco {

enum class OutputFormat { text, csv, json, dot, edges };

std::string_view to_string(OutputFormat format);
std::optional<OutputFormat> parse_output_format(std::string_view text);

/// text, csv or json. CSV joins Delta-set subscripts with ';'.
/// Throws std::invalid_argument for graph-only formats.
std::string render_table(const std::vector<ParamRow>& rows, OutputFormat format);

/**
 * Graph export.
 *   edges: one "i j" line per edge, i < j, ordered by (i, j).
 *   dot:   "graph J<n> {", one "  <i>;" line per vertex, one "  <i> -- <j>;"
 *          line per edge in edges order, then "}".
 *   json:  {"n": n, "adjacency": [[...], ...]}, entry k lists the neighbors
 *          of v_{k+1} ascending.
 * Throws std::invalid_argument for text and csv.
 */
std::string render_graph(const JacoGraph& g, OutputFormat format);

/// "v1 v2 v3 | gamma: v2" (text) or a json object.
std::string render_dompath(const DomPath& path, OutputFormat format = OutputFormat::text);

/// text: one line per report. json: array. csv: id,lo,hi,status,index,expected,actual,margin,offset
std::string render_reports(const std::vector<ConjectureReport>& reports, OutputFormat format);

}  // namespace jaco
