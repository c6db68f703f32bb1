#pragma once

#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "quasitree/colouring.hpp"
#include "quasitree/graph.hpp"
#include "quasitree/partition.hpp"
#include "quasitree/patterns.hpp"
#include "quasitree/treedec.hpp"

namespace quasitree {

using Json = nlohmann::json;

/// "n m" header then m lines "u v". Blank lines and lines starting with '#'
/// or 'c' are skipped. Throws ParseError.
Graph parse_graph_text(std::string_view text);
/// Canonical edge list: edges sorted, u < v, LF line ends.
std::string emit_graph_text(const Graph& g);

/// Parses JSON text, reporting syntax errors as ParseError with line/column.
Json parse_json(std::string_view text);

Json graph_to_json(const Graph& g);
Graph graph_from_json(const Json& doc);

Json treedec_to_json(const TreeDecomposition& d);
TreeDecomposition treedec_from_json(const Json& doc);

Json qtp_to_json(const QuasiTreePartition& q);
QuasiTreePartition qtp_from_json(const Json& doc);

Json colouring_to_json(const SetColouring& f);
SetColouring colouring_from_json(const Json& doc);

Json witness_to_json(const PatternWitness& w);
Json rho_to_json(const RhoResult& r);
Json qtp_report_to_json(const QtpReport& r);
Json treedec_report_to_json(const TreedecReport& r);
Json colouring_report_to_json(const ColouringReport& r);

/// Any document carrying a graph: a graph/1 document, an edge list, or a
/// treedec/qtp/colouring document with an embedded "graph". Detected by the
/// first non-space character ('{' means JSON).
Graph graph_from_any(std::string_view text);

/// Graphviz rendering of the partition tree, one record per bag.
std::string qtp_to_dot(const QuasiTreePartition& q);

}  // namespace quasitree
