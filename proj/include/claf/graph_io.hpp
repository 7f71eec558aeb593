#pragma once

#include "claf/graph.hpp"

#include <string>

namespace claf::kg {

inline constexpr int kGraphSchemaVersion = 1;

/// Canonical JSON serialization: sorted object keys, arrays in insertion
/// order. Repeated saves of the same graph are byte-identical.
std::string graph_to_json(const KnowledgeGraph& graph);

/// Parses and validates a graph document. Throws ClafError with
/// SchemaMismatch (bad envelope/version), InvariantViolation (bad levels,
/// dangling edge endpoints, mismatched tiers) as appropriate.
KnowledgeGraph graph_from_json(const std::string& json_text);

void save_graph(const KnowledgeGraph& graph, const std::string& path);
KnowledgeGraph load_graph(const std::string& path);

} // namespace claf::kg
