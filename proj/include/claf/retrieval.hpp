#pragma once

#include "claf/graph.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace claf::retrieval {

struct RetrievalRequest {
    std::string query;
    int level = kg::kLevelBasic;     // user capability tier c
    int k = 5;                       // seeds taken from the ranked scan
    std::optional<int> depth;        // hop budget; defaults to 1 + level

    int effective_depth() const { return depth.value_or(1 + level); }
    void validate() const; // throws ClafError(InvalidConfig)
};

struct ScoredEntity {
    kg::Entity entity;
    double score = 0.0;
};

struct KnowledgeSubset {
    std::vector<ScoredEntity> entities; // seeds first (score order), then expansion (BFS order)
    std::size_t seed_count = 0;
};

/// Restriction of the graph to entities with level <= max_level. Edges and
/// crosslinks survive only when both endpoints do.
kg::KnowledgeGraph filter_subgraph(const kg::KnowledgeGraph& graph, int max_level);

using QueryRewriter = std::function<std::vector<std::string>(const std::string&, int)>;

/// Default rewriter: lowercases, strips punctuation and drops stopwords.
/// The level parameter is unused here; it exists so an LLM-backed strategy
/// can be plugged in with the same signature.
std::vector<std::string> rewrite_query(const std::string& query, int level);

using EntityScorer =
    std::function<double(const std::vector<std::string>& terms, const kg::Entity&)>;

/// Lexical relevance of one entity: +2 per query term present in the name,
/// +1 per term present in the description (whole-word, case-insensitive).
double lexical_entity_score(const std::vector<std::string>& terms, const kg::Entity& entity);

/// Scores every entity of the subgraph and ranks by descending score, ties
/// by name ascending. The parallel kernel: entities are scored concurrently.
std::vector<ScoredEntity> score_neighbors(const std::vector<std::string>& terms,
                                          const kg::KnowledgeGraph& subgraph,
                                          const EntityScorer& scorer = lexical_entity_score);

/// Single-threaded reference for score_neighbors; used by tests and the
/// benchmark. Results are identical element-for-element.
std::vector<ScoredEntity> score_neighbors_serial(const std::vector<std::string>& terms,
                                                 const kg::KnowledgeGraph& subgraph,
                                                 const EntityScorer& scorer = lexical_entity_score);

/// Entities (by canonical key) reachable from the seeds within `hop_bound`
/// hops over intra-edges and crosslinks alike, in breadth-first discovery
/// order. Seeds themselves are not re-listed.
std::vector<std::string> expand_from_seeds(const kg::KnowledgeGraph& subgraph,
                                           const std::vector<std::string>& seed_names,
                                           int hop_bound);

/// Full hierarchical retrieval: filter to the capability tier, rewrite the
/// query, rank, take the top-k seeds, then widen each seed's neighborhood by
/// depth + 1 hops.
KnowledgeSubset retrieve(const kg::KnowledgeGraph& graph, const RetrievalRequest& request,
                         const QueryRewriter& rewriter = rewrite_query,
                         const EntityScorer& scorer = lexical_entity_score);

} // namespace claf::retrieval
