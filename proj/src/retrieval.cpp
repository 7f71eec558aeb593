#include "claf/retrieval.hpp"

#include "claf/error.hpp"
#include "claf/stopwords.hpp"
#include "claf/textutil.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

namespace claf::retrieval {

void RetrievalRequest::validate() const {
    if (!kg::is_valid_level(level))
        throw ClafError(ErrorCode::InvalidConfig, "level must be 0, 1 or 2");
    if (k < 1) throw ClafError(ErrorCode::InvalidConfig, "k must be >= 1");
    if (depth && *depth < 0)
        throw ClafError(ErrorCode::InvalidConfig, "depth must be non-negative");
}

kg::KnowledgeGraph filter_subgraph(const kg::KnowledgeGraph& graph, int max_level) {
    kg::KnowledgeGraph out;
    for (const auto& [key, entity] : graph.entities)
        if (entity.level <= max_level) out.entities.emplace(key, entity);

    auto survives = [&](const std::string& name) {
        return out.entities.count(kg::canonical_key(name)) > 0;
    };
    for (const kg::IntraEdge& e : graph.intra_edges)
        if (survives(e.source) && survives(e.target)) out.intra_edges.push_back(e);
    for (const kg::Crosslink& c : graph.crosslinks)
        if (survives(c.source) && survives(c.target)) out.crosslinks.push_back(c);
    return out;
}

std::vector<std::string> rewrite_query(const std::string& query, int /*level*/) {
    std::vector<std::string> terms;
    for (std::string& token : text::lower_word_tokens(query))
        if (!text::is_stopword(token)) terms.push_back(std::move(token));
    return terms;
}

double lexical_entity_score(const std::vector<std::string>& terms, const kg::Entity& entity) {
    double score = 0.0;
    for (const std::string& term : terms) {
        if (text::contains_word(entity.name, term)) score += 2.0;
        if (text::contains_word(entity.description, term)) score += 1.0;
    }
    return score;
}

namespace {

std::vector<ScoredEntity> rank(std::vector<ScoredEntity> scored) {
    std::sort(scored.begin(), scored.end(), [](const ScoredEntity& a, const ScoredEntity& b) {
        if (a.score != b.score) return a.score > b.score;
        return a.entity.name < b.entity.name;
    });
    return scored;
}

} // namespace

std::vector<ScoredEntity> score_neighbors(const std::vector<std::string>& terms,
                                          const kg::KnowledgeGraph& subgraph,
                                          const EntityScorer& scorer) {
    std::vector<const kg::Entity*> entities;
    entities.reserve(subgraph.entities.size());
    for (const auto& [key, entity] : subgraph.entities) entities.push_back(&entity);

    std::vector<ScoredEntity> scored(entities.size());
#pragma omp parallel for schedule(static)
    for (long i = 0; i < static_cast<long>(entities.size()); ++i) {
        scored[i] = {*entities[i], scorer(terms, *entities[i])};
    }
    return rank(std::move(scored));
}

std::vector<ScoredEntity> score_neighbors_serial(const std::vector<std::string>& terms,
                                                 const kg::KnowledgeGraph& subgraph,
                                                 const EntityScorer& scorer) {
    std::vector<ScoredEntity> scored;
    scored.reserve(subgraph.entities.size());
    for (const auto& [key, entity] : subgraph.entities)
        scored.push_back({entity, scorer(terms, entity)});
    return rank(std::move(scored));
}

std::vector<std::string> expand_from_seeds(const kg::KnowledgeGraph& subgraph,
                                           const std::vector<std::string>& seed_names,
                                           int hop_bound) {
    // adjacency over canonical keys; intra-edges and crosslinks are treated
    // identically and traversed in both directions
    std::map<std::string, std::set<std::string>> adjacency;
    auto connect = [&](const std::string& a, const std::string& b) {
        const std::string ka = kg::canonical_key(a), kb = kg::canonical_key(b);
        adjacency[ka].insert(kb);
        adjacency[kb].insert(ka);
    };
    for (const kg::IntraEdge& e : subgraph.intra_edges) connect(e.source, e.target);
    for (const kg::Crosslink& c : subgraph.crosslinks) connect(c.source, c.target);

    std::set<std::string> visited;
    std::vector<std::string> discovered;
    for (const std::string& seed : seed_names) visited.insert(kg::canonical_key(seed));

    for (const std::string& seed : seed_names) {
        std::deque<std::pair<std::string, int>> frontier;
        frontier.emplace_back(kg::canonical_key(seed), 0);
        while (!frontier.empty()) {
            auto [key, hops] = frontier.front();
            frontier.pop_front();
            if (hops >= hop_bound) continue;
            auto it = adjacency.find(key);
            if (it == adjacency.end()) continue;
            for (const std::string& next : it->second) {
                if (!visited.insert(next).second) continue;
                discovered.push_back(next);
                frontier.emplace_back(next, hops + 1);
            }
        }
    }
    return discovered;
}

KnowledgeSubset retrieve(const kg::KnowledgeGraph& graph, const RetrievalRequest& request,
                         const QueryRewriter& rewriter, const EntityScorer& scorer) {
    request.validate();

    const kg::KnowledgeGraph subgraph = filter_subgraph(graph, request.level);
    const std::vector<std::string> terms = rewriter(request.query, request.level);
    const std::vector<ScoredEntity> ranked = score_neighbors(terms, subgraph, scorer);

    KnowledgeSubset out;
    const std::size_t seed_count = std::min<std::size_t>(request.k, ranked.size());
    out.entities.assign(ranked.begin(), ranked.begin() + seed_count);
    out.seed_count = seed_count;

    std::vector<std::string> seed_names;
    seed_names.reserve(seed_count);
    for (std::size_t i = 0; i < seed_count; ++i) seed_names.push_back(out.entities[i].entity.name);

    const int hop_bound = request.effective_depth() + 1;
    for (const std::string& key : expand_from_seeds(subgraph, seed_names, hop_bound)) {
        auto it = subgraph.entities.find(key);
        if (it != subgraph.entities.end()) out.entities.push_back({it->second, 0.0});
    }
    return out;
}

} // namespace claf::retrieval
