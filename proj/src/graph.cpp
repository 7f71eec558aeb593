#include "claf/graph.hpp"

#include "claf/error.hpp"
#include "claf/textutil.hpp"

#include <cmath>
#include <set>
#include <tuple>

namespace claf::kg {

bool is_valid_level(int level) { return level >= kLevelBasic && level <= kLevelAdvanced; }

int parse_level_phrase(const std::string& phrase) {
    const std::string p = text::fold(text::trim(phrase));
    if (p.rfind("basic", 0) == 0) return kLevelBasic;
    if (p.rfind("intermediate", 0) == 0) return kLevelIntermediate;
    if (p.rfind("advanced", 0) == 0) return kLevelAdvanced;
    return -1;
}

const char* level_name(int level) {
    switch (level) {
        case kLevelBasic: return "basic";
        case kLevelIntermediate: return "intermediate";
        case kLevelAdvanced: return "advanced";
    }
    return "invalid";
}

std::string canonical_key(const std::string& name) {
    return text::fold(text::trim(name));
}

const Entity* KnowledgeGraph::find(const std::string& name) const {
    auto it = entities.find(canonical_key(name));
    return it == entities.end() ? nullptr : &it->second;
}

namespace {

void check_entity(const Entity& e) {
    if (text::trim(e.name).empty())
        throw ClafError(ErrorCode::InvariantViolation, "entity with empty name");
    if (!is_valid_level(e.level))
        throw ClafError(ErrorCode::InvariantViolation,
                        "entity '" + e.name + "' has level " + std::to_string(e.level));
}

void check_relation(const Relation& r) {
    if (canonical_key(r.source) == canonical_key(r.target))
        throw ClafError(ErrorCode::InvariantViolation,
                        "relation endpoints must differ: '" + r.source + "'");
    if (!(r.strength >= 0.0 && r.strength <= 10.0))
        throw ClafError(ErrorCode::InvariantViolation,
                        "relation strength out of [0,10]: " + std::to_string(r.strength));
    if (!is_valid_level(r.level))
        throw ClafError(ErrorCode::InvariantViolation,
                        "relation has level " + std::to_string(r.level));
}

} // namespace

KnowledgeGraph build_graph(const std::vector<Entity>& entities,
                           const std::vector<Relation>& relations) {
    KnowledgeGraph graph;

    for (const Entity& e : entities) {
        check_entity(e);
        Entity cleaned = e;
        cleaned.name = text::trim(e.name);
        const std::string key = canonical_key(cleaned.name);
        auto [it, inserted] = graph.entities.emplace(key, cleaned);
        if (!inserted) {
            // first occurrence wins; differing descriptions are appended
            Entity& kept = it->second;
            if (!cleaned.description.empty() && cleaned.description != kept.description) {
                if (kept.description.empty()) kept.description = cleaned.description;
                else kept.description += "; " + cleaned.description;
            }
        }
    }

    std::set<std::tuple<std::string, std::string, std::string>> seen_edges;
    std::set<std::pair<std::string, std::string>> seen_crosslinks;

    for (const Relation& r : relations) {
        check_relation(r);
        const std::string src_key = canonical_key(r.source);
        const std::string dst_key = canonical_key(r.target);
        auto src_it = graph.entities.find(src_key);
        if (src_it == graph.entities.end())
            throw ClafError(ErrorCode::DanglingEndpoint, r.source);
        auto dst_it = graph.entities.find(dst_key);
        if (dst_it == graph.entities.end())
            throw ClafError(ErrorCode::DanglingEndpoint, r.target);

        const Entity& src = src_it->second;
        const Entity& dst = dst_it->second;
        const int gap = std::abs(src.level - dst.level);

        if (gap == 0) {
            if (seen_edges.emplace(src_key, dst_key, r.description).second) {
                Relation stored = r;
                stored.source = src.name;
                stored.target = dst.name;
                graph.intra_edges.push_back({src.name, dst.name, std::move(stored)});
            }
        } else if (gap == 1) {
            std::string a = src.name, b = dst.name;
            if (canonical_key(b) < canonical_key(a)) std::swap(a, b);
            if (seen_crosslinks.emplace(canonical_key(a), canonical_key(b)).second) {
                graph.crosslinks.push_back({std::move(a), std::move(b)});
            }
        }
        // gap == 2: neither an edge nor a crosslink
    }

    return graph;
}

} // namespace claf::kg
