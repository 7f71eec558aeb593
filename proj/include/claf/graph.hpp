#pragma once

#include <map>
#include <string>
#include <vector>

namespace claf::kg {

inline constexpr int kLevelBasic = 0;
inline constexpr int kLevelIntermediate = 1;
inline constexpr int kLevelAdvanced = 2;

bool is_valid_level(int level);

/// "Basic"/"Basic level"/... -> 0/1/2, case-insensitive. Returns -1 when the
/// phrase is not one of the three tiers.
int parse_level_phrase(const std::string& phrase);

const char* level_name(int level);

/// Identity key for entity names: trimmed and case-folded. Display casing is
/// preserved on the entity itself.
std::string canonical_key(const std::string& name);

struct Entity {
    std::string name;        // trimmed, case-preserving
    std::string entity_type;
    std::string description;
    int level = kLevelBasic; // 0, 1 or 2

    bool operator==(const Entity&) const = default;
};

struct Relation {
    std::string source;
    std::string target;
    std::string description;
    std::vector<std::string> keywords;
    double strength = 0.0; // [0, 10]
    int level = kLevelBasic;

    bool operator==(const Relation&) const = default;
};

struct IntraEdge {
    std::string source;
    std::string target;
    Relation relation;

    bool operator==(const IntraEdge&) const = default;
};

/// Undirected link between entities exactly one tier apart. Endpoints are
/// normalized so the canonically smaller name comes first.
struct Crosslink {
    std::string source;
    std::string target;

    bool operator==(const Crosslink&) const = default;
};

struct KnowledgeGraph {
    std::map<std::string, Entity> entities; // canonical key -> entity
    std::vector<IntraEdge> intra_edges;
    std::vector<Crosslink> crosslinks;

    const Entity* find(const std::string& name) const;
    bool empty() const { return entities.empty(); }

    bool operator==(const KnowledgeGraph&) const = default;
};

/// Builds the tiered graph from extracted entities and relations. Duplicate
/// entity names keep the first occurrence and merge differing descriptions
/// with "; ". A relation becomes an intra-level edge when endpoint levels are
/// equal, a crosslink when they differ by one, and nothing when they differ
/// by two. Throws ClafError(DanglingEndpoint) for unresolved endpoints and
/// ClafError(InvariantViolation) for self-relations or out-of-range fields.
KnowledgeGraph build_graph(const std::vector<Entity>& entities,
                           const std::vector<Relation>& relations);

} // namespace claf::kg
