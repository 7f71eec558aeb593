#include "claf/graph_io.hpp"

#include "claf/error.hpp"
#include "claf/textutil.hpp"

#include <nlohmann/json.hpp>

#include <cmath>
#include <fstream>
#include <sstream>

namespace claf::kg {

using nlohmann::json;

namespace {

json entity_to_json(const Entity& e) {
    return json{{"name", e.name},
                {"type", e.entity_type},
                {"description", e.description},
                {"level", e.level}};
}

json relation_to_json(const Relation& r) {
    return json{{"source", r.source},
                {"target", r.target},
                {"description", r.description},
                {"keywords", r.keywords},
                {"strength", r.strength},
                {"level", r.level}};
}

const json& require(const json& obj, const char* key) {
    auto it = obj.find(key);
    if (it == obj.end())
        throw ClafError(ErrorCode::SchemaMismatch, std::string("missing field '") + key + "'");
    return *it;
}

int read_level(const json& obj, const std::string& what) {
    const json& v = require(obj, "level");
    if (!v.is_number_integer())
        throw ClafError(ErrorCode::SchemaMismatch, what + " level must be an integer");
    const int level = v.get<int>();
    if (!is_valid_level(level))
        throw ClafError(ErrorCode::InvariantViolation,
                        what + " level " + std::to_string(level) + " outside {0,1,2}");
    return level;
}

Entity entity_from_json(const json& obj) {
    Entity e;
    e.name = require(obj, "name").get<std::string>();
    e.entity_type = require(obj, "type").get<std::string>();
    e.description = require(obj, "description").get<std::string>();
    e.level = read_level(obj, "entity '" + e.name + "'");
    if (text::trim(e.name).empty())
        throw ClafError(ErrorCode::InvariantViolation, "entity with empty name");
    return e;
}

Relation relation_from_json(const json& obj) {
    Relation r;
    r.source = require(obj, "source").get<std::string>();
    r.target = require(obj, "target").get<std::string>();
    r.description = require(obj, "description").get<std::string>();
    r.keywords = require(obj, "keywords").get<std::vector<std::string>>();
    r.strength = require(obj, "strength").get<double>();
    r.level = read_level(obj, "relation '" + r.source + "' -> '" + r.target + "'");
    if (!(r.strength >= 0.0 && r.strength <= 10.0))
        throw ClafError(ErrorCode::InvariantViolation, "relation strength outside [0,10]");
    return r;
}

const Entity& resolve(const KnowledgeGraph& graph, const std::string& name, const char* where) {
    const Entity* e = graph.find(name);
    if (!e)
        throw ClafError(ErrorCode::InvariantViolation,
                        std::string(where) + " references unknown entity '" + name + "'");
    return *e;
}

} // namespace

std::string graph_to_json(const KnowledgeGraph& graph) {
    json doc;
    doc["version"] = kGraphSchemaVersion;

    json entities = json::array();
    for (const auto& [key, entity] : graph.entities) entities.push_back(entity_to_json(entity));
    doc["entities"] = std::move(entities);

    json edges = json::array();
    for (const IntraEdge& e : graph.intra_edges) {
        edges.push_back(json{{"source", e.source},
                             {"target", e.target},
                             {"relation", relation_to_json(e.relation)}});
    }
    doc["intra_edges"] = std::move(edges);

    json links = json::array();
    for (const Crosslink& c : graph.crosslinks)
        links.push_back(json{{"source", c.source}, {"target", c.target}});
    doc["crosslinks"] = std::move(links);

    return doc.dump(2) + "\n";
}

KnowledgeGraph graph_from_json(const std::string& json_text) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw ClafError(ErrorCode::SchemaMismatch, std::string("not valid JSON: ") + e.what());
    }
    if (!doc.is_object())
        throw ClafError(ErrorCode::SchemaMismatch, "graph document must be a JSON object");
    const json& version = require(doc, "version");
    if (!version.is_number_integer() || version.get<int>() != kGraphSchemaVersion)
        throw ClafError(ErrorCode::SchemaMismatch,
                        "unsupported graph schema version " + version.dump());

    KnowledgeGraph graph;
    for (const json& e : require(doc, "entities")) {
        Entity entity = entity_from_json(e);
        const std::string key = canonical_key(entity.name);
        if (!graph.entities.emplace(key, std::move(entity)).second)
            throw ClafError(ErrorCode::InvariantViolation,
                            "duplicate entity name '" + e.at("name").get<std::string>() + "'");
    }

    for (const json& e : require(doc, "intra_edges")) {
        IntraEdge edge;
        edge.source = require(e, "source").get<std::string>();
        edge.target = require(e, "target").get<std::string>();
        edge.relation = relation_from_json(require(e, "relation"));
        const Entity& src = resolve(graph, edge.source, "intra_edge");
        const Entity& dst = resolve(graph, edge.target, "intra_edge");
        if (src.level != dst.level)
            throw ClafError(ErrorCode::InvariantViolation,
                            "intra_edge '" + edge.source + "' -> '" + edge.target +
                                "' joins different levels");
        graph.intra_edges.push_back(std::move(edge));
    }

    for (const json& e : require(doc, "crosslinks")) {
        Crosslink link;
        link.source = require(e, "source").get<std::string>();
        link.target = require(e, "target").get<std::string>();
        const Entity& src = resolve(graph, link.source, "crosslink");
        const Entity& dst = resolve(graph, link.target, "crosslink");
        if (std::abs(src.level - dst.level) != 1)
            throw ClafError(ErrorCode::InvariantViolation,
                            "crosslink '" + link.source + "' -> '" + link.target +
                                "' does not join adjacent levels");
        graph.crosslinks.push_back(std::move(link));
    }

    return graph;
}

void save_graph(const KnowledgeGraph& graph, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ClafError(ErrorCode::IoFailure, "cannot open '" + path + "' for writing");
    out << graph_to_json(graph);
    if (!out) throw ClafError(ErrorCode::IoFailure, "failed writing '" + path + "'");
}

KnowledgeGraph load_graph(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ClafError(ErrorCode::IoFailure, "cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return graph_from_json(buffer.str());
}

} // namespace claf::kg
