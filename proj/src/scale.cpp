#include "claf/scale.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <exception>
#include <fstream>
#include <unordered_set>

#include <nlohmann/json.hpp>

#include "claf/error.hpp"
#include "claf/graph.hpp"
#include "claf/textutil.hpp"

namespace claf::scale {
namespace {

using nlohmann::json;

std::string require_string(const json& obj, const char* key) {
    if (!obj.contains(key) || !obj[key].is_string()) {
        throw ClafError(ErrorCode::SchemaViolation,
                        std::string("missing or non-string field \"") + key + "\"");
    }
    auto value = obj[key].get<std::string>();
    if (value.empty()) {
        throw ClafError(ErrorCode::SchemaViolation,
                        std::string("field \"") + key + "\" is empty");
    }
    return value;
}

} // namespace

const std::vector<std::string>& known_categories() {
    static const std::vector<std::string> kCategories = {
        "science", "nature", "biology", "cosmology", "poetry",
    };
    return kCategories;
}

ScaleRecord record_from_json_line(std::string_view line) {
    json doc = json::parse(line, nullptr, false);
    if (doc.is_discarded() || !doc.is_object()) {
        throw ClafError(ErrorCode::SchemaViolation, "line is not a JSON object");
    }

    ScaleRecord record;
    record.id = require_string(doc, "id");
    record.category = require_string(doc, "category");
    const auto& categories = known_categories();
    if (std::find(categories.begin(), categories.end(), record.category) ==
        categories.end()) {
        throw ClafError(ErrorCode::SchemaViolation,
                        "unknown category \"" + record.category + "\"");
    }
    record.question = require_string(doc, "question");

    if (!doc.contains("responses") || !doc["responses"].is_object()) {
        throw ClafError(ErrorCode::SchemaViolation, "missing \"responses\" object");
    }
    const auto& responses = doc["responses"];
    record.response_basic = require_string(responses, "basic");
    record.response_intermediate = require_string(responses, "intermediate");
    record.response_advanced = require_string(responses, "advanced");

    if (doc.contains("terminology")) {
        if (!doc["terminology"].is_array()) {
            throw ClafError(ErrorCode::SchemaViolation,
                            "\"terminology\" is not an array");
        }
        for (const auto& entry : doc["terminology"]) {
            if (!entry.is_object()) {
                throw ClafError(ErrorCode::SchemaViolation,
                                "terminology entry is not an object");
            }
            TerminologyMapping mapping;
            mapping.term = require_string(entry, "term");
            mapping.basic = require_string(entry, "basic");
            mapping.intermediate = require_string(entry, "intermediate");
            mapping.advanced = require_string(entry, "advanced");
            record.terminology.push_back(std::move(mapping));
        }
    }
    return record;
}

std::string record_to_json_line(const ScaleRecord& record) {
    json doc;
    doc["id"] = record.id;
    doc["category"] = record.category;
    doc["question"] = record.question;
    doc["responses"] = {
        {"basic", record.response_basic},
        {"intermediate", record.response_intermediate},
        {"advanced", record.response_advanced},
    };
    doc["terminology"] = json::array();
    for (const auto& mapping : record.terminology) {
        doc["terminology"].push_back({
            {"term", mapping.term},
            {"basic", mapping.basic},
            {"intermediate", mapping.intermediate},
            {"advanced", mapping.advanced},
        });
    }
    return doc.dump();
}

std::vector<ScaleRecord> load_records(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw ClafError(ErrorCode::IoFailure, "cannot open " + path);
    }
    std::vector<ScaleRecord> records;
    std::unordered_set<std::string> seen_ids;
    std::string line;
    std::size_t line_number = 0;
    while (std::getline(in, line)) {
        ++line_number;
        if (text::trim(line).empty()) continue;
        try {
            records.push_back(record_from_json_line(line));
        } catch (const ClafError& e) {
            throw ClafError(ErrorCode::SchemaViolation,
                            path + ":" + std::to_string(line_number) + ": " + e.what());
        }
        if (!seen_ids.insert(records.back().id).second) {
            throw ClafError(ErrorCode::SchemaViolation,
                            path + ":" + std::to_string(line_number) +
                                ": duplicate record id \"" + records.back().id + "\"");
        }
    }
    return records;
}

LoadResult load_records_lenient(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw ClafError(ErrorCode::IoFailure, "cannot open " + path);
    }
    LoadResult result;
    std::unordered_set<std::string> seen_ids;
    std::string line;
    std::size_t line_number = 0;
    while (std::getline(in, line)) {
        ++line_number;
        if (text::trim(line).empty()) continue;
        try {
            auto record = record_from_json_line(line);
            if (!seen_ids.insert(record.id).second) {
                result.issues.push_back(
                    {line_number, "duplicate record id \"" + record.id + "\""});
                continue;
            }
            result.records.push_back(std::move(record));
        } catch (const ClafError& e) {
            result.issues.push_back({line_number, e.what()});
        }
    }
    return result;
}

void save_records(const std::string& path, const std::vector<ScaleRecord>& records) {
    std::ofstream out(path);
    if (!out) {
        throw ClafError(ErrorCode::IoFailure, "cannot open " + path + " for writing");
    }
    for (const auto& record : records) {
        out << record_to_json_line(record) << '\n';
    }
    if (!out) {
        throw ClafError(ErrorCode::IoFailure, "failed writing " + path);
    }
}

const std::string& response_for_level(const ScaleRecord& record, int level) {
    switch (level) {
        case kg::kLevelBasic:
            return record.response_basic;
        case kg::kLevelIntermediate:
            return record.response_intermediate;
        case kg::kLevelAdvanced:
            return record.response_advanced;
        default:
            throw ClafError(ErrorCode::UnknownLevel,
                            "no response for level " + std::to_string(level));
    }
}

namespace {

const std::string& rendering_for_level(const TerminologyMapping& mapping, int level) {
    switch (level) {
        case kg::kLevelBasic:
            return mapping.basic;
        case kg::kLevelIntermediate:
            return mapping.intermediate;
        case kg::kLevelAdvanced:
            return mapping.advanced;
        default:
            throw ClafError(ErrorCode::UnknownLevel,
                            "no terminology rendering for level " +
                                std::to_string(level));
    }
}

bool matches_at(std::string_view txt, std::size_t pos, std::string_view term) {
    if (pos + term.size() > txt.size()) return false;
    for (std::size_t i = 0; i < term.size(); ++i) {
        if (text::fold_char(txt[pos + i]) != text::fold_char(term[i])) return false;
    }
    // Whole-word boundaries on both sides.
    if (pos > 0 && text::is_word_char(txt[pos - 1])) return false;
    const std::size_t end = pos + term.size();
    if (end < txt.size() && text::is_word_char(txt[end])) return false;
    return true;
}

} // namespace

std::string apply_terminology(std::string_view txt,
                              const std::vector<TerminologyMapping>& mappings,
                              int level) {
    if (!kg::is_valid_level(level)) {
        throw ClafError(ErrorCode::UnknownLevel,
                        "no terminology level " + std::to_string(level));
    }
    std::vector<const TerminologyMapping*> ordered;
    ordered.reserve(mappings.size());
    for (const auto& mapping : mappings) {
        if (mapping.term.empty()) {
            throw ClafError(ErrorCode::EmptyField, "terminology term is empty");
        }
        ordered.push_back(&mapping);
    }
    std::stable_sort(ordered.begin(), ordered.end(),
                     [](const TerminologyMapping* a, const TerminologyMapping* b) {
                         return a->term.size() > b->term.size();
                     });

    std::string out;
    out.reserve(txt.size());
    std::size_t pos = 0;
    while (pos < txt.size()) {
        const TerminologyMapping* hit = nullptr;
        for (const auto* mapping : ordered) {
            if (matches_at(txt, pos, mapping->term)) {
                hit = mapping;
                break;
            }
        }
        if (hit == nullptr) {
            out.push_back(txt[pos]);
            ++pos;
            continue;
        }
        std::string replacement = rendering_for_level(*hit, level);
        if (!replacement.empty() && std::isupper(static_cast<unsigned char>(txt[pos]))) {
            replacement[0] = static_cast<char>(
                std::toupper(static_cast<unsigned char>(replacement[0])));
        }
        out += replacement;
        pos += hit->term.size();
    }
    return out;
}

ScaleStats stats(const std::vector<ScaleRecord>& records) {
    ScaleStats result;
    for (const auto& category : known_categories()) {
        result.category_counts[category] = 0;
    }
    for (const auto& record : records) {
        result.category_counts[record.category] += 1;
        result.total += 1;
    }
    return result;
}

double cosine_similarity(const std::vector<double>& a, const std::vector<double>& b) {
    if (a.size() != b.size()) {
        throw ClafError(ErrorCode::DimensionMismatch,
                        "vector lengths " + std::to_string(a.size()) + " and " +
                            std::to_string(b.size()) + " differ");
    }
    double dot = 0.0, na = 0.0, nb = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        dot += a[i] * b[i];
        na += a[i] * a[i];
        nb += b[i] * b[i];
    }
    if (na == 0.0 || nb == 0.0) {
        throw ClafError(ErrorCode::ZeroVector, "cosine of a zero vector is undefined");
    }
    return dot / (std::sqrt(na) * std::sqrt(nb));
}

CoherenceReport verify_triple(const ScaleRecord& record,
                              const embed::Embedder& embedder, double threshold) {
    if (!(threshold >= -1.0 && threshold <= 1.0)) {
        throw ClafError(ErrorCode::InvalidConfig,
                        "coherence threshold must lie in [-1, 1]");
    }
    const auto vectors = embedder.embed(
        {record.response_basic, record.response_intermediate, record.response_advanced});
    if (vectors.size() != 3) {
        throw ClafError(ErrorCode::SchemaMismatch,
                        "embedder returned " + std::to_string(vectors.size()) +
                            " vectors for 3 texts");
    }
    CoherenceReport report;
    report.record_id = record.id;
    report.threshold = threshold;
    report.sim_basic_intermediate = cosine_similarity(vectors[0], vectors[1]);
    report.sim_intermediate_advanced = cosine_similarity(vectors[1], vectors[2]);
    report.sim_basic_advanced = cosine_similarity(vectors[0], vectors[2]);
    const double lowest = std::min({report.sim_basic_intermediate,
                                    report.sim_intermediate_advanced,
                                    report.sim_basic_advanced});
    report.pass = lowest >= threshold;
    return report;
}

std::vector<CoherenceReport> verify_records(const std::vector<ScaleRecord>& records,
                                            const embed::Embedder& embedder,
                                            double threshold) {
    std::vector<CoherenceReport> reports(records.size());
    std::exception_ptr failure = nullptr;
    const int n = static_cast<int>(records.size());
// Bounded width: the embedder may be a remote service.
#pragma omp parallel for schedule(static) num_threads(4)
    for (int i = 0; i < n; ++i) {
        try {
            reports[static_cast<std::size_t>(i)] =
                verify_triple(records[static_cast<std::size_t>(i)], embedder, threshold);
        } catch (...) {
#pragma omp critical
            {
                if (failure == nullptr) failure = std::current_exception();
            }
        }
    }
    if (failure != nullptr) {
        std::rethrow_exception(failure);
    }
    return reports;
}

} // namespace claf::scale
