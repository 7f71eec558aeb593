#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "claf/embedder.hpp"

namespace claf::scale {

/// A term plus its tier-appropriate renderings, e.g.
/// photosynthesis -> "plant food-making" at the basic tier.
struct TerminologyMapping {
    std::string term;
    std::string basic;
    std::string intermediate;
    std::string advanced;

    bool operator==(const TerminologyMapping&) const = default;
};

/// One dataset row: a question answered three times, once per tier.
struct ScaleRecord {
    std::string id;
    std::string category;
    std::string question;
    std::string response_basic;
    std::string response_intermediate;
    std::string response_advanced;
    std::vector<TerminologyMapping> terminology;

    bool operator==(const ScaleRecord&) const = default;
};

/// The categories a record may carry.
const std::vector<std::string>& known_categories();

struct RecordIssue {
    std::size_t line = 0; // 1-based line in the source file
    std::string message;
};

struct LoadResult {
    std::vector<ScaleRecord> records;
    std::vector<RecordIssue> issues;
};

/// Parses one JSONL line. Throws ClafError(SchemaViolation) on any problem.
ScaleRecord record_from_json_line(std::string_view line);
/// Serializes a record as a single compact JSON line (keys sorted, no newline).
std::string record_to_json_line(const ScaleRecord& record);

/// Strict load: any malformed line aborts with ClafError(SchemaViolation)
/// naming the line number; duplicate ids are also violations.
std::vector<ScaleRecord> load_records(const std::string& path);
/// Lenient load: malformed lines become issues, good lines survive.
LoadResult load_records_lenient(const std::string& path);
/// One compact JSON object per line; load(save(x)) == x.
void save_records(const std::string& path, const std::vector<ScaleRecord>& records);

const std::string& response_for_level(const ScaleRecord& record, int level);

/// Rewrites `txt` for a tier by substituting each mapped term with its
/// tier rendering. Longest terms win, matches are case-insensitive on word
/// boundaries, and a leading capital on the matched text is preserved.
/// Substituted text is never re-scanned.
std::string apply_terminology(std::string_view txt,
                              const std::vector<TerminologyMapping>& mappings,
                              int level);

struct ScaleStats {
    std::map<std::string, std::size_t> category_counts;
    std::size_t total = 0;
};
ScaleStats stats(const std::vector<ScaleRecord>& records);

/// Cosine similarity; throws DimensionMismatch on length disagreement and
/// ZeroVector when either vector has zero norm.
double cosine_similarity(const std::vector<double>& a, const std::vector<double>& b);

/// Pairwise similarity of a record's three responses under an embedder.
struct CoherenceReport {
    std::string record_id;
    double sim_basic_intermediate = 0.0;
    double sim_intermediate_advanced = 0.0;
    double sim_basic_advanced = 0.0;
    double threshold = 0.0;
    bool pass = false;
};

inline constexpr double kDefaultCoherenceThreshold = 0.75;

CoherenceReport verify_triple(const ScaleRecord& record,
                              const embed::Embedder& embedder,
                              double threshold = kDefaultCoherenceThreshold);

/// Verifies every record; output is indexed like the input. Parallel across
/// records with a small bounded thread count.
std::vector<CoherenceReport> verify_records(
    const std::vector<ScaleRecord>& records, const embed::Embedder& embedder,
    double threshold = kDefaultCoherenceThreshold);

} // namespace claf::scale
