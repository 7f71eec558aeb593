#pragma once

#include <string>
#include <vector>

#include "claf/judge.hpp"
#include "claf/scale.hpp"

namespace claf::harness {

/// Scoring prompt sent to the judge. Fixed rubric text with four placeholders:
/// {question}, {answer_type_0}, {answer_type_1}, {answer_type_2}.
extern const char* const kJudgePromptTemplate;
inline constexpr int kJudgePromptVersion = 1;

/// Fills the template. Placeholder values are inserted in a single pass and
/// never re-scanned, so answers containing placeholder-like text stay inert.
/// Throws ClafError(EmptyField) when any input is empty or whitespace.
std::string build_judge_prompt(const std::string& question,
                               const std::string& answer_basic,
                               const std::string& answer_intermediate,
                               const std::string& answer_advanced);
std::string build_judge_prompt(const scale::ScaleRecord& record);

struct JudgeScores {
    double basic = 0.0;
    double intermediate = 0.0;
    double advanced = 0.0;
};

/// Reads the first three numbers out of a judge completion, in audience-type
/// order. Throws InsufficientScores when fewer than three numbers appear and
/// OutOfRange when a score falls outside [0, 100].
JudgeScores parse_judge_scores(const std::string& completion);

struct JudgeResult {
    std::string record_id;
    JudgeScores scores;
};

/// Per-tier mean scores plus their average.
struct MatchLevelReport {
    double mean_basic = 0.0;
    double mean_intermediate = 0.0;
    double mean_advanced = 0.0;
    double average = 0.0;
    std::size_t n = 0;
};

/// Throws ClafError(EmptyInput) when there are no results to aggregate.
MatchLevelReport aggregate(const std::vector<JudgeResult>& results);

struct EvalFailure {
    std::string record_id;
    std::string message;
};

struct EvalRun {
    std::vector<JudgeResult> results; // input order, failed records excluded
    std::vector<EvalFailure> failures;
    MatchLevelReport report;
};

/// Scores every record with the judge and aggregates. Per-record failures are
/// excluded and reported, not fatal. Writes one JSON result line per scored
/// record to `out_path` and the aggregate report to `out_path + ".report.json"`;
/// both outputs are byte-deterministic for a deterministic judge.
EvalRun run_eval(const std::vector<scale::ScaleRecord>& records,
                 const judge::JudgeClient& judge, const std::string& out_path);

} // namespace claf::harness
