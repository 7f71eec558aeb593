#include "claf/harness.hpp"

#include <array>
#include <cctype>
#include <exception>
#include <fstream>
#include <optional>
#include <string_view>

#include <nlohmann/json.hpp>

#include "claf/error.hpp"
#include "claf/textutil.hpp"

namespace claf::harness {
namespace {

struct Placeholder {
    std::string_view tag;
    const std::string* value;
};

} // namespace

std::string build_judge_prompt(const std::string& question,
                               const std::string& answer_basic,
                               const std::string& answer_intermediate,
                               const std::string& answer_advanced) {
    const std::array<Placeholder, 4> placeholders = {{
        {"{question}", &question},
        {"{answer_type_0}", &answer_basic},
        {"{answer_type_1}", &answer_intermediate},
        {"{answer_type_2}", &answer_advanced},
    }};
    for (const auto& ph : placeholders) {
        if (text::trim(*ph.value).empty()) {
            throw ClafError(ErrorCode::EmptyField,
                            "judge prompt field " + std::string(ph.tag) + " is empty");
        }
    }

    const std::string_view tmpl = kJudgePromptTemplate;
    std::string out;
    out.reserve(tmpl.size() + question.size() + answer_basic.size() +
                answer_intermediate.size() + answer_advanced.size());
    std::size_t pos = 0;
    while (pos < tmpl.size()) {
        if (tmpl[pos] == '{') {
            bool replaced = false;
            for (const auto& ph : placeholders) {
                if (tmpl.substr(pos, ph.tag.size()) == ph.tag) {
                    out += *ph.value; // inserted text is not re-scanned
                    pos += ph.tag.size();
                    replaced = true;
                    break;
                }
            }
            if (replaced) continue;
        }
        out.push_back(tmpl[pos]);
        ++pos;
    }
    return out;
}

std::string build_judge_prompt(const scale::ScaleRecord& record) {
    return build_judge_prompt(record.question, record.response_basic,
                              record.response_intermediate, record.response_advanced);
}

JudgeScores parse_judge_scores(const std::string& completion) {
    std::vector<double> numbers;
    const std::size_t n = completion.size();
    std::size_t i = 0;
    auto digit = [&](std::size_t k) {
        return k < n && std::isdigit(static_cast<unsigned char>(completion[k])) != 0;
    };
    while (i < n && numbers.size() < 3) {
        std::size_t j = i;
        if (completion[j] == '+' || completion[j] == '-') ++j;
        std::size_t int_start = j;
        while (digit(j)) ++j;
        const bool has_int = j > int_start;
        bool has_frac = false;
        if (j < n && completion[j] == '.') {
            std::size_t frac_start = j + 1;
            std::size_t k = frac_start;
            while (digit(k)) ++k;
            if (k > frac_start) {
                has_frac = true;
                j = k;
            }
        }
        if (has_int || has_frac) {
            numbers.push_back(std::stod(completion.substr(i, j - i)));
            i = j;
        } else {
            ++i;
        }
    }
    if (numbers.size() < 3) {
        throw ClafError(ErrorCode::InsufficientScores,
                        "completion contains " + std::to_string(numbers.size()) +
                            " numbers, need 3");
    }
    for (const double score : numbers) {
        if (!(score >= 0.0 && score <= 100.0)) {
            throw ClafError(ErrorCode::OutOfRange,
                            "score " + std::to_string(score) + " outside [0, 100]");
        }
    }
    return JudgeScores{numbers[0], numbers[1], numbers[2]};
}

MatchLevelReport aggregate(const std::vector<JudgeResult>& results) {
    if (results.empty()) {
        throw ClafError(ErrorCode::EmptyInput, "no judge results to aggregate");
    }
    MatchLevelReport report;
    report.n = results.size();
    for (const auto& result : results) {
        report.mean_basic += result.scores.basic;
        report.mean_intermediate += result.scores.intermediate;
        report.mean_advanced += result.scores.advanced;
    }
    const double n = static_cast<double>(report.n);
    report.mean_basic /= n;
    report.mean_intermediate /= n;
    report.mean_advanced /= n;
    report.average =
        (report.mean_basic + report.mean_intermediate + report.mean_advanced) / 3.0;
    return report;
}

EvalRun run_eval(const std::vector<scale::ScaleRecord>& records,
                 const judge::JudgeClient& judge, const std::string& out_path) {
    if (records.empty()) {
        throw ClafError(ErrorCode::EmptyInput, "no records to evaluate");
    }

    const int n = static_cast<int>(records.size());
    std::vector<std::optional<JudgeScores>> scores(records.size());
    std::vector<std::string> errors(records.size());

// Bounded width: the judge may be a remote service.
#pragma omp parallel for schedule(static) num_threads(4)
    for (int i = 0; i < n; ++i) {
        const auto& record = records[static_cast<std::size_t>(i)];
        try {
            const std::string prompt = build_judge_prompt(record);
            const std::string completion = judge.complete(record.id, prompt);
            scores[static_cast<std::size_t>(i)] = parse_judge_scores(completion);
        } catch (const std::exception& e) {
            errors[static_cast<std::size_t>(i)] = e.what();
        }
    }

    EvalRun run;
    for (std::size_t i = 0; i < records.size(); ++i) {
        if (scores[i].has_value()) {
            run.results.push_back({records[i].id, *scores[i]});
        } else {
            run.failures.push_back({records[i].id, errors[i]});
        }
    }
    if (run.results.empty()) {
        throw ClafError(ErrorCode::EmptyInput,
                        "every record failed; first error: " + run.failures.front().message);
    }
    run.report = aggregate(run.results);

    std::ofstream out(out_path);
    if (!out) {
        throw ClafError(ErrorCode::IoFailure, "cannot open " + out_path + " for writing");
    }
    for (const auto& result : run.results) {
        nlohmann::json line;
        line["record_id"] = result.record_id;
        line["scores"] = {
            {"basic", result.scores.basic},
            {"intermediate", result.scores.intermediate},
            {"advanced", result.scores.advanced},
        };
        out << line.dump() << '\n';
    }
    if (!out) {
        throw ClafError(ErrorCode::IoFailure, "failed writing " + out_path);
    }

    nlohmann::json report;
    report["n"] = run.report.n;
    report["excluded_count"] = run.failures.size();
    report["mean_basic"] = run.report.mean_basic;
    report["mean_intermediate"] = run.report.mean_intermediate;
    report["mean_advanced"] = run.report.mean_advanced;
    report["average"] = run.report.average;
    const std::string report_path = out_path + ".report.json";
    std::ofstream report_out(report_path);
    if (!report_out) {
        throw ClafError(ErrorCode::IoFailure,
                        "cannot open " + report_path + " for writing");
    }
    report_out << report.dump(2) << '\n';
    if (!report_out) {
        throw ClafError(ErrorCode::IoFailure, "failed writing " + report_path);
    }

    return run;
}

} // namespace claf::harness
