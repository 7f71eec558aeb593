#include "claf/kcg.hpp"

#include <algorithm>
#include <cmath>

#include "claf/error.hpp"
#include "claf/stopwords.hpp"
#include "claf/textutil.hpp"

namespace claf::kcg {

void KcgConfig::validate() const {
    if (!(weight_ceiling > 0.0) || !std::isfinite(weight_ceiling)) {
        throw ClafError(ErrorCode::InvalidConfig, "weight ceiling must be positive");
    }
    if (!(alignment_threshold >= 0.0 && alignment_threshold <= 1.0)) {
        throw ClafError(ErrorCode::InvalidConfig,
                        "alignment threshold must lie in [0, 1]");
    }
    if (!(reset_threshold > alignment_threshold && reset_threshold <= 1.0)) {
        throw ClafError(ErrorCode::InvalidConfig,
                        "reset threshold must lie in (alignment threshold, 1]");
    }
    if (!(ema_alpha > 0.0 && ema_alpha <= 1.0)) {
        throw ClafError(ErrorCode::InvalidConfig, "ema alpha must lie in (0, 1]");
    }
    if (std::isnan(filter_floor)) {
        throw ClafError(ErrorCode::InvalidConfig, "filter floor must not be NaN");
    }
}

double sigmoid(double x) {
    if (x >= 0.0) {
        const double z = std::exp(-x);
        return 1.0 / (1.0 + z);
    }
    const double z = std::exp(x);
    return z / (1.0 + z);
}

double update_weight(double alignment, double signal, const KcgConfig& config) {
    return config.weight_ceiling *
           sigmoid(-(config.alignment_threshold - alignment) * signal);
}

KcgController::KcgController(KcgConfig config, std::vector<ControlCenter> centers,
                             std::size_t vocab_size)
    : config_(config), centers_(std::move(centers)), vocab_size_(vocab_size) {
    config_.validate();
    for (const auto& center : centers_) {
        if (center.token_ids.empty()) {
            throw ClafError(ErrorCode::InvalidConfig,
                            "control center \"" + center.keyword +
                                "\" covers no tokens");
        }
        for (const int id : center.token_ids) {
            if (id < 0 || static_cast<std::size_t>(id) >= vocab_size_) {
                throw ClafError(ErrorCode::OutOfRange,
                                "token id " + std::to_string(id) +
                                    " outside the vocabulary");
            }
        }
    }
}

std::vector<double> KcgController::step(int generated_token_id, double signal,
                                        const std::vector<double>& base_scores) {
    if (base_scores.size() != vocab_size_) {
        throw ClafError(ErrorCode::LengthMismatch,
                        "score vector has " + std::to_string(base_scores.size()) +
                            " entries, vocabulary has " + std::to_string(vocab_size_));
    }
    std::vector<double> adjusted = base_scores;
    for (auto& center : centers_) {
        const bool hit = generated_token_id >= 0 &&
                         std::find(center.token_ids.begin(), center.token_ids.end(),
                                   generated_token_id) != center.token_ids.end();
        const double observed = hit ? 1.0 : std::clamp(signal, 0.0, 1.0);
        center.cumulative_alignment =
            (1.0 - config_.ema_alpha) * center.cumulative_alignment +
            config_.ema_alpha * observed;
        center.weight = update_weight(center.cumulative_alignment, signal, config_);
        if (center.cumulative_alignment > config_.reset_threshold) {
            center.weight = config_.weight_ceiling / 2.0;
            center.cumulative_alignment = config_.alignment_threshold;
        }
        for (const int id : center.token_ids) {
            adjusted[static_cast<std::size_t>(id)] += center.weight;
        }
    }
    ++step_count_;
    return adjusted;
}

ControllerInit init_controller(const std::vector<std::string>& keywords,
                               const std::vector<std::string>& vocab,
                               const KcgConfig& config) {
    config.validate();
    if (vocab.empty()) {
        throw ClafError(ErrorCode::EmptyInput, "vocabulary is empty");
    }

    std::vector<ControlCenter> centers;
    std::vector<std::string> skipped;
    for (const auto& keyword : keywords) {
        const std::string folded = text::fold(text::trim(keyword));
        if (folded.empty()) {
            skipped.push_back(keyword);
            continue;
        }
        ControlCenter center;
        center.keyword = keyword;
        for (std::size_t i = 0; i < vocab.size(); ++i) {
            const std::string& word = vocab[i];
            const bool exact = text::fold(word) == folded;
            // Multi-word keywords cover each of their content words.
            const bool part = !exact && !text::is_stopword(text::fold(word)) &&
                              text::contains_word(folded, word);
            if (exact || part) {
                center.token_ids.push_back(static_cast<int>(i));
            }
        }
        if (center.token_ids.empty()) {
            skipped.push_back(keyword);
            continue;
        }
        center.weight = config.weight_ceiling / 2.0;
        center.cumulative_alignment = 0.0;
        centers.push_back(std::move(center));
    }

    return ControllerInit{KcgController(config, std::move(centers), vocab.size()),
                          std::move(skipped)};
}

std::vector<int> filter_candidates(const std::vector<double>& scores,
                                   const KcgConfig& config) {
    if (scores.empty()) {
        throw ClafError(ErrorCode::EmptyInput, "no scores to filter");
    }
    std::vector<int> kept;
    for (std::size_t i = 0; i < scores.size(); ++i) {
        if (scores[i] >= config.filter_floor) {
            kept.push_back(static_cast<int>(i));
        }
    }
    if (kept.empty()) {
        const auto best = std::max_element(scores.begin(), scores.end());
        kept.push_back(static_cast<int>(best - scores.begin()));
    }
    return kept;
}

DemoResult generate_demo(const kg::KnowledgeGraph& graph,
                         const retrieval::RetrievalRequest& request,
                         const std::string& prompt, int steps,
                         const KcgConfig& config) {
    if (steps < 1) {
        throw ClafError(ErrorCode::InvalidConfig, "step count must be at least 1");
    }
    const auto& scorer = lm::ToyBigramScorer::demo();
    const auto subset = retrieval::retrieve(graph, request);

    std::vector<std::string> keywords;
    keywords.reserve(subset.entities.size());
    for (const auto& scored : subset.entities) {
        keywords.push_back(scored.entity.name);
    }

    auto init = init_controller(keywords, scorer.vocab(), config);
    auto& controller = init.controller;

    DemoResult result;
    result.keywords = std::move(keywords);
    result.skipped_keywords = std::move(init.skipped_keywords);

    int prev_id = -1;
    for (const auto& token : text::lower_word_tokens(prompt)) {
        const int id = scorer.token_id(token);
        if (id >= 0) prev_id = id;
    }

    auto in_any_center = [&controller](int id) {
        if (id < 0) return false;
        for (const auto& center : controller.centers()) {
            if (std::find(center.token_ids.begin(), center.token_ids.end(), id) !=
                center.token_ids.end()) {
                return true;
            }
        }
        return false;
    };

    for (int t = 0; t < steps; ++t) {
        const auto base = scorer.scores(prev_id);
        const double signal = in_any_center(prev_id) ? 1.0 : 0.0;
        const auto adjusted = controller.step(prev_id, signal, base);
        const auto candidates = filter_candidates(adjusted, config);

        int next = candidates.front();
        for (const int candidate : candidates) {
            if (adjusted[static_cast<std::size_t>(candidate)] >
                adjusted[static_cast<std::size_t>(next)]) {
                next = candidate;
            }
        }

        DemoStep record;
        record.token = scorer.vocab()[static_cast<std::size_t>(next)];
        record.token_id = next;
        for (const auto& center : controller.centers()) {
            record.centers.push_back(
                {center.keyword, center.weight, center.cumulative_alignment});
        }
        result.tokens.push_back(record.token);
        result.trace.push_back(std::move(record));
        prev_id = next;
    }

    return result;
}

} // namespace claf::kcg
