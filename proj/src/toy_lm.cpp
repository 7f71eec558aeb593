#include "claf/toy_lm.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "claf/error.hpp"
#include "claf/textutil.hpp"

namespace claf::lm {

ToyBigramScorer::ToyBigramScorer(const std::vector<std::string>& sentences) {
    std::set<std::string> words;
    std::vector<std::vector<std::string>> tokenized;
    tokenized.reserve(sentences.size());
    for (const auto& sentence : sentences) {
        auto tokens = text::lower_word_tokens(sentence);
        if (tokens.empty()) continue;
        words.insert(tokens.begin(), tokens.end());
        tokenized.push_back(std::move(tokens));
    }
    if (words.empty()) {
        throw ClafError(ErrorCode::EmptyInput, "scorer corpus has no words");
    }

    vocab_.assign(words.begin(), words.end());
    for (std::size_t i = 0; i < vocab_.size(); ++i) {
        index_.emplace(vocab_[i], static_cast<int>(i));
    }

    const std::size_t v = vocab_.size();
    bigram_counts_.assign(v + 1, std::vector<int>(v, 0));
    context_totals_.assign(v + 1, 0);
    for (const auto& tokens : tokenized) {
        int prev = -1;
        for (const auto& token : tokens) {
            const int id = index_.at(token);
            bigram_counts_[prev + 1][id] += 1;
            context_totals_[prev + 1] += 1;
            prev = id;
        }
    }
}

int ToyBigramScorer::token_id(std::string_view word) const {
    const auto it = index_.find(text::fold(text::trim(word)));
    return it == index_.end() ? -1 : it->second;
}

int ToyBigramScorer::row_for(int prev_id) const {
    if (prev_id < -1 || prev_id >= static_cast<int>(vocab_.size())) {
        throw ClafError(ErrorCode::OutOfRange,
                        "previous token id " + std::to_string(prev_id) +
                            " outside [-1, " + std::to_string(vocab_.size()) + ")");
    }
    return prev_id + 1;
}

double ToyBigramScorer::score_at(int row, int next) const {
    const double numerator = bigram_counts_[row][next] + 1.0;
    const double denominator =
        static_cast<double>(context_totals_[row]) + static_cast<double>(vocab_.size());
    return std::log(numerator / denominator);
}

std::vector<double> ToyBigramScorer::scores(int prev_id) const {
    const int row = row_for(prev_id);
    const int v = static_cast<int>(vocab_.size());
    std::vector<double> out(static_cast<std::size_t>(v));
#pragma omp parallel for schedule(static)
    for (int next = 0; next < v; ++next) {
        out[static_cast<std::size_t>(next)] = score_at(row, next);
    }
    return out;
}

std::vector<double> ToyBigramScorer::scores_serial(int prev_id) const {
    const int row = row_for(prev_id);
    const int v = static_cast<int>(vocab_.size());
    std::vector<double> out(static_cast<std::size_t>(v));
    for (int next = 0; next < v; ++next) {
        out[static_cast<std::size_t>(next)] = score_at(row, next);
    }
    return out;
}

const ToyBigramScorer& ToyBigramScorer::demo() {
    static const ToyBigramScorer scorer(demo_corpus());
    return scorer;
}

} // namespace claf::lm
