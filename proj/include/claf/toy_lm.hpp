#pragma once

#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace claf::lm {

/// Add-one-smoothed bigram scorer over an embedded mini corpus of simple
/// science sentences. Small enough to be exact and deterministic, rich enough
/// to exercise the decoding controller end to end.
class ToyBigramScorer {
public:
    explicit ToyBigramScorer(const std::vector<std::string>& sentences);

    /// The embedded corpus and a scorer built from it.
    static const std::vector<std::string>& demo_corpus();
    static const ToyBigramScorer& demo();

    const std::vector<std::string>& vocab() const { return vocab_; }
    /// Index of a word in the vocabulary, -1 when absent. Case-insensitive.
    int token_id(std::string_view word) const;

    /// Log-probabilities for every vocabulary entry following `prev_id`
    /// (-1 = sentence start). Parallel across the vocabulary.
    std::vector<double> scores(int prev_id) const;
    /// Single-threaded reference with identical results.
    std::vector<double> scores_serial(int prev_id) const;

private:
    double score_at(int row, int next) const;
    int row_for(int prev_id) const; // validates prev_id

    std::vector<std::string> vocab_;
    std::unordered_map<std::string, int> index_;
    std::vector<std::vector<int>> bigram_counts_; // [prev + 1][next]
    std::vector<long long> context_totals_;       // [prev + 1]
};

} // namespace claf::lm
