#pragma once

#include <limits>
#include <string>
#include <vector>

#include "claf/retrieval.hpp"
#include "claf/toy_lm.hpp"

namespace claf::kcg {

/// Tuning knobs for the keyword-centered decoding controller.
struct KcgConfig {
    double weight_ceiling = 2.0;      // upper bound on a center's additive weight
    double alignment_threshold = 0.5; // target alignment the monitor steers toward
    double reset_threshold = 0.9;     // alignment above this snaps the center back
    double ema_alpha = 0.1;           // smoothing for the alignment moving average
    double filter_floor = -std::numeric_limits<double>::infinity();

    /// Throws ClafError(InvalidConfig) when a knob is out of range.
    void validate() const;
};

/// One monitored keyword: the vocabulary ids it covers, its current additive
/// weight, and its smoothed alignment estimate.
struct ControlCenter {
    std::string keyword;
    std::vector<int> token_ids;
    double weight = 0.0;
    double cumulative_alignment = 0.0;
};

/// Numerically stable logistic function.
double sigmoid(double x);

/// Weight update rule: ceiling * sigmoid(-(threshold - alignment) * signal).
/// Alignment above the threshold grows the weight with a positive signal;
/// alignment below it shrinks the weight.
double update_weight(double alignment, double signal, const KcgConfig& config);

class KcgController {
public:
    KcgController(KcgConfig config, std::vector<ControlCenter> centers,
                  std::size_t vocab_size);

    /// One decoding step: update every center's alignment monitor from the
    /// token that was just generated, recompute its weight, reset saturated
    /// centers, and return base_scores with the center weights added onto
    /// their covered ids. `generated_token_id` may be -1 (no token yet).
    /// Throws ClafError(LengthMismatch) when base_scores.size() != vocab size.
    std::vector<double> step(int generated_token_id, double signal,
                             const std::vector<double>& base_scores);

    const KcgConfig& config() const { return config_; }
    const std::vector<ControlCenter>& centers() const { return centers_; }
    std::size_t vocab_size() const { return vocab_size_; }
    std::size_t step_count() const { return step_count_; }

private:
    KcgConfig config_;
    std::vector<ControlCenter> centers_;
    std::size_t vocab_size_ = 0;
    std::size_t step_count_ = 0;
};

/// Builds one control center per keyword that matches at least one vocabulary
/// entry (exact match, or the entry appears as a whole word inside a
/// multi-word keyword). Unmatched keywords are reported, not fatal.
struct ControllerInit {
    KcgController controller;
    std::vector<std::string> skipped_keywords;
};
ControllerInit init_controller(const std::vector<std::string>& keywords,
                               const std::vector<std::string>& vocab,
                               const KcgConfig& config);

/// Candidate indices whose score is at or above the filter floor; when the
/// floor removes everything, the single best-scoring index survives.
std::vector<int> filter_candidates(const std::vector<double>& scores,
                                   const KcgConfig& config);

struct CenterSnapshot {
    std::string keyword;
    double weight = 0.0;
    double cumulative_alignment = 0.0;
};

struct DemoStep {
    std::string token;
    int token_id = -1;
    std::vector<CenterSnapshot> centers;
};

struct DemoResult {
    std::vector<std::string> tokens;
    std::vector<DemoStep> trace;
    std::vector<std::string> keywords;
    std::vector<std::string> skipped_keywords;
};

/// End-to-end demo: retrieve a level-appropriate subset from the graph, turn
/// its entity names into control centers over the toy scorer's vocabulary,
/// then greedily decode `steps` tokens from the prompt.
DemoResult generate_demo(const kg::KnowledgeGraph& graph,
                         const retrieval::RetrievalRequest& request,
                         const std::string& prompt, int steps,
                         const KcgConfig& config);

} // namespace claf::kcg
