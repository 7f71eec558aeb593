#pragma once

namespace claf::preference {

/// Log-probabilities of a preferred and a rejected response under the policy
/// being tuned and under a frozen reference, plus the sharpness parameter.
struct PreferencePair {
    double policy_logp_preferred = 0.0;
    double policy_logp_rejected = 0.0;
    double ref_logp_preferred = 0.0;
    double ref_logp_rejected = 0.0;
    double beta = 0.1;

    /// Log-probabilities must be <= 0 and finite, beta > 0.
    /// Throws ClafError(InvalidConfig) otherwise.
    void validate() const;
};

/// log(1 + exp(x)) without overflow for large |x|.
double softplus(double x);

/// Probability that the first response is preferred given the two reward
/// values: sigmoid(reward_preferred - reward_rejected).
double preference_probability(double reward_preferred, double reward_rejected);

/// The pair's implied reward margin:
/// (policy - reference) log-ratio of the preferred response minus the same
/// quantity for the rejected response.
double dpo_margin(const PreferencePair& pair);

/// Pairwise loss -log sigmoid(beta * margin), computed as
/// softplus(-beta * margin) for numerical stability.
double dpo_pair_loss(const PreferencePair& pair);

/// d(loss)/d(margin) = -beta * sigmoid(-beta * margin).
double dpo_loss_margin_gradient(const PreferencePair& pair);

} // namespace claf::preference
