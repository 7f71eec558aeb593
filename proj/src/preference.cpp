#include "claf/preference.hpp"

#include <cmath>

#include "claf/error.hpp"
#include "claf/kcg.hpp"

namespace claf::preference {
namespace {

void check_logp(double value, const char* what) {
    if (!std::isfinite(value) || value > 0.0) {
        throw ClafError(ErrorCode::InvalidConfig,
                        std::string(what) + " must be a finite log-probability <= 0");
    }
}

} // namespace

void PreferencePair::validate() const {
    check_logp(policy_logp_preferred, "policy log-prob of the preferred response");
    check_logp(policy_logp_rejected, "policy log-prob of the rejected response");
    check_logp(ref_logp_preferred, "reference log-prob of the preferred response");
    check_logp(ref_logp_rejected, "reference log-prob of the rejected response");
    if (!(beta > 0.0) || !std::isfinite(beta)) {
        throw ClafError(ErrorCode::InvalidConfig, "beta must be positive");
    }
}

double softplus(double x) {
    if (x > 0.0) {
        return x + std::log1p(std::exp(-x));
    }
    return std::log1p(std::exp(x));
}

double preference_probability(double reward_preferred, double reward_rejected) {
    return kcg::sigmoid(reward_preferred - reward_rejected);
}

double dpo_margin(const PreferencePair& pair) {
    return (pair.policy_logp_preferred - pair.ref_logp_preferred) -
           (pair.policy_logp_rejected - pair.ref_logp_rejected);
}

double dpo_pair_loss(const PreferencePair& pair) {
    pair.validate();
    return softplus(-pair.beta * dpo_margin(pair));
}

double dpo_loss_margin_gradient(const PreferencePair& pair) {
    pair.validate();
    return -pair.beta * kcg::sigmoid(-pair.beta * dpo_margin(pair));
}

} // namespace claf::preference
