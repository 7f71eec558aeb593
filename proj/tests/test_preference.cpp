#include "doctest.h"

#include "claf/error.hpp"
#include "claf/preference.hpp"

#include <cmath>
#include <limits>
#include <random>

using namespace claf;
using preference::PreferencePair;

namespace {

PreferencePair make_pair_(double pw, double pl, double rw, double rl, double beta = 0.1) {
    PreferencePair pair;
    pair.policy_logp_preferred = pw;
    pair.policy_logp_rejected = pl;
    pair.ref_logp_preferred = rw;
    pair.ref_logp_rejected = rl;
    pair.beta = beta;
    return pair;
}

} // namespace

TEST_SUITE("preference") {

TEST_CASE("pairs are validated before use") {
    CHECK_NOTHROW(make_pair_(-1.0, -2.0, -1.5, -1.5).validate());

    CHECK_THROWS_AS(make_pair_(0.5, -2.0, -1.5, -1.5).validate(), ClafError);   // logp > 0
    CHECK_THROWS_AS(make_pair_(-1.0, -2.0, -1.5, -1.5, 0.0).validate(), ClafError); // beta
    CHECK_THROWS_AS(make_pair_(-1.0, -2.0, -1.5, -1.5, -0.3).validate(), ClafError);

    PreferencePair inf = make_pair_(-1.0, -2.0, -1.5, -1.5);
    inf.policy_logp_rejected = -std::numeric_limits<double>::infinity();
    CHECK_THROWS_AS(inf.validate(), ClafError);

    // dpo_pair_loss validates its input too
    CHECK_THROWS_AS(preference::dpo_pair_loss(make_pair_(1.0, -2.0, -1.5, -1.5)), ClafError);
}

TEST_CASE("softplus is exact in the easy range and safe in the extremes") {
    CHECK(preference::softplus(0.0) == doctest::Approx(0.6931471805599453).epsilon(1e-15));
    CHECK(preference::softplus(1.0) ==
          doctest::Approx(std::log(1.0 + std::exp(1.0))).epsilon(1e-15));
    // For large x, softplus(x) ~ x; for very negative x it goes to 0.
    CHECK(preference::softplus(1000.0) == 1000.0);
    CHECK(preference::softplus(-1000.0) == 0.0);
    CHECK(std::isfinite(preference::softplus(700.0)));
    // softplus(x) - softplus(-x) == x (exact identity, checked numerically)
    for (double x : {0.3, 2.0, 10.0}) {
        CHECK(preference::softplus(x) - preference::softplus(-x) ==
              doctest::Approx(x).epsilon(1e-12));
    }
}

TEST_CASE("preference probability is a logistic of the reward gap") {
    CHECK(preference::preference_probability(1.0, 1.0) == 0.5);
    // A reward gap of ln(3) gives exactly 3:1 odds.
    CHECK(preference::preference_probability(1.0986122886681098, 0.0) ==
          doctest::Approx(0.75).epsilon(1e-12));
    CHECK(preference::preference_probability(5.0, 1.0) > 0.5);
    CHECK(preference::preference_probability(1.0, 5.0) < 0.5);
}

TEST_CASE("swapping the responses complements the probability") {
    std::mt19937 rng(11);
    std::uniform_real_distribution<double> reward(-30.0, 30.0);
    for (int i = 0; i < 1000; ++i) {
        const double a = reward(rng), b = reward(rng);
        const double p = preference::preference_probability(a, b);
        const double q = preference::preference_probability(b, a);
        CHECK(p + q == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(p >= 0.0);
        CHECK(p <= 1.0);
    }
}

TEST_CASE("the margin is the difference of policy-vs-reference log-ratios") {
    // preferred ratio: -1 - (-2) = 1; rejected ratio: -3 - (-1) = -2; margin 3
    const auto pair = make_pair_(-1.0, -3.0, -2.0, -1.0);
    CHECK(preference::dpo_margin(pair) == 3.0);

    // Shifting both responses by the same reference amount cancels out.
    const auto shifted = make_pair_(-1.5, -3.5, -2.5, -1.5);
    CHECK(preference::dpo_margin(shifted) == 3.0);
}

TEST_CASE("indistinguishable responses cost exactly ln 2") {
    const auto pair = make_pair_(-2.0, -2.0, -2.0, -2.0, 0.7);
    CHECK(preference::dpo_margin(pair) == 0.0);
    CHECK(preference::dpo_pair_loss(pair) ==
          doctest::Approx(0.6931471805599453).epsilon(1e-15));
}

TEST_CASE("a known margin produces the hand-computed loss") {
    // beta * margin = ln 3, so the loss is -log sigmoid(ln 3) = -ln(3/4).
    const auto pair = make_pair_(-1.0, -2.0 - 1.0986122886681098, -1.0, -2.0, 1.0);
    CHECK(preference::dpo_margin(pair) == doctest::Approx(1.0986122886681098).epsilon(1e-12));
    CHECK(preference::dpo_pair_loss(pair) ==
          doctest::Approx(0.2876820724517809).epsilon(1e-12));

    // The loss falls as the margin grows and rises as it flips sign.
    const auto better = make_pair_(-0.5, -4.0, -1.0, -2.0, 1.0);
    const auto worse = make_pair_(-4.0, -0.5, -2.0, -1.0, 1.0);
    CHECK(preference::dpo_pair_loss(better) < preference::dpo_pair_loss(pair));
    CHECK(preference::dpo_pair_loss(worse) > preference::dpo_pair_loss(pair));
}

TEST_CASE("beta sharpens the loss around the margin") {
    const auto soft = make_pair_(-1.0, -3.0, -2.0, -2.0, 0.1); // margin 3
    const auto sharp = make_pair_(-1.0, -3.0, -2.0, -2.0, 2.0);
    // With a positive margin, a larger beta pushes the loss toward zero.
    CHECK(preference::dpo_pair_loss(sharp) < preference::dpo_pair_loss(soft));
}

TEST_CASE("the margin gradient matches a finite difference") {
    std::mt19937 rng(23);
    std::uniform_real_distribution<double> logp(-8.0, 0.0);
    std::uniform_real_distribution<double> betas(0.05, 2.0);
    for (int i = 0; i < 20; ++i) {
        auto pair = make_pair_(logp(rng), logp(rng), logp(rng), logp(rng), betas(rng));
        const double margin = preference::dpo_margin(pair);
        const double analytic = preference::dpo_loss_margin_gradient(pair);

        // Perturb the margin through the preferred policy log-probability.
        const double h = 1e-6;
        auto plus = pair;
        plus.policy_logp_preferred = pair.policy_logp_preferred - h; // margin - h
        auto minus = pair;
        minus.policy_logp_preferred = std::min(0.0, pair.policy_logp_preferred + h);

        // Re-derive the symmetric difference from the two shifted margins to
        // keep the step exact even after the clamp above.
        const double m_plus = preference::dpo_margin(plus);
        const double m_minus = preference::dpo_margin(minus);
        const double numeric = (preference::dpo_pair_loss(plus) - preference::dpo_pair_loss(minus)) /
                               (m_plus - m_minus);
        CHECK(analytic == doctest::Approx(numeric).epsilon(1e-5));
        CHECK(margin == doctest::Approx(m_plus + h).epsilon(1e-9));
    }
}

TEST_CASE("gradients are bounded by beta and vanish for huge margins") {
    const auto pair = make_pair_(-0.0, -50.0, -25.0, -25.0, 1.0); // margin 50
    CHECK(preference::dpo_loss_margin_gradient(pair) ==
          doctest::Approx(0.0).epsilon(1e-12));
    const auto flipped = make_pair_(-50.0, -0.0, -25.0, -25.0, 1.0); // margin -50
    CHECK(preference::dpo_loss_margin_gradient(flipped) ==
          doctest::Approx(-1.0).epsilon(1e-12)); // saturates at -beta
}

} // TEST_SUITE
