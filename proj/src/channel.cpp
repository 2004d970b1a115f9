#include "wiretap/channel.hpp"

#include <algorithm>
#include <cmath>

namespace wiretap {

double click_probability(double eta, double n_a, double lambda_cps, double delta_s) {
    detail::require(std::isfinite(eta) && eta >= 0, "eta must be >= 0");
    detail::require(std::isfinite(n_a) && n_a >= 0, "n_a must be >= 0");
    detail::require(std::isfinite(lambda_cps) && lambda_cps >= 0, "lambda must be >= 0");
    detail::require(std::isfinite(delta_s) && delta_s >= 0, "delta must be >= 0");
    return -std::expm1(-(eta * n_a + lambda_cps * delta_s));
}

std::pair<BinaryChannel, BinaryChannel> build_channels(const PhysicalParams& params,
                                                       const LinkGeometry& geom, double n_a) {
    const double eta_y = geom.eta_bob();
    const double eta_z = geom.eta_eve();
    BinaryChannel bob{click_probability(eta_y, 0.0, params.dcr_bob_cps, params.slot_seconds),
                      click_probability(eta_y, n_a, params.dcr_bob_cps, params.slot_seconds)};
    BinaryChannel eve{click_probability(eta_z, 0.0, params.dcr_eve_cps, params.slot_seconds),
                      click_probability(eta_z, n_a, params.dcr_eve_cps, params.slot_seconds)};
    return {bob, eve};
}

BinaryChannel concatenate(const AuxChannel& aux, const BinaryChannel& ch) {
    aux.validate();
    // convex combinations of probabilities; clamp away one-ulp overshoot
    return BinaryChannel{
        std::clamp((1.0 - aux.a) * ch.p1_given_0 + aux.a * ch.p1_given_1, 0.0, 1.0),
        std::clamp((1.0 - aux.b) * ch.p1_given_0 + aux.b * ch.p1_given_1, 0.0, 1.0)};
}

double input_marginal(double q, const AuxChannel& aux) {
    detail::require(detail::is_probability(q), "q must be in [0,1]");
    aux.validate();
    return (1.0 - q) * aux.a + q * aux.b;
}

double emitted_on_probability(const InputStrategy& strategy) {
    return strategy.aux ? input_marginal(strategy.q_on, *strategy.aux) : strategy.q_on;
}

double power_used(double q_x, double n_a, const PhysicalParams& params) {
    detail::require(std::isfinite(q_x) && q_x >= 0, "q_x must be >= 0");
    detail::require(std::isfinite(n_a) && n_a >= 0, "n_a must be >= 0");
    return q_x * n_a * params.photon_energy_j() / params.slot_seconds;
}

double power_used(const InputStrategy& strategy, const PhysicalParams& params) {
    return power_used(emitted_on_probability(strategy), strategy.n_a, params);
}

}  // namespace wiretap
