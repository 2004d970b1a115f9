#include "wiretap/info.hpp"

#include <algorithm>
#include <cmath>

#include "wiretap/channel.hpp"

namespace wiretap {

double binary_entropy(double p) {
    detail::require(detail::is_probability(p), "binary_entropy: p must be in [0,1]");
    if (p == 0.0 || p == 1.0) return 0.0;
    const double q = 1.0 - p;
    const double a = std::min(p, q);
    const double b = std::max(p, q);
    return -a * std::log(a) - b * std::log1p(-a);
}

double mutual_information_nats(const BinaryChannel& ch, double q) {
    ch.validate();
    detail::require(detail::is_probability(q), "mutual_information: q must be in [0,1]");
    if (ch.p1_given_0 == ch.p1_given_1) return 0.0;  // output independent of input
    const double p_on = std::clamp((1.0 - q) * ch.p1_given_0 + q * ch.p1_given_1, 0.0, 1.0);
    const double value = binary_entropy(p_on) - (1.0 - q) * binary_entropy(ch.p1_given_0) -
                         q * binary_entropy(ch.p1_given_1);
    return std::max(value, 0.0);
}

RateValue mutual_information(const BinaryChannel& ch, double q, double slot_seconds) {
    return RateValue::from_nats(mutual_information_nats(ch, q), slot_seconds);
}

double secrecy_objective_nats(const PhysicalParams& params, const LinkGeometry& geom,
                              const InputStrategy& strategy) {
    params.validate();
    geom.validate();
    strategy.validate();
    auto [bob, eve] = build_channels(params, geom, strategy.n_a);
    if (strategy.aux) {
        bob = concatenate(*strategy.aux, bob);
        eve = concatenate(*strategy.aux, eve);
    }
    return mutual_information_nats(bob, strategy.q_on) - mutual_information_nats(eve, strategy.q_on);
}

RateValue secrecy_objective(const PhysicalParams& params, const LinkGeometry& geom,
                            const InputStrategy& strategy) {
    return RateValue::from_nats(secrecy_objective_nats(params, geom, strategy),
                                params.slot_seconds);
}

}  // namespace wiretap
