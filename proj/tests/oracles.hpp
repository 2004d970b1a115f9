// Test-only oracles, deliberately independent of the library's evaluation
// paths: mutual information from the full 2x2 joint distribution, and the
// moment functions by direct summation instead of log-domain evaluation.
#ifndef WIRETAP_TESTS_ORACLES_HPP
#define WIRETAP_TESTS_ORACLES_HPP

#include <cmath>

#include "wiretap/types.hpp"

namespace oracles {

/// I(X;Y) = sum_{x,y} p(x,y) ln(p(y|x) / p(y)), straight from the joint.
inline double joint_mi_nats(const wiretap::BinaryChannel& ch, double q) {
    const double px[2] = {1.0 - q, q};
    const double p1[2] = {ch.p1_given_0, ch.p1_given_1};
    double py[2] = {0.0, 0.0};
    for (int x = 0; x < 2; ++x) {
        py[1] += px[x] * p1[x];
        py[0] += px[x] * (1.0 - p1[x]);
    }
    double mi = 0.0;
    for (int x = 0; x < 2; ++x) {
        for (int y = 0; y < 2; ++y) {
            const double pyx = y ? p1[x] : 1.0 - p1[x];
            const double pxy = px[x] * pyx;
            if (pxy <= 0.0 || py[y] <= 0.0) continue;
            mi += pxy * std::log(pyx / py[y]);
        }
    }
    return mi;
}

/// Direct summation of the cost-weighted moment function: outer power
/// s = 1 + rho for the main channel, s = 1 - rho for the wiretapper channel.
inline double phi_direct(double s, const wiretap::BinaryChannel& ch, double q, double r,
                         double power_w, double pulse_cost_w) {
    const double w1 = std::exp(r * (power_w - pulse_cost_w));
    const double w0 = std::exp(r * power_w);
    const double inv = 1.0 / s;
    const double click =
        q * std::pow(ch.p1_given_1, inv) * w1 + (1.0 - q) * std::pow(ch.p1_given_0, inv) * w0;
    const double no_click = q * std::pow(1.0 - ch.p1_given_1, inv) * w1 +
                            (1.0 - q) * std::pow(1.0 - ch.p1_given_0, inv) * w0;
    return -std::log(std::pow(click, s) + std::pow(no_click, s));
}

/// Reference link parameters used across the test suite.
inline wiretap::PhysicalParams default_params() { return wiretap::PhysicalParams{}; }

}  // namespace oracles

#endif  // WIRETAP_TESTS_ORACLES_HPP
