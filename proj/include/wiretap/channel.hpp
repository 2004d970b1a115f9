#ifndef WIRETAP_CHANNEL_HPP
#define WIRETAP_CHANNEL_HPP

#include <utility>

#include "wiretap/types.hpp"

namespace wiretap {

/**
 * Probability that a photon-counting detector clicks in one slot:
 * 1 - exp(-(eta * n_a + lambda * delta)), evaluated with expm1 so that
 * counts-per-slot down to 1e-18 keep full relative precision.
 */
double click_probability(double eta, double n_a, double lambda_cps, double delta_s);

/// Main and wiretapper channels for a given pulse brightness n_a.
std::pair<BinaryChannel, BinaryChannel> build_channels(const PhysicalParams& params,
                                                       const LinkGeometry& geom, double n_a);

/// Concatenate the randomizing channel in front of ch (V -> X -> Y collapsed to V -> Y).
BinaryChannel concatenate(const AuxChannel& aux, const BinaryChannel& ch);

/// Marginal on-probability P(X=1) = (1-q) a + q b of the emitted symbol.
double input_marginal(double q, const AuxChannel& aux);

/// Marginal on-probability of the strategy's emitted symbol (q itself without aux).
double emitted_on_probability(const InputStrategy& strategy);

/// Average transmitted power q_x * n_a * h f0 / slot [W].
double power_used(double q_x, double n_a, const PhysicalParams& params);

/// Average transmitted power of a full strategy [W].
double power_used(const InputStrategy& strategy, const PhysicalParams& params);

}  // namespace wiretap

#endif  // WIRETAP_CHANNEL_HPP
