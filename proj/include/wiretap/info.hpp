#ifndef WIRETAP_INFO_HPP
#define WIRETAP_INFO_HPP

#include "wiretap/types.hpp"

namespace wiretap {

/**
 * Binary entropy in nats with the 0 ln 0 = 0 convention.
 * Symmetric under p -> 1-p by construction (the smaller of the pair is
 * canonicalized before evaluation).
 */
double binary_entropy(double p);

/// I(X;Y) in nats for P(X=1) = q, computed as H(Y) - H(Y|X). Never negative.
double mutual_information_nats(const BinaryChannel& ch, double q);

/// Same, wrapped with the unit conversions of the given slot width.
RateValue mutual_information(const BinaryChannel& ch, double q, double slot_seconds);

/// I(main) - I(eve) in nats at the given strategy; with an auxiliary channel
/// present both channels are concatenated and the input runs over V. May be
/// negative.
double secrecy_objective_nats(const PhysicalParams& params, const LinkGeometry& geom,
                              const InputStrategy& strategy);

RateValue secrecy_objective(const PhysicalParams& params, const LinkGeometry& geom,
                            const InputStrategy& strategy);

}  // namespace wiretap

#endif  // WIRETAP_INFO_HPP
