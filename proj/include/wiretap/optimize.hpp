#ifndef WIRETAP_OPTIMIZE_HPP
#define WIRETAP_OPTIMIZE_HPP

#include <optional>
#include <vector>

#include "wiretap/info.hpp"
#include "wiretap/types.hpp"

namespace wiretap {

enum class OptMode {
    capacity,      ///< maximize I(X;Y)
    secrecy,       ///< maximize I(X;Y) - I(X;Z)
    secrecy_aux,   ///< maximize I(V;Y) - I(V;Z) over (q, n_a, a, b)
};

enum class Regime { loss_independent, noise_limited };

const char* to_string(OptMode mode);
const char* to_string(Regime regime);

struct OptResult {
    RateValue objective;     ///< reported rate; secrecy modes clamp negatives to 0
    double raw_nats = 0.0;   ///< unclamped objective re-evaluated at `strategy`
    bool clamped = false;    ///< true when raw_nats < 0 and objective is reported as 0
    InputStrategy strategy;  ///< optimal q*, n_A*, and (a*, b*) in aux mode
    double n_b_star = 0.0;   ///< photons per pulse at Bob, eta_y * n_A*
    double n_e_star = 0.0;   ///< photons per pulse at Eve, eta_z * n_A*
    double power_used_w = 0.0;
    bool boundary_active = false;  ///< average power within 1e-6 relative of the budget
    Regime regime = Regime::loss_independent;
};

/**
 * Global maximization of the mode's objective over the feasible set
 * {q in [0,1], n_a >= 0, q_x n_a h f0 / slot <= P}.
 *
 * Search: coarse log grid (20 points/decade in n_a over [1e-3, 1e12]; q
 * log-spaced in [1e-9, 0.1] plus linear in [0.1, 1]; aux mode adds a grid
 * over the flip probability a with b near 1), infeasible points projected
 * onto the power boundary, followed by Nelder-Mead descent in
 * (logit q, ln n_a[, logit a, logit b]) from the best seeds. Deterministic;
 * ties between equal objectives resolve toward smaller n_a.
 */
OptResult maximize_rate(const PhysicalParams& params, const LinkGeometry& geom, OptMode mode,
                        const std::vector<InputStrategy>& extra_seeds = {});

OptResult maximize_capacity(const PhysicalParams& params, const LinkGeometry& geom);
OptResult maximize_secrecy_rate(const PhysicalParams& params, const LinkGeometry& geom);
OptResult maximize_secrecy_capacity(const PhysicalParams& params, const LinkGeometry& geom);

struct SweepRow {
    double attenuation_db = 0.0;
    OptResult opt;
};

/// One optimization per attenuation, warm-started from the previous row.
/// Rows come back sorted by attenuation, duplicates removed.
std::vector<SweepRow> sweep_attenuation(const PhysicalParams& params, std::vector<double> alphas,
                                        OptMode mode, double eta_zy);

/**
 * Largest attenuation (bisection to 0.05 dB over [0, 200] dB) at which the
 * optimized rate still reaches floor_bps. Returns nullopt when the rate never
 * drops below the floor inside the bracket; throws InfeasibleError when the
 * rate at 0 dB is already below the floor.
 */
std::optional<double> find_zero_threshold(const PhysicalParams& params, double eta_zy,
                                          OptMode mode, double floor_bps = 1.0);

}  // namespace wiretap

#endif  // WIRETAP_OPTIMIZE_HPP
