#ifndef WIRETAP_EXPONENTS_HPP
#define WIRETAP_EXPONENTS_HPP

#include <cstdint>

#include "wiretap/types.hpp"

namespace wiretap {

/// Coding rate R_B = m/n and randomness rate R_E = l/n of a wiretap code.
struct RatePair {
    RateValue r_b;
    RateValue r_e;

    void validate() const {
        detail::require(r_b.nats() >= 0 && r_e.nats() >= 0, "rates must be >= 0");
        detail::require(r_b.bits() + r_e.bits() <= 1.0 + 1e-12,
                        "R_B + R_E cannot exceed 1 bit/use on a binary alphabet");
    }
};

/**
 * Gallager-style cost-constrained moment function of the main channel,
 * -ln[ (q b^(1/(1+rho)) w1 + (1-q) a^(1/(1+rho)) w0)^(1+rho)
 *      + (q (1-b)^(1/(1+rho)) w1 + (1-q) (1-a)^(1/(1+rho)) w0)^(1+rho) ]
 * with weights w1 = e^(r (P - n_a h f0 / slot)), w0 = e^(r P).
 * Natural-log units; evaluated in the log domain throughout so large r and
 * vanishing click probabilities cannot overflow. rho in [0, 1], r >= 0.
 */
double phi_bob(double rho, const PhysicalParams& params, const LinkGeometry& geom, double q,
               double n_a, double r);

/// Same moment function of the wiretapper channel evaluated at -rho: inner
/// exponents 1/(1-rho), outer power 1-rho. rho in (0, 1), clamped to 1 - 1e-6.
double phi_eve(double rho, const PhysicalParams& params, const LinkGeometry& geom, double q,
               double n_a, double r);

/// An exponent value together with the (rho, r) attaining it.
struct ExponentValue {
    double value = 0.0;
    double rho = 0.0;
    double r = 0.0;
};

/**
 * Error exponent F_c = sup_{r>=0} sup_{0<=rho<=1} [phi(rho|W_B,q,r) - rho (R_B + R_E)],
 * reported per channel use in the base-2 normalization used by the
 * finite-length bound 2 e^(-n F_c) (the natural-log supremum divided by ln 2).
 * Zero whenever R_B + R_E >= I(X;Y) at the operating point.
 */
ExponentValue error_exponent(const PhysicalParams& params, const LinkGeometry& geom, double q,
                             double n_a, const RatePair& rates);

/// Secrecy exponent H_c = sup_{r>=0} sup_{0<rho<1} [phi(-rho|W_E,q,r) + rho R_E],
/// same normalization. Zero whenever R_E <= I(X;Z).
ExponentValue secrecy_exponent(const PhysicalParams& params, const LinkGeometry& geom, double q,
                               double n_a, const RateValue& r_e);

struct ExponentReport {
    ExponentValue f_c;
    ExponentValue h_c;
    double q = 0.0;
    double n_a = 0.0;
};

/// Upper bounds 2 e^(-n F) on the decoding error and 2 e^(-n H) on the leaked
/// information for a code of length n.
struct FiniteLengthBound {
    std::int64_t n = 0;
    double eps_bound = 2.0;
    double delta_bound = 2.0;
};

FiniteLengthBound bounds_at_length(double f_c, double h_c, std::int64_t n);

/**
 * Smallest n with 2 e^(-n F) <= eps_target and 2 e^(-n H) <= delta_target,
 * i.e. ceil(max(ln(2/eps)/F, ln(2/delta)/H)), at least 1. Targets in (0, 2].
 * Throws InfeasibleError when an exponent is 0 while its target is below 2.
 */
std::int64_t required_length(double f_c, double h_c, double eps_target, double delta_target);

struct BalancedRates {
    RateValue r_e_star;
    ExponentValue f_c;
    ExponentValue h_c;
};

/**
 * The unique randomness rate in (I(X;Z), I(X;Y) - R_B) at which the error and
 * secrecy exponents cross, found by bisection to 1e-6 relative. Throws
 * InfeasibleError when the interval is empty at this operating point.
 */
BalancedRates balance_randomness_rate(const PhysicalParams& params, const LinkGeometry& geom,
                                      double q, double n_a, const RateValue& r_b);

}  // namespace wiretap

#endif  // WIRETAP_EXPONENTS_HPP
