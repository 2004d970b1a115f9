#ifndef WIRETAP_TYPES_HPP
#define WIRETAP_TYPES_HPP

#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>

namespace wiretap {

/// Planck constant [J s], 2019 SI exact value.
inline constexpr double kPlanck = 6.62607015e-34;

inline constexpr double kLn2 = 0.6931471805599453;

/// Thrown when a quantity violates its documented domain.
class DomainError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// Thrown when a requested result does not exist for the given inputs
/// (empty balance interval, unattainable target, failed search bracket).
class InfeasibleError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

namespace detail {
inline void require(bool cond, const std::string& msg) {
    if (!cond) throw DomainError(msg);
}
inline bool is_probability(double p) { return std::isfinite(p) && p >= 0.0 && p <= 1.0; }
}  // namespace detail

/**
 * Physical description of the transmitter and the two receivers.
 *
 * The power budget P caps the average transmitted power q * n_A * h * f0 / slot.
 * Dark-count rates include background light. The laser pulse must fit inside
 * one detector slot (pulse_seconds < slot_seconds).
 */
struct PhysicalParams {
    double power_watts = 10e-3;     ///< maximum average transmit power P [W]
    double dcr_bob_cps = 10e3;      ///< dark-count + background rate at Bob [counts/s]
    double dcr_eve_cps = 1.0;       ///< dark-count + background rate at Eve [counts/s]
    double slot_seconds = 1e-9;     ///< detector time resolution [s]
    double pulse_seconds = 0.1e-9;  ///< laser pulse width [s]
    double optical_freq_hz = 200e12;  ///< carrier frequency f0 [Hz]
    double planck = kPlanck;          ///< h [J s]

    /// Energy of one photon at the carrier frequency [J].
    double photon_energy_j() const { return planck * optical_freq_hz; }

    /// Fourier-limited signal bandwidth, 1 / pulse width [Hz].
    double bandwidth_hz() const { return 1.0 / pulse_seconds; }

    /// Largest mean photon number per pulse when every slot carries a pulse.
    double max_photons_per_slot() const {
        return power_watts * slot_seconds / photon_energy_j();
    }

    void validate() const {
        detail::require(std::isfinite(power_watts) && power_watts > 0, "power_watts must be > 0");
        detail::require(std::isfinite(dcr_bob_cps) && dcr_bob_cps > 0, "dcr_bob_cps must be > 0");
        detail::require(std::isfinite(dcr_eve_cps) && dcr_eve_cps > 0, "dcr_eve_cps must be > 0");
        detail::require(std::isfinite(slot_seconds) && slot_seconds > 0, "slot_seconds must be > 0");
        detail::require(std::isfinite(pulse_seconds) && pulse_seconds > 0, "pulse_seconds must be > 0");
        detail::require(pulse_seconds < slot_seconds, "pulse_seconds must be < slot_seconds");
        detail::require(std::isfinite(optical_freq_hz) && optical_freq_hz > 0,
                        "optical_freq_hz must be > 0");
        detail::require(planck > 0, "planck must be > 0");
        detail::require(std::isfinite(max_photons_per_slot()), "power budget in photons must be finite");
    }
};

/**
 * Link geometry: attenuation of the main channel in dB (eta_y = 10^(-alpha/10))
 * and the fraction of Bob's transmittance that Eve captures (eta_zy = eta_z/eta_y).
 * eta_zy > 1 is allowed for pessimistic studies as long as eta_z stays <= 1.
 */
struct LinkGeometry {
    double attenuation_db = 70.0;
    double relative_transmittance = 0.9;

    double eta_bob() const { return std::pow(10.0, -attenuation_db / 10.0); }
    double eta_eve() const { return relative_transmittance * eta_bob(); }

    void validate() const {
        detail::require(std::isfinite(attenuation_db) && attenuation_db >= 0,
                        "attenuation_db must be >= 0");
        detail::require(std::isfinite(relative_transmittance) && relative_transmittance >= 0,
                        "relative_transmittance must be >= 0");
        detail::require(eta_eve() <= 1.0, "eta_z = eta_zy * eta_y must be <= 1");
    }
};

/**
 * A rate with its unit conversions pinned to the slot width it was created
 * under. Internally everything is nats per channel use; bits and bits/s are
 * boundary conversions.
 */
class RateValue {
  public:
    RateValue() = default;

    static RateValue from_nats(double nats, double slot_seconds) {
        detail::require(std::isfinite(nats), "rate must be finite");
        detail::require(slot_seconds > 0, "slot_seconds must be > 0");
        return RateValue(nats, slot_seconds);
    }
    static RateValue from_bits(double bits, double slot_seconds) {
        return from_nats(bits * kLn2, slot_seconds);
    }
    static RateValue from_bps(double bps, double slot_seconds) {
        return from_bits(bps * slot_seconds, slot_seconds);
    }

    double nats() const { return nats_; }
    double bits() const { return nats_ / kLn2; }
    double bps() const { return bits() / slot_seconds_; }
    double slot_seconds() const { return slot_seconds_; }

  private:
    RateValue(double nats, double slot_seconds) : nats_(nats), slot_seconds_(slot_seconds) {}
    double nats_ = 0.0;
    double slot_seconds_ = 1.0;
};

/// Randomizing channel in front of the transmitter: P(X=1|V=0) = a, P(X=1|V=1) = b.
struct AuxChannel {
    double a = 0.0;
    double b = 1.0;

    void validate() const {
        detail::require(detail::is_probability(a), "aux.a must be in [0,1]");
        detail::require(detail::is_probability(b), "aux.b must be in [0,1]");
    }
};

/// Alice's transmission strategy: on-probability, pulse brightness, optional
/// randomizing channel between the encoded symbol V and the emitted symbol X.
struct InputStrategy {
    double q_on = 0.5;
    double n_a = 0.0;  ///< mean photons per on-pulse
    std::optional<AuxChannel> aux;

    void validate() const {
        detail::require(detail::is_probability(q_on), "q_on must be in [0,1]");
        detail::require(std::isfinite(n_a) && n_a >= 0, "n_a must be >= 0");
        if (aux) aux->validate();
    }
};

/// Binary input / binary output channel given by its two click probabilities.
struct BinaryChannel {
    double p1_given_0 = 0.0;
    double p1_given_1 = 0.0;

    void validate() const {
        detail::require(detail::is_probability(p1_given_0), "p(1|0) must be in [0,1]");
        detail::require(detail::is_probability(p1_given_1), "p(1|1) must be in [0,1]");
    }
};

}  // namespace wiretap

#endif  // WIRETAP_TYPES_HPP
