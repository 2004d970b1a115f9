#include <cmath>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "wiretap/channel.hpp"
#include "wiretap/exponents.hpp"
#include "wiretap/info.hpp"

using namespace wiretap;

namespace {

const PhysicalParams kParams = oracles::default_params();
const LinkGeometry kGeom{70.0, 0.9};
constexpr double kQ = 0.544;
constexpr double kNa = 1.94e7;

RateValue bps(double v) { return RateValue::from_bps(v, kParams.slot_seconds); }

}  // namespace

TEST_SUITE("exponents") {

TEST_CASE("phi collapses to zero at rho = 0, r = 0") {
    CHECK(std::fabs(phi_bob(0.0, kParams, kGeom, kQ, kNa, 0.0)) < 1e-13);
    CHECK(std::fabs(phi_eve(1e-12, kParams, kGeom, kQ, kNa, 0.0)) < 1e-10);
}

TEST_CASE("phi slope at zero reproduces the mutual informations") {
    auto [wb, we] = build_channels(kParams, kGeom, kNa);
    const double iy = mutual_information_nats(wb, kQ);
    const double iz = mutual_information_nats(we, kQ);
    const double eps = 1e-6;
    CHECK(phi_bob(eps, kParams, kGeom, kQ, kNa, 0.0) / eps == doctest::Approx(iy).epsilon(1e-4));
    CHECK(phi_eve(eps, kParams, kGeom, kQ, kNa, 0.0) / eps == doctest::Approx(-iz).epsilon(1e-4));
}

TEST_CASE("phi agrees with direct summation on random tuples") {
    std::mt19937_64 gen(71);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int i = 0; i < 100; ++i) {
        PhysicalParams params = kParams;
        const LinkGeometry geom{20.0 + 80.0 * u(gen), u(gen)};
        const double q = 0.02 + 0.96 * u(gen);
        const double na = std::pow(10.0, 9.0 * u(gen) - 1.0);
        const double r = u(gen) < 0.3 ? 0.0 : 300.0 * u(gen);
        const double cost = na * params.photon_energy_j() / params.slot_seconds;
        auto [wb, we] = build_channels(params, geom, na);

        const double rho_b = u(gen);
        const double got_b = phi_bob(rho_b, params, geom, q, na, r);
        const double want_b = oracles::phi_direct(1.0 + rho_b, wb, q, r, params.power_watts, cost);
        CHECK(got_b == doctest::Approx(want_b).epsilon(1e-12));

        const double rho_e = 0.01 + 0.97 * u(gen);
        const double got_e = phi_eve(rho_e, params, geom, q, na, r);
        const double want_e = oracles::phi_direct(1.0 - rho_e, we, q, r, params.power_watts, cost);
        CHECK(got_e == doctest::Approx(want_e).epsilon(1e-12));
    }
}

TEST_CASE("phi domain checks") {
    CHECK_THROWS_AS(phi_bob(-0.1, kParams, kGeom, kQ, kNa, 0.0), DomainError);
    CHECK_THROWS_AS(phi_bob(1.1, kParams, kGeom, kQ, kNa, 0.0), DomainError);
    CHECK_THROWS_AS(phi_bob(0.5, kParams, kGeom, kQ, kNa, -1.0), DomainError);
    CHECK_THROWS_AS(phi_eve(0.0, kParams, kGeom, kQ, kNa, 0.0), DomainError);
    CHECK_THROWS_AS(phi_eve(1.0, kParams, kGeom, kQ, kNa, 0.0), DomainError);
    // near-1 rho is clamped, not rejected
    CHECK_NOTHROW(phi_eve(1.0 - 1e-9, kParams, kGeom, kQ, kNa, 0.0));
}

TEST_CASE("exponent zero regions") {
    auto [wb, we] = build_channels(kParams, kGeom, kNa);
    const double iy = mutual_information_nats(wb, kQ);
    const double iz = mutual_information_nats(we, kQ);
    const double slot = kParams.slot_seconds;

    SUBCASE("F_c vanishes at and above I(X;Y)") {
        for (double f : {1.0, 1.2}) {
            const RatePair rates{RateValue::from_nats(iy * f / 2, slot),
                                 RateValue::from_nats(iy * f / 2, slot)};
            CHECK(error_exponent(kParams, kGeom, kQ, kNa, rates).value <= 1e-12);
        }
    }
    SUBCASE("F_c is positive below I(X;Y)") {
        const RatePair rates{RateValue::from_nats(0.4 * iy, slot),
                             RateValue::from_nats(0.5 * iy, slot)};
        CHECK(error_exponent(kParams, kGeom, kQ, kNa, rates).value > 0.0);
    }
    SUBCASE("H_c vanishes at and below I(X;Z)") {
        for (double f : {1.0, 0.8}) {
            CHECK(secrecy_exponent(kParams, kGeom, kQ, kNa, RateValue::from_nats(iz * f, slot))
                      .value <= 1e-12);
        }
    }
    SUBCASE("H_c is positive above I(X;Z)") {
        CHECK(secrecy_exponent(kParams, kGeom, kQ, kNa, RateValue::from_nats(iz * 1.02, slot))
                  .value > 0.0);
    }
}

TEST_CASE("exponent monotonicity on a rate grid") {
    auto [wb, we] = build_channels(kParams, kGeom, kNa);
    const double iy = mutual_information_nats(wb, kQ);
    const double iz = mutual_information_nats(we, kQ);
    const double slot = kParams.slot_seconds;

    double prev_f = std::numeric_limits<double>::infinity();
    double prev_h = -1.0;
    for (int i = 0; i < 100; ++i) {
        const double sum = 0.5 * iy + (0.7 * iy) * i / 99.0;  // crosses I(X;Y)
        const RatePair rates{RateValue::from_nats(0.0, slot), RateValue::from_nats(sum, slot)};
        const double f = error_exponent(kParams, kGeom, kQ, kNa, rates).value;
        CHECK(f <= prev_f + 1e-9);
        prev_f = f;

        const double re = 0.8 * iz + (0.5 * iz) * i / 99.0;  // crosses I(X;Z)
        const double h =
            secrecy_exponent(kParams, kGeom, kQ, kNa, RateValue::from_nats(re, slot)).value;
        CHECK(h >= prev_h - 1e-9);
        prev_h = h;
    }
}

TEST_CASE("cost multiplier binds at a power-boundary operating point") {
    // noise-limited capacity point: the on-symbol cost exceeds the budget,
    // so the secrecy exponent's supremum moves to r > 0
    const LinkGeometry geom{90.0, 0.9};
    const double q = 0.0702;
    const double na = 1.075e9;
    auto [wb, we] = build_channels(kParams, geom, na);
    const double iz = mutual_information_nats(we, q);
    const RateValue re = RateValue::from_nats(1.2 * iz, kParams.slot_seconds);
    const ExponentValue h = secrecy_exponent(kParams, geom, q, na, re);
    CHECK(h.r > 0.1);
    // r = 0 inner sup, reconstructed directly; the full sup must beat it
    double best0 = 0.0;
    for (int i = 1; i <= 2000; ++i) {
        const double rho = std::min(i / 2000.0, 1.0 - 1e-6);
        best0 = std::max(best0, phi_eve(rho, kParams, geom, q, na, 0.0) + rho * re.nats());
    }
    CHECK(h.value * kLn2 > best0 * 1.02);
}

TEST_CASE("supremum over r never falls below the r = 0 value") {
    const RatePair rates{bps(22.1e6), bps(0.641e9)};
    const ExponentValue f = error_exponent(kParams, kGeom, kQ, kNa, rates);
    // r = 0 inner maximum, reconstructed through phi directly
    double best0 = 0.0;
    const double rate_nats = rates.r_b.nats() + rates.r_e.nats();
    for (int i = 0; i <= 400; ++i) {
        const double rho = i / 400.0;
        best0 = std::max(best0, phi_bob(rho, kParams, kGeom, kQ, kNa, 0.0) - rho * rate_nats);
    }
    CHECK(f.value * kLn2 >= best0 - 1e-12);
}

TEST_CASE("reference rates reproduce the known exponent values") {
    const RatePair rates{bps(22.1e6), bps(0.641e9)};
    const double f = error_exponent(kParams, kGeom, kQ, kNa, rates).value;
    const double h = secrecy_exponent(kParams, kGeom, kQ, kNa, bps(0.641e9)).value;
    CHECK(f == doctest::Approx(1.59e-4).epsilon(0.05));
    CHECK(h == doctest::Approx(1.59e-4).epsilon(0.05));
}

TEST_CASE("finite-length bounds") {
    SUBCASE("zero exponent gives the vacuous bound 2") {
        const FiniteLengthBound b = bounds_at_length(0.0, 0.0, 12345);
        CHECK(b.eps_bound == 2.0);
        CHECK(b.delta_bound == 2.0);
    }
    SUBCASE("reference exponent values") {
        CHECK(bounds_at_length(1.59e-4, 1.59e-4, 135000).eps_bound ==
              doctest::Approx(2.0 * std::exp(-135000 * 1.59e-4)).epsilon(1e-12));
        CHECK(bounds_at_length(1.59e-4, 1.59e-4, 135000).eps_bound ==
              doctest::Approx(9.55e-10).epsilon(0.01));
        CHECK(bounds_at_length(1.59e-4, 0.0, 10000).eps_bound ==
              doctest::Approx(0.4088).epsilon(1e-3));
    }
    SUBCASE("bounds decrease strictly in n for positive exponents") {
        double prev = 3.0;
        for (std::int64_t n : {1, 10, 100, 1000, 10000}) {
            const double e = bounds_at_length(1e-3, 1e-3, n).eps_bound;
            CHECK(e < prev);
            CHECK(e <= 2.0);
            CHECK(e > 0.0);
            prev = e;
        }
    }
    CHECK_THROWS_AS(bounds_at_length(-1.0, 0.0, 10), DomainError);
    CHECK_THROWS_AS(bounds_at_length(1.0, 1.0, 0), DomainError);
}

TEST_CASE("required length") {
    // closed form: ceil(ln(2/eps) / F)
    CHECK(required_length(1.59e-4, 1.59e-4, 1e-9, 1e-9) == 134695);
    CHECK(required_length(1.59e-4, 1.59e-4, 1e-9, 1e-9) ==
          static_cast<std::int64_t>(std::ceil(std::log(2e9) / 1.59e-4)));
    CHECK(required_length(1.0, 1.0, 2.0, 2.0) == 1);
    // the weaker exponent dominates
    CHECK(required_length(4.00e-4, 0.29e-4, 1e-9, 1e-9) ==
          static_cast<std::int64_t>(std::ceil(std::log(2e9) / 0.29e-4)));
    CHECK(required_length(4.00e-4, 0.29e-4, 1e-9, 1e-9) > 700000);
    CHECK_THROWS_AS(required_length(0.0, 1.0, 1e-9, 1e-9), InfeasibleError);
    CHECK_THROWS_AS(required_length(1.0, 1.0, 0.0, 1e-9), DomainError);
    CHECK_THROWS_AS(required_length(1.0, 1.0, 1e-9, 3.0), DomainError);
}

TEST_CASE("balanced randomness rate") {
    SUBCASE("balance at the reference coding rate") {
        const BalancedRates bal =
            balance_randomness_rate(kParams, kGeom, kQ, kNa, bps(22.1e6));
        CHECK(bal.r_e_star.bps() == doctest::Approx(0.641e9).epsilon(0.01));
        CHECK(bal.f_c.value == doctest::Approx(bal.h_c.value).epsilon(1e-3));
        CHECK(bal.f_c.value == doctest::Approx(1.59e-4).epsilon(0.05));
    }
    SUBCASE("interval endpoints have opposite exponent dominance") {
        auto [wb, we] = build_channels(kParams, kGeom, kNa);
        const double iy = mutual_information_nats(wb, kQ);
        const double iz = mutual_information_nats(we, kQ);
        const double slot = kParams.slot_seconds;
        const double rb = bps(22.1e6).nats();
        const double lo = iz + 1e-4 * (iy - rb - iz);
        const double hi = iy - rb - 1e-4 * (iy - rb - iz);
        const RatePair r_lo{bps(22.1e6), RateValue::from_nats(lo, slot)};
        const RatePair r_hi{bps(22.1e6), RateValue::from_nats(hi, slot)};
        CHECK(error_exponent(kParams, kGeom, kQ, kNa, r_lo).value >
              secrecy_exponent(kParams, kGeom, kQ, kNa, r_lo.r_e).value);
        CHECK(error_exponent(kParams, kGeom, kQ, kNa, r_hi).value <
              secrecy_exponent(kParams, kGeom, kQ, kNa, r_hi.r_e).value);
    }
    SUBCASE("empty interval is infeasible") {
        auto [wb, we] = build_channels(kParams, kGeom, kNa);
        const double iy = mutual_information_nats(wb, kQ);
        const double iz = mutual_information_nats(we, kQ);
        const RateValue rb = RateValue::from_nats(iy - iz, kParams.slot_seconds);
        CHECK_THROWS_AS(balance_randomness_rate(kParams, kGeom, kQ, kNa, rb), InfeasibleError);
    }
}

TEST_CASE("rate pair validation") {
    CHECK_NOTHROW((RatePair{bps(22.1e6), bps(0.641e9)}).validate());
    CHECK_THROWS_AS((RatePair{bps(0.6e9), bps(0.6e9)}).validate(), DomainError);
}

}  // TEST_SUITE
