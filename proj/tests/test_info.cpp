#include <cmath>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "wiretap/channel.hpp"
#include "wiretap/info.hpp"

using namespace wiretap;

TEST_SUITE("info") {

TEST_CASE("binary entropy values") {
    CHECK(binary_entropy(0.5) == doctest::Approx(std::log(2.0)).epsilon(1e-15));
    CHECK(binary_entropy(0.0) == 0.0);
    CHECK(binary_entropy(1.0) == 0.0);
    CHECK(binary_entropy(0.0782) == doctest::Approx(0.2743509837756).epsilon(1e-12));
    CHECK_THROWS_AS(binary_entropy(-0.1), DomainError);
    CHECK_THROWS_AS(binary_entropy(1.1), DomainError);
    CHECK_THROWS_AS(binary_entropy(std::nan("")), DomainError);
}

TEST_CASE("binary entropy is exactly symmetric") {
    // dyadic probabilities so that 1 - p is itself exact
    std::mt19937_64 gen(11);
    for (int i = 0; i < 20000; ++i) {
        const double p = static_cast<double>(gen() >> 32) * 0x1.0p-32;
        CHECK(binary_entropy(p) == binary_entropy(1.0 - p));
    }
}

TEST_CASE("mutual information trivial cases") {
    const BinaryChannel ch{1.0e-5, 0.85624};
    CHECK(mutual_information_nats(ch, 0.0) == 0.0);
    CHECK(mutual_information_nats(ch, 1.0) == 0.0);
    CHECK(mutual_information_nats(BinaryChannel{0.3, 0.3}, 0.42) == 0.0);
}

TEST_CASE("mutual information at the reference channel") {
    const BinaryChannel ch{1.0e-5, 0.85624};
    const RateValue mi = mutual_information(ch, 0.544, 1e-9);
    CHECK(mi.bits() == doctest::Approx(0.673403004).epsilon(1e-8));
    CHECK(mi.nats() == doctest::Approx(oracles::joint_mi_nats(ch, 0.544)).epsilon(1e-13));
}

TEST_CASE("mutual information agrees with the joint-distribution oracle") {
    std::mt19937_64 gen(23);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int i = 0; i < 10000; ++i) {
        // half the cases stress the small-probability corner
        const bool corner = i % 2 == 0;
        BinaryChannel ch;
        ch.p1_given_0 = corner ? std::pow(10.0, -12.0 * u(gen)) : u(gen);
        ch.p1_given_1 = corner ? 1.0 - std::pow(10.0, -12.0 * u(gen)) : u(gen);
        const double q = u(gen);
        const double got = mutual_information_nats(ch, q);
        const double want = oracles::joint_mi_nats(ch, q);
        CHECK(std::fabs(got - want) <= 1e-12);
        CHECK(got >= 0.0);
    }
}

TEST_CASE("data-processing inequality under concatenation") {
    std::mt19937_64 gen(31);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int i = 0; i < 10000; ++i) {
        const BinaryChannel ch{u(gen), u(gen)};
        const AuxChannel aux{u(gen), u(gen)};
        const double q = u(gen);
        const double outer = mutual_information_nats(concatenate(aux, ch), q);
        const double inner = mutual_information_nats(ch, input_marginal(q, aux));
        CHECK(outer <= inner + 1e-12);
    }
}

TEST_CASE("secrecy objective") {
    PhysicalParams params = oracles::default_params();

    SUBCASE("identical channels give zero for every strategy") {
        params.dcr_eve_cps = params.dcr_bob_cps;
        LinkGeometry geom{40.0, 1.0};
        for (double q : {0.1, 0.5, 0.9})
            for (double na : {1e2, 1e6, 1e10})
                CHECK(secrecy_objective_nats(params, geom, {q, na, {}}) ==
                      doctest::Approx(0.0).scale(1.0).epsilon(1e-15));
    }

    SUBCASE("reference operating point gives about 44.2 Mbps") {
        LinkGeometry geom{70.0, 0.9};
        const RateValue v = secrecy_objective(params, geom, {0.544, 1.94e7, {}});
        CHECK(v.bits() == doctest::Approx(0.0442811).epsilon(2e-5));
        CHECK(v.bps() == doctest::Approx(44.281e6).epsilon(2e-5));
    }

    SUBCASE("identity auxiliary channel changes nothing") {
        LinkGeometry geom{70.0, 0.9};
        const InputStrategy plain{0.544, 1.94e7, {}};
        const InputStrategy with_aux{0.544, 1.94e7, AuxChannel{0.0, 1.0}};
        CHECK(secrecy_objective_nats(params, geom, plain) ==
              secrecy_objective_nats(params, geom, with_aux));
    }

    SUBCASE("the objective can be negative") {
        LinkGeometry geom{70.0, 0.99};
        // very bright pulses leak: Eve's cleaner detector wins
        CHECK(secrecy_objective_nats(params, geom, {0.5, 1e9, {}}) < 0.0);
    }
}

TEST_CASE("rate value unit consistency") {
    std::mt19937_64 gen(41);
    std::uniform_real_distribution<double> u(-3.0, 3.0);
    for (int i = 0; i < 1000; ++i) {
        const double nats = u(gen);
        const double slot = std::pow(10.0, u(gen) - 9.0);
        const RateValue r = RateValue::from_nats(nats, slot);
        CHECK(r.bits() == doctest::Approx(nats / std::log(2.0)).epsilon(1e-14));
        CHECK(r.bps() == doctest::Approx(nats / (std::log(2.0) * slot)).epsilon(1e-14));
        CHECK(RateValue::from_bps(r.bps(), slot).nats() == doctest::Approx(nats).epsilon(1e-14));
    }
}

}  // TEST_SUITE
