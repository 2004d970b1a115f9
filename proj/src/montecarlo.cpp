#include "wiretap/montecarlo.hpp"

#include <cmath>

#include "wiretap/channel.hpp"

namespace wiretap {
namespace {

double plugin_mi_nats(const std::array<std::array<std::uint64_t, 2>, 2>& counts) {
    const double total = static_cast<double>(counts[0][0] + counts[0][1] + counts[1][0] +
                                             counts[1][1]);
    double mi = 0.0;
    for (int x = 0; x < 2; ++x) {
        const double px = static_cast<double>(counts[x][0] + counts[x][1]) / total;
        for (int y = 0; y < 2; ++y) {
            const double pxy = static_cast<double>(counts[x][y]) / total;
            if (pxy <= 0.0) continue;
            const double py =
                static_cast<double>(counts[0][y] + counts[1][y]) / total;
            mi += pxy * std::log(pxy / (px * py));
        }
    }
    return std::max(mi, 0.0);
}

}  // namespace

SimulationResult simulate_clicks(const PhysicalParams& params, const LinkGeometry& geom,
                                 const InputStrategy& strategy, std::uint64_t n_slots,
                                 std::uint64_t seed) {
    params.validate();
    geom.validate();
    strategy.validate();
    detail::require(n_slots >= 1, "n_slots must be >= 1");

    auto [wb, we] = build_channels(params, geom, strategy.n_a);
    const double q = strategy.q_on;
    const AuxChannel aux = strategy.aux.value_or(AuxChannel{0.0, 1.0});

    SimulationResult res;
    res.seed = seed;
    res.bob.n_slots = res.eve.n_slots = n_slots;
    SplitMix64 rng(seed);

    for (std::uint64_t i = 0; i < n_slots; ++i) {
        const int block = static_cast<int>(i * kJackknifeBlocks / n_slots);
        const int v = rng.next_double() < q ? 1 : 0;
        const int x = rng.next_double() < (v ? aux.b : aux.a) ? 1 : 0;
        const double p_bob = x ? wb.p1_given_1 : wb.p1_given_0;
        const double p_eve = x ? we.p1_given_1 : we.p1_given_0;
        const int y = rng.next_double() < p_bob ? 1 : 0;
        const int z = rng.next_double() < p_eve ? 1 : 0;
        // tallies follow the encoded symbol, so they image the effective
        // (possibly concatenated) channel; the joint keeps the emitted symbol
        res.bob.add(block, v, y);
        res.eve.add(block, v, z);
        ++res.joint[x * 4 + y * 2 + z];
    }
    return res;
}

MiEstimate empirical_mutual_information(const ClickTally& tally, double slot_seconds) {
    detail::require(tally.trials_for(0) >= 1 && tally.trials_for(1) >= 1,
                    "degenerate tally: every input symbol needs at least one trial");

    const double mi = plugin_mi_nats(tally.counts);

    // Delete-one-block jackknife over the fixed slot-index blocks.
    std::array<double, kJackknifeBlocks> loo{};
    int used = 0;
    double mean = 0.0;
    for (int j = 0; j < kJackknifeBlocks; ++j) {
        auto counts = tally.counts;
        bool removed = false;
        for (int x = 0; x < 2; ++x)
            for (int y = 0; y < 2; ++y) {
                counts[x][y] -= tally.blocks[j][x * 2 + y];
                removed |= tally.blocks[j][x * 2 + y] > 0;
            }
        if (!removed || counts[0][0] + counts[0][1] == 0 || counts[1][0] + counts[1][1] == 0)
            continue;
        loo[used] = plugin_mi_nats(counts);
        mean += loo[used];
        ++used;
    }
    double se = 0.0;
    if (used >= 2) {
        mean /= used;
        double ss = 0.0;
        for (int j = 0; j < used; ++j) ss += (loo[j] - mean) * (loo[j] - mean);
        se = std::sqrt(ss * (used - 1) / used);
    }
    return {RateValue::from_nats(mi, slot_seconds), se};
}

}  // namespace wiretap
