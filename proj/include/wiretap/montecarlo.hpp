#ifndef WIRETAP_MONTECARLO_HPP
#define WIRETAP_MONTECARLO_HPP

#include <array>
#include <cstdint>
#include <string_view>

#include "wiretap/types.hpp"

namespace wiretap {

/// splitmix64 (Steele, Lea, Vigna): 64-bit counter-based generator with a
/// documented algorithm, so tallies are bit-identical across platforms.
class SplitMix64 {
  public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    /// Uniform double in [0, 1) with 53 random bits.
    double next_double() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  private:
    std::uint64_t state_;
};

inline constexpr int kJackknifeBlocks = 100;
inline constexpr std::string_view kRngAlgorithm = "splitmix64";

/// Click counts per (input symbol, click outcome), with a fixed 100-block
/// decomposition by slot index for jackknife error bars.
struct ClickTally {
    std::array<std::array<std::uint64_t, 2>, 2> counts{};  // [x][click]
    std::array<std::array<std::uint64_t, 4>, kJackknifeBlocks> blocks{};  // [block][x*2+click]
    std::uint64_t n_slots = 0;

    std::uint64_t trials_for(int x) const { return counts[x][0] + counts[x][1]; }
    void add(int block, int x, int click) {
        ++counts[x][click];
        ++blocks[block][x * 2 + click];
    }
};

/// Output of one simulation run: per-receiver tallies plus the joint
/// (x, y, z) counts needed to check conditional independence.
struct SimulationResult {
    ClickTally bob;
    ClickTally eve;
    std::array<std::uint64_t, 8> joint{};  // [x*4 + y*2 + z]
    std::uint64_t seed = 0;
};

/**
 * Slot-by-slot simulation: V ~ Bernoulli(q), X from the auxiliary channel
 * (X = V without one), then Bob's and Eve's clicks drawn independently given
 * X with the analytic click probabilities. Tallies are indexed by the encoded
 * symbol V, so they image the effective channel the rate formulas use; the
 * joint counts keep the emitted symbol X for independence checks.
 * Deterministic for a fixed seed.
 */
SimulationResult simulate_clicks(const PhysicalParams& params, const LinkGeometry& geom,
                                 const InputStrategy& strategy, std::uint64_t n_slots,
                                 std::uint64_t seed);

struct MiEstimate {
    RateValue value;
    double std_error_nats = 0.0;
};

/// Plug-in mutual information of the empirical joint distribution, with a
/// delete-one-block jackknife standard error over the tally's 100 blocks.
/// Rejects tallies in which some input symbol was never sent.
MiEstimate empirical_mutual_information(const ClickTally& tally, double slot_seconds);

}  // namespace wiretap

#endif  // WIRETAP_MONTECARLO_HPP
