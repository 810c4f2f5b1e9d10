#pragma once

// Seeded Monte Carlo check of the Peter/James decomposition.

#include <cstdint>
#include <string>

#include "pepys/binomial.hpp"

namespace pepys {

/// Trials are split into fixed-size blocks; block i draws from a
/// std::mt19937_64 seeded with the i-th SplitMix64 output of the run seed.
/// Results therefore depend only on (trials, seed), never on worker count.
inline constexpr char const* kDefaultGeneratorId = "mt19937_64/splitmix64-blocks-65536";
inline constexpr std::uint64_t kSimulationBlockSize = 65536;

struct SimConfig {
    std::uint64_t trials = 1'000'000;
    std::uint64_t seed = 0x5EED'1693;
    std::string generator_id = kDefaultGeneratorId;

    friend bool operator==(SimConfig const&, SimConfig const&) = default;
};

/// A proportion successes/base with its binomial standard error.
struct Estimate {
    std::uint64_t successes = 0;
    std::uint64_t base = 0;
    double value = 0.0;
    double std_error = 0.0;

    friend bool operator==(Estimate const&, Estimate const&) = default;
};

struct SimReport {
    SimConfig config;
    Probability p;
    Estimate peter_win;             // base: trials
    Estimate peter_multi_share;     // base: Peter's wins
    Estimate james_win;             // base: trials
    Estimate james_lopsided_share;  // base: James's wins

    friend bool operator==(SimReport const&, SimReport const&) = default;
};

/// Simulates `cfg.trials` rounds of twelve dice (two halves of six).
/// `workers` = 0 uses the hardware concurrency. Throws DomainError when
/// trials == 0, the generator id is unknown, or p's denominator exceeds 64 bits.
SimReport monte_carlo_decomposition(Probability const& p, SimConfig const& cfg,
                                    unsigned workers = 0);

}  // namespace pepys
