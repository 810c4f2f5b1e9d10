#include "pepys/simulation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <thread>
#include <vector>

#include "pepys/errors.hpp"
#include "pepys/newton_argument.hpp"

namespace pepys {

namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

std::uint64_t block_seed(std::uint64_t seed, std::uint64_t block) {
    // The (block+1)-th output of a SplitMix64 stream started at `seed`.
    std::uint64_t state = seed + block * 0x9E3779B97F4A7C15ULL;
    return splitmix64(state);
}

// Unbiased draw from [0, bound) by rejecting the short final residue class.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
    std::uint64_t const reject_below = (0 - bound) % bound;
    for (;;) {
        std::uint64_t const x = rng();
        if (x >= reject_below) return x % bound;
    }
}

struct Counts {
    std::uint64_t peter_win = 0;
    std::uint64_t peter_multi = 0;
    std::uint64_t james_win = 0;
    std::uint64_t james_lopsided = 0;
};

Counts run_block(std::uint64_t seed, std::uint64_t block, std::uint64_t trials,
                 std::uint64_t success_num, std::uint64_t success_den) {
    std::mt19937_64 rng(block_seed(seed, block));
    auto half = [&] {
        unsigned hits = 0;
        for (unsigned d = 0; d < kDicePerThrow; ++d)
            if (uniform_below(rng, success_den) < success_num) ++hits;
        return hits;
    };
    Counts c;
    for (std::uint64_t t = 0; t < trials; ++t) {
        unsigned const first = half();
        unsigned const second = half();
        if (first >= 1) ++c.peter_win;
        if (first >= 2) ++c.peter_multi;
        if (first + second >= 2) {
            ++c.james_win;
            if ((first >= 2 && second == 0) || (first == 0 && second >= 2)) ++c.james_lopsided;
        }
    }
    return c;
}

Estimate proportion(std::uint64_t successes, std::uint64_t base) {
    Estimate e;
    e.successes = successes;
    e.base = base;
    if (base == 0) return e;
    e.value = static_cast<double>(successes) / static_cast<double>(base);
    e.std_error = std::sqrt(e.value * (1.0 - e.value) / static_cast<double>(base));
    return e;
}

}  // namespace

SimReport monte_carlo_decomposition(Probability const& p, SimConfig const& cfg, unsigned workers) {
    if (cfg.trials == 0) throw DomainError("simulation needs at least one trial");
    if (cfg.generator_id != kDefaultGeneratorId)
        throw DomainError("unknown generator id '" + cfg.generator_id + "'");
    BigInt const& num = p.value().numerator();
    BigInt const& den = p.value().denominator();
    if (den > std::numeric_limits<std::uint64_t>::max())
        throw DomainError("simulation needs p's denominator to fit in 64 bits");
    auto const success_num = num.convert_to<std::uint64_t>();
    auto const success_den = den.convert_to<std::uint64_t>();

    std::uint64_t const blocks = (cfg.trials + kSimulationBlockSize - 1) / kSimulationBlockSize;
    if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
    workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, blocks));

    std::vector<Counts> per_block(blocks);
    auto work = [&](unsigned worker) {
        for (std::uint64_t b = worker; b < blocks; b += workers) {
            std::uint64_t const start = b * kSimulationBlockSize;
            std::uint64_t const n = std::min(kSimulationBlockSize, cfg.trials - start);
            per_block[b] = run_block(cfg.seed, b, n, success_num, success_den);
        }
    };
    {
        std::vector<std::jthread> pool;
        for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work, w);
        work(0);
    }

    Counts total;
    for (auto const& c : per_block) {
        total.peter_win += c.peter_win;
        total.peter_multi += c.peter_multi;
        total.james_win += c.james_win;
        total.james_lopsided += c.james_lopsided;
    }

    SimReport r;
    r.config = cfg;
    r.p = p;
    r.peter_win = proportion(total.peter_win, cfg.trials);
    r.peter_multi_share = proportion(total.peter_multi, total.peter_win);
    r.james_win = proportion(total.james_win, cfg.trials);
    r.james_lopsided_share = proportion(total.james_lopsided, total.james_win);
    return r;
}

}  // namespace pepys
