#pragma once

// Brute-force oracle: sweep every outcome tuple of a set of fair dice and
// count successes directly, without any binomial formula.

#include <cstdint>
#include <vector>

#include "pepys/binomial.hpp"

namespace pepys {

inline constexpr std::uint64_t kDefaultEnumerationCap = 10'000'000;

/// `num_dice` fair dice with `faces` faces each, `success_faces` of which
/// count as a success.
struct DiceSpace {
    unsigned num_dice = 1;
    unsigned faces = 6;
    unsigned success_faces = 1;

    /// Throws DomainError unless num_dice >= 1, faces >= 2 and
    /// 1 <= success_faces <= faces.
    void validate() const;
    Probability success_probability() const;
    BigInt outcome_count() const;
};

/// Number of outcome tuples having exactly k successes, for k = 0..num_dice,
/// found by visiting all faces^num_dice tuples.
std::vector<std::uint64_t> enumerate_success_counts(DiceSpace const& space,
                                                    std::uint64_t cap = kDefaultEnumerationCap);

/// Exact P(at least `threshold` successes) by full enumeration.
/// Throws EnumerationCapExceeded when faces^num_dice > cap.
Probability brute_force_tail(DiceSpace const& space, unsigned threshold,
                             std::uint64_t cap = kDefaultEnumerationCap);

}  // namespace pepys
