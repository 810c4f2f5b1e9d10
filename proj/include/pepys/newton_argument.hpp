#pragma once

/**
 * Dissection of the "Peter and James" dominance argument.
 *
 * A throw is six dice. Peter wins a throw with at least one success. James
 * scores consecutive disjoint pairs of throws (twelve dice) and wins a pair
 * with at least two successes. The decomposition measures how much of each
 * player's winning probability comes from multi-success configurations,
 * which is exactly what a pure sample-space argument ignores.
 */

#include <cstdint>
#include <vector>

#include "pepys/binomial.hpp"

namespace pepys {

inline constexpr unsigned kDicePerThrow = 6;

struct ArgumentDecomposition {
    Probability p;
    Probability peter_win;        // P(X >= 1), 6 dice
    Probability peter_multi;      // P(X >= 2), 6 dice
    ExactRational peter_multi_share;
    Probability peter_none;       // P(X = 0), 6 dice
    Probability james_win;        // P(X >= 2), 12 dice
    Probability james_lopsided;   // one half >= 2 successes, the other none
    ExactRational james_lopsided_share;
};

/// Throws DomainError for p in {0, 1}.
ArgumentDecomposition decompose_argument(Probability const& p);

/// Per-throw success counts for consecutive throws of six dice.
struct ThrowSequence {
    std::vector<unsigned> throws;

    /// Throws DomainError when a count exceeds six.
    void validate() const;
};

struct SequenceScore {
    std::uint64_t throws = 0;
    std::uint64_t pairs = 0;
    std::uint64_t peter_wins = 0;
    std::uint64_t james_wins = 0;
    std::uint64_t total_successes = 0;

    /// Peter's wins per throw; DomainError on an empty sequence.
    ExactRational peter_rate() const;
    /// James's wins per pair of throws; DomainError on an empty sequence.
    ExactRational james_rate() const;
};

/// Throws DomainError on odd length or an out-of-range count.
SequenceScore score_sequence(ThrowSequence const& seq);

/// A sequence on which James's per-pair win rate beats Peter's per-throw
/// rate: [2, 0].
ThrowSequence dominance_counterexample();

}  // namespace pepys
