#pragma once

/**
 * The generalised Pepys sequence P(X >= k | N = r*k, p) for k = 1..k_max,
 * its monotonicity, and the success probability at which two members of the
 * sequence swap order.
 */

#include <utility>
#include <vector>

#include "pepys/binomial.hpp"

namespace pepys {

struct PepysFamily {
    unsigned dice_per_unit = 6;  // r
    unsigned k_max = 3;
    Probability success_prob{1, 6};

    /// Throws DomainError unless r >= 1 and k_max >= 1.
    void validate() const;
};

/// [P(X >= k | N = r*k, p) for k = 1..k_max], exact.
std::vector<Probability> pepys_sequence(PepysFamily const& family);

/// True iff every term is strictly greater than the next.
/// Throws DomainError for fewer than two terms.
bool is_strictly_decreasing(std::vector<Probability> const& seq);

/// Unit indices k (1-based), ordered from the most to the least likely
/// proposition. Exact ties keep the smaller k first.
std::vector<unsigned> rank_units(std::vector<Probability> const& seq);

struct OrderingRow {
    Probability p;
    std::vector<Probability> tails;
    std::vector<unsigned> ranking;
};

/// One row per grid point; family.success_prob is ignored.
/// Throws DomainError on an empty grid.
std::vector<OrderingRow> ordering_table(PepysFamily const& family,
                                        std::vector<Probability> const& p_grid);

/// g(p) = P(X >= k1 | r*k1, p) - P(X >= k2 | r*k2, p), exact.
ExactRational tail_difference(unsigned k1, unsigned k2, unsigned r, Probability const& p);

struct CrossoverResult {
    std::pair<unsigned, unsigned> k_pair;
    unsigned dice_per_unit = 6;
    ExactRational p_low;
    ExactRational p_high;
    int sign_low = 0;   // sign of g(p_low)
    int sign_high = 0;  // sign of g(p_high)
    double midpoint = 0.0;
    unsigned iterations = 0;
};

/// Denominator of the bracket-discovery grid i/64, i = 1..63.
inline constexpr unsigned kCrossoverScanDenominator = 64;

/// Bisection on g with every sign decided in exact arithmetic, until the
/// bracket is no wider than tol. (1, 2, 6) starts from [1/6, 1/4]; other
/// pairs scan the grid i/64 for the first sign change.
/// Throws DomainError when k1 >= k2, tol <= 0, or no bracket is found.
CrossoverResult crossover_probability(unsigned k1, unsigned k2, unsigned r,
                                      ExactRational const& tol);

}  // namespace pepys
