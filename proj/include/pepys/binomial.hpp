#pragma once

// Exact binomial distribution over rational success probabilities.

#include <cstdint>
#include <string_view>
#include <vector>

#include "pepys/rational.hpp"

namespace pepys {

/// An exact rational in [0, 1].
class Probability {
public:
    Probability() = default;
    /// Throws DomainError outside [0, 1].
    explicit Probability(ExactRational value);
    Probability(std::int64_t num, std::int64_t den) : Probability(ExactRational(num, den)) {}

    /// Parses "a/b", an integer or a decimal, then range-checks.
    static Probability parse(std::string_view text);

    ExactRational const& value() const noexcept { return value_; }
    ExactRational complement() const { return ExactRational(1) - value_; }
    bool is_degenerate() const { return value_.is_zero() || value_ == ExactRational(1); }
    double to_double() const { return value_.to_double(); }
    std::string to_string() const { return value_.to_string(); }

    friend bool operator==(Probability const&, Probability const&) = default;
    friend auto operator<=>(Probability const& a, Probability const& b) { return a.value_ <=> b.value_; }

private:
    ExactRational value_;
};

/// One proposition: at least `threshold` successes among `num_dice`
/// independent trials with success probability `success_prob`.
struct Wager {
    unsigned num_dice = 1;
    unsigned threshold = 0;
    Probability success_prob;

    /// Throws DomainError when num_dice == 0.
    void validate() const;
};

BigInt binom_coeff(unsigned n, unsigned k);

/// Un-normalised binomial weights: with p = a/b (lowest terms),
/// weight[k] = C(n,k) a^k (b-a)^(n-k) and P(X = k) = weight[k] / b^n.
/// The common denominator b^n is the size of the equally-likely outcome
/// space when p = s/faces with faces = b.
struct BinomialWeights {
    std::vector<BigInt> weights;
    BigInt denominator;

    ExactRational probability_of(unsigned k) const;
    /// P(lo <= X <= hi), clamped to the support.
    ExactRational range_probability(long lo, long hi) const;
};

BinomialWeights binomial_weights(unsigned n, Probability const& p);

/// Exact P(X = k); 0 when k > n.
Probability binom_pmf(unsigned n, unsigned k, Probability const& p);

/// Exact P(X >= k); 1 for k = 0, 0 for k > n.
Probability binom_tail(unsigned n, unsigned k, Probability const& p);

/// Exact P(X <= k); 0 for k < 0, 1 for k >= n.
Probability binom_cdf(unsigned n, long k, Probability const& p);

Probability wager_probability(Wager const& wager);

/// b^n where b is the denominator of p: the natural denominator of every
/// binomial probability with these parameters.
BigInt outcome_space_size(unsigned n, Probability const& p);

}  // namespace pepys
