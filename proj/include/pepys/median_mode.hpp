#pragma once

#include <vector>

#include "pepys/binomial.hpp"

namespace pepys {

/// Mean, median and mode(s) of Binomial(n, p).
struct CentralSummary {
    unsigned n = 0;
    Probability p;
    ExactRational mean;
    unsigned median = 0;
    std::vector<unsigned> modes;  // one value, or two consecutive on an exact tie
    ExactRational mean_median_gap;
    bool gap_below_seven_tenths = false;  // exact comparison
    bool gap_below_ln2 = false;           // floating point; ln 2 is irrational
};

ExactRational binom_mean(unsigned n, Probability const& p);

/// Smallest m with P(X <= m) >= 1/2.
unsigned binom_median(unsigned n, Probability const& p);

/// Every k maximising P(X = k).
std::vector<unsigned> binom_modes(unsigned n, Probability const& p);

/// Throws std::logic_error if the mean-median gap is not below 7/10, which
/// would contradict the uniform ln 2 bound on that gap.
CentralSummary central_summary(unsigned n, Probability const& p);

struct IntegerMeanTails {
    Probability upper;  // P(X >= np)
    Probability lower;  // P(X <= np)
    Probability modal;  // P(X = np)
};

/// Both tails at the integer mean. Throws DomainError when n*p is not an
/// integer.
IntegerMeanTails integer_mean_tails(unsigned n, Probability const& p);

/// n*p as an unsigned when it is an integer; throws DomainError otherwise.
unsigned integer_mean(unsigned n, Probability const& p);

}  // namespace pepys
