#include "pepys/median_mode.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "pepys/errors.hpp"

namespace pepys {

ExactRational binom_mean(unsigned n, Probability const& p) {
    return ExactRational(static_cast<std::int64_t>(n)) * p.value();
}

unsigned integer_mean(unsigned n, Probability const& p) {
    ExactRational const mean = binom_mean(n, p);
    if (!mean.is_integer())
        throw DomainError("n*p = " + mean.to_string() + " is not an integer");
    return mean.numerator().convert_to<unsigned>();
}

unsigned binom_median(unsigned n, Probability const& p) {
    // Compare 2 * cumulative weight against the common denominator.
    BinomialWeights const w = binomial_weights(n, p);
    BigInt cumulative = 0;
    for (unsigned m = 0; m <= n; ++m) {
        cumulative += w.weights[m];
        if (2 * cumulative >= w.denominator) return m;
    }
    return n;
}

std::vector<unsigned> binom_modes(unsigned n, Probability const& p) {
    BinomialWeights const w = binomial_weights(n, p);
    BigInt const& best = *std::max_element(w.weights.begin(), w.weights.end());
    std::vector<unsigned> modes;
    for (unsigned k = 0; k <= n; ++k)
        if (w.weights[k] == best) modes.push_back(k);
    return modes;
}

CentralSummary central_summary(unsigned n, Probability const& p) {
    CentralSummary s;
    s.n = n;
    s.p = p;
    s.mean = binom_mean(n, p);
    s.median = binom_median(n, p);
    s.modes = binom_modes(n, p);
    s.mean_median_gap = (s.mean - ExactRational(static_cast<std::int64_t>(s.median))).abs();
    s.gap_below_seven_tenths = s.mean_median_gap < ExactRational(7, 10);
    s.gap_below_ln2 = s.mean_median_gap.to_double() < std::numbers::ln2;
    if (!s.gap_below_seven_tenths)
        throw std::logic_error("mean-median gap " + s.mean_median_gap.to_string()
                               + " is not below 7/10 for n=" + std::to_string(n)
                               + ", p=" + p.to_string());
    return s;
}

IntegerMeanTails integer_mean_tails(unsigned n, Probability const& p) {
    unsigned const m = integer_mean(n, p);
    BinomialWeights const w = binomial_weights(n, p);
    return {Probability(w.range_probability(m, n)),
            Probability(w.range_probability(0, m)),
            Probability(w.probability_of(m))};
}

}  // namespace pepys
