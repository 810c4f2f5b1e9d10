#include "pepys/binomial.hpp"

#include <algorithm>

#include "pepys/errors.hpp"

namespace pepys {

Probability::Probability(ExactRational value) : value_(std::move(value)) {
    if (value_.sign() < 0 || value_ > ExactRational(1))
        throw DomainError("probability " + value_.to_string() + " is outside [0, 1]");
}

Probability Probability::parse(std::string_view text) {
    return Probability(ExactRational::parse(text));
}

void Wager::validate() const {
    if (num_dice == 0) throw DomainError("a wager needs at least one die");
}

BigInt binom_coeff(unsigned n, unsigned k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    BigInt result = 1;
    // Each partial product is C(n - k + i, i), hence divisible by i.
    for (unsigned i = 1; i <= k; ++i) {
        result *= n - k + i;
        result /= i;
    }
    return result;
}

ExactRational BinomialWeights::probability_of(unsigned k) const {
    if (k >= weights.size()) return {};
    return {weights[k], denominator};
}

ExactRational BinomialWeights::range_probability(long lo, long hi) const {
    long const last = static_cast<long>(weights.size()) - 1;
    lo = std::max(lo, 0L);
    hi = std::min(hi, last);
    if (lo > hi) return {};
    BigInt sum = 0;
    for (long k = lo; k <= hi; ++k) sum += weights[static_cast<std::size_t>(k)];
    return {sum, denominator};
}

BinomialWeights binomial_weights(unsigned n, Probability const& p) {
    BigInt const& a = p.value().numerator();
    BigInt const& b = p.value().denominator();
    BigInt const fail = b - a;

    // Powers of the failure weight, highest first, so weight[k] needs fail^(n-k).
    std::vector<BigInt> fail_pow(n + 1);
    fail_pow[0] = 1;
    for (unsigned i = 1; i <= n; ++i) fail_pow[i] = fail_pow[i - 1] * fail;

    BinomialWeights out;
    out.weights.resize(n + 1);
    BigInt coeff = 1;
    BigInt success_pow = 1;
    for (unsigned k = 0; k <= n; ++k) {
        out.weights[k] = coeff * success_pow * fail_pow[n - k];
        coeff = coeff * (n - k) / (k + 1);
        success_pow *= a;
    }
    out.denominator = boost::multiprecision::pow(b, n);
    return out;
}

Probability binom_pmf(unsigned n, unsigned k, Probability const& p) {
    if (k > n) return Probability{};
    BigInt const& a = p.value().numerator();
    BigInt const& b = p.value().denominator();
    BigInt num = binom_coeff(n, k) * boost::multiprecision::pow(a, k)
                 * boost::multiprecision::pow(BigInt(b - a), n - k);
    return Probability(ExactRational(num, boost::multiprecision::pow(b, n)));
}

Probability binom_tail(unsigned n, unsigned k, Probability const& p) {
    if (k == 0) return Probability(ExactRational(1));
    if (k > n) return Probability{};
    return Probability(binomial_weights(n, p).range_probability(k, n));
}

Probability binom_cdf(unsigned n, long k, Probability const& p) {
    if (k < 0) return Probability{};
    if (k >= static_cast<long>(n)) return Probability(ExactRational(1));
    return Probability(binomial_weights(n, p).range_probability(0, k));
}

Probability wager_probability(Wager const& wager) {
    wager.validate();
    return binom_tail(wager.num_dice, wager.threshold, wager.success_prob);
}

BigInt outcome_space_size(unsigned n, Probability const& p) {
    return boost::multiprecision::pow(p.value().denominator(), n);
}

}  // namespace pepys
