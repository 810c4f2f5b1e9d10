#include "pepys/newton_argument.hpp"

#include "pepys/errors.hpp"

namespace pepys {

ArgumentDecomposition decompose_argument(Probability const& p) {
    if (p.is_degenerate()) throw DomainError("decomposition needs 0 < p < 1");
    BinomialWeights const six = binomial_weights(kDicePerThrow, p);

    ArgumentDecomposition d;
    d.p = p;
    d.peter_win = Probability(six.range_probability(1, kDicePerThrow));
    d.peter_multi = Probability(six.range_probability(2, kDicePerThrow));
    d.peter_none = Probability(six.probability_of(0));
    d.peter_multi_share = d.peter_multi.value() / d.peter_win.value();
    d.james_win = binom_tail(2 * kDicePerThrow, 2, p);
    // The two assignments of the lopsided halves are disjoint events.
    d.james_lopsided = Probability(ExactRational(2) * d.peter_multi.value() * d.peter_none.value());
    d.james_lopsided_share = d.james_lopsided.value() / d.james_win.value();
    return d;
}

void ThrowSequence::validate() const {
    for (std::size_t i = 0; i < throws.size(); ++i)
        if (throws[i] > kDicePerThrow)
            throw DomainError("throw " + std::to_string(i) + " has " + std::to_string(throws[i])
                              + " successes among six dice");
}

ExactRational SequenceScore::peter_rate() const {
    if (throws == 0) throw DomainError("empty sequence has no win rate");
    return {BigInt(peter_wins), BigInt(throws)};
}

ExactRational SequenceScore::james_rate() const {
    if (pairs == 0) throw DomainError("empty sequence has no win rate");
    return {BigInt(james_wins), BigInt(pairs)};
}

SequenceScore score_sequence(ThrowSequence const& seq) {
    seq.validate();
    if (seq.throws.size() % 2 != 0)
        throw DomainError("James scores pairs of throws; got an odd length "
                          + std::to_string(seq.throws.size()));
    SequenceScore s;
    s.throws = seq.throws.size();
    s.pairs = s.throws / 2;
    for (std::size_t i = 0; i < seq.throws.size(); ++i) {
        unsigned const c = seq.throws[i];
        s.total_successes += c;
        if (c >= 1) ++s.peter_wins;
        if (i % 2 == 1 && seq.throws[i - 1] + c >= 2) ++s.james_wins;
    }
    return s;
}

ThrowSequence dominance_counterexample() { return ThrowSequence{{2, 0}}; }

}  // namespace pepys
