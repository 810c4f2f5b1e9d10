#include "pepys/ordering.hpp"

#include <algorithm>
#include <numeric>
#include <optional>

#include "pepys/errors.hpp"

namespace pepys {

void PepysFamily::validate() const {
    if (dice_per_unit < 1) throw DomainError("dice per unit must be at least 1");
    if (k_max < 1) throw DomainError("k_max must be at least 1");
}

std::vector<Probability> pepys_sequence(PepysFamily const& family) {
    family.validate();
    std::vector<Probability> seq;
    seq.reserve(family.k_max);
    for (unsigned k = 1; k <= family.k_max; ++k)
        seq.push_back(binom_tail(family.dice_per_unit * k, k, family.success_prob));
    return seq;
}

bool is_strictly_decreasing(std::vector<Probability> const& seq) {
    if (seq.size() < 2) throw DomainError("monotonicity needs at least two terms");
    return std::adjacent_find(seq.begin(), seq.end(),
                              [](auto const& a, auto const& b) { return !(a > b); })
           == seq.end();
}

std::vector<unsigned> rank_units(std::vector<Probability> const& seq) {
    std::vector<unsigned> ranking(seq.size());
    std::iota(ranking.begin(), ranking.end(), 1u);
    std::stable_sort(ranking.begin(), ranking.end(),
                     [&](unsigned a, unsigned b) { return seq[a - 1] > seq[b - 1]; });
    return ranking;
}

std::vector<OrderingRow> ordering_table(PepysFamily const& family,
                                        std::vector<Probability> const& p_grid) {
    if (p_grid.empty()) throw DomainError("ordering table needs a nonempty grid");
    std::vector<OrderingRow> rows;
    rows.reserve(p_grid.size());
    for (auto const& p : p_grid) {
        PepysFamily at = family;
        at.success_prob = p;
        OrderingRow row{p, pepys_sequence(at), {}};
        row.ranking = rank_units(row.tails);
        rows.push_back(std::move(row));
    }
    return rows;
}

ExactRational tail_difference(unsigned k1, unsigned k2, unsigned r, Probability const& p) {
    return binom_tail(r * k1, k1, p).value() - binom_tail(r * k2, k2, p).value();
}

namespace {

struct Bracket {
    ExactRational low;
    ExactRational high;
    int sign_low;
    int sign_high;
};

std::optional<Bracket> scan_for_bracket(unsigned k1, unsigned k2, unsigned r) {
    auto grid_point = [](unsigned i) {
        return ExactRational(BigInt(i), BigInt(kCrossoverScanDenominator));
    };
    ExactRational prev = grid_point(1);
    int prev_sign = tail_difference(k1, k2, r, Probability(prev)).sign();
    if (prev_sign == 0) return Bracket{prev, prev, 0, 0};
    for (unsigned i = 2; i < kCrossoverScanDenominator; ++i) {
        ExactRational cur = grid_point(i);
        int const s = tail_difference(k1, k2, r, Probability(cur)).sign();
        if (s == 0) return Bracket{cur, cur, 0, 0};
        if (s != prev_sign) return Bracket{prev, cur, prev_sign, s};
        prev = std::move(cur);
        prev_sign = s;
    }
    return std::nullopt;
}

}  // namespace

CrossoverResult crossover_probability(unsigned k1, unsigned k2, unsigned r,
                                      ExactRational const& tol) {
    if (k1 < 1 || k1 >= k2) throw DomainError("crossover needs 1 <= k1 < k2");
    if (r < 1) throw DomainError("dice per unit must be at least 1");
    if (tol.sign() <= 0) throw DomainError("tolerance must be positive");

    auto sign_at = [&](ExactRational const& p) {
        return tail_difference(k1, k2, r, Probability(p)).sign();
    };

    std::optional<Bracket> bracket;
    if (k1 == 1 && k2 == 2 && r == 6) {
        Bracket b{ExactRational(1, 6), ExactRational(1, 4), 0, 0};
        b.sign_low = sign_at(b.low);
        b.sign_high = sign_at(b.high);
        if (b.sign_low * b.sign_high < 0) bracket = b;
    }
    if (!bracket) bracket = scan_for_bracket(k1, k2, r);
    if (!bracket)
        throw DomainError("no sign change of the tail difference on the grid i/"
                          + std::to_string(kCrossoverScanDenominator));

    CrossoverResult out;
    out.k_pair = {k1, k2};
    out.dice_per_unit = r;
    ExactRational lo = bracket->low;
    ExactRational hi = bracket->high;
    int sign_lo = bracket->sign_low;
    int sign_hi = bracket->sign_high;
    ExactRational const half(1, 2);
    while (hi - lo > tol) {
        ExactRational mid = (lo + hi) * half;
        int const s = sign_at(mid);
        ++out.iterations;
        if (s == 0) {
            lo = hi = mid;
            sign_lo = sign_hi = 0;
            break;
        }
        if (s == sign_lo) {
            lo = std::move(mid);
        } else {
            hi = std::move(mid);
            sign_hi = s;
        }
    }
    out.p_low = lo;
    out.p_high = hi;
    out.sign_low = sign_lo;
    out.sign_high = sign_hi;
    out.midpoint = ((lo + hi) * half).to_double();
    return out;
}

}  // namespace pepys
