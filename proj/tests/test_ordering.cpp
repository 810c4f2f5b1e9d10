#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "pepys/errors.hpp"
#include "pepys/ordering.hpp"

using namespace pepys;

namespace {

Probability const sixth(1, 6);
Probability const quarter(1, 4);

// Setting P(X >= 1 | 6) = P(X >= 2 | 12) and dividing out (1-p)^6 leaves
// (1-p)^5 (1 + 11p) = 1. Bisected in long double on (0, 1), independent of
// the library.
long double polynomial_root() {
    auto f = [](long double p) { return std::pow(1.0L - p, 5) * (1.0L + 11.0L * p) - 1.0L; };
    long double lo = 0.05L;  // f > 0 just above 0
    long double hi = 0.9L;   // f < 0
    for (int i = 0; i < 200; ++i) {
        long double const mid = (lo + hi) / 2;
        (f(mid) > 0 ? lo : hi) = mid;
    }
    return (lo + hi) / 2;
}

}  // namespace

TEST_CASE("pepys sequence") {
    auto const fair = pepys_sequence({6, 3, sixth});
    REQUIRE(fair.size() == 3);
    CHECK(fair[0].to_string() == "31031/46656");
    CHECK(fair[1].to_string() == "1346704211/2176782336");
    CHECK(fair[2].value() == ExactRational::parse("60666401980916/101559956668416"));

    auto const weighted = pepys_sequence({6, 2, quarter});
    CHECK(render_decimal(weighted[0].value(), 4) == "0.8220");
    CHECK(render_decimal(weighted[1].value(), 4) == "0.8416");

    auto const certain = pepys_sequence({1, 3, Probability(1, 1)});
    for (auto const& v : certain) CHECK(v.value() == ExactRational(1));

    CHECK_THROWS_AS(pepys_sequence({0, 3, sixth}), DomainError);
    CHECK_THROWS_AS(pepys_sequence({6, 0, sixth}), DomainError);
}

TEST_CASE("strict decrease") {
    CHECK(is_strictly_decreasing(pepys_sequence({6, 3, sixth})));
    CHECK_FALSE(is_strictly_decreasing(pepys_sequence({6, 2, quarter})));
    CHECK_FALSE(is_strictly_decreasing({sixth, sixth, sixth}));
    CHECK_THROWS_AS(is_strictly_decreasing({sixth}), DomainError);
}

TEST_CASE("fair-dice sequence decreases and stays above one half") {
    auto const seq = pepys_sequence({6, 20, sixth});
    CHECK(is_strictly_decreasing(seq));
    for (auto const& v : seq) CHECK(v.value() > ExactRational(1, 2));
}

TEST_CASE("ordering table") {
    auto const rows = ordering_table({6, 3, sixth}, {sixth});
    CHECK(rows.at(0).ranking == std::vector<unsigned>{1, 2, 3});
    CHECK(ordering_table({6, 2, sixth}, {quarter}).at(0).ranking == std::vector<unsigned>{2, 1});
    CHECK(ordering_table({6, 1, sixth}, {Probability(1, 2)}).at(0).ranking
          == std::vector<unsigned>{1});
    CHECK(rank_units({sixth, sixth}) == std::vector<unsigned>{1, 2});
    CHECK_THROWS_AS(ordering_table({6, 2, sixth}, {}), DomainError);
}

TEST_CASE("tail difference signs at the fair and weighted dice") {
    CHECK(tail_difference(1, 2, 6, sixth).sign() > 0);
    CHECK(tail_difference(1, 2, 6, quarter).sign() < 0);
}

TEST_CASE("crossover bisection matches the independent polynomial root") {
    ExactRational const tol(1, 1'000'000'000);
    auto const c = crossover_probability(1, 2, 6, tol);
    CHECK(c.p_high - c.p_low <= tol);
    CHECK(c.p_low >= ExactRational(1, 6));
    CHECK(c.p_high <= ExactRational(1, 4));
    CHECK(c.sign_low > 0);
    CHECK(c.sign_high < 0);
    // The recorded signs are re-derived here, exactly.
    CHECK(tail_difference(1, 2, 6, Probability(c.p_low)).sign() == c.sign_low);
    CHECK(tail_difference(1, 2, 6, Probability(c.p_high)).sign() == c.sign_high);

    long double const root = polynomial_root();
    CHECK(std::abs(static_cast<long double>(c.midpoint) - root) < 1e-9L);
    CHECK(c.midpoint == doctest::Approx(0.215987).epsilon(1e-5));
    CHECK(c.iterations > 20);
}

TEST_CASE("the ranking of units 1 and 2 flips once across the crossover") {
    auto const c = crossover_probability(1, 2, 6, ExactRational(1, 1000));
    std::vector<Probability> grid;
    for (int i = 1; i < 64; ++i) grid.emplace_back(i, 64);
    grid.emplace_back(c.p_low);
    grid.emplace_back(c.p_high);
    std::sort(grid.begin(), grid.end());
    auto const rows = ordering_table({6, 2, sixth}, grid);
    int flips = 0;
    for (std::size_t i = 1; i < rows.size(); ++i)
        if (rows[i].ranking != rows[i - 1].ranking) ++flips;
    CHECK(flips == 1);
    for (auto const& row : rows)
        CHECK(row.ranking.front() == (row.p.value() <= c.p_low ? 1u : 2u));
}

TEST_CASE("grid scan finds brackets for other pairs and reports failures") {
    ExactRational const tol(1, 1'000'000);
    auto const c = crossover_probability(2, 3, 6, tol);
    CHECK(c.p_high - c.p_low <= tol);
    CHECK(c.sign_low * c.sign_high <= 0);
    CHECK(tail_difference(2, 3, 6, Probability(c.p_low)).sign() == c.sign_low);
    CHECK(tail_difference(2, 3, 6, Probability(c.p_high)).sign() == c.sign_high);

    // r = 1: P(X >= k | k dice) = p^k is strictly decreasing in k on (0,1).
    CHECK_THROWS_AS(crossover_probability(1, 2, 1, tol), DomainError);
    CHECK_THROWS_AS(crossover_probability(2, 2, 6, tol), DomainError);
    CHECK_THROWS_AS(crossover_probability(1, 2, 6, ExactRational(0)), DomainError);
}
