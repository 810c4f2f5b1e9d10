#include <doctest.h>

#include <cmath>
#include <numbers>

#include "pepys/approx.hpp"
#include "pepys/errors.hpp"

using namespace pepys;

namespace {
Probability const sixth(1, 6);
}

TEST_CASE("stigler tail approximation") {
    // 0.5 + 0.4 * (5/6)^5, pmf(6,1,1/6) = 3125/7776.
    CHECK(stigler_tail_approx(6, sixth) == doctest::Approx(0.5 + 0.4 * 3125.0 / 7776.0).epsilon(1e-15));
    CHECK(stigler_tail_approx(6, sixth) == doctest::Approx(0.6608).epsilon(1e-4));

    // pmf(12,2,1/6) = 107421875/362797056 from an independent exact expansion.
    double const twelve = stigler_tail_approx(12, sixth);
    CHECK(twelve == doctest::Approx(0.5 + 0.4 * 107421875.0 / 362797056.0).epsilon(1e-15));
    CHECK(std::abs(twelve - 0.6187) < 0.01);

    CHECK(stigler_tail_approx(2, Probability(1, 2)) == doctest::Approx(0.7));
    CHECK_THROWS_AS(stigler_tail_approx(7, sixth), DomainError);
}

TEST_CASE("normal approximation to the modal probability") {
    double const six = demoivre_modal_approx(6, sixth);
    CHECK(six == doctest::Approx(0.43702).epsilon(1e-4));
    CHECK(std::abs(six - 1.07 / std::sqrt(6.0)) < 0.001);

    // Exact pmf(18,3,1/6) = 518798828125/2115832430592 ~ 0.24520.
    double const eighteen = demoivre_modal_approx(18, sixth);
    CHECK(eighteen == doctest::Approx(0.25231).epsilon(1e-4));
    CHECK(std::abs(eighteen - 518798828125.0 / 2115832430592.0) < 0.01);

    for (unsigned n : {1u, 10u, 101u})
        CHECK(demoivre_modal_approx(n, Probability(1, 2))
              == doctest::Approx(1.0 / std::sqrt(std::numbers::pi * n / 2.0)));

    CHECK_THROWS_AS(demoivre_modal_approx(6, Probability(0, 1)), DomainError);
    CHECK_THROWS_AS(demoivre_modal_approx(6, Probability(1, 1)), DomainError);
}

TEST_CASE("sqrt(n) times the modal approximation is the 1.07 coefficient at p = 1/6") {
    for (unsigned n = 6; n <= 600; n += 6)
        REQUIRE(std::abs(demoivre_modal_approx(n, sixth) * std::sqrt(double(n)) - 1.07) < 0.005);
}

TEST_CASE("chained approximation agrees with exact values to two places") {
    CHECK(chained_approx(6) == doctest::Approx(0.6747).epsilon(1e-4));
    CHECK(chained_approx(12) == doctest::Approx(0.6236).epsilon(1e-4));
    CHECK(chained_approx(18) == doctest::Approx(0.6009).epsilon(1e-4));

    char const* expected[] = {"0.67", "0.62", "0.60"};
    for (unsigned i = 0; i < 3; ++i) {
        unsigned const n = 6 * (i + 1);
        auto const r = approx_report(n, sixth);
        REQUIRE(r.chained.has_value());
        CHECK(render_decimal(*r.chained, 2) == expected[i]);
        CHECK(render_decimal(r.exact, 2) == expected[i]);
        CHECK(*r.chained_abs_error < 0.01);
    }
}

TEST_CASE("approx report") {
    auto const r = approx_report(6, sixth);
    CHECK(r.exact == ExactRational(31031, 46656));
    CHECK(r.modal == ExactRational(3125, 7776));
    CHECK(r.stigler - 0.5 == doctest::Approx(0.4 * r.modal.to_double()).epsilon(1e-14));
    CHECK(r.stigler_abs_error == doctest::Approx(std::abs(r.stigler - r.exact.to_double())));
    CHECK(r.demoivre_abs_error == doctest::Approx(std::abs(r.demoivre_modal - r.modal.to_double())));
    for (double v : {r.stigler, r.demoivre_modal, *r.chained}) {
        CHECK(v >= 0.0);
        CHECK(v <= 1.0);
    }

    auto const half = approx_report(10, Probability(1, 2));
    CHECK_FALSE(half.chained.has_value());
    CHECK_THROWS_AS(approx_report(5, Probability(1, 2)), DomainError);
}
