#include <doctest.h>

#include <random>

#include "pepys/errors.hpp"
#include "pepys/rational.hpp"

using pepys::BigInt;
using pepys::ExactRational;
using pepys::render_decimal;

TEST_CASE("rationals are stored in lowest terms with a positive denominator") {
    ExactRational const x(BigInt(6), BigInt(-4));
    CHECK(x.numerator() == -3);
    CHECK(x.denominator() == 2);
    CHECK(x == ExactRational(-3, 2));

    ExactRational const zero(BigInt(0), BigInt(-17));
    CHECK(zero.numerator() == 0);
    CHECK(zero.denominator() == 1);
    CHECK(zero.to_string() == "0");

    CHECK_THROWS_AS(ExactRational(BigInt(1), BigInt(0)), pepys::DomainError);
}

TEST_CASE("arithmetic and ordering") {
    ExactRational const third(1, 3);
    ExactRational const sixth(1, 6);
    CHECK(third + sixth == ExactRational(1, 2));
    CHECK(third - sixth == sixth);
    CHECK(third * sixth == ExactRational(1, 18));
    CHECK(third / sixth == ExactRational(2));
    CHECK(-third < sixth);
    CHECK(third > sixth);
    CHECK(pow(ExactRational(5, 6), 6) == ExactRational(15625, 46656));
    CHECK(pow(ExactRational(5, 6), 0) == ExactRational(1));
    CHECK_THROWS_AS(third / ExactRational(0), pepys::DomainError);
    CHECK_THROWS_AS(ExactRational(0).reciprocal(), pepys::DomainError);
}

TEST_CASE("parse accepts fractions, integers and decimals") {
    CHECK(ExactRational::parse("31031/46656") == ExactRational(31031, 46656));
    CHECK(ExactRational::parse("6/4") == ExactRational(3, 2));
    CHECK(ExactRational::parse("-3/6") == ExactRational(-1, 2));
    CHECK(ExactRational::parse("7") == ExactRational(7));
    CHECK(ExactRational::parse("0.25") == ExactRational(1, 4));
    CHECK(ExactRational::parse(".5") == ExactRational(1, 2));
    CHECK(ExactRational::parse("1e-9") == ExactRational(1, 1'000'000'000));
    CHECK(ExactRational::parse("2.5E2") == ExactRational(250));
    CHECK(ExactRational::parse("007/010") == ExactRational(7, 10));
    CHECK(ExactRational::parse("0.0625") == ExactRational(1, 16));

    for (char const* bad : {"", "abc", "1/0", "1/", "/2", "1/-2", "0.2.5", "1e", "-", "1/2/3", " 1"})
        CHECK_THROWS_AS(ExactRational::parse(bad), pepys::ParseError);
}

TEST_CASE("text forms") {
    ExactRational const c(BigInt("60666401980916"), BigInt("101559956668416"));
    CHECK(c.to_string() == "15166600495229/25389989167104");
    CHECK(c.to_fraction_string_over(BigInt("101559956668416")) == "60666401980916/101559956668416");
    CHECK_THROWS_AS(c.to_fraction_string_over(BigInt(7)), pepys::DomainError);
    CHECK(ExactRational(1).to_fraction_string_over(BigInt(46656)) == "46656/46656");
}

TEST_CASE("exact conversion from double") {
    CHECK(ExactRational::from_double(0.5) == ExactRational(1, 2));
    CHECK(ExactRational::from_double(-3.0) == ExactRational(-3));
    CHECK(ExactRational::from_double(0.0).is_zero());
    // 0.1 is not 1/10 in binary; its exact value has denominator 2^55.
    ExactRational const tenth = ExactRational::from_double(0.1);
    CHECK(tenth != ExactRational(1, 10));
    CHECK(tenth.denominator() == BigInt(1) << 55);
    CHECK(tenth.to_double() == 0.1);
}

TEST_CASE("render_decimal rounds half to even on the exact value") {
    CHECK(render_decimal(ExactRational(31031, 46656), 3) == "0.665");
    CHECK(render_decimal(ExactRational(1346704211, 2176782336), 3) == "0.619");
    CHECK(render_decimal(ExactRational(1, 2), 3) == "0.500");
    CHECK(render_decimal(ExactRational(1, 8), 2) == "0.12");
    CHECK(render_decimal(ExactRational(3, 8), 2) == "0.38");
    CHECK(render_decimal(ExactRational(5, 8), 2) == "0.62");
    CHECK(render_decimal(ExactRational(1), 3) == "1.000");
    CHECK(render_decimal(ExactRational(-7, 4), 1) == "-1.8");
    CHECK(render_decimal(ExactRational(-1, 1000), 2) == "0.00");
    CHECK(render_decimal(ExactRational(2, 3), 1) == "0.7");
    CHECK_THROWS_AS(render_decimal(ExactRational(1, 3), 0), pepys::DomainError);
}

TEST_CASE("render_decimal reparses to within half a unit in the last place") {
    std::mt19937_64 rng(20061693);
    std::uniform_int_distribution<std::int64_t> num(-1'000'000'000, 1'000'000'000);
    std::uniform_int_distribution<std::int64_t> den(1, 1'000'000'000);
    std::uniform_int_distribution<int> digits(1, 12);
    for (int i = 0; i < 2000; ++i) {
        ExactRational const x(BigInt(num(rng)), BigInt(den(rng)));
        int const d = digits(rng);
        ExactRational const back = ExactRational::parse(render_decimal(x, d));
        ExactRational const half_ulp =
            ExactRational(1, 2) / pow(ExactRational(10), static_cast<unsigned>(d));
        REQUIRE_MESSAGE((back - x).abs() <= half_ulp, x << " at " << d << " digits");
    }
}
