#pragma once

/**
 * Exact rational numbers over arbitrary-precision integers.
 *
 * Every value is kept in canonical form: gcd(|num|, den) = 1, den > 0, and
 * zero is 0/1. Equal values therefore compare equal member-by-member, and
 * the text form produced by to_string() is unique per value.
 */

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace pepys {

using BigInt = boost::multiprecision::cpp_int;

class ExactRational {
public:
    ExactRational() : num_(0), den_(1) {}
    ExactRational(BigInt num) : num_(std::move(num)), den_(1) {}  // NOLINT implicit
    ExactRational(std::int64_t num) : num_(num), den_(1) {}       // NOLINT implicit
    ExactRational(int num) : num_(num), den_(1) {}                // NOLINT implicit
    /// Throws DomainError when den == 0.
    ExactRational(BigInt num, BigInt den);

    /// Accepts "a/b", a bare integer, or a decimal literal such as "0.25",
    /// "-3.5" or "1e-9". Surrounding whitespace is not allowed.
    static ExactRational parse(std::string_view text);

    /// The exact value of a finite double (every double is a dyadic rational).
    static ExactRational from_double(double value);

    BigInt const& numerator() const noexcept { return num_; }
    BigInt const& denominator() const noexcept { return den_; }

    bool is_zero() const noexcept { return num_ == 0; }
    bool is_integer() const noexcept { return den_ == 1; }
    int sign() const noexcept { return num_.sign(); }

    /// Nearest double (round-to-nearest on the exact value).
    double to_double() const;

    /// "a/b", or "a" when the value is an integer.
    std::string to_string() const;

    /// Numerator over the given denominator, e.g. 15166600495229/25389989167104
    /// rendered over 6^18. Throws DomainError when den is not a positive
    /// multiple of the canonical denominator.
    std::string to_fraction_string_over(BigInt const& den) const;

    ExactRational operator-() const;
    ExactRational abs() const;
    ExactRational reciprocal() const;

    friend ExactRational operator+(ExactRational const& a, ExactRational const& b);
    friend ExactRational operator-(ExactRational const& a, ExactRational const& b);
    friend ExactRational operator*(ExactRational const& a, ExactRational const& b);
    friend ExactRational operator/(ExactRational const& a, ExactRational const& b);

    ExactRational& operator+=(ExactRational const& rhs) { return *this = *this + rhs; }
    ExactRational& operator-=(ExactRational const& rhs) { return *this = *this - rhs; }
    ExactRational& operator*=(ExactRational const& rhs) { return *this = *this * rhs; }
    ExactRational& operator/=(ExactRational const& rhs) { return *this = *this / rhs; }

    friend bool operator==(ExactRational const& a, ExactRational const& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(ExactRational const& a, ExactRational const& b);

private:
    struct Canonical {};
    ExactRational(BigInt num, BigInt den, Canonical) : num_(std::move(num)), den_(std::move(den)) {}
    void canonicalize();

    BigInt num_;
    BigInt den_;
};

std::ostream& operator<<(std::ostream& os, ExactRational const& x);

/// Base raised to a non-negative integer power.
ExactRational pow(ExactRational const& base, unsigned exponent);

/// Fixed-point rendering with exactly `digits` fractional digits, rounded
/// half-to-even on the exact value. Throws DomainError when digits < 1.
std::string render_decimal(ExactRational const& x, int digits);

/// render_decimal of the exact value of a double.
std::string render_decimal(double x, int digits);

}  // namespace pepys
