#include "pepys/rational.hpp"

#include <cctype>
#include <cmath>
#include <ostream>

#include "pepys/errors.hpp"

namespace pepys {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

// Decimal digits only; cpp_int would read a leading 0 as an octal prefix.
BigInt parse_unsigned(std::string_view s) {
    auto const first = s.find_first_not_of('0');
    if (first == std::string_view::npos) return 0;
    return BigInt(std::string(s.substr(first)));
}

BigInt pow10(unsigned exponent) {
    return boost::multiprecision::pow(BigInt(10), exponent);
}

// Optional sign, digits with at most one '.', optional exponent.
ExactRational parse_decimal(std::string_view text) {
    std::string_view s = text;
    bool negative = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }

    long exponent = 0;
    if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
        std::string_view exp_text = s.substr(e + 1);
        s = s.substr(0, e);
        bool exp_negative = false;
        if (!exp_text.empty() && (exp_text.front() == '-' || exp_text.front() == '+')) {
            exp_negative = exp_text.front() == '-';
            exp_text.remove_prefix(1);
        }
        if (!all_digits(exp_text) || exp_text.size() > 6)
            throw ParseError("malformed exponent in '" + std::string(text) + "'");
        exponent = std::stol(std::string(exp_text));
        if (exp_negative) exponent = -exponent;
    }

    std::string_view int_part = s;
    std::string_view frac_part;
    if (auto dot = s.find('.'); dot != std::string_view::npos) {
        int_part = s.substr(0, dot);
        frac_part = s.substr(dot + 1);
    }
    if (int_part.empty() && frac_part.empty())
        throw ParseError("not a number: '" + std::string(text) + "'");
    if ((!int_part.empty() && !all_digits(int_part)) || (!frac_part.empty() && !all_digits(frac_part)))
        throw ParseError("not a number: '" + std::string(text) + "'");

    std::string digits = std::string(int_part) + std::string(frac_part);
    BigInt mantissa = parse_unsigned(digits);
    if (negative) mantissa = -mantissa;
    long scale = exponent - static_cast<long>(frac_part.size());
    if (scale >= 0) return ExactRational(mantissa * pow10(static_cast<unsigned>(scale)));
    return ExactRational(mantissa, pow10(static_cast<unsigned>(-scale)));
}

}  // namespace

ExactRational::ExactRational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_ == 0) throw DomainError("rational with zero denominator");
    canonicalize();
}

void ExactRational::canonicalize() {
    if (num_ == 0) {
        den_ = 1;
        return;
    }
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    BigInt g = boost::multiprecision::gcd(num_, den_);
    if (g != 1) {
        num_ /= g;
        den_ /= g;
    }
}

ExactRational ExactRational::parse(std::string_view text) {
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        std::string_view top = text.substr(0, slash);
        std::string_view bottom = text.substr(slash + 1);
        bool negative = false;
        if (!top.empty() && (top.front() == '-' || top.front() == '+')) {
            negative = top.front() == '-';
            top.remove_prefix(1);
        }
        if (!all_digits(top) || !all_digits(bottom))
            throw ParseError("not a fraction: '" + std::string(text) + "'");
        BigInt den = parse_unsigned(bottom);
        if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
        BigInt num = parse_unsigned(top);
        return ExactRational(negative ? BigInt(-num) : num, den);
    }
    return parse_decimal(text);
}

ExactRational ExactRational::from_double(double value) {
    if (!std::isfinite(value)) throw DomainError("non-finite double has no rational value");
    if (value == 0.0) return {};
    int exponent = 0;
    double mantissa = std::frexp(value, &exponent);
    // mantissa * 2^53 is an exact integer for every finite double.
    auto scaled = static_cast<std::int64_t>(std::ldexp(mantissa, 53));
    exponent -= 53;
    BigInt num(scaled);
    if (exponent >= 0) return ExactRational(BigInt(num << exponent));
    BigInt den = BigInt(1) << -exponent;
    return ExactRational(num, den);
}

double ExactRational::to_double() const {
    return boost::multiprecision::cpp_rational(num_, den_).convert_to<double>();
}

std::string ExactRational::to_string() const {
    if (den_ == 1) return num_.str();
    return num_.str() + "/" + den_.str();
}

std::string ExactRational::to_fraction_string_over(BigInt const& den) const {
    if (den <= 0 || den % den_ != 0)
        throw DomainError(den.str() + " is not a multiple of the denominator of " + to_string());
    BigInt num = num_ * (den / den_);
    return num.str() + "/" + den.str();
}

ExactRational ExactRational::operator-() const { return {BigInt(-num_), den_, Canonical{}}; }

ExactRational ExactRational::abs() const { return num_ < 0 ? -*this : *this; }

ExactRational ExactRational::reciprocal() const {
    if (num_ == 0) throw DomainError("reciprocal of zero");
    return {den_, num_};
}

ExactRational operator+(ExactRational const& a, ExactRational const& b) {
    if (a.den_ == b.den_) return {a.num_ + b.num_, a.den_};
    return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
}

ExactRational operator-(ExactRational const& a, ExactRational const& b) { return a + (-b); }

ExactRational operator*(ExactRational const& a, ExactRational const& b) {
    return {a.num_ * b.num_, a.den_ * b.den_};
}

ExactRational operator/(ExactRational const& a, ExactRational const& b) {
    if (b.num_ == 0) throw DomainError("division by zero");
    return {a.num_ * b.den_, a.den_ * b.num_};
}

std::strong_ordering operator<=>(ExactRational const& a, ExactRational const& b) {
    BigInt lhs = a.num_ * b.den_;
    BigInt rhs = b.num_ * a.den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, ExactRational const& x) { return os << x.to_string(); }

ExactRational pow(ExactRational const& base, unsigned exponent) {
    return {boost::multiprecision::pow(base.numerator(), exponent),
            boost::multiprecision::pow(base.denominator(), exponent)};
}

std::string render_decimal(ExactRational const& x, int digits) {
    if (digits < 1) throw DomainError("render_decimal needs at least one fractional digit");
    BigInt const scale = pow10(static_cast<unsigned>(digits));
    BigInt const scaled = boost::multiprecision::abs(x.numerator()) * scale;
    BigInt const& den = x.denominator();
    BigInt quotient = scaled / den;
    BigInt const twice_rem = 2 * (scaled % den);
    if (twice_rem > den || (twice_rem == den && quotient % 2 == 1)) ++quotient;

    std::string text = quotient.str();
    if (text.size() <= static_cast<std::size_t>(digits))
        text.insert(0, static_cast<std::size_t>(digits) + 1 - text.size(), '0');
    text.insert(text.size() - static_cast<std::size_t>(digits), ".");
    if (x.sign() < 0 && quotient != 0) text.insert(0, "-");
    return text;
}

std::string render_decimal(double x, int digits) {
    return render_decimal(ExactRational::from_double(x), digits);
}

}  // namespace pepys
