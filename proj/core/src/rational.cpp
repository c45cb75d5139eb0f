#include "abcov/rational.hpp"

#include <charconv>
#include <limits>
#include <ostream>

#include "abcov/errors.hpp"

namespace abcov {

namespace {

Int128 gcd_wide(Int128 a, Int128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        Int128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

bool fits(Int128 v) {
    return v >= std::numeric_limits<std::int64_t>::min() &&
           v <= std::numeric_limits<std::int64_t>::max();
}

std::int64_t parse_int(std::string_view text, std::string_view whole) {
    std::int64_t value = 0;
    const char* first = text.data();
    const char* last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last || text.empty()) {
        throw DomainError("not a rational: \"" + std::string(whole) + "\"");
    }
    return value;
}

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) {
    *this = from_wide(num, den);
}

Rational Rational::from_wide(Int128 num, Int128 den) {
    if (den == 0) throw DomainError("rational with zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    const Int128 g = gcd_wide(num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
    if (!fits(num) || !fits(den)) throw OverflowError("rational overflow");
    Rational r;
    r.num_ = static_cast<std::int64_t>(num);
    r.den_ = static_cast<std::int64_t>(den);
    return r;
}

std::string Rational::to_string() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::parse(std::string_view text) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_int(text, text));
    const std::int64_t num = parse_int(text.substr(0, slash), text);
    const std::int64_t den = parse_int(text.substr(slash + 1), text);
    return Rational(num, den);
}

Rational Rational::operator-() const {
    return from_wide(-static_cast<Int128>(num_), den_);
}

Rational& Rational::operator+=(const Rational& rhs) {
    *this = from_wide(static_cast<Int128>(num_) * rhs.den_ + static_cast<Int128>(rhs.num_) * den_,
                      static_cast<Int128>(den_) * rhs.den_);
    return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
    return *this += -rhs;
}

Rational& Rational::operator*=(const Rational& rhs) {
    *this = from_wide(static_cast<Int128>(num_) * rhs.num_, static_cast<Int128>(den_) * rhs.den_);
    return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
    *this = from_wide(static_cast<Int128>(num_) * rhs.den_, static_cast<Int128>(den_) * rhs.num_);
    return *this;
}

std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) {
    const Int128 l = static_cast<Int128>(lhs.num_) * rhs.den_;
    const Int128 r = static_cast<Int128>(rhs.num_) * lhs.den_;
    if (l < r) return std::strong_ordering::less;
    if (l > r) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

Rational abs(const Rational& x) {
    return x.num() < 0 ? -x : x;
}

Rational min(const Rational& a, const Rational& b) {
    return b < a ? b : a;
}

std::ostream& operator<<(std::ostream& os, const Rational& x) {
    return os << x.to_string();
}

}  // namespace abcov
