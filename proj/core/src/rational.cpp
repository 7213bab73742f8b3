#include "qgen/rational.hpp"

#include <cctype>
#include <cstdlib>
#include <limits>

namespace qgen {

namespace {

__int128 gcd128(__int128 a, __int128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        __int128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

} // namespace

Rational Rational::make_reduced(__int128 n, __int128 d) {
    if (d == 0) throw DivisionByZero();
    if (d < 0) {
        n = -n;
        d = -d;
    }
    __int128 g = gcd128(n, d);
    if (g > 1) {
        n /= g;
        d /= g;
    }
    constexpr __int128 lo = std::numeric_limits<int64_t>::min();
    constexpr __int128 hi = std::numeric_limits<int64_t>::max();
    if (n < lo || n > hi || d > hi) throw RationalOverflow();
    Rational r;
    r.num_ = static_cast<int64_t>(n);
    r.den_ = static_cast<int64_t>(d);
    return r;
}

Rational::Rational(int64_t n, int64_t d) { *this = make_reduced(n, d); }

Rational Rational::operator-() const { return make_reduced(-static_cast<__int128>(num_), den_); }

Rational Rational::operator+(const Rational& o) const {
    return make_reduced(static_cast<__int128>(num_) * o.den_ + static_cast<__int128>(o.num_) * den_,
                        static_cast<__int128>(den_) * o.den_);
}

Rational Rational::operator-(const Rational& o) const {
    return make_reduced(static_cast<__int128>(num_) * o.den_ - static_cast<__int128>(o.num_) * den_,
                        static_cast<__int128>(den_) * o.den_);
}

Rational Rational::operator*(const Rational& o) const {
    return make_reduced(static_cast<__int128>(num_) * o.num_,
                        static_cast<__int128>(den_) * o.den_);
}

Rational Rational::operator/(const Rational& o) const {
    if (o.num_ == 0) throw DivisionByZero();
    return make_reduced(static_cast<__int128>(num_) * o.den_,
                        static_cast<__int128>(den_) * o.num_);
}

bool Rational::operator<(const Rational& o) const {
    return static_cast<__int128>(num_) * o.den_ < static_cast<__int128>(o.num_) * den_;
}

std::string Rational::str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

std::optional<Rational> Rational::parse(std::string_view text) {
    size_t i = 0;
    size_t n = text.size();
    auto skip_ws = [&] {
        while (i < n && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    skip_ws();
    if (i >= n) return std::nullopt;

    bool negative = false;
    if (text[i] == '+' || text[i] == '-') {
        negative = text[i] == '-';
        ++i;
    }
    if (i >= n || !std::isdigit(static_cast<unsigned char>(text[i]))) return std::nullopt;

    // Integer part, with "1,250"-style group separators.
    __int128 int_part = 0;
    while (i < n) {
        char c = text[i];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            int_part = int_part * 10 + (c - '0');
            if (int_part > static_cast<__int128>(1) << 100) return std::nullopt;
            ++i;
        } else if (c == ',' && i + 1 < n && std::isdigit(static_cast<unsigned char>(text[i + 1]))) {
            ++i;
        } else {
            break;
        }
    }

    __int128 num = int_part;
    __int128 den = 1;

    if (i < n && text[i] == '.') {
        ++i;
        if (i >= n || !std::isdigit(static_cast<unsigned char>(text[i]))) return std::nullopt;
        while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) {
            num = num * 10 + (text[i] - '0');
            den *= 10;
            if (den > static_cast<__int128>(1) << 100) return std::nullopt;
            ++i;
        }
    } else if (i < n && text[i] == '/') {
        ++i;
        if (i >= n || !std::isdigit(static_cast<unsigned char>(text[i]))) return std::nullopt;
        __int128 d = 0;
        while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) {
            d = d * 10 + (text[i] - '0');
            if (d > static_cast<__int128>(1) << 100) return std::nullopt;
            ++i;
        }
        if (d == 0) return std::nullopt;
        den = d;
    }

    skip_ws();
    if (i != n) return std::nullopt;

    if (negative) num = -num;
    try {
        return make_reduced(num, den);
    } catch (const Error&) {
        return std::nullopt;
    }
}

} // namespace qgen
