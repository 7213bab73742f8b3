#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "qgen/errors.hpp"

namespace qgen {

class DivisionByZero : public Error {
public:
    DivisionByZero() : Error("division by zero") {}
};

class RationalOverflow : public Error {
public:
    RationalOverflow() : Error("rational arithmetic overflow") {}
};

/// Exact rational number over 64-bit integers. Always stored reduced with a
/// positive denominator; intermediate products use 128-bit arithmetic and
/// throw RationalOverflow if a reduced result does not fit.
class Rational {
public:
    Rational() = default;
    Rational(int64_t n) : num_(n), den_(1) {} // NOLINT: implicit by design
    Rational(int64_t n, int64_t d);

    int64_t num() const { return num_; }
    int64_t den() const { return den_; }
    bool is_integer() const { return den_ == 1; }

    Rational operator-() const;
    Rational operator+(const Rational& o) const;
    Rational operator-(const Rational& o) const;
    Rational operator*(const Rational& o) const;
    Rational operator/(const Rational& o) const; // throws DivisionByZero

    bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const Rational& o) const { return !(*this == o); }
    bool operator<(const Rational& o) const;

    /// Canonical form: "22", "-3", "7/2".
    std::string str() const;

    /// Parses one number token: optional sign, digits with comma group
    /// separators, an exact decimal part, or a simple fraction "a/b".
    /// Surrounding whitespace is accepted; anything else returns nullopt.
    static std::optional<Rational> parse(std::string_view text);

private:
    int64_t num_ = 0;
    int64_t den_ = 1;

    static Rational make_reduced(__int128 n, __int128 d);
};

} // namespace qgen
