#ifndef HOMPOLY_RATIONAL_HPP
#define HOMPOLY_RATIONAL_HPP

#include <compare>
#include <cstdint>
#include <functional>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace hompoly {

using Integer = mpz_class;

/**
 * Exact fraction over arbitrary-precision integers.
 *
 * Always kept in canonical form: gcd(|num|, den) = 1, den > 0, zero is 0/1.
 * Serializes as "p/q", or "p" when the denominator is 1.
 */
class Rational
{
public:
    Rational() = default;
    Rational(long value) : value_(value) {}
    Rational(const Integer& value) : value_(value) {}

    /// Throws std::domain_error when `den` is zero.
    Rational(const Integer& num, const Integer& den);

    /// Parses "p/q" or "p"; throws std::invalid_argument on malformed input.
    static Rational parse(std::string_view text);

    Integer num() const { return value_.get_num(); }
    Integer den() const { return value_.get_den(); }
    const mpq_class& raw() const { return value_; }

    int sign() const { return sgn(value_); }
    bool is_zero() const { return sgn(value_) == 0; }
    bool is_integer() const { return value_.get_den() == 1; }

    std::string str() const;
    double approx() const { return value_.get_d(); }

    Rational& operator+=(const Rational& rhs) { value_ += rhs.value_; return *this; }
    Rational& operator-=(const Rational& rhs) { value_ -= rhs.value_; return *this; }
    Rational& operator*=(const Rational& rhs) { value_ *= rhs.value_; return *this; }
    Rational& operator/=(const Rational& rhs);

    friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
    Rational operator-() const { Rational r; r.value_ = -value_; return r; }

    friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.value_, b.value_) == 0; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b)
    {
        const int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

    std::size_t hash() const;

private:
    mpq_class value_;
};

/// Canonical form of num/den. Errors on a zero denominator.
Rational normalize(const Integer& num, const Integer& den);

Rational abs(const Rational& r);

} // namespace hompoly

template <>
struct std::hash<hompoly::Rational>
{
    std::size_t operator()(const hompoly::Rational& r) const { return r.hash(); }
};

#endif // HOMPOLY_RATIONAL_HPP
