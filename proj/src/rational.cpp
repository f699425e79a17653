#include "hompoly/rational.hpp"

#include <stdexcept>

namespace hompoly {

namespace {

// Optional sign followed by at least one decimal digit.
bool is_integer_literal(std::string_view t)
{
    if (!t.empty() && (t.front() == '-' || t.front() == '+'))
        t.remove_prefix(1);
    if (t.empty())
        return false;
    for (char c : t)
        if (c < '0' || c > '9')
            return false;
    return true;
}

} // namespace

Rational::Rational(const Integer& num, const Integer& den)
{
    if (den == 0)
        throw std::domain_error("rational with zero denominator");
    value_ = mpq_class(num, den);
    value_.canonicalize();
}

Rational Rational::parse(std::string_view text)
{
    const std::string s(text);
    const auto slash = s.find('/');
    const std::string_view head = std::string_view(s).substr(0, slash);
    const std::string_view tail = slash == std::string::npos ? "0" : std::string_view(s).substr(slash + 1);
    if (!is_integer_literal(head) || !is_integer_literal(tail))
        throw std::invalid_argument("malformed rational '" + s + "'");
    try {
        if (slash == std::string::npos)
            return Rational(Integer(s, 10));
        return Rational(Integer(s.substr(0, slash), 10), Integer(s.substr(slash + 1), 10));
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("malformed rational '" + s + "'");
    }
}

Rational& Rational::operator/=(const Rational& rhs)
{
    if (rhs.is_zero())
        throw std::domain_error("division by zero");
    value_ /= rhs.value_;
    return *this;
}

std::string Rational::str() const
{
    if (is_integer())
        return value_.get_num().get_str();
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

std::size_t Rational::hash() const
{
    // Low limbs of numerator and denominator are enough to spread buckets.
    const auto limb = [](const mpz_class& z) -> std::size_t {
        if (z == 0)
            return 0;
        return static_cast<std::size_t>(mpz_getlimbn(z.get_mpz_t(), 0)) ^ (sgn(z) < 0 ? 0x9e3779b97f4a7c15ULL : 0);
    };
    const std::size_t h = limb(value_.get_num());
    return h ^ (limb(value_.get_den()) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
}

Rational normalize(const Integer& num, const Integer& den)
{
    return Rational(num, den);
}

Rational abs(const Rational& r)
{
    return r.sign() < 0 ? -r : r;
}

} // namespace hompoly
