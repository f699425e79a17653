#include <doctest.h>

#include <random>
#include <stdexcept>
#include <unordered_set>

#include "hompoly/rational.hpp"

using hompoly::Integer;
using hompoly::Rational;

TEST_CASE("normalize puts fractions in canonical form")
{
    CHECK(hompoly::normalize(2, -4).str() == "-1/2");
    CHECK(hompoly::normalize(0, 7).str() == "0");
    CHECK(hompoly::normalize(0, 7).den() == 1);
    CHECK(hompoly::normalize(6, 3).str() == "2");
    CHECK(hompoly::normalize(-3, -9) == Rational(1, 3));
    CHECK_THROWS_AS(hompoly::normalize(1, 0), std::domain_error);
    CHECK_THROWS_AS(Rational(Integer(5), Integer(0)), std::domain_error);
}

TEST_CASE("normalize is idempotent on random fractions")
{
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<long> dist(-1000, 1000);
    for (int i = 0; i < 500; ++i) {
        long d = dist(rng);
        if (d == 0)
            d = 1;
        const Rational r = hompoly::normalize(dist(rng), d);
        const Rational again = hompoly::normalize(r.num(), r.den());
        CHECK(again == r);
        CHECK(again.str() == r.str());
        CHECK(r.den() > 0);
        Integer g;
        mpz_gcd(g.get_mpz_t(), r.num().get_mpz_t(), r.den().get_mpz_t());
        CHECK(g == 1);
    }
}

TEST_CASE("parse and str round trip")
{
    for (const char* s : {"0", "1", "-1", "3/4", "-7/12", "123456789012345678901234567891/2"})
        CHECK(Rational::parse(s).str() == s);
    CHECK(Rational::parse("4/8").str() == "1/2");
    CHECK(Rational::parse("5/-10").str() == "-1/2");
    for (const char* bad : {"", "/", "1/", "/2", "a", "1/0", "1.5", "1 /2", "--1", "1/2/3", " 1"})
        CHECK_THROWS(Rational::parse(bad));
}

TEST_CASE("arithmetic is exact")
{
    const Rational a(1, 3), b(1, 6);
    CHECK(a + b == Rational(1, 2));
    CHECK(a - b == Rational(1, 6));
    CHECK(a * b == Rational(1, 18));
    CHECK(a / b == Rational(2));
    CHECK(-a == Rational(-1, 3));
    CHECK_THROWS_AS(a / Rational(0), std::domain_error);

    // 1/1 + 1/2 + ... + 1/20, against its known reduced value
    Rational h = 0;
    for (long k = 1; k <= 20; ++k)
        h += Rational(Integer(1), Integer(k));
    CHECK(h.str() == "55835135/15519504");
}

TEST_CASE("ordering agrees with cross multiplication")
{
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<long> num(-50, 50), den(1, 50);
    for (int i = 0; i < 400; ++i) {
        const long p = num(rng), q = den(rng), r = num(rng), s = den(rng);
        const Rational x{Integer(p), Integer(q)}, y{Integer(r), Integer(s)};
        CHECK((x < y) == (p * s < r * q));
        CHECK((x == y) == (p * s == r * q));
    }
}

TEST_CASE("equal values hash equally")
{
    std::unordered_set<Rational> seen;
    seen.insert(Rational(2, 4));
    seen.insert(Rational(1, 2));
    seen.insert(Rational(-3, -6));
    CHECK(seen.size() == 1);
    CHECK(hompoly::abs(Rational(-5, 3)) == Rational(5, 3));
}
