#include <doctest.h>

#include <algorithm>
#include <functional>
#include <set>

#include "hompoly/counts.hpp"
#include "hompoly/group.hpp"
#include "hompoly/linalg.hpp"

using namespace hompoly;

namespace {

// Set partitions of {0..m-1} into exactly n blocks, via restricted growth strings.
long brute_stirling2(int m, int n)
{
    long count = 0;
    std::vector<int> a(m, 0);
    std::function<void(int, int)> rec = [&](int i, int blocks) {
        if (i == m) {
            count += blocks == n;
            return;
        }
        for (int b = 0; b <= blocks && b < n; ++b) {
            a[i] = b;
            rec(i + 1, std::max(blocks, b + 1));
        }
    };
    if (m == 0)
        return n == 0;
    rec(0, 0);
    return count;
}

// Maps {1..m} -> {+-1..+-n} whose absolute values cover {1..n}.
long brute_sigma(int m, int n)
{
    long count = 0, total = 1;
    for (int i = 0; i < m; ++i)
        total *= 2 * n;
    for (long code = 0; code < total; ++code) {
        std::set<int> hit;
        long c = code;
        for (int i = 0; i < m; ++i, c /= 2 * n)
            hit.insert(static_cast<int>(c % (2 * n)) / 2);
        count += static_cast<long>(hit.size()) == n;
    }
    return count;
}

std::vector<QVector> cube_vertices(std::size_t n)
{
    std::vector<QVector> out;
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
        QVector v(n);
        for (std::size_t i = 0; i < n; ++i)
            v[i] = (mask >> i) & 1 ? 1 : -1;
        out.push_back(v);
    }
    return out;
}

// 0 = sum l_i v_i with sum l_i = 1 has a unique solution with every l_i > 0.
bool origin_inside_by_solve(const std::vector<QVector>& pts)
{
    const std::size_t n = pts.front().size();
    QMatrix m(n + 1, pts.size());
    for (std::size_t j = 0; j < pts.size(); ++j) {
        for (std::size_t i = 0; i < n; ++i)
            m(i, j) = pts[j][i];
        m(n, j) = 1;
    }
    QVector rhs(n + 1, 0);
    rhs[n] = 1;
    const auto s = solve(m, rhs);
    return s.kind == SolveResult::Kind::unique &&
           std::all_of(s.particular.begin(), s.particular.end(), [](const Rational& x) { return x > 0; });
}

long factorial_l(long n)
{
    return n <= 1 ? 1 : n * factorial_l(n - 1);
}

} // namespace

TEST_CASE("binomials and factorials")
{
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(5, 0) == 1);
    CHECK(binomial(5, 6) == 0);
    CHECK(binomial(3, -1) == 0);
    CHECK(factorial(0) == 1);
    CHECK(factorial(10) == 3628800);
}

TEST_CASE("Stirling numbers of the second kind")
{
    CHECK(stirling2(4, 2) == 7);
    CHECK(brute_stirling2(4, 2) == 7);
    CHECK(surjections(3, 3) == 6);
    for (std::size_t m = 1; m <= 8; ++m) {
        CHECK(stirling2(m, m) == 1);
        CHECK(stirling2(m, 0) == 0);
    }
    CHECK(stirling2(0, 0) == 1);
    for (int m = 0; m <= 8; ++m)
        for (int n = 0; n <= 8; ++n)
            CHECK(stirling2(m, n) == brute_stirling2(m, n));
}

TEST_CASE("surjection counts agree three ways")
{
    for (std::size_t m = 1; m <= 8; ++m)
        for (std::size_t n = 1; n <= m; ++n) {
            const Integer viaS = factorial(static_cast<long>(n)) * stirling2(m, n);
            CHECK(surjections(m, n) == viaS);
            CHECK(surjections_inclusion_exclusion(m, n) == viaS);
            CHECK(sigma(m, n) == (Integer(1) << m) * viaS);
        }
}

TEST_CASE("sigma against brute force")
{
    CHECK(sigma(2, 2) == 8);
    CHECK(sigma(3, 3) == 48);
    CHECK(sigma(2, 3) == 0);
    for (int m = 1; m <= 4; ++m)
        for (int n = 1; n <= 4; ++n)
            CHECK(sigma(m, n) == brute_sigma(m, n));
}

TEST_CASE("V(n) against an independent enumeration")
{
    CHECK(enumerate_V(1).size() == 2);
    CHECK(enumerate_V(2).empty());
    // all 8^4 ordered tuples of cube vertices in dimension 3
    const auto verts = cube_vertices(3);
    std::size_t brute = 0;
    for (const auto& a : verts)
        for (const auto& b : verts)
            for (const auto& c : verts)
                for (const auto& d : verts)
                    brute += origin_inside_by_solve({a, b, c, d});
    CHECK(brute == 48);
    CHECK(enumerate_V(3).size() == brute);

    // dimension 4 through unordered 5-subsets, each giving 5! orderings
    const auto v4 = cube_vertices(4);
    std::size_t subsets = 0;
    std::vector<bool> pick(16, false);
    std::fill(pick.begin(), pick.begin() + 5, true);
    do {
        std::vector<QVector> pts;
        for (std::size_t i = 0; i < 16; ++i)
            if (pick[i])
                pts.push_back(v4[i]);
        subsets += origin_inside_by_solve(pts);
    } while (std::prev_permutation(pick.begin(), pick.end()));
    CHECK(subsets * 120 == 1920);
    CHECK(enumerate_V(4).size() == 1920);

    CHECK_THROWS_AS(enumerate_V(kMaxTupleDimension + 1), std::length_error);
}

TEST_CASE("V(n) tuples are sorted, distinct and valid")
{
    const auto v = enumerate_V(3);
    CHECK(std::is_sorted(v.begin(), v.end()));
    CHECK(std::adjacent_find(v.begin(), v.end()) == v.end());
    for (const auto& t : v)
        CHECK(origin_strictly_inside(t));
    CHECK_FALSE(origin_strictly_inside({{1, 1, 1}, {1, 1, 1}, {-1, -1, -1}, {1, -1, 1}}));

    const auto rooted = enumerate_V(4, true);
    CHECK(rooted.size() * 16 == 1920);
    for (const auto& t : rooted)
        CHECK(t.front() == LatticePoint{-1, -1, -1, -1});
}

TEST_CASE("beta values")
{
    CHECK(beta(1).orbits == 1);
    CHECK(beta(2).orbits == 0);
    CHECK(beta(3).orbits == 1);
    const auto b4 = beta(4);
    CHECK(b4.orbits == 5);
    CHECK(b4.tuples == 1920);
    CHECK(b4.tuples == Integer(static_cast<long>(b4.orbits)) * (1 << 4) * factorial_l(4));
    CHECK_FALSE(b4.rooted);
}

TEST_CASE("cube to simplex counts")
{
    CHECK(count_box_simplex(2, 2).closed_form == 15);
    CHECK(count_box_simplex(2, 3).closed_form == 28);
    CHECK(count_box_simplex(1, 1).closed_form == 4);
    auto r = count_box_simplex(3, 3);
    CHECK(r.closed_form == 40);
    r.set_enumerated(40);
    CHECK(r.agreement == true);
    r.set_enumerated(39);
    CHECK(r.agreement == false);
}

TEST_CASE("crosspolytope to simplex counts")
{
    const auto r22 = count_diamond_simplex(2, 2);
    CHECK(r22.closed_form == 15);
    Integer sum = 0;
    for (const auto& [label, v] : r22.terms)
        sum += v;
    CHECK(sum == r22.closed_form);
    CHECK(count_diamond_simplex(3, 2).closed_form == 27);
    CHECK(count_diamond_simplex(2, 3).closed_form == 28);
    CHECK(count_diamond_simplex(3, 3).closed_form == 100);
    // 1 + 3 + 48 + 48, spelled out
    CHECK(count_diamond_simplex(3, 3).closed_form == 1 + 3 + 4 * 3 * 4 + sigma(3, 3));
    CHECK_THROWS_AS(count_diamond_simplex(4, 4), std::invalid_argument);
    CHECK(count_diamond_simplex(4, 4, {{4, 1920}}).closed_form > 1920);
}

TEST_CASE("crosspolytope to crosspolytope counts")
{
    CHECK(count_diamond_diamond(2, 2).closed_form == 36);
    CHECK(count_diamond_diamond(2, 3).closed_form == 90);
    CHECK(count_diamond_diamond(3, 2).closed_form == 100);
    CHECK(count_diamond_diamond(3, 3).closed_form == 318);
    CHECK(count_diamond_diamond(3, 3).closed_form == 8 * 27 + 6 + 16 * 3 * 2);
}

TEST_CASE("cube to crosspolytope lower bound")
{
    // the displayed formula evaluates to 4 + 24 + 8
    CHECK(bound_box_diamond(2, 2) == 36);
    CHECK(bound_box_diamond(3, 4) == 8 + 168 + 144);
    CHECK(bound_box_diamond(3, 4) != kStatedBoxDiamondBound34);
    CHECK(bound_box_diamond(3, 4) <= 27968);
}

TEST_CASE("intersection bound")
{
    CHECK(intersection_bound(3) == 56);
    CHECK(intersection_bound(4) == 210);
    CHECK(intersection_bound(10) == 646646);
}

TEST_CASE("rank sandwich")
{
    CHECK(rank_lower_bound(3, 3, 1) == 48);
    CHECK(rank_lower_bound(4, 3, 1) == sigma(4, 3));
    CHECK(rank_upper_bound(3, 3, 1) == 8 * 6 * 1);
    CHECK(rank_upper_bound(4, 3, 1) == 8 * 24 * 56);
}
