#include "hompoly/counts.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace hompoly {

namespace {

Integer power(const Integer& base, std::size_t e)
{
    Integer out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), e);
    return out;
}

// Sign of the Bareiss determinant on small integer matrices, in 128-bit.
int small_det_sign(std::vector<std::vector<__int128>>& a)
{
    const std::size_t n = a.size();
    __int128 prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        while (piv < n && a[piv][k] == 0)
            ++piv;
        if (piv == n)
            return 0;
        if (piv != k) {
            std::swap(a[piv], a[k]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    const __int128 d = a[n - 1][n - 1];
    return sign * ((d > 0) - (d < 0));
}

std::vector<LatticePoint> cube_vertices(std::size_t n)
{
    std::vector<LatticePoint> out;
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
        LatticePoint v(n);
        for (std::size_t i = 0; i < n; ++i)
            v[i] = (mask >> (n - 1 - i)) & 1 ? 1 : -1;
        out.push_back(std::move(v));
    }
    return out;
}

void require_pair(std::size_t m, std::size_t n, std::size_t lo, const char* what)
{
    if (m < lo || n < lo)
        throw std::invalid_argument(std::string(what) + ": parameters below " + std::to_string(lo));
}

Integer table_entry(const HighRankTable& table, std::size_t k)
{
    const auto it = table.find(k);
    if (it == table.end())
        throw std::invalid_argument("high-rank table is missing the rank " + std::to_string(k) + " entry");
    return it->second;
}

} // namespace

Integer binomial(long n, long k)
{
    if (n < 0 || k < 0 || k > n)
        return 0;
    Integer out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return out;
}

Integer factorial(long n)
{
    if (n < 0)
        throw std::invalid_argument("factorial of a negative number");
    Integer out;
    mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
    return out;
}

Integer stirling2(std::size_t m, std::size_t n)
{
    // row[j] = S(i, j) after processing i.
    std::vector<Integer> row(n + 1, 0);
    row[0] = 1;
    for (std::size_t i = 1; i <= m; ++i) {
        for (std::size_t j = std::min(i, n); j >= 1; --j)
            row[j] = Integer(static_cast<unsigned long>(j)) * row[j] + row[j - 1];
        row[0] = 0;
    }
    return row[n];
}

Integer surjections(std::size_t m, std::size_t n)
{
    return factorial(static_cast<long>(n)) * stirling2(m, n);
}

Integer surjections_inclusion_exclusion(std::size_t m, std::size_t n)
{
    Integer total = 0;
    for (std::size_t j = 0; j <= n; ++j) {
        const Integer term = binomial(static_cast<long>(n), static_cast<long>(j)) * power(Integer(static_cast<unsigned long>(j)), m);
        if ((n - j) % 2 == 0)
            total += term;
        else
            total -= term;
    }
    return total;
}

Integer sigma(std::size_t m, std::size_t n)
{
    return power(2, m) * surjections(m, n);
}

bool origin_strictly_inside(const VertexTuple& t)
{
    if (t.empty())
        return false;
    const std::size_t n = t.size() - 1;
    for (const auto& p : t)
        if (p.size() != n)
            throw std::invalid_argument("origin_strictly_inside: need n+1 points in R^n");

    // Columns (t_i, 1); barycentric coordinates of 0 are the Cramer ratios
    // det(M with column i replaced by e_{n+1}) / det(M).
    const auto build = [&](std::size_t replaced) {
        std::vector<std::vector<__int128>> a(n + 1, std::vector<__int128>(n + 1));
        for (std::size_t c = 0; c <= n; ++c) {
            for (std::size_t r = 0; r < n; ++r)
                a[r][c] = c == replaced ? 0 : t[c][r];
            a[n][c] = 1;
        }
        return a;
    };
    auto full = build(n + 1);
    const int s = small_det_sign(full);
    if (s == 0)
        return false;
    for (std::size_t i = 0; i <= n; ++i) {
        auto a = build(i);
        if (small_det_sign(a) != s)
            return false;
    }
    return true;
}

std::vector<VertexTuple> enumerate_V(std::size_t n, bool rooted)
{
    if (n == 0)
        throw std::invalid_argument("enumerate_V: n must be positive");
    if (n > kMaxTupleDimension)
        throw std::length_error("enumerate_V: n above 5 is not supported");

    const auto verts = cube_vertices(n);
    const std::size_t k = n + 1;
    std::vector<VertexTuple> out;

    // Unordered vertex sets first; a valid set yields (n+1)! ordered tuples.
    std::vector<std::size_t> pick(k);
    std::iota(pick.begin(), pick.end(), 0);
    while (true) {
        if (!rooted || pick[0] == 0) {
            VertexTuple t;
            for (auto i : pick)
                t.push_back(verts[i]);
            if (origin_strictly_inside(t)) {
                std::vector<std::size_t> order(pick);
                do {
                    if (rooted && order[0] != 0)
                        break;
                    VertexTuple ordered;
                    for (auto i : order)
                        ordered.push_back(verts[i]);
                    out.push_back(std::move(ordered));
                } while (std::next_permutation(order.begin(), order.end()));
            }
        }
        std::size_t i = k;
        while (i > 0 && pick[i - 1] == verts.size() - k + (i - 1))
            --i;
        if (i == 0)
            break;
        ++pick[i - 1];
        for (std::size_t j = i; j < k; ++j)
            pick[j] = pick[j - 1] + 1;
    }
    std::sort(out.begin(), out.end());
    return out;
}

BetaResult beta(std::size_t n)
{
    BetaResult res;
    res.n = n;
    res.rooted = n == kMaxTupleDimension;
    const auto tuples = enumerate_V(n, res.rooted);
    const auto group = enumerate_group(n);
    const Integer order = static_cast<unsigned long>(group.size());

    OrbitCount oc;
    if (res.rooted) {
        const auto stab = stabilizer(group, LatticePoint(n, -1));
        oc = orbit_count(tuples, stab);
        res.tuples = power(2, n) * Integer(static_cast<unsigned long>(tuples.size()));
    } else {
        oc = orbit_count(tuples, group);
        res.tuples = static_cast<unsigned long>(tuples.size());
    }
    res.orbits = oc.orbits;
    if (!oc.free || Integer(static_cast<unsigned long>(oc.orbits)) * order != res.tuples)
        throw std::logic_error("beta: the hyperoctahedral action on V(" + std::to_string(n) + ") is not free");
    return res;
}

void CountReport::set_enumerated(const Integer& count)
{
    enumerated = count;
    agreement = count == closed_form;
}

CountReport count_box_simplex(std::size_t m, std::size_t n)
{
    require_pair(m, n, 1, "count_box_simplex");
    CountReport r{"box-simplex", m, n, 0, {}, {}, {}};
    const Integer mm = static_cast<unsigned long>(m), nn = static_cast<unsigned long>(n);
    r.terms.emplace_back("rank 0", nn + 1);
    r.terms.emplace_back("rank 1", (nn + 1) * mm * nn);
    r.closed_form = (nn + 1) * (mm * nn + 1);
    return r;
}

CountReport count_diamond_simplex(std::size_t m, std::size_t n, const HighRankTable& table)
{
    require_pair(m, n, 1, "count_diamond_simplex");
    CountReport r{"diamond-simplex", m, n, 0, {}, {}, {}};
    // sum_k C(n+1, k+1) #vert^(k)(crosspolytope_m, simplex_k)
    for (std::size_t k = 0; k <= std::min(m, n); ++k) {
        Integer per_face;
        switch (k) {
        case 0: per_face = 1; break;
        case 1: per_face = power(2, m); break;
        case 2: per_face = 0; break;
        case 3: per_face = sigma(m, 3); break;
        default: per_face = table_entry(table, k); break;
        }
        const Integer term = binomial(static_cast<long>(n + 1), static_cast<long>(k + 1)) * per_face;
        r.terms.emplace_back("rank " + std::to_string(k), term);
        r.closed_form += term;
    }
    return r;
}

CountReport count_diamond_diamond(std::size_t m, std::size_t n, const HighRankTable& table)
{
    require_pair(m, n, 2, "count_diamond_diamond");
    CountReport r{"diamond-diamond", m, n, 0, {}, {}, {}};
    const Integer interior = power(2, m) * power(Integer(static_cast<unsigned long>(n)), m);
    r.terms.emplace_back("center interior", interior);
    r.closed_form = interior;
    // A k-face of the target contributes #vert^(k)(crosspolytope_m, simplex_k);
    // there are 2^(k+1) C(n, k+1) of them.
    for (std::size_t k = 0; k <= std::min(m, n - 1); ++k) {
        Integer per_face;
        switch (k) {
        case 0: per_face = 1; break;
        case 1: per_face = power(2, m); break;
        case 2: per_face = 0; break;
        case 3: per_face = sigma(m, 3); break;
        default: per_face = table_entry(table, k); break;
        }
        const Integer term = power(2, k + 1) * binomial(static_cast<long>(n), static_cast<long>(k + 1)) * per_face;
        r.terms.emplace_back("center on " + std::to_string(k) + "-face", term);
        r.closed_form += term;
    }
    return r;
}

Integer bound_box_diamond(std::size_t m, std::size_t n)
{
    require_pair(m, n, 2, "bound_box_diamond");
    const Integer mm = static_cast<unsigned long>(m), nn = static_cast<unsigned long>(n);
    return 2 * nn + 2 * mm * nn * (2 * nn - 1) + 2 * mm * nn * (mm - 1) * (nn - 1);
}

CountReport count_box_diamond_bound(std::size_t m, std::size_t n)
{
    CountReport r{"box-diamond", m, n, bound_box_diamond(m, n), {}, {}, {}};
    const Integer mm = static_cast<unsigned long>(m), nn = static_cast<unsigned long>(n);
    r.terms.emplace_back("rank 0", 2 * nn);
    r.terms.emplace_back("rank 1", 2 * mm * nn * (2 * nn - 1));
    r.terms.emplace_back("rank 2 (lower)", 2 * mm * nn * (mm - 1) * (nn - 1));
    return r;
}

Integer intersection_bound(std::size_t n)
{
    if (n == 0)
        throw std::invalid_argument("intersection_bound: n must be positive");
    return binomial(static_cast<long>(2 * n + 2), static_cast<long>(n + 2));
}

Integer rank_lower_bound(std::size_t m, std::size_t k, const Integer& beta_k)
{
    return sigma(m, k) * beta_k;
}

Integer rank_upper_bound(std::size_t m, std::size_t k, const Integer& beta_k)
{
    if (k > m)
        throw std::invalid_argument("rank_upper_bound: need k <= m");
    const Integer falling = factorial(static_cast<long>(m)) / factorial(static_cast<long>(m - k));
    return power(2, k) * falling * power(intersection_bound(k), m - k) * beta_k;
}

} // namespace hompoly
