#include "hompoly/double_description.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <type_traits>

#include "hompoly/linalg.hpp"

namespace hompoly::dd {

namespace {

struct Overflow
{
};

// 64-bit storage with 128-bit intermediates; narrowing checks range.
struct SmallNum
{
    using T = std::int64_t;
    using W = __int128;

    static W widen(T x) { return x; }
    static T narrow(W x)
    {
        if (x > std::numeric_limits<T>::max() || x < std::numeric_limits<T>::min())
            throw Overflow{};
        return static_cast<T>(x);
    }
    static int sign(T x) { return (x > 0) - (x < 0); }
    static W gcd(W a, W b)
    {
        unsigned __int128 x = a < 0 ? -static_cast<unsigned __int128>(a) : a;
        unsigned __int128 y = b < 0 ? -static_cast<unsigned __int128>(b) : b;
        while (y != 0) {
            const auto t = x % y;
            x = y;
            y = t;
        }
        return static_cast<W>(x);
    }
    static W mul(T a, T b)
    {
        return static_cast<W>(a) * b;
    }
    // a*x + b*y must stay inside 128 bits: each product is below 2^126.
    static W combine(T a, T x, T b, T y) { return mul(a, x) + mul(b, y); }
    static void add_mul(W& acc, T a, T b)
    {
        const W p = mul(a, b);
        if ((p > 0 && acc > std::numeric_limits<W>::max() - p) || (p < 0 && acc < std::numeric_limits<W>::min() - p))
            throw Overflow{};
        acc += p;
    }
    static T from_integer(const Integer& z)
    {
        if (!z.fits_slong_p())
            throw Overflow{};
        return z.get_si();
    }
    static Integer to_integer(T x) { return Integer(static_cast<long>(x)); }
    static T div_exact(W x, W g) { return narrow(x / g); }
};

struct BigNum
{
    using T = Integer;
    using W = Integer;

    static const W& widen(const T& x) { return x; }
    static T narrow(W x) { return x; }
    static int sign(const T& x) { return sgn(x); }
    static W gcd(const W& a, const W& b)
    {
        W g;
        mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
        return g;
    }
    static W combine(const T& a, const T& x, const T& b, const T& y) { return a * x + b * y; }
    static void add_mul(W& acc, const T& a, const T& b) { mpz_addmul(acc.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t()); }
    static T from_integer(const Integer& z) { return z; }
    static Integer to_integer(const T& x) { return x; }
    static T div_exact(const W& x, const W& g)
    {
        T q;
        mpz_divexact(q.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
        return q;
    }
};

template <class Num>
class PointedKernel
{
    using T = typename Num::T;
    using W = typename Num::W;

    // Structure-of-arrays storage for a ray family. Slacks are recomputed
    // from coordinates on demand, which keeps a ray at dim words plus bits.
    struct Rays
    {
        std::size_t size = 0;
        std::vector<T> coord;
        std::vector<std::uint64_t> bits; // zero set on processed rows
    };

public:
    PointedKernel(const IntMatrix& rows, std::size_t dim)
        : dim_(dim), nrows_(rows.size()), words_((rows.size() + 63) / 64), processed_(rows.size(), false)
    {
        rows_.reserve(nrows_ * dim_);
        for (const auto& r : rows)
            for (const auto& x : r)
                rows_.push_back(Num::from_integer(x));
    }

    IntMatrix run(const std::vector<std::size_t>& basis, const QMatrix& basis_inverse)
    {
        init(basis, basis_inverse);
        while (true) {
            const std::size_t next = pick_row();
            if (next == nrows_)
                break;
            insert(next);
            ++stats_.steps;
            stats_.max_rays = std::max(stats_.max_rays, cur_.size);
        }
        IntMatrix out(cur_.size, IntVector(dim_));
        for (std::size_t r = 0; r < cur_.size; ++r)
            for (std::size_t c = 0; c < dim_; ++c)
                out[r][c] = Num::to_integer(cur_.coord[r * dim_ + c]);
        return out;
    }

    const Stats& stats() const { return stats_; }

private:
    const T* row(std::size_t i) const { return rows_.data() + i * dim_; }

    T slack(std::size_t r, std::size_t i) const
    {
        W acc = 0;
        const T* a = row(i);
        const T* z = cur_.coord.data() + r * dim_;
        for (std::size_t c = 0; c < dim_; ++c)
            Num::add_mul(acc, a[c], z[c]);
        return Num::narrow(acc);
    }

    void push_ray(Rays& rays, const std::vector<W>& wide_coord, const std::uint64_t* bits)
    {
        W g = 0;
        for (const auto& x : wide_coord)
            if (x != 0)
                g = Num::gcd(g, x);
        if (g == 0)
            throw std::logic_error("double description produced a zero ray");
        for (const auto& x : wide_coord)
            rays.coord.push_back(Num::div_exact(x, g));
        rays.bits.insert(rays.bits.end(), bits, bits + words_);
        ++rays.size;
    }

    void init(const std::vector<std::size_t>& basis, const QMatrix& inv)
    {
        std::vector<W> wc(dim_);
        std::vector<std::uint64_t> bits(words_);
        for (auto b : basis)
            processed_[b] = true;
        for (std::size_t j = 0; j < dim_; ++j) {
            const auto col = primitive_integer(inv.column(j));
            for (std::size_t c = 0; c < dim_; ++c)
                wc[c] = Num::widen(Num::from_integer(col[c]));
            std::fill(bits.begin(), bits.end(), 0);
            push_ray(cur_, wc, bits.data());
        }
        // Ray j is zero exactly on the basis rows other than the j-th.
        for (std::size_t r = 0; r < cur_.size; ++r)
            for (auto b : basis)
                if (Num::sign(slack(r, b)) == 0)
                    cur_.bits[r * words_ + b / 64] |= std::uint64_t{1} << (b % 64);
    }

    // Unprocessed row cutting off the fewest current rays; nrows_ when done.
    std::size_t pick_row() const
    {
        std::size_t best = nrows_;
        std::size_t best_count = std::numeric_limits<std::size_t>::max();
        for (std::size_t i = 0; i < nrows_; ++i) {
            if (processed_[i])
                continue;
            std::size_t count = 0;
            for (std::size_t r = 0; r < cur_.size && count < best_count; ++r)
                if (Num::sign(slack(r, i)) < 0)
                    ++count;
            if (count < best_count) {
                best = i;
                best_count = count;
                if (count == 0)
                    break;
            }
        }
        return best;
    }

    bool contains(std::size_t r, const std::uint64_t* common) const
    {
        const std::uint64_t* b = cur_.bits.data() + r * words_;
        for (std::size_t w = 0; w < words_; ++w)
            if ((b[w] & common[w]) != common[w])
                return false;
        return true;
    }

    // No third ray is zero on every row where both p and n are zero. Only
    // the rays listed under the rarest common row need to be looked at.
    bool adjacent(std::size_t p, std::size_t n, const std::uint64_t* common, std::size_t& hint) const
    {
        if (hint != p && hint != n && hint < cur_.size && contains(hint, common))
            return false;
        const std::vector<std::uint32_t>* shortest = nullptr;
        for (std::size_t w = 0; w < words_; ++w)
            for (std::uint64_t x = common[w]; x != 0; x &= x - 1) {
                const auto& list = zero_rays_[w * 64 + std::countr_zero(x)];
                if (shortest == nullptr || list.size() < shortest->size())
                    shortest = &list;
            }
        if (shortest == nullptr)
            return cur_.size == 2;
        for (auto r : *shortest) {
            if (r == p || r == n)
                continue;
            if (contains(r, common)) {
                hint = r;
                return false;
            }
        }
        return true;
    }

    void index_zero_sets()
    {
        for (auto& list : zero_rays_)
            list.clear();
        zero_rays_.resize(nrows_);
        for (std::size_t r = 0; r < cur_.size; ++r) {
            const std::uint64_t* b = cur_.bits.data() + r * words_;
            for (std::size_t w = 0; w < words_; ++w)
                for (std::uint64_t x = b[w]; x != 0; x &= x - 1)
                    zero_rays_[w * 64 + std::countr_zero(x)].push_back(static_cast<std::uint32_t>(r));
        }
    }

    void insert(std::size_t a)
    {
        std::vector<std::size_t> pos, zero, neg;
        std::vector<T> sa(cur_.size);
        for (std::size_t r = 0; r < cur_.size; ++r) {
            sa[r] = slack(r, a);
            const int s = Num::sign(sa[r]);
            (s > 0 ? pos : s < 0 ? neg : zero).push_back(r);
        }
        const std::uint64_t abit = std::uint64_t{1} << (a % 64);
        const std::size_t aword = a / 64;

        if (neg.empty()) {
            for (auto r : zero)
                cur_.bits[r * words_ + aword] |= abit;
            processed_[a] = true;
            return;
        }

        Rays next;
        const auto keep = [&](std::size_t r, bool on_row) {
            next.coord.insert(next.coord.end(), cur_.coord.begin() + r * dim_, cur_.coord.begin() + (r + 1) * dim_);
            const auto first = next.bits.size();
            next.bits.insert(next.bits.end(), cur_.bits.begin() + r * words_, cur_.bits.begin() + (r + 1) * words_);
            if (on_row)
                next.bits[first + aword] |= abit;
            ++next.size;
        };
        for (auto r : pos)
            keep(r, false);
        for (auto r : zero)
            keep(r, true);

        index_zero_sets();
        const std::size_t need = dim_ >= 2 ? dim_ - 2 : 0;
        std::vector<std::uint64_t> common(words_);
        std::vector<W> wc(dim_);
        for (auto n : neg) {
            std::size_t hint = cur_.size;
            const std::uint64_t* bn = cur_.bits.data() + n * words_;
            const T& sn = sa[n];
            for (auto p : pos) {
                const std::uint64_t* bp = cur_.bits.data() + p * words_;
                std::size_t count = 0;
                for (std::size_t w = 0; w < words_; ++w) {
                    common[w] = bp[w] & bn[w];
                    count += std::popcount(common[w]);
                }
                if (count < need)
                    continue;
                ++stats_.adjacency_tests;
                if (!adjacent(p, n, common.data(), hint))
                    continue;
                const T& sp = sa[p];
                // sp * z_n - sn * z_p, with sp > 0 and sn < 0.
                if constexpr (std::is_same_v<T, std::int64_t>)
                    if (sn == std::numeric_limits<T>::min())
                        throw Overflow{};
                const T neg_sn = -sn;
                for (std::size_t c = 0; c < dim_; ++c)
                    wc[c] = Num::combine(sp, cur_.coord[n * dim_ + c], neg_sn, cur_.coord[p * dim_ + c]);
                common[aword] |= abit;
                push_ray(next, wc, common.data());
            }
        }
        cur_ = std::move(next);
        processed_[a] = true;
    }

    std::size_t dim_;
    std::size_t nrows_;
    std::size_t words_;
    std::vector<T> rows_;
    std::vector<bool> processed_;
    Rays cur_;
    std::vector<std::vector<std::uint32_t>> zero_rays_; // row -> rays zero on it
    Stats stats_;
};

// First `dim` linearly independent rows in input order.
std::vector<std::size_t> independent_rows(const IntMatrix& rows, std::size_t dim)
{
    std::vector<std::size_t> chosen;
    std::vector<QVector> basis;
    for (std::size_t i = 0; i < rows.size() && chosen.size() < dim; ++i) {
        QVector r(rows[i].begin(), rows[i].end());
        basis.push_back(r);
        if (rank(QMatrix::from_rows(basis, dim)) == basis.size())
            chosen.push_back(i);
        else
            basis.pop_back();
    }
    return chosen;
}

IntMatrix pointed_rays(const IntMatrix& rows, std::size_t dim, Stats& stats)
{
    const auto basis = independent_rows(rows, dim);
    if (basis.size() != dim)
        throw std::logic_error("pointed_rays: constraint rows do not have full rank");
    std::vector<QVector> brows;
    for (auto b : basis)
        brows.emplace_back(rows[b].begin(), rows[b].end());
    const QMatrix bmat = QMatrix::from_rows(brows, dim);
    // Columns of B^{-1} are the rays of the initial simplicial cone.
    QMatrix aug(dim, 2 * dim);
    for (std::size_t r = 0; r < dim; ++r) {
        for (std::size_t c = 0; c < dim; ++c)
            aug(r, c) = bmat(r, c);
        aug(r, dim + r) = 1;
    }
    const QMatrix red = rref(aug);
    QMatrix inv(dim, dim);
    for (std::size_t r = 0; r < dim; ++r)
        for (std::size_t c = 0; c < dim; ++c)
            inv(r, c) = red(r, dim + c);

    try {
        PointedKernel<SmallNum> kernel(rows, dim);
        auto rays = kernel.run(basis, inv);
        stats = kernel.stats();
        return rays;
    } catch (const Overflow&) {
        PointedKernel<BigNum> kernel(rows, dim);
        auto rays = kernel.run(basis, inv);
        stats = kernel.stats();
        stats.bigint = true;
        return rays;
    }
}

IntVector primitive(IntVector v)
{
    Integer g = 0;
    for (const auto& x : v)
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g > 1)
        for (auto& x : v)
            mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
    return v;
}

} // namespace

ConeGenerators cone_generators(const IntMatrix& rows, std::size_t dim)
{
    for (const auto& r : rows)
        if (r.size() != dim)
            throw std::invalid_argument("cone_generators: row length mismatch");

    ConeGenerators out;
    std::vector<QVector> qrows;
    for (const auto& r : rows)
        qrows.emplace_back(r.begin(), r.end());
    const QMatrix m = QMatrix::from_rows(qrows, dim);
    std::vector<std::size_t> pivots;
    const QMatrix span = rref(m, &pivots);
    const std::size_t k = pivots.size();

    for (const auto& v : nullspace(m)) {
        const auto iv = primitive_integer(v);
        out.lineality.push_back(iv);
    }

    if (k == dim) {
        out.rays = pointed_rays(rows, dim, out.stats);
    } else if (k > 0) {
        // Quotient by the lineality space: work in coordinates of the row space.
        IntMatrix basis;
        for (std::size_t i = 0; i < k; ++i)
            basis.push_back(primitive_integer(span.row(i)));
        IntMatrix reduced(rows.size(), IntVector(k));
        for (std::size_t r = 0; r < rows.size(); ++r)
            for (std::size_t i = 0; i < k; ++i)
                for (std::size_t c = 0; c < dim; ++c)
                    reduced[r][i] += rows[r][c] * basis[i][c];
        for (const auto& w : pointed_rays(reduced, k, out.stats)) {
            IntVector z(dim);
            for (std::size_t i = 0; i < k; ++i)
                for (std::size_t c = 0; c < dim; ++c)
                    z[c] += w[i] * basis[i][c];
            out.rays.push_back(primitive(std::move(z)));
        }
    }
    std::sort(out.rays.begin(), out.rays.end());
    return out;
}

} // namespace hompoly::dd
