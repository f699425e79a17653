#include "hompoly/experiments.hpp"

#include <stdexcept>
#include <string>

#include "hompoly/counts.hpp"
#include "hompoly/parallel.hpp"

namespace hompoly {

namespace {

constexpr std::uint64_t kHalfRange = std::uint64_t{1} << 20;

std::size_t require_dim(std::size_t n, const char* what)
{
    if (n < 2)
        throw std::invalid_argument(std::string(what) + ": n must be at least 2");
    return n;
}

} // namespace

Rational SeededGenerator::draw()
{
    const std::uint64_t x = (advance() >> 11) % (2 * kHalfRange + 1);
    return Rational(static_cast<long>(x) - static_cast<long>(kHalfRange), static_cast<long>(kHalfRange));
}

QVector SeededGenerator::draw_vector(std::size_t dim)
{
    QVector v;
    v.reserve(dim);
    for (std::size_t i = 0; i < dim; ++i)
        v.push_back(draw());
    return v;
}

Polytope symmetric_intersection(std::size_t n, const QVector& z)
{
    const Polytope simplex = standard(StandardKind::simplex, n);
    return intersect(simplex, translate(negate(simplex), scale(Rational(2), z)));
}

PerturbedCount perturbed_barycenter(std::size_t n, std::uint64_t seed, const Rational& eps)
{
    require_dim(n, "perturbed_barycenter");
    if (eps < Rational(0))
        throw std::invalid_argument("perturbed_barycenter: eps must be non-negative");
    SeededGenerator gen(seed);
    const QVector barycenter(n, Rational(1, static_cast<long>(n + 1)));
    PerturbedCount out;
    while (out.draws < kMaxRedraws) {
        ++out.draws;
        out.center = add(barycenter, scale(eps, gen.draw_vector(n)));
        const Polytope p = symmetric_intersection(n, out.center);
        if (p.dim() == static_cast<int>(n)) {
            out.count = p.vertices().size();
            return out;
        }
    }
    throw std::runtime_error("perturbed_barycenter: no full-dimensional intersection after " +
                             std::to_string(kMaxRedraws) + " draws");
}

std::size_t perturbed_barycenter_count(std::size_t n, std::uint64_t seed, const Rational& eps)
{
    return perturbed_barycenter(n, seed, eps).count;
}

std::size_t random_simplex_intersection_count(std::size_t n, std::uint64_t seed)
{
    require_dim(n, "random_simplex_intersection_count");
    SeededGenerator gen(seed);
    for (std::size_t attempt = 0; attempt < kMaxRedraws; ++attempt) {
        std::vector<QVector> a, b;
        for (std::size_t i = 0; i <= n; ++i)
            a.push_back(gen.draw_vector(n));
        for (std::size_t i = 0; i <= n; ++i)
            b.push_back(gen.draw_vector(n));
        if (affine_hull(a).dim() != n || affine_hull(b).dim() != n)
            continue;
        const Polytope pa = Polytope::from_vertices(n, std::move(a));
        const Polytope pb = Polytope::from_vertices(n, std::move(b));
        return intersect(pa, pb).vertices().size();
    }
    throw std::runtime_error("random_simplex_intersection_count: degenerate simplices on every draw");
}

std::vector<TableRow> reproduce_table(std::size_t n_min, std::size_t n_max, std::uint64_t seed, const Rational& eps,
                                      std::size_t threads)
{
    if (n_min < 3 || n_min > n_max)
        throw std::invalid_argument("reproduce_table: need 3 <= n_min <= n_max");
    if (n_max > kMaxTableDimension)
        throw std::length_error("reproduce_table: n_max above 8 is not supported");

    std::vector<TableRow> rows(n_max - n_min + 1);
    parallel_for(rows.size(), threads, [&](std::size_t i) {
        TableRow& row = rows[i];
        row.n = n_min + i;
        const std::uint64_t row_seed = seed + row.n;
        row.perturbed = perturbed_barycenter_count(row.n, row_seed, eps);
        row.random = random_simplex_intersection_count(row.n, row_seed);
        row.bound = intersection_bound(row.n);
        row.percentage = 100.0 * static_cast<double>(row.perturbed) / row.bound.get_d();
    });
    return rows;
}

} // namespace hompoly
