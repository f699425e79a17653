#include "hompoly/hom.hpp"

#include <stdexcept>

namespace hompoly {

QVector AffineMapRep::evaluate(const QVector& x) const
{
    return add(A * x, b);
}

QVector AffineMapRep::flatten() const
{
    QVector z(b);
    z.reserve(target_dim() * (source_dim() + 1));
    for (std::size_t i = 0; i < target_dim(); ++i)
        for (std::size_t j = 0; j < source_dim(); ++j)
            z.push_back(A(i, j));
    return z;
}

AffineMapRep AffineMapRep::unflatten(const QVector& z, std::size_t m, std::size_t n)
{
    if (z.size() != n + n * m)
        throw std::invalid_argument("unflatten: wrong coordinate count");
    AffineMapRep f{QMatrix(n, m), QVector(z.begin(), z.begin() + static_cast<std::ptrdiff_t>(n))};
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < m; ++j)
            f.A(i, j) = z[n + i * m + j];
    return f;
}

AffineMapRep AffineMapRep::constant(const QVector& value, std::size_t source_dim)
{
    return AffineMapRep{QMatrix(value.size(), source_dim), value};
}

std::pair<std::size_t, std::size_t> HomPolytope::pair_of(std::size_t row) const
{
    const std::size_t nf = target.facets().size();
    return {row / nf, row % nf};
}

HomPolytope build_hom(const Polytope& source, const Polytope& target)
{
    if (!source.is_full_dimensional())
        throw std::invalid_argument("build_hom: source polytope is not full-dimensional");
    if (!target.is_full_dimensional())
        throw std::invalid_argument("build_hom: target polytope is not full-dimensional");

    HomPolytope hom{source, target, {}, {}, {}, source.ambient_dim(), target.ambient_dim()};
    const std::size_t m = hom.m, n = hom.n;
    const auto& verts = source.vertices();
    const auto& facets = target.facets();
    for (const auto& v : verts) {
        for (const auto& f : facets) {
            QVector row(n + n * m, Rational(0));
            for (std::size_t i = 0; i < n; ++i) {
                if (f.normal[i].is_zero())
                    continue;
                row[i] = f.normal[i];
                for (std::size_t j = 0; j < m; ++j)
                    row[n + i * m + j] = f.normal[i] * v[j];
            }
            hom.hrep.inequalities.push_back({std::move(row), f.offset});
        }
    }

    // The constant map onto the vertex barycenter of Q is strictly feasible,
    // so the feasible set has full dimension nm + n.
    QVector center(n, Rational(0));
    for (const auto& w : target.vertices())
        center = add(center, w);
    center = scale(Rational(1) / Rational(static_cast<long>(target.vertices().size())), center);
    const QVector z = AffineMapRep::constant(center, m).flatten();
    for (const auto& row : hom.hrep.inequalities)
        if (dot(row.normal, z) >= row.offset)
            throw std::logic_error("build_hom: feasible set is not full-dimensional");
    return hom;
}

std::vector<AffineMapRep> enumerate_vertex_maps(const HomPolytope& hom)
{
    const VRep verts = hrep_to_vrep(hom.hrep, hom.ambient_dim());
    std::vector<AffineMapRep> maps;
    maps.reserve(verts.size());
    for (const auto& z : verts)
        maps.push_back(AffineMapRep::unflatten(z, hom.m, hom.n));
    return maps;
}

bool is_vertex_map(const AffineMapRep& f, const HomPolytope& hom)
{
    if (f.source_dim() != hom.m || f.target_dim() != hom.n)
        throw std::invalid_argument("is_vertex_map: map has the wrong shape");
    const QVector z = f.flatten();
    std::vector<QVector> active;
    for (const auto& row : hom.hrep.inequalities) {
        const Rational lhs = dot(row.normal, z);
        if (lhs > row.offset)
            throw std::invalid_argument("is_vertex_map: f(P) is not contained in Q");
        if (lhs == row.offset)
            active.push_back(row.normal);
    }
    const std::size_t full = hom.ambient_dim();
    return active.size() >= full && rank(QMatrix::from_rows(active, full)) == full;
}

bool is_vertex_map(const AffineMapRep& f, const Polytope& source, const Polytope& target)
{
    return is_vertex_map(f, build_hom(source, target));
}

std::size_t map_rank(const AffineMapRep& f)
{
    return rank(f.A);
}

std::map<std::size_t, std::size_t> rank_histogram(const std::vector<AffineMapRep>& maps)
{
    std::map<std::size_t, std::size_t> hist;
    for (const auto& f : maps)
        ++hist[map_rank(f)];
    return hist;
}

Polytope image_polytope(const AffineMapRep& f, const Polytope& source)
{
    std::vector<QVector> pts;
    for (const auto& v : source.vertices())
        pts.push_back(f.evaluate(v));
    return Polytope::from_points(f.target_dim(), pts);
}

QVector eval_center(const AffineMapRep& f)
{
    return f.b;
}

AffineMapRep restrict_to_subcrosspolytope(const AffineMapRep& f, const std::vector<std::size_t>& indices)
{
    if (indices.empty())
        throw std::invalid_argument("restrict_to_subcrosspolytope: empty index set");
    AffineMapRep g{QMatrix(f.target_dim(), indices.size()), f.b};
    for (std::size_t c = 0; c < indices.size(); ++c) {
        if (indices[c] >= f.source_dim())
            throw std::invalid_argument("restrict_to_subcrosspolytope: index out of range");
        for (std::size_t r = 0; r < f.target_dim(); ++r)
            g.A(r, c) = f.A(r, indices[c]);
    }
    return g;
}

VRep bt_realization(std::size_t m, std::size_t n)
{
    if (m == 0 || n == 0)
        throw std::invalid_argument("bt_realization needs m, n >= 1");
    const std::size_t d = n + n * m;
    const auto e = [d](std::size_t i) {
        QVector v(d, Rational(0));
        v[i] = 1;
        return v;
    };
    const auto eik = [&](std::size_t i, std::size_t k) { return e(n + i * m + k); };

    VRep pts;
    pts.push_back(QVector(d, Rational(0)));
    for (std::size_t i = 0; i < n; ++i) {
        pts.push_back(scale(Rational(2), e(i)));
        for (std::size_t k = 0; k < m; ++k) {
            pts.push_back(add(e(i), eik(i, k)));
            pts.push_back(sub(e(i), eik(i, k)));
        }
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j)
                continue;
            for (std::size_t k = 0; k < m; ++k)
                pts.push_back(add(add(e(i), e(j)), sub(eik(i, k), eik(j, k))));
        }
    canonical_sort(pts);
    return pts;
}

} // namespace hompoly
