#include <doctest.h>

#include <algorithm>
#include <set>

#include "hompoly/hom.hpp"

using namespace hompoly;

namespace {

constexpr auto S = StandardKind::simplex;
constexpr auto C = StandardKind::cube;
constexpr auto X = StandardKind::crosspolytope;

HomPolytope hom_of(StandardKind p, std::size_t m, StandardKind q, std::size_t n)
{
    return build_hom(standard(p, m), standard(q, n));
}

std::vector<AffineMapRep> maps_of(StandardKind p, std::size_t m, StandardKind q, std::size_t n)
{
    return enumerate_vertex_maps(hom_of(p, m, q, n));
}

std::set<QVector> images(const AffineMapRep& f, const Polytope& p)
{
    std::set<QVector> out;
    for (const auto& v : p.vertices())
        out.insert(f.evaluate(v));
    return out;
}

std::size_t affine_dim(const std::set<QVector>& pts)
{
    if (pts.empty())
        return 0;
    return affine_hull({pts.begin(), pts.end()}).dim();
}

// Barycentric coordinate j of x in the standard simplex (j = 0 is 1 - sum x).
Rational barycentric(const QVector& x, std::size_t j)
{
    if (j > 0)
        return x[j - 1];
    Rational s = 1;
    for (const auto& c : x)
        s -= c;
    return s;
}

// The minimal face G of the simplex holding f(P) has dim f(P) = dim G,
// and each facet of G meets f(P) in dimension dim G - 1.
bool obeys_face_law(const AffineMapRep& f, const Polytope& p)
{
    const auto pts = images(f, p);
    const std::size_t n = f.target_dim();
    std::vector<std::size_t> support;
    for (std::size_t j = 0; j <= n; ++j)
        if (std::any_of(pts.begin(), pts.end(), [&](const QVector& x) { return barycentric(x, j) > 0; }))
            support.push_back(j);
    const std::size_t dim_g = support.size() - 1;
    if (affine_dim(pts) != dim_g)
        return false;
    if (dim_g == 0)
        return true;
    for (auto j : support) {
        std::set<QVector> on_facet;
        for (const auto& x : pts)
            if (barycentric(x, j) == 0)
                on_facet.insert(x);
        if (on_facet.empty() || affine_dim(on_facet) != dim_g - 1)
            return false;
    }
    return true;
}

} // namespace

TEST_CASE("flattening order")
{
    AffineMapRep f{QMatrix::from_rows({{1, 2, 3}, {4, 5, 6}}, 3), {7, 8}};
    CHECK(f.flatten() == QVector{7, 8, 1, 2, 3, 4, 5, 6});
    CHECK(AffineMapRep::unflatten(f.flatten(), 3, 2) == f);
    CHECK(f.evaluate({1, 0, 0}) == QVector{8, 12});
    CHECK_THROWS(AffineMapRep::unflatten({1, 2}, 3, 2));
}

TEST_CASE("inequality counts and dimension")
{
    const auto h = hom_of(C, 2, S, 2);
    CHECK(h.hrep.inequalities.size() == 12);
    CHECK(h.ambient_dim() == 6);
    CHECK(hom_of(S, 1, S, 1).hrep.inequalities.size() == 4);
    CHECK(hom_of(X, 3, S, 3).hrep.inequalities.size() == 24);
    CHECK(hom_of(X, 3, S, 3).ambient_dim() == 12);

    const auto square = Polytope::from_hrep(2, hom_of(S, 1, S, 1).hrep);
    CHECK(square.vertices().size() == 4);
    CHECK(square.dim() == 2);

    for (auto p : {S, C, X})
        for (auto q : {S, C, X})
            for (std::size_t m = 1; m <= 2; ++m)
                for (std::size_t n = 1; n <= 2; ++n) {
                    const auto hom = hom_of(p, m, q, n);
                    CHECK(Polytope::from_hrep(hom.ambient_dim(), hom.hrep).dim() == static_cast<int>(m * n + n));
                }

    CHECK_THROWS_AS(build_hom(Polytope::from_points(2, {{0, 0}, {1, 1}}), standard(S, 1)), std::invalid_argument);
    CHECK_THROWS_AS(build_hom(standard(S, 1), Polytope::from_points(2, {{0, 0}, {1, 1}})), std::invalid_argument);
}

TEST_CASE("every facet is of vertex-facet form")
{
    const auto hom = hom_of(X, 2, X, 2);
    for (std::size_t r = 0; r < hom.hrep.inequalities.size(); ++r) {
        const auto [v, f] = hom.pair_of(r);
        CHECK(v < hom.source.vertices().size());
        CHECK(f < hom.target.facets().size());
    }
    // compare rows up to positive scaling
    const auto key = [](const Inequality& h) {
        QVector v = h.normal;
        v.push_back(h.offset);
        return primitive_integer(v);
    };
    std::set<std::vector<Integer>> rows;
    for (const auto& h : hom.hrep.inequalities)
        rows.insert(key(h));
    const auto poly = Polytope::from_hrep(hom.ambient_dim(), hom.hrep);
    CHECK(poly.facets().size() == 16);
    for (const auto& facet : poly.facets())
        CHECK(rows.count(key(facet)) == 1);
}

TEST_CASE("enumerated vertex maps")
{
    CHECK(maps_of(C, 2, S, 2).size() == 15);
    CHECK(maps_of(X, 2, X, 2).size() == 36);
    CHECK(maps_of(S, 1, S, 2).size() == 9);
    for (const auto& f : maps_of(C, 2, S, 2))
        CHECK(is_vertex_map(f, standard(C, 2), standard(S, 2)));
}

TEST_CASE("vertex certificates")
{
    const auto c2 = standard(C, 2);
    const auto t2 = standard(S, 2);
    for (const auto& w : t2.vertices())
        CHECK(is_vertex_map(AffineMapRep::constant(w, 2), c2, t2));
    const AffineMapRep id{QMatrix::identity(2), {0, 0}};
    CHECK(is_vertex_map(id, c2, c2));
    const QVector bary{Rational(1, 3), Rational(1, 3)};
    CHECK_FALSE(is_vertex_map(AffineMapRep::constant(bary, 2), c2, t2));
    CHECK_THROWS_AS(is_vertex_map(id, c2, t2), std::invalid_argument);
}

TEST_CASE("ranks")
{
    CHECK(map_rank(AffineMapRep::constant({1, 2}, 3)) == 0);
    CHECK(map_rank(AffineMapRep{QMatrix::identity(3), {0, 0, 0}}) == 3);
    // x -> e_1 (1 + x_1)/2 sends the facet x_1 = 1 to e_1 and x_1 = -1 to 0
    AffineMapRep proj{QMatrix(2, 2), {Rational(1, 2), 0}};
    proj.A(0, 0) = Rational(1, 2);
    CHECK(map_rank(proj) == 1);
    CHECK(is_vertex_map(proj, standard(C, 2), standard(S, 2)));

    CHECK(rank_histogram(maps_of(C, 2, S, 2)) == std::map<std::size_t, std::size_t>{{0, 3}, {1, 12}});
    CHECK(rank_histogram(maps_of(X, 2, S, 2)) == std::map<std::size_t, std::size_t>{{0, 3}, {1, 12}});
    CHECK(rank_histogram(maps_of(S, 1, S, 1)) == std::map<std::size_t, std::size_t>{{0, 2}, {1, 2}});
}

TEST_CASE("constant maps onto target vertices are always vertices")
{
    for (auto p : {S, C, X})
        for (auto q : {S, C, X}) {
            const auto maps = maps_of(p, 2, q, 2);
            const auto target = standard(q, 2);
            for (const auto& w : target.vertices())
                CHECK(std::find(maps.begin(), maps.end(), AffineMapRep::constant(w, 2)) != maps.end());
        }
}

TEST_CASE("cube to simplex maps have rank at most one and factor through a facet pair")
{
    for (std::size_t m = 1; m <= 3; ++m)
        for (std::size_t n = 1; n <= 3; ++n) {
            const auto cube = standard(C, m);
            for (const auto& f : maps_of(C, m, S, n)) {
                const std::size_t r = map_rank(f);
                CHECK(r <= 1);
                if (r != 1)
                    continue;
                const auto pts = images(f, cube);
                CHECK(pts.size() == 2);
                // some coordinate k alone decides the image of a vertex
                bool factors = false;
                for (std::size_t k = 0; k < m && !factors; ++k) {
                    std::set<QVector> plus, minus;
                    for (const auto& v : cube.vertices())
                        (v[k] == 1 ? plus : minus).insert(f.evaluate(v));
                    factors = plus.size() == 1 && minus.size() == 1;
                }
                CHECK(factors);
            }
        }
}

TEST_CASE("center theorem on crosspolytopes")
{
    for (std::size_t m = 1; m <= 3; ++m)
        for (std::size_t n = 1; n <= 3; ++n) {
            const auto target = standard(X, n);
            const auto source = standard(X, m);
            const std::set<QVector> tv(target.vertices().begin(), target.vertices().end());
            for (const auto& f : maps_of(X, m, X, n)) {
                if (!contains_interior(target, eval_center(f)))
                    continue;
                CHECK(is_zero(f.b));
                for (std::size_t i = 0; i < m; ++i) {
                    QVector e(m, 0);
                    e[i] = 1;
                    const QVector fe = f.evaluate(e);
                    CHECK(tv.count(fe) == 1);
                    CHECK(f.evaluate(scale(-1, e)) == scale(-1, fe));
                }
            }
        }
}

TEST_CASE("vertex-image law for crosspolytope sources")
{
    for (auto q : {S, C, X})
        for (std::size_t m = 1; m <= 3; ++m)
            for (std::size_t n = 1; n <= 2; ++n) {
                const auto source = standard(X, m);
                const auto target = standard(q, n);
                for (const auto& f : maps_of(X, m, q, n)) {
                    const auto pts = images(f, source);
                    const auto img = image_polytope(f, source);
                    CHECK(std::set<QVector>(img.vertices().begin(), img.vertices().end()) == pts);
                    const auto sym = intersect(target, translate(negate(target), scale(2, f.b)));
                    const std::set<QVector> sv(sym.vertices().begin(), sym.vertices().end());
                    for (const auto& x : pts)
                        CHECK(sv.count(x) == 1);
                }
            }
}

TEST_CASE("no rank-two crosspolytope to simplex vertex maps")
{
    for (std::size_t m = 2; m <= 3; ++m)
        for (std::size_t n = 2; n <= 3; ++n)
            CHECK(rank_histogram(maps_of(X, m, S, n)).count(2) == 0);
}

TEST_CASE("face law into simplices")
{
    for (auto p : {S, C, X})
        for (std::size_t m = 1; m <= 3; ++m)
            for (std::size_t n = 1; n <= 3; ++n) {
                if (m * n > 6)
                    continue;
                const auto source = standard(p, m);
                for (const auto& f : maps_of(p, m, S, n))
                    CHECK(obeys_face_law(f, source));
            }
}

TEST_CASE("product isomorphism counts")
{
    CHECK(maps_of(S, 2, S, 2).size() == 27);
    CHECK(maps_of(S, 1, C, 2).size() == 16);
    CHECK(maps_of(S, 2, X, 2).size() == 64);
    for (std::size_t m = 1; m <= 3; ++m)
        for (std::size_t n = 1; n <= 2; ++n) {
            std::size_t a = 1, b = 1;
            for (std::size_t i = 0; i < n; ++i) {
                a *= (std::size_t{1} << m) + 2;
                b *= 2 * (m + 1);
            }
            CHECK(maps_of(X, m, C, n).size() == a);
            CHECK(maps_of(C, m, C, n).size() == b);
        }
}

TEST_CASE("images and centers")
{
    const auto x3 = standard(X, 3);
    CHECK(image_polytope(AffineMapRep::constant({1, 0, 0}, 3), x3).vertices().size() == 1);
    const AffineMapRep id{QMatrix::identity(3), {0, 0, 0}};
    CHECK(is_zero(eval_center(id)));
    CHECK(combinatorially_equal(image_polytope(id, x3), x3));
}

TEST_CASE("restriction to sub-crosspolytopes")
{
    const AffineMapRep id{QMatrix::identity(3), {0, 0, 0}};
    CHECK(restrict_to_subcrosspolytope(id, {0, 1, 2}) == id);
    const auto incl = restrict_to_subcrosspolytope(id, {0, 1});
    CHECK(incl.source_dim() == 2);
    CHECK(incl.evaluate({1, 0}) == QVector{1, 0, 0});
    CHECK(incl.evaluate({0, -1}) == QVector{0, -1, 0});
    CHECK(is_vertex_map(incl, standard(X, 2), standard(X, 3)));
    CHECK_THROWS(restrict_to_subcrosspolytope(id, {}));
    CHECK_THROWS(restrict_to_subcrosspolytope(id, {3}));
}

TEST_CASE("explicit realization of cube to simplex")
{
    const auto p11 = bt_realization(1, 1);
    CHECK(std::set<QVector>(p11.begin(), p11.end()) == std::set<QVector>{{0, 0}, {2, 0}, {1, 1}, {1, -1}});
    for (std::size_t m = 1; m <= 3; ++m)
        for (std::size_t n = 1; n <= 3; ++n) {
            const auto pts = bt_realization(m, n);
            CHECK(pts.size() == (n + 1) * (m * n + 1));
            CHECK(affine_hull(pts).dim() == m * n + n);
            CHECK(Polytope::from_points(m * n + n, pts).vertices().size() == pts.size());
        }
    CHECK_THROWS(bt_realization(0, 1));
}
