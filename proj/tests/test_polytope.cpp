#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "hompoly/double_description.hpp"
#include "hompoly/hom.hpp"
#include "hompoly/polytope.hpp"

using namespace hompoly;

namespace {

std::set<QVector> vertex_set(const Polytope& p)
{
    return {p.vertices().begin(), p.vertices().end()};
}

Polytope centered_simplex(std::size_t n)
{
    QVector c(n, Rational(Integer(1), Integer(static_cast<long>(n + 1))));
    return translate(standard(StandardKind::simplex, n), scale(-1, c));
}

// Every vertex satisfies the system, and its tight rows have rank dim(P).
void check_basic_certificates(const Polytope& p)
{
    const HRep& h = p.hrep();
    for (const auto& v : p.vertices()) {
        std::vector<QVector> tight;
        for (const auto& e : h.equations) {
            CHECK(dot(e.normal, v) == e.offset);
            tight.push_back(e.normal);
        }
        for (const auto& f : h.inequalities) {
            const Rational lhs = dot(f.normal, v);
            CHECK(lhs <= f.offset);
            if (lhs == f.offset)
                tight.push_back(f.normal);
        }
        CHECK(rank(QMatrix::from_rows(tight, p.ambient_dim())) == p.ambient_dim());
    }
}

std::vector<Polytope> suite()
{
    std::vector<Polytope> out;
    for (std::size_t n = 1; n <= 4; ++n)
        for (auto k : {StandardKind::simplex, StandardKind::cube, StandardKind::crosspolytope})
            out.push_back(standard(k, n));
    out.push_back(bipyramid(standard(StandardKind::cube, 2)));
    out.push_back(product(standard(StandardKind::simplex, 2), standard(StandardKind::crosspolytope, 2)));
    return out;
}

} // namespace

TEST_CASE("standard polytopes")
{
    const Polytope c2 = standard(StandardKind::cube, 2);
    CHECK(c2.vertices() == VRep{{-1, -1}, {-1, 1}, {1, -1}, {1, 1}});
    CHECK(c2.facets().size() == 4);
    for (const auto& f : c2.facets()) {
        CHECK(f.offset == 1);
        CHECK(std::count(f.normal.begin(), f.normal.end(), Rational(0)) == 1);
    }
    CHECK(standard(StandardKind::simplex, 2).vertices() == VRep{{0, 0}, {0, 1}, {1, 0}});
    const Polytope x3 = standard(StandardKind::crosspolytope, 3);
    CHECK(x3.vertices().size() == 6);
    CHECK(x3.facets().size() == 8);
    CHECK_THROWS(standard(StandardKind::cube, 0));
    CHECK(parse_standard_kind("crosspolytope") == StandardKind::crosspolytope);
    CHECK_THROWS(parse_standard_kind("dodecahedron"));
}

TEST_CASE("vertex enumeration from inequalities")
{
    const auto c2 = standard(StandardKind::cube, 2);
    CHECK(hrep_to_vrep(c2.hrep(), 2) == c2.vertices());
    const auto x3 = standard(StandardKind::crosspolytope, 3);
    CHECK(hrep_to_vrep(x3.hrep(), 3) == x3.vertices());

    const HRep half{{{{1, 0}, 1}}, {}};
    CHECK_THROWS_AS(hrep_to_vrep(half, 2), UnboundedError);
    const HRep contradictory{{{{1}, 0}, {{-1}, -1}}, {}};
    CHECK(hrep_to_vrep(contradictory, 1).empty());
}

TEST_CASE("facet enumeration from vertices")
{
    const HRep seg = vrep_to_hrep({{0}, {1}});
    CHECK(seg.equations.empty());
    CHECK(seg.inequalities.size() == 2);

    const HRep diag = vrep_to_hrep({{0, 0}, {1, 1}});
    REQUIRE(diag.equations.size() == 1);
    CHECK(diag.equations[0].normal[0] == -diag.equations[0].normal[1]);
    CHECK(diag.inequalities.size() == 2);

    const HRep x2 = vrep_to_hrep(standard(StandardKind::crosspolytope, 2).vertices());
    CHECK(x2.inequalities.size() == 4);
    for (const auto& f : x2.inequalities) {
        CHECK(abs(f.normal[0]) == abs(f.normal[1]));
        CHECK(f.offset == abs(f.normal[0]));
    }
}

TEST_CASE("V and H round trips on the suite")
{
    for (const auto& p : suite()) {
        const HRep h = vrep_to_hrep(p.vertices());
        CHECK(hrep_to_vrep(h, p.ambient_dim()) == p.vertices());
        const Polytope q = Polytope::from_hrep(p.ambient_dim(), h);
        CHECK(vertex_set(q) == vertex_set(p));
        check_basic_certificates(p);
    }
}

TEST_CASE("points with interior and repeated entries reduce to the hull")
{
    const auto p = Polytope::from_points(2, {{0, 0}, {2, 0}, {0, 2}, {1, 1}, {Rational(1, 2), Rational(1, 2)}, {0, 0}});
    CHECK(p.vertices() == VRep{{0, 0}, {0, 2}, {2, 0}});
}

TEST_CASE("polar duality")
{
    for (std::size_t n = 1; n <= 5; ++n) {
        const auto cube = standard(StandardKind::cube, n);
        const auto cross = standard(StandardKind::crosspolytope, n);
        CHECK(polar_dual(cube).vertices() == cross.vertices());
        CHECK(polar_dual(cross).vertices() == cube.vertices());
    }
    const auto t = centered_simplex(2);
    CHECK(polar_dual(polar_dual(t)).vertices() == t.vertices());
    for (const auto& p : suite())
        if (contains_interior(p, QVector(p.ambient_dim(), 0)))
            CHECK(vertex_set(polar_dual(polar_dual(p))) == vertex_set(p));

    CHECK_THROWS(polar_dual(standard(StandardKind::simplex, 2)));
    CHECK_THROWS(polar_dual(Polytope::from_points(2, {{-1, 0}, {1, 0}})));
}

TEST_CASE("intersections")
{
    const auto t2 = standard(StandardKind::simplex, 2);
    CHECK(intersect(t2, t2).vertices() == t2.vertices());

    const auto x2 = standard(StandardKind::crosspolytope, 2);
    // (1/2, 0) is interior to both, so the overlap is a full square
    const auto shifted = intersect(x2, translate(x2, {1, 0}));
    CHECK(shifted.dim() == 2);
    CHECK(shifted.vertices() == VRep{{0, 0}, {Rational(1, 2), Rational(-1, 2)}, {Rational(1, 2), Rational(1, 2)}, {1, 0}});
    const auto touching = intersect(x2, translate(x2, {2, 0}));
    CHECK(touching.dim() == 0);
    CHECK(touching.vertices() == VRep{{1, 0}});

    const auto far = intersect(x2, translate(x2, {3, 0}));
    CHECK(far.is_empty());
    CHECK(far.dim() == -1);

    const auto suite_polys = suite();
    for (std::size_t i = 0; i + 1 < suite_polys.size(); ++i) {
        const auto& p = suite_polys[i];
        const auto& q = suite_polys[i + 1];
        if (p.ambient_dim() != q.ambient_dim())
            continue;
        CHECK(vertex_set(intersect(p, q)) == vertex_set(intersect(q, p)));
        CHECK(vertex_set(intersect(p, p)) == vertex_set(p));
    }
}

TEST_CASE("affine images")
{
    for (std::size_t n = 1; n <= 4; ++n) {
        const auto x = standard(StandardKind::crosspolytope, n);
        CHECK(negate(x).vertices() == x.vertices());
    }
    const auto moved = translate(standard(StandardKind::cube, 2), {1, 1});
    for (const auto& v : moved.vertices())
        for (const auto& c : v)
            CHECK((c == 0 || c == 2));

    // 2c - simplex keeps the barycenter c.
    const std::size_t n = 3;
    const QVector c(n, Rational(1, 4));
    const auto reflected = translate(negate(standard(StandardKind::simplex, n)), scale(2, c));
    QVector sum(n, 0);
    for (const auto& v : reflected.vertices())
        sum = add(sum, v);
    CHECK(scale(Rational(1, 4), sum) == c);
    CHECK(reflected.vertices() != standard(StandardKind::simplex, n).vertices());

    const auto big = dilate(standard(StandardKind::cube, 2), 3);
    for (const auto& v : big.vertices())
        CHECK((abs(v[0]) == 3 && abs(v[1]) == 3));
}

TEST_CASE("bipyramids and products")
{
    CHECK(bipyramid(standard(StandardKind::cube, 2)).vertices().size() == 6);
    for (std::size_t n = 1; n <= 4; ++n)
        CHECK(bipyramid(standard(StandardKind::crosspolytope, n)).vertices() ==
              standard(StandardKind::crosspolytope, n + 1).vertices());
    CHECK(combinatorially_equal(bipyramid(Polytope::from_points(1, {{-1}, {1}})), standard(StandardKind::cube, 2)));
    for (const auto& p : suite())
        if (contains_interior(p, QVector(p.ambient_dim(), 0)))
            CHECK(bipyramid(p).vertices().size() == p.vertices().size() + 2);
    // the apex segment swallows a vertex at the origin
    CHECK(bipyramid(standard(StandardKind::simplex, 2)).vertices().size() == 4);

    const auto seg = standard(StandardKind::cube, 1);
    CHECK(product(seg, seg).vertices() == standard(StandardKind::cube, 2).vertices());
    const auto t2 = standard(StandardKind::simplex, 2);
    CHECK(product(t2, t2).vertices().size() == 9);
    const auto x3 = standard(StandardKind::crosspolytope, 3);
    CHECK(product(x3, x3).vertices().size() == 36);
    const auto all = suite();
    for (std::size_t i = 0; i + 1 < all.size() && i < 6; ++i)
        CHECK(product(all[i], all[i + 1]).facets().size() == all[i].facets().size() + all[i + 1].facets().size());
}

TEST_CASE("dimension and interior")
{
    const auto t2 = standard(StandardKind::simplex, 2);
    CHECK(contains_interior(t2, {Rational(1, 3), Rational(1, 3)}));
    CHECK_FALSE(contains_interior(t2, {0, 0}));
    CHECK(contains(t2, {0, 0}));
    CHECK_FALSE(contains(t2, {1, 1}));
    const auto diag = Polytope::from_points(2, {{0, 0}, {1, 1}});
    CHECK(dimension(diag) == 1);
    CHECK(contains_interior(diag, {Rational(1, 2), Rational(1, 2)}));
    CHECK_FALSE(contains_interior(diag, {Rational(1, 2), 0}));

    const auto inc = vertex_facet_incidence(standard(StandardKind::cube, 3));
    REQUIRE(inc.size() == 8);
    for (const auto& row : inc)
        CHECK(std::count(row.begin(), row.end(), true) == 3);
}

TEST_CASE("combinatorial equality")
{
    CHECK(combinatorially_equal(standard(StandardKind::cube, 2), standard(StandardKind::crosspolytope, 2)));
    CHECK_FALSE(combinatorially_equal(standard(StandardKind::simplex, 3), standard(StandardKind::cube, 3)));
    CHECK_FALSE(combinatorially_equal(standard(StandardKind::cube, 3), standard(StandardKind::crosspolytope, 3)));
    CHECK(combinatorially_equal(standard(StandardKind::cube, 3), polar_dual(standard(StandardKind::crosspolytope, 3))));
    // a generic quadrilateral is a square combinatorially
    CHECK(combinatorially_equal(Polytope::from_points(2, {{0, 0}, {3, 0}, {1, 2}, {0, 1}}),
                                standard(StandardKind::cube, 2)));

    const auto hom = build_hom(standard(StandardKind::cube, 2), standard(StandardKind::simplex, 2));
    const auto enumerated = Polytope::from_hrep(hom.ambient_dim(), hom.hrep);
    CHECK(combinatorially_equal(Polytope::from_points(6, bt_realization(2, 2)), enumerated));

    CHECK_THROWS_AS(combinatorially_equal(standard(StandardKind::cube, 8), standard(StandardKind::cube, 8)),
                    std::length_error);
}

TEST_CASE("cone generators of the nonnegative orthant and a pyramid")
{
    using dd::IntMatrix;
    const IntMatrix orthant{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
    const auto g = dd::cone_generators(orthant, 3);
    CHECK(g.rays.size() == 3);
    CHECK(g.lineality.empty());

    // cone over a square: x3 >= |x1|, x3 >= |x2|
    const IntMatrix square{{1, 0, 1}, {-1, 0, 1}, {0, 1, 1}, {0, -1, 1}};
    const auto s = dd::cone_generators(square, 3);
    CHECK(s.rays.size() == 4);

    // a half-plane in R^2 has a line of lineality
    const auto h = dd::cone_generators(IntMatrix{{1, 0}}, 2);
    CHECK(h.lineality.size() == 1);
    CHECK(h.rays.size() == 1);
}

TEST_CASE("large coordinates fall back to arbitrary precision")
{
    const Integer big("100000000000000000000000");
    const auto g = dd::cone_generators(dd::IntMatrix{{big, 1, 0}, {0, big, 1}, {1, 0, big}, {-1, -1, -1}}, 3);
    for (const auto& r : g.rays) {
        Integer s = 0;
        for (const auto& x : r)
            s += x;
        CHECK(s <= 0);
    }
    CHECK(g.stats.bigint);
}
