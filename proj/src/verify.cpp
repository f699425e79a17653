#include "hompoly/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <future>
#include <map>
#include <mutex>
#include <set>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "hompoly/counts.hpp"
#include "hompoly/parallel.hpp"

namespace hompoly {

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome
{
    bool passed = true;
    std::string detail;
    std::optional<std::string> witness;

    void fail(std::string why)
    {
        if (passed)
            witness = std::move(why);
        passed = false;
    }
};

struct LexLess
{
    bool operator()(const QVector& a, const QVector& b) const { return lex_less(a, b); }
};
using PointSet = std::set<QVector, LexLess>;

std::string kind_name(StandardKind k)
{
    return to_string(k);
}

void require(bool ok, const std::string& claim, const std::string& what)
{
    if (!ok)
        throw std::invalid_argument(claim + ": " + what);
}

Polytope source_of(const ClaimParams& p)
{
    return standard(p.source, p.m);
}

Polytope target_of(const ClaimParams& p)
{
    return standard(p.target, p.n);
}

std::shared_ptr<const EnumeratedHom> enumerated(const ClaimParams& p)
{
    return enumerate_standard_hom(p.source, p.m, p.target, p.n);
}

std::string str(const QVector& v)
{
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i)
        s += (i ? "," : "") + v[i].str();
    return s + ")";
}

PointSet images_of_vertices(const AffineMapRep& f, const Polytope& source)
{
    PointSet out;
    for (const auto& v : source.vertices())
        out.insert(f.evaluate(v));
    return out;
}

std::vector<Integer> primitive_row(const Hyperplane& h)
{
    QVector row(h.normal);
    row.push_back(h.offset);
    return primitive_integer(row);
}

// --- claims ---------------------------------------------------------------

Outcome dim_formula(const ClaimParams& p)
{
    const auto e = enumerated(p);
    std::vector<QVector> pts;
    for (const auto& f : e->maps)
        pts.push_back(f.flatten());
    const std::size_t expected = p.m * p.n + p.n;
    const std::size_t got = affine_hull(pts).dim();
    Outcome o;
    o.detail = "dimension " + std::to_string(got) + ", expected " + std::to_string(expected);
    if (got != expected)
        o.fail("affine hull of the vertex maps has dimension " + std::to_string(got));
    return o;
}

Outcome constant_maps(const ClaimParams& p)
{
    const auto e = enumerated(p);
    PointSet flat;
    for (const auto& f : e->maps)
        flat.insert(f.flatten());
    Outcome o;
    std::size_t found = 0;
    for (const auto& w : e->hom.target.vertices()) {
        const AffineMapRep c = AffineMapRep::constant(w, p.m);
        if (flat.count(c.flatten()) && is_vertex_map(c, e->hom))
            ++found;
        else
            o.fail("constant map onto " + str(w) + " is not a vertex");
    }
    o.detail = std::to_string(found) + " of " + std::to_string(e->hom.target.vertices().size()) +
               " constant maps are vertices";
    return o;
}

Outcome facet_form(const ClaimParams& p)
{
    const auto e = enumerated(p);
    std::vector<QVector> pts;
    for (const auto& f : e->maps)
        pts.push_back(f.flatten());
    // Facets recomputed from the vertex set alone.
    const HRep hull = vrep_to_hrep(pts);
    std::set<std::vector<Integer>> rows;
    for (const auto& h : e->hom.hrep.inequalities)
        rows.insert(primitive_row(h));
    Outcome o;
    std::set<std::vector<Integer>> facets;
    for (const auto& f : hull.inequalities) {
        const auto key = primitive_row(f);
        facets.insert(key);
        if (!rows.count(key))
            o.fail("facet " + str(f.normal) + " <= " + f.offset.str() + " is not of the form u.(Av+b) <= c");
    }
    std::size_t defining = 0;
    for (const auto& r : rows)
        defining += facets.count(r);
    o.detail = std::to_string(hull.inequalities.size()) + " facets, all of vertex-facet form; " +
               std::to_string(defining) + " of " + std::to_string(e->hom.hrep.inequalities.size()) +
               " (vertex, facet) pairs are facet-defining";
    if (!hull.equations.empty())
        o.fail("the vertex maps span a proper affine subspace");
    return o;
}

Outcome box_simplex_rank(const ClaimParams& p)
{
    const auto e = enumerated(p);
    Outcome o;
    std::size_t max_rank = 0;
    for (const auto& f : e->maps) {
        const std::size_t r = map_rank(f);
        max_rank = std::max(max_rank, r);
        if (r > 1)
            o.fail("rank " + std::to_string(r) + " vertex map " + describe(f));
    }
    o.detail = std::to_string(e->maps.size()) + " vertex maps, maximal rank " + std::to_string(max_rank);
    return o;
}

Outcome bt_realization_claim(const ClaimParams& p)
{
    const VRep pts = bt_realization(p.m, p.n);
    const std::size_t expected = (p.n + 1) * (p.m * p.n + 1);
    const std::size_t d = p.n + p.n * p.m;
    Outcome o;
    if (pts.size() != expected)
        o.fail(std::to_string(pts.size()) + " points instead of " + std::to_string(expected));
    const Polytope hull = Polytope::from_points(d, pts);
    if (hull.vertices().size() != pts.size())
        o.fail("only " + std::to_string(hull.vertices().size()) + " of the points are vertices of their hull");
    if (hull.dim() != static_cast<int>(d))
        o.fail("hull has dimension " + std::to_string(hull.dim()));

    const auto e = enumerated(p);
    VRep flat;
    for (const auto& f : e->maps)
        flat.push_back(f.flatten());
    const Polytope hom = Polytope::from_vertices(d, flat);
    bool iso = false;
    if (pts.size() <= kIsomorphismVertexLimit) {
        iso = combinatorially_equal(hull, hom);
        if (!iso)
            o.fail("hull is not combinatorially equal to the enumerated hom-polytope");
    }
    o.detail = std::to_string(pts.size()) + " points, hull dimension " + std::to_string(hull.dim()) +
               (iso ? ", combinatorially equal to the enumerated hom-polytope" : "");
    return o;
}

Outcome hom_simplex_power(const ClaimParams& p)
{
    const auto e = enumerated(p);
    const Polytope q = target_of(p);
    Integer expected = 1;
    for (std::size_t i = 0; i <= p.m; ++i)
        expected *= static_cast<unsigned long>(q.vertices().size());
    Outcome o;
    if (Integer(static_cast<unsigned long>(e->maps.size())) != expected)
        o.fail(std::to_string(e->maps.size()) + " vertex maps, expected " + expected.get_str());
    std::string extra;
    if (expected <= 1000) {
        Polytope power = q;
        for (std::size_t i = 0; i < p.m; ++i)
            power = product(power, q);
        if (Integer(static_cast<unsigned long>(power.vertices().size())) != expected)
            o.fail("product polytope has " + std::to_string(power.vertices().size()) + " vertices");
        extra = ", matching the product polytope";
    }
    o.detail = std::to_string(e->maps.size()) + " vertex maps = #vert(Q)^" + std::to_string(p.m + 1) + extra;
    return o;
}

Outcome hom_into_cube(const ClaimParams& p)
{
    const auto e = enumerated(p);
    Outcome o;
    PointSet flat;
    for (const auto& f : e->maps)
        flat.insert(f.flatten());
    for (const auto& z : flat)
        if (!flat.count(scale(Rational(-1), z))) {
            o.fail("vertex " + str(z) + " has no antipode");
            break;
        }
    const Polytope dual_pyramid = bipyramid(polar_dual(source_of(p)));
    Integer expected = 1;
    for (std::size_t i = 0; i < p.n; ++i)
        expected *= static_cast<unsigned long>(dual_pyramid.vertices().size());
    if (Integer(static_cast<unsigned long>(flat.size())) != expected)
        o.fail(std::to_string(flat.size()) + " vertex maps, expected " + expected.get_str());
    std::string extra;
    if (p.n == 1 && flat.size() <= kIsomorphismVertexLimit) {
        const Polytope hom = Polytope::from_vertices(e->hom.ambient_dim(), VRep(flat.begin(), flat.end()));
        if (!combinatorially_equal(hom, dual_pyramid))
            o.fail("not combinatorially equal to the bipyramid over the polar dual");
        extra = ", combinatorially the bipyramid over the polar dual";
    }
    o.detail = std::to_string(flat.size()) + " vertex maps, centrally symmetric" + extra;
    return o;
}

Outcome diamond_center(const ClaimParams& p)
{
    const auto e = enumerated(p);
    Outcome o;
    std::size_t interior = 0;
    for (const auto& f : e->maps) {
        if (!contains_interior(e->hom.target, f.b))
            continue;
        ++interior;
        if (!is_zero(f.b)) {
            o.fail("interior center but b != 0: " + describe(f));
            continue;
        }
        // Linear with every column a signed unit vector: vertices go to vertices, antipodes to antipodes.
        for (std::size_t j = 0; j < f.source_dim(); ++j) {
            const QVector col = f.A.column(j);
            std::size_t nonzero = 0;
            bool unit = true;
            for (const auto& x : col)
                if (!x.is_zero()) {
                    ++nonzero;
                    unit = unit && abs(x) == Rational(1);
                }
            if (nonzero != 1 || !unit) {
                o.fail("f(e_" + std::to_string(j + 1) + ") is not a vertex: " + describe(f));
                break;
            }
        }
    }
    Integer expected = 1;
    for (std::size_t i = 0; i < p.m; ++i)
        expected *= static_cast<unsigned long>(2 * p.n);
    if (Integer(static_cast<unsigned long>(interior)) != expected)
        o.fail(std::to_string(interior) + " interior-center maps, expected " + expected.get_str());
    o.detail = std::to_string(e->maps.size()) + " vertex maps, " + std::to_string(interior) +
               " with interior center, all linear and vertex-preserving";
    return o;
}

std::vector<std::vector<std::size_t>> subsets(std::size_t m, std::size_t k)
{
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> pick(k);
    const std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t start, std::size_t depth) {
        if (depth == k) {
            out.push_back(pick);
            return;
        }
        for (std::size_t i = start; i < m; ++i) {
            pick[depth] = i;
            rec(i + 1, depth + 1);
        }
    };
    rec(0, 0);
    return out;
}

Outcome diamond_subcross(const ClaimParams& p)
{
    const auto e = enumerated(p);
    const HomPolytope small = build_hom(standard(StandardKind::crosspolytope, p.n), target_of(p));
    const auto index_sets = subsets(p.m, p.n);
    Outcome o;
    std::size_t top = 0;
    for (const auto& f : e->maps) {
        if (map_rank(f) != p.n)
            continue;
        ++top;
        bool found = false;
        for (const auto& s : index_sets) {
            const AffineMapRep g = restrict_to_subcrosspolytope(f, s);
            if (map_rank(g) == p.n && is_vertex_map(g, small)) {
                found = true;
                break;
            }
        }
        if (!found)
            o.fail("no sub-crosspolytope restriction is a vertex map: " + describe(f));
    }
    o.detail = std::to_string(top) + " rank-" + std::to_string(p.n) +
               " vertex maps, each restricting to a vertex map on some " + std::to_string(p.n) + "-subset";
    return o;
}

Outcome diamond_image_count(const ClaimParams& p)
{
    const auto e = enumerated(p);
    std::size_t cross = 0;
    for (const auto& f : e->maps)
        if (map_rank(f) == p.n && is_crosspolytope_image(image_polytope(f, e->hom.source), f.b))
            ++cross;
    const Integer b = static_cast<unsigned long>(beta(p.n).orbits);
    const Integer expected = sigma(p.m, p.n) * b;
    Outcome o;
    o.detail = std::to_string(cross) + " rank-" + std::to_string(p.n) + " maps with crosspolytope image; sigma*beta = " +
               expected.get_str();
    if (Integer(static_cast<unsigned long>(cross)) != expected)
        o.fail(std::to_string(cross) + " != " + expected.get_str());
    return o;
}

// Adds the pair {v, 2b - v} as images of +-e_{m+1}.
AffineMapRep extend_by_pair(const AffineMapRep& f, const QVector& v)
{
    AffineMapRep g{QMatrix(f.target_dim(), f.source_dim() + 1), f.b};
    for (std::size_t r = 0; r < f.target_dim(); ++r) {
        for (std::size_t c = 0; c < f.source_dim(); ++c)
            g.A(r, c) = f.A(r, c);
        g.A(r, f.source_dim()) = v[r] - f.b[r];
    }
    return g;
}

Outcome diamond_image_shape(const ClaimParams& p)
{
    Outcome o;
    if (p.m == p.n || p.n == 3) {
        const auto e = enumerated(p);
        std::size_t top = 0;
        for (const auto& f : e->maps) {
            if (map_rank(f) != p.n)
                continue;
            ++top;
            if (!is_crosspolytope_image(image_polytope(f, e->hom.source), f.b))
                o.fail("image is not a crosspolytope: " + describe(f));
        }
        o.detail = "all " + std::to_string(top) + " rank-" + std::to_string(p.n) + " images are crosspolytopes";
        return o;
    }

    // Otherwise exhibit a rank-n vertex map whose image is not a crosspolytope:
    // extend a square vertex map by antipodal pairs of vertices of Q cap (2b - Q).
    const auto base = enumerate_standard_hom(StandardKind::crosspolytope, p.n, p.target, p.n);
    const Polytope q = target_of(p);
    const Polytope big_source = source_of(p);
    const HomPolytope big = build_hom(big_source, q);
    for (const auto& f : base->maps) {
        if (map_rank(f) != p.n)
            continue;
        const Polytope sym = intersect(q, translate(negate(q), scale(Rational(2), f.b)));
        const PointSet used = images_of_vertices(f, base->hom.source);
        for (const auto& v : sym.vertices()) {
            if (used.count(v))
                continue;
            AffineMapRep g = f;
            for (std::size_t k = p.n; k < p.m; ++k)
                g = extend_by_pair(g, v);
            if (!is_vertex_map(g, big))
                continue;
            const Polytope img = image_polytope(g, big_source);
            if (!is_crosspolytope_image(img, g.b)) {
                o.detail = "rank-" + std::to_string(map_rank(g)) + " vertex map with a " +
                           std::to_string(img.vertices().size()) + "-vertex image: " + describe(g);
                return o;
            }
        }
    }
    o.fail("no rank-" + std::to_string(p.n) + " vertex map with a non-crosspolytope image was found");
    o.detail = "search exhausted";
    return o;
}

Outcome vertex_image_law(const ClaimParams& p)
{
    const auto e = enumerated(p);
    const Polytope& q = e->hom.target;
    Outcome o;
    for (const auto& f : e->maps) {
        const PointSet images = images_of_vertices(f, e->hom.source);
        const Polytope img = image_polytope(f, e->hom.source);
        if (PointSet(img.vertices().begin(), img.vertices().end()) != images) {
            o.fail("f(vert P) differs from vert(Im f): " + describe(f));
            continue;
        }
        const Polytope sym = intersect(q, translate(negate(q), scale(Rational(2), f.b)));
        const PointSet allowed(sym.vertices().begin(), sym.vertices().end());
        for (const auto& x : images)
            if (!allowed.count(x)) {
                o.fail("f(v) = " + str(x) + " is not a vertex of Q cap (2b - Q): " + describe(f));
                break;
            }
    }
    o.detail = std::to_string(e->maps.size()) + " vertex maps obey the vertex-image law";
    return o;
}

Outcome face_law(const ClaimParams& p)
{
    const auto e = enumerated(p);
    const auto& facets = e->hom.target.facets();
    Outcome o;
    for (const auto& f : e->maps) {
        const PointSet images = images_of_vertices(f, e->hom.source);
        std::vector<bool> holds(facets.size(), false);
        std::size_t tight = 0;
        for (std::size_t i = 0; i < facets.size(); ++i) {
            holds[i] = std::all_of(images.begin(), images.end(),
                                   [&](const QVector& x) { return dot(facets[i].normal, x) == facets[i].offset; });
            tight += holds[i];
        }
        const int face_dim = static_cast<int>(p.n) - static_cast<int>(tight);
        const int image_dim = static_cast<int>(affine_hull(std::vector<QVector>(images.begin(), images.end())).dim());
        if (image_dim != face_dim) {
            o.fail("dim f(P) = " + std::to_string(image_dim) + " but the minimal face has dimension " +
                   std::to_string(face_dim) + ": " + describe(f));
            continue;
        }
        if (face_dim == 0)
            continue;
        for (std::size_t i = 0; i < facets.size(); ++i) {
            if (holds[i])
                continue;
            std::vector<QVector> on;
            for (const auto& x : images)
                if (dot(facets[i].normal, x) == facets[i].offset)
                    on.push_back(x);
            if (on.empty() || static_cast<int>(affine_hull(on).dim()) != face_dim - 1) {
                o.fail("a facet of the minimal face does not contain a facet of f(P): " + describe(f));
                break;
            }
        }
    }
    o.detail = std::to_string(e->maps.size()) + " vertex maps obey the face law";
    return o;
}

HighRankTable high_rank_table(std::size_t m, std::size_t top)
{
    HighRankTable table;
    for (std::size_t k = 4; k <= top; ++k) {
        const auto e = enumerate_standard_hom(StandardKind::crosspolytope, m, StandardKind::simplex, k);
        std::size_t count = 0;
        for (const auto& f : e->maps)
            count += map_rank(f) == k;
        table[k] = static_cast<unsigned long>(count);
    }
    return table;
}

Outcome count_agreement(const ClaimParams& p)
{
    using K = StandardKind;
    const auto e = enumerated(p);
    const Integer got = static_cast<unsigned long>(e->maps.size());
    Outcome o;
    std::optional<CountReport> report;
    if (p.source == K::cube && p.target == K::simplex) {
        report = count_box_simplex(p.m, p.n);
    } else if (p.source == K::crosspolytope && p.target == K::simplex) {
        report = count_diamond_simplex(p.m, p.n, high_rank_table(p.m, std::min(p.m, p.n)));
    } else if (p.source == K::crosspolytope && p.target == K::crosspolytope) {
        report = count_diamond_diamond(p.m, p.n, high_rank_table(p.m, std::min(p.m, p.n - 1)));
    } else if (p.source == K::cube && p.target == K::crosspolytope) {
        const Integer bound = bound_box_diamond(p.m, p.n);
        o.detail = "enumerated " + got.get_str() + " >= lower bound " + bound.get_str();
        if (got < bound)
            o.fail("enumerated " + got.get_str() + " is below the lower bound " + bound.get_str());
        if (p.m == 3 && p.n == 4) {
            o.detail += "; the prose states the bound as " + std::to_string(kStatedBoxDiamondBound34) +
                        " and the count as 27968";
            if (got != 27968)
                o.fail("enumerated " + got.get_str() + " instead of 27968");
        }
        return o;
    }
    if (!report)
        throw std::invalid_argument("count-agreement: no closed form for this source and target");
    report->set_enumerated(got);
    o.detail = "enumerated " + got.get_str() + ", closed form " + report->closed_form.get_str();
    if (!*report->agreement)
        o.fail(o.detail);
    return o;
}

Outcome beta_orbits(const ClaimParams& p)
{
    static const std::map<std::size_t, std::size_t> stated{{1, 1}, {2, 0}, {3, 1}, {4, 5}, {5, 408}};
    const BetaResult r = beta(p.n);
    Outcome o;
    o.detail = "beta(" + std::to_string(p.n) + ") = " + std::to_string(r.orbits) + " from " + r.tuples.get_str() +
               " tuples, free action" + (r.rooted ? " (rooted count)" : "");
    const auto it = stated.find(p.n);
    if (it != stated.end() && it->second != r.orbits)
        o.fail("beta(" + std::to_string(p.n) + ") = " + std::to_string(r.orbits) + ", stated " +
               std::to_string(it->second));
    return o;
}

// --- registry -------------------------------------------------------------

using Check = Outcome (*)(const ClaimParams&);

struct Entry
{
    ClaimInfo info;
    Check check;
    std::function<bool(const ClaimParams&)> accepts;
};

ClaimParams P(StandardKind s, std::size_t m, StandardKind t, std::size_t n)
{
    return ClaimParams{s, m, t, n};
}

const std::vector<Entry>& entries()
{
    using K = StandardKind;
    constexpr K S = K::simplex, C = K::cube, X = K::crosspolytope;
    const auto any = [](const ClaimParams&) { return true; };
    const auto kinds = [](K s, K t) { return [s, t](const ClaimParams& p) { return p.source == s && p.target == t; }; };
    static const std::vector<Entry> table{
        {{"dim-formula", "the hom-polytope has dimension dim P * dim Q + dim Q",
          {P(C, 2, S, 2), P(S, 1, S, 1), P(X, 3, S, 3), P(X, 2, X, 2), P(C, 2, X, 2), P(S, 2, C, 2)}, {}},
         dim_formula, any},
        {{"constant-maps", "every constant map onto a vertex of Q is a vertex map",
          {P(C, 2, S, 2), P(X, 2, X, 2), P(C, 2, X, 2), P(X, 3, S, 3)}, {}},
         constant_maps, any},
        {{"facet-form", "every facet of Hom(P,Q) is cut out by u.(Av+b) <= c for a vertex v and facet (u,c)",
          {P(C, 2, S, 2), P(X, 2, X, 2), P(S, 1, S, 2), P(X, 2, S, 2)}, {}},
         facet_form, any},
        {{"box-simplex-rank", "vertex maps from a cube to a simplex have rank at most 1",
          {P(C, 1, S, 1), P(C, 2, S, 2), P(C, 2, S, 3), P(C, 3, S, 2), P(C, 3, S, 3)}, {}},
         box_simplex_rank, kinds(C, S)},
        {{"bt-realization", "the explicit point set realizes Hom(cube_m, simplex_n)",
          {P(C, 1, S, 1), P(C, 2, S, 2), P(C, 2, S, 3), P(C, 3, S, 2), P(C, 3, S, 3)}, {}},
         bt_realization_claim, kinds(C, S)},
        {{"hom-simplex-power", "Hom(simplex_m, Q) is the (m+1)-fold power of Q",
          {P(S, 1, S, 2), P(S, 1, C, 2), P(S, 2, X, 2), P(S, 1, X, 3)}, {}},
         hom_simplex_power, [](const ClaimParams& p) { return p.source == K::simplex; }},
        {{"hom-into-cube",
          "for centrally symmetric P, Hom(P, cube_n) is centrally symmetric and is the n-th power of the "
          "bipyramid over the polar dual",
          {P(C, 1, C, 1), P(X, 2, C, 1), P(C, 2, C, 1), P(C, 2, C, 2), P(X, 3, C, 1)}, {}},
         hom_into_cube, [](const ClaimParams& p) { return p.source != K::simplex && p.target == K::cube; }},
        {{"diamond-center", "vertex maps between crosspolytopes with interior center are linear",
          {P(X, 2, X, 2), P(X, 2, X, 3), P(X, 3, X, 2), P(X, 3, X, 3)}, {}},
         diamond_center, kinds(X, X)},
        {{"diamond-subcross", "a rank-n vertex map from crosspolytope_m restricts to a vertex map on an n-subset",
          {P(X, 3, S, 3), P(X, 4, S, 3)}, {}},
         diamond_subcross, [](const ClaimParams& p) { return p.source == K::crosspolytope && p.m >= p.n && p.n >= 2; }},
        {{"diamond-image-count", "rank-n vertex maps with crosspolytope image number sigma(m,n) beta(n)",
          {P(X, 3, S, 3), P(X, 4, S, 3)}, {}},
         diamond_image_count,
         [](const ClaimParams& p) {
             return p.source == K::crosspolytope && p.target == K::simplex && p.m >= p.n && p.n >= 2;
         }},
        {{"diamond-image-shape", "all rank-n images are crosspolytopes exactly when m = n or n = 3",
          {P(X, 3, S, 3), P(X, 4, S, 3)}, {P(X, 5, S, 4)}},
         diamond_image_shape,
         [](const ClaimParams& p) {
             return p.source == K::crosspolytope && p.target == K::simplex && p.m >= p.n && p.n >= 3;
         }},
        {{"vertex-image-law", "a vertex map from a crosspolytope sends vertices onto vert(Im f) inside vert(Q cap (2b - Q))",
          {P(X, 2, S, 2), P(X, 3, S, 3), P(X, 2, X, 2), P(X, 3, X, 2), P(X, 2, C, 2)}, {}},
         vertex_image_law, [](const ClaimParams& p) { return p.source == K::crosspolytope; }},
        {{"face-law",
          "for a vertex map into a simplex, f(P) has the dimension of its minimal face G and meets every facet of "
          "G in a facet",
          {P(C, 2, S, 2), P(C, 3, S, 3), P(X, 3, S, 3), P(X, 4, S, 3), P(S, 2, S, 2)}, {}},
         face_law, [](const ClaimParams& p) { return p.target == K::simplex; }},
        {{"count-agreement", "closed-form vertex counts agree with enumeration",
          {P(C, 1, S, 1), P(C, 2, S, 2), P(C, 2, S, 3), P(C, 3, S, 2), P(C, 3, S, 3), P(X, 2, S, 2), P(X, 3, S, 2),
           P(X, 2, S, 3), P(X, 3, S, 3), P(X, 2, X, 2), P(X, 2, X, 3), P(X, 3, X, 2), P(X, 3, X, 3), P(C, 2, X, 2)},
          {P(C, 3, X, 4)}},
         count_agreement,
         [](const ClaimParams& p) {
             return (p.source == K::cube && p.target == K::simplex) ||
                    (p.source == K::crosspolytope && p.target == K::simplex) ||
                    (p.source == K::crosspolytope && p.target == K::crosspolytope && p.m >= 2 && p.n >= 2) ||
                    (p.source == K::cube && p.target == K::crosspolytope && p.m >= 2 && p.n >= 2);
         }},
        {{"beta-orbits", "the hyperoctahedral group acts freely on V(n) with beta(n) orbits (uses n only)",
          {P(C, 1, C, 1), P(C, 1, C, 2), P(C, 1, C, 3), P(C, 1, C, 4)}, {P(C, 1, C, 5)}},
         beta_orbits, [](const ClaimParams& p) { return p.n >= 1 && p.n <= kMaxTupleDimension; }},
    };
    return table;
}

const Entry& find_entry(const std::string& id)
{
    for (const auto& e : entries())
        if (e.info.id == id)
            return e;
    throw std::invalid_argument("unknown claim \"" + id + "\"");
}

} // namespace

std::string ClaimParams::str() const
{
    return kind_name(source) + ":" + std::to_string(m) + " -> " + kind_name(target) + ":" + std::to_string(n);
}

const std::vector<ClaimInfo>& claim_registry()
{
    static const std::vector<ClaimInfo> infos = [] {
        std::vector<ClaimInfo> out;
        for (const auto& e : entries())
            out.push_back(e.info);
        return out;
    }();
    return infos;
}

const ClaimInfo& find_claim(const std::string& id)
{
    return find_entry(id).info;
}

VerificationResult run_claim(const std::string& claim_id, const ClaimParams& params)
{
    const Entry& entry = find_entry(claim_id);
    require(params.m >= 1 && params.n >= 1, claim_id, "dimensions must be positive");
    require(entry.accepts(params), claim_id, "parameters " + params.str() + " are outside the claim's scope");

    const auto start = Clock::now();
    Outcome o = entry.check(params);
    VerificationResult r;
    r.claim_id = claim_id;
    r.params = params;
    r.passed = o.passed;
    r.detail = std::move(o.detail);
    r.witness = std::move(o.witness);
    if (!r.passed && !r.witness)
        r.witness = r.detail;
    r.elapsed_seconds = std::chrono::duration<double>(Clock::now() - start).count();
    return r;
}

std::vector<VerificationResult> run_suite(SuiteLevel level, std::size_t threads)
{
    std::vector<std::pair<std::string, ClaimParams>> jobs;
    for (const auto& e : entries()) {
        for (const auto& p : e.info.core)
            jobs.emplace_back(e.info.id, p);
        if (level == SuiteLevel::extended)
            for (const auto& p : e.info.extended)
                jobs.emplace_back(e.info.id, p);
    }
    std::vector<VerificationResult> out(jobs.size());
    parallel_for(jobs.size(), threads, [&](std::size_t i) {
        try {
            out[i] = run_claim(jobs[i].first, jobs[i].second);
        } catch (const std::exception& ex) {
            out[i].claim_id = jobs[i].first;
            out[i].params = jobs[i].second;
            out[i].passed = false;
            out[i].detail = "error";
            out[i].witness = ex.what();
        }
    });
    return out;
}

std::shared_ptr<const EnumeratedHom> enumerate_standard_hom(StandardKind source, std::size_t m, StandardKind target,
                                                            std::size_t n)
{
    using Key = std::tuple<StandardKind, std::size_t, StandardKind, std::size_t>;
    static std::mutex mutex;
    static std::map<Key, std::shared_future<std::shared_ptr<const EnumeratedHom>>> cache;

    const Key key{source, m, target, n};
    std::promise<std::shared_ptr<const EnumeratedHom>> promise;
    std::shared_future<std::shared_ptr<const EnumeratedHom>> future;
    bool owner = false;
    {
        const std::lock_guard lock(mutex);
        auto it = cache.find(key);
        if (it == cache.end()) {
            future = promise.get_future().share();
            cache.emplace(key, future);
            owner = true;
        } else {
            future = it->second;
        }
    }
    if (owner) {
        try {
            HomPolytope hom = build_hom(standard(source, m), standard(target, n));
            hom.source_desc = {to_string(source), m, {}};
            hom.target_desc = {to_string(target), n, {}};
            auto maps = enumerate_vertex_maps(hom);
            promise.set_value(std::make_shared<const EnumeratedHom>(EnumeratedHom{std::move(hom), std::move(maps)}));
        } catch (...) {
            promise.set_exception(std::current_exception());
        }
    }
    return future.get();
}

bool is_crosspolytope_image(const Polytope& image, const QVector& center)
{
    const std::size_t n = image.ambient_dim();
    const VRep& verts = image.vertices();
    if (verts.size() != 2 * n || image.dim() != static_cast<int>(n))
        return false;
    for (const auto& v : verts) {
        const QVector w = sub(scale(Rational(2), center), v);
        if (!std::binary_search(verts.begin(), verts.end(), w, lex_less))
            return false;
    }
    return true;
}

std::string describe(const AffineMapRep& f)
{
    std::ostringstream os;
    os << "A=[";
    for (std::size_t r = 0; r < f.target_dim(); ++r)
        os << (r ? "," : "") << str(f.A.row_vector(r));
    os << "] b=" << str(f.b);
    return os.str();
}

} // namespace hompoly
