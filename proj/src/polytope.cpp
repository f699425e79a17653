#include "hompoly/polytope.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>

#include "hompoly/double_description.hpp"

namespace hompoly {

struct Polytope::State
{
    std::once_flag vertices_once;
    std::once_flag hrep_once;
    std::once_flag dim_once;
    std::optional<VRep> vertices;
    std::optional<HRep> raw_hrep;
    std::optional<HRep> hrep;
    int dim = -1;
};

namespace {

Inequality normalize_inequality(const QVector& normal, const Rational& offset)
{
    QVector joined(normal);
    joined.push_back(offset);
    const auto ints = primitive_integer(joined);
    Inequality out;
    out.normal.reserve(normal.size());
    for (std::size_t i = 0; i < normal.size(); ++i)
        out.normal.emplace_back(ints[i]);
    out.offset = Rational(ints.back());
    return out;
}

HRep contradictory_hrep(std::size_t d)
{
    HRep h;
    h.inequalities.push_back({QVector(d, Rational(0)), Rational(-1)});
    return h;
}

bool satisfies_equations(const HRep& h, const QVector& x)
{
    for (const auto& e : h.equations)
        if (dot(e.normal, x) != e.offset)
            return false;
    return true;
}

} // namespace

std::string to_string(StandardKind kind)
{
    switch (kind) {
    case StandardKind::simplex: return "simplex";
    case StandardKind::cube: return "cube";
    case StandardKind::crosspolytope: return "crosspolytope";
    }
    return "?";
}

StandardKind parse_standard_kind(const std::string& name)
{
    if (name == "simplex")
        return StandardKind::simplex;
    if (name == "cube")
        return StandardKind::cube;
    if (name == "crosspolytope" || name == "cross")
        return StandardKind::crosspolytope;
    throw std::invalid_argument("unknown polytope kind '" + name + "'");
}

bool lex_less(const QVector& a, const QVector& b)
{
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

void canonical_sort(VRep& vertices)
{
    std::sort(vertices.begin(), vertices.end(), lex_less);
}

void canonical_sort(std::vector<Inequality>& inequalities)
{
    std::sort(inequalities.begin(), inequalities.end(), [](const Inequality& a, const Inequality& b) {
        if (a.normal != b.normal)
            return lex_less(a.normal, b.normal);
        return a.offset < b.offset;
    });
}

// --- Polytope -------------------------------------------------------------

Polytope::Polytope(std::size_t ambient_dim) : ambient_dim_(ambient_dim), state_(std::make_shared<State>()) {}

Polytope Polytope::from_vertices(std::size_t ambient_dim, VRep vertices)
{
    for (const auto& v : vertices)
        if (v.size() != ambient_dim)
            throw std::invalid_argument("vertex dimension mismatch");
    canonical_sort(vertices);
    Polytope p(ambient_dim);
    p.state_->vertices = std::move(vertices);
    return p;
}

Polytope Polytope::from_points(std::size_t ambient_dim, const std::vector<QVector>& points)
{
    VRep pts(points);
    for (const auto& v : pts)
        if (v.size() != ambient_dim)
            throw std::invalid_argument("point dimension mismatch");
    canonical_sort(pts);
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.size() <= 1)
        return from_vertices(ambient_dim, std::move(pts));

    HRep h = vrep_to_hrep(pts);
    const std::size_t d = affine_hull(pts).dim();
    VRep verts;
    for (const auto& x : pts) {
        std::vector<QVector> tight;
        for (const auto& f : h.inequalities)
            if (dot(f.normal, x) == f.offset)
                tight.push_back(f.normal);
        if (tight.size() >= d && rank(QMatrix::from_rows(tight, ambient_dim)) == d)
            verts.push_back(x);
    }
    return from_both(ambient_dim, std::move(verts), std::move(h));
}

Polytope Polytope::from_hrep(std::size_t ambient_dim, HRep hrep)
{
    for (const auto& f : hrep.inequalities)
        if (f.normal.size() != ambient_dim)
            throw std::invalid_argument("inequality dimension mismatch");
    for (const auto& e : hrep.equations)
        if (e.normal.size() != ambient_dim)
            throw std::invalid_argument("equation dimension mismatch");
    Polytope p(ambient_dim);
    p.state_->raw_hrep = std::move(hrep);
    return p;
}

Polytope Polytope::from_both(std::size_t ambient_dim, VRep vertices, HRep irredundant)
{
    Polytope p = from_vertices(ambient_dim, std::move(vertices));
    canonical_sort(irredundant.inequalities);
    p.state_->hrep = std::move(irredundant);
    return p;
}

Polytope Polytope::empty(std::size_t ambient_dim)
{
    return from_both(ambient_dim, {}, contradictory_hrep(ambient_dim));
}

const VRep& Polytope::vertices() const
{
    std::call_once(state_->vertices_once, [this] {
        if (state_->vertices)
            return;
        const HRep& src = state_->raw_hrep ? *state_->raw_hrep : *state_->hrep;
        state_->vertices = hrep_to_vrep(src, ambient_dim_);
    });
    return *state_->vertices;
}

const HRep& Polytope::hrep() const
{
    std::call_once(state_->hrep_once, [this] {
        if (state_->hrep)
            return;
        const VRep& v = vertices();
        state_->hrep = v.empty() ? contradictory_hrep(ambient_dim_) : vrep_to_hrep(v);
    });
    return *state_->hrep;
}

int Polytope::dim() const
{
    std::call_once(state_->dim_once, [this] {
        const VRep& v = vertices();
        state_->dim = v.empty() ? -1 : static_cast<int>(affine_hull(v).dim());
    });
    return state_->dim;
}

bool Polytope::has_vertices() const
{
    return state_->vertices.has_value();
}

bool Polytope::has_irredundant_hrep() const
{
    return state_->hrep.has_value();
}

// --- Representation conversion -------------------------------------------

VRep hrep_to_vrep(const HRep& hrep, std::size_t d)
{
    // Restrict to the solution set of the equations: x = x0 + N y, y = x[free].
    QVector x0(d, Rational(0));
    std::vector<QVector> frame; // columns of N, one per free coordinate
    if (hrep.equations.empty()) {
        for (std::size_t i = 0; i < d; ++i) {
            QVector e(d, Rational(0));
            e[i] = 1;
            frame.push_back(std::move(e));
        }
    } else {
        std::vector<QVector> normals;
        QVector rhs;
        for (const auto& e : hrep.equations) {
            normals.push_back(e.normal);
            rhs.push_back(e.offset);
        }
        const auto sol = solve(QMatrix::from_rows(normals, d), rhs);
        if (sol.kind == SolveResult::Kind::none)
            return {};
        x0 = sol.particular;
        frame = sol.nullspace;
    }
    const std::size_t k = frame.size();

    // Homogenize: z = (t, y), and b t - (a N) y >= 0 for a . x <= b, plus t >= 0.
    dd::IntMatrix rows;
    {
        dd::IntVector t_row(k + 1, Integer(0));
        t_row[0] = 1;
        rows.push_back(std::move(t_row));
    }
    for (const auto& f : hrep.inequalities) {
        if (f.normal.size() != d)
            throw std::invalid_argument("inequality dimension mismatch");
        QVector row(k + 1);
        row[0] = f.offset - dot(f.normal, x0);
        for (std::size_t j = 0; j < k; ++j)
            row[j + 1] = -dot(f.normal, frame[j]);
        rows.push_back(primitive_integer(row));
    }
    std::sort(rows.begin(), rows.end());
    rows.erase(std::unique(rows.begin(), rows.end()), rows.end());

    const auto gen = dd::cone_generators(rows, k + 1);
    bool finite = false;
    bool recession = !gen.lineality.empty();
    for (const auto& r : gen.rays)
        (sgn(r[0]) > 0 ? finite : recession) = true;
    if (!finite)
        return {};
    if (recession)
        throw UnboundedError("feasible set is unbounded");

    VRep out;
    out.reserve(gen.rays.size());
    for (const auto& r : gen.rays) {
        QVector x(x0);
        for (std::size_t j = 0; j < k; ++j) {
            if (r[j + 1] == 0)
                continue;
            const Rational y(r[j + 1], r[0]);
            for (std::size_t i = 0; i < d; ++i)
                if (!frame[j][i].is_zero())
                    x[i] += y * frame[j][i];
        }
        out.push_back(std::move(x));
    }
    canonical_sort(out);
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

HRep vrep_to_hrep(const VRep& vertices)
{
    if (vertices.empty())
        throw std::invalid_argument("vrep_to_hrep needs at least one vertex");
    const std::size_t d = vertices.front().size();
    const AffineHull hull = affine_hull(vertices);
    HRep out;
    out.equations = hull.equations;
    const std::size_t k = hull.dim();
    if (k == 0)
        return out;

    // Valid inequalities (b, a) with a . y <= b on every projected point form
    // a pointed cone whose extreme rays are the facets.
    dd::IntMatrix rows;
    for (const auto& v : vertices) {
        QVector row(k + 1);
        row[0] = 1;
        for (std::size_t j = 0; j < k; ++j)
            row[j + 1] = -v[hull.free_coords[j]];
        rows.push_back(primitive_integer(row));
    }
    std::sort(rows.begin(), rows.end());
    rows.erase(std::unique(rows.begin(), rows.end()), rows.end());

    const auto gen = dd::cone_generators(rows, k + 1);
    for (const auto& r : gen.rays) {
        bool trivial = true;
        for (std::size_t j = 1; j <= k; ++j)
            trivial = trivial && r[j] == 0;
        if (trivial)
            continue;
        Inequality f;
        f.normal.assign(d, Rational(0));
        for (std::size_t j = 0; j < k; ++j)
            f.normal[hull.free_coords[j]] = Rational(r[j + 1]);
        f.offset = Rational(r[0]);
        out.inequalities.push_back(std::move(f));
    }
    canonical_sort(out.inequalities);
    return out;
}

// --- Constructors ---------------------------------------------------------

Polytope standard(StandardKind kind, std::size_t n)
{
    if (n == 0)
        throw std::invalid_argument("standard polytope needs n >= 1");
    VRep verts;
    HRep h;
    const auto unit = [n](std::size_t i, long s) {
        QVector e(n, Rational(0));
        e[i] = s;
        return e;
    };
    switch (kind) {
    case StandardKind::simplex: {
        verts.push_back(QVector(n, Rational(0)));
        for (std::size_t i = 0; i < n; ++i) {
            verts.push_back(unit(i, 1));
            h.inequalities.push_back({unit(i, -1), Rational(0)});
        }
        h.inequalities.push_back({QVector(n, Rational(1)), Rational(1)});
        break;
    }
    case StandardKind::cube: {
        for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
            QVector v(n);
            for (std::size_t i = 0; i < n; ++i)
                v[i] = (mask >> i) & 1 ? 1 : -1;
            verts.push_back(std::move(v));
        }
        for (std::size_t i = 0; i < n; ++i) {
            h.inequalities.push_back({unit(i, 1), Rational(1)});
            h.inequalities.push_back({unit(i, -1), Rational(1)});
        }
        break;
    }
    case StandardKind::crosspolytope: {
        for (std::size_t i = 0; i < n; ++i) {
            verts.push_back(unit(i, 1));
            verts.push_back(unit(i, -1));
        }
        for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
            QVector s(n);
            for (std::size_t i = 0; i < n; ++i)
                s[i] = (mask >> i) & 1 ? 1 : -1;
            h.inequalities.push_back({std::move(s), Rational(1)});
        }
        break;
    }
    }
    return Polytope::from_both(n, std::move(verts), std::move(h));
}

Polytope polar_dual(const Polytope& p)
{
    const std::size_t d = p.ambient_dim();
    if (!p.is_full_dimensional())
        throw std::invalid_argument("polar_dual: polytope is not full-dimensional");
    VRep verts;
    for (const auto& f : p.facets()) {
        if (f.offset.sign() <= 0)
            throw std::invalid_argument("polar_dual: origin is not an interior point");
        verts.push_back(scale(Rational(1) / f.offset, f.normal));
    }
    HRep h;
    for (const auto& v : p.vertices())
        h.inequalities.push_back(normalize_inequality(v, Rational(1)));
    return Polytope::from_both(d, std::move(verts), std::move(h));
}

Polytope intersect(const Polytope& p, const Polytope& q)
{
    if (p.ambient_dim() != q.ambient_dim())
        throw std::invalid_argument("intersect: ambient dimension mismatch");
    HRep h = p.hrep();
    const HRep& hq = q.hrep();
    h.inequalities.insert(h.inequalities.end(), hq.inequalities.begin(), hq.inequalities.end());
    h.equations.insert(h.equations.end(), hq.equations.begin(), hq.equations.end());
    return Polytope::from_hrep(p.ambient_dim(), std::move(h));
}

namespace {

// Image under x -> s x + t with s = +-1 or a positive scalar.
Polytope affine_image(const Polytope& p, const Rational& s, const QVector& t)
{
    const std::size_t d = p.ambient_dim();
    VRep verts;
    for (const auto& v : p.vertices())
        verts.push_back(add(scale(s, v), t));
    if (p.is_empty())
        return Polytope::empty(d);
    const HRep& src = p.hrep();
    HRep h;
    // a . x <= b  becomes  a . y <= s b + a . t  for s > 0; normals flip for s < 0.
    for (const auto& f : src.inequalities) {
        QVector normal = s.sign() < 0 ? scale(Rational(-1), f.normal) : f.normal;
        Rational offset = abs(s) * f.offset + dot(normal, t);
        h.inequalities.push_back(normalize_inequality(normal, offset));
    }
    for (const auto& e : src.equations)
        h.equations.push_back({e.normal, s * e.offset + dot(e.normal, t)});
    return Polytope::from_both(d, std::move(verts), std::move(h));
}

} // namespace

Polytope translate(const Polytope& p, const QVector& t)
{
    if (t.size() != p.ambient_dim())
        throw std::invalid_argument("translate: dimension mismatch");
    return affine_image(p, Rational(1), t);
}

Polytope negate(const Polytope& p)
{
    return affine_image(p, Rational(-1), QVector(p.ambient_dim(), Rational(0)));
}

Polytope dilate(const Polytope& p, const Rational& lambda)
{
    const QVector zero(p.ambient_dim(), Rational(0));
    if (lambda.is_zero())
        return p.is_empty() ? Polytope::empty(p.ambient_dim()) : Polytope::from_vertices(p.ambient_dim(), {zero});
    return affine_image(p, lambda, zero);
}

Polytope bipyramid(const Polytope& p)
{
    const std::size_t n = p.ambient_dim();
    std::vector<QVector> pts;
    for (const auto& v : p.vertices()) {
        QVector w(v);
        w.push_back(0);
        pts.push_back(std::move(w));
    }
    for (long s : {1L, -1L}) {
        QVector apex(n + 1, Rational(0));
        apex[n] = s;
        pts.push_back(std::move(apex));
    }
    return Polytope::from_points(n + 1, pts);
}

Polytope product(const Polytope& p, const Polytope& q)
{
    const std::size_t dp = p.ambient_dim(), dq = q.ambient_dim();
    if (p.is_empty() || q.is_empty())
        return Polytope::empty(dp + dq);
    VRep verts;
    for (const auto& v : p.vertices())
        for (const auto& w : q.vertices()) {
            QVector x(v);
            x.insert(x.end(), w.begin(), w.end());
            verts.push_back(std::move(x));
        }
    HRep h;
    const auto lift = [&](const Hyperplane& f, bool first) {
        QVector normal(dp + dq, Rational(0));
        std::copy(f.normal.begin(), f.normal.end(), normal.begin() + (first ? 0 : dp));
        return Hyperplane{std::move(normal), f.offset};
    };
    for (const auto& f : p.hrep().inequalities)
        h.inequalities.push_back(lift(f, true));
    for (const auto& f : q.hrep().inequalities)
        h.inequalities.push_back(lift(f, false));
    for (const auto& e : p.hrep().equations)
        h.equations.push_back(lift(e, true));
    for (const auto& e : q.hrep().equations)
        h.equations.push_back(lift(e, false));
    return Polytope::from_both(dp + dq, std::move(verts), std::move(h));
}

// --- Queries --------------------------------------------------------------

int dimension(const Polytope& p)
{
    return p.dim();
}

bool contains(const Polytope& p, const QVector& x)
{
    if (p.is_empty())
        return false;
    const HRep& h = p.hrep();
    if (!satisfies_equations(h, x))
        return false;
    for (const auto& f : h.inequalities)
        if (dot(f.normal, x) > f.offset)
            return false;
    return true;
}

bool contains_interior(const Polytope& p, const QVector& x)
{
    if (p.is_empty())
        return false;
    const HRep& h = p.hrep();
    if (!satisfies_equations(h, x))
        return false;
    for (const auto& f : h.inequalities)
        if (dot(f.normal, x) >= f.offset)
            return false;
    return true;
}

IncidenceMatrix vertex_facet_incidence(const Polytope& p)
{
    const auto& verts = p.vertices();
    const auto& facets = p.facets();
    IncidenceMatrix m(verts.size(), std::vector<bool>(facets.size()));
    for (std::size_t v = 0; v < verts.size(); ++v)
        for (std::size_t f = 0; f < facets.size(); ++f)
            m[v][f] = dot(facets[f].normal, verts[v]) == facets[f].offset;
    return m;
}

namespace {

class IncidenceMatcher
{
public:
    IncidenceMatcher(const IncidenceMatrix& a, const IncidenceMatrix& b)
        : a_(a), b_(b), nv_(a.size()), nf_(nv_ ? a[0].size() : 0)
    {
        common_a_ = common_counts(a_);
        common_b_ = common_counts(b_);
        facets_a_ = facet_sets(a_);
        facets_b_ = facet_sets(b_);
        std::sort(facets_b_.begin(), facets_b_.end());
        order_ = search_order();
        map_.assign(nv_, nv_);
        used_.assign(nv_, false);
    }

    bool run() { return extend(0); }

private:
    static std::vector<std::vector<int>> common_counts(const IncidenceMatrix& m)
    {
        std::vector<std::vector<int>> c(m.size(), std::vector<int>(m.size()));
        for (std::size_t i = 0; i < m.size(); ++i)
            for (std::size_t j = 0; j < m.size(); ++j)
                for (std::size_t f = 0; f < m[i].size(); ++f)
                    c[i][j] += m[i][f] && m[j][f];
        return c;
    }

    static std::vector<std::vector<std::size_t>> facet_sets(const IncidenceMatrix& m)
    {
        const std::size_t nf = m.empty() ? 0 : m[0].size();
        std::vector<std::vector<std::size_t>> out(nf);
        for (std::size_t f = 0; f < nf; ++f)
            for (std::size_t v = 0; v < m.size(); ++v)
                if (m[v][f])
                    out[f].push_back(v);
        return out;
    }

    // Grow the order so each vertex shares facets with as many placed ones as possible.
    std::vector<std::size_t> search_order() const
    {
        std::vector<std::size_t> order;
        std::vector<bool> placed(nv_, false);
        for (std::size_t step = 0; step < nv_; ++step) {
            std::size_t best = nv_;
            int best_score = -1;
            for (std::size_t v = 0; v < nv_; ++v) {
                if (placed[v])
                    continue;
                int score = 0;
                for (auto u : order)
                    score += common_a_[u][v] > 0;
                if (score > best_score) {
                    best = v;
                    best_score = score;
                }
            }
            placed[best] = true;
            order.push_back(best);
        }
        return order;
    }

    bool extend(std::size_t depth)
    {
        if (depth == nv_)
            return facets_match();
        const std::size_t v = order_[depth];
        for (std::size_t w = 0; w < nv_; ++w) {
            if (used_[w] || common_b_[w][w] != common_a_[v][v])
                continue;
            bool ok = true;
            for (std::size_t d = 0; d < depth && ok; ++d) {
                const std::size_t u = order_[d];
                ok = common_a_[u][v] == common_b_[map_[u]][w];
            }
            if (!ok)
                continue;
            map_[v] = w;
            used_[w] = true;
            if (extend(depth + 1))
                return true;
            used_[w] = false;
            map_[v] = nv_;
        }
        return false;
    }

    bool facets_match() const
    {
        std::vector<std::vector<std::size_t>> mapped;
        mapped.reserve(nf_);
        for (const auto& f : facets_a_) {
            std::vector<std::size_t> img;
            for (auto v : f)
                img.push_back(map_[v]);
            std::sort(img.begin(), img.end());
            mapped.push_back(std::move(img));
        }
        std::sort(mapped.begin(), mapped.end());
        return mapped == facets_b_;
    }

    const IncidenceMatrix& a_;
    const IncidenceMatrix& b_;
    std::size_t nv_, nf_;
    std::vector<std::vector<int>> common_a_, common_b_;
    std::vector<std::vector<std::size_t>> facets_a_, facets_b_;
    std::vector<std::size_t> order_, map_;
    std::vector<bool> used_;
};

std::vector<std::size_t> sorted_degrees(const IncidenceMatrix& m, bool by_row)
{
    const std::size_t nr = m.size(), nc = nr ? m[0].size() : 0;
    std::vector<std::size_t> deg(by_row ? nr : nc, 0);
    for (std::size_t r = 0; r < nr; ++r)
        for (std::size_t c = 0; c < nc; ++c)
            if (m[r][c])
                ++deg[by_row ? r : c];
    std::sort(deg.begin(), deg.end());
    return deg;
}

} // namespace

bool combinatorially_equal(const IncidenceMatrix& a, const IncidenceMatrix& b)
{
    if (a.size() > kIsomorphismVertexLimit || b.size() > kIsomorphismVertexLimit)
        throw std::length_error("combinatorial comparison limited to 200 vertices; compare counts instead");
    if (a.size() != b.size())
        return false;
    if (a.empty())
        return true;
    if (a[0].size() != b[0].size())
        return false;
    if (sorted_degrees(a, true) != sorted_degrees(b, true) || sorted_degrees(a, false) != sorted_degrees(b, false))
        return false;
    return IncidenceMatcher(a, b).run();
}

bool combinatorially_equal(const Polytope& p, const Polytope& q)
{
    if (p.vertices().size() > kIsomorphismVertexLimit || q.vertices().size() > kIsomorphismVertexLimit)
        throw std::length_error("combinatorial comparison limited to 200 vertices; compare counts instead");
    return combinatorially_equal(vertex_facet_incidence(p), vertex_facet_incidence(q));
}

} // namespace hompoly
