#ifndef HOMPOLY_POLYTOPE_HPP
#define HOMPOLY_POLYTOPE_HPP

#include <cstddef>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hompoly/linalg.hpp"

namespace hompoly {

/// normal . x <= offset
using Inequality = Hyperplane;

struct HRep
{
    std::vector<Inequality> inequalities;
    std::vector<Hyperplane> equations; // normal . x = offset
    friend bool operator==(const HRep&, const HRep&) = default;
};

/// Vertices in canonical (lexicographic) order.
using VRep = std::vector<QVector>;

enum class StandardKind { simplex, cube, crosspolytope };

std::string to_string(StandardKind kind);
StandardKind parse_standard_kind(const std::string& name);

class UnboundedError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

/**
 * A bounded convex polytope in R^d holding a vertex list, an inequality
 * system, or both. Missing representations are filled in on first access;
 * the fill-in runs once and is safe under concurrent readers, so copies
 * share it.
 */
class Polytope
{
public:
    /// Trusted constructor: `vertices` must already be irredundant.
    static Polytope from_vertices(std::size_t ambient_dim, VRep vertices);
    /// Convex hull of arbitrary points; interior and repeated points are dropped.
    static Polytope from_points(std::size_t ambient_dim, const std::vector<QVector>& points);
    /// The inequality system may be redundant; hrep() returns an irredundant one.
    static Polytope from_hrep(std::size_t ambient_dim, HRep hrep);
    static Polytope from_both(std::size_t ambient_dim, VRep vertices, HRep irredundant);
    static Polytope empty(std::size_t ambient_dim);

    std::size_t ambient_dim() const { return ambient_dim_; }
    const VRep& vertices() const;
    /// Irredundant facets and a full-row-rank equation system.
    const HRep& hrep() const;
    const std::vector<Inequality>& facets() const { return hrep().inequalities; }
    /// -1 for the empty polytope.
    int dim() const;
    bool is_empty() const { return vertices().empty(); }
    bool is_full_dimensional() const { return dim() == static_cast<int>(ambient_dim_); }

    bool has_vertices() const;
    bool has_irredundant_hrep() const;

private:
    struct State;
    explicit Polytope(std::size_t ambient_dim);

    std::size_t ambient_dim_;
    std::shared_ptr<State> state_;
};

Polytope standard(StandardKind kind, std::size_t n);

/// Exact vertex enumeration by double description. Throws UnboundedError.
VRep hrep_to_vrep(const HRep& hrep, std::size_t ambient_dim);
/// Irredundant facets plus affine-hull equations of conv(vertices).
HRep vrep_to_hrep(const VRep& vertices);

Polytope polar_dual(const Polytope& p);
Polytope intersect(const Polytope& p, const Polytope& q);
Polytope translate(const Polytope& p, const QVector& t);
Polytope negate(const Polytope& p);
Polytope dilate(const Polytope& p, const Rational& lambda);
Polytope bipyramid(const Polytope& p);
Polytope product(const Polytope& p, const Polytope& q);

int dimension(const Polytope& p);
/// Interior relative to the affine hull.
bool contains_interior(const Polytope& p, const QVector& x);
bool contains(const Polytope& p, const QVector& x);

/// rows = vertices, cols = facets, both in canonical order.
using IncidenceMatrix = std::vector<std::vector<bool>>;
IncidenceMatrix vertex_facet_incidence(const Polytope& p);

inline constexpr std::size_t kIsomorphismVertexLimit = 200;

/**
 * Whether the vertex-facet incidences agree up to row and column
 * permutations. Backtracking over vertex assignments, pruned by degree and
 * by pairwise common-facet counts. Throws std::length_error past
 * kIsomorphismVertexLimit vertices.
 */
bool combinatorially_equal(const Polytope& p, const Polytope& q);
bool combinatorially_equal(const IncidenceMatrix& a, const IncidenceMatrix& b);

/// Lexicographic order on coordinates.
bool lex_less(const QVector& a, const QVector& b);
void canonical_sort(VRep& vertices);
void canonical_sort(std::vector<Inequality>& inequalities);

} // namespace hompoly

#endif // HOMPOLY_POLYTOPE_HPP
