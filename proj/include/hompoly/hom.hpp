#ifndef HOMPOLY_HOM_HPP
#define HOMPOLY_HOM_HPP

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "hompoly/polytope.hpp"

namespace hompoly {

/// f(x) = A x + b, with A of shape target_dim x source_dim.
struct AffineMapRep
{
    QMatrix A;
    QVector b;

    std::size_t source_dim() const { return A.cols(); }
    std::size_t target_dim() const { return A.rows(); }
    QVector evaluate(const QVector& x) const;

    /// Coordinates (b_1..b_n, A_11..A_1m, A_21.., .., A_nm).
    QVector flatten() const;
    static AffineMapRep unflatten(const QVector& z, std::size_t source_dim, std::size_t target_dim);
    static AffineMapRep constant(const QVector& value, std::size_t source_dim);

    friend bool operator==(const AffineMapRep&, const AffineMapRep&) = default;
};

/// How a polytope was specified; kind "file" carries no standard realization.
struct PolytopeDescriptor
{
    std::string kind;
    std::size_t n = 0;
    std::string path;
};

/**
 * Hom(P, Q) as an inequality system over flattened affine maps: one row
 * u . (A v + b) <= c per vertex v of P and facet (u, c) of Q, ordered
 * vertex-major in the canonical orders of both.
 */
struct HomPolytope
{
    Polytope source;
    Polytope target;
    PolytopeDescriptor source_desc;
    PolytopeDescriptor target_desc;
    HRep hrep;
    std::size_t m = 0; // source dimension
    std::size_t n = 0; // target dimension

    std::size_t ambient_dim() const { return n + n * m; }
    /// (vertex index, facet index) that produced inequality `row`.
    std::pair<std::size_t, std::size_t> pair_of(std::size_t row) const;
};

HomPolytope build_hom(const Polytope& source, const Polytope& target);

std::vector<AffineMapRep> enumerate_vertex_maps(const HomPolytope& hom);

/// Active-set rank certificate. Throws std::invalid_argument if f(P) is not inside Q.
bool is_vertex_map(const AffineMapRep& f, const HomPolytope& hom);
bool is_vertex_map(const AffineMapRep& f, const Polytope& source, const Polytope& target);

std::size_t map_rank(const AffineMapRep& f);
std::map<std::size_t, std::size_t> rank_histogram(const std::vector<AffineMapRep>& maps);

Polytope image_polytope(const AffineMapRep& f, const Polytope& source);
/// f(0), the image of the origin.
QVector eval_center(const AffineMapRep& f);

/// f composed with the embedding of the sub-crosspolytope on `indices` (0-based).
AffineMapRep restrict_to_subcrosspolytope(const AffineMapRep& f, const std::vector<std::size_t>& indices);

/// Explicit vertex set of Hom(cube_m, simplex_n) in R^{n+nm}; coordinate of
/// e_{ik} is n + i*m + k (0-based).
VRep bt_realization(std::size_t m, std::size_t n);

} // namespace hompoly

#endif // HOMPOLY_HOM_HPP
