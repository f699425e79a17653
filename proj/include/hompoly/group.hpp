#ifndef HOMPOLY_GROUP_HPP
#define HOMPOLY_GROUP_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "hompoly/linalg.hpp"

namespace hompoly {

/// Integer point, used for vertices of the cube and crosspolytope.
using LatticePoint = std::vector<std::int64_t>;
/// Ordered tuple of points; the group never reorders entries.
using VertexTuple = std::vector<LatticePoint>;

/**
 * Element of the hyperoctahedral group BC_n: a permutation of coordinates
 * combined with sign changes, acting by (g.x)[perm[i]] = signs[i] * x[i].
 * Indices are 0-based.
 */
class SignedPermutation
{
public:
    SignedPermutation(std::vector<std::size_t> perm, std::vector<int> signs);
    static SignedPermutation identity(std::size_t n);

    std::size_t degree() const { return perm_.size(); }
    std::size_t image(std::size_t i) const { return perm_[i]; }
    int sign(std::size_t i) const { return signs_[i]; }

    QVector act(const QVector& x) const;
    LatticePoint act(const LatticePoint& x) const;

    /// (this * h).x == this.(h.x)
    SignedPermutation operator*(const SignedPermutation& h) const;
    SignedPermutation inverse() const;

    friend bool operator==(const SignedPermutation&, const SignedPermutation&) = default;
    friend auto operator<=>(const SignedPermutation&, const SignedPermutation&) = default;

private:
    std::vector<std::size_t> perm_;
    std::vector<int> signs_;
};

inline constexpr std::size_t kMaxGroupDegree = 6;

/// All 2^n n! elements; permutations in lexicographic order, then sign masks.
std::vector<SignedPermutation> enumerate_group(std::size_t n);

/// Elements fixing `point`.
std::vector<SignedPermutation> stabilizer(const std::vector<SignedPermutation>& group, const LatticePoint& point);

QVector act_point(const SignedPermutation& g, const QVector& x);
LatticePoint act_point(const SignedPermutation& g, const LatticePoint& x);
std::vector<QVector> act_tuple(const SignedPermutation& g, const std::vector<QVector>& t);
VertexTuple act_tuple(const SignedPermutation& g, const VertexTuple& t);

struct OrbitCount
{
    std::size_t orbits = 0;
    bool free = false; // every orbit has |group| elements
};

/**
 * Orbits of `group` on `tuples` by union-find over the action.
 * Throws std::invalid_argument when the set is not closed under the group.
 */
OrbitCount orbit_count(const std::vector<VertexTuple>& tuples, const std::vector<SignedPermutation>& group);

} // namespace hompoly

#endif // HOMPOLY_GROUP_HPP
