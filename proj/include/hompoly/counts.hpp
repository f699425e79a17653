#ifndef HOMPOLY_COUNTS_HPP
#define HOMPOLY_COUNTS_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hompoly/group.hpp"
#include "hompoly/rational.hpp"

namespace hompoly {

Integer binomial(long n, long k);
Integer factorial(long n);

/// Stirling numbers of the second kind by the triangle recurrence.
Integer stirling2(std::size_t m, std::size_t n);
/// Surjections {1..m} -> {1..n}, as n! S(m,n).
Integer surjections(std::size_t m, std::size_t n);
/// sum_j (-1)^(n-j) C(n,j) j^m, computed independently of the recurrence.
Integer surjections_inclusion_exclusion(std::size_t m, std::size_t n);
/// Maps {1..m} -> {+-1..+-n} whose absolute values cover {1..n}: 2^m n! S(m,n).
Integer sigma(std::size_t m, std::size_t n);

inline constexpr std::size_t kMaxTupleDimension = 5;

/**
 * V(n): ordered (n+1)-tuples of cube vertices whose convex hull is an
 * n-simplex with the origin in its interior. With `rooted`, only tuples
 * whose first entry is (-1,...,-1) are returned; there are |V(n)| / 2^n of
 * them since BC_n is transitive on cube vertices.
 * Throws std::length_error for n > kMaxTupleDimension.
 */
std::vector<VertexTuple> enumerate_V(std::size_t n, bool rooted = false);

/// Whether 0 lies strictly inside conv(t) and conv(t) is a full simplex.
bool origin_strictly_inside(const VertexTuple& t);

struct BetaResult
{
    std::size_t n = 0;
    Integer tuples;       // |V(n)|
    std::size_t orbits = 0;
    bool rooted = false;  // orbits counted on rooted tuples under the stabilizer
};

/**
 * Orbit count of BC_n on V(n), checked against |V(n)| / (2^n n!).
 * n <= 4 uses the full set; n = 5 uses rooted tuples.
 * Throws std::logic_error if the action is not free.
 */
BetaResult beta(std::size_t n);

struct CountReport
{
    std::string family;
    std::size_t m = 0;
    std::size_t n = 0;
    Integer closed_form;
    std::optional<Integer> enumerated;
    std::optional<bool> agreement;
    std::vector<std::pair<std::string, Integer>> terms;

    void set_enumerated(const Integer& count);
};

/// #vert^(k)(crosspolytope_m, simplex_k) for k >= 4, taken from enumeration.
using HighRankTable = std::map<std::size_t, Integer>;

CountReport count_box_simplex(std::size_t m, std::size_t n);

/// Throws std::invalid_argument naming the first missing k.
CountReport count_diamond_simplex(std::size_t m, std::size_t n, const HighRankTable& table = {});
CountReport count_diamond_diamond(std::size_t m, std::size_t n, const HighRankTable& table = {});

/// The lower bound 2n + 2mn(2n-1) + 2mn(m-1)(n-1) for m, n >= 2.
Integer bound_box_diamond(std::size_t m, std::size_t n);
CountReport count_box_diamond_bound(std::size_t m, std::size_t n);
/// Value quoted in prose for (m,n) = (3,4); the displayed formula gives 320.
inline constexpr long kStatedBoxDiamondBound34 = 316;

/// C(2n+2, n+2).
Integer intersection_bound(std::size_t n);

/// sigma(m,k) beta(k), the lower end of the rank-k sandwich.
Integer rank_lower_bound(std::size_t m, std::size_t k, const Integer& beta_k);
/// 2^k m!/(m-k)! C(2k+2,k+2)^(m-k) beta(k).
Integer rank_upper_bound(std::size_t m, std::size_t k, const Integer& beta_k);

} // namespace hompoly

#endif // HOMPOLY_COUNTS_HPP
