#ifndef HOMPOLY_EXPERIMENTS_HPP
#define HOMPOLY_EXPERIMENTS_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

#include "hompoly/polytope.hpp"

namespace hompoly {

/**
 * 64-bit linear congruential generator with the MMIX constants.
 * draw() advances the state, then maps it to a rational in [-1, 1]:
 * ((state >> 11) mod (2^21 + 1) - 2^20) / 2^20.
 */
class SeededGenerator
{
public:
    static constexpr std::uint64_t kMultiplier = 6364136223846793005ULL;
    static constexpr std::uint64_t kIncrement = 1442695040888963407ULL;

    explicit SeededGenerator(std::uint64_t seed) : state_(seed) {}

    std::uint64_t state() const { return state_; }
    std::uint64_t advance() { return state_ = state_ * kMultiplier + kIncrement; }
    Rational draw();
    QVector draw_vector(std::size_t dim);

private:
    std::uint64_t state_;
};

inline const Rational kDefaultEpsilon{1, 1000};
inline constexpr std::size_t kMaxRedraws = 16;
inline constexpr std::size_t kMaxTableDimension = 8;

struct PerturbedCount
{
    std::size_t count = 0;
    std::size_t draws = 0; // 1 unless a draw had to be rejected
    QVector center;        // z
};

/// simplex_n intersected with 2z - simplex_n, z = barycenter + eps * d.
Polytope symmetric_intersection(std::size_t n, const QVector& z);

/**
 * Vertex count of simplex_n cap (2z - simplex_n) for z the barycenter
 * moved by eps times a generator draw. Draws whose intersection is not
 * full-dimensional are rejected; std::runtime_error after kMaxRedraws.
 */
PerturbedCount perturbed_barycenter(std::size_t n, std::uint64_t seed, const Rational& eps = kDefaultEpsilon);
std::size_t perturbed_barycenter_count(std::size_t n, std::uint64_t seed, const Rational& eps = kDefaultEpsilon);

/// Vertex count of the intersection of two random n-simplices (may be 0).
std::size_t random_simplex_intersection_count(std::size_t n, std::uint64_t seed);

struct TableRow
{
    std::size_t n = 0;
    std::size_t perturbed = 0;
    std::size_t random = 0;
    Integer bound;
    double percentage = 0; // display only: 100 * perturbed / bound
};

/**
 * Rows n_min..n_max; row n uses seed + n. Requires
 * 3 <= n_min <= n_max <= kMaxTableDimension.
 */
std::vector<TableRow> reproduce_table(std::size_t n_min, std::size_t n_max, std::uint64_t seed,
                                      const Rational& eps = kDefaultEpsilon, std::size_t threads = 1);

} // namespace hompoly

#endif // HOMPOLY_EXPERIMENTS_HPP
