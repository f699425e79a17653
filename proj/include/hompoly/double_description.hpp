#ifndef HOMPOLY_DOUBLE_DESCRIPTION_HPP
#define HOMPOLY_DOUBLE_DESCRIPTION_HPP

#include <cstddef>
#include <vector>

#include "hompoly/rational.hpp"

namespace hompoly::dd {

using IntVector = std::vector<Integer>;
using IntMatrix = std::vector<IntVector>;

struct Stats
{
    std::size_t steps = 0;
    std::size_t max_rays = 0;
    std::size_t adjacency_tests = 0;
    bool bigint = false; // true when the 64-bit kernel overflowed and GMP took over
};

struct ConeGenerators
{
    IntMatrix rays;      // primitive extreme rays of the pointed part
    IntMatrix lineality; // basis of the lineality space
    Stats stats;
};

/**
 * Generators of the polyhedral cone {z : row . z >= 0 for every row}.
 *
 * Incremental double description: start from a simplicial cone on `dim`
 * independent rows, then insert the remaining rows one at a time, always
 * taking the row that currently cuts off the fewest rays (ties by index).
 * Two rays are combined only when adjacent, which is decided
 * combinatorially from their zero sets.
 *
 * The rays come back primitive and sorted; the result does not depend on
 * anything but `rows`.
 */
ConeGenerators cone_generators(const IntMatrix& rows, std::size_t dim);

} // namespace hompoly::dd

#endif // HOMPOLY_DOUBLE_DESCRIPTION_HPP
