#pragma once

#include <vector>

#include "latpoly/linalg.hpp"

namespace latpoly::detail {

/**
 * Extreme rays of the pointed polyhedral cone {y : A y >= 0}, each scaled to
 * a primitive integer vector, via the double description method with the
 * combinatorial adjacency test.
 *
 * Requires rank(A) == A.cols() (pointed cone). Returns an empty list when
 * the cone is {0}.
 */
std::vector<IntVector> extremeRays(const IntMatrix& constraints);

}  // namespace latpoly::detail
