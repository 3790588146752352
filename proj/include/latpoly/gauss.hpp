#pragma once

#include <cstddef>
#include <vector>

#include "latpoly/jets.hpp"

namespace latpoly {

struct GaussMapResult {
  unsigned long order = 0;
  /// Raw exponents sigma(S) = sum of the columns of a nonsingular maximal
  /// minor of the generic jet matrix; sorted, distinct.
  std::vector<IntVector> imageExponents;
  /// Exponents of the general fiber in quotient coordinates, translated to
  /// componentwise minimum 0; sorted, distinct.
  std::vector<IntVector> fiberExponents;
  std::size_t imageDim = 0;
  std::size_t fiberDim = 0;
};

/**
 * Image and general fiber of the order-k Gauss map of the monomial
 * embedding given by `a`. Throws GaussMapUndefined when the configuration is
 * not k-jet spanned at the general point.
 */
GaussMapResult gaussMap(const PointConfiguration& a, unsigned long k);

std::vector<IntVector> gaussKImage(const PointConfiguration& a, unsigned long k);
std::vector<IntVector> gaussKFiber(const PointConfiguration& a, unsigned long k);
std::vector<IntVector> gaussImage(const PointConfiguration& a);
std::vector<IntVector> gaussFiber(const PointConfiguration& a);

}  // namespace latpoly
