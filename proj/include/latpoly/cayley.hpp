#pragma once

#include <optional>
#include <vector>

#include "latpoly/polytope.hpp"

namespace latpoly {

/// A lattice functional taking exactly two consecutive values on P.
struct CayleyStructure {
  IntVector functional;
  Integer offset;
  /// Lattice points with <u, x> == offset, resp. offset + 1 (sorted).
  std::vector<IntVector> lowerSlice;
  std::vector<IntVector> upperSlice;
};

/**
 * A width-one functional of a full-dimensional polytope, if one exists.
 *
 * Any such functional is determined by its 0/1 values on n+1 affinely
 * independent lattice points of P, so trying every 0/1 assignment on a fixed
 * such set is a complete search. Throws DimensionError for lower-dimensional
 * input.
 */
std::optional<CayleyStructure> isCayley(const LatticePolytope& p);

/**
 * conv(P_0 x {0}, P_1 x {s e_1}, ..., P_{m-1} x {s e_{m-1}}) in R^(d+m-1).
 * Needs m >= 2 polytopes of equal ambient dimension and s >= 1.
 */
LatticePolytope cayleySum(const std::vector<LatticePolytope>& polytopes, const Integer& scale = 1);

/**
 * Cut the face q off a full-dimensional polytope by the halfspace whose
 * normal is the sum of the facet normals through q, moved inwards by k.
 *
 * Requires P smooth at every vertex of q (NonSmoothError otherwise) and a
 * cut that keeps every vertex of P outside q (InvalidBlowUpDepth otherwise).
 */
LatticePolytope toricBlowUp(const LatticePolytope& p, const Face& q, const Integer& k);

}  // namespace latpoly
