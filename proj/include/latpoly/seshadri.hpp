#pragma once

#include "latpoly/polytope.hpp"

namespace latpoly {

/**
 * Exact bounds lower <= epsilon <= upper for the Seshadri constant of the
 * polarized toric surface of a lattice polygon at a general point.
 *
 * lower is the best s(dP)/d over dilations d, where s is the degree of jet
 * separation at the general point. upper is the lattice width: the fibers of
 * the projection along a width direction give curves through the general
 * point of degree equal to the width and multiplicity one.
 */
struct EpsilonBounds {
  Rational lower;
  Rational upper;
  struct LowerWitness {
    Integer dilation;
    unsigned long jetDegree = 0;
  } lowerWitness;
  struct UpperWitness {
    IntVector direction;
    Integer width;
  } upperWitness;
};

/**
 * Bounds using dilations 1..min(n, maxDilation) and width directions with
 * max-norm at most n. Polygons embedded in a larger space are handled in
 * their own lattice chart. Throws DimensionError unless dim(p) == 2, and
 * InconsistentBoundsError if the lower bound exceeds the upper bound.
 */
EpsilonBounds epsilonBounds(const LatticePolytope& p, const Integer& n,
                            unsigned long maxDilation = 3);

/// sqrt of the self-intersection (normalized area), in floating point. For
/// context only: it is an upper bound that is irrational in general.
double sqrtDegreeDiagnostic(const LatticePolytope& p);

}  // namespace latpoly
