#include "latpoly/seshadri.hpp"

#include <algorithm>
#include <cmath>

#include "latpoly/jets.hpp"

namespace latpoly {

EpsilonBounds epsilonBounds(const LatticePolytope& p, const Integer& n,
                            unsigned long maxDilation) {
  if (p.dim() != 2) throw DimensionError("Seshadri bounds need a two-dimensional polytope");
  if (n < 1) throw InvalidArgument("search parameter must be at least 1");
  if (maxDilation < 1) throw InvalidArgument("dilation cap must be at least 1");
  const LatticePolytope q = p.isFullDimensional() ? p : intrinsicPolytope(p);

  EpsilonBounds out;
  const unsigned long dilations =
      n.fits_ulong_p() ? std::min(n.get_ui(), maxDilation) : maxDilation;
  for (unsigned long d = 1; d <= dilations; ++d) {
    const auto s = degreeOfJetSeparation(PointConfiguration::fromPolytope(dilate(q, d)),
                                         JetPoint::generic());
    const Rational value{Integer(s), Integer(d)};
    if (d == 1 || value > out.lower) {
      out.lower = value;
      out.lowerWitness = {Integer(d), s};
    }
  }

  const auto width = latticeWidth(q, n);
  out.upper = width.width;
  out.upperWitness = {width.direction, width.width};
  if (out.lower > out.upper)
    throw InconsistentBoundsError("Seshadri lower bound exceeds the upper bound");
  return out;
}

double sqrtDegreeDiagnostic(const LatticePolytope& p) {
  return std::sqrt(normalizedVolume2D(p).get_d());
}

}  // namespace latpoly
