#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "latpoly/linalg.hpp"
#include "latpoly/polytope.hpp"

namespace latpoly {

/// A finite set of distinct exponent vectors, kept in lexicographic order.
class PointConfiguration {
 public:
  /// Throws DimensionError on length mismatch and InvalidArgument on duplicates.
  PointConfiguration(std::size_t ambientDim, std::vector<IntVector> exponents);

  /// The lattice points of p.
  static PointConfiguration fromPolytope(const LatticePolytope& p);

  std::size_t ambientDim() const noexcept { return ambientDim_; }
  std::size_t size() const noexcept { return exponents_.size(); }
  const std::vector<IntVector>& exponents() const noexcept { return exponents_; }

  friend bool operator==(const PointConfiguration&, const PointConfiguration&) = default;

 private:
  std::size_t ambientDim_;
  std::vector<IntVector> exponents_;
};

/// Either a rational point of the ambient space or the general point of the torus.
class JetPoint {
 public:
  static JetPoint generic() { return JetPoint(); }
  static JetPoint at(RatVector coords) { return JetPoint(std::move(coords)); }

  bool isGeneric() const noexcept { return !coords_.has_value(); }
  /// Only valid for non-generic points.
  const RatVector& coords() const { return coords_.value(); }

 private:
  JetPoint() = default;
  explicit JetPoint(RatVector c) : coords_(std::move(c)) {}
  std::optional<RatVector> coords_;
};

/**
 * Multi-indices u in N^n with |u| <= k, by degree and within one degree in
 * decreasing lexicographic order: (0,0), (1,0), (0,1), (2,0), (1,1), (0,2), ...
 */
std::vector<IntVector> multiIndices(std::size_t n, unsigned long k);

/**
 * Rows: multi-indices u, columns: exponents a. The entry is the coefficient
 * of the u-th partial derivative of x^a at the point, i.e.
 * prod_j (a_j)_{u_j} p_j^(a_j - u_j) with 0^0 = 1. For the generic point the
 * monomial factors are dropped and the entry is prod_j (a_j)_{u_j}.
 */
struct JetMatrix {
  unsigned long order = 0;
  PointConfiguration config;
  JetPoint point;
  std::vector<IntVector> rows;
  RatMatrix entries;
  Integer fullRankTarget;  // binom(n + k, k)
};

/// Throws DimensionError when the point has the wrong length and
/// PointNotInDomain when a Laurent monomial has a pole at the point.
JetMatrix jetMatrix(const PointConfiguration& a, unsigned long k, const JetPoint& p);

bool isJetSpanned(const PointConfiguration& a, unsigned long k, const JetPoint& p);

/**
 * The largest k such that the configuration is k-jet spanned at p. Throws
 * PointNotInDomain when every monomial vanishes at p.
 */
unsigned long degreeOfJetSeparation(const PointConfiguration& a, const JetPoint& p);

/**
 * Degree of jet separation at a smooth vertex, computed in the chart that
 * sends the vertex to the origin and its primitive edge directions to the
 * standard basis. Throws NotAVertexError or NonSmoothError.
 */
unsigned long jetSeparationAtVertex(const LatticePolytope& p, const IntVector& vertex);

}  // namespace latpoly
