#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "latpoly/linalg.hpp"

namespace latpoly {

/// The closed halfspace <normal, x> <= offset.
struct Halfspace {
  IntVector normal;
  Integer offset;

  friend bool operator==(const Halfspace&, const Halfspace&) = default;
  friend bool operator<(const Halfspace& a, const Halfspace& b) {
    if (a.normal != b.normal) return a.normal < b.normal;
    return a.offset < b.offset;
  }
};

/// The affine hyperplane <normal, x> == offset.
struct Hyperplane {
  IntVector normal;
  Integer offset;

  friend bool operator==(const Hyperplane&, const Hyperplane&) = default;
};

/**
 * A convex lattice polytope in R^n stored with both descriptions.
 *
 * Vertices are the extreme points in lexicographic order. Facets are
 * <u, x> <= c with u primitive, sorted lexicographically. When the polytope
 * is not full-dimensional the facets only describe it together with the
 * affine-hull equations, and a lattice chart x = origin + sum y_i b_i
 * (b_i a basis of the saturated direction lattice) identifies the affine
 * hull with Z^dim.
 *
 * Immutable once built; all derived data is computed at construction.
 */
class LatticePolytope {
 public:
  /// Convex hull of a nonempty list of equal-length integer points.
  static LatticePolytope fromVertices(const std::vector<IntVector>& points);

  /**
   * Intersection of halfspaces and hyperplanes. Throws UnboundedPolytopeError,
   * EmptyPolytopeError, or NonLatticeVertexError when the result is not a
   * nonempty lattice polytope.
   */
  static LatticePolytope fromInequalities(const std::vector<Halfspace>& halfspaces,
                                          const std::vector<Hyperplane>& equations = {});

  std::size_t ambientDim() const noexcept { return ambientDim_; }
  int dim() const noexcept { return dim_; }
  bool isFullDimensional() const noexcept {
    return static_cast<std::size_t>(dim_) == ambientDim_;
  }

  const std::vector<IntVector>& vertices() const noexcept { return vertices_; }
  const std::vector<Halfspace>& facets() const noexcept { return facets_; }
  const std::vector<Hyperplane>& equations() const noexcept { return equations_; }

  /// Vertex index pairs (i < j) spanning the edges, sorted.
  const std::vector<std::pair<std::size_t, std::size_t>>& edges() const noexcept {
    return edges_;
  }
  /// Indices of the facets tight at each vertex.
  const std::vector<std::vector<std::size_t>>& vertexFacets() const noexcept {
    return vertexFacets_;
  }

  bool contains(const IntVector& x) const;
  std::optional<std::size_t> vertexIndex(const IntVector& v) const;

  // Lattice chart of the affine hull.
  const IntVector& chartOrigin() const noexcept { return chartOrigin_; }
  const std::vector<IntVector>& chartBasis() const noexcept { return chartBasis_; }
  /// Coordinates of a lattice point of the affine hull in the chart.
  IntVector toChart(const IntVector& x) const;
  IntVector fromChart(const IntVector& y) const;
  /// Facets expressed in chart coordinates (same order as facets()).
  const std::vector<Halfspace>& chartFacets() const noexcept { return chartFacets_; }

  friend bool operator==(const LatticePolytope& a, const LatticePolytope& b) {
    return a.ambientDim_ == b.ambientDim_ && a.vertices_ == b.vertices_;
  }

 private:
  LatticePolytope() = default;

  std::size_t ambientDim_ = 0;
  int dim_ = 0;
  std::vector<IntVector> vertices_;
  std::vector<Halfspace> facets_;
  std::vector<Hyperplane> equations_;
  std::vector<std::pair<std::size_t, std::size_t>> edges_;
  std::vector<std::vector<std::size_t>> vertexFacets_;

  IntVector chartOrigin_;
  std::vector<IntVector> chartBasis_;       // dim vectors in Z^n
  std::vector<IntVector> chartProjection_;  // dim x n left inverse of the basis
  std::vector<Halfspace> chartFacets_;
};

/// A nonempty face given by the vertices it contains.
struct Face {
  std::vector<std::size_t> vertexIndices;  // sorted
  int dim = 0;
  std::vector<std::size_t> tightFacets;  // sorted

  friend bool operator==(const Face&, const Face&) = default;
};

/// All lattice points, lexicographically ordered.
std::vector<IntVector> latticePoints(const LatticePolytope& p);

/// All faces of dimension d, ordered by vertex index lists.
std::vector<Face> facesOfDim(const LatticePolytope& p, int d);

/**
 * The face whose vertices are exactly `vertexIndices`; throws NotAFaceError
 * if no face has that vertex set.
 */
Face faceFromVertices(const LatticePolytope& p, std::vector<std::size_t> vertexIndices);

/// Primitive generators of the edges leaving vertex v, sorted.
std::vector<IntVector> primitiveEdgeDirections(const LatticePolytope& p, const IntVector& v);

/// Same polytope written in its own chart, i.e. full-dimensional in Z^dim.
LatticePolytope intrinsicPolytope(const LatticePolytope& p);

/// True iff every vertex has dim edges whose primitive directions form a
/// lattice basis (checked inside the affine hull for lower-dimensional input).
bool isSmooth(const LatticePolytope& p);
/// Smoothness at a single vertex (index into vertices()).
bool isSmoothAt(const LatticePolytope& p, std::size_t vertex);

struct LatticeWidth {
  Integer width;
  /// Primitive, first nonzero coordinate positive.
  IntVector direction;
};

/**
 * Minimum spread max<u,P> - min<u,P> over primitive u with max-norm at most
 * `searchBound`. Only directions whose first nonzero coordinate is positive
 * are scanned (u and -u have equal spread); ties go to the lexicographically
 * smallest direction. An upper bound for the lattice width, exact when a
 * minimizer lies in the box.
 */
LatticeWidth latticeWidth(const LatticePolytope& p, const Integer& searchBound);

/// Canonical representative of the affine unimodular class; full-dimensional only.
LatticePolytope normalForm(const LatticePolytope& p);

/// Twice the area, i.e. the degree of the polarized surface. dim 2 only.
Rational normalizedVolume2D(const LatticePolytope& p);

LatticePolytope dilate(const LatticePolytope& p, const Integer& factor);

/// The image x -> linear * x + translation.
LatticePolytope transformed(const LatticePolytope& p, const IntMatrix& linear,
                            const IntVector& translation);

}  // namespace latpoly
