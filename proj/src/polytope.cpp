#include "latpoly/polytope.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "double_description.hpp"

namespace latpoly {

namespace {

IntVector zeros(std::size_t n) { return IntVector(n, Integer(0)); }

std::vector<IntVector> identityRows(std::size_t n) {
  std::vector<IntVector> rows(n, zeros(n));
  for (std::size_t i = 0; i < n; ++i) rows[i][i] = 1;
  return rows;
}

IntVector applyRows(const std::vector<IntVector>& rows, const IntVector& x) {
  IntVector y;
  y.reserve(rows.size());
  for (const auto& r : rows) y.push_back(dot(r, x));
  return y;
}

// Facets of the full-dimensional hull of `points` in Z^r (r >= 1).
std::vector<Halfspace> hullFacets(const std::vector<IntVector>& points, std::size_t r) {
  IntMatrix cone(points.size(), r + 1);
  for (std::size_t i = 0; i < points.size(); ++i) {
    cone(i, 0) = 1;
    for (std::size_t j = 0; j < r; ++j) cone(i, j + 1) = -points[i][j];
  }
  std::vector<Halfspace> facets;
  for (auto& ray : detail::extremeRays(cone)) {
    IntVector u(ray.begin() + 1, ray.end());
    Integer c = ray[0];
    const Integer g = content(u);
    for (auto& x : u) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
    mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    facets.push_back({std::move(u), std::move(c)});
  }
  return facets;
}

std::size_t normalRank(const std::vector<Halfspace>& facets,
                       const std::vector<std::size_t>& which, std::size_t dim) {
  if (which.empty()) return 0;
  IntMatrix m(which.size(), dim);
  for (std::size_t i = 0; i < which.size(); ++i)
    for (std::size_t j = 0; j < dim; ++j) m(i, j) = facets[which[i]].normal[j];
  return rank(m);
}

std::vector<std::size_t> intersectSorted(const std::vector<std::size_t>& a,
                                         const std::vector<std::size_t>& b) {
  std::vector<std::size_t> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

int affineDim(const LatticePolytope& p, const std::vector<std::size_t>& vertexIndices) {
  if (vertexIndices.size() <= 1) return 0;
  const auto& v = p.vertices();
  const auto& base = v[vertexIndices.front()];
  IntMatrix diffs(vertexIndices.size() - 1, p.ambientDim());
  for (std::size_t i = 1; i < vertexIndices.size(); ++i)
    for (std::size_t j = 0; j < p.ambientDim(); ++j)
      diffs(i - 1, j) = v[vertexIndices[i]][j] - base[j];
  return static_cast<int>(rank(diffs));
}

// Vertices lying on every facet in `tight` (all vertices when empty).
std::vector<std::size_t> verticesOn(const LatticePolytope& p,
                                    const std::vector<std::size_t>& tight) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < p.vertices().size(); ++i)
    if (std::includes(p.vertexFacets()[i].begin(), p.vertexFacets()[i].end(),
                      tight.begin(), tight.end()))
      out.push_back(i);
  return out;
}

std::vector<std::size_t> facetsContaining(const LatticePolytope& p,
                                          const std::vector<std::size_t>& vertexIndices) {
  if (vertexIndices.empty()) return {};
  std::vector<std::size_t> tight = p.vertexFacets()[vertexIndices.front()];
  for (std::size_t i = 1; i < vertexIndices.size(); ++i)
    tight = intersectSorted(tight, p.vertexFacets()[vertexIndices[i]]);
  return tight;
}

// Ordered tuples of `count` distinct indices below `n`.
void orderedTuples(std::size_t n, std::size_t count, std::vector<std::size_t>& current,
                   std::vector<bool>& used, std::vector<std::vector<std::size_t>>& out) {
  if (current.size() == count) {
    out.push_back(current);
    return;
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (used[i]) continue;
    used[i] = true;
    current.push_back(i);
    orderedTuples(n, count, current, used, out);
    current.pop_back();
    used[i] = false;
  }
}

}  // namespace

LatticePolytope LatticePolytope::fromVertices(const std::vector<IntVector>& points) {
  if (points.empty()) throw InvalidArgument("cannot build a polytope from no points");
  const std::size_t n = points.front().size();
  for (const auto& p : points)
    if (p.size() != n) throw DimensionError("points have different lengths");

  std::vector<IntVector> pts = points;
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

  LatticePolytope poly;
  poly.ambientDim_ = n;

  std::vector<IntVector> diffs;
  for (std::size_t i = 1; i < pts.size(); ++i) diffs.push_back(pts[i] - pts[0]);
  auto basis = saturate(diffs, n);
  const std::size_t r = basis.size();
  poly.dim_ = static_cast<int>(r);

  if (r == n) {
    poly.chartOrigin_ = zeros(n);
    poly.chartBasis_ = identityRows(n);
    poly.chartProjection_ = identityRows(n);
  } else {
    // A saturated basis B has Hermite form [I; 0] as a column matrix, so the
    // transform U gives both a left inverse (top rows) and the equations of
    // the affine hull (bottom rows).
    const auto hnf = hermiteNormalForm(IntMatrix::fromColumns(basis, n));
    poly.chartOrigin_ = pts[0];
    poly.chartBasis_ = basis;
    for (std::size_t i = 0; i < r; ++i)
      poly.chartProjection_.push_back(hnf.transform.rowVector(i));
    IntMatrix eq(n - r, n);
    for (std::size_t i = r; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) eq(i - r, j) = hnf.transform(i, j);
    for (auto& normal : hermiteBasis(eq)) {
      Integer offset = dot(normal, pts[0]);
      poly.equations_.push_back({std::move(normal), std::move(offset)});
    }
  }

  std::vector<IntVector> chartPoints;
  chartPoints.reserve(pts.size());
  for (const auto& p : pts) chartPoints.push_back(poly.toChart(p));

  std::vector<Halfspace> chartFacets;
  if (r > 0) chartFacets = hullFacets(chartPoints, r);

  // Ambient form of each chart facet: <u', P(x - o)> <= c'.
  std::vector<std::pair<Halfspace, Halfspace>> paired;
  for (auto& cf : chartFacets) {
    IntVector u = zeros(n);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < n; ++j) u[j] += cf.normal[i] * poly.chartProjection_[i][j];
    Integer c = cf.offset + dot(u, poly.chartOrigin_);
    paired.push_back({Halfspace{std::move(u), std::move(c)}, std::move(cf)});
  }
  std::sort(paired.begin(), paired.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  for (auto& [amb, chart] : paired) {
    poly.facets_.push_back(std::move(amb));
    poly.chartFacets_.push_back(std::move(chart));
  }

  for (std::size_t i = 0; i < pts.size(); ++i) {
    std::vector<std::size_t> tight;
    for (std::size_t f = 0; f < poly.chartFacets_.size(); ++f)
      if (dot(poly.chartFacets_[f].normal, chartPoints[i]) == poly.chartFacets_[f].offset)
        tight.push_back(f);
    if (normalRank(poly.chartFacets_, tight, r) == r) {
      poly.vertices_.push_back(pts[i]);
      poly.vertexFacets_.push_back(std::move(tight));
    }
  }

  const std::size_t nv = poly.vertices_.size();
  for (std::size_t i = 0; i < nv; ++i)
    for (std::size_t j = i + 1; j < nv; ++j) {
      const auto common = intersectSorted(poly.vertexFacets_[i], poly.vertexFacets_[j]);
      if (common.size() + 1 < r) continue;
      if (normalRank(poly.chartFacets_, common, r) + 1 == r) poly.edges_.push_back({i, j});
    }
  return poly;
}

LatticePolytope LatticePolytope::fromInequalities(const std::vector<Halfspace>& halfspaces,
                                                  const std::vector<Hyperplane>& equations) {
  if (halfspaces.empty() && equations.empty())
    throw UnboundedPolytopeError("no constraints given");
  const std::size_t n =
      halfspaces.empty() ? equations.front().normal.size() : halfspaces.front().normal.size();
  for (const auto& h : halfspaces)
    if (h.normal.size() != n) throw DimensionError("halfspace normals have different lengths");
  for (const auto& e : equations)
    if (e.normal.size() != n) throw DimensionError("equation normals have different lengths");

  // Homogenize: y = (t, x) with t*c - <u, x> >= 0 and t >= 0.
  std::vector<IntVector> rows;
  auto addRow = [&](const Integer& c, const IntVector& u, int sign) {
    IntVector row(n + 1);
    row[0] = sign * c;
    for (std::size_t j = 0; j < n; ++j) row[j + 1] = -sign * u[j];
    rows.push_back(std::move(row));
  };
  for (const auto& h : halfspaces) addRow(h.offset, h.normal, 1);
  for (const auto& e : equations) {
    addRow(e.offset, e.normal, 1);
    addRow(e.offset, e.normal, -1);
  }
  IntVector tRow = zeros(n + 1);
  tRow[0] = 1;
  rows.push_back(tRow);

  IntMatrix cone = IntMatrix::fromRows(rows, n + 1);
  if (rank(cone) < n + 1) {
    // The recession cone contains a line. The set is invariant along it, so
    // slicing orthogonally decides emptiness without changing the answer.
    for (const auto& k : integerKernel(cone)) {
      IntVector dir(k.begin() + 1, k.end());
      addRow(Integer(0), dir, 1);
      addRow(Integer(0), dir, -1);
    }
    cone = IntMatrix::fromRows(rows, n + 1);
    for (const auto& ray : detail::extremeRays(cone))
      if (ray[0] > 0) throw UnboundedPolytopeError("intersection contains a line");
    throw EmptyPolytopeError("intersection is empty");
  }

  std::vector<IntVector> vertices;
  bool recedes = false;
  for (const auto& ray : detail::extremeRays(cone)) {
    if (ray[0] == 0) {
      recedes = true;
      continue;
    }
    IntVector x(n);
    for (std::size_t j = 0; j < n; ++j) {
      if (!mpz_divisible_p(ray[j + 1].get_mpz_t(), ray[0].get_mpz_t()))
        throw NonLatticeVertexError("intersection has a non-integral vertex");
      x[j] = ray[j + 1] / ray[0];
    }
    vertices.push_back(std::move(x));
  }
  if (vertices.empty()) throw EmptyPolytopeError("intersection is empty");
  if (recedes) throw UnboundedPolytopeError("intersection is unbounded");
  return fromVertices(vertices);
}

bool LatticePolytope::contains(const IntVector& x) const {
  if (x.size() != ambientDim_) throw DimensionError("point has the wrong length");
  for (const auto& e : equations_)
    if (dot(e.normal, x) != e.offset) return false;
  for (const auto& f : facets_)
    if (dot(f.normal, x) > f.offset) return false;
  return true;
}

std::optional<std::size_t> LatticePolytope::vertexIndex(const IntVector& v) const {
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
  if (it == vertices_.end() || *it != v) return std::nullopt;
  return static_cast<std::size_t>(it - vertices_.begin());
}

IntVector LatticePolytope::toChart(const IntVector& x) const {
  if (x.size() != ambientDim_) throw DimensionError("point has the wrong length");
  return applyRows(chartProjection_, x - chartOrigin_);
}

IntVector LatticePolytope::fromChart(const IntVector& y) const {
  if (y.size() != chartBasis_.size()) throw DimensionError("chart point has the wrong length");
  IntVector x = chartOrigin_;
  for (std::size_t i = 0; i < y.size(); ++i)
    for (std::size_t j = 0; j < ambientDim_; ++j) x[j] += y[i] * chartBasis_[i][j];
  return x;
}

std::vector<IntVector> latticePoints(const LatticePolytope& p) {
  const std::size_t r = static_cast<std::size_t>(p.dim());
  if (r == 0) return p.vertices();

  IntVector lo, hi;
  for (const auto& v : p.vertices()) {
    const IntVector y = p.toChart(v);
    if (lo.empty()) {
      lo = hi = y;
      continue;
    }
    for (std::size_t i = 0; i < r; ++i) {
      if (y[i] < lo[i]) lo[i] = y[i];
      if (y[i] > hi[i]) hi[i] = y[i];
    }
  }

  std::vector<IntVector> out;
  IntVector y = lo;
  while (true) {
    bool inside = true;
    for (const auto& f : p.chartFacets())
      if (dot(f.normal, y) > f.offset) {
        inside = false;
        break;
      }
    if (inside) out.push_back(p.fromChart(y));
    std::size_t i = 0;
    while (i < r && y[i] == hi[i]) {
      y[i] = lo[i];
      ++i;
    }
    if (i == r) break;
    ++y[i];
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Face> facesOfDim(const LatticePolytope& p, int d) {
  if (d < 0 || d > p.dim()) throw InvalidArgument("face dimension out of range");
  std::vector<std::size_t> all(p.vertices().size());
  std::iota(all.begin(), all.end(), 0);

  std::set<std::vector<std::size_t>> level{all};
  for (int j = p.dim(); j > d; --j) {
    std::set<std::vector<std::size_t>> next;
    for (const auto& face : level) {
      for (std::size_t f = 0; f < p.facets().size(); ++f) {
        std::vector<std::size_t> sub;
        for (auto v : face)
          if (std::binary_search(p.vertexFacets()[v].begin(), p.vertexFacets()[v].end(), f))
            sub.push_back(v);
        if (sub.empty() || sub.size() == face.size()) continue;
        if (affineDim(p, sub) == j - 1) next.insert(std::move(sub));
      }
    }
    level = std::move(next);
  }

  std::vector<Face> faces;
  for (const auto& verts : level) faces.push_back({verts, d, facetsContaining(p, verts)});
  return faces;
}

Face faceFromVertices(const LatticePolytope& p, std::vector<std::size_t> vertexIndices) {
  std::sort(vertexIndices.begin(), vertexIndices.end());
  vertexIndices.erase(std::unique(vertexIndices.begin(), vertexIndices.end()),
                      vertexIndices.end());
  if (vertexIndices.empty()) throw NotAFaceError("a face needs at least one vertex");
  if (vertexIndices.back() >= p.vertices().size())
    throw NotAFaceError("vertex index out of range");
  auto tight = facetsContaining(p, vertexIndices);
  if (verticesOn(p, tight) != vertexIndices)
    throw NotAFaceError("the given vertices do not span a face");
  const int dim = affineDim(p, vertexIndices);
  return {std::move(vertexIndices), dim, std::move(tight)};
}

std::vector<IntVector> primitiveEdgeDirections(const LatticePolytope& p, const IntVector& v) {
  const auto idx = p.vertexIndex(v);
  if (!idx) throw NotAVertexError("point is not a vertex of the polytope");
  std::vector<IntVector> dirs;
  for (const auto& [a, b] : p.edges()) {
    if (a == *idx) dirs.push_back(primitive(p.vertices()[b] - v));
    if (b == *idx) dirs.push_back(primitive(p.vertices()[a] - v));
  }
  std::sort(dirs.begin(), dirs.end());
  return dirs;
}

LatticePolytope intrinsicPolytope(const LatticePolytope& p) {
  if (p.isFullDimensional()) return p;
  std::vector<IntVector> pts;
  for (const auto& v : p.vertices()) pts.push_back(p.toChart(v));
  return LatticePolytope::fromVertices(pts);
}

bool isSmoothAt(const LatticePolytope& p, std::size_t vertex) {
  if (vertex >= p.vertices().size()) throw NotAVertexError("vertex index out of range");
  if (!p.isFullDimensional()) {
    const auto q = intrinsicPolytope(p);
    return isSmoothAt(q, *q.vertexIndex(p.toChart(p.vertices()[vertex])));
  }
  const std::size_t n = p.ambientDim();
  const auto dirs = primitiveEdgeDirections(p, p.vertices()[vertex]);
  if (dirs.size() != n) return false;
  const Integer det = determinant(IntMatrix::fromColumns(dirs, n));
  return det == 1 || det == -1;
}

bool isSmooth(const LatticePolytope& p) {
  if (p.dim() == 0) return true;
  if (!p.isFullDimensional()) return isSmooth(intrinsicPolytope(p));
  for (std::size_t i = 0; i < p.vertices().size(); ++i)
    if (!isSmoothAt(p, i)) return false;
  return true;
}

LatticeWidth latticeWidth(const LatticePolytope& p, const Integer& searchBound) {
  if (searchBound < 1) throw InvalidArgument("width search bound must be at least 1");
  if (!searchBound.fits_slong_p()) throw InvalidArgument("width search bound too large");
  const std::size_t n = p.ambientDim();
  const long bound = searchBound.get_si();
  if (n == 0) return {Integer(0), {}};

  std::optional<LatticeWidth> best;
  std::vector<long> u(n, -bound);
  IntVector dir(n);
  while (true) {
    // first nonzero coordinate positive
    auto first = std::find_if(u.begin(), u.end(), [](long x) { return x != 0; });
    if (first != u.end() && *first > 0) {
      for (std::size_t i = 0; i < n; ++i) dir[i] = u[i];
      if (content(dir) == 1) {
        Integer lo = dot(dir, p.vertices().front()), hi = lo;
        for (const auto& v : p.vertices()) {
          const Integer s = dot(dir, v);
          if (s < lo) lo = s;
          if (s > hi) hi = s;
        }
        Integer w = hi - lo;
        if (!best || w < best->width) best = LatticeWidth{std::move(w), dir};
      }
    }
    std::size_t i = n;
    while (i > 0 && u[i - 1] == bound) {
      u[i - 1] = -bound;
      --i;
    }
    if (i == 0) break;
    ++u[i - 1];
  }
  return *best;
}

LatticePolytope normalForm(const LatticePolytope& p) {
  if (!p.isFullDimensional())
    throw DimensionError("normal form requires a full-dimensional polytope");
  const std::size_t n = p.ambientDim();
  if (n == 0) return p;

  std::optional<std::vector<IntVector>> best;
  for (const auto& v : p.vertices()) {
    const auto dirs = primitiveEdgeDirections(p, v);
    std::vector<std::vector<std::size_t>> tuples;
    std::vector<std::size_t> current;
    std::vector<bool> used(dirs.size(), false);
    orderedTuples(dirs.size(), n, current, used, tuples);
    for (const auto& t : tuples) {
      std::vector<IntVector> cols;
      for (auto i : t) cols.push_back(dirs[i]);
      const IntMatrix e = IntMatrix::fromColumns(cols, n);
      if (determinant(e) == 0) continue;
      // The Hermite transform of E is determined by the lattice data alone:
      // for E' = S E with S unimodular, the transform is T S^-1.
      const IntMatrix t_ = hermiteNormalForm(e).transform;
      std::vector<IntVector> image;
      image.reserve(p.vertices().size());
      for (const auto& w : p.vertices()) image.push_back(t_ * (w - v));
      IntVector low = image.front();
      for (const auto& x : image)
        for (std::size_t i = 0; i < n; ++i)
          if (x[i] < low[i]) low[i] = x[i];
      for (auto& x : image) x = x - low;
      std::sort(image.begin(), image.end());
      if (!best || image < *best) best = std::move(image);
    }
  }
  return LatticePolytope::fromVertices(*best);
}

Rational normalizedVolume2D(const LatticePolytope& p) {
  if (p.dim() != 2) throw DimensionError("normalized area needs a two-dimensional polytope");
  std::vector<IntVector> pts;
  for (const auto& v : p.vertices()) pts.push_back(p.toChart(v));
  std::sort(pts.begin(), pts.end());
  const IntVector origin = pts.front();
  auto cross = [](const IntVector& a, const IntVector& b) -> Integer {
    return a[0] * b[1] - a[1] * b[0];
  };
  std::sort(pts.begin() + 1, pts.end(), [&](const IntVector& a, const IntVector& b) {
    return cross(a - origin, b - origin) > 0;
  });
  Integer twiceArea = 0;
  for (std::size_t i = 0; i < pts.size(); ++i)
    twiceArea += cross(pts[i], pts[(i + 1) % pts.size()]);
  return Rational(abs(twiceArea));
}

LatticePolytope dilate(const LatticePolytope& p, const Integer& factor) {
  if (factor < 1) throw InvalidArgument("dilation factor must be at least 1");
  std::vector<IntVector> pts;
  for (const auto& v : p.vertices()) pts.push_back(factor * v);
  return LatticePolytope::fromVertices(pts);
}

LatticePolytope transformed(const LatticePolytope& p, const IntMatrix& linear,
                            const IntVector& translation) {
  if (linear.cols() != p.ambientDim() || linear.rows() != translation.size())
    throw DimensionError("affine map does not match the polytope");
  std::vector<IntVector> pts;
  for (const auto& v : p.vertices()) pts.push_back(linear * v + translation);
  return LatticePolytope::fromVertices(pts);
}

}  // namespace latpoly
