#include "latpoly/cayley.hpp"

#include <algorithm>

namespace latpoly {

namespace {

// Greedily pick n+1 affinely independent points of a full-dimensional set.
std::vector<IntVector> affineBasis(const std::vector<IntVector>& points, std::size_t n) {
  std::vector<IntVector> chosen{points.front()};
  std::vector<IntVector> diffs;
  for (std::size_t i = 1; i < points.size() && chosen.size() < n + 1; ++i) {
    diffs.push_back(points[i] - points.front());
    if (rank(IntMatrix::fromRows(diffs, n)) == diffs.size())
      chosen.push_back(points[i]);
    else
      diffs.pop_back();
  }
  return chosen;
}

}  // namespace

std::optional<CayleyStructure> isCayley(const LatticePolytope& p) {
  if (!p.isFullDimensional())
    throw DimensionError("Cayley detection needs a full-dimensional polytope");
  const std::size_t n = p.ambientDim();
  if (n == 0) return std::nullopt;

  // Vertices are lattice points and are affinely spanning.
  const auto basis = affineBasis(p.vertices(), n);
  RatMatrix system(n + 1, n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    for (std::size_t j = 0; j < n; ++j) system(i, j) = basis[i][j];
    system(i, n) = -1;
  }

  const std::size_t masks = std::size_t{1} << (n + 1);
  for (std::size_t mask = 1; mask + 1 < masks; ++mask) {
    RatVector rhs(n + 1);
    for (std::size_t i = 0; i <= n; ++i) rhs[i] = (mask >> i) & 1;
    const auto sol = solveExact(system, rhs);
    if (sol.status != SolveStatus::Unique) continue;
    const RatVector& x = *sol.solution;
    if (std::any_of(x.begin(), x.end(), [](const Rational& r) { return r.get_den() != 1; }))
      continue;
    IntVector u(n);
    for (std::size_t j = 0; j < n; ++j) u[j] = x[j].get_num();
    const Integer c = x[n].get_num();

    // The values on P lie between the values on its vertices.
    bool fits = std::all_of(p.vertices().begin(), p.vertices().end(), [&](const IntVector& v) {
      const Integer s = dot(u, v);
      return s == c || s == c + 1;
    });
    if (!fits) continue;

    CayleyStructure out{u, c, {}, {}};
    for (const auto& pt : latticePoints(p))
      (dot(u, pt) == c ? out.lowerSlice : out.upperSlice).push_back(pt);
    return out;
  }
  return std::nullopt;
}

LatticePolytope cayleySum(const std::vector<LatticePolytope>& polytopes, const Integer& scale) {
  if (polytopes.size() < 2) throw InvalidArgument("a Cayley sum needs at least two polytopes");
  if (scale < 1) throw InvalidArgument("Cayley scale must be at least 1");
  const std::size_t d = polytopes.front().ambientDim();
  const std::size_t m = polytopes.size();
  std::vector<IntVector> points;
  for (std::size_t i = 0; i < m; ++i) {
    if (polytopes[i].ambientDim() != d)
      throw DimensionError("Cayley summands live in different dimensions");
    for (const auto& v : polytopes[i].vertices()) {
      IntVector w = v;
      w.resize(d + m - 1);
      if (i > 0) w[d + i - 1] = scale;
      points.push_back(std::move(w));
    }
  }
  return LatticePolytope::fromVertices(points);
}

LatticePolytope toricBlowUp(const LatticePolytope& p, const Face& q, const Integer& k) {
  if (!p.isFullDimensional())
    throw DimensionError("blow-up needs a full-dimensional polytope");
  if (k < 1) throw InvalidBlowUpDepth("blow-up depth must be at least 1");
  const Face face = faceFromVertices(p, q.vertexIndices);
  if (face.dim >= p.dim()) throw NotAFaceError("blow-up center must be a proper face");
  for (auto v : face.vertexIndices)
    if (!isSmoothAt(p, v)) throw NonSmoothError("polytope is not smooth along the blow-up center");

  const std::size_t n = p.ambientDim();
  Halfspace cut{IntVector(n), Integer(0)};
  for (auto f : face.tightFacets) {
    cut.normal = cut.normal + p.facets()[f].normal;
    cut.offset += p.facets()[f].offset;
  }
  cut.offset -= k;

  for (std::size_t i = 0; i < p.vertices().size(); ++i) {
    if (std::binary_search(face.vertexIndices.begin(), face.vertexIndices.end(), i)) continue;
    if (dot(cut.normal, p.vertices()[i]) > cut.offset)
      throw InvalidBlowUpDepth("blow-up depth cuts off vertices outside the center");
  }

  std::vector<Halfspace> halfspaces = p.facets();
  halfspaces.push_back(std::move(cut));
  return LatticePolytope::fromInequalities(halfspaces);
}

}  // namespace latpoly
