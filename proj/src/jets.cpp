#include "latpoly/jets.hpp"

#include <algorithm>
#include <map>

namespace latpoly {

namespace {

void compositions(std::size_t n, unsigned long degree, IntVector& current, std::size_t pos,
                  std::vector<IntVector>& out) {
  if (pos + 1 == n) {
    current[pos] = degree;
    out.push_back(current);
    return;
  }
  for (unsigned long first = degree + 1; first-- > 0;) {
    current[pos] = first;
    compositions(n, degree - first, current, pos + 1, out);
  }
}

std::vector<IntVector> multiIndicesOfDegree(std::size_t n, unsigned long d) {
  std::vector<IntVector> out;
  if (n == 0) {
    if (d == 0) out.emplace_back();
    return out;
  }
  IntVector current(n);
  compositions(n, d, current, 0, out);
  return out;
}

Rational power(const Rational& base, const Integer& exponent) {
  // exponent is small; callers guard against 0 to a negative power
  const unsigned long e = Integer(abs(exponent)).get_ui();
  Integer num, den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), e);
  mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), e);
  Rational r(exponent >= 0 ? num : den, exponent >= 0 ? den : num);
  r.canonicalize();
  return r;
}

Rational jetEntry(const IntVector& u, const IntVector& a, const JetPoint& p) {
  Rational value = 1;
  for (std::size_t j = 0; j < u.size(); ++j) {
    const Integer coeff = fallingFactorial(a[j], u[j].get_ui());
    if (coeff == 0) return 0;
    value *= coeff;
    if (p.isGeneric()) continue;
    const Rational& x = p.coords()[j];
    const Integer e = a[j] - u[j];
    if (x == 0) {
      if (e > 0) return 0;
      if (e < 0) throw PointNotInDomain("a monomial has a pole at the given point");
      continue;  // 0^0 = 1
    }
    value *= power(x, e);
  }
  return value;
}

void checkPoint(const PointConfiguration& a, const JetPoint& p) {
  if (!p.isGeneric() && p.coords().size() != a.ambientDim())
    throw DimensionError("point length does not match the configuration");
}

/// Incremental row echelon form over Q; reports whether a row was independent.
class RowSpace {
 public:
  explicit RowSpace(std::size_t cols) : cols_(cols) {}

  bool insert(RatVector row) {
    for (const auto& [pivot, basisRow] : rows_) {
      if (row[pivot] == 0) continue;
      const Rational f = row[pivot] / basisRow[pivot];
      for (std::size_t j = 0; j < cols_; ++j)
        if (basisRow[j] != 0) row[j] -= f * basisRow[j];
    }
    auto it = std::find_if(row.begin(), row.end(), [](const Rational& x) { return x != 0; });
    if (it == row.end()) return false;
    rows_.emplace(static_cast<std::size_t>(it - row.begin()), std::move(row));
    return true;
  }

 private:
  std::size_t cols_;
  std::map<std::size_t, RatVector> rows_;  // keyed by pivot column, ascending
};

}  // namespace

PointConfiguration::PointConfiguration(std::size_t ambientDim, std::vector<IntVector> exponents)
    : ambientDim_(ambientDim), exponents_(std::move(exponents)) {
  for (const auto& a : exponents_)
    if (a.size() != ambientDim_) throw DimensionError("exponent has the wrong length");
  std::sort(exponents_.begin(), exponents_.end());
  if (std::adjacent_find(exponents_.begin(), exponents_.end()) != exponents_.end())
    throw InvalidArgument("point configuration has repeated exponents");
}

PointConfiguration PointConfiguration::fromPolytope(const LatticePolytope& p) {
  return PointConfiguration(p.ambientDim(), latticePoints(p));
}

std::vector<IntVector> multiIndices(std::size_t n, unsigned long k) {
  std::vector<IntVector> out;
  for (unsigned long d = 0; d <= k; ++d) {
    auto level = multiIndicesOfDegree(n, d);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

JetMatrix jetMatrix(const PointConfiguration& a, unsigned long k, const JetPoint& p) {
  checkPoint(a, p);
  const std::size_t n = a.ambientDim();
  JetMatrix jm{k, a, p, multiIndices(n, k), RatMatrix(), binomial(n + k, k)};
  jm.entries = RatMatrix(jm.rows.size(), a.size());
  for (std::size_t i = 0; i < jm.rows.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j)
      jm.entries(i, j) = jetEntry(jm.rows[i], a.exponents()[j], p);
  return jm;
}

bool isJetSpanned(const PointConfiguration& a, unsigned long k, const JetPoint& p) {
  const auto jm = jetMatrix(a, k, p);
  return jm.fullRankTarget == rank(jm.entries);
}

unsigned long degreeOfJetSeparation(const PointConfiguration& a, const JetPoint& p) {
  checkPoint(a, p);
  const std::size_t n = a.ambientDim();
  if (n == 0) throw InvalidArgument("jet separation needs a positive ambient dimension");
  if (a.size() == 0) throw InvalidArgument("jet separation needs a nonempty configuration");

  // Rows of the order-k jet matrix are those of order k-1 plus the degree-k
  // rows, so one elimination pass serves every k.
  RowSpace space(a.size());
  for (unsigned long k = 0;; ++k) {
    if (binomial(n + k, k) > a.size()) return k - 1;
    for (const auto& u : multiIndicesOfDegree(n, k)) {
      RatVector row(a.size());
      for (std::size_t j = 0; j < a.size(); ++j) row[j] = jetEntry(u, a.exponents()[j], p);
      if (!space.insert(std::move(row))) {
        if (k == 0) throw PointNotInDomain("every monomial vanishes at the given point");
        return k - 1;
      }
    }
  }
}

unsigned long jetSeparationAtVertex(const LatticePolytope& p, const IntVector& vertex) {
  const auto idx = p.vertexIndex(vertex);
  if (!idx) throw NotAVertexError("point is not a vertex of the polytope");
  if (!isSmoothAt(p, *idx)) throw NonSmoothError("polytope is not smooth at the vertex");

  const LatticePolytope q = p.isFullDimensional() ? p : intrinsicPolytope(p);
  const IntVector v = p.isFullDimensional() ? vertex : p.toChart(vertex);
  const std::size_t n = q.ambientDim();
  if (n == 0) throw InvalidArgument("jet separation needs a positive dimension");

  const auto dirs = primitiveEdgeDirections(q, v);
  const IntMatrix toStandard = inverseUnimodular(IntMatrix::fromColumns(dirs, n));
  std::vector<IntVector> pts;
  for (const auto& x : latticePoints(q)) pts.push_back(toStandard * (x - v));
  return degreeOfJetSeparation(PointConfiguration(n, std::move(pts)),
                               JetPoint::at(RatVector(n, Rational(0))));
}

}  // namespace latpoly
