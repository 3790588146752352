#include "latpoly/linalg.hpp"

#include <algorithm>
#include <numeric>

namespace latpoly {

namespace {

Integer floorDiv(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

void addRowMultiple(IntMatrix& m, std::size_t target, std::size_t source,
                    const Integer& factor) {
  if (factor == 0) return;
  for (std::size_t j = 0; j < m.cols(); ++j) m(target, j) += factor * m(source, j);
}

void addColMultiple(IntMatrix& m, std::size_t target, std::size_t source,
                    const Integer& factor) {
  if (factor == 0) return;
  for (std::size_t i = 0; i < m.rows(); ++i) m(i, target) += factor * m(i, source);
}

void negateRow(IntMatrix& m, std::size_t i) {
  for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = -m(i, j);
}

// Reduced row echelon form in place; returns the pivot columns.
std::vector<std::size_t> rowReduce(RatMatrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c) == 0) ++p;
    if (p == m.rows()) continue;
    m.swapRows(r, p);
    const Rational inv = 1 / m(r, c);
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c) == 0) continue;
      const Rational f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

RatMatrix toRational(const IntMatrix& m) {
  RatMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = Rational(m(i, j));
  return out;
}

RatVector toRational(const IntVector& v) {
  RatVector out;
  out.reserve(v.size());
  for (const auto& x : v) out.emplace_back(x);
  return out;
}

Integer dot(std::span<const Integer> a, std::span<const Integer> b) {
  if (a.size() != b.size()) throw DimensionError("dot product of unequal lengths");
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Integer content(std::span<const Integer> v) {
  Integer g = 0;
  for (const auto& x : v) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

IntVector primitive(IntVector v) {
  const Integer g = content(v);
  if (g > 1)
    for (auto& x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  return v;
}

IntVector operator+(const IntVector& a, const IntVector& b) {
  if (a.size() != b.size()) throw DimensionError("vector sum of unequal lengths");
  IntVector c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
  return c;
}

IntVector operator-(const IntVector& a, const IntVector& b) {
  if (a.size() != b.size())
    throw DimensionError("vector difference of unequal lengths");
  IntVector c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] - b[i];
  return c;
}

IntVector operator*(const Integer& s, const IntVector& v) {
  IntVector c(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) c[i] = s * v[i];
  return c;
}

bool isZero(std::span<const Integer> v) {
  return std::all_of(v.begin(), v.end(), [](const Integer& x) { return x == 0; });
}

std::size_t rank(const RatMatrix& m) {
  RatMatrix work = m;
  return rowReduce(work).size();
}

std::size_t rank(const IntMatrix& m) {
  IntMatrix a = m;
  Integer prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t p = r;
    while (p < a.rows() && a(p, c) == 0) ++p;
    if (p == a.rows()) continue;
    a.swapRows(r, p);
    for (std::size_t i = r + 1; i < a.rows(); ++i) {
      for (std::size_t j = c + 1; j < a.cols(); ++j) {
        a(i, j) = a(i, j) * a(r, c) - a(i, c) * a(r, j);
        mpz_divexact(a(i, j).get_mpz_t(), a(i, j).get_mpz_t(), prev.get_mpz_t());
      }
      a(i, c) = 0;
    }
    prev = a(r, c);
    ++r;
  }
  return r;
}

Integer determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw DimensionError("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      a.swapRows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a(i, j) = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(a(i, j).get_mpz_t(), a(i, j).get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

Rational determinant(const RatMatrix& m) {
  if (m.rows() != m.cols()) throw DimensionError("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  RatMatrix a = m;
  Rational det = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && a(p, k) == 0) ++p;
    if (p == n) return 0;
    if (p != k) {
      a.swapRows(k, p);
      det = -det;
    }
    det *= a(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a(i, k) == 0) continue;
      const Rational f = a(i, k) / a(k, k);
      for (std::size_t j = k; j < n; ++j) a(i, j) -= f * a(k, j);
    }
  }
  return det;
}

SolveResult solveExact(const RatMatrix& a, const RatVector& b) {
  if (a.rows() != b.size())
    throw DimensionError("right-hand side length does not match row count");
  const std::size_t n = a.cols();
  RatMatrix aug(a.rows(), n + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n) = b[i];
  }
  const auto pivots = rowReduce(aug);
  if (!pivots.empty() && pivots.back() == n)
    return {SolveStatus::Inconsistent, std::nullopt};
  RatVector x(n);
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug(r, n);
  const auto status =
      pivots.size() == n ? SolveStatus::Unique : SolveStatus::Underdetermined;
  return {status, std::move(x)};
}

IntMatrix inverseUnimodular(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw DimensionError("inverse of a non-square matrix");
  const Integer det = determinant(m);
  if (det != 1 && det != -1) throw InvalidArgument("matrix is not unimodular");
  const std::size_t n = m.rows();
  RatMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  rowReduce(aug);
  IntMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j).get_num();
  return inv;
}

SmithForm smithNormalForm(const IntMatrix& m) {
  IntMatrix a = m;
  IntMatrix left = IntMatrix::identity(m.rows());
  IntMatrix right = IntMatrix::identity(m.cols());
  const std::size_t steps = std::min(m.rows(), m.cols());

  for (std::size_t t = 0; t < steps; ++t) {
    bool exhausted = false;
    while (true) {
      // smallest nonzero entry of the trailing block becomes the pivot
      std::size_t pi = 0, pj = 0;
      bool found = false;
      for (std::size_t i = t; i < a.rows(); ++i)
        for (std::size_t j = t; j < a.cols(); ++j) {
          if (a(i, j) == 0) continue;
          if (!found || abs(a(i, j)) < abs(a(pi, pj))) {
            pi = i;
            pj = j;
            found = true;
          }
        }
      if (!found) {
        exhausted = true;
        break;
      }
      a.swapRows(t, pi);
      left.swapRows(t, pi);
      a.swapCols(t, pj);
      right.swapCols(t, pj);

      bool clean = true;
      for (std::size_t i = t + 1; i < a.rows(); ++i) {
        const Integer q = a(i, t) / a(t, t);
        addRowMultiple(a, i, t, -q);
        addRowMultiple(left, i, t, -q);
        if (a(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < a.cols(); ++j) {
        const Integer q = a(t, j) / a(t, t);
        addColMultiple(a, j, t, -q);
        addColMultiple(right, j, t, -q);
        if (a(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      bool divides = true;
      for (std::size_t i = t + 1; i < a.rows() && divides; ++i)
        for (std::size_t j = t + 1; j < a.cols(); ++j)
          if (!mpz_divisible_p(a(i, j).get_mpz_t(), a(t, t).get_mpz_t())) {
            addRowMultiple(a, t, i, 1);
            addRowMultiple(left, t, i, 1);
            divides = false;
            break;
          }
      if (divides) break;
    }
    if (exhausted) break;
    if (a(t, t) < 0) {
      negateRow(a, t);
      negateRow(left, t);
    }
  }
  return {std::move(left), std::move(a), std::move(right)};
}

HermiteForm hermiteNormalForm(const IntMatrix& m) {
  IntMatrix h = m;
  IntMatrix u = IntMatrix::identity(m.rows());
  std::size_t r = 0;
  for (std::size_t j = 0; j < h.cols() && r < h.rows(); ++j) {
    bool pivot = false;
    while (true) {
      std::size_t best = h.rows();
      for (std::size_t i = r; i < h.rows(); ++i)
        if (h(i, j) != 0 && (best == h.rows() || abs(h(i, j)) < abs(h(best, j))))
          best = i;
      if (best == h.rows()) break;
      pivot = true;
      h.swapRows(r, best);
      u.swapRows(r, best);
      bool reduced = true;
      for (std::size_t i = r + 1; i < h.rows(); ++i) {
        if (h(i, j) == 0) continue;
        const Integer q = floorDiv(h(i, j), h(r, j));
        addRowMultiple(h, i, r, -q);
        addRowMultiple(u, i, r, -q);
        if (h(i, j) != 0) reduced = false;
      }
      if (reduced) break;
    }
    if (!pivot) continue;
    if (h(r, j) < 0) {
      negateRow(h, r);
      negateRow(u, r);
    }
    for (std::size_t i = 0; i < r; ++i) {
      const Integer q = floorDiv(h(i, j), h(r, j));
      addRowMultiple(h, i, r, -q);
      addRowMultiple(u, i, r, -q);
    }
    ++r;
  }
  return {std::move(h), std::move(u)};
}

std::vector<IntVector> hermiteBasis(const IntMatrix& m) {
  const auto hnf = hermiteNormalForm(m);
  std::vector<IntVector> basis;
  for (std::size_t i = 0; i < hnf.hermite.rows(); ++i) {
    if (isZero(hnf.hermite.row(i))) break;
    basis.push_back(hnf.hermite.rowVector(i));
  }
  return basis;
}

std::vector<IntVector> saturate(const std::vector<IntVector>& generators,
                                std::size_t ambientDim) {
  for (const auto& g : generators)
    if (g.size() != ambientDim) throw DimensionError("generator length mismatch");
  if (generators.empty()) return {};
  const auto snf = smithNormalForm(IntMatrix::fromRows(generators, ambientDim));
  std::size_t r = 0;
  while (r < std::min(snf.diagonal.rows(), snf.diagonal.cols()) &&
         snf.diagonal(r, r) != 0)
    ++r;
  if (r == 0) return {};
  // G = L^-1 S R^-1, so the rational row space is spanned by the first r rows
  // of R^-1, which extend to a basis of Z^n.
  const IntMatrix rinv = inverseUnimodular(snf.right);
  IntMatrix top(r, ambientDim);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < ambientDim; ++j) top(i, j) = rinv(i, j);
  return hermiteBasis(top);
}

std::vector<IntVector> integerKernel(const IntMatrix& m) {
  const auto snf = smithNormalForm(m);
  std::size_t r = 0;
  while (r < std::min(snf.diagonal.rows(), snf.diagonal.cols()) &&
         snf.diagonal(r, r) != 0)
    ++r;
  const std::size_t n = m.cols();
  if (r == n) return {};
  IntMatrix k(n - r, n);
  for (std::size_t c = r; c < n; ++c)
    for (std::size_t i = 0; i < n; ++i) k(c - r, i) = snf.right(i, c);
  return hermiteBasis(k);
}

Integer binomial(unsigned long n, unsigned long k) {
  Integer b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return b;
}

Integer fallingFactorial(const Integer& a, unsigned long m) {
  Integer f = 1;
  for (unsigned long i = 0; i < m; ++i) f *= a - i;
  return f;
}

}  // namespace latpoly
