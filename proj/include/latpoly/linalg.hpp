#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "latpoly/errors.hpp"

namespace latpoly {

using Integer = mpz_class;
/// GMP keeps every mpq_class canonical: lowest terms, positive denominator.
using Rational = mpq_class;
using IntVector = std::vector<Integer>;
using RatVector = std::vector<Rational>;

/**
 * Dense row-major matrix over an exact scalar type.
 *
 * Only the handful of operations the polytope code needs; this is not a
 * general purpose linear algebra container.
 */
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<T> entries)
      : rows_(rows), cols_(cols), data_(std::move(entries)) {
    if (data_.size() != rows_ * cols_)
      throw DimensionError("matrix entry count does not match its shape");
  }
  Matrix(std::initializer_list<std::initializer_list<long>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
      if (r.size() != cols_) throw DimensionError("ragged matrix literal");
      for (long x : r) data_.emplace_back(x);
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  /// Rows given as vectors; `cols` fixes the width when `rows` is empty.
  static Matrix fromRows(const std::vector<std::vector<T>>& rows,
                         std::size_t cols) {
    Matrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != cols) throw DimensionError("ragged matrix rows");
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  /// Vectors given as columns of an `rows`-row matrix.
  static Matrix fromColumns(const std::vector<std::vector<T>>& cols,
                            std::size_t rows) {
    Matrix m(rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
      if (cols[j].size() != rows) throw DimensionError("ragged matrix columns");
      for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
    }
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  std::span<T> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
  std::span<const T> row(std::size_t i) const {
    return {data_.data() + i * cols_, cols_};
  }
  std::vector<T> rowVector(std::size_t i) const {
    auto r = row(i);
    return {r.begin(), r.end()};
  }
  std::vector<T> column(std::size_t j) const {
    std::vector<T> c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
  }
  const std::vector<T>& entries() const noexcept { return data_; }

  void swapRows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }
  void swapCols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw DimensionError("matrix product shape mismatch");
    Matrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& aik = a(i, k);
        if (aik == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
      }
    return c;
  }

  friend std::vector<T> operator*(const Matrix& a, const std::vector<T>& x) {
    if (a.cols_ != x.size()) throw DimensionError("matrix-vector shape mismatch");
    std::vector<T> y(a.rows_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t j = 0; j < a.cols_; ++j) y[i] += a(i, j) * x[j];
    return y;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using IntMatrix = Matrix<Integer>;
using RatMatrix = Matrix<Rational>;

RatMatrix toRational(const IntMatrix& m);
RatVector toRational(const IntVector& v);

// ---------------------------------------------------------------------------
// vector helpers

Integer dot(std::span<const Integer> a, std::span<const Integer> b);
/// gcd of the entries; zero for the zero vector.
Integer content(std::span<const Integer> v);
/// v divided by its content; the zero vector is returned unchanged.
IntVector primitive(IntVector v);
IntVector operator+(const IntVector& a, const IntVector& b);
IntVector operator-(const IntVector& a, const IntVector& b);
IntVector operator*(const Integer& s, const IntVector& v);
bool isZero(std::span<const Integer> v);

// ---------------------------------------------------------------------------
// ranks, determinants, solving

std::size_t rank(const RatMatrix& m);
/// Fraction-free (Bareiss) elimination.
std::size_t rank(const IntMatrix& m);

Integer determinant(const IntMatrix& m);
Rational determinant(const RatMatrix& m);

enum class SolveStatus { Unique, Underdetermined, Inconsistent };

struct SolveResult {
  SolveStatus status;
  /// A solution (free variables set to zero) unless inconsistent.
  std::optional<RatVector> solution;
};

SolveResult solveExact(const RatMatrix& a, const RatVector& b);

/// Exact inverse of a square matrix whose determinant is +-1.
IntMatrix inverseUnimodular(const IntMatrix& m);

// ---------------------------------------------------------------------------
// integer normal forms and lattices

/// left * m * right == diagonal, left and right unimodular, d1 | d2 | ...
struct SmithForm {
  IntMatrix left;
  IntMatrix diagonal;
  IntMatrix right;
};

SmithForm smithNormalForm(const IntMatrix& m);

/**
 * transform * m == hermite, transform unimodular, hermite in row echelon form
 * with positive pivots and entries above each pivot reduced into [0, pivot).
 * Zero rows come last.
 */
struct HermiteForm {
  IntMatrix hermite;
  IntMatrix transform;
};

HermiteForm hermiteNormalForm(const IntMatrix& m);

/// Nonzero rows of the Hermite normal form of the row lattice of m.
std::vector<IntVector> hermiteBasis(const IntMatrix& m);

/**
 * A Z-basis of span_Q(generators) intersected with Z^n, returned in Hermite
 * normal form so equal lattices produce equal bases.
 */
std::vector<IntVector> saturate(const std::vector<IntVector>& generators,
                                std::size_t ambientDim);

/// Hermite basis of {x in Z^cols : m x = 0}.
std::vector<IntVector> integerKernel(const IntMatrix& m);

Integer binomial(unsigned long n, unsigned long k);

/// a (a-1) ... (a-m+1); defined for every integer a, equal to 1 when m == 0.
Integer fallingFactorial(const Integer& a, unsigned long m);

}  // namespace latpoly
