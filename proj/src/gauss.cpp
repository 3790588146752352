#include "latpoly/gauss.hpp"

#include <algorithm>
#include <optional>
#include <set>

namespace latpoly {

namespace {

/// Column echelon state: reduced vectors with their pivot rows.
struct Echelon {
  std::vector<RatVector> vectors;
  std::vector<std::size_t> pivots;

  /// Returns false (and leaves the state alone) if v is dependent.
  bool push(RatVector v) {
    for (std::size_t e = 0; e < vectors.size(); ++e) {
      const std::size_t p = pivots[e];
      if (v[p] == 0) continue;
      const Rational f = v[p] / vectors[e][p];
      for (std::size_t i = 0; i < v.size(); ++i) v[i] -= f * vectors[e][i];
    }
    auto it = std::find_if(v.begin(), v.end(), [](const Rational& x) { return x != 0; });
    if (it == v.end()) return false;
    pivots.push_back(static_cast<std::size_t>(it - v.begin()));
    vectors.push_back(std::move(v));
    return true;
  }
  void pop() {
    vectors.pop_back();
    pivots.pop_back();
  }
};

/// Visits the column bases of c in lexicographic order of index sets.
class BasisScan {
 public:
  BasisScan(const RatMatrix& c, const std::vector<IntVector>& exponents)
      : c_(c), exponents_(exponents), suffixRank_(c.cols() + 1, 0) {
    // rank of columns i.. for pruning
    for (std::size_t i = c.cols(); i-- > 0;) {
      RatMatrix tail(c.rows(), c.cols() - i);
      for (std::size_t r = 0; r < c.rows(); ++r)
        for (std::size_t j = i; j < c.cols(); ++j) tail(r, j - i) = c(r, j);
      suffixRank_[i] = rank(tail);
    }
  }

  void run() {
    IntVector sum(exponents_.empty() ? 0 : exponents_.front().size());
    visit(0, sum);
  }

  std::set<IntVector> sigmas;
  std::optional<IntVector> first;

 private:
  void visit(std::size_t next, IntVector& sum) {
    const std::size_t r = c_.rows();
    if (echelon_.vectors.size() == r) {
      if (!first) first = sum;
      sigmas.insert(sum);
      return;
    }
    for (std::size_t j = next; j < c_.cols(); ++j) {
      if (echelon_.vectors.size() + suffixRank_[j] < r) return;
      if (!echelon_.push(c_.column(j))) continue;
      sum = sum + exponents_[j];
      visit(j + 1, sum);
      sum = sum - exponents_[j];
      echelon_.pop();
    }
  }

  const RatMatrix& c_;
  const std::vector<IntVector>& exponents_;
  std::vector<std::size_t> suffixRank_;
  Echelon echelon_;
};

}  // namespace

GaussMapResult gaussMap(const PointConfiguration& a, unsigned long k) {
  const std::size_t n = a.ambientDim();
  const auto jm = jetMatrix(a, k, JetPoint::generic());
  if (jm.fullRankTarget != rank(jm.entries))
    throw GaussMapUndefined("configuration is not jet spanned to this order at the general point");

  BasisScan scan(jm.entries, a.exponents());
  scan.run();

  GaussMapResult out;
  out.order = k;
  out.imageExponents.assign(scan.sigmas.begin(), scan.sigmas.end());

  std::vector<IntVector> diffs;
  for (const auto& s : out.imageExponents) diffs.push_back(s - *scan.first);
  const auto lattice = saturate(diffs, n);
  out.imageDim = lattice.size();
  out.fiberDim = n - out.imageDim;

  // Rows of the projection span the annihilator of the saturated lattice, so
  // its kernel is exactly that lattice and it maps Z^n onto Z^fiberDim.
  std::vector<IntVector> projection;
  if (lattice.empty()) {
    for (std::size_t i = 0; i < n; ++i) {
      IntVector e(n);
      e[i] = 1;
      projection.push_back(e);
    }
  } else {
    projection = integerKernel(IntMatrix::fromRows(lattice, n));
  }
  const IntMatrix pi = IntMatrix::fromRows(projection, n);

  std::set<IntVector> images;
  for (const auto& x : a.exponents()) images.insert(pi * x);
  std::vector<IntVector> fiber(images.begin(), images.end());
  if (out.fiberDim > 0) {
    IntVector low = fiber.front();
    for (const auto& f : fiber)
      for (std::size_t i = 0; i < low.size(); ++i)
        if (f[i] < low[i]) low[i] = f[i];
    for (auto& f : fiber) f = f - low;
    std::sort(fiber.begin(), fiber.end());
  }
  out.fiberExponents = std::move(fiber);
  return out;
}

std::vector<IntVector> gaussKImage(const PointConfiguration& a, unsigned long k) {
  return gaussMap(a, k).imageExponents;
}

std::vector<IntVector> gaussKFiber(const PointConfiguration& a, unsigned long k) {
  return gaussMap(a, k).fiberExponents;
}

std::vector<IntVector> gaussImage(const PointConfiguration& a) { return gaussKImage(a, 1); }

std::vector<IntVector> gaussFiber(const PointConfiguration& a) { return gaussKFiber(a, 1); }

}  // namespace latpoly
