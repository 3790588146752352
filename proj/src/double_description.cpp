#include "double_description.hpp"

#include <boost/dynamic_bitset.hpp>

#include <algorithm>

namespace latpoly::detail {

namespace {

struct Ray {
  IntVector direction;
  boost::dynamic_bitset<> zeros;  // processed constraints tight on this ray
};

// Greedy choice of cols() linearly independent constraint rows.
std::vector<std::size_t> independentRows(const IntMatrix& a) {
  std::vector<std::size_t> chosen;
  std::vector<RatVector> echelon;  // reduced rows, pivot = first nonzero entry
  std::vector<std::size_t> pivotCols;
  for (std::size_t i = 0; i < a.rows() && chosen.size() < a.cols(); ++i) {
    RatVector v = toRational(a.rowVector(i));
    for (std::size_t e = 0; e < echelon.size(); ++e) {
      const std::size_t p = pivotCols[e];
      if (v[p] == 0) continue;
      const Rational f = v[p] / echelon[e][p];
      for (std::size_t j = 0; j < v.size(); ++j) v[j] -= f * echelon[e][j];
    }
    auto it = std::find_if(v.begin(), v.end(), [](const Rational& x) { return x != 0; });
    if (it == v.end()) continue;
    pivotCols.push_back(static_cast<std::size_t>(it - v.begin()));
    echelon.push_back(std::move(v));
    chosen.push_back(i);
  }
  return chosen;
}

IntVector scaledToInteger(const RatVector& v) {
  Integer lcm = 1;
  for (const auto& x : v)
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), x.get_den_mpz_t());
  IntVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i)
    out[i] = v[i].get_num() * (lcm / v[i].get_den());
  return primitive(std::move(out));
}

}  // namespace

std::vector<IntVector> extremeRays(const IntMatrix& constraints) {
  const std::size_t d = constraints.cols();
  const std::size_t m = constraints.rows();
  if (d == 0) return {};
  const auto basis = independentRows(constraints);
  if (basis.size() != d)
    throw DimensionError("double description requires a pointed cone");

  // The initial cone {y : A_B y >= 0} is simplicial; its rays are the
  // columns of A_B^-1.
  RatMatrix aug(d, 2 * d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) aug(i, j) = constraints(basis[i], j);
    aug(i, d + i) = 1;
  }
  {
    // Gauss-Jordan; A_B is nonsingular by construction.
    for (std::size_t c = 0; c < d; ++c) {
      std::size_t p = c;
      while (aug(p, c) == 0) ++p;
      aug.swapRows(c, p);
      const Rational inv = 1 / aug(c, c);
      for (std::size_t j = 0; j < 2 * d; ++j) aug(c, j) *= inv;
      for (std::size_t i = 0; i < d; ++i) {
        if (i == c || aug(i, c) == 0) continue;
        const Rational f = aug(i, c);
        for (std::size_t j = 0; j < 2 * d; ++j) aug(i, j) -= f * aug(c, j);
      }
    }
  }

  std::vector<Ray> rays;
  rays.reserve(d);
  for (std::size_t j = 0; j < d; ++j) {
    RatVector col(d);
    for (std::size_t i = 0; i < d; ++i) col[i] = aug(i, d + j);
    Ray ray{scaledToInteger(col), boost::dynamic_bitset<>(m)};
    for (std::size_t i = 0; i < d; ++i)
      if (i != j) ray.zeros.set(basis[i]);
    rays.push_back(std::move(ray));
  }

  boost::dynamic_bitset<> inBasis(m);
  for (auto b : basis) inBasis.set(b);

  for (std::size_t row = 0; row < m && !rays.empty(); ++row) {
    if (inBasis.test(row)) continue;
    const auto a = constraints.row(row);
    std::vector<Integer> value(rays.size());
    std::vector<std::size_t> pos, neg;
    for (std::size_t r = 0; r < rays.size(); ++r) {
      value[r] = dot(a, rays[r].direction);
      if (value[r] > 0)
        pos.push_back(r);
      else if (value[r] < 0)
        neg.push_back(r);
      else
        rays[r].zeros.set(row);
    }
    if (neg.empty()) continue;

    std::vector<Ray> next;
    next.reserve(rays.size());
    for (std::size_t r = 0; r < rays.size(); ++r)
      if (value[r] >= 0) next.push_back(rays[r]);

    for (auto p : pos) {
      for (auto q : neg) {
        auto common = rays[p].zeros & rays[q].zeros;
        if (common.count() + 2 < d) continue;
        bool adjacent = true;
        for (std::size_t r = 0; r < rays.size() && adjacent; ++r) {
          if (r == p || r == q) continue;
          if (common.is_subset_of(rays[r].zeros)) adjacent = false;
        }
        if (!adjacent) continue;
        IntVector dir(d);
        for (std::size_t k = 0; k < d; ++k)
          dir[k] = value[p] * rays[q].direction[k] - value[q] * rays[p].direction[k];
        common.set(row);
        next.push_back(Ray{primitive(std::move(dir)), std::move(common)});
      }
    }
    rays = std::move(next);
  }

  std::vector<IntVector> out;
  out.reserve(rays.size());
  for (auto& r : rays) out.push_back(std::move(r.direction));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace latpoly::detail
