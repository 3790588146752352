#pragma once

// Independent brute-force reference implementations used only by tests.
// Everything here works on plain int64 vectors and shares no code with the
// library's elimination, hull, or lattice routines.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "latpoly/linalg.hpp"

namespace oracle {

using Vec = std::vector<std::int64_t>;

inline std::int64_t det(std::vector<Vec> m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  std::int64_t total = 0;
  for (std::size_t c = 0; c < n; ++c) {
    std::vector<Vec> minor;
    for (std::size_t r = 1; r < n; ++r) {
      Vec row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != c) row.push_back(m[r][k]);
      minor.push_back(row);
    }
    const std::int64_t sign = (c % 2 == 0) ? 1 : -1;
    total += sign * m[0][c] * det(minor);
  }
  return total;
}

inline std::int64_t gcdAll(const Vec& v) {
  std::int64_t g = 0;
  for (auto x : v) g = std::gcd(g, std::llabs(x));
  return g;
}

inline std::int64_t dot(const Vec& a, const Vec& b) {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

struct Ineq {
  Vec normal;
  std::int64_t offset;
  bool operator<(const Ineq& o) const {
    return normal != o.normal ? normal < o.normal : offset < o.offset;
  }
};

/// All supporting hyperplanes through n points of a full-dimensional point
/// set (a superset of the facets), by enumerating n-subsets.
inline std::vector<Ineq> supportingHyperplanes(const std::vector<Vec>& pts) {
  const std::size_t n = pts.front().size();
  std::set<Ineq> out;
  std::vector<std::size_t> idx(n);
  std::vector<bool> pick(pts.size(), false);
  std::fill(pick.begin(), pick.begin() + std::min(n, pts.size()), true);
  do {
    std::vector<Vec> chosen;
    for (std::size_t i = 0; i < pts.size(); ++i)
      if (pick[i]) chosen.push_back(pts[i]);
    if (chosen.size() != n) continue;
    // normal = generalized cross product of the n-1 difference vectors
    std::vector<Vec> diffs;
    for (std::size_t i = 1; i < n; ++i) {
      Vec d(n);
      for (std::size_t k = 0; k < n; ++k) d[k] = chosen[i][k] - chosen[0][k];
      diffs.push_back(d);
    }
    Vec normal(n);
    for (std::size_t c = 0; c < n; ++c) {
      std::vector<Vec> minor;
      for (const auto& d : diffs) {
        Vec row;
        for (std::size_t k = 0; k < n; ++k)
          if (k != c) row.push_back(d[k]);
        minor.push_back(row);
      }
      normal[c] = ((c % 2 == 0) ? 1 : -1) * det(minor);
    }
    const std::int64_t g = gcdAll(normal);
    if (g == 0) continue;
    for (auto& x : normal) x /= g;
    const std::int64_t c0 = dot(normal, chosen[0]);
    bool below = true, above = true;
    for (const auto& p : pts) {
      const std::int64_t s = dot(normal, p);
      if (s > c0) below = false;
      if (s < c0) above = false;
    }
    if (below) out.insert({normal, c0});
    if (above) {
      Vec neg = normal;
      for (auto& x : neg) x = -x;
      out.insert({neg, -c0});
    }
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return {out.begin(), out.end()};
}

/// Lattice points of conv(pts) for a full-dimensional point set.
inline std::vector<Vec> latticePoints(const std::vector<Vec>& pts) {
  const std::size_t n = pts.front().size();
  const auto hs = supportingHyperplanes(pts);
  Vec lo = pts.front(), hi = pts.front();
  for (const auto& p : pts)
    for (std::size_t i = 0; i < n; ++i) {
      lo[i] = std::min(lo[i], p[i]);
      hi[i] = std::max(hi[i], p[i]);
    }
  std::vector<Vec> out;
  Vec x = lo;
  while (true) {
    bool inside = true;
    for (const auto& h : hs)
      if (dot(h.normal, x) > h.offset) inside = false;
    if (inside) out.push_back(x);
    std::size_t i = 0;
    while (i < n && x[i] == hi[i]) x[i++] = 0, x[i - 1] = lo[i - 1];
    if (i == n) break;
    ++x[i];
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Extreme points of a full-dimensional point set: points lying on n
/// supporting hyperplanes with independent normals.
inline std::vector<Vec> vertices(const std::vector<Vec>& pts) {
  const std::size_t n = pts.front().size();
  const auto hs = supportingHyperplanes(pts);
  std::set<Vec> out;
  for (const auto& p : pts) {
    std::vector<Vec> tight;
    for (const auto& h : hs)
      if (dot(h.normal, p) == h.offset) tight.push_back(h.normal);
    // rank test by brute force over n-subsets of tight normals
    bool full = false;
    std::vector<bool> pick(tight.size(), false);
    if (tight.size() >= n) {
      std::fill(pick.begin(), pick.begin() + n, true);
      do {
        std::vector<Vec> m;
        for (std::size_t i = 0; i < tight.size(); ++i)
          if (pick[i]) m.push_back(tight[i]);
        if (det(m) != 0) full = true;
      } while (!full && std::prev_permutation(pick.begin(), pick.end()));
    }
    if (full) out.insert(p);
  }
  return {out.begin(), out.end()};
}

/// min over primitive u in [-bound, bound]^n of the spread of <u, .> on pts.
inline std::int64_t width(const std::vector<Vec>& pts, std::int64_t bound) {
  const std::size_t n = pts.front().size();
  Vec u(n, -bound);
  std::int64_t best = -1;
  while (true) {
    if (gcdAll(u) == 1) {
      std::int64_t lo = dot(u, pts[0]), hi = lo;
      for (const auto& p : pts) {
        lo = std::min(lo, dot(u, p));
        hi = std::max(hi, dot(u, p));
      }
      if (best < 0 || hi - lo < best) best = hi - lo;
    }
    std::size_t i = 0;
    while (i < n && u[i] == bound) u[i++] = -bound;
    if (i == n) break;
    ++u[i];
  }
  return best;
}

/// Random unimodular matrix as a product of elementary operations.
inline std::vector<Vec> randomUnimodular(std::size_t n, std::mt19937& rng, int steps = 4,
                                         int maxFactor = 2) {
  std::vector<Vec> m(n, Vec(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  if (n < 2) {
    if (n == 1 && rng() % 2) m[0][0] = -1;
    return m;
  }
  std::uniform_int_distribution<std::size_t> pickRow(0, n - 1);
  std::uniform_int_distribution<int> pickFactor(-maxFactor, maxFactor);
  for (int s = 0; s < steps; ++s) {
    const std::size_t a = pickRow(rng);
    std::size_t b = pickRow(rng);
    if (a == b) b = (a + 1) % n;
    switch (rng() % 3) {
      case 0:
        std::swap(m[a], m[b]);
        break;
      case 1:
        for (auto& x : m[a]) x = -x;
        break;
      default: {
        const int f = pickFactor(rng);
        for (std::size_t k = 0; k < n; ++k) m[a][k] += f * m[b][k];
      }
    }
  }
  return m;
}

inline Vec apply(const std::vector<Vec>& m, const Vec& x) {
  Vec y(m.size(), 0);
  for (std::size_t i = 0; i < m.size(); ++i) y[i] = dot(m[i], x);
  return y;
}

// --- conversions ---------------------------------------------------------

inline latpoly::IntVector toInt(const Vec& v) {
  latpoly::IntVector out;
  for (auto x : v) out.emplace_back(static_cast<long>(x));
  return out;
}

inline std::vector<latpoly::IntVector> toInt(const std::vector<Vec>& vs) {
  std::vector<latpoly::IntVector> out;
  for (const auto& v : vs) out.push_back(toInt(v));
  return out;
}

inline Vec fromInt(const latpoly::IntVector& v) {
  Vec out;
  for (const auto& x : v) out.push_back(x.get_si());
  return out;
}

inline std::vector<Vec> fromInt(const std::vector<latpoly::IntVector>& vs) {
  std::vector<Vec> out;
  for (const auto& v : vs) out.push_back(fromInt(v));
  return out;
}

inline latpoly::IntMatrix toMatrix(const std::vector<Vec>& rows) {
  latpoly::IntMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = static_cast<long>(rows[i][j]);
  return m;
}

/// Random full-dimensional point set in [0, box]^n.
inline std::vector<Vec> randomFullDimensional(std::size_t n, std::int64_t box, std::size_t count,
                                              std::mt19937& rng) {
  std::uniform_int_distribution<std::int64_t> coord(0, box);
  while (true) {
    std::vector<Vec> pts;
    for (std::size_t i = 0; i < count; ++i) {
      Vec p(n);
      for (auto& x : p) x = coord(rng);
      pts.push_back(p);
    }
    // affine rank check by brute force over n-subsets of differences
    std::vector<Vec> diffs;
    for (std::size_t i = 1; i < pts.size(); ++i) {
      Vec d(n);
      for (std::size_t k = 0; k < n; ++k) d[k] = pts[i][k] - pts[0][k];
      diffs.push_back(d);
    }
    if (diffs.size() < n) continue;
    std::vector<bool> pick(diffs.size(), false);
    std::fill(pick.begin(), pick.begin() + n, true);
    bool full = false;
    do {
      std::vector<Vec> m;
      for (std::size_t i = 0; i < diffs.size(); ++i)
        if (pick[i]) m.push_back(diffs[i]);
      if (det(m) != 0) full = true;
    } while (!full && std::prev_permutation(pick.begin(), pick.end()));
    if (full) return pts;
  }
}

}  // namespace oracle

namespace oracle {

// --- modular arithmetic for rank and minor checks ------------------------

constexpr std::int64_t kPrime = 2147483629;  // prime below 2^31

inline std::int64_t mod(std::int64_t x) {
  x %= kPrime;
  return x < 0 ? x + kPrime : x;
}

inline std::int64_t mulmod(std::int64_t a, std::int64_t b) {
  return static_cast<std::int64_t>((static_cast<__int128>(a) * b) % kPrime);
}

inline std::int64_t powmod(std::int64_t a, std::int64_t e) {
  std::int64_t r = 1;
  a = mod(a);
  while (e > 0) {
    if (e & 1) r = mulmod(r, a);
    a = mulmod(a, a);
    e >>= 1;
  }
  return r;
}

inline std::int64_t invmod(std::int64_t a) { return powmod(a, kPrime - 2); }

/// Rank over Z/p; a lower bound for the rational rank, equal for all but
/// finitely many primes.
inline std::size_t rankMod(std::vector<Vec> m) {
  std::size_t r = 0;
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  for (auto& row : m)
    for (auto& x : row) x = mod(x);
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[r]);
    const std::int64_t inv = invmod(m[r][c]);
    for (std::size_t i = r + 1; i < m.size(); ++i) {
      if (m[i][c] == 0) continue;
      const std::int64_t f = mulmod(m[i][c], inv);
      for (std::size_t j = c; j < cols; ++j) m[i][j] = mod(m[i][j] - mulmod(f, m[r][j]));
    }
    ++r;
  }
  return r;
}

inline std::int64_t fallingFactorial(std::int64_t a, std::int64_t m) {
  std::int64_t r = 1;
  for (std::int64_t i = 0; i < m; ++i) r *= (a - i);
  return r;
}

/// Multi-indices of total degree <= k in N^n (any order).
inline std::vector<Vec> multiIndices(std::size_t n, std::int64_t k) {
  std::vector<Vec> out;
  Vec u(n, 0);
  while (true) {
    std::int64_t s = 0;
    for (auto x : u) s += x;
    if (s <= k) out.push_back(u);
    std::size_t i = 0;
    while (i < n && u[i] == k) u[i++] = 0;
    if (i == n) break;
    ++u[i];
  }
  return out;
}

/// Integer generic jet matrix [(a)_u] with rows u, columns a.
inline std::vector<Vec> genericJetMatrix(const std::vector<Vec>& a, std::int64_t k) {
  const std::size_t n = a.front().size();
  std::vector<Vec> m;
  for (const auto& u : multiIndices(n, k)) {
    Vec row;
    for (const auto& col : a) {
      std::int64_t v = 1;
      for (std::size_t j = 0; j < n; ++j) v *= fallingFactorial(col[j], u[j]);
      row.push_back(v);
    }
    m.push_back(row);
  }
  return m;
}

inline std::int64_t binom(std::int64_t n, std::int64_t k) {
  std::int64_t r = 1;
  for (std::int64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

/// Largest k with full generic jet rank, by modular rank of the full matrix.
inline std::int64_t genericJetDegree(const std::vector<Vec>& a) {
  const std::size_t n = a.front().size();
  std::int64_t k = 0;
  while (binom(n + k + 1, k + 1) <= static_cast<std::int64_t>(a.size()) &&
         static_cast<std::int64_t>(rankMod(genericJetMatrix(a, k + 1))) ==
             binom(n + k + 1, k + 1))
    ++k;
  return k;
}

// --- Gauss map image ------------------------------------------------------

/// Plücker exponents by brute force: every r-subset of columns whose minor
/// of the jet matrix at a random torus point is nonzero mod p, tried at
/// three points. Exponents must be nonnegative.
inline std::set<Vec> gaussImageByMinors(const std::vector<Vec>& a, std::int64_t k, std::mt19937& rng) {
  const std::size_t n = a.front().size();
  const auto rows = multiIndices(n, k);
  const std::size_t r = rows.size();
  std::uniform_int_distribution<std::int64_t> coord(2, kPrime - 1);
  std::vector<std::vector<Vec>> matrices;
  for (int t = 0; t < 3; ++t) {
    Vec point(n);
    for (auto& x : point) x = coord(rng);
    std::vector<Vec> m;
    for (const auto& u : rows) {
      Vec row;
      for (const auto& col : a) {
        std::int64_t v = 1;
        for (std::size_t j = 0; j < n; ++j) {
          const std::int64_t c = fallingFactorial(col[j], u[j]);
          if (c == 0) {
            v = 0;
            break;
          }
          v = mulmod(v, mulmod(mod(c), powmod(point[j], col[j] - u[j])));
        }
        row.push_back(v);
      }
      m.push_back(row);
    }
    matrices.push_back(m);
  }

  std::set<Vec> out;
  std::vector<bool> pick(a.size(), false);
  if (a.size() < r) return out;
  std::fill(pick.begin(), pick.begin() + r, true);
  do {
    bool nonzero = false;
    for (const auto& m : matrices) {
      std::vector<Vec> sub;
      for (const auto& row : m) {
        Vec s;
        for (std::size_t j = 0; j < a.size(); ++j)
          if (pick[j]) s.push_back(row[j]);
        sub.push_back(s);
      }
      if (rankMod(sub) == r) nonzero = true;
    }
    if (!nonzero) continue;
    Vec sigma(n, 0);
    for (std::size_t j = 0; j < a.size(); ++j)
      if (pick[j])
        for (std::size_t i = 0; i < n; ++i) sigma[i] += a[j][i];
    out.insert(sigma);
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return out;
}

}  // namespace oracle
