#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "latpoly/polytope.hpp"

namespace latpoly {

/**
 * A complete smooth fan in the plane, rays in counterclockwise order with
 * det(u_i, u_{i+1}) == 1 for every consecutive pair (cyclically).
 */
struct SmoothFan2D {
  using Ray = std::array<std::int64_t, 2>;
  std::vector<Ray> rays;

  /// Consecutive determinants are 1 and the rays wind around exactly once.
  bool isValid() const;

  /**
   * Representative of the GL(2, Z) class: lexicographic minimum over every
   * starting ray and both orientations of the rays rewritten in the basis
   * given by the first two.
   */
  SmoothFan2D canonical() const;

  friend bool operator==(const SmoothFan2D&, const SmoothFan2D&) = default;
  friend auto operator<=>(const SmoothFan2D&, const SmoothFan2D&) = default;
};

/**
 * Every smooth complete fan with at most maxRays rays, up to GL(2, Z),
 * obtained from the projective plane and the Hirzebruch surfaces F_a with
 * a <= aCap by repeated star subdivision. Canonical forms, sorted.
 */
std::vector<SmoothFan2D> enumerateSmoothFans2D(std::size_t maxRays, std::int64_t aCap = 12);

/**
 * All polygons with outer normal fan f and at most maxPoints lattice points,
 * one per translation class (first vertex at the origin).
 */
std::vector<LatticePolytope> polygonsFromFan(const SmoothFan2D& f, std::size_t maxPoints);

struct ClassificationRecord {
  LatticePolytope polytope;  // in normal form
  std::size_t latticePointCount = 0;
  bool isSmoothFlag = false;
  bool isCayleyFlag = false;
};

struct Smooth2DOptions {
  std::int64_t aCap = 12;
  /// 0 means maxPoints.
  std::size_t maxRays = 0;
  /// 0 means LATPOLY_THREADS if set, else the hardware concurrency.
  unsigned threads = 0;
};

/**
 * Smooth lattice polygons with at most maxPoints lattice points up to affine
 * unimodular equivalence, sorted by lattice point count and then normal form.
 */
std::vector<ClassificationRecord> listSmooth2D(std::size_t maxPoints = 12,
                                               const Smooth2DOptions& options = {});

/**
 * Smooth 3-polytopes from a JSON array of {"vertices": [[x, y, z], ...]}.
 * Each entry must be a three-dimensional smooth lattice polytope with at
 * most 16 lattice points. Throws ParseError for malformed JSON and
 * ValidationError (with the entry index) for a bad entry.
 */
std::vector<ClassificationRecord> parseClassification3D(const std::string& text);
std::vector<ClassificationRecord> loadClassification3D(const std::string& path);

std::map<std::size_t, std::size_t> tallyByPointCount(const std::vector<ClassificationRecord>& r);
std::map<bool, std::size_t> tallyByCayley(const std::vector<ClassificationRecord>& r);

}  // namespace latpoly
