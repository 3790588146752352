#include <doctest.h>

#include <random>

#include "latpoly/jets.hpp"
#include "oracles.hpp"

using namespace latpoly;

namespace {

PointConfiguration config(std::size_t n, std::vector<IntVector> pts) {
  return PointConfiguration(n, std::move(pts));
}

PointConfiguration polytopePoints(std::vector<IntVector> vertices) {
  return PointConfiguration::fromPolytope(LatticePolytope::fromVertices(vertices));
}

PointConfiguration dilatedTriangle(long d) {
  return polytopePoints({{0, 0}, {d, 0}, {0, d}});
}

JetPoint pt(std::initializer_list<long> xs) {
  RatVector v;
  for (long x : xs) v.emplace_back(x);
  return JetPoint::at(v);
}

}  // namespace

TEST_CASE("multi-index order") {
  auto m = multiIndices(2, 2);
  CHECK(m == std::vector<IntVector>{{0, 0}, {1, 0}, {0, 1}, {2, 0}, {1, 1}, {0, 2}});
  CHECK(multiIndices(3, 3).size() == 20);
  CHECK(multiIndices(1, 4).size() == 5);
}

TEST_CASE("jet matrix examples") {
  auto tri = config(2, {{0, 0}, {1, 0}, {0, 1}});
  auto jm = jetMatrix(tri, 1, pt({1, 1}));
  // columns in lexicographic order (0,0), (0,1), (1,0)
  CHECK(jm.entries == toRational(IntMatrix{{1, 1, 1}, {0, 0, 1}, {0, 1, 0}}));
  CHECK(rank(jm.entries) == 3);
  CHECK(jm.fullRankTarget == 3);

  auto line = config(1, {{0}, {1}, {2}});
  auto g = jetMatrix(line, 2, JetPoint::generic());
  CHECK(g.entries == toRational(IntMatrix{{1, 1, 1}, {0, 1, 2}, {0, 0, 2}}));

  auto gap = config(1, {{0}, {2}});
  auto z = jetMatrix(gap, 1, pt({0}));
  CHECK(z.entries == toRational(IntMatrix{{1, 0}, {0, 0}}));
  CHECK(rank(z.entries) == 1);

  // rational point: d/dx x^2 at 1/2 is 1
  auto half = jetMatrix(gap, 1, JetPoint::at({Rational(1, 2)}));
  CHECK(half.entries(0, 1) == Rational(1, 4));
  CHECK(half.entries(1, 1) == 1);

  CHECK_THROWS_AS(jetMatrix(gap, 1, pt({1, 1})), DimensionError);
  CHECK_THROWS_AS(config(2, {{0, 0}, {0, 0}}), InvalidArgument);
}

TEST_CASE("Laurent exponents") {
  auto laurent = config(1, {{-1}, {0}, {1}});
  auto jm = jetMatrix(laurent, 1, pt({2}));
  CHECK(jm.entries(0, 0) == Rational(1, 2));
  CHECK(jm.entries(1, 0) == Rational(-1, 4));
  CHECK_THROWS_AS(jetMatrix(laurent, 1, pt({0})), PointNotInDomain);
}

TEST_CASE("jet spannedness and degree of jet separation") {
  auto square = polytopePoints({{-1, -1}, {1, -1}, {-1, 1}, {1, 1}});
  CHECK(isJetSpanned(square, 2, pt({1, 1})));
  CHECK_FALSE(isJetSpanned(square, 3, pt({1, 1})));
  CHECK(degreeOfJetSeparation(square, pt({1, 1})) == 2);

  auto tri = config(2, {{0, 0}, {1, 0}, {0, 1}});
  CHECK(degreeOfJetSeparation(tri, pt({1, 1})) == 1);
  for (std::size_t n = 1; n <= 4; ++n) {
    std::vector<IntVector> pts{IntVector(n)};
    for (std::size_t i = 0; i < n; ++i) {
      IntVector e(n);
      e[i] = 1;
      pts.push_back(e);
    }
    CHECK(isJetSpanned(config(n, pts), 1, JetPoint::at(RatVector(n, Rational(3, 2)))));
  }

  auto corner = config(2, {{1, 0}, {0, 1}});
  CHECK_THROWS_AS(degreeOfJetSeparation(corner, pt({0, 0})), PointNotInDomain);
}

TEST_CASE("dilated triangles separate d-jets at the general point") {
  for (long d = 1; d <= 4; ++d) {
    const auto a = dilatedTriangle(d);
    CHECK(degreeOfJetSeparation(a, JetPoint::generic()) == static_cast<unsigned long>(d));
    CHECK(oracle::genericJetDegree(oracle::fromInt(a.exponents())) == d);
  }
}

TEST_CASE("generic degree agrees with the modular rank oracle on random polygons") {
  std::mt19937 rng(31);
  for (int trial = 0; trial < 40; ++trial) {
    const auto pts = oracle::randomFullDimensional(2, 4, 4, rng);
    const auto a = PointConfiguration::fromPolytope(LatticePolytope::fromVertices(oracle::toInt(pts)));
    CHECK(static_cast<std::int64_t>(degreeOfJetSeparation(a, JetPoint::generic())) ==
          oracle::genericJetDegree(oracle::fromInt(a.exponents())));
  }
}

TEST_CASE("rank at torus points equals the generic rank") {
  std::mt19937 rng(41);
  std::uniform_int_distribution<long> num(-9, 9), den(1, 7);
  for (int trial = 0; trial < 40; ++trial) {
    const auto pts = oracle::randomFullDimensional(2, 3, 5, rng);
    const auto a = PointConfiguration::fromPolytope(LatticePolytope::fromVertices(oracle::toInt(pts)));
    for (unsigned long k = 0; k <= 3; ++k) {
      RatVector p;
      for (int j = 0; j < 2; ++j) {
        long x = 0;
        while (x == 0) x = num(rng);
        Rational r(x, den(rng));
        r.canonicalize();
        p.push_back(r);
      }
      const auto special = jetMatrix(a, k, JetPoint::at(p));
      const auto generic = jetMatrix(a, k, JetPoint::generic());
      const auto r = rank(special.entries);
      CHECK(r == rank(generic.entries));
      CHECK(r <= std::min<std::size_t>(a.size(), special.rows.size()));
    }
  }
}

TEST_CASE("generic jet degree is invariant under unimodular maps") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    const auto pts = oracle::randomFullDimensional(2, 3, 5, rng);
    auto p = LatticePolytope::fromVertices(oracle::toInt(pts));
    auto u = oracle::toMatrix(oracle::randomUnimodular(2, rng, 4));
    auto q = transformed(p, u, IntVector{-3, 2});
    CHECK(degreeOfJetSeparation(PointConfiguration::fromPolytope(p), JetPoint::generic()) ==
          degreeOfJetSeparation(PointConfiguration::fromPolytope(q), JetPoint::generic()));
  }
}

TEST_CASE("dilation never lowers the generic jet degree on small polygons") {
  std::mt19937 rng(13);
  for (int trial = 0; trial < 15; ++trial) {
    const auto pts = oracle::randomFullDimensional(2, 2, 4, rng);
    auto p = LatticePolytope::fromVertices(oracle::toInt(pts));
    const auto s1 = degreeOfJetSeparation(PointConfiguration::fromPolytope(p), JetPoint::generic());
    const auto s2 =
        degreeOfJetSeparation(PointConfiguration::fromPolytope(dilate(p, 2)), JetPoint::generic());
    CHECK(s2 >= s1);
  }
}

TEST_CASE("jet separation at vertices") {
  auto sq = LatticePolytope::fromVertices({{0, 0}, {2, 0}, {0, 2}, {2, 2}});
  CHECK(jetSeparationAtVertex(sq, {0, 0}) == 2);
  auto tri = LatticePolytope::fromVertices({{0, 0}, {1, 0}, {0, 1}});
  for (const auto& v : tri.vertices()) CHECK(jetSeparationAtVertex(tri, v) == 1);
  auto rect = LatticePolytope::fromVertices({{0, 0}, {1, 0}, {0, 2}, {1, 2}});
  CHECK(jetSeparationAtVertex(rect, {0, 0}) == 1);
  auto big = LatticePolytope::fromVertices({{0, 0}, {3, 0}, {0, 3}});
  CHECK(jetSeparationAtVertex(big, {3, 0}) == 3);

  CHECK_THROWS_AS(jetSeparationAtVertex(sq, {1, 1}), NotAVertexError);
  auto cone = LatticePolytope::fromVertices({{0, 0}, {2, 0}, {0, 1}});
  CHECK_THROWS_AS(jetSeparationAtVertex(cone, {0, 1}), NonSmoothError);

  // a triangle sitting in a plane of R^3
  auto flat = LatticePolytope::fromVertices({{0, 0, 1}, {2, 0, 1}, {0, 2, 1}});
  CHECK(jetSeparationAtVertex(flat, {2, 0, 1}) == 2);
}
