// Copyright 2026 The fourvertex Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <algorithm>
#include <array>
#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "fixtures.h"
#include "fourvertex/sphere_core.h"
#include "oracles.h"

namespace fourvertex {
namespace {

using oracle::randomUnit;

constexpr double kAngleTol = 1e-12;

bool nondegenerate(std::span<const UnitVec3> pts) {
  for (std::size_t a = 0; a < pts.size(); ++a)
    for (std::size_t b = a + 1; b < pts.size(); ++b)
      for (std::size_t c = b + 1; c < pts.size(); ++c)
        if (orientedSign(pts[a], pts[b], pts[c]) == Sign::Zero) return false;
  return true;
}

TEST(OrientedSignTest, IdentityFrame) {
  EXPECT_EQ(orientedSign(UnitVec3::e1(), UnitVec3::e2(), UnitVec3::e3()), Sign::Positive);
  EXPECT_EQ(orientedSign(UnitVec3::e1(), UnitVec3::e2(), UnitVec3::e1()), Sign::Zero);
}

TEST(OrientedSignTest, TetrahedralTriple) {
  // det[(1,1,1), (1,-1,-1), (-1,1,-1)] = 4, so the normalized value is 4 / (3 sqrt 3).
  const auto t = fixtures::tetrahedralFrame();
  EXPECT_EQ(orientedSign(t[0], t[1], t[2]), Sign::Positive);
  EXPECT_NEAR(det3(t[0].vec(), t[1].vec(), t[2].vec()), 4.0 / (3.0 * std::sqrt(3.0)), 1e-15);
}

TEST(OrientedSignTest, AntisymmetricAndCyclic) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 2000; ++trial) {
    const UnitVec3 u = randomUnit(rng), v = randomUnit(rng), w = randomUnit(rng);
    const Sign s = orientedSign(u, v, w);
    EXPECT_EQ(orientedSign(v, u, w), -s);
    EXPECT_EQ(orientedSign(v, w, u), s);
  }
}

TEST(StrictSignTest, ThrowsOnDegenerateTriple) {
  try {
    strictSign(UnitVec3::e1(), UnitVec3::e2(), UnitVec3::normalize({1, 1, 0}));
    FAIL() << "expected DegenerateTriple";
  } catch (const GeometryError& e) {
    EXPECT_EQ(e.code(), ErrorCode::DegenerateTriple);
  }
}

TEST(Balanced4Test, Examples) {
  const auto t = fixtures::tetrahedralFrame();
  EXPECT_TRUE(balanced4(t[0], t[1], t[2], t[3]));
  EXPECT_FALSE(balanced4(UnitVec3::e1(), UnitVec3::e2(), UnitVec3::e3(),
                         UnitVec3::normalize({1, 1, 1})));
}

TEST(Balanced4Test, RejectsCoplanarTriple) {
  EXPECT_THROW(balanced4(UnitVec3::e1(), UnitVec3::e2(), UnitVec3::normalize({1, 1, 0}),
                         UnitVec3::e3()),
               GeometryError);
}

TEST(Balanced4Test, InvariantUnderAllPermutations) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    std::array<UnitVec3, 4> p{randomUnit(rng), randomUnit(rng), randomUnit(rng), randomUnit(rng)};
    if (!nondegenerate(p)) continue;
    const bool expected = balanced4(p[0], p[1], p[2], p[3]);
    std::array<int, 4> idx{0, 1, 2, 3};
    do {
      EXPECT_EQ(balanced4(p[idx[0]], p[idx[1]], p[idx[2]], p[idx[3]]), expected);
    } while (std::next_permutation(idx.begin(), idx.end()));
  }
}

TEST(Balanced4Test, AgreesWithHemisphereWitness) {
  std::mt19937_64 rng(13);
  int balancedSeen = 0;
  for (int trial = 0; trial < 3000; ++trial) {
    std::array<UnitVec3, 4> p{randomUnit(rng), randomUnit(rng), randomUnit(rng), randomUnit(rng)};
    if (!nondegenerate(p)) continue;
    const bool b = balanced4(p[0], p[1], p[2], p[3]);
    balancedSeen += b ? 1 : 0;
    EXPECT_EQ(b, !hemisphereWitness(p).has_value());
  }
  // One random quadruple in eight is balanced.
  EXPECT_GT(balancedSeen, 250);
  EXPECT_LT(balancedSeen, 500);
}

TEST(HemisphereWitnessTest, OctantHasWitness) {
  const std::vector<UnitVec3> pts{UnitVec3::e1(), UnitVec3::e2(), UnitVec3::e3()};
  const auto n = hemisphereWitness(pts);
  ASSERT_TRUE(n.has_value());
  for (const auto& p : pts) EXPECT_GE(dot(n->vec(), p.vec()), -1e-12);
}

TEST(HemisphereWitnessTest, TetrahedronHasNone) {
  EXPECT_FALSE(hemisphereWitness(fixtures::tetrahedralFrame()).has_value());
}

TEST(HemisphereWitnessTest, NeedsTwoPoints) {
  const std::vector<UnitVec3> one{UnitVec3::e1()};
  EXPECT_THROW(hemisphereWitness(one), GeometryError);
}

TEST(HemisphereWitnessTest, MonteCarloFindsNothingTheSolverMisses) {
  const oracle::DirectionTable table(20000, 99);
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 400; ++trial) {
    std::vector<UnitVec3> pts;
    const std::size_t m = 4 + static_cast<std::size_t>(trial % 5);
    for (std::size_t k = 0; k < m; ++k) pts.push_back(randomUnit(rng));
    if (!nondegenerate(pts)) continue;
    if (table.findHemisphere(pts)) {
      EXPECT_TRUE(hemisphereWitness(pts).has_value());
    }
  }
}

TEST(PositiveCombinationTest, TetrahedralTargets) {
  const auto t = fixtures::tetrahedralFrame();
  const auto own = positiveCombination(t, t[0]);
  ASSERT_EQ(own.size(), 4u);
  EXPECT_GT(own[0], 0.0);
  for (int k = 1; k < 4; ++k) EXPECT_NEAR(own[k] / own[0], 0.0, 1e-12);

  const auto opposite = positiveCombination(t, -t[0]);
  EXPECT_NEAR(opposite[0], 0.0, 1e-12);
  EXPECT_NEAR(opposite[2] / opposite[1], 1.0, 1e-12);
  EXPECT_NEAR(opposite[3] / opposite[1], 1.0, 1e-12);
}

TEST(PositiveCombinationTest, HexagonResidualsAreTiny) {
  const SphericalPolygon hex = fixtures::hexagon();
  std::mt19937_64 rng(19);
  for (int trial = 0; trial < 100; ++trial) {
    const UnitVec3 target = randomUnit(rng);
    const auto lambda = positiveCombination(hex.vertices(), target);
    Vec3 sum;
    for (std::size_t k = 0; k < lambda.size(); ++k) {
      EXPECT_GE(lambda[k], 0.0);
      sum += lambda[k] * hex.vertices()[k].vec();
    }
    const double residual = std::atan2(cross(sum, target.vec()).norm(), dot(sum, target.vec()));
    EXPECT_LT(residual, 1e-9);
  }
}

TEST(PositiveCombinationTest, RejectsHemisphereSet) {
  const std::vector<UnitVec3> pts{UnitVec3::e1(), UnitVec3::e2(), UnitVec3::e3(),
                                  UnitVec3::normalize({1, 1, 1})};
  try {
    positiveCombination(pts, -UnitVec3::e1());
    FAIL() << "expected NotBalanced";
  } catch (const GeometryError& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotBalanced);
  }
}

TEST(ArcsRelationTest, EquatorAndMeridianCross) {
  const GreatArc equator(UnitVec3::fromLonLatDegrees(-30, 0), UnitVec3::fromLonLatDegrees(30, 0));
  const GreatArc meridian(UnitVec3::fromLonLatDegrees(0, -30), UnitVec3::fromLonLatDegrees(0, 30));
  const ArcRelation rel = arcsRelation(equator, meridian);
  ASSERT_EQ(rel.tag, ArcRelationTag::Cross);
  EXPECT_LT(sphericalDistance(*rel.witness, UnitVec3::e1()), kAngleTol);
}

TEST(ArcsRelationTest, BackMeridianIsAntipodal) {
  const GreatArc equator(UnitVec3::fromLonLatDegrees(-30, 0), UnitVec3::fromLonLatDegrees(30, 0));
  const GreatArc back(UnitVec3::fromLonLatDegrees(180, -30), UnitVec3::fromLonLatDegrees(180, 30));
  const ArcRelation rel = arcsRelation(equator, back);
  ASSERT_EQ(rel.tag, ArcRelationTag::AntipodalCross);
  EXPECT_LT(sphericalDistance(*rel.witness, UnitVec3::e1()), kAngleTol);
}

TEST(ArcsRelationTest, TetrahedralOppositeEdgesAreAntipodal) {
  const auto t = fixtures::tetrahedralFrame();
  const GreatArc a(t[0], t[1]), b(t[2], t[3]);
  EXPECT_EQ(arcsRelation(a, b).tag, ArcRelationTag::AntipodalCross);
  EXPECT_EQ(oracle::denseArcRelation(t[0].vec(), t[1].vec(), t[2].vec(), t[3].vec()).verdict,
            oracle::ArcVerdict::Antipodal);
}

TEST(ArcsRelationTest, SymmetricAndReflectionConsistent) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 2000; ++trial) {
    std::array<UnitVec3, 4> p{randomUnit(rng), randomUnit(rng), randomUnit(rng), randomUnit(rng)};
    if (!nondegenerate(p)) continue;
    const GreatArc a(p[0], p[1]), b(p[2], p[3]);
    const auto ab = arcsRelation(a, b).tag;
    EXPECT_EQ(arcsRelation(b, a).tag, ab);
    EXPECT_EQ(ab == ArcRelationTag::AntipodalCross,
              arcsRelation(a, b.reflected()).tag == ArcRelationTag::Cross);
    EXPECT_EQ(ab == ArcRelationTag::AntipodalCross, balanced4(p[0], p[1], p[2], p[3]));
  }
}

TEST(ArcsRelationTest, MatchesDenseSampling) {
  std::mt19937_64 rng(29);
  int compared = 0;
  for (int trial = 0; trial < 400; ++trial) {
    std::array<UnitVec3, 4> p{randomUnit(rng), randomUnit(rng), randomUnit(rng), randomUnit(rng)};
    if (!nondegenerate(p)) continue;
    const auto want = oracle::denseArcRelation(p[0].vec(), p[1].vec(), p[2].vec(), p[3].vec());
    if (want.verdict == oracle::ArcVerdict::Ambiguous) continue;
    ++compared;
    const ArcRelation got = arcsRelation(GreatArc(p[0], p[1]), GreatArc(p[2], p[3]));
    switch (want.verdict) {
      case oracle::ArcVerdict::Cross:
        ASSERT_EQ(got.tag, ArcRelationTag::Cross);
        EXPECT_LT((got.witness->vec() - *want.point).norm(), 1e-6);
        break;
      case oracle::ArcVerdict::Antipodal:
        ASSERT_EQ(got.tag, ArcRelationTag::AntipodalCross);
        EXPECT_LT((got.witness->vec() - *want.point).norm(), 1e-6);
        break;
      default:
        EXPECT_EQ(got.tag, ArcRelationTag::Disjoint);
    }
  }
  EXPECT_GT(compared, 350);
}

TEST(PointInTriangleTest, Examples) {
  const UnitVec3 a = UnitVec3::e1(), b = UnitVec3::e2(), c = UnitVec3::e3();
  EXPECT_TRUE(pointInSphericalTriangle(UnitVec3::normalize({1, 1, 1}), a, b, c));
  EXPECT_FALSE(pointInSphericalTriangle(UnitVec3::normalize({-1, -1, -1}), a, b, c));
  EXPECT_FALSE(pointInSphericalTriangle(UnitVec3::normalize({1, 1, -0.5}), a, b, c));
}

TEST(PointInTriangleTest, AgreesWithBarycentricCoordinates) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 10000; ++trial) {
    const UnitVec3 a = randomUnit(rng), b = randomUnit(rng), c = randomUnit(rng), p = randomUnit(rng);
    if (orientedSign(a, b, c) == Sign::Zero) continue;
    try {
      EXPECT_EQ(pointInSphericalTriangle(p, a, b, c),
                oracle::insideByBarycentric(p.vec(), a.vec(), b.vec(), c.vec()));
    } catch (const GeometryError&) {
      // p on a side circle within tolerance
    }
  }
}

TEST(SphericalDistanceTest, Examples) {
  EXPECT_DOUBLE_EQ(sphericalDistance(UnitVec3::e1(), UnitVec3::e1()), 0.0);
  EXPECT_NEAR(sphericalDistance(UnitVec3::e1(), -UnitVec3::e1()), kPi, kAngleTol);
  EXPECT_NEAR(sphericalDistance(UnitVec3::e1(), UnitVec3::e2()), kPi / 2, kAngleTol);
}

TEST(GreatArcTest, SlerpEndpointsAndMidpoint) {
  const GreatArc arc(UnitVec3::e1(), UnitVec3::e2());
  EXPECT_LT(sphericalDistance(arc.at(0.0), UnitVec3::e1()), kAngleTol);
  EXPECT_LT(sphericalDistance(arc.at(1.0), UnitVec3::e2()), kAngleTol);
  EXPECT_LT(sphericalDistance(arc.at(0.5), UnitVec3::normalize({1, 1, 0})), kAngleTol);
  EXPECT_NEAR(arc.length(), kPi / 2, kAngleTol);
}

TEST(GreatArcTest, RejectsAntipodalEndpoints) {
  EXPECT_THROW(GreatArc(UnitVec3::e1(), -UnitVec3::e1()), GeometryError);
}

TEST(MoveTowardTest, TravelsTheRequestedAngle) {
  const UnitVec3 p = moveToward(UnitVec3::e1(), UnitVec3::e2(), 0.25);
  EXPECT_NEAR(sphericalDistance(UnitVec3::e1(), p), 0.25, kAngleTol);
  EXPECT_NEAR(p.z(), 0.0, kAngleTol);
}

TEST(UnitVec3Test, NormalizeRejectsZero) {
  EXPECT_THROW(UnitVec3::normalize({0, 0, 0}), GeometryError);
}

TEST(AntipodalTest, DetectsExactAndNearPairs) {
  const UnitVec3 u = UnitVec3::normalize({0.3, -0.2, 0.9});
  EXPECT_TRUE(areAntipodal(u, -u));
  EXPECT_FALSE(areAntipodal(u, u));
  EXPECT_FALSE(areAntipodal(u, UnitVec3::normalize({-0.3, 0.2, -0.8})));
}

}  // namespace
}  // namespace fourvertex
