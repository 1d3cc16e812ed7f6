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

// Guarded primitive predicates on the unit sphere. Every predicate reduces to
// the sign of a 3x3 determinant; a determinant whose magnitude falls below the
// degeneracy tolerance is reported as Sign::Zero and the higher-level
// predicates turn that into a DegenerateTriple error instead of branching.

#pragma once

#include <cmath>
#include <optional>
#include <span>
#include <vector>

#include "fourvertex/errors.h"

namespace fourvertex {

inline constexpr double kDegeneracyTol = 1e-12;
inline constexpr double kNormalizationTol = 1e-12;
inline constexpr double kPi = 3.14159265358979323846;

struct Vec3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  constexpr Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
  constexpr Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
  constexpr Vec3 operator-() const { return {-x, -y, -z}; }
  constexpr Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
  constexpr Vec3 operator/(double s) const { return {x / s, y / s, z / s}; }
  Vec3& operator+=(const Vec3& o) {
    x += o.x;
    y += o.y;
    z += o.z;
    return *this;
  }
  constexpr bool operator==(const Vec3&) const = default;

  double norm() const { return std::sqrt(x * x + y * y + z * z); }
};

constexpr Vec3 operator*(double s, const Vec3& v) { return v * s; }
constexpr double dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
constexpr Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}
/// det[a b c] with a, b, c as columns, i.e. a . (b x c).
constexpr double det3(const Vec3& a, const Vec3& b, const Vec3& c) { return dot(a, cross(b, c)); }

/// A point of S^2. Construction normalizes; the stored vector has unit length
/// to within kNormalizationTol.
class UnitVec3 {
 public:
  /// Throws DegenerateEdge if v is (numerically) the zero vector.
  static UnitVec3 normalize(const Vec3& v);
  static UnitVec3 fromLonLatDegrees(double lonDeg, double latDeg);
  static constexpr UnitVec3 e1() { return UnitVec3(Vec3{1, 0, 0}); }
  static constexpr UnitVec3 e2() { return UnitVec3(Vec3{0, 1, 0}); }
  static constexpr UnitVec3 e3() { return UnitVec3(Vec3{0, 0, 1}); }

  constexpr const Vec3& vec() const { return v_; }
  constexpr double x() const { return v_.x; }
  constexpr double y() const { return v_.y; }
  constexpr double z() const { return v_.z; }

  /// The antipodal point.
  constexpr UnitVec3 operator-() const { return UnitVec3(-v_); }
  constexpr bool operator==(const UnitVec3&) const = default;

 private:
  constexpr explicit UnitVec3(const Vec3& v) : v_(v) {}
  Vec3 v_;
};

enum class Sign : int { Negative = -1, Zero = 0, Positive = 1 };

constexpr int toInt(Sign s) { return static_cast<int>(s); }
constexpr Sign operator-(Sign s) { return static_cast<Sign>(-static_cast<int>(s)); }
constexpr Sign signOf(double v, double tol) {
  if (v > tol) return Sign::Positive;
  if (v < -tol) return Sign::Negative;
  return Sign::Zero;
}

/// Sign of det[u v w]; Zero only when |det| < tol.
Sign orientedSign(const UnitVec3& u, const UnitVec3& v, const UnitVec3& w,
                  double tol = kDegeneracyTol);

/// Same as orientedSign but throws DegenerateTriple instead of returning Zero.
Sign strictSign(const UnitVec3& u, const UnitVec3& v, const UnitVec3& w,
                double tol = kDegeneracyTol);

/// True iff b = -a up to `angularTol` radians. Centrally symmetric polygons
/// carry exact antipodal pairs; every triple holding such a pair is coplanar
/// with the origin, so the predicates below treat these pairs separately.
bool areAntipodal(const UnitVec3& a, const UnitVec3& b, double angularTol = 1e-9);

/// True iff the four points are not contained in any closed hemisphere,
/// decided by the determinant relation
///   [a,b,c] ~ [a,c,d] !~ [a,b,d] ~ [b,c,d].
bool balanced4(const UnitVec3& a, const UnitVec3& b, const UnitVec3& c, const UnitVec3& d,
               double tol = kDegeneracyTol);

/// A unit normal n with n.p >= 0 for every point, or nullopt when the set is
/// balanced. Candidates are the normals +-(p x q) over all non-antipodal pairs;
/// under general position a supporting hemisphere can always be rotated onto
/// two such points, so the search is exact.
std::optional<UnitVec3> hemisphereWitness(std::span<const UnitVec3> points,
                                          double tol = kDegeneracyTol);

inline bool isBalanced(std::span<const UnitVec3> points, double tol = kDegeneracyTol) {
  return !hemisphereWitness(points, tol).has_value();
}

/// Nonnegative coefficients (one per point, not all zero) whose combination
/// points in the direction of target. Found by enumerating triples whose cone
/// contains the target. Throws NotBalanced unless the set is balanced.
std::vector<double> positiveCombination(std::span<const UnitVec3> points,
                                        const UnitVec3& target, double tol = kDegeneracyTol);

/// Minor geodesic arc between two points that are neither equal nor antipodal.
struct GreatArc {
  GreatArc(const UnitVec3& from, const UnitVec3& to);

  UnitVec3 a;
  UnitVec3 b;

  double length() const;
  /// Point at arc-length fraction t in [0, 1] (slerp).
  UnitVec3 at(double t) const;
  GreatArc reflected() const { return GreatArc(-a, -b); }
};

enum class ArcRelationTag { Disjoint, Cross, AntipodalCross };

struct ArcRelation {
  ArcRelationTag tag = ArcRelationTag::Disjoint;
  /// Cross: the common point. AntipodalCross: the point of the first arc
  /// whose antipode lies on the second arc.
  std::optional<UnitVec3> witness;
};

/// Classifies two arcs with four distinct endpoints in general position.
/// Throws DegenerateTriple if some endpoint triple is coplanar with the origin.
ArcRelation arcsRelation(const GreatArc& first, const GreatArc& second,
                         double tol = kDegeneracyTol);

/// True iff p lies strictly inside the geodesic triangle abc (the one of area
/// below 2*pi on the side selected by the orientation of a, b, c).
bool pointInSphericalTriangle(const UnitVec3& p, const UnitVec3& a, const UnitVec3& b,
                              const UnitVec3& c, double tol = kDegeneracyTol);

/// Great-circle distance in radians, in [0, pi].
double sphericalDistance(const UnitVec3& u, const UnitVec3& v);

/// Point at distance `angle` from `from` along the geodesic towards `toward`.
UnitVec3 moveToward(const UnitVec3& from, const UnitVec3& toward, double angle);

/// Two orthonormal tangent vectors at p, completing a right-handed frame
/// (t1, t2, p).
std::pair<Vec3, Vec3> tangentBasis(const UnitVec3& p);

}  // namespace fourvertex
