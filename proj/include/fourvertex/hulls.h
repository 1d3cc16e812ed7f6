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

// Lunes, convex hulls, interiors and vertex-only triangulations of simple
// spherical polygons.

#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "fourvertex/polygon.h"

namespace fourvertex {

/// Lune with cusps +-cusp whose two sides pass through p and q.
struct Lune {
  UnitVec3 cusp;
  UnitVec3 p;
  UnitVec3 q;
};

enum class LuneMembership { Interior, Boundary, Outside };

/// Throws DegenerateTriple if cusp, p, q are coplanar with the origin.
LuneMembership luneContains(const Lune& lune, const UnitVec3& x, double tol = kDegeneracyTol);

/// A pole strictly inside the open hemisphere containing every point. Throws
/// Balanced when no such hemisphere exists.
UnitVec3 strictHemispherePole(std::span<const UnitVec3> points, double tol = kDegeneracyTol);

struct SphericalConvexHull {
  std::vector<std::size_t> indices;  ///< into the input, counter-clockwise about the pole
  std::vector<UnitVec3> boundary;
  UnitVec3 pole;

  /// Closed membership test.
  bool contains(const UnitVec3& x, double tol = kDegeneracyTol) const;
};

/// Gnomonic projection about a strict pole, then a planar monotone chain.
/// Collinear boundary points are dropped. Throws Balanced.
SphericalConvexHull sphericalConvexHull(std::span<const UnitVec3> points,
                                        double tol = kDegeneracyTol);

/// Membership in the interior of a simple polygon, decided by the parity of
/// edge crossings along a geodesic from a known exterior point.
class InteriorRegion {
 public:
  InteriorRegion(SphericalPolygon polygon, std::vector<UnitVec3> exteriorReferences,
                 bool hemisphereCase, double tol);

  /// Throws AmbiguousInterior when every probe is degenerate.
  bool contains(const UnitVec3& x) const;
  const SphericalPolygon& polygon() const { return polygon_; }
  bool hemisphereCase() const { return hemisphereCase_; }

 private:
  SphericalPolygon polygon_;
  std::vector<UnitVec3> references_;
  bool hemisphereCase_;
  double tol_;
};

/// For balanced Q without antipodal crossings the exterior is the side
/// holding -Q; for Q inside an open hemisphere it is the side holding the
/// opposite pole. Throws NotSimple or AmbiguousInterior.
InteriorRegion interiorOf(const SphericalPolygon& polygon, double tol = kDegeneracyTol);

struct Triangulation {
  std::size_t polygonSize = 0;
  std::vector<std::array<std::size_t, 3>> triangles;
  std::vector<std::pair<std::size_t, std::size_t>> diagonals;  ///< (a, b) with a < b
  std::vector<std::vector<std::size_t>> dual;                  ///< triangle adjacency

  /// Triangles of dual degree at most one.
  std::vector<std::size_t> leaves() const;
  /// For each leaf with two polygon sides, the vertex shared by those sides.
  std::vector<std::size_t> leafMiddleVertices() const;
  /// Connected and acyclic.
  bool dualIsTree() const;
};

/// Ear clipping with the smallest index tried first. Throws EarNotFound.
Triangulation triangulateInterior(const SphericalPolygon& polygon, double tol = kDegeneracyTol);

/// Middle vertices of two-sided leaves in the triangulated pockets between
/// Q and its convex hull, as indices of Q, sorted. Throws ConvexInput when Q
/// has no pocket.
std::vector<std::size_t> exteriorPocketGoodVertices(const SphericalPolygon& polygon,
                                                    double tol = kDegeneracyTol);

}  // namespace fourvertex
