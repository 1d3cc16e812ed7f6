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

#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "fourvertex/sphere_core.h"

namespace fourvertex {

/// Closed polygon on S^2 with cyclic indexing. Vertex order is the
/// orientation. Consecutive vertices are never equal or antipodal, so every
/// edge is a strict minor arc.
///
/// The type admits triangles so that the pieces of a split polygon and
/// ear-clipping sub-polygons can be represented; theorem-level code requires
/// at least four vertices.
class SphericalPolygon {
 public:
  explicit SphericalPolygon(std::vector<UnitVec3> vertices);

  std::size_t size() const { return vertices_.size(); }
  std::span<const UnitVec3> vertices() const { return vertices_; }

  /// Cyclic access; any integer index is reduced mod n.
  const UnitVec3& operator[](std::ptrdiff_t i) const { return vertices_[wrap(i)]; }
  std::size_t wrap(std::ptrdiff_t i) const {
    const auto n = static_cast<std::ptrdiff_t>(vertices_.size());
    return static_cast<std::size_t>(((i % n) + n) % n);
  }

  /// Edge i runs from vertex i to vertex i+1.
  GreatArc edge(std::ptrdiff_t i) const { return GreatArc((*this)[i], (*this)[i + 1]); }

  /// Vertexwise negation, same order.
  SphericalPolygon reflected() const;
  /// Same vertices traversed backwards, starting from vertex 0.
  SphericalPolygon reversed() const;
  /// Relabels so that old vertex k becomes vertex 0.
  SphericalPolygon rotated(std::size_t k) const;
  SphericalPolygon withVertexInserted(std::size_t position, const UnitVec3& v) const;

  bool operator==(const SphericalPolygon&) const = default;

 private:
  std::vector<UnitVec3> vertices_;
};

/// Closed polygonal line in R^3.
class SpacePolygon {
 public:
  explicit SpacePolygon(std::vector<Vec3> vertices);

  std::size_t size() const { return vertices_.size(); }
  std::span<const Vec3> vertices() const { return vertices_; }
  const Vec3& operator[](std::ptrdiff_t i) const {
    const auto n = static_cast<std::ptrdiff_t>(vertices_.size());
    return vertices_[static_cast<std::size_t>(((i % n) + n) % n)];
  }
  Vec3 edgeVector(std::ptrdiff_t i) const { return (*this)[i + 1] - (*this)[i]; }

 private:
  std::vector<Vec3> vertices_;
};

struct GeneralPositionReport {
  bool ok = true;
  std::vector<std::array<std::size_t, 3>> offendingTriples;
  double minAbsDet = 0.0;
};

/// u_i = (v_{i+1} - v_i) / |v_{i+1} - v_i|.
SphericalPolygon tangentIndicatrix(const SpacePolygon& polygon);

/// Enumerates every vertex triple and reports those with |det| < tol.
/// Triples containing an exact antipodal pair are skipped; for symmetric
/// polygons they are forced by the symmetry.
GeneralPositionReport checkGeneralPosition(const SphericalPolygon& polygon,
                                           double tol = kDegeneracyTol);

/// Moves every vertex by an independent tangential displacement of angular
/// size at most `magnitude`, retrying until the result is in general position
/// and, if the input already was, has the same inflection and crossing counts.
/// Deterministic in `seed`.
SphericalPolygon perturb(const SphericalPolygon& polygon, double magnitude, std::uint64_t seed);

/// Q - u_i: drops vertex i and joins its neighbours by a minor arc.
SphericalPolygon deleteVertex(const SphericalPolygon& polygon, std::size_t i);

/// Central symmetry u_{i+n/2} = -u_i within an angular tolerance.
bool isSymmetric(const SphericalPolygon& polygon, double angularTol = 1e-9);

}  // namespace fourvertex
