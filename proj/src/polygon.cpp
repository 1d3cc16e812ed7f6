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

#include "fourvertex/polygon.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <sstream>

#include "fourvertex/analysis.h"
#include "perturbation.h"

namespace fourvertex {

SphericalPolygon::SphericalPolygon(std::vector<UnitVec3> vertices) : vertices_(std::move(vertices)) {
  const std::size_t n = vertices_.size();
  if (n < 3) {
    throw GeometryError(ErrorCode::TooFewVertices, "a spherical polygon needs at least 3 vertices");
  }
  for (std::size_t i = 0; i < n; ++i) {
    const Vec3& a = vertices_[i].vec();
    const Vec3& b = vertices_[(i + 1) % n].vec();
    if (cross(a, b).norm() < kDegeneracyTol) {
      std::ostringstream os;
      os << "vertices " << i << " and " << (i + 1) % n << " are equal or antipodal";
      throw GeometryError(dot(a, b) < 0 ? ErrorCode::AntipodalConsecutive : ErrorCode::DegenerateEdge,
                          os.str());
    }
  }
}

SphericalPolygon SphericalPolygon::reflected() const {
  std::vector<UnitVec3> out;
  out.reserve(size());
  for (const auto& v : vertices_) out.push_back(-v);
  return SphericalPolygon(std::move(out));
}

SphericalPolygon SphericalPolygon::reversed() const {
  std::vector<UnitVec3> out;
  out.reserve(size());
  for (std::size_t k = 0; k < size(); ++k) out.push_back((*this)[-static_cast<std::ptrdiff_t>(k)]);
  return SphericalPolygon(std::move(out));
}

SphericalPolygon SphericalPolygon::rotated(std::size_t k) const {
  std::vector<UnitVec3> out = vertices_;
  std::rotate(out.begin(), out.begin() + static_cast<std::ptrdiff_t>(k % size()), out.end());
  return SphericalPolygon(std::move(out));
}

SphericalPolygon SphericalPolygon::withVertexInserted(std::size_t position, const UnitVec3& v) const {
  std::vector<UnitVec3> out = vertices_;
  out.insert(out.begin() + static_cast<std::ptrdiff_t>(std::min(position, out.size())), v);
  return SphericalPolygon(std::move(out));
}

SpacePolygon::SpacePolygon(std::vector<Vec3> vertices) : vertices_(std::move(vertices)) {
  const std::size_t n = vertices_.size();
  if (n < 4) {
    throw GeometryError(ErrorCode::TooFewVertices, "a space polygon needs at least 4 vertices");
  }
  for (std::size_t i = 0; i < n; ++i) {
    const Vec3 e = vertices_[(i + 1) % n] - vertices_[i];
    if (!(e.norm() > 0.0)) {
      std::ostringstream os;
      os << "edge " << i << " has zero length";
      throw GeometryError(ErrorCode::DegenerateEdge, os.str());
    }
  }
}

SphericalPolygon tangentIndicatrix(const SpacePolygon& polygon) {
  std::vector<UnitVec3> u;
  u.reserve(polygon.size());
  for (std::size_t i = 0; i < polygon.size(); ++i) {
    u.push_back(UnitVec3::normalize(polygon.edgeVector(static_cast<std::ptrdiff_t>(i))));
  }
  return SphericalPolygon(std::move(u));
}

namespace {

// a < b < c; true when the three indices are cyclically consecutive.
bool consecutiveTriple(std::size_t a, std::size_t b, std::size_t c, std::size_t n) {
  return (b == a + 1 && c == b + 1) || (a == 0 && b == 1 && c == n - 1) ||
         (a == 0 && b == n - 2 && c == n - 1);
}

}  // namespace

GeneralPositionReport checkGeneralPosition(const SphericalPolygon& polygon, double tol) {
  GeneralPositionReport report;
  report.minAbsDet = std::numeric_limits<double>::infinity();
  const auto verts = polygon.vertices();
  const std::size_t n = verts.size();
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      const bool pairAB = areAntipodal(verts[a], verts[b]);
      for (std::size_t c = b + 1; c < n; ++c) {
        // Antipodal pairs are exempt except inside an epsilon triple.
        const bool hasPair =
            pairAB || areAntipodal(verts[a], verts[c]) || areAntipodal(verts[b], verts[c]);
        if (hasPair && !consecutiveTriple(a, b, c, n)) continue;
        const double d = std::abs(det3(verts[a].vec(), verts[b].vec(), verts[c].vec()));
        report.minAbsDet = std::min(report.minAbsDet, d);
        if (d < tol) report.offendingTriples.push_back({a, b, c});
      }
    }
  }
  report.ok = report.offendingTriples.empty();
  return report;
}

SphericalPolygon perturb(const SphericalPolygon& polygon, double magnitude, std::uint64_t seed) {
  if (!(magnitude > 0.0)) {
    throw GeometryError(ErrorCode::PreconditionViolated, "perturbation magnitude must be positive");
  }
  std::vector<std::size_t> all(polygon.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  std::mt19937_64 rng(seed);
  return detail::perturbVertices(polygon, all, magnitude, rng, {});
}

SphericalPolygon deleteVertex(const SphericalPolygon& polygon, std::size_t i) {
  if (polygon.size() < 5) {
    throw GeometryError(ErrorCode::TooFewVertices, "deleting a vertex must leave at least 4");
  }
  if (i >= polygon.size()) {
    throw GeometryError(ErrorCode::PreconditionViolated, "vertex index out of range");
  }
  std::vector<UnitVec3> out(polygon.vertices().begin(), polygon.vertices().end());
  out.erase(out.begin() + static_cast<std::ptrdiff_t>(i));
  return SphericalPolygon(std::move(out));
}

bool isSymmetric(const SphericalPolygon& polygon, double angularTol) {
  const std::size_t n = polygon.size();
  if (n % 2 != 0) return false;
  const auto half = static_cast<std::ptrdiff_t>(n / 2);
  for (std::size_t i = 0; i < n; ++i) {
    const auto k = static_cast<std::ptrdiff_t>(i);
    if (sphericalDistance(polygon[k + half], -polygon[k]) >= angularTol) return false;
  }
  return true;
}

}  // namespace fourvertex
