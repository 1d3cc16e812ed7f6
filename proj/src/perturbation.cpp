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

#include "perturbation.h"

#include <cmath>
#include <vector>

#include "fourvertex/analysis.h"

namespace fourvertex::detail {

std::optional<Counts> tryCounts(const SphericalPolygon& polygon, double tol) {
  if (!checkGeneralPosition(polygon, tol).ok) return std::nullopt;
  try {
    const auto records = findIntersections(polygon, tol);
    const auto crossings = countCrossings(records);
    return Counts{countInflections(polygon, tol), crossings.dplus, crossings.dminus};
  } catch (const GeometryError&) {
    return std::nullopt;
  }
}

UnitVec3 displace(const UnitVec3& p, double dx, double dy) {
  const auto [t1, t2] = tangentBasis(p);
  return UnitVec3::normalize(p.vec() + dx * t1 + dy * t2);
}

UnitVec3 jitter(const UnitVec3& p, double magnitude, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double angle = 2.0 * kPi * unit(rng);
  // tan(r) >= r, so a tangent offset of length r moves p by at most r radians.
  const double r = magnitude * unit(rng);
  return displace(p, r * std::cos(angle), r * std::sin(angle));
}

SphericalPolygon perturbVertices(const SphericalPolygon& polygon,
                                 std::span<const std::size_t> indices, double magnitude,
                                 std::mt19937_64& rng, const Acceptor& extra, int budget) {
  const std::optional<Counts> reference = tryCounts(polygon);
  double scale = magnitude;
  for (int attempt = 0; attempt < budget; ++attempt) {
    if (attempt > 0 && attempt % 40 == 0) scale *= 0.5;
    std::vector<UnitVec3> verts(polygon.vertices().begin(), polygon.vertices().end());
    for (std::size_t idx : indices) verts[idx] = jitter(verts[idx], scale, rng);
    try {
      SphericalPolygon candidate(std::move(verts));
      const std::optional<Counts> counts = tryCounts(candidate);
      if (!counts) continue;
      if (reference && *counts != *reference) continue;
      if (extra && !extra(candidate)) continue;
      return candidate;
    } catch (const GeometryError&) {
      continue;
    }
  }
  throw GeometryError(ErrorCode::PerturbationFailed, "retry budget exhausted");
}

}  // namespace fourvertex::detail
