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

// Hand-built polygons shared by the unit and acceptance tests.

#pragma once

#include <cstdint>
#include <vector>

#include "fourvertex/polygon.h"

namespace fourvertex::fixtures {

/// (1,1,1), (1,-1,-1), (-1,1,-1), (-1,-1,1), normalized.
std::vector<UnitVec3> tetrahedralFrame();
SphericalPolygon tetrahedralQuad();

/// Zigzag hexagon, longitudes 0..300 step 60, latitudes +20 / -40.
/// Balanced, simple, antipodal-free, six inflections.
SphericalPolygon hexagon();

/// Balanced simple pentagon with two antipodal crossings.
SphericalPolygon pentagon();

/// Hexagon in a hemisphere with exactly one self-crossing, edges 0 and 3.
SphericalPolygon figureEight();

/// Ring of four points at latitude ~50 plus one vertex pulled towards the
/// pole, which is the only reflex vertex. That vertex has index 4.
SphericalPolygon reflexPentagon();

/// Eight points on the latitude-60 circle.
SphericalPolygon smallCircleOctagon();

/// Six vertices with u_{k+3} = -u_k.
SphericalPolygon symmetricHexagon();

/// e1, (e1+e2)/sqrt2, e2, e3: vertices 0, 1, 2 share a great circle.
SphericalPolygon coplanarQuad();

/// A closed space hexagon whose tangent indicatrix is hexagon().
SpacePolygon skewHexagon();

/// Uniform random polygons, n in 5..10, with exactly one self-crossing and
/// otherwise in general position. Deterministic in `seed`.
std::vector<SphericalPolygon> singleCrossingPolygons(std::size_t count, std::uint64_t seed);

}  // namespace fourvertex::fixtures
