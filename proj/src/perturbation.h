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

// Internal helpers shared by the polygon, surgery and harness code.

#pragma once

#include <functional>
#include <optional>
#include <random>
#include <span>

#include "fourvertex/polygon.h"

namespace fourvertex::detail {

struct Counts {
  int inflections = 0;
  int dplus = 0;
  int dminus = 0;
  bool operator==(const Counts&) const = default;
};

/// (I, D+, D-) or nullopt when the polygon is not in general position.
std::optional<Counts> tryCounts(const SphericalPolygon& polygon, double tol = kDegeneracyTol);

/// p moved along the tangent plane by (dx, dy) in the frame of tangentBasis,
/// then renormalized.
UnitVec3 displace(const UnitVec3& p, double dx, double dy);

/// A random tangential displacement of angular size at most `magnitude`.
UnitVec3 jitter(const UnitVec3& p, double magnitude, std::mt19937_64& rng);

using Acceptor = std::function<bool(const SphericalPolygon&)>;

/// Jitters the listed vertices until the result is in general position, keeps
/// the input's (I, D+, D-) when those were defined, and satisfies `extra`.
/// The magnitude shrinks geometrically after repeated failures. Throws
/// PerturbationFailed once the budget is spent.
SphericalPolygon perturbVertices(const SphericalPolygon& polygon,
                                 std::span<const std::size_t> indices, double magnitude,
                                 std::mt19937_64& rng, const Acceptor& extra, int budget = 400);

}  // namespace fourvertex::detail
