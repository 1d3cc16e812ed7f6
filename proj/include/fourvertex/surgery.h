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

// Removing a self-crossing by reconnecting the four endpoints of the two
// crossing edges, and the sign bookkeeping that bounds the change in the
// number of inflections.
//
// For a crossing of edges i and j the internal vertices are relabelled
//   1 = u_i, 2 = u_j, 3 = u_{j+1}, 4 = u_{i+1}
// so the old edges are 14 and 23 and the reconnected ones are 12 and 43. The
// external vertex attached to internal vertex k is
//   e1 = u_{i-1}, e2 = u_{j-1}, e3 = u_{j+2}, e4 = u_{i+2}.
// With o(k) the old partner of k and m(k) the new one,
//   x_k = -sign[k, o(k), e_k] * sign[k, o(k), m(k)]
//   y_k = -sign[k, m(k), e_k] * sign[k, m(k), o(k)].
// Under this convention the old edge 14 is an inflection iff x1 x4 = +1, the
// new edge 12 is an inflection iff y1 y2 = -1, and the external edge at k
// changes status iff x_k = y_k. (x_k, y_k) = (-1, -1) means e_k lies in the
// wedge between the rays towards o(k) and m(k).

#pragma once

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

#include "fourvertex/analysis.h"

namespace fourvertex {

struct LocalFrame {
  std::array<int, 4> x{1, 1, 1, 1};
  std::array<int, 4> y{1, 1, 1, 1};

  bool admissible() const;
  bool operator==(const LocalFrame&) const = default;
};

/// x1x4 + x2x3 + y1y2 + y3y4 - sum_k x_k y_k.
int twoGamma(const LocalFrame& f);

/// Applies an index permutation: result slot k takes slot perm[k].
LocalFrame permuted(const LocalFrame& f, const std::array<int, 4>& perm);

struct GammaRow {
  LocalFrame frame;
  int twoGamma = 0;
  int orbitId = 0;  ///< 1-based, numbered by first appearance
};

struct GammaTable {
  std::vector<GammaRow> rows;  ///< lexicographic in (x1..x4, y1..y4), -1 < +1
  int orbitCount = 0;
  int minTwoGamma = 0;
};

/// All 81 admissible frames with their orbits under the Klein group generated
/// by (1 2)(3 4) and (1 3)(2 4).
GammaTable gammaTable();

/// Throws ConsecutiveEndpoints when the crossing edges are separated by a
/// single edge on either side.
LocalFrame localFrame(const SphericalPolygon& polygon, const IntersectionRecord& rec,
                      double tol = kDegeneracyTol);
/// Frame with edge `first` playing the role of edge i.
LocalFrame localFrame(const SphericalPolygon& polygon, std::size_t first, std::size_t second,
                      double tol = kDegeneracyTol);

/// Which of the triangles {u_i, u_j, w} and {u_{i+1}, u_{j+1}, w} contain a
/// vertex other than the four internal ones.
std::pair<bool, bool> regionsOccupied(const SphericalPolygon& polygon,
                                      const IntersectionRecord& rec,
                                      double tol = kDegeneracyTol);

struct SurgeryResult {
  SphericalPolygon output;
  IntersectionRecord removed;
  int iBefore = 0;
  int iAfter = 0;
  int gammaObserved = 0;  ///< 2 + iBefore - iAfter
};

/// Q' = [u_i, u_j, u_{j-1}, ..., u_{i+1}, u_{j+1}, ..., u_{i-1}].
/// Throws PreconditionViolated if rec is not a self-crossing of Q,
/// ConsecutiveEndpoints and RegionNotEmpty as described above.
SurgeryResult cutAndPaste(const SphericalPolygon& polygon, const IntersectionRecord& rec,
                          double tol = kDegeneracyTol);

/// Q1 = [u_i, u_{j+1}, ..., u_{i-1}], Q2 = [u_j, u_{i+1}, ..., u_{j-1}].
std::pair<SphericalPolygon, SphericalPolygon> splitAtIntersection(
    const SphericalPolygon& polygon, const IntersectionRecord& rec, double tol = kDegeneracyTol);

struct BufferResult {
  SphericalPolygon polygon;
  IntersectionRecord record;  ///< the crossing near w in the new labelling
  int inserted = 0;
  double radius = 0.0;
};

/// Inserts two vertices per occupied region on the circle of radius eps about
/// the witness, then perturbs only those vertices until the polygon is in
/// general position with its counts unchanged and both regions are empty.
BufferResult bufferVertices(const SphericalPolygon& polygon, const IntersectionRecord& rec,
                            bool antipodalSafe, std::uint64_t seed,
                            double tol = kDegeneracyTol);

/// Splits edge k near its midpoint. The new vertex is pushed off the edge to
/// the side that keeps the edge u_k -> new vertex free of inflection; counts
/// are unchanged.
SphericalPolygon insertMidpointVertex(const SphericalPolygon& polygon, std::size_t k,
                                      std::uint64_t seed, double tol = kDegeneracyTol);

struct EliminationResult {
  SphericalPolygon prepared;  ///< after midpoint and buffer insertions
  SurgeryResult surgery;
  int midpointsInserted = 0;
  int bufferInserted = 0;
};

/// Midpoint insertion when needed, then buffering when needed, then
/// cutAndPaste.
EliminationResult eliminateCrossing(const SphericalPolygon& polygon, const IntersectionRecord& rec,
                                    bool antipodalSafe, std::uint64_t seed,
                                    double tol = kDegeneracyTol);

/// The self-crossing record of Q whose witness is closest to w, if any.
std::optional<IntersectionRecord> nearestSelfCrossing(const SphericalPolygon& polygon,
                                                      const UnitVec3& w,
                                                      double tol = kDegeneracyTol);

}  // namespace fourvertex
