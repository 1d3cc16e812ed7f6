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

// Counting and classification on spherical and space polygons.
//
// Conventions: epsilon_i = sign[u_i, u_{i+1}, u_{i+2}]. Edge k (the pair
// {u_k, u_{k+1}}) is an inflection iff epsilon_{k-1} != epsilon_k, so I is the
// number of cyclic sign changes of the epsilon sequence. D+ and D- count
// crossing edge pairs.

#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "fourvertex/polygon.h"

namespace fourvertex {

struct EpsilonSequence {
  std::vector<Sign> signs;

  /// Number of cyclic sign changes.
  int signChanges() const;
  /// inflection(k) == true iff edge k is an inflection.
  bool inflection(std::size_t k) const;
};

EpsilonSequence epsilonSigns(const SphericalPolygon& polygon, double tol = kDegeneracyTol);
int countInflections(const SphericalPolygon& polygon, double tol = kDegeneracyTol);

enum class CrossingKind { SelfCross, AntipodalCross };

struct IntersectionRecord {
  CrossingKind kind = CrossingKind::SelfCross;
  std::size_t i = 0;  ///< first edge, i < j
  std::size_t j = 0;  ///< second edge
  UnitVec3 witness = UnitVec3::e1();

  bool operator==(const IntersectionRecord&) const = default;
};

/// All self and antipodal crossings, sorted by (i, j, kind). Adjacent edges
/// share a vertex and can only touch there, so only non-adjacent pairs can
/// produce a record. Pairs whose endpoints include an exact antipodal pair
/// (as in symmetric polygons) are skipped for the same reason: their circles
/// meet only at that pair, or the arcs are antipodal copies of each other.
/// Throws VertexOnEdge when a vertex sits on a non-incident
/// edge and DegenerateTriple for other coplanar triples.
std::vector<IntersectionRecord> findIntersections(const SphericalPolygon& polygon,
                                                  double tol = kDegeneracyTol);

struct CrossingCounts {
  int dplus = 0;
  int dminus = 0;
  int total() const { return dplus + dminus; }
};
CrossingCounts countCrossings(const std::vector<IntersectionRecord>& records);

/// Discrete cusps: each maximal cyclic run of consecutive inflected edges of
/// length k contributes floor(k / 2).
int countCusps(const SphericalPolygon& polygon, double tol = kDegeneracyTol);

struct VertexClass {
  bool essential = false;
  bool good = false;
  bool excellent = false;
};

/// Per vertex: essential iff Q is balanced but Q - u_i is not; good iff
/// Q - u_i has no self-crossing; excellent iff Q - u_i has no crossing of
/// either kind. For n = 4 the deletion is a triangle, which has no
/// non-adjacent edges.
std::vector<VertexClass> classifyVertices(const SphericalPolygon& polygon,
                                          double tol = kDegeneracyTol);

/// Smallest index that is both nonessential and excellent. Requires Q balanced,
/// free of crossings and n >= 7 (throws PreconditionViolated otherwise).
/// nullopt would contradict the existence results and is reported by the
/// harness as a violation.
std::optional<std::size_t> findRemovableVertex(const SphericalPolygon& polygon,
                                               double tol = kDegeneracyTol);

struct SpaceAnalysis {
  int flattenings = 0;  ///< F, via the indicatrix inflections
  int tplus = 0;        ///< parallel vertex pairs, same orientation
  int tminus = 0;       ///< parallel vertex pairs, inverse orientation
  int t() const { return tplus + tminus; }
};

SpaceAnalysis analyzeSpacePolygon(const SpacePolygon& polygon, double tol = kDegeneracyTol);

/// Flattenings counted directly in R^3: triples {v_i, v_{i+1}, v_{i+2}} with
/// v_{i-1} and v_{i+3} on the same side of their plane.
int countFlatteningsDirect(const SpacePolygon& polygon, double tol = kDegeneracyTol);

struct AnalysisReport {
  std::size_t n = 0;
  int inflections = 0;
  int dplus = 0;
  int dminus = 0;
  int d = 0;
  int cusps = 0;
  int essentialCount = 0;
  int goodCount = 0;
  int excellentCount = 0;
  bool balanced = false;
  bool simple = false;
  bool symmetric = false;
  bool hemisphereContained = false;
  std::vector<IntersectionRecord> intersections;
  std::vector<VertexClass> vertexClasses;

  bool operator==(const AnalysisReport&) const = default;
};

AnalysisReport analyze(const SphericalPolygon& polygon, double tol = kDegeneracyTol);

}  // namespace fourvertex
