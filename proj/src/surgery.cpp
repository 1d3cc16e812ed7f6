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

#include "fourvertex/surgery.h"

#include <algorithm>
#include <limits>
#include <map>
#include <random>
#include <sstream>

#include "perturbation.h"

namespace fourvertex {

namespace {

constexpr std::array<std::array<int, 4>, 4> kKleinGroup{{
    {0, 1, 2, 3},
    {1, 0, 3, 2},
    {2, 3, 0, 1},
    {3, 2, 1, 0},
}};

constexpr double kMinBufferRadius = 1e-9;

int frameCode(const LocalFrame& f) {
  int code = 0;
  for (int k = 0; k < 4; ++k) code = code * 2 + (f.x[k] > 0 ? 1 : 0);
  for (int k = 0; k < 4; ++k) code = code * 2 + (f.y[k] > 0 ? 1 : 0);
  return code;
}

LocalFrame frameFromCode(int code) {
  LocalFrame f;
  for (int k = 3; k >= 0; --k, code >>= 1) f.y[k] = (code & 1) ? 1 : -1;
  for (int k = 3; k >= 0; --k, code >>= 1) f.x[k] = (code & 1) ? 1 : -1;
  return f;
}

bool consecutiveEndpoints(std::size_t n, std::size_t a, std::size_t b) {
  return (a + 2) % n == b || (b + 2) % n == a;
}

bool adjacent(std::size_t n, std::size_t a, std::size_t b) {
  return a == b || (a + 1) % n == b || (b + 1) % n == a;
}

// Validates the edge pair and returns the recomputed crossing point.
UnitVec3 checkedCrossing(const SphericalPolygon& q, const IntersectionRecord& rec, double tol) {
  const std::size_t n = q.size();
  if (rec.i >= n || rec.j >= n || adjacent(n, rec.i, rec.j)) {
    throw GeometryError(ErrorCode::PreconditionViolated, "record does not name two non-adjacent edges");
  }
  const ArcRelation rel = arcsRelation(q.edge(static_cast<std::ptrdiff_t>(rec.i)),
                                       q.edge(static_cast<std::ptrdiff_t>(rec.j)), tol);
  if (rel.tag != ArcRelationTag::Cross) {
    throw GeometryError(ErrorCode::PreconditionViolated, "record is not a self-crossing");
  }
  return *rel.witness;
}

}  // namespace

bool LocalFrame::admissible() const {
  for (int k = 0; k < 4; ++k) {
    if (x[k] < 0 && y[k] < 0) return false;
  }
  return true;
}

int twoGamma(const LocalFrame& f) {
  int v = f.x[0] * f.x[3] + f.x[1] * f.x[2] + f.y[0] * f.y[1] + f.y[2] * f.y[3];
  for (int k = 0; k < 4; ++k) v -= f.x[k] * f.y[k];
  return v;
}

LocalFrame permuted(const LocalFrame& f, const std::array<int, 4>& perm) {
  LocalFrame out;
  for (int k = 0; k < 4; ++k) {
    out.x[k] = f.x[perm[k]];
    out.y[k] = f.y[perm[k]];
  }
  return out;
}

GammaTable gammaTable() {
  GammaTable table;
  table.minTwoGamma = std::numeric_limits<int>::max();
  std::map<int, int> orbitOf;  // canonical code -> orbit id
  for (int code = 0; code < 256; ++code) {
    const LocalFrame f = frameFromCode(code);
    if (!f.admissible()) continue;
    int canonical = code;
    for (const auto& g : kKleinGroup) canonical = std::min(canonical, frameCode(permuted(f, g)));
    auto [it, inserted] = orbitOf.try_emplace(canonical, static_cast<int>(orbitOf.size()) + 1);
    const int value = twoGamma(f);
    table.rows.push_back({f, value, it->second});
    table.minTwoGamma = std::min(table.minTwoGamma, value);
  }
  table.orbitCount = static_cast<int>(orbitOf.size());
  return table;
}

LocalFrame localFrame(const SphericalPolygon& polygon, const IntersectionRecord& rec, double tol) {
  return localFrame(polygon, rec.i, rec.j, tol);
}

LocalFrame localFrame(const SphericalPolygon& q, std::size_t first, std::size_t second, double tol) {
  const std::size_t n = q.size();
  if (first >= n || second >= n || adjacent(n, first, second)) {
    throw GeometryError(ErrorCode::PreconditionViolated, "edges must be distinct and non-adjacent");
  }
  if (consecutiveEndpoints(n, first, second)) {
    throw GeometryError(ErrorCode::ConsecutiveEndpoints, "external vertices coincide with internal ones");
  }
  const auto f = static_cast<std::ptrdiff_t>(first);
  const auto s = static_cast<std::ptrdiff_t>(second);
  const std::array<UnitVec3, 4> in{q[f], q[s], q[s + 1], q[f + 1]};
  const std::array<UnitVec3, 4> ext{q[f - 1], q[s - 1], q[s + 2], q[f + 2]};
  constexpr std::array<int, 4> oldPartner{3, 2, 1, 0};
  constexpr std::array<int, 4> newPartner{1, 0, 3, 2};

  LocalFrame frame;
  for (int k = 0; k < 4; ++k) {
    const UnitVec3& v = in[k];
    const UnitVec3& o = in[oldPartner[k]];
    const UnitVec3& m = in[newPartner[k]];
    frame.x[k] = -toInt(strictSign(v, o, ext[k], tol)) * toInt(strictSign(v, o, m, tol));
    frame.y[k] = -toInt(strictSign(v, m, ext[k], tol)) * toInt(strictSign(v, m, o, tol));
  }
  return frame;
}

std::pair<bool, bool> regionsOccupied(const SphericalPolygon& q, const IntersectionRecord& rec,
                                      double tol) {
  const auto i = static_cast<std::ptrdiff_t>(rec.i);
  const auto j = static_cast<std::ptrdiff_t>(rec.j);
  const std::size_t n = q.size();
  const UnitVec3& w = rec.witness;
  std::pair<bool, bool> occupied{false, false};
  for (std::size_t k = 0; k < n; ++k) {
    if (k == q.wrap(i) || k == q.wrap(i + 1) || k == q.wrap(j) || k == q.wrap(j + 1)) continue;
    const UnitVec3& p = q[static_cast<std::ptrdiff_t>(k)];
    occupied.first = occupied.first || pointInSphericalTriangle(p, q[i], q[j], w, tol);
    occupied.second = occupied.second || pointInSphericalTriangle(p, q[i + 1], q[j + 1], w, tol);
  }
  return occupied;
}

SurgeryResult cutAndPaste(const SphericalPolygon& q, const IntersectionRecord& rec, double tol) {
  IntersectionRecord removed = rec;
  removed.witness = checkedCrossing(q, rec, tol);
  const std::size_t n = q.size();
  if (consecutiveEndpoints(n, rec.i, rec.j)) {
    throw GeometryError(ErrorCode::ConsecutiveEndpoints, "insert a midpoint vertex first");
  }
  const auto [r1, r2] = regionsOccupied(q, removed, tol);
  if (r1 || r2) {
    throw GeometryError(ErrorCode::RegionNotEmpty, "a vertex lies in a spanned region; buffer first");
  }
  const auto lo = static_cast<std::ptrdiff_t>(std::min(rec.i, rec.j));
  const auto hi = static_cast<std::ptrdiff_t>(std::max(rec.i, rec.j));
  std::vector<UnitVec3> out;
  out.reserve(n);
  out.push_back(q[lo]);
  for (std::ptrdiff_t k = hi; k > lo; --k) out.push_back(q[k]);
  for (std::ptrdiff_t k = hi + 1; k < lo + static_cast<std::ptrdiff_t>(n); ++k) out.push_back(q[k]);

  SurgeryResult result{SphericalPolygon(std::move(out)), removed, countInflections(q, tol), 0, 0};
  result.iAfter = countInflections(result.output, tol);
  result.gammaObserved = 2 + result.iBefore - result.iAfter;
  return result;
}

std::pair<SphericalPolygon, SphericalPolygon> splitAtIntersection(const SphericalPolygon& q,
                                                                  const IntersectionRecord& rec,
                                                                  double tol) {
  IntersectionRecord checked = rec;
  checked.witness = checkedCrossing(q, rec, tol);
  const auto [r1, r2] = regionsOccupied(q, checked, tol);
  if (r1 || r2) {
    throw GeometryError(ErrorCode::RegionNotEmpty, "a vertex lies in a spanned region");
  }
  const auto n = static_cast<std::ptrdiff_t>(q.size());
  const auto i = static_cast<std::ptrdiff_t>(std::min(rec.i, rec.j));
  const auto j = static_cast<std::ptrdiff_t>(std::max(rec.i, rec.j));
  if (n - j + i < 3 || j - i < 3) {
    throw GeometryError(ErrorCode::TooFewVertices, "a piece would have fewer than 3 vertices");
  }
  std::vector<UnitVec3> first{q[i]};
  for (std::ptrdiff_t k = j + 1; k < i + n; ++k) first.push_back(q[k]);
  std::vector<UnitVec3> second{q[j]};
  for (std::ptrdiff_t k = i + 1; k < j; ++k) second.push_back(q[k]);
  return {SphericalPolygon(std::move(first)), SphericalPolygon(std::move(second))};
}

std::optional<IntersectionRecord> nearestSelfCrossing(const SphericalPolygon& q, const UnitVec3& w,
                                                      double tol) {
  std::optional<IntersectionRecord> best;
  double bestDist = std::numeric_limits<double>::infinity();
  for (const auto& r : findIntersections(q, tol)) {
    if (r.kind != CrossingKind::SelfCross) continue;
    const double d = sphericalDistance(r.witness, w);
    if (d < bestDist) {
      bestDist = d;
      best = r;
    }
  }
  return best;
}

BufferResult bufferVertices(const SphericalPolygon& q, const IntersectionRecord& rec,
                            bool antipodalSafe, std::uint64_t seed, double tol) {
  IntersectionRecord checked = rec;
  checked.witness = checkedCrossing(q, rec, tol);
  const auto reference = detail::tryCounts(q, tol);
  if (!reference) {
    throw GeometryError(ErrorCode::PreconditionViolated, "polygon is not in general position");
  }
  const auto [r1, r2] = regionsOccupied(q, checked, tol);
  if (!r1 && !r2) {
    throw GeometryError(ErrorCode::PreconditionViolated, "both regions are already empty");
  }

  const UnitVec3& w = checked.witness;
  double radius = std::numeric_limits<double>::infinity();
  for (const auto& u : q.vertices()) {
    radius = std::min(radius, sphericalDistance(w, u));
    if (antipodalSafe) radius = std::min(radius, sphericalDistance(w, -u));
  }
  radius *= 0.5;
  if (radius < kMinBufferRadius) {
    throw GeometryError(ErrorCode::NumericalUnderflow, "buffer radius below tolerance");
  }

  std::vector<UnitVec3> verts;
  std::vector<std::size_t> added;
  for (std::size_t k = 0; k < q.size(); ++k) {
    const auto kk = static_cast<std::ptrdiff_t>(k);
    verts.push_back(q[kk]);
    if (k != checked.i && k != checked.j) continue;
    if (r1) {
      added.push_back(verts.size());
      verts.push_back(moveToward(w, q[kk], radius));
    }
    if (r2) {
      added.push_back(verts.size());
      verts.push_back(moveToward(w, q[kk + 1], radius));
    }
  }

  const detail::Acceptor accept = [&](const SphericalPolygon& candidate) {
    if (detail::tryCounts(candidate, tol) != reference) return false;
    const auto near = nearestSelfCrossing(candidate, w, tol);
    if (!near || sphericalDistance(near->witness, w) > radius) return false;
    const auto [a, b] = regionsOccupied(candidate, *near, tol);
    return !a && !b;
  };
  std::mt19937_64 rng(seed);
  SphericalPolygon buffered =
      detail::perturbVertices(SphericalPolygon(std::move(verts)), added, 0.05 * radius, rng, accept);
  return {buffered, *nearestSelfCrossing(buffered, w, tol), static_cast<int>(added.size()), radius};
}

SphericalPolygon insertMidpointVertex(const SphericalPolygon& q, std::size_t k, std::uint64_t seed,
                                      double tol) {
  if (k >= q.size()) throw GeometryError(ErrorCode::PreconditionViolated, "edge index out of range");
  const auto reference = detail::tryCounts(q, tol);
  if (!reference) {
    throw GeometryError(ErrorCode::PreconditionViolated, "polygon is not in general position");
  }
  const auto kk = static_cast<std::ptrdiff_t>(k);
  const UnitVec3& a = q[kk];
  const UnitVec3& b = q[kk + 1];
  const Sign side = strictSign(q[kk - 1], a, b, tol);
  const Vec3 mid = UnitVec3::normalize(a.vec() + b.vec()).vec();
  const Vec3 normal = UnitVec3::normalize(cross(a.vec(), b.vec())).vec();
  // det[a, mid + t*normal, b] has the sign of -t.
  double offset = 0.05 * sphericalDistance(a, b);
  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < 200; ++attempt) {
    if (attempt > 0 && attempt % 10 == 0) offset *= 0.5;
    UnitVec3 v = UnitVec3::normalize(mid - toInt(side) * offset * normal);
    if (attempt > 0) v = detail::jitter(v, 0.2 * offset, rng);
    try {
      SphericalPolygon candidate = q.withVertexInserted(k + 1, v);
      if (orientedSign(a, v, b, tol) != side) continue;
      if (detail::tryCounts(candidate, tol) != reference) continue;
      return candidate;
    } catch (const GeometryError&) {
      continue;
    }
  }
  throw GeometryError(ErrorCode::PerturbationFailed, "no admissible midpoint vertex found");
}

EliminationResult eliminateCrossing(const SphericalPolygon& polygon, const IntersectionRecord& rec,
                                    bool antipodalSafe, std::uint64_t seed, double tol) {
  SphericalPolygon q = polygon;
  IntersectionRecord current = rec;
  current.witness = checkedCrossing(q, rec, tol);
  const UnitVec3 w = current.witness;
  int midpoints = 0;
  while (true) {
    const std::size_t n = q.size();
    std::size_t edge;
    if ((current.i + 2) % n == current.j) {
      edge = current.i + 1;
    } else if ((current.j + 2) % n == current.i) {
      edge = (current.j + 1) % n;
    } else {
      break;
    }
    q = insertMidpointVertex(q, edge, seed + static_cast<std::uint64_t>(midpoints), tol);
    ++midpoints;
    const auto next = nearestSelfCrossing(q, w, tol);
    if (!next) throw GeometryError(ErrorCode::PerturbationFailed, "crossing lost after midpoint insertion");
    current = *next;
  }
  int buffered = 0;
  const auto [r1, r2] = regionsOccupied(q, current, tol);
  if (r1 || r2) {
    BufferResult b = bufferVertices(q, current, antipodalSafe, seed ^ 0x9e3779b97f4a7c15ULL, tol);
    q = std::move(b.polygon);
    current = b.record;
    buffered = b.inserted;
  }
  SurgeryResult s = cutAndPaste(q, current, tol);
  return {std::move(q), std::move(s), midpoints, buffered};
}

}  // namespace fourvertex
