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

#include "fourvertex/hulls.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>

#include "fourvertex/analysis.h"

namespace fourvertex {

namespace {

struct Planar {
  double x;
  double y;
  std::size_t index;
};

double turn(const Planar& o, const Planar& a, const Planar& b) {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

// +1 when the interior lies to the left of the traversal, -1 otherwise.
int interiorSide(const InteriorRegion& region) {
  const SphericalPolygon& q = region.polygon();
  const Vec3 mid = UnitVec3::normalize(q[0].vec() + q[1].vec()).vec();
  const Vec3 left = UnitVec3::normalize(cross(q[0].vec(), q[1].vec())).vec();
  const double len = sphericalDistance(q[0], q[1]);
  for (double scale : {1e-3, 1e-4, 1e-5, 1e-6}) {
    try {
      return region.contains(UnitVec3::normalize(mid + scale * len * left)) ? 1 : -1;
    } catch (const GeometryError&) {
      continue;
    }
  }
  throw GeometryError(ErrorCode::AmbiguousInterior, "cannot decide which side is the interior");
}

double distanceToArc(const UnitVec3& x, const UnitVec3& a, const UnitVec3& b) {
  const Vec3 normal = UnitVec3::normalize(cross(a.vec(), b.vec())).vec();
  const Vec3 foot = x.vec() - dot(x.vec(), normal) * normal;
  if (foot.norm() > 1e-15) {
    const UnitVec3 f = UnitVec3::normalize(foot);
    const Vec3 n = cross(a.vec(), b.vec());
    if (dot(cross(a.vec(), f.vec()), n) > 0.0 && dot(cross(f.vec(), b.vec()), n) > 0.0) {
      return std::asin(std::min(1.0, std::abs(dot(x.vec(), normal))));
    }
  }
  return std::min(sphericalDistance(x, a), sphericalDistance(x, b));
}

// Points of -Q pushed off its edge circles. The push stays below the gap
// between Q and -Q, so each point lies in the component that holds -Q.
std::vector<UnitVec3> reflectedReferences(const SphericalPolygon& q) {
  const std::size_t n = q.size();
  double gap = std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t e = 0; e < n; ++e) {
      const auto ee = static_cast<std::ptrdiff_t>(e);
      gap = std::min(gap, distanceToArc(-q[static_cast<std::ptrdiff_t>(k)], q[ee], q[ee + 1]));
    }
  }
  std::vector<UnitVec3> refs;
  for (std::size_t k = 0; k < n; ++k) {
    const auto kk = static_cast<std::ptrdiff_t>(k);
    const GreatArc arc(-q[kk], -q[kk + 1]);
    const Vec3 normal = UnitVec3::normalize(cross(arc.a.vec(), arc.b.vec())).vec();
    for (double t : {0.37, 0.71}) {
      const Vec3 p = arc.at(t).vec();
      refs.push_back(UnitVec3::normalize(p + 0.25 * gap * normal));
    }
  }
  return refs;
}

bool blocksEar(const UnitVec3& p, const UnitVec3& a, const UnitVec3& v, const UnitVec3& b,
               double tol) {
  try {
    return pointInSphericalTriangle(p, a, v, b, tol);
  } catch (const GeometryError&) {
    return true;
  }
}

}  // namespace

LuneMembership luneContains(const Lune& lune, const UnitVec3& x, double tol) {
  const Sign sideP = strictSign(lune.cusp, lune.p, lune.q, tol);
  const Sign sideQ = -sideP;  // sign[cusp, q, p]
  const Sign a = orientedSign(lune.cusp, lune.p, x, tol);
  const Sign b = orientedSign(lune.cusp, lune.q, x, tol);
  if ((a != Sign::Zero && a != sideP) || (b != Sign::Zero && b != sideQ)) {
    return LuneMembership::Outside;
  }
  return (a == Sign::Zero || b == Sign::Zero) ? LuneMembership::Boundary : LuneMembership::Interior;
}

UnitVec3 strictHemispherePole(std::span<const UnitVec3> points, double tol) {
  const auto witness = hemisphereWitness(points, tol);
  if (!witness) throw GeometryError(ErrorCode::Balanced, "points are not in any hemisphere");
  const Vec3 n = witness->vec();
  Vec3 tilt{};
  for (const auto& p : points) {
    if (std::abs(dot(n, p.vec())) < 1e-9) tilt += p.vec();
  }
  auto minDot = [&](const Vec3& pole) {
    double m = std::numeric_limits<double>::infinity();
    for (const auto& p : points) m = std::min(m, dot(pole, p.vec()));
    return m;
  };
  Vec3 best = n;
  double bestMin = minDot(n);
  if (tilt.norm() > 1e-12) {
    const Vec3 dir = tilt / tilt.norm();
    for (double t : {0.3, 1e-1, 1e-2, 1e-3, 1e-4, 1e-6}) {
      const Vec3 cand = UnitVec3::normalize(n + t * dir).vec();
      const double m = minDot(cand);
      if (m > bestMin) {
        bestMin = m;
        best = cand;
      }
    }
  }
  if (!(bestMin > tol)) throw GeometryError(ErrorCode::Balanced, "no open hemisphere holds the points");
  return UnitVec3::normalize(best);
}

bool SphericalConvexHull::contains(const UnitVec3& x, double tol) const {
  if (dot(x.vec(), pole.vec()) <= 0.0) return false;
  const std::size_t m = boundary.size();
  if (m < 3) {
    for (const auto& b : boundary) {
      if (sphericalDistance(b, x) < 1e-12) return true;
    }
    return false;
  }
  for (std::size_t k = 0; k < m; ++k) {
    if (orientedSign(boundary[k], boundary[(k + 1) % m], x, tol) == Sign::Negative) return false;
  }
  return true;
}

SphericalConvexHull sphericalConvexHull(std::span<const UnitVec3> points, double tol) {
  const UnitVec3 pole = strictHemispherePole(points, tol);
  const auto [t1, t2] = tangentBasis(pole);
  std::vector<Planar> pts;
  pts.reserve(points.size());
  for (std::size_t k = 0; k < points.size(); ++k) {
    const Vec3& p = points[k].vec();
    const double h = dot(p, pole.vec());
    pts.push_back({dot(p, t1) / h, dot(p, t2) / h, k});
  }
  std::sort(pts.begin(), pts.end(), [](const Planar& a, const Planar& b) {
    return a.x < b.x || (a.x == b.x && a.y < b.y);
  });
  std::vector<Planar> chain(2 * pts.size());
  std::size_t k = 0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    while (k >= 2 && turn(chain[k - 2], chain[k - 1], pts[i]) <= 0.0) --k;
    chain[k++] = pts[i];
  }
  for (std::size_t i = pts.size() - 1, lower = k + 1; i-- > 0;) {
    while (k >= lower && turn(chain[k - 2], chain[k - 1], pts[i]) <= 0.0) --k;
    chain[k++] = pts[i];
  }
  chain.resize(k > 1 ? k - 1 : k);

  SphericalConvexHull hull{{}, {}, pole};
  for (const auto& c : chain) {
    hull.indices.push_back(c.index);
    hull.boundary.push_back(points[c.index]);
  }
  return hull;
}

InteriorRegion::InteriorRegion(SphericalPolygon polygon, std::vector<UnitVec3> exteriorReferences,
                               bool hemisphereCase, double tol)
    : polygon_(std::move(polygon)),
      references_(std::move(exteriorReferences)),
      hemisphereCase_(hemisphereCase),
      tol_(tol) {}

bool InteriorRegion::contains(const UnitVec3& x) const {
  std::vector<const UnitVec3*> order;
  for (const auto& r : references_) order.push_back(&r);
  std::sort(order.begin(), order.end(), [&](const UnitVec3* a, const UnitVec3* b) {
    return dot(a->vec(), x.vec()) > dot(b->vec(), x.vec());
  });
  for (const UnitVec3* r : order) {
    try {
      const GreatArc probe(*r, x);
      bool inside = false;
      for (std::size_t k = 0; k < polygon_.size(); ++k) {
        const ArcRelation rel = arcsRelation(probe, polygon_.edge(static_cast<std::ptrdiff_t>(k)), tol_);
        if (rel.tag == ArcRelationTag::Cross) inside = !inside;
      }
      return inside;
    } catch (const GeometryError&) {
      continue;
    }
  }
  throw GeometryError(ErrorCode::AmbiguousInterior, "every probe towards the point is degenerate");
}

InteriorRegion interiorOf(const SphericalPolygon& polygon, double tol) {
  const auto records = findIntersections(polygon, tol);
  const bool antipodal = std::any_of(records.begin(), records.end(), [](const auto& r) {
    return r.kind == CrossingKind::AntipodalCross;
  });
  if (std::any_of(records.begin(), records.end(),
                  [](const auto& r) { return r.kind == CrossingKind::SelfCross; })) {
    throw GeometryError(ErrorCode::NotSimple, "polygon has a self-crossing");
  }
  std::vector<UnitVec3> refs;
  if (hemisphereWitness(polygon.vertices(), tol)) {
    const UnitVec3 pole = strictHemispherePole(polygon.vertices(), tol);
    const auto [t1, t2] = tangentBasis(pole);
    refs.push_back(-pole);
    for (const Vec3& t : {t1, t2, -t1, -t2}) {
      refs.push_back(UnitVec3::normalize(t - 0.3 * pole.vec()));
    }
    return InteriorRegion(polygon, std::move(refs), true, tol);
  }
  if (antipodal) {
    throw GeometryError(ErrorCode::AmbiguousInterior, "balanced polygon meets its reflection");
  }
  return InteriorRegion(polygon, reflectedReferences(polygon), false, tol);
}

std::vector<std::size_t> Triangulation::leaves() const {
  std::vector<std::size_t> out;
  for (std::size_t t = 0; t < triangles.size(); ++t) {
    if (dual[t].size() <= 1) out.push_back(t);
  }
  return out;
}

std::vector<std::size_t> Triangulation::leafMiddleVertices() const {
  const std::size_t n = polygonSize;
  std::vector<std::size_t> out;
  for (std::size_t t : leaves()) {
    const auto& tri = triangles[t];
    auto has = [&](std::size_t v) { return std::find(tri.begin(), tri.end(), v) != tri.end(); };
    for (std::size_t c : tri) {
      if (has((c + 1) % n) && has((c + n - 1) % n)) out.push_back(c);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool Triangulation::dualIsTree() const {
  const std::size_t t = triangles.size();
  if (t == 0) return false;
  std::size_t edges = 0;
  for (const auto& adj : dual) edges += adj.size();
  if (edges / 2 != t - 1) return false;
  std::vector<bool> seen(t, false);
  std::queue<std::size_t> todo;
  todo.push(0);
  seen[0] = true;
  std::size_t reached = 1;
  while (!todo.empty()) {
    const std::size_t cur = todo.front();
    todo.pop();
    for (std::size_t nb : dual[cur]) {
      if (!seen[nb]) {
        seen[nb] = true;
        ++reached;
        todo.push(nb);
      }
    }
  }
  return reached == t;
}

Triangulation triangulateInterior(const SphericalPolygon& polygon, double tol) {
  const InteriorRegion region = interiorOf(polygon, tol);
  const int side = interiorSide(region);
  const std::size_t n = polygon.size();
  auto at = [&](std::size_t k) -> const UnitVec3& { return polygon[static_cast<std::ptrdiff_t>(k)]; };

  Triangulation tri;
  tri.polygonSize = n;
  std::vector<std::size_t> rest(n);
  for (std::size_t k = 0; k < n; ++k) rest[k] = k;
  while (rest.size() > 3) {
    const std::size_t m = rest.size();
    bool clipped = false;
    for (std::size_t t = 0; t < m && !clipped; ++t) {
      const std::size_t a = rest[(t + m - 1) % m];
      const std::size_t v = rest[t];
      const std::size_t b = rest[(t + 1) % m];
      if (toInt(orientedSign(at(a), at(v), at(b), tol)) != side) continue;
      bool empty = true;
      for (std::size_t w : rest) {
        if (w == a || w == v || w == b) continue;
        if (blocksEar(at(w), at(a), at(v), at(b), tol)) {
          empty = false;
          break;
        }
      }
      if (!empty) continue;
      tri.triangles.push_back({a, v, b});
      tri.diagonals.emplace_back(std::min(a, b), std::max(a, b));
      rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(t));
      clipped = true;
    }
    if (!clipped) throw GeometryError(ErrorCode::EarNotFound, "no ear among the remaining vertices");
  }
  tri.triangles.push_back({rest[0], rest[1], rest[2]});

  const std::size_t count = tri.triangles.size();
  tri.dual.assign(count, {});
  for (std::size_t s = 0; s < count; ++s) {
    for (std::size_t t = s + 1; t < count; ++t) {
      int shared = 0;
      for (std::size_t a : tri.triangles[s]) {
        for (std::size_t b : tri.triangles[t]) shared += a == b ? 1 : 0;
      }
      if (shared == 2) {
        tri.dual[s].push_back(t);
        tri.dual[t].push_back(s);
      }
    }
  }
  return tri;
}

std::vector<std::size_t> exteriorPocketGoodVertices(const SphericalPolygon& polygon, double tol) {
  const std::size_t n = polygon.size();
  const auto records = findIntersections(polygon, tol);
  if (std::any_of(records.begin(), records.end(),
                  [](const auto& r) { return r.kind == CrossingKind::SelfCross; })) {
    throw GeometryError(ErrorCode::NotSimple, "polygon has a self-crossing");
  }
  if (!hemisphereWitness(polygon.vertices(), tol)) {
    throw GeometryError(ErrorCode::PreconditionViolated, "polygon is not inside a hemisphere");
  }
  const SphericalConvexHull hull = sphericalConvexHull(polygon.vertices(), tol);
  if (hull.indices.size() == n) throw GeometryError(ErrorCode::ConvexInput, "polygon is convex");

  std::vector<bool> onHull(n, false);
  for (std::size_t h : hull.indices) onHull[h] = true;

  // The chain of Q from a to the next hull vertex b, walking in direction step.
  auto chainTo = [&](std::size_t a, std::size_t b, std::size_t step) {
    std::vector<std::size_t> chain{a};
    std::size_t k = (a + step) % n;
    while (!onHull[k]) {
      chain.push_back(k);
      k = (k + step) % n;
    }
    chain.push_back(k);
    if (k != b) chain.clear();
    return chain;
  };

  std::vector<std::size_t> out;
  const std::size_t h = hull.indices.size();
  for (std::size_t s = 0; s < h; ++s) {
    const std::size_t a = hull.indices[s];
    const std::size_t b = hull.indices[(s + 1) % h];
    std::vector<std::size_t> chain = chainTo(a, b, 1);
    if (chain.empty()) chain = chainTo(a, b, n - 1);
    if (chain.size() < 3) continue;

    std::vector<UnitVec3> verts;
    for (std::size_t c : chain) verts.push_back(polygon[static_cast<std::ptrdiff_t>(c)]);
    const Triangulation pocket = triangulateInterior(SphericalPolygon(std::move(verts)), tol);
    for (std::size_t c : pocket.leafMiddleVertices()) {
      if (c != 0 && c + 1 != chain.size()) out.push_back(chain[c]);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace fourvertex
