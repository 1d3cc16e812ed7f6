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

#include "fourvertex/analysis.h"

#include <algorithm>
#include <sstream>
#include <tuple>

namespace fourvertex {

namespace {

// p strictly between a and b on the minor arc ab (p assumed on its circle).
bool withinArc(const Vec3& a, const Vec3& b, const Vec3& p) {
  const Vec3 n = cross(a, b);
  return dot(cross(a, p), n) > 0.0 && dot(cross(p, b), n) > 0.0;
}

[[noreturn]] void throwDegenerate(const GreatArc& e, const UnitVec3& p, std::size_t edge,
                                  std::size_t other) {
  std::ostringstream os;
  if (withinArc(e.a.vec(), e.b.vec(), p.vec())) {
    os << "an endpoint of edge " << other << " lies on edge " << edge;
    throw GeometryError(ErrorCode::VertexOnEdge, os.str());
  }
  os << "edges " << edge << " and " << other << " have a coplanar endpoint triple";
  throw GeometryError(ErrorCode::DegenerateTriple, os.str());
}

bool antipodalEndpoints(const GreatArc& e, const GreatArc& f) {
  return areAntipodal(e.a, f.a) || areAntipodal(e.a, f.b) || areAntipodal(e.b, f.a) ||
         areAntipodal(e.b, f.b);
}

void guardPair(const GreatArc& e, const GreatArc& f, std::size_t i, std::size_t j, double tol) {
  if (orientedSign(e.a, e.b, f.a, tol) == Sign::Zero) throwDegenerate(e, f.a, i, j);
  if (orientedSign(e.a, e.b, f.b, tol) == Sign::Zero) throwDegenerate(e, f.b, i, j);
  if (orientedSign(f.a, f.b, e.a, tol) == Sign::Zero) throwDegenerate(f, e.a, j, i);
  if (orientedSign(f.a, f.b, e.b, tol) == Sign::Zero) throwDegenerate(f, e.b, j, i);
}

std::vector<UnitVec3> withoutVertex(const SphericalPolygon& polygon, std::size_t i) {
  std::vector<UnitVec3> out(polygon.vertices().begin(), polygon.vertices().end());
  out.erase(out.begin() + static_cast<std::ptrdiff_t>(i));
  return out;
}

// Sign of det[a, b, c] with a tolerance relative to the vector lengths.
Sign scaledSign(const Vec3& a, const Vec3& b, const Vec3& c, double tol) {
  const double scale = a.norm() * b.norm() * c.norm();
  const Sign s = signOf(det3(a, b, c), tol * scale);
  if (s == Sign::Zero) throw GeometryError(ErrorCode::DegenerateTriple, "coplanar edge triple");
  return s;
}

}  // namespace

int EpsilonSequence::signChanges() const {
  int changes = 0;
  for (std::size_t k = 0; k < signs.size(); ++k) changes += inflection(k) ? 1 : 0;
  return changes;
}

bool EpsilonSequence::inflection(std::size_t k) const {
  const std::size_t n = signs.size();
  return signs[(k + n - 1) % n] != signs[k % n];
}

EpsilonSequence epsilonSigns(const SphericalPolygon& polygon, double tol) {
  EpsilonSequence eps;
  eps.signs.reserve(polygon.size());
  for (std::size_t i = 0; i < polygon.size(); ++i) {
    const auto k = static_cast<std::ptrdiff_t>(i);
    eps.signs.push_back(strictSign(polygon[k], polygon[k + 1], polygon[k + 2], tol));
  }
  return eps;
}

int countInflections(const SphericalPolygon& polygon, double tol) {
  return epsilonSigns(polygon, tol).signChanges();
}

std::vector<IntersectionRecord> findIntersections(const SphericalPolygon& polygon, double tol) {
  const std::size_t n = polygon.size();
  std::vector<IntersectionRecord> records;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 2; j < n; ++j) {
      if (i == 0 && j == n - 1) continue;
      const GreatArc e = polygon.edge(static_cast<std::ptrdiff_t>(i));
      const GreatArc f = polygon.edge(static_cast<std::ptrdiff_t>(j));
      // Such pairs meet, if at all, only at the shared antipodal endpoint.
      if (antipodalEndpoints(e, f)) continue;
      guardPair(e, f, i, j, tol);
      const ArcRelation rel = arcsRelation(e, f, tol);
      if (rel.tag == ArcRelationTag::Disjoint) continue;
      const CrossingKind kind =
          rel.tag == ArcRelationTag::Cross ? CrossingKind::SelfCross : CrossingKind::AntipodalCross;
      records.push_back({kind, i, j, *rel.witness});
    }
  }
  std::sort(records.begin(), records.end(), [](const auto& l, const auto& r) {
    return std::tie(l.i, l.j, l.kind) < std::tie(r.i, r.j, r.kind);
  });
  return records;
}

CrossingCounts countCrossings(const std::vector<IntersectionRecord>& records) {
  CrossingCounts c;
  for (const auto& r : records) {
    (r.kind == CrossingKind::SelfCross ? c.dplus : c.dminus) += 1;
  }
  return c;
}

int countCusps(const SphericalPolygon& polygon, double tol) {
  const EpsilonSequence eps = epsilonSigns(polygon, tol);
  const std::size_t n = eps.signs.size();
  std::size_t start = n;
  for (std::size_t k = 0; k < n; ++k) {
    if (!eps.inflection(k)) {
      start = k;
      break;
    }
  }
  if (start == n) return static_cast<int>(n / 2);
  int cusps = 0;
  int run = 0;
  for (std::size_t step = 1; step <= n; ++step) {
    if (eps.inflection((start + step) % n)) {
      ++run;
    } else {
      cusps += run / 2;
      run = 0;
    }
  }
  return cusps;
}

std::vector<VertexClass> classifyVertices(const SphericalPolygon& polygon, double tol) {
  const std::size_t n = polygon.size();
  if (n < 4) {
    throw GeometryError(ErrorCode::TooFewVertices, "classification needs at least 4 vertices");
  }
  std::vector<VertexClass> classes(n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::vector<UnitVec3> rest = withoutVertex(polygon, i);
    classes[i].essential = hemisphereWitness(rest, tol).has_value();
    if (n == 4) {
      classes[i].good = classes[i].excellent = true;
      continue;
    }
    const CrossingCounts c = countCrossings(findIntersections(deleteVertex(polygon, i), tol));
    classes[i].good = c.dplus == 0;
    classes[i].excellent = c.total() == 0;
  }
  return classes;
}

std::optional<std::size_t> findRemovableVertex(const SphericalPolygon& polygon, double tol) {
  if (polygon.size() < 7) {
    throw GeometryError(ErrorCode::PreconditionViolated, "needs at least 7 vertices");
  }
  if (!isBalanced(polygon.vertices(), tol)) {
    throw GeometryError(ErrorCode::PreconditionViolated, "polygon is not balanced");
  }
  if (!findIntersections(polygon, tol).empty()) {
    throw GeometryError(ErrorCode::PreconditionViolated, "polygon has self or antipodal crossings");
  }
  const auto classes = classifyVertices(polygon, tol);
  for (std::size_t i = 0; i < classes.size(); ++i) {
    if (!classes[i].essential && classes[i].excellent) return i;
  }
  return std::nullopt;
}

SpaceAnalysis analyzeSpacePolygon(const SpacePolygon& polygon, double tol) {
  const SphericalPolygon indicatrix = tangentIndicatrix(polygon);
  // Pairs of parallel vertices are crossings of the indicatrix; indicatrix
  // edge k joins u_k and u_{k+1}, i.e. it stands for space vertex k+1.
  const CrossingCounts c = countCrossings(findIntersections(indicatrix, tol));
  return {countInflections(indicatrix, tol), c.dplus, c.dminus};
}

int countFlatteningsDirect(const SpacePolygon& polygon, double tol) {
  int flattenings = 0;
  for (std::size_t i = 0; i < polygon.size(); ++i) {
    const auto k = static_cast<std::ptrdiff_t>(i);
    const Vec3 e0 = polygon.edgeVector(k);
    const Vec3 e1 = polygon.edgeVector(k + 1);
    const Vec3 before = polygon[k - 1] - polygon[k];
    const Vec3 after = polygon[k + 3] - polygon[k];
    if (scaledSign(e0, e1, before, tol) == scaledSign(e0, e1, after, tol)) ++flattenings;
  }
  return flattenings;
}

AnalysisReport analyze(const SphericalPolygon& polygon, double tol) {
  AnalysisReport r;
  r.n = polygon.size();
  r.inflections = countInflections(polygon, tol);
  r.cusps = countCusps(polygon, tol);
  r.intersections = findIntersections(polygon, tol);
  const CrossingCounts c = countCrossings(r.intersections);
  r.dplus = c.dplus;
  r.dminus = c.dminus;
  r.d = c.total();
  r.balanced = isBalanced(polygon.vertices(), tol);
  r.hemisphereContained = !r.balanced;
  r.simple = r.dplus == 0;
  r.symmetric = isSymmetric(polygon);
  if (r.n >= 4) {
    r.vertexClasses = classifyVertices(polygon, tol);
    for (const auto& v : r.vertexClasses) {
      r.essentialCount += v.essential ? 1 : 0;
      r.goodCount += v.good ? 1 : 0;
      r.excellentCount += v.excellent ? 1 : 0;
    }
  }
  return r;
}

}  // namespace fourvertex
