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

#include "fourvertex/sphere_core.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>

namespace fourvertex {

std::string_view errorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::DegenerateTriple: return "DegenerateTriple";
    case ErrorCode::DegenerateArc: return "DegenerateArc";
    case ErrorCode::NotBalanced: return "NotBalanced";
    case ErrorCode::DegenerateEdge: return "DegenerateEdge";
    case ErrorCode::AntipodalConsecutive: return "AntipodalConsecutive";
    case ErrorCode::TooFewVertices: return "TooFewVertices";
    case ErrorCode::PerturbationFailed: return "PerturbationFailed";
    case ErrorCode::VertexOnEdge: return "VertexOnEdge";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::RegionNotEmpty: return "RegionNotEmpty";
    case ErrorCode::ConsecutiveEndpoints: return "ConsecutiveEndpoints";
    case ErrorCode::NumericalUnderflow: return "NumericalUnderflow";
    case ErrorCode::Balanced: return "Balanced";
    case ErrorCode::NotSimple: return "NotSimple";
    case ErrorCode::AmbiguousInterior: return "AmbiguousInterior";
    case ErrorCode::EarNotFound: return "EarNotFound";
    case ErrorCode::ConvexInput: return "ConvexInput";
    case ErrorCode::RejectionBudgetExceeded: return "RejectionBudgetExceeded";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::IOError: return "IOError";
  }
  return "Unknown";
}

UnitVec3 UnitVec3::normalize(const Vec3& v) {
  const double n = v.norm();
  if (!(n > 1e-300) || !std::isfinite(n)) {
    throw GeometryError(ErrorCode::DegenerateEdge, "cannot normalize a zero or non-finite vector");
  }
  return UnitVec3(v / n);
}

UnitVec3 UnitVec3::fromLonLatDegrees(double lonDeg, double latDeg) {
  const double lon = lonDeg * kPi / 180.0;
  const double lat = latDeg * kPi / 180.0;
  return normalize({std::cos(lat) * std::cos(lon), std::cos(lat) * std::sin(lon), std::sin(lat)});
}

Sign orientedSign(const UnitVec3& u, const UnitVec3& v, const UnitVec3& w, double tol) {
  return signOf(det3(u.vec(), v.vec(), w.vec()), tol);
}

Sign strictSign(const UnitVec3& u, const UnitVec3& v, const UnitVec3& w, double tol) {
  const double d = det3(u.vec(), v.vec(), w.vec());
  const Sign s = signOf(d, tol);
  if (s == Sign::Zero) {
    std::ostringstream os;
    os << "|det| = " << std::abs(d) << " below tolerance " << tol;
    throw GeometryError(ErrorCode::DegenerateTriple, os.str());
  }
  return s;
}

bool areAntipodal(const UnitVec3& a, const UnitVec3& b, double angularTol) {
  return dot(a.vec(), b.vec()) < 0.0 && cross(a.vec(), b.vec()).norm() < angularTol;
}

bool balanced4(const UnitVec3& a, const UnitVec3& b, const UnitVec3& c, const UnitVec3& d,
               double tol) {
  const Sign abc = strictSign(a, b, c, tol);
  const Sign acd = strictSign(a, c, d, tol);
  const Sign abd = strictSign(a, b, d, tol);
  const Sign bcd = strictSign(b, c, d, tol);
  return abc == acd && abd == -abc && bcd == -abc;
}

std::optional<UnitVec3> hemisphereWitness(std::span<const UnitVec3> points, double tol) {
  const std::size_t n = points.size();
  if (n < 2) {
    throw GeometryError(ErrorCode::PreconditionViolated, "hemisphere test needs at least two points");
  }
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t q = p + 1; q < n; ++q) {
      const Vec3 normal = cross(points[p].vec(), points[q].vec());
      if (areAntipodal(points[p], points[q])) continue;
      if (normal.norm() < tol) {
        throw GeometryError(ErrorCode::DegenerateArc, "two points coincide");
      }
      // All remaining points must sit strictly on one side of plane(p, q),
      // except exact antipodes of p or q, which lie on it.
      Sign side = Sign::Zero;
      bool consistent = true;
      for (std::size_t r = 0; r < n && consistent; ++r) {
        if (r == p || r == q) continue;
        if (areAntipodal(points[r], points[p]) || areAntipodal(points[r], points[q])) continue;
        const Sign s = strictSign(points[p], points[q], points[r], tol);
        if (side == Sign::Zero) {
          side = s;
        } else if (s != side) {
          consistent = false;
        }
      }
      if (consistent) {
        const UnitVec3 nrm = UnitVec3::normalize(normal);
        return side == Sign::Negative ? -nrm : nrm;
      }
    }
  }
  return std::nullopt;
}

std::vector<double> positiveCombination(std::span<const UnitVec3> points, const UnitVec3& target,
                                        double tol) {
  if (points.size() < 4 || hemisphereWitness(points, tol).has_value()) {
    throw GeometryError(ErrorCode::NotBalanced,
                        "positive combinations of every direction need a balanced set");
  }
  const std::size_t n = points.size();
  const Vec3 t = target.vec();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) {
        const Vec3& a = points[i].vec();
        const Vec3& b = points[j].vec();
        const Vec3& c = points[k].vec();
        const double d = det3(a, b, c);
        if (std::abs(d) < tol) continue;
        // Cramer's rule for t = alpha a + beta b + gamma c.
        std::array<double, 3> coef = {det3(t, b, c) / d, det3(a, t, c) / d, det3(a, b, t) / d};
        if (std::any_of(coef.begin(), coef.end(), [](double v) { return v < -1e-12; })) continue;
        std::vector<double> lambda(n, 0.0);
        lambda[i] = std::max(coef[0], 0.0);
        lambda[j] = std::max(coef[1], 0.0);
        lambda[k] = std::max(coef[2], 0.0);
        return lambda;
      }
    }
  }
  // Unreachable for a balanced set: its triangle cones cover the sphere.
  throw GeometryError(ErrorCode::DegenerateTriple, "no triple cone contains the target");
}

GreatArc::GreatArc(const UnitVec3& from, const UnitVec3& to) : a(from), b(to) {
  if (cross(a.vec(), b.vec()).norm() < kDegeneracyTol) {
    throw GeometryError(ErrorCode::DegenerateArc, "arc endpoints are equal or antipodal");
  }
}

double GreatArc::length() const { return sphericalDistance(a, b); }

UnitVec3 GreatArc::at(double t) const { return moveToward(a, b, t * length()); }

namespace {

// w lies on the great circle of (a, b); true iff it is inside the minor arc.
bool insideArc(const Vec3& a, const Vec3& b, const Vec3& w) {
  const Vec3 n = cross(a, b);
  return dot(cross(a, w), n) > 0.0 && dot(cross(w, b), n) > 0.0;
}

}  // namespace

ArcRelation arcsRelation(const GreatArc& first, const GreatArc& second, double tol) {
  const UnitVec3& a = first.a;
  const UnitVec3& b = first.b;
  const UnitVec3& c = second.a;
  const UnitVec3& d = second.b;
  // Labels follow the edge pair (i, i+1) = (a, b), (j, j+1) = (c, d).
  const Sign abc = strictSign(a, b, c, tol);
  const Sign bcd = strictSign(b, c, d, tol);
  const Sign abd = strictSign(a, b, d, tol);
  const Sign acd = strictSign(a, c, d, tol);

  ArcRelation rel;
  if (abc == bcd && abd == -abc && acd == abd) {
    rel.tag = ArcRelationTag::Cross;
  } else if (abc == acd && abd == -abc && bcd == abd) {
    rel.tag = ArcRelationTag::AntipodalCross;
  } else {
    return rel;
  }
  const UnitVec3 w = UnitVec3::normalize(cross(cross(a.vec(), b.vec()), cross(c.vec(), d.vec())));
  rel.witness = insideArc(a.vec(), b.vec(), w.vec()) ? w : -w;
  return rel;
}

bool pointInSphericalTriangle(const UnitVec3& p, const UnitVec3& a, const UnitVec3& b,
                              const UnitVec3& c, double tol) {
  const Sign orient = strictSign(a, b, c, tol);
  return strictSign(a, b, p, tol) == orient && strictSign(b, c, p, tol) == orient &&
         strictSign(c, a, p, tol) == orient;
}

double sphericalDistance(const UnitVec3& u, const UnitVec3& v) {
  return std::atan2(cross(u.vec(), v.vec()).norm(), dot(u.vec(), v.vec()));
}

UnitVec3 moveToward(const UnitVec3& from, const UnitVec3& toward, double angle) {
  const Vec3 p = from.vec();
  const Vec3 tangent = toward.vec() - dot(toward.vec(), p) * p;
  const double tn = tangent.norm();
  if (tn < 1e-300) {
    throw GeometryError(ErrorCode::DegenerateArc, "direction undefined between equal/antipodal points");
  }
  return UnitVec3::normalize(std::cos(angle) * p + std::sin(angle) * (tangent / tn));
}

std::pair<Vec3, Vec3> tangentBasis(const UnitVec3& p) {
  const Vec3 v = p.vec();
  // Seed with the axis least aligned with p.
  const double ax = std::abs(v.x), ay = std::abs(v.y), az = std::abs(v.z);
  const Vec3 seed = (ax <= ay && ax <= az) ? Vec3{1, 0, 0}
                    : (ay <= az)           ? Vec3{0, 1, 0}
                                           : Vec3{0, 0, 1};
  const Vec3 t1raw = cross(seed, v);
  const Vec3 t1 = t1raw / t1raw.norm();
  const Vec3 t2 = cross(v, t1);
  return {t1, t2};
}

}  // namespace fourvertex
