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

#include <algorithm>
#include <array>
#include <cmath>
#include <random>
#include <sstream>

#include "fourvertex/harness.h"
#include "perturbation.h"

namespace fourvertex {

namespace {

using Rng = std::mt19937_64;

// Above these sizes uniform rejection is too rare to be practical and the
// constructive samplers take over.
constexpr std::size_t kAntipodalFreeRejectionMax = 8;
constexpr std::size_t kSymmetricSimpleRejectionMax = 8;

constexpr std::array<std::pair<Family, std::string_view>, 8> kFamilyNames{{
    {Family::Uniform, "uniform"},
    {Family::Balanced, "balanced"},
    {Family::BalancedSimple, "balanced_simple"},
    {Family::BalancedSimpleAntipodalFree, "balanced_simple_antipodal_free"},
    {Family::SymmetricSimpleBalanced, "symmetric_simple_balanced"},
    {Family::Symmetric, "symmetric"},
    {Family::HemisphereSimple, "hemisphere_simple"},
    {Family::SpacePolygon, "space_polygon"},
}};

class Budget {
 public:
  Budget(std::int64_t limit, const GeneratorSpec& spec) : limit_(limit), spec_(spec) {}

  void spend() {
    if (++used_ <= limit_) return;
    std::ostringstream os;
    os << familyName(spec_.family) << " n=" << spec_.n << " seed=" << spec_.seed
       << ": no acceptable polygon in " << limit_ << " attempts (acceptance 0/" << limit_ << ")";
    throw GeometryError(ErrorCode::RejectionBudgetExceeded, os.str());
  }
  std::int64_t used() const { return used_; }

 private:
  std::int64_t used_ = 0;
  std::int64_t limit_;
  const GeneratorSpec& spec_;
};

UnitVec3 randomUnit(Rng& rng) {
  std::normal_distribution<double> gauss;
  while (true) {
    const Vec3 v{gauss(rng), gauss(rng), gauss(rng)};
    if (v.norm() > 1e-6) return UnitVec3::normalize(v);
  }
}

std::size_t randomIndex(Rng& rng, std::size_t n) {
  return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
}

std::optional<SphericalPolygon> makePolygon(std::vector<UnitVec3> verts) {
  try {
    return SphericalPolygon(std::move(verts));
  } catch (const GeometryError&) {
    return std::nullopt;
  }
}

bool acceptSpherical(const SphericalPolygon& q, Family family, double tol) {
  const auto counts = detail::tryCounts(q, tol);
  if (!counts) return false;
  const bool balanced = isBalanced(q.vertices(), tol);
  const bool simple = counts->dplus == 0;
  switch (family) {
    case Family::Uniform:
      return true;
    case Family::Balanced:
      return balanced;
    case Family::BalancedSimple:
      return balanced && simple;
    case Family::BalancedSimpleAntipodalFree:
      return balanced && simple && counts->dminus == 0;
    case Family::SymmetricSimpleBalanced:
      return isSymmetric(q) && balanced && simple;
    case Family::Symmetric:
      return isSymmetric(q) && balanced;
    case Family::HemisphereSimple:
      return !balanced && simple;
    case Family::SpacePolygon:
      return false;
  }
  return false;
}

std::vector<UnitVec3> symmetricClosure(std::vector<UnitVec3> half) {
  const std::size_t m = half.size();
  for (std::size_t k = 0; k < m; ++k) half.push_back(-half[k]);
  return half;
}

SphericalPolygon byRejection(Family family, std::size_t n, Rng& rng, Budget& budget) {
  const bool symmetric =
      family == Family::Symmetric || family == Family::SymmetricSimpleBalanced;
  while (true) {
    budget.spend();
    std::vector<UnitVec3> verts;
    for (std::size_t k = 0; k < (symmetric ? n / 2 : n); ++k) verts.push_back(randomUnit(rng));
    if (symmetric) verts = symmetricClosure(std::move(verts));
    auto q = makePolygon(std::move(verts));
    if (q && acceptSpherical(*q, family, kDegeneracyTol)) return *q;
  }
}

// Random single-vertex moves that keep the family's hypotheses; symmetric
// families move a vertex together with its antipode.
SphericalPolygon randomWalk(SphericalPolygon q, Family family, std::size_t steps, double step,
                            Rng& rng) {
  const bool symmetric = family == Family::SymmetricSimpleBalanced;
  const std::size_t n = q.size();
  for (std::size_t s = 0; s < steps; ++s) {
    std::vector<UnitVec3> verts(q.vertices().begin(), q.vertices().end());
    const std::size_t k = randomIndex(rng, n);
    verts[k] = detail::jitter(verts[k], step, rng);
    if (symmetric) verts[(k + n / 2) % n] = -verts[k];
    auto cand = makePolygon(std::move(verts));
    if (cand && acceptSpherical(*cand, family, kDegeneracyTol)) q = std::move(*cand);
  }
  return q;
}

SphericalPolygon antipodalFreeByGrowth(const GeneratorSpec& spec, Rng& rng, Budget& budget) {
  SphericalPolygon q = byRejection(Family::BalancedSimpleAntipodalFree, 6, rng, budget);
  q = randomWalk(std::move(q), Family::BalancedSimpleAntipodalFree, 30, 0.3, rng);
  while (q.size() < spec.n) {
    budget.spend();
    const std::size_t k = randomIndex(rng, q.size());
    const auto kk = static_cast<std::ptrdiff_t>(k);
    const UnitVec3 mid = UnitVec3::normalize(q[kk].vec() + q[kk + 1].vec());
    const UnitVec3 v = detail::jitter(mid, 0.5 * sphericalDistance(q[kk], q[kk + 1]), rng);
    try {
      SphericalPolygon cand = q.withVertexInserted(k + 1, v);
      if (acceptSpherical(cand, Family::BalancedSimpleAntipodalFree, kDegeneracyTol)) q = std::move(cand);
    } catch (const GeometryError&) {
    }
  }
  return randomWalk(std::move(q), Family::BalancedSimpleAntipodalFree, 8 * spec.n, 0.3, rng);
}

// Vertices sorted by longitude about a random axis, followed by their
// antipodes: a closed curve that is a graph over longitude, hence simple.
SphericalPolygon symmetricByLongitude(const GeneratorSpec& spec, Rng& rng, Budget& budget) {
  const std::size_t m = spec.n / 2;
  std::uniform_real_distribution<double> lonDist(0.0, kPi);
  std::uniform_real_distribution<double> latDist(-1.2, 1.2);
  while (true) {
    budget.spend();
    const UnitVec3 axis = randomUnit(rng);
    const auto [t1, t2] = tangentBasis(axis);
    std::vector<double> lon(m);
    for (double& l : lon) l = lonDist(rng);
    std::sort(lon.begin(), lon.end());
    std::vector<UnitVec3> half;
    for (double l : lon) {
      const double lat = latDist(rng);
      half.push_back(UnitVec3::normalize(std::cos(lat) * (std::cos(l) * t1 + std::sin(l) * t2) +
                                         std::sin(lat) * axis.vec()));
    }
    auto q = makePolygon(symmetricClosure(std::move(half)));
    if (q && acceptSpherical(*q, Family::SymmetricSimpleBalanced, kDegeneracyTol)) {
      return randomWalk(std::move(*q), Family::SymmetricSimpleBalanced, 8 * spec.n, 0.3, rng);
    }
  }
}

// Points in a random open hemisphere, untangled by reversing the chain
// between two crossing edges until no self-crossing is left. Each reversal
// shortens the polygon, so the loop terminates.
SphericalPolygon hemisphereSimple(const GeneratorSpec& spec, Rng& rng, Budget& budget) {
  while (true) {
    budget.spend();
    const UnitVec3 pole = randomUnit(rng);
    std::vector<UnitVec3> verts;
    while (verts.size() < spec.n) {
      UnitVec3 p = randomUnit(rng);
      if (dot(p.vec(), pole.vec()) < 0) p = -p;
      if (dot(p.vec(), pole.vec()) > 0.05) verts.push_back(p);
    }
    bool ok = true;
    for (std::size_t iter = 0; ok && iter < 50 * spec.n * spec.n; ++iter) {
      auto q = makePolygon(verts);
      if (!q) {
        ok = false;
        break;
      }
      std::optional<IntersectionRecord> cross;
      try {
        for (const auto& r : findIntersections(*q)) {
          if (r.kind == CrossingKind::SelfCross) {
            cross = r;
            break;
          }
        }
      } catch (const GeometryError&) {
        ok = false;
        break;
      }
      if (!cross) {
        if (acceptSpherical(*q, Family::HemisphereSimple, kDegeneracyTol)) return *q;
        ok = false;
        break;
      }
      std::reverse(verts.begin() + static_cast<std::ptrdiff_t>(cross->i + 1),
                   verts.begin() + static_cast<std::ptrdiff_t>(cross->j + 1));
    }
  }
}

SpacePolygon spacePolygon(const GeneratorSpec& spec, Rng& rng, Budget& budget) {
  std::normal_distribution<double> gauss;
  while (true) {
    budget.spend();
    std::vector<Vec3> pts{Vec3{}};
    Vec3 sum{};
    for (std::size_t k = 0; k + 1 < spec.n; ++k) {
      const Vec3 e{gauss(rng), gauss(rng), gauss(rng)};
      sum += e;
      pts.push_back(pts.back() + e);
    }
    if (sum.norm() < 1e-6) continue;
    try {
      SpacePolygon p(std::move(pts));
      if (detail::tryCounts(tangentIndicatrix(p))) return p;
    } catch (const GeometryError&) {
    }
  }
}

}  // namespace

std::string_view familyName(Family family) {
  for (const auto& [f, name] : kFamilyNames) {
    if (f == family) return name;
  }
  return "unknown";
}

std::optional<Family> parseFamily(std::string_view name) {
  for (const auto& [f, n] : kFamilyNames) {
    if (n == name) return f;
  }
  return std::nullopt;
}

std::size_t minVertices(Family family) {
  switch (family) {
    case Family::BalancedSimpleAntipodalFree:
    case Family::SymmetricSimpleBalanced:
    case Family::Symmetric:
      return 6;
    default:
      return 4;
  }
}

bool requiresEven(Family family) {
  return family == Family::Symmetric || family == Family::SymmetricSimpleBalanced;
}

std::uint64_t mixSeed(std::uint64_t seed) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

Generated generate(const GeneratorSpec& spec) {
  if (spec.n < minVertices(spec.family) || (requiresEven(spec.family) && spec.n % 2 != 0)) {
    std::ostringstream os;
    os << familyName(spec.family) << " needs " << (requiresEven(spec.family) ? "even " : "")
       << "n >= " << minVertices(spec.family);
    throw GeometryError(ErrorCode::PreconditionViolated, os.str());
  }
  Rng rng(mixSeed(spec.seed));
  Budget budget(spec.maxRejections, spec);
  switch (spec.family) {
    case Family::SpacePolygon: {
      SpacePolygon p = spacePolygon(spec, rng, budget);
      return {std::move(p), budget.used()};
    }
    case Family::HemisphereSimple:
      return {hemisphereSimple(spec, rng, budget), budget.used()};
    case Family::BalancedSimpleAntipodalFree:
      if (spec.n > kAntipodalFreeRejectionMax) return {antipodalFreeByGrowth(spec, rng, budget), budget.used()};
      break;
    case Family::SymmetricSimpleBalanced:
      if (spec.n > kSymmetricSimpleRejectionMax) return {symmetricByLongitude(spec, rng, budget), budget.used()};
      break;
    default:
      break;
  }
  SphericalPolygon q = byRejection(spec.family, spec.n, rng, budget);
  return {std::move(q), budget.used()};
}

bool satisfiesFamily(const AnyPolygon& polygon, Family family, double tol) {
  if (const auto* p = std::get_if<SpacePolygon>(&polygon)) {
    if (family != Family::SpacePolygon) return false;
    try {
      return detail::tryCounts(tangentIndicatrix(*p), tol).has_value();
    } catch (const GeometryError&) {
      return false;
    }
  }
  return acceptSpherical(std::get<SphericalPolygon>(polygon), family, tol);
}

}  // namespace fourvertex
