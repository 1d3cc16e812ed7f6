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

#include "fixtures.h"

#include "fourvertex/analysis.h"
#include "fourvertex/harness.h"

namespace fourvertex::fixtures {

namespace {

SphericalPolygon fromLonLat(std::initializer_list<std::pair<double, double>> points) {
  std::vector<UnitVec3> v;
  for (const auto& [lon, lat] : points) v.push_back(UnitVec3::fromLonLatDegrees(lon, lat));
  return SphericalPolygon(std::move(v));
}

}  // namespace

std::vector<UnitVec3> tetrahedralFrame() {
  return {UnitVec3::normalize({1, 1, 1}), UnitVec3::normalize({1, -1, -1}),
          UnitVec3::normalize({-1, 1, -1}), UnitVec3::normalize({-1, -1, 1})};
}

SphericalPolygon tetrahedralQuad() { return SphericalPolygon(tetrahedralFrame()); }

SphericalPolygon hexagon() {
  return fromLonLat({{0, 20}, {60, -40}, {120, 20}, {180, -40}, {240, 20}, {300, -40}});
}

SphericalPolygon pentagon() {
  return fromLonLat({{0, 35}, {72, -25}, {144, 30}, {216, -35}, {288, 5}});
}

SphericalPolygon figureEight() {
  return fromLonLat({{-30, 2}, {30, -3}, {60, -40}, {4, -30}, {-3, 32}, {-60, 35}});
}

SphericalPolygon reflexPentagon() {
  return fromLonLat({{0, 50}, {90, 50}, {180, 50}, {270, 52}, {318, 78}});
}

SphericalPolygon smallCircleOctagon() {
  return fromLonLat({{0, 60}, {48, 60}, {96, 60}, {135, 60}, {183, 60}, {231, 60}, {270, 60},
                     {318, 60}});
}

SphericalPolygon symmetricHexagon() {
  const std::vector<std::pair<double, double>> half{{10, 25}, {75, -15}, {130, 30}};
  std::vector<UnitVec3> v;
  for (const auto& [lon, lat] : half) v.push_back(UnitVec3::fromLonLatDegrees(lon, lat));
  for (std::size_t k = 0; k < 3; ++k) v.push_back(-v[k]);
  return SphericalPolygon(std::move(v));
}

SphericalPolygon coplanarQuad() {
  return SphericalPolygon({UnitVec3::e1(), UnitVec3::normalize({1, 1, 0}), UnitVec3::e2(),
                           UnitVec3::e3()});
}

SpacePolygon skewHexagon() {
  // Edge lengths mu_k > 0 with sum mu_k u_k = 0: for each k, a nonnegative
  // combination of the vertices pointing at -u_k, plus u_k itself.
  const SphericalPolygon q = hexagon();
  const std::size_t n = q.size();
  std::vector<double> mu(n, 0.0);
  for (std::size_t k = 0; k < n; ++k) {
    const UnitVec3& u = q[static_cast<std::ptrdiff_t>(k)];
    const auto lambda = positiveCombination(q.vertices(), -u);
    Vec3 sum;
    for (std::size_t i = 0; i < n; ++i) sum += lambda[i] * q[static_cast<std::ptrdiff_t>(i)].vec();
    for (std::size_t i = 0; i < n; ++i) mu[i] += lambda[i];
    mu[k] += sum.norm();
  }
  std::vector<Vec3> verts{Vec3{}};
  for (std::size_t k = 0; k + 1 < n; ++k) {
    verts.push_back(verts.back() + mu[k] * q[static_cast<std::ptrdiff_t>(k)].vec());
  }
  return SpacePolygon(std::move(verts));
}

std::vector<SphericalPolygon> singleCrossingPolygons(std::size_t count, std::uint64_t seed) {
  std::vector<SphericalPolygon> out;
  for (std::uint64_t s = seed; out.size() < count; ++s) {
    const std::size_t n = 5 + s % 6;
    const auto g = generate({Family::Uniform, n, s, 1000});
    const auto& q = std::get<SphericalPolygon>(g.polygon);
    try {
      if (countCrossings(findIntersections(q)).dplus == 1) out.push_back(q);
    } catch (const GeometryError&) {
    }
  }
  return out;
}

}  // namespace fourvertex::fixtures
