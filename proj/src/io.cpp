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

#include "fourvertex/io.h"

#include <cmath>
#include <fstream>
#include <sstream>

namespace fourvertex {

namespace {

constexpr double kUnitLengthSlack = 1e-6;

Vec3 vec3FromJson(const nlohmann::json& j) {
  if (!j.is_array() || j.size() != 3) {
    throw GeometryError(ErrorCode::ParseError, "a vertex must be an array of three numbers");
  }
  Vec3 v;
  try {
    v = {j[0].get<double>(), j[1].get<double>(), j[2].get<double>()};
  } catch (const nlohmann::json::exception& e) {
    throw GeometryError(ErrorCode::ParseError, e.what());
  }
  if (!std::isfinite(v.x) || !std::isfinite(v.y) || !std::isfinite(v.z)) {
    throw GeometryError(ErrorCode::ParseError, "non-finite coordinate");
  }
  return v;
}

}  // namespace

AnyPolygon polygonFromJson(const nlohmann::json& doc) {
  if (!doc.is_object() || !doc.contains("vertices") || !doc["vertices"].is_array()) {
    throw GeometryError(ErrorCode::ParseError, "expected an object with a \"vertices\" array");
  }
  const std::string kind = doc.value("kind", std::string("spherical"));
  std::vector<Vec3> raw;
  for (const auto& v : doc["vertices"]) raw.push_back(vec3FromJson(v));
  if (kind == "space") return SpacePolygon(std::move(raw));
  if (kind != "spherical") throw GeometryError(ErrorCode::ParseError, "unknown kind \"" + kind + "\"");
  std::vector<UnitVec3> unit;
  for (std::size_t k = 0; k < raw.size(); ++k) {
    if (std::abs(raw[k].norm() - 1.0) > kUnitLengthSlack) {
      std::ostringstream os;
      os << "vertex " << k << " is not a unit vector";
      throw GeometryError(ErrorCode::ParseError, os.str());
    }
    unit.push_back(UnitVec3::normalize(raw[k]));
  }
  return SphericalPolygon(std::move(unit));
}

nlohmann::json vec3ToJson(const Vec3& v) { return nlohmann::json::array({v.x, v.y, v.z}); }

nlohmann::json polygonToJson(const AnyPolygon& polygon, const std::string& name) {
  nlohmann::json doc;
  doc["kind"] = std::holds_alternative<SphericalPolygon>(polygon) ? "spherical" : "space";
  if (!name.empty()) doc["name"] = name;
  nlohmann::json verts = nlohmann::json::array();
  std::visit(
      [&](const auto& p) {
        for (const auto& v : p.vertices()) {
          if constexpr (std::is_same_v<std::decay_t<decltype(v)>, UnitVec3>) {
            verts.push_back(vec3ToJson(v.vec()));
          } else {
            verts.push_back(vec3ToJson(v));
          }
        }
      },
      polygon);
  doc["vertices"] = std::move(verts);
  return doc;
}

AnyPolygon loadPolygon(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw GeometryError(ErrorCode::IOError, "cannot open " + path);
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw GeometryError(ErrorCode::ParseError, e.what());
  }
  return polygonFromJson(doc);
}

void savePolygon(const std::string& path, const AnyPolygon& polygon, const std::string& name) {
  std::ofstream out(path);
  if (!out) throw GeometryError(ErrorCode::IOError, "cannot write " + path);
  out << polygonToJson(polygon, name).dump(2) << '\n';
  if (!out) throw GeometryError(ErrorCode::IOError, "write failed for " + path);
}

nlohmann::json toJson(const IntersectionRecord& rec) {
  return {{"kind", rec.kind == CrossingKind::SelfCross ? "SelfCross" : "AntipodalCross"},
          {"i", rec.i},
          {"j", rec.j},
          {"witness", vec3ToJson(rec.witness.vec())}};
}

nlohmann::json toJson(const AnalysisReport& r) {
  nlohmann::json doc = nlohmann::json::object();
  doc["n"] = r.n;
  doc["I"] = r.inflections;
  doc["Dplus"] = r.dplus;
  doc["Dminus"] = r.dminus;
  doc["D"] = r.d;
  doc["S"] = r.cusps;
  doc["EssCount"] = r.essentialCount;
  doc["GoodCount"] = r.goodCount;
  doc["ExcCount"] = r.excellentCount;
  doc["balanced"] = r.balanced;
  doc["simple"] = r.simple;
  doc["symmetric"] = r.symmetric;
  doc["hemisphere_contained"] = r.hemisphereContained;
  doc["intersections"] = nlohmann::json::array();
  for (const auto& rec : r.intersections) doc["intersections"].push_back(toJson(rec));
  doc["vertices"] = nlohmann::json::array();
  for (const auto& v : r.vertexClasses) {
    doc["vertices"].push_back({{"essential", v.essential}, {"good", v.good}, {"excellent", v.excellent}});
  }
  return doc;
}

nlohmann::json toJson(const SpaceAnalysis& a) {
  return {{"F", a.flattenings}, {"Tplus", a.tplus}, {"Tminus", a.tminus}, {"T", a.t()}};
}

nlohmann::json toJson(const Triangulation& tri) {
  nlohmann::json doc = nlohmann::json::object();
  doc["triangles"] = tri.triangles;
  doc["diagonals"] = nlohmann::json::array();
  for (const auto& [a, b] : tri.diagonals) doc["diagonals"].push_back({a, b});
  doc["dual"] = tri.dual;
  doc["leaves"] = tri.leaves();
  doc["leaf_middle_vertices"] = tri.leafMiddleVertices();
  return doc;
}

nlohmann::json toJson(const LocalFrame& f) { return {{"x", f.x}, {"y", f.y}, {"two_gamma", twoGamma(f)}}; }

nlohmann::json toJson(const EliminationResult& r) {
  return {{"midpoints_inserted", r.midpointsInserted},
          {"buffer_vertices_inserted", r.bufferInserted},
          {"removed", toJson(r.surgery.removed)},
          {"I_before", r.surgery.iBefore},
          {"I_after", r.surgery.iAfter},
          {"gamma_observed", r.surgery.gammaObserved},
          {"prepared", polygonToJson(r.prepared)},
          {"output", polygonToJson(r.surgery.output)}};
}

}  // namespace fourvertex
