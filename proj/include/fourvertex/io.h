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

// Polygon files and JSON views of analysis results.
//
// A polygon file is a JSON object
//   {"kind": "spherical" | "space", "name": "...", "vertices": [[x, y, z], ...]}
// Spherical vertices are renormalized on load; a vertex further than 1e-6
// from unit length is rejected.

#pragma once

#include <optional>
#include <string>
#include <variant>

#include <json.hpp>

#include "fourvertex/analysis.h"
#include "fourvertex/hulls.h"
#include "fourvertex/surgery.h"

namespace fourvertex {

using AnyPolygon = std::variant<SphericalPolygon, SpacePolygon>;

/// Throws ParseError.
AnyPolygon polygonFromJson(const nlohmann::json& doc);
nlohmann::json polygonToJson(const AnyPolygon& polygon, const std::string& name = "");

/// Throws IOError or ParseError.
AnyPolygon loadPolygon(const std::string& path);
void savePolygon(const std::string& path, const AnyPolygon& polygon, const std::string& name = "");

nlohmann::json vec3ToJson(const Vec3& v);
nlohmann::json toJson(const IntersectionRecord& rec);
nlohmann::json toJson(const AnalysisReport& report);
nlohmann::json toJson(const SpaceAnalysis& analysis);
nlohmann::json toJson(const Triangulation& tri);
nlohmann::json toJson(const LocalFrame& frame);
nlohmann::json toJson(const EliminationResult& result);

}  // namespace fourvertex
