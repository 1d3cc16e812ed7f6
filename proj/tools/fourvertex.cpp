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

// Command-line front end: analyze, verify, gamma, gen, surgery.
//
// Exit status: 0 no violations, 1 usage or I/O error, 2 a theorem violation
// was recorded.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "fourvertex/harness.h"

namespace fv = fourvertex;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitViolation = 2;

struct SizeRange {
  std::size_t lo = 0;
  std::size_t hi = 0;
};

SizeRange parseSizes(const std::string& text) {
  const auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      const std::size_t n = std::stoul(text);
      return {n, n};
    }
    return {std::stoul(text.substr(0, dots)), std::stoul(text.substr(dots + 2))};
  } catch (const std::exception&) {
    throw CLI::ValidationError("--n", "expected N or A..B, got " + text);
  }
}

std::vector<fv::CheckId> parseCheckList(const std::string& text) {
  if (text == "all") return fv::allChecks();
  std::vector<fv::CheckId> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto id = fv::parseCheck(item);
    if (!id) throw CLI::ValidationError("--checks", "unknown check " + item);
    out.push_back(*id);
  }
  return out;
}

fv::Family familyOrThrow(const std::string& name) {
  const auto f = fv::parseFamily(name);
  if (!f) throw CLI::ValidationError("--family", "unknown family " + name);
  return *f;
}

void writeOutput(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream out(path);
  if (!out) throw fv::GeometryError(fv::ErrorCode::IOError, "cannot write " + path);
  out << text;
}

nlohmann::json analyzeSpherical(const fv::SphericalPolygon& q, double tol) {
  const fv::AnalysisReport report = fv::analyze(q, tol);
  nlohmann::json doc = fv::toJson(report);
  const bool regionDefined = report.simple && (report.hemisphereContained || report.dminus == 0);
  if (regionDefined) {
    try {
      doc["triangulation"] = fv::toJson(fv::triangulateInterior(q, tol));
    } catch (const fv::GeometryError& e) {
      doc["triangulation"] = {{"error", std::string(fv::errorCodeName(e.code()))}};
    }
  } else {
    doc["triangulation"] = nullptr;
  }
  return doc;
}

int runAnalyze(const std::string& path, double tol) {
  const fv::AnyPolygon polygon = fv::loadPolygon(path);
  nlohmann::json doc;
  if (const auto* q = std::get_if<fv::SphericalPolygon>(&polygon)) {
    doc = analyzeSpherical(*q, tol);
  } else {
    const auto& p = std::get<fv::SpacePolygon>(polygon);
    doc["kind"] = "space";
    doc["space"] = fv::toJson(fv::analyzeSpacePolygon(p, tol));
    doc["space"]["F_direct"] = fv::countFlatteningsDirect(p, tol);
    doc["indicatrix"] = analyzeSpherical(fv::tangentIndicatrix(p), tol);
  }
  std::cout << doc.dump(2) << '\n';
  return kExitOk;
}

int runGamma() {
  std::cout << "x1,x2,x3,x4,y1,y2,y3,y4,two_gamma,orbit_id\n";
  for (const auto& row : fv::gammaTable().rows) {
    for (int v : row.frame.x) std::cout << v << ',';
    for (int v : row.frame.y) std::cout << v << ',';
    std::cout << row.twoGamma << ',' << row.orbitId << '\n';
  }
  return kExitOk;
}

int runSurgery(const std::string& path, std::size_t record, std::uint64_t seed, bool antipodalSafe,
               double tol) {
  const fv::AnyPolygon polygon = fv::loadPolygon(path);
  const auto* q = std::get_if<fv::SphericalPolygon>(&polygon);
  if (q == nullptr) throw fv::GeometryError(fv::ErrorCode::PreconditionViolated, "surgery needs a spherical polygon");
  const auto records = fv::findIntersections(*q, tol);
  if (record >= records.size()) {
    throw fv::GeometryError(fv::ErrorCode::PreconditionViolated, "record index out of range");
  }
  const fv::EliminationResult result = fv::eliminateCrossing(*q, records[record], antipodalSafe, seed, tol);
  nlohmann::json doc = fv::toJson(result);
  doc["frame"] = fv::toJson(fv::localFrame(result.prepared, result.surgery.removed, tol));
  const auto before = fv::countCrossings(fv::findIntersections(result.prepared, tol));
  const auto after = fv::countCrossings(fv::findIntersections(result.surgery.output, tol));
  doc["Dplus_before"] = before.dplus;
  doc["Dplus_after"] = after.dplus;
  std::cout << doc.dump(2) << '\n';
  return result.surgery.gammaObserved < 0 ? kExitViolation : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Inflection and crossing analysis for spherical and space polygons"};
  app.require_subcommand(1);
  double tol = fv::kDegeneracyTol;
  app.add_option("--tol", tol, "Degeneracy tolerance for determinant signs")->capture_default_str();

  std::string analyzeFile;
  auto* analyzeCmd = app.add_subcommand("analyze", "Print the analysis report of a polygon file");
  analyzeCmd->add_option("file", analyzeFile, "Polygon JSON file")->required();

  std::string family = "balanced_simple";
  std::string sizes = "4..12";
  std::size_t trials = 100;
  std::uint64_t seed = 1;
  std::string checks = "all";
  std::string format = "json";
  std::string out;
  std::int64_t maxRejections = 100000;
  auto* verifyCmd = app.add_subcommand("verify", "Run a seeded verification campaign");
  verifyCmd->add_option("--family", family, "Generator family")->capture_default_str();
  verifyCmd->add_option("--n", sizes, "Vertex count N or range A..B")->capture_default_str();
  verifyCmd->add_option("--trials", trials)->capture_default_str();
  verifyCmd->add_option("--seed", seed)->capture_default_str();
  verifyCmd->add_option("--checks", checks, "Comma-separated check ids or 'all'")->capture_default_str();
  verifyCmd->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}))->capture_default_str();
  verifyCmd->add_option("--out", out, "Output file (default stdout)");
  verifyCmd->add_option("--max-rejections", maxRejections)->capture_default_str();

  app.add_subcommand("gamma", "Print the admissible local-frame table as CSV");

  std::size_t genN = 6;
  auto* genCmd = app.add_subcommand("gen", "Generate one polygon and write it as JSON");
  genCmd->add_option("--family", family)->required();
  genCmd->add_option("--n", genN)->required();
  genCmd->add_option("--seed", seed)->capture_default_str();
  genCmd->add_option("--out", out, "Output file (default stdout)");
  genCmd->add_option("--max-rejections", maxRejections)->capture_default_str();

  std::string surgeryFile;
  std::size_t record = 0;
  bool antipodalSafe = false;
  auto* surgeryCmd = app.add_subcommand("surgery", "Remove one self-crossing by cut and paste");
  surgeryCmd->add_option("file", surgeryFile)->required();
  surgeryCmd->add_option("--record", record, "Index into the intersection list")->required();
  surgeryCmd->add_option("--seed", seed)->capture_default_str();
  surgeryCmd->add_flag("--antipodal-safe", antipodalSafe, "Keep buffer vertices away from antipodes");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*analyzeCmd) return runAnalyze(analyzeFile, tol);
    if (app.got_subcommand("gamma")) return runGamma();
    if (*genCmd) {
      const fv::Generated g = fv::generate({familyOrThrow(family), genN, seed, maxRejections});
      std::ostringstream name;
      name << family << "-n" << genN << "-seed" << seed;
      writeOutput(out, fv::polygonToJson(g.polygon, name.str()).dump(2) + "\n");
      return kExitOk;
    }
    if (*surgeryCmd) return runSurgery(surgeryFile, record, seed, antipodalSafe, tol);
    if (*verifyCmd) {
      const SizeRange range = parseSizes(sizes);
      fv::CampaignConfig config{familyOrThrow(family), range.lo, range.hi, trials, seed,
                                parseCheckList(checks), tol, maxRejections};
      const fv::ReportDoc doc = fv::runCampaign(config);
      writeOutput(out, fv::emitReport(doc, format == "csv" ? fv::ReportFormat::Csv : fv::ReportFormat::Json));
      return doc.violations.empty() ? kExitOk : kExitViolation;
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << '\n';
    return kExitUsage;
  } catch (const fv::GeometryError& e) {
    std::cerr << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
