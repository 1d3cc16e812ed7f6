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
#include <chrono>
#include <limits>
#include <sstream>

#include "fourvertex/harness.h"

namespace fourvertex {

namespace {

using ojson = nlohmann::ordered_json;

constexpr double kReplayTol = 1e-15;

std::string tallyKey(const TheoremCheck& c) {
  std::string key(checkName(c.id));
  if (c.id == CheckId::CountLemmas) key += ":" + c.detail;
  return key;
}

bool sameFailure(const TheoremCheck& a, const TheoremCheck& b) {
  return a.id == b.id && a.detail == b.detail && !b.pass;
}

bool confirmAtTightTolerance(const AnyPolygon& polygon, const TheoremCheck& failed) {
  try {
    for (const auto& c : runChecks(polygon, {failed.id}, kReplayTol)) {
      if (sameFailure(failed, c)) return true;
    }
  } catch (const GeometryError&) {
  }
  return false;
}

ojson checkToJson(const TheoremCheck& c) {
  ojson j;
  j["id"] = checkName(c.id);
  j["hypothesis_met"] = c.hypothesisMet;
  j["lhs"] = c.lhs;
  j["rhs"] = c.rhs;
  j["pass"] = c.pass;
  j["detail"] = c.detail;
  return j;
}

TheoremCheck checkFromJson(const nlohmann::json& j) {
  const auto id = parseCheck(j.at("id").get<std::string>());
  if (!id) throw GeometryError(ErrorCode::ParseError, "unknown check id");
  return {*id, j.at("hypothesis_met").get<bool>(), j.at("lhs").get<long>(), j.at("rhs").get<long>(),
          j.at("pass").get<bool>(), j.at("detail").get<std::string>()};
}

std::string csvField(std::string s) {
  std::replace(s.begin(), s.end(), ',', ';');
  std::replace(s.begin(), s.end(), '\n', ' ');
  return s;
}

}  // namespace

std::vector<std::size_t> campaignSizes(const CampaignConfig& config) {
  std::vector<std::size_t> sizes;
  for (std::size_t n = config.nMin; n <= config.nMax; ++n) {
    if (n < minVertices(config.family)) continue;
    if (requiresEven(config.family) && n % 2 != 0) continue;
    sizes.push_back(n);
  }
  if (sizes.empty()) {
    throw GeometryError(ErrorCode::PreconditionViolated, "no admissible vertex count in range");
  }
  return sizes;
}

std::uint64_t trialSeed(std::uint64_t seed, std::size_t trial) { return seed ^ trial; }

ReportDoc runCampaign(const CampaignConfig& config) {
  const auto start = std::chrono::steady_clock::now();
  const std::vector<std::size_t> sizes = campaignSizes(config);
  ReportDoc doc;
  doc.config = config;
  for (std::size_t t = 0; t < config.trials; ++t) {
    TrialResult r;
    r.trial = t;
    r.n = sizes[t % sizes.size()];
    r.seed = trialSeed(config.seed, t);
    try {
      const Generated g = generate({config.family, r.n, r.seed, config.maxRejections});
      r.attempts = g.attempts;
      if (!satisfiesFamily(g.polygon, config.family, config.tol)) {
        throw GeometryError(ErrorCode::PreconditionViolated, "generator emitted a polygon outside its family");
      }
      r.checks = runChecks(g.polygon, config.checks, config.tol);
      for (const auto& c : r.checks) {
        CheckTally& tally = doc.tallies[tallyKey(c)];
        ++tally.evaluated;
        tally.hypothesisMet += c.hypothesisMet ? 1 : 0;
        (c.pass ? tally.passed : tally.failed) += 1;
        if (!c.pass) {
          doc.violations.push_back({t, c, polygonToJson(g.polygon), confirmAtTightTolerance(g.polygon, c)});
        }
      }
    } catch (const GeometryError& e) {
      r.error = std::string(errorCodeName(e.code())) + ": " + e.what();
      ++doc.errors;
    }
    doc.results.push_back(std::move(r));
  }
  doc.wallSeconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return doc;
}

std::string emitReport(const ReportDoc& doc, ReportFormat format) {
  if (format == ReportFormat::Csv) {
    std::ostringstream os;
    os << "trial,n,seed,attempts,hypotheses_met,passed,failed,min_margin,error\n";
    for (const auto& r : doc.results) {
      long met = 0, passed = 0, failed = 0;
      long margin = std::numeric_limits<long>::max();
      for (const auto& c : r.checks) {
        if (c.hypothesisMet) {
          ++met;
          margin = std::min(margin, c.lhs - c.rhs);
        }
        (c.pass ? passed : failed) += 1;
      }
      os << r.trial << ',' << r.n << ',' << r.seed << ',' << r.attempts << ',' << met << ',' << passed
         << ',' << failed << ',';
      if (met > 0) os << margin;
      os << ',' << csvField(r.error) << '\n';
    }
    return os.str();
  }

  ojson j;
  ojson cfg;
  cfg["family"] = familyName(doc.config.family);
  cfg["n_min"] = doc.config.nMin;
  cfg["n_max"] = doc.config.nMax;
  cfg["trials"] = doc.config.trials;
  cfg["seed"] = doc.config.seed;
  cfg["checks"] = ojson::array();
  for (CheckId id : doc.config.checks) cfg["checks"].push_back(checkName(id));
  cfg["tol"] = doc.config.tol;
  cfg["max_rejections"] = doc.config.maxRejections;
  j["config"] = cfg;

  j["results"] = ojson::array();
  for (const auto& r : doc.results) {
    ojson row;
    row["trial"] = r.trial;
    row["n"] = r.n;
    row["seed"] = r.seed;
    row["attempts"] = r.attempts;
    row["checks"] = ojson::array();
    for (const auto& c : r.checks) row["checks"].push_back(checkToJson(c));
    row["error"] = r.error;
    j["results"].push_back(row);
  }

  j["tallies"] = ojson::object();
  for (const auto& [key, t] : doc.tallies) {
    j["tallies"][key] = {{"evaluated", t.evaluated},
                         {"hypothesis_met", t.hypothesisMet},
                         {"passed", t.passed},
                         {"failed", t.failed}};
  }
  j["violations"] = ojson::array();
  for (const auto& v : doc.violations) {
    ojson row;
    row["trial"] = v.trial;
    row["check"] = checkToJson(v.check);
    row["polygon"] = ojson::parse(v.polygon.dump());
    row["confirmed"] = v.confirmed;
    j["violations"].push_back(row);
  }
  j["errors"] = doc.errors;
  j["wall_seconds"] = doc.wallSeconds;
  return j.dump(2);
}

ReportDoc parseReport(const std::string& text) {
  try {
    const auto j = nlohmann::json::parse(text);
    ReportDoc doc;
    const auto& cfg = j.at("config");
    const auto family = parseFamily(cfg.at("family").get<std::string>());
    if (!family) throw GeometryError(ErrorCode::ParseError, "unknown family");
    doc.config.family = *family;
    doc.config.nMin = cfg.at("n_min").get<std::size_t>();
    doc.config.nMax = cfg.at("n_max").get<std::size_t>();
    doc.config.trials = cfg.at("trials").get<std::size_t>();
    doc.config.seed = cfg.at("seed").get<std::uint64_t>();
    for (const auto& c : cfg.at("checks")) {
      const auto id = parseCheck(c.get<std::string>());
      if (!id) throw GeometryError(ErrorCode::ParseError, "unknown check id");
      doc.config.checks.push_back(*id);
    }
    doc.config.tol = cfg.at("tol").get<double>();
    doc.config.maxRejections = cfg.at("max_rejections").get<std::int64_t>();

    for (const auto& row : j.at("results")) {
      TrialResult r;
      r.trial = row.at("trial").get<std::size_t>();
      r.n = row.at("n").get<std::size_t>();
      r.seed = row.at("seed").get<std::uint64_t>();
      r.attempts = row.at("attempts").get<std::int64_t>();
      for (const auto& c : row.at("checks")) r.checks.push_back(checkFromJson(c));
      r.error = row.at("error").get<std::string>();
      doc.results.push_back(std::move(r));
    }
    for (const auto& [key, t] : j.at("tallies").items()) {
      doc.tallies[key] = {t.at("evaluated").get<std::size_t>(), t.at("hypothesis_met").get<std::size_t>(),
                          t.at("passed").get<std::size_t>(), t.at("failed").get<std::size_t>()};
    }
    for (const auto& row : j.at("violations")) {
      doc.violations.push_back({row.at("trial").get<std::size_t>(), checkFromJson(row.at("check")),
                                row.at("polygon"), row.at("confirmed").get<bool>()});
    }
    doc.errors = j.at("errors").get<std::size_t>();
    doc.wallSeconds = j.at("wall_seconds").get<double>();
    return doc;
  } catch (const nlohmann::json::exception& e) {
    throw GeometryError(ErrorCode::ParseError, e.what());
  }
}

}  // namespace fourvertex
