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

// Seeded polygon generators, inequality checks and verification campaigns.

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fourvertex/io.h"

namespace fourvertex {

enum class Family {
  Uniform,
  Balanced,
  BalancedSimple,
  BalancedSimpleAntipodalFree,
  SymmetricSimpleBalanced,
  Symmetric,
  HemisphereSimple,
  SpacePolygon,
};

std::string_view familyName(Family family);
std::optional<Family> parseFamily(std::string_view name);
/// Smallest admissible n and whether n must be even.
std::size_t minVertices(Family family);
bool requiresEven(Family family);

struct GeneratorSpec {
  Family family = Family::Uniform;
  std::size_t n = 6;
  std::uint64_t seed = 0;
  std::int64_t maxRejections = 100000;
};

struct Generated {
  AnyPolygon polygon;
  std::int64_t attempts = 0;  ///< candidates drawn, including rejected ones
};

/// Deterministic in the spec. Every spherical output passes
/// checkGeneralPosition and satisfies the family's hypotheses. Throws
/// RejectionBudgetExceeded or PreconditionViolated for an invalid n.
Generated generate(const GeneratorSpec& spec);

/// Re-verifies the family's hypotheses on a polygon.
bool satisfiesFamily(const AnyPolygon& polygon, Family family, double tol = kDegeneracyTol);

/// SplitMix64 finalizer, used to turn consecutive seeds into unrelated streams.
std::uint64_t mixSeed(std::uint64_t seed);

enum class CheckId {
  Segre4,
  Mobius6,
  Special6,
  GenD6,
  GenDplus4,
  GenSym6,
  SpaceTF6,
  SpaceTF4,
  CountLemmas,
  MonotoneDelete,
};

std::string_view checkName(CheckId id);
std::optional<CheckId> parseCheck(std::string_view name);
std::vector<CheckId> allChecks();

struct TheoremCheck {
  CheckId id = CheckId::Segre4;
  bool hypothesisMet = false;
  long lhs = 0;
  long rhs = 0;
  bool pass = true;  ///< !hypothesisMet || lhs >= rhs
  std::string detail;

  bool operator==(const TheoremCheck&) const = default;
};

/// COUNT_LEMMAS yields one entry per counting bound; the other ids one each.
std::vector<TheoremCheck> runChecks(const SphericalPolygon& polygon, const std::vector<CheckId>& which,
                                    double tol = kDegeneracyTol);
/// SPACE_* use F and T of the polygon; the other ids run on its indicatrix.
std::vector<TheoremCheck> runChecks(const SpacePolygon& polygon, const std::vector<CheckId>& which,
                                    double tol = kDegeneracyTol);
std::vector<TheoremCheck> runChecks(const AnyPolygon& polygon, const std::vector<CheckId>& which,
                                    double tol = kDegeneracyTol);

struct CampaignConfig {
  Family family = Family::BalancedSimple;
  std::size_t nMin = 4;
  std::size_t nMax = 12;
  std::size_t trials = 100;
  std::uint64_t seed = 1;
  std::vector<CheckId> checks;
  double tol = kDegeneracyTol;
  std::int64_t maxRejections = 100000;

  bool operator==(const CampaignConfig&) const = default;
};

/// Admissible vertex counts in [nMin, nMax]; trial t uses entry t mod size.
std::vector<std::size_t> campaignSizes(const CampaignConfig& config);
/// seed XOR trial index.
std::uint64_t trialSeed(std::uint64_t seed, std::size_t trial);

struct TrialResult {
  std::size_t trial = 0;
  std::size_t n = 0;
  std::uint64_t seed = 0;
  std::int64_t attempts = 0;
  std::vector<TheoremCheck> checks;
  std::string error;  ///< empty unless generation or checking threw

  bool operator==(const TrialResult&) const = default;
};

struct Violation {
  std::size_t trial = 0;
  TheoremCheck check;
  nlohmann::json polygon;  ///< replayable polygon document
  /// The failure reproduces when the checks are rerun at tolerance 1e-15.
  bool confirmed = false;

  bool operator==(const Violation&) const = default;
};

struct CheckTally {
  std::size_t evaluated = 0;
  std::size_t hypothesisMet = 0;
  std::size_t passed = 0;
  std::size_t failed = 0;

  bool operator==(const CheckTally&) const = default;
};

struct ReportDoc {
  CampaignConfig config;
  std::vector<TrialResult> results;
  std::map<std::string, CheckTally> tallies;  ///< keyed by check name (and detail for lemmas)
  std::vector<Violation> violations;
  std::size_t errors = 0;
  double wallSeconds = 0.0;

  bool operator==(const ReportDoc&) const = default;
};

ReportDoc runCampaign(const CampaignConfig& config);

enum class ReportFormat { Json, Csv };

/// JSON: the full document with a stable field order. CSV: a header plus one
/// row per trial.
std::string emitReport(const ReportDoc& doc, ReportFormat format);
/// Inverse of the JSON form. Throws ParseError.
ReportDoc parseReport(const std::string& json);

}  // namespace fourvertex
