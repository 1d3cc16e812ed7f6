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

// Acceptance suite. Prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "fixtures.h"
#include "fourvertex/harness.h"
#include "fourvertex/surgery.h"
#include "oracles.h"

namespace fv = fourvertex;

namespace {

// Pinned tolerances and sizes.
constexpr double kTupleDetFloor = 1e-6;        // nondegenerate 4-tuples
constexpr std::size_t kMonteCarloDirections = 1'000'000;
constexpr double kPredicateSeconds = 60.0;
constexpr int kArcSamples = 10'000;
constexpr double kArcMatchRadians = 1e-6;
constexpr double kGammaSeconds = 1.0;

using Clock = std::chrono::steady_clock;

double secondsSince(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Outcome {
  bool pass = true;
  std::string summary;
};

class Ledger {
 public:
  void fail(const std::string& what) {
    if (failures_++ < 5) std::fprintf(stderr, "  failure: %s\n", what.c_str());
  }
  long failures() const { return failures_; }

 private:
  long failures_ = 0;
};

// 1 ------------------------------------------------------------------------

Outcome predicateEquivalence() {
  const auto t0 = Clock::now();
  const fv::oracle::DirectionTable table(kMonteCarloDirections, 101);
  std::mt19937_64 rng(1);
  Ledger bad;
  long tuples = 0, balanced = 0, degenerateSkipped = 0;
  while (tuples < 10'000) {
    const std::array<fv::UnitVec3, 4> t{fv::oracle::randomUnit(rng), fv::oracle::randomUnit(rng),
                                        fv::oracle::randomUnit(rng), fv::oracle::randomUnit(rng)};
    bool degenerate = false;
    for (int a = 0; a < 4; ++a)
      for (int b = a + 1; b < 4; ++b)
        for (int c = b + 1; c < 4; ++c)
          degenerate |= std::abs(fv::det3(t[a].vec(), t[b].vec(), t[c].vec())) < kTupleDetFloor;
    if (degenerate) {
      ++degenerateSkipped;
      continue;
    }
    ++tuples;
    const bool b4 = fv::balanced4(t[0], t[1], t[2], t[3]);
    const bool witness = fv::hemisphereWitness(t).has_value();
    balanced += b4 ? 1 : 0;
    if (b4 == witness) bad.fail("balanced4 disagrees with hemisphere_witness at tuple " + std::to_string(tuples));
    // One-sided: a sampled open hemisphere proves the tuple is not balanced.
    if (b4 && table.findHemisphere(t)) bad.fail("Monte-Carlo hemisphere for a balanced tuple " + std::to_string(tuples));
  }
  const double secs = secondsSince(t0);
  std::ostringstream os;
  os << tuples << " tuples (" << balanced << " balanced, " << degenerateSkipped
     << " near-degenerate redrawn), " << bad.failures() << " disagreements, " << secs << " s";
  return {bad.failures() == 0 && secs < kPredicateSeconds, os.str()};
}

// 2 ------------------------------------------------------------------------

Outcome intersectionOracle() {
  Ledger bad;
  long pairs = 0, crosses = 0, antipodal = 0, ambiguous = 0;
  for (std::uint64_t s = 0; s < 1000; ++s) {
    const std::size_t n = 4 + s % 9;
    const auto g = fv::generate({fv::Family::Uniform, n, fv::trialSeed(2, s), 100000});
    const auto& q = std::get<fv::SphericalPolygon>(g.polygon);
    std::map<std::pair<std::size_t, std::size_t>, fv::IntersectionRecord> found;
    for (const auto& r : fv::findIntersections(q)) found[{r.i, r.j}] = r;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 2; j < n; ++j) {
        if (i == 0 && j == n - 1) continue;
        const auto ii = static_cast<std::ptrdiff_t>(i), jj = static_cast<std::ptrdiff_t>(j);
        const auto dense = fv::oracle::denseArcRelation(q[ii].vec(), q[ii + 1].vec(), q[jj].vec(),
                                                        q[jj + 1].vec(), kArcSamples, kArcMatchRadians);
        ++pairs;
        if (dense.verdict == fv::oracle::ArcVerdict::Ambiguous) {
          ++ambiguous;
          continue;
        }
        const auto it = found.find({i, j});
        std::optional<fv::CrossingKind> got;
        if (it != found.end()) got = it->second.kind;
        std::optional<fv::CrossingKind> want;
        if (dense.verdict == fv::oracle::ArcVerdict::Cross) want = fv::CrossingKind::SelfCross;
        if (dense.verdict == fv::oracle::ArcVerdict::Antipodal) want = fv::CrossingKind::AntipodalCross;
        std::ostringstream where;
        where << "seed " << s << " edges (" << i << "," << j << ")";
        if (got != want) {
          bad.fail("kind mismatch at " + where.str());
          continue;
        }
        if (!want) continue;
        (*want == fv::CrossingKind::SelfCross ? crosses : antipodal) += 1;
        const double gap = fv::sphericalDistance(it->second.witness, fv::UnitVec3::normalize(*dense.point));
        if (gap > kArcMatchRadians) bad.fail("witness off by " + std::to_string(gap) + " at " + where.str());
      }
    }
  }
  std::ostringstream os;
  os << "1000 polygons, " << pairs << " edge pairs (" << crosses << " SelfCross, " << antipodal
     << " AntipodalCross, " << ambiguous << " within the ambiguity band), " << bad.failures()
     << " disagreements";
  return {bad.failures() == 0, os.str()};
}

// 3, 4, 5 ------------------------------------------------------------------

struct Campaigns {
  std::vector<std::pair<std::string, fv::ReportDoc>> docs;
  const fv::ReportDoc& byName(const std::string& name) const {
    for (const auto& [n, d] : docs)
      if (n == name) return d;
    throw std::logic_error("no campaign " + name);
  }
};

Campaigns runCampaigns() {
  using fv::CheckId;
  using fv::Family;
  struct Plan {
    std::string name;
    Family family;
    std::size_t nMin, nMax, trials;
    std::vector<CheckId> checks;
  };
  const std::vector<Plan> plans{
      {"3a", Family::BalancedSimple, 4, 12, 10'000, {CheckId::Segre4, CheckId::CountLemmas, CheckId::MonotoneDelete}},
      {"3b", Family::SymmetricSimpleBalanced, 6, 12, 1'000, {CheckId::Mobius6, CheckId::CountLemmas}},
      {"3c", Family::BalancedSimpleAntipodalFree, 6, 12, 1'000, {CheckId::Special6, CheckId::CountLemmas}},
      {"3d", Family::Balanced, 4, 12, 10'000, {CheckId::GenD6, CheckId::GenDplus4, CheckId::CountLemmas}},
      {"3e", Family::Symmetric, 6, 12, 1'000, {CheckId::GenSym6, CheckId::CountLemmas}},
      {"3f", Family::SpacePolygon, 6, 12, 1'000, {CheckId::SpaceTF6, CheckId::SpaceTF4}},
      // Tangent indicatrices are always balanced, so the hemisphere lemma
      // needs its own population.
      {"hemisphere", Family::HemisphereSimple, 4, 12, 1'000, {CheckId::CountLemmas}},
  };
  Campaigns out;
  std::uint64_t seed = 31;
  for (const auto& p : plans) {
    fv::CampaignConfig c;
    c.family = p.family;
    c.nMin = p.nMin;
    c.nMax = p.nMax;
    c.trials = p.trials;
    c.seed = seed++;
    c.checks = p.checks;
    out.docs.emplace_back(p.name, fv::runCampaign(c));
    std::fprintf(stderr, "  campaign %s: %.1f s\n", p.name.c_str(), out.docs.back().second.wallSeconds);
  }
  return out;
}

Outcome theoremCampaigns(const Campaigns& all) {
  const std::vector<std::pair<std::string, std::vector<std::string>>> primary{
      {"3a", {"SEGRE4"}},  {"3b", {"MOBIUS6"}},           {"3c", {"SPECIAL6"}},
      {"3d", {"GEN_D6", "GEN_DPLUS4"}}, {"3e", {"GEN_SYM6"}}, {"3f", {"SPACE_TF6", "SPACE_TF4"}},
  };
  bool pass = true;
  std::ostringstream os;
  for (const auto& [name, keys] : primary) {
    const fv::ReportDoc& d = all.byName(name);
    std::size_t violations = 0;
    for (const auto& v : d.violations) {
      const std::string key(fv::checkName(v.check.id));
      for (const auto& k : keys) violations += (k == key) ? 1 : 0;
    }
    os << name << ":";
    for (const auto& k : keys) {
      const auto it = d.tallies.find(k);
      const std::size_t met = it == d.tallies.end() ? 0 : it->second.hypothesisMet;
      os << " " << k << " " << met << "/" << d.results.size();
      pass &= met > 0;
    }
    os << " viol=" << violations << " err=" << d.errors << " (" << static_cast<int>(d.wallSeconds) << "s); ";
    pass &= violations == 0 && d.errors == 0;
  }
  return {pass, os.str()};
}

Outcome countingLemmas(const Campaigns& all) {
  std::map<std::string, fv::CheckTally> sum;
  std::size_t errors = 0;
  for (const auto& [name, d] : all.docs) {
    errors += d.errors;
    for (const auto& [key, t] : d.tallies) {
      if (key.rfind("COUNT_LEMMAS:", 0) != 0) continue;
      auto& s = sum[key];
      s.evaluated += t.evaluated;
      s.hypothesisMet += t.hypothesisMet;
      s.passed += t.passed;
      s.failed += t.failed;
    }
  }
  bool pass = errors == 0 && sum.size() == 4;
  std::ostringstream os;
  for (const auto& [key, t] : sum) {
    os << key.substr(13) << " met " << t.hypothesisMet << " failed " << t.failed << "; ";
    pass &= t.hypothesisMet > 0 && t.failed == 0;
  }
  return {pass, os.str()};
}

Outcome deletionMonotonicity(const Campaigns& all) {
  const fv::ReportDoc& d = all.byName("3a");
  const auto it = d.tallies.find("MONOTONE_DELETE");
  if (it == d.tallies.end()) return {false, "no MONOTONE_DELETE tally"};
  std::ostringstream os;
  os << it->second.hypothesisMet << " simple polygons with n >= 5, " << it->second.failed << " violations";
  return {it->second.hypothesisMet > 0 && it->second.failed == 0, os.str()};
}

// 6 ------------------------------------------------------------------------

Outcome removableVertex() {
  Ledger bad;
  for (std::size_t t = 0; t < 1000; ++t) {
    const std::size_t n = 7 + t % 6;
    const auto g = fv::generate({fv::Family::BalancedSimpleAntipodalFree, n, fv::trialSeed(6, t), 100000});
    const auto& q = std::get<fv::SphericalPolygon>(g.polygon);
    const auto v = fv::findRemovableVertex(q);
    if (!v) {
      bad.fail("no removable vertex, trial " + std::to_string(t));
      continue;
    }
    const fv::SphericalPolygon d = fv::deleteVertex(q, *v);
    if (!fv::satisfiesFamily(d, fv::Family::BalancedSimpleAntipodalFree)) {
      bad.fail("deletion leaves the family, trial " + std::to_string(t));
    }
  }
  std::ostringstream os;
  os << "1000 polygons, n in 7..12, " << bad.failures() << " failures";
  return {bad.failures() == 0, os.str()};
}

// 7 ------------------------------------------------------------------------

fv::LocalFrame frameOf(std::array<int, 4> x, std::array<int, 4> y) {
  fv::LocalFrame f;
  f.x = x;
  f.y = y;
  return f;
}

Outcome gammaTableCriterion() {
  const auto t0 = Clock::now();
  const fv::GammaTable table = fv::gammaTable();
  int minAdmissible = 1 << 20;
  for (const auto& row : table.rows) minAdmissible = std::min(minAdmissible, row.twoGamma);
  int invariantFailures = 0;
  for (int code = 0; code < 256; ++code) {
    fv::LocalFrame f;
    for (int k = 0; k < 4; ++k) {
      f.x[k] = (code >> k) & 1 ? 1 : -1;
      f.y[k] = (code >> (k + 4)) & 1 ? 1 : -1;
    }
    const int v = fv::twoGamma(f);
    invariantFailures += fv::twoGamma(fv::permuted(f, {1, 0, 3, 2})) != v;
    invariantFailures += fv::twoGamma(fv::permuted(f, {2, 3, 0, 1})) != v;
  }
  const std::array<int, 3> anchors{fv::twoGamma(frameOf({1, 1, 1, 1}, {1, 1, 1, 1})),
                                   fv::twoGamma(frameOf({1, 1, 1, 1}, {-1, -1, -1, -1})),
                                   fv::twoGamma(frameOf({-1, 1, 1, 1}, {-1, 1, 1, 1}))};
  const double secs = secondsSince(t0);
  std::ostringstream os;
  os << table.rows.size() << " admissible frames, min two_gamma " << minAdmissible << ", "
     << table.orbitCount << " orbits, " << invariantFailures << " invariance failures, anchors "
     << anchors[0] << "/" << anchors[1] << "/" << anchors[2] << ", " << secs << " s";
  const bool pass = table.rows.size() == 81 && minAdmissible == 0 && table.minTwoGamma == 0 &&
                    invariantFailures == 0 && anchors == std::array<int, 3>{0, 8, -4} &&
                    secs < kGammaSeconds;
  return {pass, os.str()};
}

// 8 ------------------------------------------------------------------------

struct Counts {
  int i, dplus, dminus;
  bool operator==(const Counts&) const = default;
};

Counts countsOf(const fv::SphericalPolygon& q) {
  const auto c = fv::countCrossings(fv::findIntersections(q));
  return {fv::countInflections(q), c.dplus, c.dminus};
}

Outcome surgeryEndToEnd() {
  Ledger bad;
  const auto polygons = fv::fixtures::singleCrossingPolygons(200, 8000);
  long buffered = 0, midpoints = 0;
  std::map<int, int> gammaHistogram;
  for (std::size_t k = 0; k < polygons.size(); ++k) {
    const auto& q = polygons[k];
    const std::string tag = "fixture " + std::to_string(k);
    fv::IntersectionRecord rec;
    for (const auto& r : fv::findIntersections(q))
      if (r.kind == fv::CrossingKind::SelfCross) rec = r;
    const Counts before = countsOf(q);

    // The two preparatory moves, each on its own.
    const auto [r1, r2] = fv::regionsOccupied(q, rec);
    if (r1 || r2) {
      if (!(countsOf(fv::bufferVertices(q, rec, false, k).polygon) == before)) bad.fail("buffer changed counts, " + tag);
    }
    if (!(countsOf(fv::insertMidpointVertex(q, (rec.i + 1) % q.size(), k)) == before)) {
      bad.fail("midpoint changed counts, " + tag);
    }

    const fv::EliminationResult e = fv::eliminateCrossing(q, rec, false, k);
    buffered += e.bufferInserted > 0;
    midpoints += e.midpointsInserted > 0;
    if (!(countsOf(e.prepared) == before)) bad.fail("preparation changed counts, " + tag);
    const Counts after = countsOf(e.surgery.output);
    if (after.dplus != before.dplus - 1) bad.fail("D+ not decreased by one, " + tag);
    if (e.surgery.gammaObserved < 0) bad.fail("2 + I - I' < 0, " + tag);
    if (2 * e.surgery.gammaObserved < fv::twoGamma(fv::localFrame(e.prepared, e.surgery.removed))) {
      bad.fail("observed budget below the frame bound, " + tag);
    }
    ++gammaHistogram[e.surgery.gammaObserved];
  }
  std::ostringstream os;
  os << polygons.size() << " fixtures (" << buffered << " buffered, " << midpoints
     << " with midpoints), 2+I-I' histogram {";
  for (const auto& [g, c] : gammaHistogram) os << " " << g << ":" << c;
  os << " }, " << bad.failures() << " violations";
  return {bad.failures() == 0 && polygons.size() == 200, os.str()};
}

// 9 ------------------------------------------------------------------------

Outcome parityAndSymmetry() {
  Ledger bad;
  for (std::size_t t = 0; t < 10'000; ++t) {
    const std::size_t n = 4 + t % 9;
    const auto g = fv::generate({fv::Family::Uniform, n, fv::trialSeed(9, t), 100000});
    const auto& q = std::get<fv::SphericalPolygon>(g.polygon);
    const int i = fv::countInflections(q);
    if (i % 2 != 0) bad.fail("odd I, trial " + std::to_string(t));
    if (fv::countInflections(q.reflected()) != i) bad.fail("I(Q) != I(-Q), trial " + std::to_string(t));
  }
  for (std::size_t t = 0; t < 1000; ++t) {
    const std::size_t n = 4 + t % 9;
    const auto g = fv::generate({fv::Family::SpacePolygon, n, fv::trialSeed(19, t), 100000});
    const auto& p = std::get<fv::SpacePolygon>(g.polygon);
    if (fv::countFlatteningsDirect(p) != fv::countInflections(fv::tangentIndicatrix(p))) {
      bad.fail("F != I(indicatrix), trial " + std::to_string(t));
    }
  }
  std::ostringstream os;
  os << "10000 spherical and 1000 space polygons, " << bad.failures() << " violations";
  return {bad.failures() == 0, os.str()};
}

}  // namespace

int main() {
  int failed = 0;
  auto report = [&](int id, const std::string& title, const std::function<Outcome()>& run) {
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::printf("%s criterion %d (%s): %s\n", o.pass ? "PASS" : "FAIL", id, title.c_str(), o.summary.c_str());
    std::fflush(stdout);
    failed += o.pass ? 0 : 1;
  };

  report(1, "predicate equivalence", predicateEquivalence);
  report(2, "intersection oracle", intersectionOracle);
  Campaigns campaigns;
  report(3, "theorem campaigns", [&] {
    campaigns = runCampaigns();
    return theoremCampaigns(campaigns);
  });
  report(4, "counting lemmas", [&] { return countingLemmas(campaigns); });
  report(5, "deletion monotonicity", [&] { return deletionMonotonicity(campaigns); });
  report(6, "removable vertex", removableVertex);
  report(7, "gamma table", gammaTableCriterion);
  report(8, "surgery end-to-end", surgeryEndToEnd);
  report(9, "parity and symmetry", parityAndSymmetry);
  return failed == 0 ? 0 : 1;
}
