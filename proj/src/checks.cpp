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
#include <sstream>

#include "fourvertex/harness.h"

namespace fourvertex {

namespace {

constexpr std::array<std::pair<CheckId, std::string_view>, 10> kCheckNames{{
    {CheckId::Segre4, "SEGRE4"},
    {CheckId::Mobius6, "MOBIUS6"},
    {CheckId::Special6, "SPECIAL6"},
    {CheckId::GenD6, "GEN_D6"},
    {CheckId::GenDplus4, "GEN_DPLUS4"},
    {CheckId::GenSym6, "GEN_SYM6"},
    {CheckId::SpaceTF6, "SPACE_TF6"},
    {CheckId::SpaceTF4, "SPACE_TF4"},
    {CheckId::CountLemmas, "COUNT_LEMMAS"},
    {CheckId::MonotoneDelete, "MONOTONE_DELETE"},
}};

TheoremCheck makeCheck(CheckId id, bool hypothesis, long lhs, long rhs, std::string detail) {
  return {id, hypothesis, lhs, rhs, !hypothesis || lhs >= rhs, std::move(detail)};
}

// Everything the spherical checks read, computed once.
struct Facts {
  std::size_t n = 0;
  int inflections = 0;
  CrossingCounts crossings;
  bool balanced = false;
  bool symmetric = false;
  bool antipodalVertices = false;  // some pair u_i = -u_j
  bool simple() const { return crossings.dplus == 0; }
  // Q and -Q disjoint. A shared vertex rules this out even when no
  // transversal antipodal crossing is recorded.
  bool antipodalFree() const { return crossings.total() == 0 && !antipodalVertices; }
};

Facts gatherFacts(const SphericalPolygon& q, double tol) {
  Facts f;
  f.n = q.size();
  f.inflections = countInflections(q, tol);
  f.crossings = countCrossings(findIntersections(q, tol));
  f.balanced = isBalanced(q.vertices(), tol);
  f.symmetric = isSymmetric(q);
  for (std::size_t i = 0; i < f.n && !f.antipodalVertices; ++i) {
    for (std::size_t j = i + 1; j < f.n; ++j) {
      if (areAntipodal(q[static_cast<std::ptrdiff_t>(i)], q[static_cast<std::ptrdiff_t>(j)])) {
        f.antipodalVertices = true;
        break;
      }
    }
  }
  return f;
}

void appendCountLemmas(const SphericalPolygon& q, const Facts& f, double tol,
                       std::vector<TheoremCheck>& out) {
  const auto classes = classifyVertices(q, tol);
  long essential = 0, good = 0, excellent = 0;
  for (const auto& c : classes) {
    essential += c.essential ? 1 : 0;
    good += c.good ? 1 : 0;
    excellent += c.excellent ? 1 : 0;
  }
  const long n = static_cast<long>(f.n);
  // An antipodal pair puts Q - u_i on a closed hemisphere boundary, outside
  // the general position this bound needs.
  out.push_back(makeCheck(CheckId::CountLemmas, f.balanced && f.n >= 5 && !f.antipodalVertices,
                          n - essential, n - 3,
                          "nonessential>=n-3"));
  out.push_back(makeCheck(CheckId::CountLemmas, f.balanced && f.simple(), good, 4, "good>=4"));
  out.push_back(makeCheck(CheckId::CountLemmas, f.balanced && f.antipodalFree(), excellent, 2,
                          "excellent>=2"));
  out.push_back(makeCheck(CheckId::CountLemmas, !f.balanced && f.simple() && f.n >= 4, good, 3,
                          "hemisphere_good>=3"));
}

TheoremCheck monotoneDelete(const SphericalPolygon& q, const Facts& f, double tol) {
  if (!f.simple() || f.n < 5) return makeCheck(CheckId::MonotoneDelete, false, f.inflections, 0, "");
  const auto classes = classifyVertices(q, tol);
  long worst = 0;
  int skipped = 0;
  for (std::size_t i = 0; i < f.n; ++i) {
    if (!classes[i].good) continue;
    try {
      worst = std::max<long>(worst, countInflections(deleteVertex(q, i), tol));
    } catch (const GeometryError&) {
      ++skipped;  // the deletion creates a coplanar consecutive triple
    }
  }
  std::string detail = "I(Q)>=max I(Q-u) over good u";
  if (skipped > 0) detail += "; " + std::to_string(skipped) + " degenerate deletions skipped";
  return makeCheck(CheckId::MonotoneDelete, true, f.inflections, worst, detail);
}

}  // namespace

std::string_view checkName(CheckId id) {
  for (const auto& [c, name] : kCheckNames) {
    if (c == id) return name;
  }
  return "UNKNOWN";
}

std::optional<CheckId> parseCheck(std::string_view name) {
  for (const auto& [c, n] : kCheckNames) {
    if (n == name) return c;
  }
  return std::nullopt;
}

std::vector<CheckId> allChecks() {
  std::vector<CheckId> out;
  for (const auto& [c, name] : kCheckNames) out.push_back(c);
  return out;
}

std::vector<TheoremCheck> runChecks(const SphericalPolygon& q, const std::vector<CheckId>& which,
                                    double tol) {
  const Facts f = gatherFacts(q, tol);
  const long i = f.inflections;
  const long dplus = f.crossings.dplus;
  const long d = f.crossings.total();
  std::vector<TheoremCheck> out;
  for (CheckId id : which) {
    switch (id) {
      case CheckId::Segre4:
        out.push_back(makeCheck(id, f.balanced && f.simple() && f.n >= 4, i, 4, "I>=4"));
        break;
      case CheckId::Mobius6:
        out.push_back(makeCheck(id, f.balanced && f.simple() && f.symmetric && f.n >= 6, i, 6, "I>=6"));
        break;
      case CheckId::Special6:
        out.push_back(makeCheck(id, f.balanced && f.antipodalFree() && f.n >= 6, i, 6, "I>=6"));
        break;
      case CheckId::GenD6:
        out.push_back(makeCheck(id, f.balanced && f.n >= 6, 2 * d + i, 6, "2D+I>=6"));
        break;
      case CheckId::GenDplus4:
        out.push_back(makeCheck(id, f.balanced && f.n >= 4, 2 * dplus + i, 4, "2D+ + I>=4"));
        break;
      case CheckId::GenSym6:
        out.push_back(makeCheck(id, f.symmetric && f.balanced && f.n >= 6, 2 * dplus + i, 6, "2D+ + I>=6"));
        break;
      case CheckId::SpaceTF6:
      case CheckId::SpaceTF4:
        out.push_back(makeCheck(id, false, 0, 0, "needs a space polygon"));
        break;
      case CheckId::CountLemmas:
        appendCountLemmas(q, f, tol, out);
        break;
      case CheckId::MonotoneDelete:
        out.push_back(monotoneDelete(q, f, tol));
        break;
    }
  }
  return out;
}

std::vector<TheoremCheck> runChecks(const SpacePolygon& p, const std::vector<CheckId>& which,
                                    double tol) {
  std::vector<CheckId> spherical;
  std::vector<TheoremCheck> out;
  const bool wantsSpace = std::any_of(which.begin(), which.end(), [](CheckId id) {
    return id == CheckId::SpaceTF6 || id == CheckId::SpaceTF4;
  });
  SpaceAnalysis a;
  if (wantsSpace) a = analyzeSpacePolygon(p, tol);
  const bool hyp = p.size() >= 6;
  for (CheckId id : which) {
    if (id == CheckId::SpaceTF6) {
      out.push_back(makeCheck(id, hyp, 2L * a.t() + a.flattenings, 6, "2T+F>=6"));
    } else if (id == CheckId::SpaceTF4) {
      out.push_back(makeCheck(id, hyp, 2L * a.tplus + a.flattenings, 4, "2T+ + F>=4"));
    } else {
      spherical.push_back(id);
    }
  }
  if (!spherical.empty()) {
    auto rest = runChecks(tangentIndicatrix(p), spherical, tol);
    out.insert(out.end(), rest.begin(), rest.end());
  }
  return out;
}

std::vector<TheoremCheck> runChecks(const AnyPolygon& polygon, const std::vector<CheckId>& which,
                                    double tol) {
  return std::visit([&](const auto& p) { return runChecks(p, which, tol); }, polygon);
}

}  // namespace fourvertex
