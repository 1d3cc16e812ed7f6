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

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace fourvertex {

enum class ErrorCode {
  DegenerateTriple,
  DegenerateArc,
  NotBalanced,
  DegenerateEdge,
  AntipodalConsecutive,
  TooFewVertices,
  PerturbationFailed,
  VertexOnEdge,
  PreconditionViolated,
  RegionNotEmpty,
  ConsecutiveEndpoints,
  NumericalUnderflow,
  Balanced,
  NotSimple,
  AmbiguousInterior,
  EarNotFound,
  ConvexInput,
  RejectionBudgetExceeded,
  ParseError,
  IOError,
};

std::string_view errorCodeName(ErrorCode code);

/// Every failure raised by the library carries one of the codes above so that
/// callers (campaigns, the CLI) can tell precondition failures apart from
/// numerical degeneracy without string matching.
class GeometryError : public std::runtime_error {
 public:
  GeometryError(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(errorCodeName(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace fourvertex
