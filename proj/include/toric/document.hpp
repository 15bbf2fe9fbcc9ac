// Copyright 2026 The toric-classify Authors
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

// Input documents and command dispatch. See docs/schema.md for the format.

#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "toric/classifier.hpp"
#include "toric/complex.hpp"
#include "toric/error.hpp"
#include "toric/matrix.hpp"
#include "toric/polytope.hpp"

namespace toric {

inline constexpr int kSchemaVersion = 1;

enum class PayloadKind { Matrix, Tuple, Cone, GoodCone, Polytope, Complex, Pair, Classification };
const char* to_string(PayloadKind k);

// Exit codes shared by the library runner and the CLI.
inline constexpr int kExitOk = 0;
inline constexpr int kExitNegative = 1;
inline constexpr int kExitInvalid = 2;
inline constexpr int kExitInternal = 3;

int exit_code_for(ErrorCode code);

struct RunOptions {
  std::string command;                 // snf | check | cohomology | relative | classify
  std::string target;                  // check: unimodular | cone | good-cone | polytope
  std::optional<int> degree;           // cohomology, relative
  std::string coeff = "Z";             // Z | Q | lattice:n
  std::string property;                // check cone: unimodular | homogeneous
                                       // check polytope: delzant | bgl | simple
};

struct Report {
  int exit_code = kExitOk;
  std::string text;  // human report, newline terminated
  std::string json;  // machine report, one line
};

/// Runs one command on one document. Never throws: every failure becomes a
/// report with exit code 2 (invalid input) or 3 (internal error).
Report run_document(const RunOptions& options, std::string_view source, const std::string& source_name);

// Loaders used by run_document, exposed for tests. Each parses a whole
// document, requires the matching payload and throws Error on failure.
PayloadKind document_kind(std::string_view source);
IntegerMatrix load_matrix(std::string_view source);
SimplicialComplex load_complex(std::string_view source);
PairInclusion load_pair(std::string_view source);
RationalPolytope load_polytope(std::string_view source);
OrbitSpaceSpec load_classification(std::string_view source);

}  // namespace toric
