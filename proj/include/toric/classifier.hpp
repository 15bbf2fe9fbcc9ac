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

// Classifying sets of toric moment data. The result is the set of
// isomorphism classes over a fixed orbital moment map, presented as
// H^2(W; Z_G) x R^d. No representative is constructed.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "toric/complex.hpp"
#include "toric/cone.hpp"
#include "toric/polytope.hpp"

namespace toric {

enum class SpaceKind { Manifold, Cone, Contact, Stratified };
const char* to_string(SpaceKind k);
SpaceKind parse_space_kind(const std::string& s);

struct OrbitSpaceSpec {
  SpaceKind kind = SpaceKind::Manifold;
  std::size_t torus_rank = 1;
  std::optional<SimplicialComplex> model_W;     // manifold, cone, contact
  std::optional<SimplicialComplex> model_regW;  // stratified
  std::optional<PairInclusion> model_Wbar;      // stratified; ambient must equal model_regW
  std::vector<UnimodularCone> cones;            // local models to validate
  std::optional<RationalPolytope> polytope;     // stratified image to validate
  bool free_action = false;                     // contact: the R-action on the link is free
};

struct ClassificationResult {
  SpaceKind kind = SpaceKind::Manifold;
  AbelianGroupPresentation lattice_part;
  std::size_t real_part_dim = 0;
  std::string theorem_tag;  // "manifold", "cone", "contact", "stratified", "compact-polytope"
  bool is_unique = true;
  std::vector<std::string> unchecked_hypotheses;
  std::vector<std::string> notes;  // checks that passed, out-of-scope remarks

  friend bool operator==(const ClassificationResult&, const ClassificationResult&) = default;
};

/// Throws InvalidArgument for a missing model and ValidationFailed when a
/// supplied cone or polytope payload violates the hypotheses of the kind.
ClassificationResult classify(const OrbitSpaceSpec& spec);

/// "unique", or the lattice and real parts joined by " × ", e.g. "Z^3 × R^1".
std::string summary(const ClassificationResult& r);
/// summary(r) followed by " (Theorem: <tag>)" and any notes.
std::string render_text(const ClassificationResult& r);
/// {"theorem", "kind", "lattice": {"free_rank", "torsion"}, "real_dim",
///  "unique", "unchecked_hypotheses", "notes", "summary"} as compact JSON.
std::string render_json(const ClassificationResult& r);
/// Inverse of render_json. Throws Parse on malformed input.
ClassificationResult result_from_json(const std::string& json);

}  // namespace toric
