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

#include "toric/classifier.hpp"

#include <json.hpp>

namespace toric {

const char* to_string(SpaceKind k) {
  switch (k) {
    case SpaceKind::Manifold: return "manifold";
    case SpaceKind::Cone: return "cone";
    case SpaceKind::Contact: return "contact";
    case SpaceKind::Stratified: return "stratified";
  }
  return "?";
}

SpaceKind parse_space_kind(const std::string& s) {
  if (s == "manifold") return SpaceKind::Manifold;
  if (s == "cone") return SpaceKind::Cone;
  if (s == "contact") return SpaceKind::Contact;
  if (s == "stratified") return SpaceKind::Stratified;
  fail(ErrorCode::InvalidArgument, "unknown kind '" + s + "' (expected manifold, cone, contact or stratified)");
}

namespace {

std::string vec_string(const RationalVector& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + toric::to_string(v[i]);
  return out + ")";
}

void validate_cones(const OrbitSpaceSpec& spec, ClassificationResult& r) {
  if (spec.cones.empty()) {
    r.unchecked_hypotheses.push_back("local cones are homogeneous (no cone data supplied)");
    return;
  }
  for (std::size_t i = 0; i < spec.cones.size(); ++i) {
    const UnimodularCone& c = spec.cones[i];
    if (c.dim() != spec.torus_rank) {
      fail(ErrorCode::ValidationFailed, "cone " + std::to_string(i) + " lives in dimension " +
                                            std::to_string(c.dim()) + ", torus rank is " +
                                            std::to_string(spec.torus_rank));
    }
    if (!is_homogeneous_cone(c)) {
      fail(ErrorCode::ValidationFailed,
           "cone " + std::to_string(i) + " with apex " + vec_string(c.apex()) +
               " is not homogeneous: the apex must be nonzero and annihilated by every normal");
    }
  }
  r.notes.push_back(std::to_string(spec.cones.size()) + " local cone(s) homogeneous");
}

// Returns true when the polytope passes the compact stratified checks.
bool validate_polytope(const OrbitSpaceSpec& spec, ClassificationResult& r) {
  if (!spec.polytope) {
    r.unchecked_hypotheses.push_back("image vertices are smooth or good singular points (no polytope supplied)");
    return false;
  }
  const RationalPolytope& p = *spec.polytope;
  if (p.dim() != spec.torus_rank) {
    fail(ErrorCode::ValidationFailed, "polytope dimension " + std::to_string(p.dim()) + " differs from torus rank " +
                                          std::to_string(spec.torus_rank));
  }
  const SimplicityReport simple = simplicity_report(p);
  if (!simple.simple_except_at_vertices) {
    fail(ErrorCode::ValidationFailed, "polytope is not simple away from its vertices");
  }
  for (const auto& v : p.vertices()) {
    const VertexReport vr = classify_vertex(p, v);
    if (vr.verdict == VertexVerdict::Reject) {
      std::string why = vr.local_cone.failing.empty()
                            ? "local cone fails the good-cone condition"
                            : "face with active normals";
      if (!vr.local_cone.failing.empty()) {
        const FaceAudit& f = vr.local_cone.failing.front();
        for (auto i : f.subset) why += " " + std::to_string(vr.active_facets[i]);
        why += " is not unimodular";
      }
      fail(ErrorCode::ValidationFailed, "vertex " + vec_string(v) + " rejected: " + why);
    }
  }
  r.notes.push_back("polytope simple away from vertices; every vertex smooth or a good singular cone");
  return true;
}

}  // namespace

ClassificationResult classify(const OrbitSpaceSpec& spec) {
  if (spec.torus_rank == 0) fail(ErrorCode::InvalidArgument, "torus rank must be at least 1");
  ClassificationResult r;
  r.kind = spec.kind;
  r.theorem_tag = to_string(spec.kind);
  r.unchecked_hypotheses.push_back("the orbital moment map is a unimodular local embedding");
  r.unchecked_hypotheses.push_back("the simplicial model has the homotopy type of the orbit space");

  switch (spec.kind) {
    case SpaceKind::Manifold:
    case SpaceKind::Cone:
    case SpaceKind::Contact: {
      if (!spec.model_W) {
        fail(ErrorCode::InvalidArgument, std::string("kind ") + to_string(spec.kind) + " requires model_W");
      }
      r.lattice_part = cohomology_lattice(*spec.model_W, 2, spec.torus_rank);
      if (spec.kind == SpaceKind::Manifold) {
        r.real_part_dim = cohomology_rational(*spec.model_W, 2);
      } else {
        validate_cones(spec, r);
        if (spec.kind == SpaceKind::Contact && spec.torus_rank == 2 && spec.free_action) {
          r.notes.push_back(
              "out of scope: 3-dimensional contact manifolds with a free torus action carry extra "
              "classifying parameters that are not computed");
        }
      }
      break;
    }
    case SpaceKind::Stratified: {
      if (!spec.model_regW) fail(ErrorCode::InvalidArgument, "kind stratified requires model_regW");
      const PairInclusion wbar = spec.model_Wbar ? *spec.model_Wbar : PairInclusion::empty(*spec.model_regW);
      r.lattice_part = cohomology_lattice(*spec.model_regW, 2, spec.torus_rank);
      r.real_part_dim = good_form_subspace_dim(*spec.model_regW, wbar).dim();
      const bool polytope_ok = validate_polytope(spec, r);
      if (polytope_ok && r.lattice_part.is_trivial() && r.real_part_dim == 0) r.theorem_tag = "compact-polytope";
      break;
    }
  }
  r.is_unique = r.lattice_part.is_trivial() && r.real_part_dim == 0;
  return r;
}

std::string summary(const ClassificationResult& r) {
  if (r.is_unique) return "unique";
  std::vector<std::string> parts;
  if (!r.lattice_part.is_trivial()) parts.push_back(r.lattice_part.to_string());
  if (r.real_part_dim > 0) parts.push_back("R^" + std::to_string(r.real_part_dim));
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? " × " : "") + parts[i];
  return out;
}

std::string render_text(const ClassificationResult& r) {
  std::string out = summary(r) + " (Theorem: " + r.theorem_tag + ")\n";
  out += "  isomorphism classes over the given orbital moment map; no representative is constructed\n";
  for (const auto& n : r.notes) out += "  note: " + n + "\n";
  for (const auto& h : r.unchecked_hypotheses) out += "  unchecked: " + h + "\n";
  return out;
}

std::string render_json(const ClassificationResult& r) {
  nlohmann::ordered_json j;
  j["theorem"] = r.theorem_tag;
  j["kind"] = to_string(r.kind);
  nlohmann::ordered_json torsion = nlohmann::ordered_json::array();
  for (const auto& d : r.lattice_part.invariant_factors) torsion.push_back(d.get_str());
  j["lattice"] = {{"free_rank", r.lattice_part.free_rank}, {"torsion", torsion}};
  j["real_dim"] = r.real_part_dim;
  j["unique"] = r.is_unique;
  j["unchecked_hypotheses"] = r.unchecked_hypotheses;
  j["notes"] = r.notes;
  j["summary"] = summary(r);
  return j.dump();
}

ClassificationResult result_from_json(const std::string& text) {
  ClassificationResult r;
  try {
    const auto j = nlohmann::json::parse(text);
    r.theorem_tag = j.at("theorem").get<std::string>();
    r.kind = parse_space_kind(j.at("kind").get<std::string>());
    r.lattice_part.free_rank = j.at("lattice").at("free_rank").get<std::size_t>();
    for (const auto& d : j.at("lattice").at("torsion")) r.lattice_part.invariant_factors.push_back(parse_integer(d.get<std::string>()));
    r.real_part_dim = j.at("real_dim").get<std::size_t>();
    r.is_unique = j.at("unique").get<bool>();
    r.unchecked_hypotheses = j.at("unchecked_hypotheses").get<std::vector<std::string>>();
    r.notes = j.at("notes").get<std::vector<std::string>>();
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::Parse, std::string("classification report: ") + e.what());
  } catch (const Error& e) {
    fail(ErrorCode::Parse, std::string("classification report: ") + e.what());
  }
  if (r.is_unique != (r.lattice_part.is_trivial() && r.real_part_dim == 0)) {
    fail(ErrorCode::Parse, "classification report: 'unique' disagrees with the lattice and real parts");
  }
  return r;
}

}  // namespace toric
