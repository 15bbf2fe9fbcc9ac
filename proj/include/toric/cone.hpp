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

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "toric/lattice.hpp"
#include "toric/numeric.hpp"

namespace toric {

/// { eta : <eta - apex, v_i> >= 0 for all i } where {v_i} is a unimodular
/// tuple. Construction rejects anything else.
class UnimodularCone {
 public:
  UnimodularCone(RationalVector apex, std::vector<IntegerVector> normals);

  std::size_t dim() const noexcept { return apex_.size(); }
  const RationalVector& apex() const noexcept { return apex_; }
  const std::vector<IntegerVector>& normals() const noexcept { return normals_; }

 private:
  RationalVector apex_;
  std::vector<IntegerVector> normals_;
};

bool cone_contains(const UnimodularCone& cone, const RationalVector& eta);

struct FaceData {
  std::vector<std::size_t> active_indices;     // i with <eta - apex, v_i> == 0
  std::vector<IntegerVector> subtorus_basis;   // the matching normals
};

/// Throws InvalidArgument when eta lies outside the cone.
FaceData face_data(const UnimodularCone& cone, const RationalVector& eta);

/// Apex nonzero and annihilated by every normal, so the cone is closed under
/// positive scaling and avoids the origin.
bool is_homogeneous_cone(const UnimodularCone& cone);

/// Product decomposition C = C' x k° of a unimodular cone, where k is the
/// span of the normals.
struct ConeSplit {
  std::size_t dim = 0;
  std::vector<IntegerVector> subalgebra_basis;     // the cone normals
  std::vector<IntegerVector> lattice_basis;        // Z-basis b_1..b_k of k ∩ Z^n
  std::vector<RationalVector> annihilator_basis;   // basis of k°
  std::vector<IntegerVector> complement;           // rows completing lattice_basis to a basis of Z^n
  std::vector<IntegerVector> section;              // s_j with <s_j, b_l> = δ_jl, <s_j, complement> = 0
  std::vector<IntegerVector> reduced_normals;      // v_i in coordinates of lattice_basis (k x k)
  RationalVector reduced_apex;                     // <apex, b_j>

  // eta -> coordinates in k* (pairings with the lattice basis)
  RationalVector project(const RationalVector& eta) const;
  // eta - section(project(eta)), an element of k°
  RationalVector annihilator_part(const RationalVector& eta) const;
  // section(xi) + a
  RationalVector reconstruct(const RationalVector& xi, const RationalVector& a) const;
  bool reduced_contains(const RationalVector& xi) const;
};

ConeSplit split_cone(const UnimodularCone& cone);

/// Polyhedral cone at the origin cut out by primitive normals; no
/// unimodularity is assumed.
class SimpleCone {
 public:
  SimpleCone(std::size_t dim, std::vector<IntegerVector> normals);

  std::size_t dim() const noexcept { return dim_; }
  const std::vector<IntegerVector>& normals() const noexcept { return normals_; }

 private:
  std::size_t dim_;
  std::vector<IntegerVector> normals_;
};

/// A point eta with <eta, v_i> = 0 for i in `subset` and > 0 for every other
/// normal, found by exact Fourier-Motzkin elimination. Empty when no face of
/// the cone has exactly `subset` as its active set.
std::optional<RationalVector> exact_active_witness(const std::vector<IntegerVector>& normals, std::size_t dim,
                                                   const std::vector<std::size_t>& subset);

struct FaceAudit {
  std::vector<std::size_t> subset;
  RationalVector witness;
  bool unimodular = false;
  std::vector<Integer> invariant_factors;
};

struct GoodConeReport {
  bool good = true;
  // The normal count differs from the dimension. The condition is usually
  // stated for exactly dim G normals; the audit runs either way.
  bool normal_count_differs_from_dim = false;
  std::vector<FaceAudit> faces;    // every face with 0 < |S| < n
  std::vector<FaceAudit> failing;  // faces whose normals are not unimodular
};

/// Lerman's good-cone condition: every face cut out by exactly the normals
/// S, 0 < |S| < n, has S a unimodular tuple. Requires n >= 2.
GoodConeReport is_good_cone(const SimpleCone& cone);

/// sqrt(radicand) with radicand >= 0, kept symbolic.
struct SqrtValue {
  Rational radicand;

  Rational square() const { return radicand; }
  bool is_rational() const;
  // Exact root when rational; throws otherwise.
  Rational rational_value() const;
  double approx() const;
  std::string to_string() const;  // "3/2" or "sqrt(2)"
};

/// z -> -sum |z_i|^2 w_i for weights w_i and z given as (re_1, im_1, ...).
RationalVector standard_rep_moment_map(const std::vector<IntegerVector>& weights, const RationalVector& z);
RationalVector standard_rep_moment_map(const std::vector<IntegerVector>& weights, const std::vector<SqrtValue>& z);

/// s(eta) = (sqrt(<-eta, v_1>), ..., sqrt(<-eta, v_k>)) where {v_i} is the
/// basis dual to the weights. Weights must form a basis of Q^k.
std::vector<SqrtValue> cut_section(const std::vector<IntegerVector>& weights, const RationalVector& eta);

/// The basis {v_i} dual to a square invertible weight system.
std::vector<RationalVector> dual_basis(const std::vector<IntegerVector>& weights);

}  // namespace toric
