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

// Finite simplicial cohomology with Z, Q and Z^n coefficients, relative
// cohomology of an inclusion through the algebraic mapping cone, and the
// subspace of H^2 of classes that die on a marked subcomplex.
//
// Orientation: a simplex is its sorted vertex tuple; the i-th face (drop the
// i-th vertex) enters the boundary with sign (-1)^i.

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "toric/matrix.hpp"
#include "toric/numeric.hpp"

namespace toric {

using Simplex = std::vector<std::size_t>;

class SimplicialComplex {
 public:
  SimplicialComplex() = default;

  /// Every vertex 0..vertex_count-1 is a 0-simplex. `simplices` may list
  /// simplices of any dimension, vertices included; it must be closed under
  /// taking faces. Throws InvalidArgument otherwise.
  static SimplicialComplex from_simplices(std::size_t vertex_count, std::vector<Simplex> simplices);
  /// Downward closure of the given simplices.
  static SimplicialComplex from_facets(std::size_t vertex_count, const std::vector<Simplex>& facets);

  std::size_t vertex_count() const noexcept { return vertex_count_; }
  int dimension() const noexcept { return static_cast<int>(by_dim_.size()) - 1; }
  std::size_t count(int k) const;
  const std::vector<Simplex>& simplices(int k) const;
  std::optional<std::size_t> index_of(const Simplex& s) const;
  bool contains(const Simplex& s) const { return index_of(s).has_value(); }

  // ∂_k : C_k -> C_{k-1}, shape count(k-1) x count(k)
  IntegerMatrix boundary(int k) const;
  // δ^k : C^k -> C^{k+1}, shape count(k+1) x count(k)
  IntegerMatrix coboundary(int k) const;

  long euler_characteristic() const;

  friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
    return a.vertex_count_ == b.vertex_count_ && a.by_dim_ == b.by_dim_;
  }

 private:
  std::size_t vertex_count_ = 0;
  std::vector<std::vector<Simplex>> by_dim_;  // each level sorted
};

/// Injective simplicial map of a subcomplex into an ambient complex.
class PairInclusion {
 public:
  PairInclusion(SimplicialComplex ambient, SimplicialComplex sub, std::vector<std::size_t> vertex_map);

  /// The subcomplex generated by simplices written in ambient labels.
  static PairInclusion from_ambient_simplices(SimplicialComplex ambient, const std::vector<Simplex>& simplices);
  /// Closed star of the marked vertices: every simplex containing one of
  /// them, with all faces.
  static PairInclusion closed_star(SimplicialComplex ambient, const std::vector<std::size_t>& marked);
  static PairInclusion identity(SimplicialComplex ambient);
  static PairInclusion empty(SimplicialComplex ambient);

  const SimplicialComplex& ambient() const noexcept { return ambient_; }
  const SimplicialComplex& sub() const noexcept { return sub_; }
  const std::vector<std::size_t>& vertex_map() const noexcept { return vertex_map_; }

  // f^* : C^k(ambient) -> C^k(sub), shape sub.count(k) x ambient.count(k)
  IntegerMatrix restriction(int k) const;

 private:
  SimplicialComplex ambient_;
  SimplicialComplex sub_;
  std::vector<std::size_t> vertex_map_;
};

/// Z^free_rank ⊕ Z/d_1 ⊕ ... with d_1 | d_2 | ... and every d_i >= 2.
struct AbelianGroupPresentation {
  std::size_t free_rank = 0;
  std::vector<Integer> invariant_factors;

  bool is_trivial() const { return free_rank == 0 && invariant_factors.empty(); }
  // Direct sum of n copies (tensoring with Z^n).
  AbelianGroupPresentation power(std::size_t n) const;
  // "0", "Z", "Z^3", "Z/2 ⊕ Z/2", "Z ⊕ Z/2"
  std::string to_string() const;

  friend bool operator==(const AbelianGroupPresentation&, const AbelianGroupPresentation&) = default;
};

/// Cochain complex C^0 -> C^1 -> ... with integer differentials.
class CochainComplex {
 public:
  CochainComplex(std::vector<std::size_t> dims, std::vector<IntegerMatrix> differentials);

  static CochainComplex of(const SimplicialComplex& K);
  /// C^p = C^p(ambient) ⊕ C^{p-1}(sub) with d(α, β) = (δα, f^*α - δβ).
  static CochainComplex mapping_cone(const PairInclusion& pair);

  std::size_t dim(int p) const;
  // d^p : C^p -> C^{p+1} (zero matrix of the right shape outside the range)
  IntegerMatrix differential(int p) const;
  int top_degree() const noexcept { return static_cast<int>(dims_.size()) - 1; }

 private:
  std::vector<std::size_t> dims_;
  std::vector<IntegerMatrix> d_;
};

AbelianGroupPresentation integer_cohomology(const CochainComplex& C, int k);
std::size_t rational_cohomology_dim(const CochainComplex& C, int k);

AbelianGroupPresentation cohomology_integer(const SimplicialComplex& K, int k);
/// H^k(K; Z^n) = H^k(K; Z)^n.
AbelianGroupPresentation cohomology_lattice(const SimplicialComplex& K, int k, std::size_t n);
std::size_t cohomology_rational(const SimplicialComplex& K, int k);

struct RelativeCohomology {
  AbelianGroupPresentation integral;
  std::size_t rational_dim = 0;
};

RelativeCohomology relative_cohomology(const PairInclusion& pair, int k);

/// H^p over Q presented by cocycle representatives completing a basis of the
/// coboundaries to a basis of the cocycles.
class CohomologyBasis {
 public:
  CohomologyBasis(const CochainComplex& C, int p);
  CohomologyBasis(std::size_t cochain_dim, std::vector<RationalVector> boundaries,
                  std::vector<RationalVector> representatives);

  std::size_t dim() const noexcept { return representatives_.size(); }
  std::size_t cochain_dim() const noexcept { return cochain_dim_; }
  const std::vector<RationalVector>& representatives() const noexcept { return representatives_; }
  const std::vector<RationalVector>& boundaries() const noexcept { return boundaries_; }

  /// Coordinates of the class of `cocycle` in the representative basis.
  /// Throws InvalidArgument when the vector is not a cocycle.
  RationalVector coordinates(const RationalVector& cocycle) const;

 private:
  std::size_t cochain_dim_ = 0;
  std::vector<RationalVector> boundaries_;
  std::vector<RationalVector> representatives_;
  RationalMatrix frame_;  // columns: boundaries then representatives
};

/// Matrix (target.dim x source_reps.size) of the map on cohomology induced by
/// the cochain map F, evaluated on the given source representatives.
RationalMatrix induced_map(const RationalMatrix& F, const std::vector<RationalVector>& source_reps,
                           const CohomologyBasis& target);

/// f^* : H^p(ambient; Q) -> H^p(sub; Q).
RationalMatrix restriction_map(const PairInclusion& pair, int p);
RationalMatrix restriction_map_h2(const PairInclusion& pair);

struct LesNode {
  std::string label;  // "H^1(f)", "H^1(K)", "H^1(L)"
  std::size_t dim = 0;
  std::size_t rank_in = 0;
  std::size_t rank_out = 0;
  bool composition_zero = true;
  bool exact = true;
};

struct LesReport {
  bool exact = true;
  std::vector<LesNode> nodes;
};

/// Builds every map of
///   H^p(f) -> H^p(K) -f*-> H^p(L) -> H^{p+1}(f) -> ...
/// for p <= max_degree over Q and checks exactness at each node.
LesReport verify_long_exact_sequence(const PairInclusion& pair, int max_degree);

struct GoodFormReport {
  std::size_t h2_dim = 0;       // dim H^2(reg W; Q)
  std::size_t kernel_dim = 0;   // dim ker(H^2(reg W) -> H^2(W̄))
  std::size_t image_dim = 0;    // dim im(H^2(reg W, W̄) -> H^2(reg W))
  std::size_t dim() const { return kernel_dim; }
};

/// Dimension of the subspace of H^2(reg W; R) of classes exact on W̄,
/// computed both as a kernel and as an image; throws Internal if they differ.
GoodFormReport good_form_subspace_dim(const PairInclusion& wbar);
GoodFormReport good_form_subspace_dim(const SimplicialComplex& regW, const PairInclusion& wbar);

}  // namespace toric
