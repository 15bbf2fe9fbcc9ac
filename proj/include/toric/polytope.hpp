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
#include <vector>

#include "toric/cone.hpp"
#include "toric/numeric.hpp"

namespace toric {

inline constexpr std::size_t kMaxPolytopeDim = 4;
inline constexpr std::size_t kMaxFacets = 16;
inline constexpr std::size_t kMaxPoints = 32;

/// Half-space { x : <x, normal> >= offset } with a primitive inward normal.
struct Facet {
  IntegerVector normal;
  Rational offset;

  friend bool operator==(const Facet&, const Facet&) = default;
};

/// Bounded full-dimensional rational polytope carrying both descriptions.
/// Only the normalize_* factories construct one, so both are always present
/// and agree.
class RationalPolytope {
 public:
  std::size_t dim() const noexcept { return dim_; }
  const std::vector<Facet>& facets() const noexcept { return facets_; }
  const std::vector<RationalVector>& vertices() const noexcept { return vertices_; }

  // Indices of facets through vertex v.
  std::vector<std::size_t> active_facets(std::size_t vertex) const;
  // Indices of vertices on facet f.
  std::vector<std::size_t> facet_vertices(std::size_t facet) const;
  // Index of `point` among the vertices, or vertices().size().
  std::size_t find_vertex(const RationalVector& point) const;

  // Re-derives each description from the other and checks incidence counts.
  // Throws Internal on any disagreement.
  void validate() const;

 private:
  friend RationalPolytope normalize_from_vertices(std::size_t, const std::vector<RationalVector>&);
  friend RationalPolytope normalize_from_facets(std::size_t, const std::vector<Facet>&);

  std::size_t dim_ = 0;
  std::vector<Facet> facets_;
  std::vector<RationalVector> vertices_;
};

/// Convex hull of the points. Facets are found by exhaustive hyperplane
/// search over n-subsets of points.
RationalPolytope normalize_from_vertices(std::size_t dim, const std::vector<RationalVector>& points);

/// Intersection of half-spaces. Vertices are found by solving every n-subset
/// of facet equations. Redundant half-spaces are dropped; unbounded or
/// lower-dimensional input is rejected.
RationalPolytope normalize_from_facets(std::size_t dim, const std::vector<Facet>& facets);

/// Vertices of { x : <x, a_i> >= b_i } by brute force; assumes boundedness.
std::vector<RationalVector> enumerate_vertices(std::size_t dim, const std::vector<Facet>& halfspaces);

struct Face {
  int dim = -1;                        // -1 for the empty face
  std::vector<std::size_t> facets;     // active facet indices
  std::vector<std::size_t> vertices;   // incident vertex indices
};

struct FaceLattice {
  std::size_t polytope_dim = 0;
  std::vector<Face> faces;  // sorted by decreasing dimension, then vertex set

  std::vector<const Face*> of_dim(int d) const;
  std::vector<std::size_t> f_vector() const;  // counts for dims 0..n-1
  // sum over proper nonempty faces of (-1)^dim, and the value 1 - (-1)^n it
  // must equal
  long euler_sum() const;
  long euler_expected() const;
};

FaceLattice face_lattice(const RationalPolytope& p);

struct FaceSimplicity {
  Face face;
  std::size_t codim = 0;
  bool simple = true;
};

struct SimplicityReport {
  bool simple_everywhere = true;
  bool simple_except_at_vertices = true;
  std::vector<FaceSimplicity> faces;       // every proper nonempty face
  std::vector<FaceSimplicity> non_simple;
  // Active normals unimodular at every non-vertex face. Not part of the
  // simplicity condition, but required for the polytope to be a manifold
  // with corners away from its vertices.
  bool unimodular_away_from_vertices = true;
};

SimplicityReport simplicity_report(const RationalPolytope& p);

struct DelzantReport {
  bool delzant = true;
  std::vector<std::size_t> failing_vertices;
};

DelzantReport is_delzant(const RationalPolytope& p);

enum class VertexVerdict { Smooth, SingularCandidate, Reject };
const char* to_string(VertexVerdict v);

struct VertexReport {
  VertexVerdict verdict = VertexVerdict::Reject;
  std::size_t vertex = 0;
  std::vector<std::size_t> active_facets;
  bool simple = false;
  bool unimodular = false;
  GoodConeReport local_cone;  // populated unless the vertex is Smooth
};

/// Throws InvalidArgument when `vertex` is not a vertex of p.
VertexReport classify_vertex(const RationalPolytope& p, const RationalVector& vertex);

}  // namespace toric
