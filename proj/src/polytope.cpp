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

#include "toric/polytope.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "toric/matrix.hpp"

namespace toric {

namespace {

// Calls fn(indices) for every k-subset of {0..m-1} in lexicographic order.
void for_each_subset(std::size_t m, std::size_t k, const std::function<void(const std::vector<std::size_t>&)>& fn) {
  if (k > m) return;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  for (;;) {
    fn(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == m - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

std::size_t affine_rank(const std::vector<RationalVector>& points, const std::vector<std::size_t>& which,
                        std::size_t dim) {
  if (which.size() <= 1) return 0;
  RationalMatrix diffs(which.size() - 1, dim);
  const RationalVector& base = points[which.front()];
  for (std::size_t i = 1; i < which.size(); ++i)
    for (std::size_t c = 0; c < dim; ++c) diffs(i - 1, c) = points[which[i]][c] - base[c];
  return rank(diffs);
}

std::vector<std::size_t> all_indices(std::size_t m) {
  std::vector<std::size_t> v(m);
  for (std::size_t i = 0; i < m; ++i) v[i] = i;
  return v;
}

void check_dim(std::size_t dim) {
  if (dim == 0 || dim > kMaxPolytopeDim) {
    fail(ErrorCode::InvalidArgument,
         "polytope dimension must be between 1 and " + std::to_string(kMaxPolytopeDim));
  }
}

// Scales a rational normal to a primitive integer one (same direction).
IntegerVector primitive_direction(const RationalVector& a) {
  Integer den = 1;
  for (const auto& x : a) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den_mpz_t());
  IntegerVector v;
  for (const auto& x : a) {
    Rational s = x * den;
    v.push_back(s.get_num());
  }
  return primitive_part(v);
}

Facet normalized_facet(const Facet& f, std::size_t dim) {
  if (f.normal.size() != dim) fail(ErrorCode::DimensionMismatch, "facet normal has the wrong length");
  const Integer g = content(f.normal);
  if (g == 0) fail(ErrorCode::InvalidArgument, "facet with zero normal");
  Facet out{primitive_part(f.normal), f.offset / Rational(g)};
  out.offset.canonicalize();
  return out;
}

bool satisfies(const Facet& f, const RationalVector& x) { return dot(x, f.normal) >= f.offset; }
bool on(const Facet& f, const RationalVector& x) { return dot(x, f.normal) == f.offset; }

}  // namespace

std::vector<RationalVector> enumerate_vertices(std::size_t dim, const std::vector<Facet>& halfspaces) {
  std::set<RationalVector> found;
  for_each_subset(halfspaces.size(), dim, [&](const std::vector<std::size_t>& idx) {
    RationalMatrix A(dim, dim);
    RationalVector b(dim);
    for (std::size_t r = 0; r < dim; ++r) {
      for (std::size_t c = 0; c < dim; ++c) A(r, c) = halfspaces[idx[r]].normal[c];
      b[r] = halfspaces[idx[r]].offset;
    }
    if (rank(A) < dim) return;
    RationalVector x;
    solve(A, b, x);
    for (const auto& h : halfspaces)
      if (!satisfies(h, x)) return;
    found.insert(std::move(x));
  });
  return {found.begin(), found.end()};
}

std::vector<std::size_t> RationalPolytope::active_facets(std::size_t vertex) const {
  std::vector<std::size_t> out;
  for (std::size_t f = 0; f < facets_.size(); ++f)
    if (on(facets_[f], vertices_.at(vertex))) out.push_back(f);
  return out;
}

std::vector<std::size_t> RationalPolytope::facet_vertices(std::size_t facet) const {
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < vertices_.size(); ++v)
    if (on(facets_.at(facet), vertices_[v])) out.push_back(v);
  return out;
}

std::size_t RationalPolytope::find_vertex(const RationalVector& point) const {
  const auto it = std::find(vertices_.begin(), vertices_.end(), point);
  return static_cast<std::size_t>(it - vertices_.begin());
}

void RationalPolytope::validate() const {
  for (const auto& v : vertices_)
    for (const auto& f : facets_)
      if (!satisfies(f, v)) fail(ErrorCode::Internal, "vertex violates a facet inequality");
  for (std::size_t f = 0; f < facets_.size(); ++f) {
    if (!is_primitive(facets_[f].normal)) fail(ErrorCode::Internal, "facet normal not primitive");
    const auto vs = facet_vertices(f);
    if (vs.size() < dim_ || affine_rank(vertices_, vs, dim_) + 1 != dim_) {
      fail(ErrorCode::Internal, "facet does not span a hyperplane");
    }
  }
  for (std::size_t v = 0; v < vertices_.size(); ++v)
    if (active_facets(v).size() < dim_) fail(ErrorCode::Internal, "vertex lies on fewer than n facets");
  const auto recomputed = enumerate_vertices(dim_, facets_);
  if (std::set<RationalVector>(recomputed.begin(), recomputed.end()) !=
      std::set<RationalVector>(vertices_.begin(), vertices_.end())) {
    fail(ErrorCode::Internal, "H- and V-descriptions disagree");
  }
}

RationalPolytope normalize_from_vertices(std::size_t dim, const std::vector<RationalVector>& points_in) {
  check_dim(dim);
  if (points_in.empty()) fail(ErrorCode::Degenerate, "polytope with no points");
  if (points_in.size() > kMaxPoints) fail(ErrorCode::InvalidArgument, "too many points for exhaustive search");
  for (const auto& p : points_in)
    if (p.size() != dim) fail(ErrorCode::DimensionMismatch, "point has the wrong number of coordinates");
  const std::set<RationalVector> unique(points_in.begin(), points_in.end());
  const std::vector<RationalVector> points(unique.begin(), unique.end());
  if (affine_rank(points, all_indices(points.size()), dim) != dim) {
    fail(ErrorCode::Degenerate, "points do not span a full-dimensional polytope");
  }

  std::set<std::pair<IntegerVector, Rational>> seen;
  std::vector<Facet> facets;
  for_each_subset(points.size(), dim, [&](const std::vector<std::size_t>& idx) {
    RationalMatrix diffs(dim - 1, dim);
    for (std::size_t i = 1; i < dim; ++i)
      for (std::size_t c = 0; c < dim; ++c) diffs(i - 1, c) = points[idx[i]][c] - points[idx[0]][c];
    const auto ns = nullspace(diffs);
    if (ns.size() != 1) return;
    IntegerVector a = primitive_direction(ns.front());
    Rational b = dot(points[idx[0]], a);
    bool above = false, below = false;
    for (const auto& p : points) {
      const Rational s = dot(p, a);
      if (s > b) above = true;
      if (s < b) below = true;
    }
    if (above && below) return;
    if (below) {
      for (auto& x : a) x = -x;
      b = -b;
    }
    if (seen.insert({a, b}).second) facets.push_back(Facet{std::move(a), std::move(b)});
  });
  if (facets.size() > kMaxFacets) fail(ErrorCode::InvalidArgument, "more facets than the exhaustive limit");

  RationalPolytope p;
  p.dim_ = dim;
  p.facets_ = std::move(facets);
  p.vertices_ = enumerate_vertices(dim, p.facets_);
  p.validate();
  return p;
}

RationalPolytope normalize_from_facets(std::size_t dim, const std::vector<Facet>& input) {
  check_dim(dim);
  if (input.empty()) fail(ErrorCode::Unbounded, "no facets given");
  if (input.size() > kMaxFacets) fail(ErrorCode::InvalidArgument, "more facets than the exhaustive limit");
  std::vector<Facet> facets;
  for (const auto& f : input) facets.push_back(normalized_facet(f, dim));

  // Bounded iff the recession cone {x : <x, a_i> >= 0} is {0}, i.e. its
  // intersection with the unit box has no vertex other than 0.
  std::vector<Facet> recession;
  for (const auto& f : facets) recession.push_back(Facet{f.normal, Rational(0)});
  for (std::size_t c = 0; c < dim; ++c) {
    IntegerVector e(dim, Integer(0));
    e[c] = 1;
    recession.push_back(Facet{e, Rational(-1)});
    e[c] = -1;
    recession.push_back(Facet{e, Rational(-1)});
  }
  for (const auto& v : enumerate_vertices(dim, recession))
    if (!is_zero(v)) fail(ErrorCode::Unbounded, "half-spaces do not bound a polytope");

  std::vector<RationalVector> vertices = enumerate_vertices(dim, facets);
  if (vertices.empty()) fail(ErrorCode::Degenerate, "half-spaces have empty intersection");
  if (affine_rank(vertices, all_indices(vertices.size()), dim) != dim) {
    fail(ErrorCode::Degenerate, "half-spaces cut out a lower-dimensional set");
  }

  std::vector<Facet> kept;
  for (const auto& f : facets) {
    if (std::find(kept.begin(), kept.end(), f) != kept.end()) continue;
    std::vector<std::size_t> touching;
    for (std::size_t v = 0; v < vertices.size(); ++v)
      if (on(f, vertices[v])) touching.push_back(v);
    if (touching.size() >= dim && affine_rank(vertices, touching, dim) + 1 == dim) kept.push_back(f);
  }

  RationalPolytope p;
  p.dim_ = dim;
  p.facets_ = std::move(kept);
  p.vertices_ = std::move(vertices);
  p.validate();
  return p;
}

std::vector<const Face*> FaceLattice::of_dim(int d) const {
  std::vector<const Face*> out;
  for (const auto& f : faces)
    if (f.dim == d) out.push_back(&f);
  return out;
}

std::vector<std::size_t> FaceLattice::f_vector() const {
  std::vector<std::size_t> counts(polytope_dim, 0);
  for (const auto& f : faces)
    if (f.dim >= 0 && static_cast<std::size_t>(f.dim) < polytope_dim) ++counts[static_cast<std::size_t>(f.dim)];
  return counts;
}

long FaceLattice::euler_sum() const {
  long sum = 0;
  const auto fv = f_vector();
  for (std::size_t d = 0; d < fv.size(); ++d) sum += (d % 2 == 0 ? 1 : -1) * static_cast<long>(fv[d]);
  return sum;
}

long FaceLattice::euler_expected() const { return polytope_dim % 2 == 0 ? 0 : 2; }

FaceLattice face_lattice(const RationalPolytope& p) {
  const std::size_t n = p.dim();
  std::set<std::vector<std::size_t>> sets;
  std::vector<std::vector<std::size_t>> frontier;
  for (std::size_t f = 0; f < p.facets().size(); ++f) {
    auto vs = p.facet_vertices(f);
    if (sets.insert(vs).second) frontier.push_back(std::move(vs));
  }
  // Faces are exactly the intersections of facets.
  while (!frontier.empty()) {
    std::vector<std::vector<std::size_t>> next;
    for (const auto& s : frontier)
      for (std::size_t f = 0; f < p.facets().size(); ++f) {
        const auto fv = p.facet_vertices(f);
        std::vector<std::size_t> meet;
        std::set_intersection(s.begin(), s.end(), fv.begin(), fv.end(), std::back_inserter(meet));
        if (sets.insert(meet).second) next.push_back(std::move(meet));
      }
    frontier = std::move(next);
  }
  sets.insert(all_indices(p.vertices().size()));
  sets.insert({});

  FaceLattice lattice;
  lattice.polytope_dim = n;
  for (const auto& s : sets) {
    Face face;
    face.vertices = s;
    face.dim = s.empty() ? -1 : static_cast<int>(affine_rank(p.vertices(), s, n));
    for (std::size_t f = 0; f < p.facets().size(); ++f) {
      const bool contains_all = std::all_of(s.begin(), s.end(), [&](std::size_t v) {
        return dot(p.vertices()[v], p.facets()[f].normal) == p.facets()[f].offset;
      });
      if (contains_all) face.facets.push_back(f);
    }
    lattice.faces.push_back(std::move(face));
  }
  std::sort(lattice.faces.begin(), lattice.faces.end(), [](const Face& a, const Face& b) {
    if (a.dim != b.dim) return a.dim > b.dim;
    return a.vertices < b.vertices;
  });
  return lattice;
}

SimplicityReport simplicity_report(const RationalPolytope& p) {
  const FaceLattice lattice = face_lattice(p);
  const std::size_t n = p.dim();
  SimplicityReport report;
  for (const auto& face : lattice.faces) {
    if (face.dim < 0 || static_cast<std::size_t>(face.dim) >= n) continue;
    FaceSimplicity fs{face, n - static_cast<std::size_t>(face.dim), true};
    fs.simple = face.facets.size() == fs.codim;
    if (face.dim > 0) {
      std::vector<IntegerVector> normals;
      for (auto f : face.facets) normals.push_back(p.facets()[f].normal);
      if (!is_unimodular_tuple(normals, n)) report.unimodular_away_from_vertices = false;
    }
    if (!fs.simple) {
      report.simple_everywhere = false;
      if (face.dim != 0) report.simple_except_at_vertices = false;
      report.non_simple.push_back(fs);
    }
    report.faces.push_back(std::move(fs));
  }
  return report;
}

DelzantReport is_delzant(const RationalPolytope& p) {
  DelzantReport report;
  if (!simplicity_report(p).simple_everywhere) report.delzant = false;
  for (std::size_t v = 0; v < p.vertices().size(); ++v) {
    const auto active = p.active_facets(v);
    std::vector<IntegerVector> normals;
    for (auto f : active) normals.push_back(p.facets()[f].normal);
    if (active.size() != p.dim() || !is_unimodular_tuple(normals, p.dim())) {
      report.delzant = false;
      report.failing_vertices.push_back(v);
    }
  }
  return report;
}

const char* to_string(VertexVerdict v) {
  switch (v) {
    case VertexVerdict::Smooth: return "smooth";
    case VertexVerdict::SingularCandidate: return "singular-candidate";
    case VertexVerdict::Reject: return "reject";
  }
  return "?";
}

VertexReport classify_vertex(const RationalPolytope& p, const RationalVector& vertex) {
  if (vertex.size() != p.dim()) fail(ErrorCode::DimensionMismatch, "vertex has the wrong number of coordinates");
  const std::size_t index = p.find_vertex(vertex);
  if (index == p.vertices().size()) fail(ErrorCode::InvalidArgument, "point is not a vertex of the polytope");
  VertexReport report;
  report.vertex = index;
  report.active_facets = p.active_facets(index);
  std::vector<IntegerVector> normals;
  for (auto f : report.active_facets) normals.push_back(p.facets()[f].normal);
  report.simple = normals.size() == p.dim();
  report.unimodular = is_unimodular_tuple(normals, p.dim());
  if (report.simple && report.unimodular) {
    report.verdict = VertexVerdict::Smooth;
    return report;
  }
  report.local_cone = is_good_cone(SimpleCone(p.dim(), normals));
  report.verdict = report.local_cone.good ? VertexVerdict::SingularCandidate : VertexVerdict::Reject;
  return report;
}

}  // namespace toric
