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

#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

#include "oracles.hpp"
#include "toric/polytope.hpp"

namespace toric {
namespace {

IntegerVector iv(std::initializer_list<long> xs) {
  IntegerVector v;
  for (long x : xs) v.emplace_back(x);
  return v;
}
RationalVector rv(std::initializer_list<Rational> xs) { return RationalVector(xs); }

RationalPolytope square() { return normalize_from_vertices(2, {rv({-1, -1}), rv({1, -1}), rv({1, 1}), rv({-1, 1})}); }
RationalPolytope triangle() { return normalize_from_vertices(2, {rv({0, 0}), rv({1, 0}), rv({0, 2})}); }
RationalPolytope octahedron() {
  return normalize_from_vertices(
      3, {rv({1, 0, 0}), rv({-1, 0, 0}), rv({0, 1, 0}), rv({0, -1, 0}), rv({0, 0, 1}), rv({0, 0, -1})});
}
RationalPolytope cube() {
  std::vector<RationalVector> pts;
  for (int x : {0, 1})
    for (int y : {0, 1})
      for (int z : {0, 1}) pts.push_back(rv({x, y, z}));
  return normalize_from_vertices(3, pts);
}
RationalPolytope square_pyramid() {
  return normalize_from_vertices(3, {rv({0, 0, 0}), rv({2, 0, 0}), rv({2, 2, 0}), rv({0, 2, 0}), rv({1, 1, 1})});
}

std::set<IntegerVector> normals(const RationalPolytope& p) {
  std::set<IntegerVector> out;
  for (const auto& f : p.facets()) out.insert(f.normal);
  return out;
}

TEST(Normalize, SquareFromVertices) {
  const auto p = square();
  EXPECT_EQ(normals(p), (std::set<IntegerVector>{iv({1, 0}), iv({-1, 0}), iv({0, 1}), iv({0, -1})}));
  for (const auto& f : p.facets()) EXPECT_EQ(f.offset, -1);
  EXPECT_EQ(p.vertices().size(), 4u);
}

TEST(Normalize, OctahedronFacets) {
  const auto p = octahedron();
  EXPECT_EQ(p.vertices().size(), 6u);
  ASSERT_EQ(p.facets().size(), 8u);
  for (const auto& f : p.facets()) {
    EXPECT_EQ(f.offset, -1);
    for (const auto& x : f.normal) EXPECT_TRUE(x == 1 || x == -1);
  }
}

TEST(Normalize, SimplexAndInteriorPoints) {
  EXPECT_EQ(normalize_from_vertices(2, {rv({0, 0}), rv({1, 0}), rv({0, 1})}).facets().size(), 3u);
  // interior and duplicate points are discarded
  const auto p = normalize_from_vertices(2, {rv({0, 0}), rv({2, 0}), rv({0, 2}), rv({Rational(1, 2), Rational(1, 2)}),
                                             rv({0, 0})});
  EXPECT_EQ(p.vertices().size(), 3u);
}

TEST(Normalize, FromFacetsDropsRedundant) {
  const auto p = normalize_from_facets(2, {{iv({1, 0}), 0}, {iv({0, 1}), 0}, {iv({-1, 0}), -1}, {iv({0, -1}), -1},
                                           {iv({-1, -1}), -5}});
  EXPECT_EQ(p.facets().size(), 4u);
  EXPECT_EQ(p.vertices().size(), 4u);
}

TEST(Normalize, FacetNormalsArePrimitive) {
  // 2x >= 0 written with a non-primitive normal is rescaled
  const auto p = normalize_from_facets(1, {{iv({2}), 0}, {iv({-1}), -3}});
  for (const auto& f : p.facets()) EXPECT_TRUE(is_primitive(f.normal));
  EXPECT_EQ(p.vertices().size(), 2u);
}

TEST(Normalize, RejectsUnboundedAndDegenerate) {
  try {
    normalize_from_facets(2, {{iv({1, 0}), 0}, {iv({0, 1}), 0}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::Unbounded);
  }
  EXPECT_THROW(normalize_from_vertices(2, {rv({0, 0}), rv({1, 1}), rv({2, 2})}), Error);
  EXPECT_THROW(normalize_from_facets(1, {{iv({1}), 1}, {iv({-1}), 0}}), Error);  // empty
  EXPECT_THROW(normalize_from_vertices(5, {}), Error);
}

TEST(Normalize, RoundTripBetweenDescriptions) {
  std::mt19937_64 rng(9);
  for (int t = 0; t < 40; ++t) {
    const std::size_t n = std::uniform_int_distribution<std::size_t>(1, 3)(rng);
    std::vector<RationalVector> pts;
    for (int i = 0; i < 8; ++i) {
      RationalVector p;
      for (std::size_t j = 0; j < n; ++j) p.push_back(Rational(oracle::uniform(rng, -4, 4)));
      pts.push_back(p);
    }
    RationalPolytope p = [&] {
      try {
        return normalize_from_vertices(n, pts);
      } catch (const Error&) {
        return normalize_from_vertices(n, {RationalVector(n, Rational(0)), [&] {
                                             RationalVector e(n, Rational(0));
                                             e[0] = 1;
                                             return e;
                                           }()});
      }
    }();
    if (p.dim() != n) continue;
    const auto q = normalize_from_facets(n, p.facets());
    auto a = p.vertices(), b = q.vertices();
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    EXPECT_EQ(a, b);
    EXPECT_NO_THROW(p.validate());
  }
}

TEST(FaceLattice, Counts) {
  const auto sq = face_lattice(square());
  EXPECT_EQ(sq.f_vector(), (std::vector<std::size_t>{4, 4}));
  const auto oc = face_lattice(octahedron());
  EXPECT_EQ(oc.f_vector(), (std::vector<std::size_t>{6, 12, 8}));
  EXPECT_EQ(oc.euler_sum(), oc.euler_expected());
  EXPECT_EQ(oc.euler_sum(), 2);
  const auto seg = face_lattice(normalize_from_vertices(1, {rv({0}), rv({Rational(5, 2)})}));
  EXPECT_EQ(seg.f_vector(), (std::vector<std::size_t>{2}));
  EXPECT_EQ(face_lattice(cube()).f_vector(), (std::vector<std::size_t>{8, 12, 6}));
}

TEST(FaceLattice, EulerRelationOnRandomHulls) {
  std::mt19937_64 rng(13);
  int checked = 0;
  for (int t = 0; t < 60; ++t) {
    const std::size_t n = std::uniform_int_distribution<std::size_t>(2, 3)(rng);
    std::vector<RationalVector> pts;
    for (int i = 0; i < 7; ++i) {
      RationalVector p;
      for (std::size_t j = 0; j < n; ++j) p.push_back(Rational(oracle::uniform(rng, -3, 3)));
      pts.push_back(p);
    }
    try {
      const auto lat = face_lattice(normalize_from_vertices(n, pts));
      EXPECT_EQ(lat.euler_sum(), lat.euler_expected());
      ++checked;
    } catch (const Error&) {
      // lower-dimensional sample
    }
  }
  EXPECT_GT(checked, 30);
}

TEST(Simplicity, Reports) {
  EXPECT_TRUE(simplicity_report(cube()).simple_everywhere);
  const auto oc = simplicity_report(octahedron());
  EXPECT_FALSE(oc.simple_everywhere);
  EXPECT_TRUE(oc.simple_except_at_vertices);
  EXPECT_EQ(oc.non_simple.size(), 6u);
  for (const auto& f : oc.non_simple) {
    EXPECT_EQ(f.face.dim, 0);
    EXPECT_EQ(f.face.facets.size(), 4u);
  }
  EXPECT_FALSE(oc.unimodular_away_from_vertices);

  const auto py = simplicity_report(square_pyramid());
  EXPECT_FALSE(py.simple_everywhere);
  EXPECT_TRUE(py.simple_except_at_vertices);
  ASSERT_EQ(py.non_simple.size(), 1u);
  EXPECT_EQ(py.non_simple[0].face.dim, 0);
}

TEST(Delzant, Verdicts) {
  EXPECT_TRUE(is_delzant(square()).delzant);
  EXPECT_TRUE(is_delzant(cube()).delzant);
  const auto tr = triangle();
  const auto d = is_delzant(tr);
  EXPECT_FALSE(d.delzant);
  ASSERT_EQ(d.failing_vertices.size(), 1u);
  EXPECT_EQ(tr.vertices()[d.failing_vertices[0]], rv({1, 0}));
  EXPECT_FALSE(is_delzant(octahedron()).delzant);
}

TEST(VertexVerdict, Examples) {
  EXPECT_EQ(classify_vertex(cube(), rv({0, 0, 0})).verdict, VertexVerdict::Smooth);

  // Simple but not unimodular: the two edge normals (0,1) and (-2,-1) are
  // primitive, so the local cone passes the good-cone audit, whose only
  // proper faces in dimension 2 are the two rays.
  const auto t = classify_vertex(triangle(), rv({1, 0}));
  EXPECT_TRUE(t.simple);
  EXPECT_FALSE(t.unimodular);
  EXPECT_EQ(t.verdict, VertexVerdict::SingularCandidate);

  const auto o = classify_vertex(octahedron(), rv({0, 0, 1}));
  EXPECT_FALSE(o.simple);
  std::vector<IntegerVector> active;
  for (auto f : o.active_facets) active.push_back(octahedron().facets()[f].normal);
  EXPECT_EQ(o.local_cone.good, oracle::good_cone(active, 3).good);
  EXPECT_EQ(o.verdict, VertexVerdict::Reject);

  EXPECT_EQ(classify_vertex(square_pyramid(), rv({1, 1, 1})).verdict, VertexVerdict::SingularCandidate);
  EXPECT_THROW(classify_vertex(cube(), rv({Rational(1, 2), 0, 0})), Error);
  EXPECT_STREQ(to_string(VertexVerdict::SingularCandidate), "singular-candidate");
}

}  // namespace
}  // namespace toric
