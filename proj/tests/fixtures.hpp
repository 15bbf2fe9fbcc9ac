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

// Small simplicial complexes and pairs shared by the tests.

#pragma once

#include <algorithm>
#include <array>
#include <string>
#include <utility>
#include <vector>

#include "toric/complex.hpp"

namespace fixtures {

using toric::PairInclusion;
using toric::Simplex;
using toric::SimplicialComplex;

inline SimplicialComplex point() { return SimplicialComplex::from_facets(1, {}); }

// Boundary of a triangle.
inline SimplicialComplex circle() { return SimplicialComplex::from_facets(3, {{0, 1}, {1, 2}, {0, 2}}); }

inline SimplicialComplex disk() { return SimplicialComplex::from_facets(3, {{0, 1, 2}}); }

// Boundary of the tetrahedron, a model of S^2.
inline SimplicialComplex sphere() {
  return SimplicialComplex::from_facets(4, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
}

// Inner circle 0,1,2 and outer circle 3,4,5.
inline SimplicialComplex annulus() {
  return SimplicialComplex::from_facets(6, {{0, 1, 3}, {1, 3, 4}, {1, 2, 4}, {2, 4, 5}, {0, 2, 5}, {0, 3, 5}});
}

// The 7-vertex torus: triangles {i, i+1, i+3} and {i, i+2, i+3} mod 7.
inline SimplicialComplex seven_vertex_torus() {
  std::vector<Simplex> f;
  for (std::size_t i = 0; i < 7; ++i) {
    Simplex a{i, (i + 1) % 7, (i + 3) % 7}, b{i, (i + 2) % 7, (i + 3) % 7};
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    f.push_back(a);
    f.push_back(b);
  }
  return SimplicialComplex::from_facets(7, f);
}

// 3x3 grid on the torus; vertex (i, j) has label 3i + j.
inline std::size_t grid(std::size_t i, std::size_t j) { return 3 * (i % 3) + (j % 3); }

inline SimplicialComplex grid_torus() {
  std::vector<Simplex> f;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      f.push_back({grid(i, j), grid(i + 1, j), grid(i + 1, j + 1)});
      f.push_back({grid(i, j), grid(i, j + 1), grid(i + 1, j + 1)});
    }
  for (auto& s : f) std::sort(s.begin(), s.end());
  return SimplicialComplex::from_facets(9, f);
}

inline std::vector<Simplex> meridian() { return {{grid(0, 0), grid(0, 1)}, {grid(0, 1), grid(0, 2)}, {grid(0, 0), grid(0, 2)}}; }
inline std::vector<Simplex> longitude() { return {{grid(0, 0), grid(1, 0)}, {grid(1, 0), grid(2, 0)}, {grid(0, 0), grid(2, 0)}}; }

// The 6-vertex real projective plane.
inline SimplicialComplex projective_plane() {
  return SimplicialComplex::from_facets(6, {{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 5}, {0, 1, 5},
                                            {1, 2, 4}, {2, 3, 5}, {1, 3, 4}, {2, 4, 5}, {1, 3, 5}});
}

// Barycentric subdivision of the tetrahedron boundary: vertices 0-3, edge
// midpoints 4-9, face barycentres 10-13.
inline SimplicialComplex barycentric_sphere() {
  const std::array<std::pair<std::size_t, std::size_t>, 6> edges{{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};
  const std::array<std::array<std::size_t, 3>, 4> faces{{{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}}};
  auto mid = [&](std::size_t a, std::size_t b) {
    for (std::size_t e = 0; e < edges.size(); ++e)
      if (edges[e] == std::make_pair(std::min(a, b), std::max(a, b))) return 4 + e;
    return std::size_t(0);
  };
  std::vector<Simplex> f;
  for (std::size_t k = 0; k < faces.size(); ++k)
    for (auto v : faces[k])
      for (auto w : faces[k])
        if (w != v) {
          Simplex s{v, mid(v, w), 10 + k};
          std::sort(s.begin(), s.end());
          if (std::find(f.begin(), f.end(), s) == f.end()) f.push_back(s);
        }
  return SimplicialComplex::from_facets(14, f);
}

// Seven vertex-disjoint edges of the barycentric sphere.
inline std::vector<Simplex> seven_patches() {
  return {{0, 4}, {1, 7}, {2, 9}, {3, 11}, {5, 10}, {6, 12}, {8, 13}};
}

struct NamedComplex {
  std::string name;
  SimplicialComplex complex;
};

inline std::vector<NamedComplex> all_complexes() {
  return {{"point", point()},
          {"circle", circle()},
          {"disk", disk()},
          {"sphere", sphere()},
          {"annulus", annulus()},
          {"seven_vertex_torus", seven_vertex_torus()},
          {"grid_torus", grid_torus()},
          {"projective_plane", projective_plane()},
          {"barycentric_sphere", barycentric_sphere()}};
}

struct NamedPair {
  std::string name;
  PairInclusion pair;
};

// At least twenty pairs covering the shapes the long exact sequence must
// handle: contractible subcomplexes, circles, identities and empties.
inline std::vector<NamedPair> all_pairs() {
  std::vector<NamedPair> out;
  out.push_back({"disk/circle", PairInclusion::from_ambient_simplices(disk(), {{0, 1}, {1, 2}, {0, 2}})});
  out.push_back({"disk/point", PairInclusion::from_ambient_simplices(disk(), {{1}})});
  out.push_back({"sphere/point", PairInclusion::from_ambient_simplices(sphere(), {{0}})});
  out.push_back({"sphere/equator", PairInclusion::from_ambient_simplices(sphere(), {{0, 1}, {1, 2}, {0, 2}})});
  out.push_back({"sphere/disk", PairInclusion::from_ambient_simplices(sphere(), {{0, 1, 2}})});
  out.push_back({"sphere/two_points", PairInclusion::from_ambient_simplices(sphere(), {{0}, {3}})});
  out.push_back({"torus/meridian", PairInclusion::from_ambient_simplices(grid_torus(), meridian())});
  out.push_back({"torus/longitude", PairInclusion::from_ambient_simplices(grid_torus(), longitude())});
  {
    auto both = meridian();
    auto l = longitude();
    both.insert(both.end(), l.begin(), l.end());
    out.push_back({"torus/wedge", PairInclusion::from_ambient_simplices(grid_torus(), both)});
  }
  out.push_back({"torus/star", PairInclusion::closed_star(grid_torus(), {4})});
  out.push_back({"annulus/inner", PairInclusion::from_ambient_simplices(annulus(), {{0, 1}, {1, 2}, {0, 2}})});
  out.push_back({"annulus/outer", PairInclusion::from_ambient_simplices(annulus(), {{3, 4}, {4, 5}, {3, 5}})});
  out.push_back({"annulus/boundary",
                 PairInclusion::from_ambient_simplices(annulus(), {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}})});
  out.push_back({"circle/point", PairInclusion::from_ambient_simplices(circle(), {{2}})});
  out.push_back({"circle/arc", PairInclusion::from_ambient_simplices(circle(), {{0, 1}})});
  out.push_back({"rp2/point", PairInclusion::from_ambient_simplices(projective_plane(), {{0}})});
  out.push_back({"rp2/star", PairInclusion::closed_star(projective_plane(), {0})});
  out.push_back({"bary_sphere/patches", PairInclusion::from_ambient_simplices(barycentric_sphere(), seven_patches())});
  out.push_back({"sphere/identity", PairInclusion::identity(sphere())});
  out.push_back({"torus/identity", PairInclusion::identity(seven_vertex_torus())});
  out.push_back({"rp2/identity", PairInclusion::identity(projective_plane())});
  out.push_back({"sphere/empty", PairInclusion::empty(sphere())});
  out.push_back({"torus/empty", PairInclusion::empty(grid_torus())});
  out.push_back({"point/empty", PairInclusion::empty(point())});
  return out;
}

}  // namespace fixtures
