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

// Exact integer lattice algebra: Hermite and Smith normal forms, unimodular
// tuples, primitive parts, saturations and rational annihilators.
//
// Tuples of lattice vectors are always stored as the rows of a matrix. Points
// of the dual space pair with them through the ordinary dot product.

#pragma once

#include <vector>

#include "toric/matrix.hpp"
#include "toric/numeric.hpp"

namespace toric {

struct HermiteDecomposition {
  IntegerMatrix H;  // row-style Hermite form of A
  IntegerMatrix U;  // unimodular, U * A == H
};

/// Row-style Hermite normal form. Pivots are positive and the entries above
/// each pivot lie in [0, pivot). Zero rows collect at the bottom.
HermiteDecomposition hermite_normal_form(const IntegerMatrix& A);

struct SmithDecomposition {
  IntegerMatrix D;  // diagonal, nonnegative, d_1 | d_2 | ... then zeros
  IntegerMatrix U;  // unimodular, rows(A) x rows(A)
  IntegerMatrix V;  // unimodular, cols(A) x cols(A)

  std::size_t rank() const;
  // The nonzero diagonal entries d_1, ..., d_r.
  std::vector<Integer> invariant_factors() const;
};

/// Smith normal form with U * A * V == D. Pivots are chosen by smallest
/// nonzero magnitude.
SmithDecomposition smith_normal_form(const IntegerMatrix& A);

// Rows of `vectors` must all have length `dim`.
IntegerMatrix tuple_matrix(const std::vector<IntegerVector>& vectors, std::size_t dim);

struct UnimodularityReport {
  bool unimodular = false;
  bool independent = false;
  std::size_t size = 0;
  std::size_t dim = 0;
  std::vector<Integer> invariant_factors;  // nonzero SNF diagonal of the row matrix
};

/// True iff the vectors extend to a Z-basis of Z^n, i.e. they are a basis of
/// the integral lattice of a subtorus. The empty tuple qualifies.
bool is_unimodular_tuple(const std::vector<IntegerVector>& vectors, std::size_t dim);
UnimodularityReport unimodularity_report(const std::vector<IntegerVector>& vectors, std::size_t dim);

/// v / gcd(v). Throws InvalidArgument on the zero vector.
IntegerVector primitive_part(const IntegerVector& v);
bool is_primitive(const IntegerVector& v);

/// Z-basis of span_Q(vectors) ∩ Z^n in Hermite form; always a unimodular tuple.
std::vector<IntegerVector> saturation_basis(const std::vector<IntegerVector>& vectors, std::size_t dim);

/// Basis of { eta in Q^n : <eta, v> = 0 for every input v }.
std::vector<RationalVector> rational_kernel_basis(const std::vector<IntegerVector>& vectors, std::size_t dim);

/// Integer coefficients c with c * basis == target when they exist.
bool integer_combination(const std::vector<IntegerVector>& basis, const IntegerVector& target,
                         IntegerVector& coefficients);

/// True when both tuples generate the same subgroup of Z^n.
bool same_lattice(const std::vector<IntegerVector>& a, const std::vector<IntegerVector>& b, std::size_t dim);

}  // namespace toric
