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

#include "toric/lattice.hpp"

#include <algorithm>
#include <optional>

namespace toric {

namespace {

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Integer trunc_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_tdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

// Replaces rows (p, q) of both matrices by the unimodular combination
//   row_p <- x row_p + y row_q,  row_q <- (-b/g) row_p + (a/g) row_q
// where x a + y b = g = gcd(a, b). Afterwards M(q, col) == 0.
void gcd_row_step(IntegerMatrix& M, IntegerMatrix& U, std::size_t p, std::size_t q, std::size_t col) {
  const Integer a = M(p, col);
  const Integer b = M(q, col);
  Integer g, x, y;
  mpz_gcdext(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  Integer bg, ag;
  mpz_divexact(bg.get_mpz_t(), b.get_mpz_t(), g.get_mpz_t());
  mpz_divexact(ag.get_mpz_t(), a.get_mpz_t(), g.get_mpz_t());
  auto combine = [&](IntegerMatrix& m) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      Integer rp = x * m(p, c) + y * m(q, c);
      Integer rq = ag * m(q, c) - bg * m(p, c);
      m(p, c) = std::move(rp);
      m(q, c) = std::move(rq);
    }
  };
  combine(M);
  combine(U);
}

struct Position {
  std::size_t row;
  std::size_t col;
};

std::optional<Position> smallest_nonzero(const IntegerMatrix& D, std::size_t from) {
  std::optional<Position> best;
  for (std::size_t i = from; i < D.rows(); ++i)
    for (std::size_t j = from; j < D.cols(); ++j) {
      if (D(i, j) == 0) continue;
      if (!best || abs(D(i, j)) < abs(D(best->row, best->col))) best = Position{i, j};
    }
  return best;
}

IntegerMatrix integer_inverse(const IntegerMatrix& m) {
  const RationalMatrix inv = inverse(to_rational(m));
  IntegerMatrix out(inv.rows(), inv.cols());
  for (std::size_t r = 0; r < inv.rows(); ++r)
    for (std::size_t c = 0; c < inv.cols(); ++c) {
      if (inv(r, c).get_den() != 1) fail(ErrorCode::Internal, "inverse of a unimodular matrix is not integral");
      out(r, c) = inv(r, c).get_num();
    }
  return out;
}

}  // namespace

HermiteDecomposition hermite_normal_form(const IntegerMatrix& A) {
  IntegerMatrix H = A;
  IntegerMatrix U = IntegerMatrix::identity(A.rows());
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < H.cols() && pivot_row < H.rows(); ++col) {
    for (std::size_t i = pivot_row + 1; i < H.rows(); ++i) {
      if (H(i, col) != 0) gcd_row_step(H, U, pivot_row, i, col);
    }
    if (H(pivot_row, col) == 0) continue;
    if (H(pivot_row, col) < 0) {
      H.negate_row(pivot_row);
      U.negate_row(pivot_row);
    }
    for (std::size_t i = 0; i < pivot_row; ++i) {
      const Integer q = floor_div(H(i, col), H(pivot_row, col));
      H.add_row_multiple(i, pivot_row, -q);
      U.add_row_multiple(i, pivot_row, -q);
    }
    ++pivot_row;
  }
  return {std::move(H), std::move(U)};
}

std::size_t SmithDecomposition::rank() const {
  std::size_t r = 0;
  while (r < std::min(D.rows(), D.cols()) && D(r, r) != 0) ++r;
  return r;
}

std::vector<Integer> SmithDecomposition::invariant_factors() const {
  std::vector<Integer> out;
  for (std::size_t i = 0; i < rank(); ++i) out.push_back(D(i, i));
  return out;
}

SmithDecomposition smith_normal_form(const IntegerMatrix& A) {
  IntegerMatrix D = A;
  IntegerMatrix U = IntegerMatrix::identity(A.rows());
  IntegerMatrix V = IntegerMatrix::identity(A.cols());
  const std::size_t limit = std::min(D.rows(), D.cols());

  for (std::size_t t = 0; t < limit; ++t) {
    auto start = smallest_nonzero(D, t);
    if (!start) break;
    D.swap_rows(t, start->row);
    U.swap_rows(t, start->row);
    D.swap_cols(t, start->col);
    V.swap_cols(t, start->col);

    for (;;) {
      bool clean = true;
      for (std::size_t i = t + 1; i < D.rows(); ++i) {
        if (D(i, t) == 0) continue;
        const Integer q = trunc_div(D(i, t), D(t, t));
        D.add_row_multiple(i, t, -q);
        U.add_row_multiple(i, t, -q);
        if (D(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < D.cols(); ++j) {
        if (D(t, j) == 0) continue;
        const Integer q = trunc_div(D(t, j), D(t, t));
        D.add_col_multiple(j, t, -q);
        V.add_col_multiple(j, t, -q);
        if (D(t, j) != 0) clean = false;
      }
      if (!clean) {
        // A remainder smaller than the pivot survived: promote the smallest
        // one in the pivot row/column and repeat.
        std::optional<Position> best;
        for (std::size_t i = t + 1; i < D.rows(); ++i)
          if (D(i, t) != 0 && (!best || abs(D(i, t)) < abs(D(best->row, best->col)))) best = Position{i, t};
        for (std::size_t j = t + 1; j < D.cols(); ++j)
          if (D(t, j) != 0 && (!best || abs(D(t, j)) < abs(D(best->row, best->col)))) best = Position{t, j};
        if (best->col == t) {
          D.swap_rows(t, best->row);
          U.swap_rows(t, best->row);
        } else {
          D.swap_cols(t, best->col);
          V.swap_cols(t, best->col);
        }
        continue;
      }
      // Pivot row and column are clear; enforce divisibility of the rest.
      std::optional<std::size_t> offending;
      for (std::size_t i = t + 1; i < D.rows() && !offending; ++i)
        for (std::size_t j = t + 1; j < D.cols(); ++j) {
          if (D(i, j) % D(t, t) != 0) {
            offending = i;
            break;
          }
        }
      if (!offending) break;
      D.add_row_multiple(t, *offending, Integer(1));
      U.add_row_multiple(t, *offending, Integer(1));
    }
    if (D(t, t) < 0) {
      D.negate_row(t);
      U.negate_row(t);
    }
  }
  return {std::move(D), std::move(U), std::move(V)};
}

IntegerMatrix tuple_matrix(const std::vector<IntegerVector>& vectors, std::size_t dim) {
  for (const auto& v : vectors) {
    if (v.size() != dim) {
      fail(ErrorCode::DimensionMismatch, "vector of length " + std::to_string(v.size()) +
                                             " in a tuple of dimension " + std::to_string(dim));
    }
  }
  return IntegerMatrix::from_rows(vectors, dim);
}

UnimodularityReport unimodularity_report(const std::vector<IntegerVector>& vectors, std::size_t dim) {
  UnimodularityReport report;
  report.size = vectors.size();
  report.dim = dim;
  const IntegerMatrix M = tuple_matrix(vectors, dim);
  const SmithDecomposition snf = smith_normal_form(M);
  report.invariant_factors = snf.invariant_factors();
  report.independent = snf.rank() == vectors.size();
  report.unimodular = vectors.size() <= dim && report.independent &&
                      std::all_of(report.invariant_factors.begin(), report.invariant_factors.end(),
                                  [](const Integer& d) { return d == 1; });
  return report;
}

bool is_unimodular_tuple(const std::vector<IntegerVector>& vectors, std::size_t dim) {
  return unimodularity_report(vectors, dim).unimodular;
}

IntegerVector primitive_part(const IntegerVector& v) {
  const Integer g = content(v);
  if (g == 0) fail(ErrorCode::InvalidArgument, "primitive part of the zero vector");
  IntegerVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) mpz_divexact(out[i].get_mpz_t(), v[i].get_mpz_t(), g.get_mpz_t());
  return out;
}

bool is_primitive(const IntegerVector& v) { return content(v) == 1; }

std::vector<IntegerVector> saturation_basis(const std::vector<IntegerVector>& vectors, std::size_t dim) {
  const IntegerMatrix M = tuple_matrix(vectors, dim);
  const SmithDecomposition snf = smith_normal_form(M);
  const std::size_t r = snf.rank();
  if (r == 0) return {};
  // The first r rows of V^{-1} are a Z-basis of the saturated row space.
  const IntegerMatrix Vinv = integer_inverse(snf.V);
  IntegerMatrix rows(r, dim);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < dim; ++j) rows(i, j) = Vinv(i, j);
  const IntegerMatrix H = hermite_normal_form(rows).H;
  std::vector<IntegerVector> out;
  for (std::size_t i = 0; i < r; ++i) out.push_back(H.row(i));
  return out;
}

std::vector<RationalVector> rational_kernel_basis(const std::vector<IntegerVector>& vectors, std::size_t dim) {
  return nullspace(to_rational(tuple_matrix(vectors, dim)));
}

bool integer_combination(const std::vector<IntegerVector>& basis, const IntegerVector& target,
                         IntegerVector& coefficients) {
  const std::size_t dim = target.size();
  const IntegerMatrix B = tuple_matrix(basis, dim);
  const SmithDecomposition snf = smith_normal_form(B);
  // c B = t  <=>  (c U^{-1}) D = t V
  const std::size_t r = snf.rank();
  IntegerVector tv(dim, Integer(0));
  for (std::size_t j = 0; j < dim; ++j)
    for (std::size_t i = 0; i < dim; ++i) tv[j] += target[i] * snf.V(i, j);
  IntegerVector y(basis.size(), Integer(0));
  for (std::size_t j = 0; j < dim; ++j) {
    if (j < r) {
      if (tv[j] % snf.D(j, j) != 0) return false;
      y[j] = tv[j] / snf.D(j, j);
    } else if (tv[j] != 0) {
      return false;
    }
  }
  coefficients.assign(basis.size(), Integer(0));
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t k = 0; k < basis.size(); ++k) coefficients[i] += y[k] * snf.U(k, i);
  return true;
}

bool same_lattice(const std::vector<IntegerVector>& a, const std::vector<IntegerVector>& b, std::size_t dim) {
  IntegerVector scratch;
  for (const auto& v : a) {
    if (v.size() != dim) fail(ErrorCode::DimensionMismatch, "same_lattice: vector length");
    if (!integer_combination(b, v, scratch)) return false;
  }
  for (const auto& v : b) {
    if (v.size() != dim) fail(ErrorCode::DimensionMismatch, "same_lattice: vector length");
    if (!integer_combination(a, v, scratch)) return false;
  }
  return true;
}

}  // namespace toric
