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

#include "toric/cone.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

namespace toric {

namespace {

std::string describe(const IntegerVector& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i].get_str();
  os << ')';
  return os.str();
}

void require_dim(const RationalVector& eta, std::size_t dim) {
  if (eta.size() != dim) {
    fail(ErrorCode::DimensionMismatch, "point of dimension " + std::to_string(eta.size()) +
                                           " against a cone in dimension " + std::to_string(dim));
  }
}

RationalVector difference(const RationalVector& a, const RationalVector& b) {
  RationalVector d(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) d[i] = a[i] - b[i];
  return d;
}

IntegerMatrix integral(const RationalMatrix& m) {
  IntegerMatrix out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (m(r, c).get_den() != 1) fail(ErrorCode::Internal, "expected an integral matrix");
      out(r, c) = m(r, c).get_num();
    }
  return out;
}

// a . t >= b
struct Inequality {
  RationalVector a;
  Rational b;
};

// Fourier-Motzkin elimination. Returns a feasible point or nothing.
std::optional<RationalVector> feasible_point(const std::vector<Inequality>& system, std::size_t vars) {
  // stages[j] involves only variables 0..j-1
  std::vector<std::vector<Inequality>> stages(vars + 1);
  stages[vars] = system;
  for (std::size_t j = vars; j-- > 0;) {
    const auto& cur = stages[j + 1];
    std::vector<Inequality> next;
    std::vector<const Inequality*> lower, upper;
    for (const auto& ineq : cur) {
      if (ineq.a[j] > 0) lower.push_back(&ineq);
      else if (ineq.a[j] < 0) upper.push_back(&ineq);
      else next.push_back(ineq);
    }
    for (const auto* lo : lower)
      for (const auto* up : upper) {
        // lo/lo.a[j] - up/up.a[j] eliminates t_j with positive weights
        Rational wl = 1 / lo->a[j];
        Rational wu = -1 / up->a[j];
        Inequality comb{RationalVector(vars, Rational(0)), lo->b * wl + up->b * wu};
        for (std::size_t c = 0; c < vars; ++c) comb.a[c] = lo->a[c] * wl + up->a[c] * wu;
        comb.a[j] = 0;
        next.push_back(std::move(comb));
      }
    stages[j] = std::move(next);
  }
  for (const auto& ineq : stages[0])
    if (ineq.b > 0) return std::nullopt;

  RationalVector t(vars, Rational(0));
  for (std::size_t j = 0; j < vars; ++j) {
    std::optional<Rational> lo, hi;
    for (const auto& ineq : stages[j + 1]) {
      if (ineq.a[j] == 0) continue;
      Rational rhs = ineq.b;
      for (std::size_t c = 0; c < j; ++c) rhs -= ineq.a[c] * t[c];
      Rational bound = rhs / ineq.a[j];
      if (ineq.a[j] > 0) {
        if (!lo || bound > *lo) lo = bound;
      } else {
        if (!hi || bound < *hi) hi = bound;
      }
    }
    if (lo && hi) t[j] = (*lo + *hi) / 2;
    else if (lo) t[j] = *lo;
    else if (hi) t[j] = *hi;
  }
  return t;
}

}  // namespace

UnimodularCone::UnimodularCone(RationalVector apex, std::vector<IntegerVector> normals)
    : apex_(std::move(apex)), normals_(std::move(normals)) {
  const UnimodularityReport report = unimodularity_report(normals_, apex_.size());
  if (!report.unimodular) {
    std::ostringstream os;
    os << "cone normals are not a unimodular tuple";
    if (report.size > report.dim) os << " (" << report.size << " vectors in dimension " << report.dim << ")";
    else if (!report.independent) os << " (linearly dependent)";
    else {
      for (const auto& d : report.invariant_factors)
        if (d != 1) {
          os << " (invariant factor " << d.get_str() << ")";
          break;
        }
    }
    fail(ErrorCode::NotUnimodular, os.str());
  }
}

bool cone_contains(const UnimodularCone& cone, const RationalVector& eta) {
  require_dim(eta, cone.dim());
  const RationalVector rel = difference(eta, cone.apex());
  return std::all_of(cone.normals().begin(), cone.normals().end(),
                     [&](const IntegerVector& v) { return dot(rel, v) >= 0; });
}

FaceData face_data(const UnimodularCone& cone, const RationalVector& eta) {
  require_dim(eta, cone.dim());
  if (!cone_contains(cone, eta)) fail(ErrorCode::InvalidArgument, "point lies outside the cone");
  const RationalVector rel = difference(eta, cone.apex());
  FaceData out;
  for (std::size_t i = 0; i < cone.normals().size(); ++i) {
    if (dot(rel, cone.normals()[i]) == 0) {
      out.active_indices.push_back(i);
      out.subtorus_basis.push_back(cone.normals()[i]);
    }
  }
  return out;
}

bool is_homogeneous_cone(const UnimodularCone& cone) {
  if (is_zero(cone.apex())) return false;
  return std::all_of(cone.normals().begin(), cone.normals().end(),
                     [&](const IntegerVector& v) { return dot(cone.apex(), v) == 0; });
}

RationalVector ConeSplit::project(const RationalVector& eta) const {
  RationalVector xi;
  for (const auto& b : lattice_basis) xi.push_back(dot(eta, b));
  return xi;
}

RationalVector ConeSplit::reconstruct(const RationalVector& xi, const RationalVector& a) const {
  if (xi.size() != section.size() || a.size() != dim) fail(ErrorCode::DimensionMismatch, "reconstruct: shape");
  RationalVector eta = a;
  for (std::size_t j = 0; j < section.size(); ++j)
    for (std::size_t c = 0; c < dim; ++c) eta[c] += xi[j] * section[j][c];
  return eta;
}

RationalVector ConeSplit::annihilator_part(const RationalVector& eta) const {
  const RationalVector xi = project(eta);
  RationalVector a = eta;
  for (std::size_t j = 0; j < section.size(); ++j)
    for (std::size_t c = 0; c < dim; ++c) a[c] -= xi[j] * section[j][c];
  return a;
}

bool ConeSplit::reduced_contains(const RationalVector& xi) const {
  if (xi.size() != reduced_apex.size()) fail(ErrorCode::DimensionMismatch, "reduced point dimension");
  const RationalVector rel = difference(xi, reduced_apex);
  return std::all_of(reduced_normals.begin(), reduced_normals.end(),
                     [&](const IntegerVector& r) { return dot(rel, r) >= 0; });
}

ConeSplit split_cone(const UnimodularCone& cone) {
  ConeSplit s;
  const std::size_t n = cone.dim();
  const std::size_t k = cone.normals().size();
  s.dim = n;
  s.subalgebra_basis = cone.normals();
  s.annihilator_basis = rational_kernel_basis(cone.normals(), n);
  s.lattice_basis = saturation_basis(cone.normals(), n);

  // Integral complement: the trailing rows of V^{-1} from the Smith form of
  // the lattice basis, put in Hermite form for determinism.
  const SmithDecomposition snf = smith_normal_form(tuple_matrix(s.lattice_basis, n));
  const IntegerMatrix Vinv = integral(inverse(to_rational(snf.V)));
  if (k < n) {
    IntegerMatrix tail(n - k, n);
    for (std::size_t i = k; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) tail(i - k, j) = Vinv(i, j);
    const IntegerMatrix H = hermite_normal_form(tail).H;
    for (std::size_t i = 0; i < n - k; ++i) s.complement.push_back(H.row(i));
  }

  std::vector<IntegerVector> full = s.lattice_basis;
  full.insert(full.end(), s.complement.begin(), s.complement.end());
  const IntegerMatrix Minv = integral(inverse(to_rational(tuple_matrix(full, n))));
  for (std::size_t j = 0; j < k; ++j) s.section.push_back(Minv.col(j));

  for (const auto& v : cone.normals()) {
    IntegerVector coeffs;
    if (!integer_combination(s.lattice_basis, v, coeffs)) {
      fail(ErrorCode::Internal, "normal " + describe(v) + " outside its own saturation");
    }
    s.reduced_normals.push_back(std::move(coeffs));
  }
  s.reduced_apex = s.project(cone.apex());
  return s;
}

SimpleCone::SimpleCone(std::size_t dim, std::vector<IntegerVector> normals)
    : dim_(dim), normals_(std::move(normals)) {
  std::set<IntegerVector> seen;
  for (const auto& v : normals_) {
    if (v.size() != dim_) fail(ErrorCode::DimensionMismatch, "normal " + describe(v) + " has wrong length");
    if (!is_primitive(v)) fail(ErrorCode::InvalidArgument, "normal " + describe(v) + " is not primitive");
    if (!seen.insert(v).second) fail(ErrorCode::InvalidArgument, "normal " + describe(v) + " repeated");
  }
}

std::optional<RationalVector> exact_active_witness(const std::vector<IntegerVector>& normals, std::size_t dim,
                                                   const std::vector<std::size_t>& subset) {
  std::vector<IntegerVector> active;
  std::vector<bool> in_subset(normals.size(), false);
  for (auto i : subset) {
    if (i >= normals.size()) fail(ErrorCode::InvalidArgument, "subset index out of range");
    in_subset[i] = true;
    active.push_back(normals[i]);
  }
  // eta = K t parametrizes the common zero set of the subset.
  const std::vector<RationalVector> K = rational_kernel_basis(active, dim);
  const std::size_t vars = K.size();
  std::vector<Inequality> system;
  for (std::size_t i = 0; i < normals.size(); ++i) {
    if (in_subset[i]) continue;
    Inequality ineq{RationalVector(vars, Rational(0)), Rational(1)};
    for (std::size_t j = 0; j < vars; ++j) ineq.a[j] = dot(K[j], normals[i]);
    system.push_back(std::move(ineq));
  }
  const auto t = feasible_point(system, vars);
  if (!t) return std::nullopt;
  RationalVector eta(dim, Rational(0));
  for (std::size_t j = 0; j < vars; ++j)
    for (std::size_t c = 0; c < dim; ++c) eta[c] += (*t)[j] * K[j][c];
  for (std::size_t i = 0; i < normals.size(); ++i) {
    const Rational p = dot(eta, normals[i]);
    if (in_subset[i] ? p != 0 : p <= 0) fail(ErrorCode::Internal, "face witness failed verification");
  }
  return eta;
}

GoodConeReport is_good_cone(const SimpleCone& cone) {
  const std::size_t n = cone.dim();
  if (n < 2) fail(ErrorCode::InvalidArgument, "good-cone audit needs dimension >= 2");
  const auto& normals = cone.normals();
  if (normals.size() >= 8 * sizeof(unsigned long) - 1) fail(ErrorCode::InvalidArgument, "too many normals");
  GoodConeReport report;
  report.normal_count_differs_from_dim = normals.size() != n;
  const unsigned long total = 1UL << normals.size();
  for (unsigned long mask = 1; mask < total; ++mask) {
    std::vector<std::size_t> subset;
    std::vector<IntegerVector> vectors;
    for (std::size_t i = 0; i < normals.size(); ++i)
      if (mask & (1UL << i)) {
        subset.push_back(i);
        vectors.push_back(normals[i]);
      }
    if (subset.size() >= n) continue;
    auto witness = exact_active_witness(normals, n, subset);
    if (!witness) continue;
    const UnimodularityReport u = unimodularity_report(vectors, n);
    FaceAudit audit{subset, std::move(*witness), u.unimodular, u.invariant_factors};
    if (!audit.unimodular) {
      report.good = false;
      report.failing.push_back(audit);
    }
    report.faces.push_back(std::move(audit));
  }
  return report;
}

bool SqrtValue::is_rational() const {
  if (radicand < 0) return false;
  return mpz_perfect_square_p(radicand.get_num_mpz_t()) != 0 &&
         mpz_perfect_square_p(radicand.get_den_mpz_t()) != 0;
}

Rational SqrtValue::rational_value() const {
  if (!is_rational()) fail(ErrorCode::InvalidArgument, "sqrt(" + radicand.get_str() + ") is irrational");
  Integer num, den;
  mpz_sqrt(num.get_mpz_t(), radicand.get_num_mpz_t());
  mpz_sqrt(den.get_mpz_t(), radicand.get_den_mpz_t());
  Rational q(num, den);
  q.canonicalize();
  return q;
}

double SqrtValue::approx() const { return std::sqrt(radicand.get_d()); }

std::string SqrtValue::to_string() const {
  if (is_rational()) return rational_value().get_str();
  return "sqrt(" + radicand.get_str() + ")";
}

namespace {

std::size_t weight_dim(const std::vector<IntegerVector>& weights) {
  if (weights.empty()) return 0;
  const std::size_t d = weights.front().size();
  for (const auto& w : weights)
    if (w.size() != d) fail(ErrorCode::DimensionMismatch, "weights of differing length");
  return d;
}

}  // namespace

RationalVector standard_rep_moment_map(const std::vector<IntegerVector>& weights, const RationalVector& z) {
  if (z.size() != 2 * weights.size()) {
    fail(ErrorCode::DimensionMismatch, "point of C^k needs 2k real coordinates for k weights");
  }
  const std::size_t d = weight_dim(weights);
  RationalVector out(d, Rational(0));
  for (std::size_t i = 0; i < weights.size(); ++i) {
    Rational norm2 = z[2 * i] * z[2 * i] + z[2 * i + 1] * z[2 * i + 1];
    for (std::size_t c = 0; c < d; ++c) out[c] -= norm2 * weights[i][c];
  }
  return out;
}

RationalVector standard_rep_moment_map(const std::vector<IntegerVector>& weights, const std::vector<SqrtValue>& z) {
  if (z.size() != weights.size()) fail(ErrorCode::DimensionMismatch, "one coordinate per weight expected");
  const std::size_t d = weight_dim(weights);
  RationalVector out(d, Rational(0));
  for (std::size_t i = 0; i < weights.size(); ++i)
    for (std::size_t c = 0; c < d; ++c) out[c] -= z[i].square() * weights[i][c];
  return out;
}

std::vector<RationalVector> dual_basis(const std::vector<IntegerVector>& weights) {
  const std::size_t d = weight_dim(weights);
  if (d != weights.size()) fail(ErrorCode::DimensionMismatch, "weights must be k vectors in dimension k");
  // Rows of W are the weights; the dual basis is the rows of (W^{-1})^T.
  const RationalMatrix inv = inverse(to_rational(tuple_matrix(weights, d)));
  std::vector<RationalVector> out;
  for (std::size_t i = 0; i < d; ++i) out.push_back(inv.col(i));
  return out;
}

std::vector<SqrtValue> cut_section(const std::vector<IntegerVector>& weights, const RationalVector& eta) {
  const std::vector<RationalVector> v = dual_basis(weights);
  if (eta.size() != v.size()) fail(ErrorCode::DimensionMismatch, "point dimension differs from weight count");
  std::vector<SqrtValue> out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    Rational r = -dot(eta, v[i]);
    if (r < 0) {
      fail(ErrorCode::InvalidArgument,
           "pairing <-eta, v_" + std::to_string(i + 1) + "> = " + r.get_str() + " is negative");
    }
    out.push_back(SqrtValue{r});
  }
  return out;
}

}  // namespace toric
