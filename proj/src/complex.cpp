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

#include "toric/complex.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "toric/lattice.hpp"

namespace toric {

namespace {

std::string describe(const Simplex& s) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < s.size(); ++i) os << (i ? "," : "") << s[i];
  os << ']';
  return os.str();
}

Simplex drop(const Simplex& s, std::size_t i) {
  Simplex out;
  out.reserve(s.size() - 1);
  for (std::size_t j = 0; j < s.size(); ++j)
    if (j != i) out.push_back(s[j]);
  return out;
}

// Sorts s in place and returns the sign of the sorting permutation.
int sort_with_sign(Simplex& s) {
  int sign = 1;
  for (std::size_t i = 1; i < s.size(); ++i)
    for (std::size_t j = i; j > 0 && s[j - 1] > s[j]; --j) {
      std::swap(s[j - 1], s[j]);
      sign = -sign;
    }
  return sign;
}

}  // namespace

SimplicialComplex SimplicialComplex::from_simplices(std::size_t vertex_count, std::vector<Simplex> simplices) {
  std::vector<std::set<Simplex>> levels;
  auto add = [&](const Simplex& s) {
    const std::size_t d = s.size() - 1;
    if (levels.size() <= d) levels.resize(d + 1);
    return levels[d].insert(s).second;
  };
  for (std::size_t v = 0; v < vertex_count; ++v) add(Simplex{v});
  for (auto& s : simplices) {
    if (s.empty()) fail(ErrorCode::InvalidArgument, "empty simplex");
    for (std::size_t i = 1; i < s.size(); ++i)
      if (s[i - 1] >= s[i]) {
        fail(ErrorCode::InvalidArgument, "simplex " + describe(s) + " is not strictly increasing");
      }
    if (s.back() >= vertex_count) {
      fail(ErrorCode::InvalidArgument, "simplex " + describe(s) + " uses a vertex outside 0.." +
                                           std::to_string(vertex_count ? vertex_count - 1 : 0));
    }
    if (!add(s) && s.size() > 1) fail(ErrorCode::InvalidArgument, "simplex " + describe(s) + " listed twice");
  }
  for (std::size_t d = 1; d < levels.size(); ++d)
    for (const auto& s : levels[d])
      for (std::size_t i = 0; i < s.size(); ++i) {
        const Simplex f = drop(s, i);
        if (!levels[d - 1].count(f)) {
          fail(ErrorCode::InvalidArgument, "face " + describe(f) + " of simplex " + describe(s) + " is missing");
        }
      }

  SimplicialComplex K;
  K.vertex_count_ = vertex_count;
  for (auto& level : levels) K.by_dim_.emplace_back(level.begin(), level.end());
  while (!K.by_dim_.empty() && K.by_dim_.back().empty()) K.by_dim_.pop_back();

  for (int k = 1; k + 1 <= K.dimension(); ++k) {
    if (!(K.boundary(k) * K.boundary(k + 1)).is_zero()) fail(ErrorCode::Internal, "boundary of a boundary is nonzero");
  }
  return K;
}

SimplicialComplex SimplicialComplex::from_facets(std::size_t vertex_count, const std::vector<Simplex>& facets) {
  std::set<Simplex> all;
  std::vector<Simplex> stack;
  for (auto s : facets) {
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end()) {
      fail(ErrorCode::InvalidArgument, "simplex " + describe(s) + " repeats a vertex");
    }
    stack.push_back(std::move(s));
  }
  while (!stack.empty()) {
    Simplex s = std::move(stack.back());
    stack.pop_back();
    if (s.empty() || !all.insert(s).second) continue;
    if (s.size() > 1)
      for (std::size_t i = 0; i < s.size(); ++i) stack.push_back(drop(s, i));
  }
  return from_simplices(vertex_count, std::vector<Simplex>(all.begin(), all.end()));
}

std::size_t SimplicialComplex::count(int k) const {
  if (k < 0 || k > dimension()) return 0;
  return by_dim_[static_cast<std::size_t>(k)].size();
}

const std::vector<Simplex>& SimplicialComplex::simplices(int k) const {
  static const std::vector<Simplex> none;
  if (k < 0 || k > dimension()) return none;
  return by_dim_[static_cast<std::size_t>(k)];
}

std::optional<std::size_t> SimplicialComplex::index_of(const Simplex& s) const {
  if (s.empty()) return std::nullopt;
  const auto& level = simplices(static_cast<int>(s.size()) - 1);
  const auto it = std::lower_bound(level.begin(), level.end(), s);
  if (it == level.end() || *it != s) return std::nullopt;
  return static_cast<std::size_t>(it - level.begin());
}

IntegerMatrix SimplicialComplex::boundary(int k) const {
  IntegerMatrix B(count(k - 1), count(k));
  if (k <= 0) return B;
  const auto& cells = simplices(k);
  for (std::size_t c = 0; c < cells.size(); ++c)
    for (std::size_t i = 0; i < cells[c].size(); ++i) {
      const auto row = index_of(drop(cells[c], i));
      B(*row, c) = (i % 2 == 0) ? 1 : -1;
    }
  return B;
}

IntegerMatrix SimplicialComplex::coboundary(int k) const {
  if (k < 0) return IntegerMatrix(count(0), 0);
  return boundary(k + 1).transpose();
}

long SimplicialComplex::euler_characteristic() const {
  long chi = 0;
  for (int k = 0; k <= dimension(); ++k) chi += (k % 2 == 0 ? 1 : -1) * static_cast<long>(count(k));
  return chi;
}

PairInclusion::PairInclusion(SimplicialComplex ambient, SimplicialComplex sub, std::vector<std::size_t> vertex_map)
    : ambient_(std::move(ambient)), sub_(std::move(sub)), vertex_map_(std::move(vertex_map)) {
  if (vertex_map_.size() != sub_.vertex_count()) {
    fail(ErrorCode::InvalidArgument, "vertex map must have one entry per subcomplex vertex");
  }
  std::set<std::size_t> image;
  for (auto v : vertex_map_) {
    if (v >= ambient_.vertex_count()) fail(ErrorCode::InvalidArgument, "vertex map leaves the ambient complex");
    if (!image.insert(v).second) fail(ErrorCode::InvalidArgument, "vertex map is not injective");
  }
  for (int k = 0; k <= sub_.dimension(); ++k)
    for (const auto& s : sub_.simplices(k)) {
      Simplex img;
      for (auto v : s) img.push_back(vertex_map_[v]);
      sort_with_sign(img);
      if (!ambient_.contains(img)) {
        fail(ErrorCode::InvalidArgument, "image " + describe(img) + " of a subcomplex simplex is not in the ambient complex");
      }
    }
}

PairInclusion PairInclusion::from_ambient_simplices(SimplicialComplex ambient, const std::vector<Simplex>& simplices) {
  std::set<std::size_t> used;
  for (const auto& s : simplices) used.insert(s.begin(), s.end());
  std::vector<std::size_t> map(used.begin(), used.end());
  std::vector<Simplex> local;
  for (const auto& s : simplices) {
    Simplex t;
    for (auto v : s) t.push_back(static_cast<std::size_t>(std::lower_bound(map.begin(), map.end(), v) - map.begin()));
    local.push_back(std::move(t));
  }
  SimplicialComplex sub = SimplicialComplex::from_facets(map.size(), local);
  return PairInclusion(std::move(ambient), std::move(sub), std::move(map));
}

PairInclusion PairInclusion::closed_star(SimplicialComplex ambient, const std::vector<std::size_t>& marked) {
  std::vector<Simplex> star;
  for (auto v : marked)
    if (v >= ambient.vertex_count()) fail(ErrorCode::InvalidArgument, "marked vertex outside the complex");
  for (int k = 0; k <= ambient.dimension(); ++k)
    for (const auto& s : ambient.simplices(k)) {
      const bool hit = std::any_of(marked.begin(), marked.end(),
                                   [&](std::size_t v) { return std::binary_search(s.begin(), s.end(), v); });
      if (hit) star.push_back(s);
    }
  return from_ambient_simplices(std::move(ambient), star);
}

PairInclusion PairInclusion::identity(SimplicialComplex ambient) {
  SimplicialComplex copy = ambient;
  std::vector<std::size_t> map(ambient.vertex_count());
  for (std::size_t i = 0; i < map.size(); ++i) map[i] = i;
  return PairInclusion(std::move(ambient), std::move(copy), std::move(map));
}

PairInclusion PairInclusion::empty(SimplicialComplex ambient) {
  return PairInclusion(std::move(ambient), SimplicialComplex{}, {});
}

IntegerMatrix PairInclusion::restriction(int k) const {
  IntegerMatrix R(sub_.count(k), ambient_.count(k));
  const auto& cells = sub_.simplices(k);
  for (std::size_t r = 0; r < cells.size(); ++r) {
    Simplex img;
    for (auto v : cells[r]) img.push_back(vertex_map_[v]);
    const int sign = sort_with_sign(img);
    R(r, *ambient_.index_of(img)) = sign;
  }
  return R;
}

AbelianGroupPresentation AbelianGroupPresentation::power(std::size_t n) const {
  AbelianGroupPresentation out;
  out.free_rank = free_rank * n;
  // Invariant factors of a direct sum of identical chains: each repeated n
  // times, kept in divisibility order.
  for (const auto& d : invariant_factors)
    for (std::size_t i = 0; i < n; ++i) out.invariant_factors.push_back(d);
  return out;
}

std::string AbelianGroupPresentation::to_string() const {
  if (is_trivial()) return "0";
  std::vector<std::string> parts;
  if (free_rank == 1) parts.push_back("Z");
  else if (free_rank > 1) parts.push_back("Z^" + std::to_string(free_rank));
  for (const auto& d : invariant_factors) parts.push_back("Z/" + d.get_str());
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? " ⊕ " : "") + parts[i];
  return out;
}

CochainComplex::CochainComplex(std::vector<std::size_t> dims, std::vector<IntegerMatrix> differentials)
    : dims_(std::move(dims)), d_(std::move(differentials)) {
  if (d_.size() + 1 != dims_.size() && !(dims_.empty() && d_.empty())) {
    fail(ErrorCode::InvalidArgument, "cochain complex needs one differential between consecutive degrees");
  }
  for (std::size_t p = 0; p < d_.size(); ++p) {
    if (d_[p].rows() != dims_[p + 1] || d_[p].cols() != dims_[p]) {
      fail(ErrorCode::DimensionMismatch, "differential d^" + std::to_string(p) + " has the wrong shape");
    }
    if (p + 1 < d_.size() && !(d_[p + 1] * d_[p]).is_zero()) {
      fail(ErrorCode::Internal, "d^" + std::to_string(p + 1) + " d^" + std::to_string(p) + " != 0");
    }
  }
}

CochainComplex CochainComplex::of(const SimplicialComplex& K) {
  std::vector<std::size_t> dims;
  std::vector<IntegerMatrix> d;
  for (int p = 0; p <= K.dimension(); ++p) dims.push_back(K.count(p));
  for (int p = 0; p < K.dimension(); ++p) d.push_back(K.coboundary(p));
  return CochainComplex(std::move(dims), std::move(d));
}

CochainComplex CochainComplex::mapping_cone(const PairInclusion& pair) {
  const SimplicialComplex& K = pair.ambient();
  const SimplicialComplex& L = pair.sub();
  const int top = std::max(K.dimension(), L.dimension() + 1);
  std::vector<std::size_t> dims;
  for (int p = 0; p <= top; ++p) dims.push_back(K.count(p) + L.count(p - 1));
  std::vector<IntegerMatrix> d;
  for (int p = 0; p < top; ++p) {
    // rows: C^{p+1}(K) ⊕ C^p(L); cols: C^p(K) ⊕ C^{p-1}(L)
    const std::size_t kp = K.count(p), kp1 = K.count(p + 1), lp = L.count(p), lm = L.count(p - 1);
    IntegerMatrix D(kp1 + lp, kp + lm);
    const IntegerMatrix dK = K.coboundary(p);
    const IntegerMatrix R = pair.restriction(p);
    for (std::size_t r = 0; r < kp1; ++r)
      for (std::size_t c = 0; c < kp; ++c) D(r, c) = dK(r, c);
    for (std::size_t r = 0; r < lp; ++r)
      for (std::size_t c = 0; c < kp; ++c) D(kp1 + r, c) = R(r, c);
    if (p >= 1) {
      const IntegerMatrix dL = L.coboundary(p - 1);
      for (std::size_t r = 0; r < lp; ++r)
        for (std::size_t c = 0; c < lm; ++c) D(kp1 + r, kp + c) = -dL(r, c);
    }
    d.push_back(std::move(D));
  }
  return CochainComplex(std::move(dims), std::move(d));
}

std::size_t CochainComplex::dim(int p) const {
  if (p < 0 || p > top_degree()) return 0;
  return dims_[static_cast<std::size_t>(p)];
}

IntegerMatrix CochainComplex::differential(int p) const {
  if (p < 0 || p >= static_cast<int>(d_.size())) return IntegerMatrix(dim(p + 1), dim(p));
  return d_[static_cast<std::size_t>(p)];
}

AbelianGroupPresentation integer_cohomology(const CochainComplex& C, int k) {
  AbelianGroupPresentation out;
  if (k < 0) return out;
  // H^k = ker d^k / im d^{k-1}; ker d^k is saturated, so the torsion is that
  // of coker d^{k-1}.
  const SmithDecomposition incoming = smith_normal_form(C.differential(k - 1));
  const SmithDecomposition outgoing = smith_normal_form(C.differential(k));
  out.free_rank = C.dim(k) - incoming.rank() - outgoing.rank();
  for (const auto& d : incoming.invariant_factors())
    if (d > 1) out.invariant_factors.push_back(d);
  return out;
}

std::size_t rational_cohomology_dim(const CochainComplex& C, int k) {
  if (k < 0) return 0;
  return C.dim(k) - rank(C.differential(k - 1)) - rank(C.differential(k));
}

AbelianGroupPresentation cohomology_integer(const SimplicialComplex& K, int k) {
  return integer_cohomology(CochainComplex::of(K), k);
}

AbelianGroupPresentation cohomology_lattice(const SimplicialComplex& K, int k, std::size_t n) {
  if (n == 0) fail(ErrorCode::InvalidArgument, "lattice rank must be at least 1");
  return cohomology_integer(K, k).power(n);
}

std::size_t cohomology_rational(const SimplicialComplex& K, int k) {
  return rational_cohomology_dim(CochainComplex::of(K), k);
}

RelativeCohomology relative_cohomology(const PairInclusion& pair, int k) {
  const CochainComplex cone = CochainComplex::mapping_cone(pair);
  return {integer_cohomology(cone, k), rational_cohomology_dim(cone, k)};
}

namespace {

RationalMatrix columns(const std::vector<RationalVector>& vs, std::size_t dim) {
  RationalMatrix m(dim, vs.size());
  for (std::size_t c = 0; c < vs.size(); ++c)
    for (std::size_t r = 0; r < dim; ++r) m(r, c) = vs[c][r];
  return m;
}

// Independent columns of m, as vectors.
std::vector<RationalVector> column_basis(const RationalMatrix& m) {
  const RowEchelon e = row_echelon(m);
  std::vector<RationalVector> out;
  for (auto c : e.pivot_cols) out.push_back(m.col(c));
  return out;
}

}  // namespace

CohomologyBasis::CohomologyBasis(const CochainComplex& C, int p) : cochain_dim_(C.dim(p)) {
  boundaries_ = column_basis(to_rational(C.differential(p - 1)));
  const std::vector<RationalVector> cocycles = nullspace(to_rational(C.differential(p)));
  std::vector<RationalVector> span = boundaries_;
  std::size_t r = span.size();
  for (const auto& z : cocycles) {
    span.push_back(z);
    const std::size_t next = rank(columns(span, cochain_dim_));
    if (next > r) {
      representatives_.push_back(z);
      r = next;
    } else {
      span.pop_back();
    }
  }
  std::vector<RationalVector> all = boundaries_;
  all.insert(all.end(), representatives_.begin(), representatives_.end());
  frame_ = columns(all, cochain_dim_);
}

CohomologyBasis::CohomologyBasis(std::size_t cochain_dim, std::vector<RationalVector> boundaries,
                                 std::vector<RationalVector> representatives)
    : cochain_dim_(cochain_dim), boundaries_(std::move(boundaries)), representatives_(std::move(representatives)) {
  std::vector<RationalVector> all = boundaries_;
  all.insert(all.end(), representatives_.begin(), representatives_.end());
  frame_ = columns(all, cochain_dim_);
  if (rank(frame_) != all.size()) fail(ErrorCode::InvalidArgument, "cohomology frame is not independent");
}

RationalVector CohomologyBasis::coordinates(const RationalVector& cocycle) const {
  if (cocycle.size() != cochain_dim_) fail(ErrorCode::DimensionMismatch, "cochain has the wrong length");
  RationalVector c;
  if (!solve(frame_, cocycle, c)) fail(ErrorCode::InvalidArgument, "vector is not a cocycle");
  return RationalVector(c.begin() + static_cast<std::ptrdiff_t>(boundaries_.size()), c.end());
}

RationalMatrix induced_map(const RationalMatrix& F, const std::vector<RationalVector>& source_reps,
                           const CohomologyBasis& target) {
  RationalMatrix M(target.dim(), source_reps.size());
  for (std::size_t j = 0; j < source_reps.size(); ++j) {
    const RationalVector coords = target.coordinates(F.apply(source_reps[j]));
    for (std::size_t i = 0; i < coords.size(); ++i) M(i, j) = coords[i];
  }
  return M;
}

RationalMatrix restriction_map(const PairInclusion& pair, int p) {
  const CohomologyBasis source(CochainComplex::of(pair.ambient()), p);
  const CohomologyBasis target(CochainComplex::of(pair.sub()), p);
  return induced_map(to_rational(pair.restriction(p)), source.representatives(), target);
}

RationalMatrix restriction_map_h2(const PairInclusion& pair) { return restriction_map(pair, 2); }

namespace {

// (α, β) -> α on C^p(f) = C^p(K) ⊕ C^{p-1}(L)
RationalMatrix cone_projection(const PairInclusion& pair, int p) {
  const std::size_t kp = pair.ambient().count(p), lm = pair.sub().count(p - 1);
  RationalMatrix P(kp, kp + lm);
  for (std::size_t i = 0; i < kp; ++i) P(i, i) = 1;
  return P;
}

// β -> (0, β) from C^p(L) into C^{p+1}(f)
RationalMatrix cone_inclusion(const PairInclusion& pair, int p) {
  const std::size_t kp1 = pair.ambient().count(p + 1), lp = pair.sub().count(p);
  RationalMatrix I(kp1 + lp, lp);
  for (std::size_t i = 0; i < lp; ++i) I(kp1 + i, i) = 1;
  return I;
}

}  // namespace

LesReport verify_long_exact_sequence(const PairInclusion& pair, int max_degree) {
  const CochainComplex cone = CochainComplex::mapping_cone(pair);
  const CochainComplex CK = CochainComplex::of(pair.ambient());
  const CochainComplex CL = CochainComplex::of(pair.sub());

  struct Stage {
    std::string label;
    CohomologyBasis basis;
  };
  std::vector<Stage> stages;
  std::vector<RationalMatrix> maps;  // maps[i] : stages[i] -> stages[i+1]
  for (int p = 0; p <= max_degree; ++p) {
    const std::string deg = std::to_string(p);
    stages.push_back({"H^" + deg + "(f)", CohomologyBasis(cone, p)});
    stages.push_back({"H^" + deg + "(K)", CohomologyBasis(CK, p)});
    stages.push_back({"H^" + deg + "(L)", CohomologyBasis(CL, p)});
  }
  stages.push_back({"H^" + std::to_string(max_degree + 1) + "(f)", CohomologyBasis(cone, max_degree + 1)});
  for (int p = 0; p <= max_degree; ++p) {
    const std::size_t base = static_cast<std::size_t>(3 * p);
    maps.push_back(induced_map(cone_projection(pair, p), stages[base].basis.representatives(), stages[base + 1].basis));
    maps.push_back(induced_map(to_rational(pair.restriction(p)), stages[base + 1].basis.representatives(),
                               stages[base + 2].basis));
    maps.push_back(induced_map(cone_inclusion(pair, p), stages[base + 2].basis.representatives(),
                               stages[base + 3].basis));
  }

  LesReport report;
  // The last stage only receives a map; exactness there would need the next
  // outgoing map, so it is not a checked node.
  for (std::size_t i = 0; i + 1 < stages.size(); ++i) {
    LesNode node;
    node.label = stages[i].label;
    node.dim = stages[i].basis.dim();
    const RationalMatrix& out = maps[i];
    node.rank_out = rank(out);
    if (i > 0) {
      const RationalMatrix& in = maps[i - 1];
      node.rank_in = rank(in);
      node.composition_zero = (out * in).is_zero();
    }
    node.exact = node.composition_zero && node.rank_in + node.rank_out == node.dim;
    report.exact = report.exact && node.exact;
    report.nodes.push_back(std::move(node));
  }
  return report;
}

GoodFormReport good_form_subspace_dim(const PairInclusion& wbar) {
  GoodFormReport report;
  const RationalMatrix restrict = restriction_map_h2(wbar);
  report.h2_dim = restrict.cols();
  report.kernel_dim = report.h2_dim - rank(restrict);

  const CohomologyBasis relative(CochainComplex::mapping_cone(wbar), 2);
  const CohomologyBasis absolute(CochainComplex::of(wbar.ambient()), 2);
  report.image_dim = rank(induced_map(cone_projection(wbar, 2), relative.representatives(), absolute));
  if (report.image_dim != report.kernel_dim) {
    fail(ErrorCode::Internal, "ker f* and im(H^2(pair) -> H^2) disagree: " + std::to_string(report.kernel_dim) +
                                  " vs " + std::to_string(report.image_dim));
  }
  return report;
}

GoodFormReport good_form_subspace_dim(const SimplicialComplex& regW, const PairInclusion& wbar) {
  if (!(regW == wbar.ambient())) fail(ErrorCode::InvalidArgument, "W̄ is not a subcomplex of the given reg W model");
  return good_form_subspace_dim(wbar);
}

}  // namespace toric
