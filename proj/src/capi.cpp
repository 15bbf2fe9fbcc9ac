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

#include "toric/toric.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <new>
#include <string>
#include <vector>

#include "toric/classifier.hpp"
#include "toric/complex.hpp"
#include "toric/document.hpp"
#include "toric/lattice.hpp"

struct toric_matrix {
  toric::IntegerMatrix m;
};
struct toric_complex {
  toric::SimplicialComplex k;
};
struct toric_pair {
  toric::PairInclusion p;
};
struct toric_group {
  toric::AbelianGroupPresentation g;
};
struct toric_report {
  toric::Report r;
};

namespace {

thread_local std::string last_error;

toric_status status_of(toric::ErrorCode code) {
  using toric::ErrorCode;
  switch (code) {
    case ErrorCode::InvalidArgument: return TORIC_ERR_INVALID_ARGUMENT;
    case ErrorCode::DimensionMismatch: return TORIC_ERR_DIMENSION_MISMATCH;
    case ErrorCode::NotUnimodular: return TORIC_ERR_NOT_UNIMODULAR;
    case ErrorCode::Unbounded: return TORIC_ERR_UNBOUNDED;
    case ErrorCode::Degenerate: return TORIC_ERR_DEGENERATE;
    case ErrorCode::Parse: return TORIC_ERR_PARSE;
    case ErrorCode::ValidationFailed: return TORIC_ERR_VALIDATION_FAILED;
    case ErrorCode::Internal: return TORIC_ERR_INTERNAL;
  }
  return TORIC_ERR_INTERNAL;
}

toric_status set_error(toric_status s, const std::string& msg) {
  last_error = msg;
  return s;
}

template <class F>
toric_status guard(F&& f) {
  try {
    f();
    return TORIC_OK;
  } catch (const toric::Error& e) {
    return set_error(status_of(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return set_error(TORIC_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return set_error(TORIC_ERR_INTERNAL, e.what());
  }
}

#define TORIC_REQUIRE(ptr) \
  if (!(ptr)) return set_error(TORIC_ERR_NULL_ARGUMENT, #ptr " is NULL")

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

std::vector<toric::Simplex> unpack(const size_t* vertices, const size_t* sizes, size_t count) {
  std::vector<toric::Simplex> out;
  std::size_t at = 0;
  for (std::size_t i = 0; i < count; ++i) {
    out.emplace_back(vertices + at, vertices + at + sizes[i]);
    at += sizes[i];
  }
  return out;
}

}  // namespace

extern "C" {

const char* toric_version(void) { return "1.0.0"; }

const char* toric_last_error(void) { return last_error.c_str(); }

const char* toric_status_string(toric_status status) {
  switch (status) {
    case TORIC_OK: return "ok";
    case TORIC_ERR_INVALID_ARGUMENT: return "invalid argument";
    case TORIC_ERR_DIMENSION_MISMATCH: return "dimension mismatch";
    case TORIC_ERR_NOT_UNIMODULAR: return "not unimodular";
    case TORIC_ERR_UNBOUNDED: return "unbounded";
    case TORIC_ERR_DEGENERATE: return "degenerate";
    case TORIC_ERR_PARSE: return "parse error";
    case TORIC_ERR_VALIDATION_FAILED: return "validation failed";
    case TORIC_ERR_INTERNAL: return "internal error";
    case TORIC_ERR_NULL_ARGUMENT: return "null argument";
    case TORIC_ERR_OUT_OF_RANGE: return "out of range";
  }
  return "unknown status";
}

void toric_string_free(char* s) { std::free(s); }

toric_status toric_matrix_create(size_t rows, size_t cols, toric_matrix** out) {
  TORIC_REQUIRE(out);
  return guard([&] { *out = new toric_matrix{toric::IntegerMatrix(rows, cols)}; });
}

void toric_matrix_free(toric_matrix* m) { delete m; }
size_t toric_matrix_rows(const toric_matrix* m) { return m ? m->m.rows() : 0; }
size_t toric_matrix_cols(const toric_matrix* m) { return m ? m->m.cols() : 0; }

toric_status toric_matrix_set(toric_matrix* m, size_t row, size_t col, const char* decimal) {
  TORIC_REQUIRE(m);
  TORIC_REQUIRE(decimal);
  if (row >= m->m.rows() || col >= m->m.cols()) return set_error(TORIC_ERR_OUT_OF_RANGE, "entry index out of range");
  return guard([&] { m->m(row, col) = toric::parse_integer(decimal); });
}

toric_status toric_matrix_set_i64(toric_matrix* m, size_t row, size_t col, long long value) {
  TORIC_REQUIRE(m);
  if (row >= m->m.rows() || col >= m->m.cols()) return set_error(TORIC_ERR_OUT_OF_RANGE, "entry index out of range");
  return guard([&] { m->m(row, col) = toric::Integer(std::to_string(value)); });
}

toric_status toric_matrix_get(const toric_matrix* m, size_t row, size_t col, char** decimal) {
  TORIC_REQUIRE(m);
  TORIC_REQUIRE(decimal);
  if (row >= m->m.rows() || col >= m->m.cols()) return set_error(TORIC_ERR_OUT_OF_RANGE, "entry index out of range");
  return guard([&] { *decimal = dup_string(m->m(row, col).get_str()); });
}

toric_status toric_smith(const toric_matrix* a, toric_matrix** d, toric_matrix** u, toric_matrix** v) {
  TORIC_REQUIRE(a);
  return guard([&] {
    toric::SmithDecomposition s = toric::smith_normal_form(a->m);
    std::unique_ptr<toric_matrix> D(new toric_matrix{std::move(s.D)});
    std::unique_ptr<toric_matrix> U(new toric_matrix{std::move(s.U)});
    std::unique_ptr<toric_matrix> V(new toric_matrix{std::move(s.V)});
    if (d) *d = D.release();
    if (u) *u = U.release();
    if (v) *v = V.release();
  });
}

toric_status toric_hermite(const toric_matrix* a, toric_matrix** h, toric_matrix** u) {
  TORIC_REQUIRE(a);
  return guard([&] {
    toric::HermiteDecomposition hd = toric::hermite_normal_form(a->m);
    std::unique_ptr<toric_matrix> H(new toric_matrix{std::move(hd.H)});
    std::unique_ptr<toric_matrix> U(new toric_matrix{std::move(hd.U)});
    if (h) *h = H.release();
    if (u) *u = U.release();
  });
}

toric_status toric_is_unimodular(const toric_matrix* vectors, int* result) {
  TORIC_REQUIRE(vectors);
  TORIC_REQUIRE(result);
  return guard([&] { *result = toric::is_unimodular_tuple(vectors->m.row_list(), vectors->m.cols()) ? 1 : 0; });
}

toric_status toric_complex_create(size_t vertex_count, const size_t* vertices, const size_t* sizes,
                                  size_t simplex_count, toric_complex** out) {
  TORIC_REQUIRE(out);
  if (simplex_count > 0 && (!vertices || !sizes)) return set_error(TORIC_ERR_NULL_ARGUMENT, "simplex arrays are NULL");
  return guard([&] {
    *out = new toric_complex{
        toric::SimplicialComplex::from_facets(vertex_count, unpack(vertices, sizes, simplex_count))};
  });
}

toric_status toric_complex_from_json(const char* document, toric_complex** out) {
  TORIC_REQUIRE(document);
  TORIC_REQUIRE(out);
  return guard([&] { *out = new toric_complex{toric::load_complex(document)}; });
}

void toric_complex_free(toric_complex* k) { delete k; }
int toric_complex_dimension(const toric_complex* k) { return k ? k->k.dimension() : -1; }
size_t toric_complex_count(const toric_complex* k, int dim) { return k ? k->k.count(dim) : 0; }

toric_status toric_pair_create(const toric_complex* ambient, const size_t* vertices, const size_t* sizes,
                               size_t simplex_count, toric_pair** out) {
  TORIC_REQUIRE(ambient);
  TORIC_REQUIRE(out);
  if (simplex_count > 0 && (!vertices || !sizes)) return set_error(TORIC_ERR_NULL_ARGUMENT, "simplex arrays are NULL");
  return guard([&] {
    *out = new toric_pair{
        toric::PairInclusion::from_ambient_simplices(ambient->k, unpack(vertices, sizes, simplex_count))};
  });
}

toric_status toric_pair_closed_star(const toric_complex* ambient, const size_t* marked, size_t marked_count,
                                    toric_pair** out) {
  TORIC_REQUIRE(ambient);
  TORIC_REQUIRE(out);
  if (marked_count > 0 && !marked) return set_error(TORIC_ERR_NULL_ARGUMENT, "marked is NULL");
  return guard([&] {
    *out = new toric_pair{toric::PairInclusion::closed_star(
        ambient->k, std::vector<std::size_t>(marked, marked + marked_count))};
  });
}

toric_status toric_pair_from_json(const char* document, toric_pair** out) {
  TORIC_REQUIRE(document);
  TORIC_REQUIRE(out);
  return guard([&] { *out = new toric_pair{toric::load_pair(document)}; });
}

void toric_pair_free(toric_pair* p) { delete p; }

void toric_group_free(toric_group* g) { delete g; }
size_t toric_group_free_rank(const toric_group* g) { return g ? g->g.free_rank : 0; }
size_t toric_group_torsion_count(const toric_group* g) { return g ? g->g.invariant_factors.size() : 0; }

toric_status toric_group_torsion(const toric_group* g, size_t i, char** decimal) {
  TORIC_REQUIRE(g);
  TORIC_REQUIRE(decimal);
  if (i >= g->g.invariant_factors.size()) return set_error(TORIC_ERR_OUT_OF_RANGE, "torsion index out of range");
  return guard([&] { *decimal = dup_string(g->g.invariant_factors[i].get_str()); });
}

toric_status toric_group_to_string(const toric_group* g, char** text) {
  TORIC_REQUIRE(g);
  TORIC_REQUIRE(text);
  return guard([&] { *text = dup_string(g->g.to_string()); });
}

toric_status toric_cohomology(const toric_complex* k, int degree, size_t lattice_rank, toric_group** out) {
  TORIC_REQUIRE(k);
  TORIC_REQUIRE(out);
  return guard([&] { *out = new toric_group{toric::cohomology_lattice(k->k, degree, lattice_rank)}; });
}

toric_status toric_cohomology_rational(const toric_complex* k, int degree, size_t* dim) {
  TORIC_REQUIRE(k);
  TORIC_REQUIRE(dim);
  return guard([&] { *dim = toric::cohomology_rational(k->k, degree); });
}

toric_status toric_relative_cohomology(const toric_pair* p, int degree, toric_group** integral, size_t* rational_dim) {
  TORIC_REQUIRE(p);
  return guard([&] {
    toric::RelativeCohomology rc = toric::relative_cohomology(p->p, degree);
    if (integral) *integral = new toric_group{std::move(rc.integral)};
    if (rational_dim) *rational_dim = rc.rational_dim;
  });
}

toric_status toric_verify_les(const toric_pair* p, int max_degree, int* exact) {
  TORIC_REQUIRE(p);
  TORIC_REQUIRE(exact);
  if (max_degree < 0) return set_error(TORIC_ERR_INVALID_ARGUMENT, "max_degree must be nonnegative");
  return guard([&] { *exact = toric::verify_long_exact_sequence(p->p, max_degree).exact ? 1 : 0; });
}

toric_status toric_good_form_dim(const toric_pair* p, size_t* dim) {
  TORIC_REQUIRE(p);
  TORIC_REQUIRE(dim);
  return guard([&] { *dim = toric::good_form_subspace_dim(p->p).dim(); });
}

toric_status toric_classify_json(const char* document, char** result_json) {
  TORIC_REQUIRE(document);
  TORIC_REQUIRE(result_json);
  return guard([&] {
    const toric::ClassificationResult r = toric::classify(toric::load_classification(document));
    *result_json = dup_string(toric::render_json(r));
  });
}

toric_status toric_run(const toric_run_options* options, const char* document, size_t length,
                       const char* source_name, toric_report** out) {
  TORIC_REQUIRE(options);
  TORIC_REQUIRE(options->command);
  TORIC_REQUIRE(out);
  if (length > 0 && !document) return set_error(TORIC_ERR_NULL_ARGUMENT, "document is NULL");
  return guard([&] {
    toric::RunOptions opt;
    opt.command = options->command;
    if (options->target) opt.target = options->target;
    if (options->degree >= 0) opt.degree = options->degree;
    if (options->coeff) opt.coeff = options->coeff;
    if (options->property) opt.property = options->property;
    const std::string_view source = length ? std::string_view(document, length) : std::string_view();
    *out = new toric_report{toric::run_document(opt, source, source_name ? source_name : "<input>")};
  });
}

void toric_report_free(toric_report* r) { delete r; }
int toric_report_exit_code(const toric_report* r) { return r ? r->r.exit_code : toric::kExitInternal; }
const char* toric_report_text(const toric_report* r) { return r ? r->r.text.c_str() : ""; }
const char* toric_report_json(const toric_report* r) { return r ? r->r.json.c_str() : ""; }

}  // extern "C"
