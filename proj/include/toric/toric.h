/* Copyright 2026 The toric-classify Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/* C interface to libtoric.
 *
 * Every function returns a toric_status. On failure the out-parameters are
 * left untouched and toric_last_error() describes the problem; the message
 * is per thread and valid until the next failing call on that thread.
 * Objects returned through out-parameters are owned by the caller and must
 * be released with the matching *_free function. Strings returned as char*
 * are released with toric_string_free.
 */

#ifndef TORIC_TORIC_H_
#define TORIC_TORIC_H_

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define TORIC_API __declspec(dllexport)
#else
#define TORIC_API __attribute__((visibility("default")))
#endif

typedef enum toric_status {
  TORIC_OK = 0,
  TORIC_ERR_INVALID_ARGUMENT = 1,
  TORIC_ERR_DIMENSION_MISMATCH = 2,
  TORIC_ERR_NOT_UNIMODULAR = 3,
  TORIC_ERR_UNBOUNDED = 4,
  TORIC_ERR_DEGENERATE = 5,
  TORIC_ERR_PARSE = 6,
  TORIC_ERR_VALIDATION_FAILED = 7,
  TORIC_ERR_INTERNAL = 8,
  TORIC_ERR_NULL_ARGUMENT = 9,
  TORIC_ERR_OUT_OF_RANGE = 10
} toric_status;

typedef struct toric_matrix toric_matrix;
typedef struct toric_complex toric_complex;
typedef struct toric_pair toric_pair;
typedef struct toric_group toric_group;
typedef struct toric_report toric_report;

TORIC_API const char* toric_version(void);
TORIC_API const char* toric_last_error(void);
TORIC_API const char* toric_status_string(toric_status status);
TORIC_API void toric_string_free(char* s);

/* Integer matrices. Entries are exchanged as decimal strings so that
 * arbitrary precision survives the boundary. */
TORIC_API toric_status toric_matrix_create(size_t rows, size_t cols, toric_matrix** out);
TORIC_API void toric_matrix_free(toric_matrix* m);
TORIC_API size_t toric_matrix_rows(const toric_matrix* m);
TORIC_API size_t toric_matrix_cols(const toric_matrix* m);
TORIC_API toric_status toric_matrix_set(toric_matrix* m, size_t row, size_t col, const char* decimal);
TORIC_API toric_status toric_matrix_set_i64(toric_matrix* m, size_t row, size_t col, long long value);
TORIC_API toric_status toric_matrix_get(const toric_matrix* m, size_t row, size_t col, char** decimal);

/* U * A * V == D. Any of D, U, V may be NULL when not wanted. */
TORIC_API toric_status toric_smith(const toric_matrix* a, toric_matrix** d, toric_matrix** u, toric_matrix** v);
/* U * A == H in row-style Hermite form. */
TORIC_API toric_status toric_hermite(const toric_matrix* a, toric_matrix** h, toric_matrix** u);
/* Rows of `vectors` as a tuple in Z^cols; *result is 1 when unimodular. */
TORIC_API toric_status toric_is_unimodular(const toric_matrix* vectors, int* result);

/* Simplicial complexes given by facets: simplex i has sizes[i] vertices,
 * stored consecutively in `vertices`. */
TORIC_API toric_status toric_complex_create(size_t vertex_count, const size_t* vertices, const size_t* sizes,
                                            size_t simplex_count, toric_complex** out);
TORIC_API toric_status toric_complex_from_json(const char* document, toric_complex** out);
TORIC_API void toric_complex_free(toric_complex* k);
TORIC_API int toric_complex_dimension(const toric_complex* k);
TORIC_API size_t toric_complex_count(const toric_complex* k, int dim);

/* Subcomplex generated by simplices written in ambient labels. */
TORIC_API toric_status toric_pair_create(const toric_complex* ambient, const size_t* vertices, const size_t* sizes,
                                         size_t simplex_count, toric_pair** out);
TORIC_API toric_status toric_pair_closed_star(const toric_complex* ambient, const size_t* marked, size_t marked_count,
                                              toric_pair** out);
TORIC_API toric_status toric_pair_from_json(const char* document, toric_pair** out);
TORIC_API void toric_pair_free(toric_pair* p);

/* Finitely generated abelian groups Z^r + Z/d_1 + ... */
TORIC_API void toric_group_free(toric_group* g);
TORIC_API size_t toric_group_free_rank(const toric_group* g);
TORIC_API size_t toric_group_torsion_count(const toric_group* g);
TORIC_API toric_status toric_group_torsion(const toric_group* g, size_t i, char** decimal);
TORIC_API toric_status toric_group_to_string(const toric_group* g, char** text);

/* H^k(K; Z^lattice_rank); lattice_rank 1 gives integer coefficients. */
TORIC_API toric_status toric_cohomology(const toric_complex* k, int degree, size_t lattice_rank, toric_group** out);
TORIC_API toric_status toric_cohomology_rational(const toric_complex* k, int degree, size_t* dim);
TORIC_API toric_status toric_relative_cohomology(const toric_pair* p, int degree, toric_group** integral,
                                                 size_t* rational_dim);
/* *exact is 1 when every node of the long exact sequence up to max_degree
 * is exact over Q. */
TORIC_API toric_status toric_verify_les(const toric_pair* p, int max_degree, int* exact);
/* Dimension of the classes of H^2(ambient; Q) that vanish on the subcomplex. */
TORIC_API toric_status toric_good_form_dim(const toric_pair* p, size_t* dim);

/* Classifies a document whose payload is "classification"; *result_json
 * receives the machine report. */
TORIC_API toric_status toric_classify_json(const char* document, char** result_json);

/* Command runner shared with the CLI. `degree` < 0 means "not given"; NULL
 * strings take their defaults. */
typedef struct toric_run_options {
  const char* command;  /* snf | check | cohomology | relative | classify */
  const char* target;   /* check: unimodular | cone | good-cone | polytope */
  int degree;
  const char* coeff;    /* Z | Q | lattice:n */
  const char* property; /* check cone / check polytope */
} toric_run_options;

TORIC_API toric_status toric_run(const toric_run_options* options, const char* document, size_t length,
                                 const char* source_name, toric_report** out);
TORIC_API void toric_report_free(toric_report* r);
TORIC_API int toric_report_exit_code(const toric_report* r);
TORIC_API const char* toric_report_text(const toric_report* r);
TORIC_API const char* toric_report_json(const toric_report* r);

#ifdef __cplusplus
}
#endif

#endif /* TORIC_TORIC_H_ */
