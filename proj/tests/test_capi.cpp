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

#include <string>
#include <thread>
#include <vector>

#include "toric/toric.h"

namespace {

std::string take(char* s) {
  std::string out = s ? s : "";
  toric_string_free(s);
  return out;
}

toric_matrix* make(const std::vector<std::vector<long long>>& rows) {
  toric_matrix* m = nullptr;
  EXPECT_EQ(toric_matrix_create(rows.size(), rows.empty() ? 0 : rows[0].size(), &m), TORIC_OK);
  for (size_t i = 0; i < rows.size(); ++i)
    for (size_t j = 0; j < rows[i].size(); ++j) EXPECT_EQ(toric_matrix_set_i64(m, i, j, rows[i][j]), TORIC_OK);
  return m;
}

std::string entry(const toric_matrix* m, size_t i, size_t j) {
  char* s = nullptr;
  EXPECT_EQ(toric_matrix_get(m, i, j, &s), TORIC_OK);
  return take(s);
}

TEST(CApi, VersionAndStatusStrings) {
  EXPECT_STREQ(toric_version(), "1.0.0");
  EXPECT_STREQ(toric_status_string(TORIC_OK), "ok");
  EXPECT_NE(std::string(toric_status_string(TORIC_ERR_PARSE)).size(), 0u);
}

TEST(CApi, SmithAndHermite) {
  toric_matrix* a = make({{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}});
  toric_matrix *d = nullptr, *u = nullptr, *v = nullptr;
  ASSERT_EQ(toric_smith(a, &d, &u, &v), TORIC_OK);
  EXPECT_EQ(entry(d, 0, 0), "2");
  EXPECT_EQ(entry(d, 1, 1), "6");
  EXPECT_EQ(entry(d, 2, 2), "12");
  EXPECT_EQ(toric_matrix_rows(u), 3u);
  EXPECT_EQ(toric_matrix_cols(v), 3u);
  toric_matrix* h = nullptr;
  ASSERT_EQ(toric_hermite(a, &h, nullptr), TORIC_OK);
  EXPECT_EQ(entry(h, 1, 0), "0");
  for (auto* m : {a, d, u, v, h}) toric_matrix_free(m);
}

TEST(CApi, BigEntriesSurviveTheBoundary) {
  toric_matrix* m = nullptr;
  ASSERT_EQ(toric_matrix_create(1, 1, &m), TORIC_OK);
  const std::string big = "-98765432109876543210987654321";
  ASSERT_EQ(toric_matrix_set(m, 0, 0, big.c_str()), TORIC_OK);
  EXPECT_EQ(entry(m, 0, 0), big);
  EXPECT_EQ(toric_matrix_set(m, 0, 0, "12x"), TORIC_ERR_PARSE);
  EXPECT_NE(std::string(toric_last_error()).size(), 0u);
  EXPECT_EQ(toric_matrix_set(m, 3, 0, "1"), TORIC_ERR_OUT_OF_RANGE);
  toric_matrix_free(m);
}

TEST(CApi, Unimodular) {
  int result = -1;
  toric_matrix* t = make({{1, 1}, {1, -1}});
  ASSERT_EQ(toric_is_unimodular(t, &result), TORIC_OK);
  EXPECT_EQ(result, 0);
  toric_matrix_free(t);
  t = make({{1, 0, 0}, {1, 1, 0}});
  ASSERT_EQ(toric_is_unimodular(t, &result), TORIC_OK);
  EXPECT_EQ(result, 1);
  toric_matrix_free(t);
}

TEST(CApi, NullArgumentsAreRejected) {
  EXPECT_EQ(toric_matrix_create(1, 1, nullptr), TORIC_ERR_NULL_ARGUMENT);
  EXPECT_EQ(toric_smith(nullptr, nullptr, nullptr, nullptr), TORIC_ERR_NULL_ARGUMENT);
  EXPECT_EQ(toric_cohomology(nullptr, 0, 1, nullptr), TORIC_ERR_NULL_ARGUMENT);
  toric_matrix_free(nullptr);
  toric_complex_free(nullptr);
  toric_pair_free(nullptr);
  toric_group_free(nullptr);
  toric_report_free(nullptr);
  toric_string_free(nullptr);
}

TEST(CApi, ComplexesAndCohomology) {
  // boundary of the tetrahedron
  const std::vector<size_t> verts = {0, 1, 2, 0, 1, 3, 0, 2, 3, 1, 2, 3};
  const std::vector<size_t> sizes = {3, 3, 3, 3};
  toric_complex* k = nullptr;
  ASSERT_EQ(toric_complex_create(4, verts.data(), sizes.data(), sizes.size(), &k), TORIC_OK);
  EXPECT_EQ(toric_complex_dimension(k), 2);
  EXPECT_EQ(toric_complex_count(k, 1), 6u);
  toric_group* g = nullptr;
  ASSERT_EQ(toric_cohomology(k, 2, 3, &g), TORIC_OK);
  EXPECT_EQ(toric_group_free_rank(g), 3u);
  EXPECT_EQ(toric_group_torsion_count(g), 0u);
  char* text = nullptr;
  ASSERT_EQ(toric_group_to_string(g, &text), TORIC_OK);
  EXPECT_EQ(take(text), "Z^3");
  toric_group_free(g);
  size_t dim = 0;
  ASSERT_EQ(toric_cohomology_rational(k, 1, &dim), TORIC_OK);
  EXPECT_EQ(dim, 0u);

  const std::vector<size_t> edge = {0, 1};
  const std::vector<size_t> edge_sizes = {2};
  toric_pair* p = nullptr;
  ASSERT_EQ(toric_pair_create(k, edge.data(), edge_sizes.data(), 1, &p), TORIC_OK);
  int exact = 0;
  ASSERT_EQ(toric_verify_les(p, 3, &exact), TORIC_OK);
  EXPECT_EQ(exact, 1);
  toric_group* rel = nullptr;
  ASSERT_EQ(toric_relative_cohomology(p, 2, &rel, &dim), TORIC_OK);
  EXPECT_EQ(toric_group_free_rank(rel), 1u);
  EXPECT_EQ(dim, 1u);
  toric_group_free(rel);
  ASSERT_EQ(toric_good_form_dim(p, &dim), TORIC_OK);
  EXPECT_EQ(dim, 1u);
  toric_pair_free(p);

  const size_t marked = 0;
  ASSERT_EQ(toric_pair_closed_star(k, &marked, 1, &p), TORIC_OK);
  ASSERT_EQ(toric_good_form_dim(p, &dim), TORIC_OK);
  EXPECT_EQ(dim, 1u);
  toric_pair_free(p);

  const std::vector<size_t> bad = {0, 9};
  EXPECT_NE(toric_pair_create(k, bad.data(), edge_sizes.data(), 1, &p), TORIC_OK);
  toric_complex_free(k);
}

TEST(CApi, TorsionAcrossTheBoundary) {
  // six-vertex projective plane
  const std::vector<size_t> verts = {0, 1, 3, 1, 2, 4, 0, 2, 5, 0, 3, 4, 1, 4, 5,
                                     2, 3, 5, 1, 3, 5, 0, 4, 5, 0, 1, 2, 2, 3, 4};
  const std::vector<size_t> sizes(10, 3);
  toric_complex* k = nullptr;
  ASSERT_EQ(toric_complex_create(6, verts.data(), sizes.data(), sizes.size(), &k), TORIC_OK);
  toric_group* g = nullptr;
  ASSERT_EQ(toric_cohomology(k, 2, 1, &g), TORIC_OK);
  ASSERT_EQ(toric_group_torsion_count(g), 1u);
  char* d = nullptr;
  ASSERT_EQ(toric_group_torsion(g, 0, &d), TORIC_OK);
  EXPECT_EQ(take(d), "2");
  EXPECT_EQ(toric_group_torsion(g, 1, &d), TORIC_ERR_OUT_OF_RANGE);
  toric_group_free(g);
  toric_complex_free(k);
}

TEST(CApi, JsonEntryPoints) {
  const char* doc = R"({"schema_version": 1, "complex": {"vertex_count": 3, "facets": [[0, 1], [1, 2], [0, 2]]}})";
  toric_complex* k = nullptr;
  ASSERT_EQ(toric_complex_from_json(doc, &k), TORIC_OK);
  EXPECT_EQ(toric_complex_dimension(k), 1);
  toric_complex_free(k);
  EXPECT_EQ(toric_complex_from_json("{", &k), TORIC_ERR_PARSE);
  EXPECT_NE(std::string(toric_last_error()).find("line 1"), std::string::npos);

  const char* cls = R"({"schema_version": 1, "classification": {"kind": "manifold", "torus_rank": 2,
      "model_W": {"vertex_count": 3, "facets": [[0, 1, 2]]}}})";
  char* out = nullptr;
  ASSERT_EQ(toric_classify_json(cls, &out), TORIC_OK);
  EXPECT_NE(take(out).find("\"unique\":true"), std::string::npos);
}

TEST(CApi, RunnerMatchesExitCodes) {
  toric_run_options o{"check", "unimodular", -1, nullptr, nullptr};
  const std::string doc = R"({"schema_version": 1, "tuple": {"dim": 2, "vectors": [["1", "1"], ["1", "-1"]]}})";
  toric_report* r = nullptr;
  ASSERT_EQ(toric_run(&o, doc.data(), doc.size(), "t.json", &r), TORIC_OK);
  EXPECT_EQ(toric_report_exit_code(r), 1);
  EXPECT_EQ(std::string(toric_report_text(r)).rfind("not unimodular: invariant factor 2", 0), 0u);
  EXPECT_NE(std::string(toric_report_json(r)).find("\"status\":\"negative\""), std::string::npos);
  toric_report_free(r);
  ASSERT_EQ(toric_run(&o, "[", 1, "t.json", &r), TORIC_OK);
  EXPECT_EQ(toric_report_exit_code(r), 2);
  toric_report_free(r);
}

TEST(CApi, LastErrorIsPerThread) {
  toric_matrix* m = nullptr;
  ASSERT_EQ(toric_matrix_create(1, 1, &m), TORIC_OK);
  ASSERT_EQ(toric_matrix_set(m, 0, 0, "oops"), TORIC_ERR_PARSE);
  const std::string here = toric_last_error();
  std::string there;
  std::thread t([&] {
    toric_matrix_set(m, 5, 5, "1");
    there = toric_last_error();
  });
  t.join();
  EXPECT_EQ(toric_last_error(), here);
  EXPECT_NE(there, here);
  toric_matrix_free(m);
}

}  // namespace
