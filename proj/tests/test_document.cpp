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

#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <random>
#include <sstream>

#include "toric/document.hpp"

namespace toric {
namespace {

std::string read_example(const std::string& name) {
  std::ifstream in(std::filesystem::path(TORIC_EXAMPLES_DIR) / name);
  if (!in) throw std::runtime_error("missing example " + name);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

RunOptions cmd(std::string command, std::string target = "") {
  RunOptions o;
  o.command = std::move(command);
  o.target = std::move(target);
  return o;
}

std::string parse_error(std::string_view doc) {
  try {
    document_kind(doc);
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::Parse);
    return e.what();
  }
  ADD_FAILURE() << "document accepted: " << doc;
  return "";
}

TEST(Document, SyntaxErrorsCarryLineAndColumn) {
  EXPECT_NE(parse_error("{\n  \"schema_version\": 1,\n  \"matrix\": {\"rows\": [[1, 2]],}\n}").find("line 3"),
            std::string::npos);
  EXPECT_NE(parse_error("{").find("line 1, column"), std::string::npos);
  EXPECT_NE(parse_error("").find("line 1"), std::string::npos);
}

TEST(Document, SchemaErrorsCarryPointers) {
  EXPECT_NE(parse_error(R"({"matrix": {"rows": []}})").find("missing required key 'schema_version'"),
            std::string::npos);
  EXPECT_NE(parse_error(R"({"schema_version": 2, "matrix": {"rows": []}})").find("/schema_version"),
            std::string::npos);
  EXPECT_NE(parse_error(R"({"schema_version": 1, "shape": {}})").find("/shape: unknown key"), std::string::npos);
  EXPECT_NE(parse_error(R"({"schema_version": 1})").find("no payload"), std::string::npos);
  EXPECT_NE(parse_error(R"({"schema_version": 1, "matrix": {"rows": []}, "tuple": {}})").find("exactly one payload"),
            std::string::npos);

  try {
    load_matrix(R"({"schema_version": 1, "matrix": {"rows": [["1", 2.5]]}})");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::Parse);
    EXPECT_NE(std::string(e.what()).find("/matrix/rows/0/1"), std::string::npos) << e.what();
  }
  try {
    load_complex(R"({"schema_version": 1, "complex": {"vertex_count": 3, "facets": [[0, 1], [1, 7]]}})");
    FAIL();
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("/complex"), std::string::npos) << e.what();
  }
}

TEST(Document, LoadersAcceptBothIntegerSpellings) {
  const auto m = load_matrix(R"({"schema_version": 1, "matrix": {"rows": [[1, "-2"], ["123456789012345678901234567890", 0]]}})");
  EXPECT_EQ(m(0, 1), -2);
  EXPECT_EQ(m(1, 0), parse_integer("123456789012345678901234567890"));
  EXPECT_EQ(load_matrix(R"({"schema_version": 1, "matrix": {"rows": [], "cols": 3}})").cols(), 3u);
  EXPECT_EQ(load_polytope(read_example("square_polytope.json")).vertices().size(), 4u);
  EXPECT_EQ(load_pair(read_example("disk_boundary_pair.json")).sub().count(1), 3u);
  EXPECT_EQ(document_kind(read_example("tuple_index_two.json")), PayloadKind::Tuple);
}

TEST(Document, ClassificationFixtures) {
  const auto spec = load_classification(read_example("punctured_octahedron.json"));
  EXPECT_EQ(spec.kind, SpaceKind::Stratified);
  EXPECT_EQ(spec.torus_rank, 3u);
  ASSERT_TRUE(spec.model_regW.has_value());
  EXPECT_EQ(spec.model_regW->count(2), 24u);

  const Report r = run_document(cmd("classify"), read_example("punctured_octahedron.json"), "x.json");
  EXPECT_EQ(r.exit_code, kExitOk);
  EXPECT_EQ(r.text.substr(0, r.text.find('\n')), "Z^3 × R^1 (Theorem: stratified)");

  const Report bad = run_document(cmd("classify"), read_example("octahedron_with_polytope.json"), "x.json");
  EXPECT_EQ(bad.exit_code, kExitNegative);
  EXPECT_NE(bad.text.find("validation failed"), std::string::npos);
}

TEST(Document, CommandVerdicts) {
  EXPECT_EQ(run_document(cmd("check", "unimodular"), read_example("tuple_index_two.json"), "t").exit_code,
            kExitNegative);
  EXPECT_EQ(run_document(cmd("check", "unimodular"), read_example("tuple_unimodular.json"), "t").exit_code, kExitOk);
  EXPECT_EQ(run_document(cmd("snf"), read_example("matrix_snf.json"), "m").exit_code, kExitOk);
  EXPECT_EQ(run_document(cmd("check", "good-cone"), read_example("good_cone_quadrant.json"), "g").exit_code, kExitOk);
  EXPECT_EQ(run_document(cmd("check", "polytope"), read_example("triangle_polytope.json"), "p").exit_code,
            kExitNegative);
  RunOptions rel = cmd("relative");
  EXPECT_EQ(run_document(rel, read_example("disk_boundary_pair.json"), "p").exit_code, kExitInvalid);  // no degree
  rel.degree = 2;
  const Report r = run_document(rel, read_example("disk_boundary_pair.json"), "p");
  EXPECT_EQ(r.exit_code, kExitOk);
  EXPECT_EQ(r.text.substr(0, 2), "Z\n");
  RunOptions coh = cmd("cohomology");
  coh.coeff = "lattice:3";
  coh.degree = 2;
  EXPECT_EQ(run_document(coh, read_example("tetrahedron_boundary.json"), "s").text.substr(0, 4), "Z^3\n");
  coh.coeff = "R";
  EXPECT_EQ(run_document(coh, read_example("tetrahedron_boundary.json"), "s").exit_code, kExitInvalid);
  EXPECT_EQ(run_document(cmd("frobnicate"), read_example("matrix_snf.json"), "m").exit_code, kExitInvalid);
  EXPECT_EQ(run_document(cmd("snf"), read_example("disk_boundary_pair.json"), "m").exit_code, kExitInvalid);
}

TEST(Document, JsonReportShape) {
  const Report r = run_document(cmd("classify"), read_example("square_minus_quadrant.json"), "sq.json");
  const auto j = nlohmann::json::parse(r.json);
  EXPECT_EQ(j.at("schema_version"), kSchemaVersion);
  EXPECT_EQ(j.at("command"), "classify");
  EXPECT_EQ(j.at("source"), "sq.json");
  EXPECT_EQ(j.at("status"), "ok");
  EXPECT_EQ(j.at("exit_code"), 0);
  EXPECT_EQ(j.at("result").at("summary"), "unique");

  const auto e = nlohmann::json::parse(run_document(cmd("classify"), "{", "broken").json);
  EXPECT_EQ(e.at("status"), "invalid");
  EXPECT_EQ(e.at("error").at("code"), "parse error");
}

TEST(Document, ClassificationJsonIsIdempotent) {
  for (const char* name : {"punctured_octahedron.json", "square_minus_quadrant.json", "octahedron.json",
                           "exponential_cone.json"}) {
    const auto j = nlohmann::json::parse(run_document(cmd("classify"), read_example(name), name).json);
    const std::string once = j.at("result").dump();
    const std::string twice = render_json(result_from_json(once));
    EXPECT_EQ(nlohmann::json::parse(twice), nlohmann::json::parse(once)) << name;
    EXPECT_EQ(render_json(result_from_json(twice)), twice) << name;
  }
}

TEST(Document, ReportsAreDeterministic) {
  for (const char* name : {"punctured_octahedron.json", "torus_seven_vertex.json"}) {
    RunOptions o = cmd(std::string(name).rfind("torus", 0) == 0 ? "cohomology" : "classify");
    const Report a = run_document(o, read_example(name), name);
    const Report b = run_document(o, read_example(name), name);
    EXPECT_EQ(a.text, b.text);
    EXPECT_EQ(a.json, b.json);
  }
}

TEST(Document, LimitsAreEnforced) {
  const Report r = run_document(
      cmd("cohomology"), R"({"schema_version": 1, "complex": {"vertex_count": 100000000, "facets": []}})", "big");
  EXPECT_EQ(r.exit_code, kExitInvalid);
  const Report p = run_document(
      cmd("check", "polytope"), R"({"schema_version": 1, "polytope": {"dim": 5, "vertices": []}})", "p");
  EXPECT_EQ(p.exit_code, kExitInvalid);
}

// Malformed input must be reported as invalid, never as a negative verdict
// and never as an internal error.
TEST(Document, FuzzedDocumentsAreInvalidNotNegative) {
  std::mt19937_64 rng(5150);
  const std::vector<std::string> seeds = {read_example("tuple_index_two.json"), read_example("matrix_snf.json"),
                                          read_example("disk_boundary_pair.json"),
                                          read_example("square_minus_quadrant.json"),
                                          read_example("triangle_polytope.json")};
  const std::vector<RunOptions> commands = {cmd("check", "unimodular"), cmd("snf"), cmd("cohomology"),
                                            cmd("classify"), cmd("check", "polytope")};
  const std::string alphabet = "{}[]\",:0123456789-/ abcxyz";
  int mutated = 0;
  for (int t = 0; t < 600; ++t) {
    const std::size_t which = t % seeds.size();
    std::string doc = seeds[which];
    const int edits = std::uniform_int_distribution<int>(1, 4)(rng);
    for (int e = 0; e < edits && !doc.empty(); ++e) {
      const std::size_t pos = std::uniform_int_distribution<std::size_t>(0, doc.size() - 1)(rng);
      switch (rng() % 3) {
        case 0: doc.erase(pos, 1); break;
        case 1: doc.insert(pos, 1, alphabet[rng() % alphabet.size()]); break;
        default: doc[pos] = alphabet[rng() % alphabet.size()]; break;
      }
    }
    const Report r = run_document(commands[which], doc, "fuzz");
    ASSERT_NE(r.exit_code, kExitInternal) << doc << "\n" << r.text;
    // a mutation may still yield a valid document with a different verdict;
    // only flag negative verdicts that come with a parse error
    if (r.exit_code == kExitNegative) {
      EXPECT_EQ(r.json.find("\"parse\""), std::string::npos) << doc;
    } else if (r.exit_code == kExitInvalid) {
      ++mutated;
    }
  }
  EXPECT_GT(mutated, 300);
}

TEST(Document, ExitCodeMapping) {
  EXPECT_EQ(exit_code_for(ErrorCode::NotUnimodular), kExitNegative);
  EXPECT_EQ(exit_code_for(ErrorCode::ValidationFailed), kExitNegative);
  EXPECT_EQ(exit_code_for(ErrorCode::Parse), kExitInvalid);
  EXPECT_EQ(exit_code_for(ErrorCode::Internal), kExitInternal);
}

}  // namespace
}  // namespace toric
