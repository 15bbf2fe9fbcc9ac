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

#include "toric/document.hpp"

#include <algorithm>
#include <json.hpp>
#include <sstream>

#include "toric/cone.hpp"
#include "toric/lattice.hpp"

namespace toric {

using Json = nlohmann::json;
using OJson = nlohmann::ordered_json;

const char* to_string(PayloadKind k) {
  switch (k) {
    case PayloadKind::Matrix: return "matrix";
    case PayloadKind::Tuple: return "tuple";
    case PayloadKind::Cone: return "cone";
    case PayloadKind::GoodCone: return "good_cone";
    case PayloadKind::Polytope: return "polytope";
    case PayloadKind::Complex: return "complex";
    case PayloadKind::Pair: return "pair";
    case PayloadKind::Classification: return "classification";
  }
  return "?";
}

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotUnimodular:
    case ErrorCode::ValidationFailed: return kExitNegative;
    case ErrorCode::Internal: return kExitInternal;
    default: return kExitInvalid;
  }
}

namespace {

constexpr PayloadKind kAllKinds[] = {PayloadKind::Matrix,   PayloadKind::Tuple,   PayloadKind::Cone,
                                     PayloadKind::GoodCone, PayloadKind::Polytope, PayloadKind::Complex,
                                     PayloadKind::Pair,     PayloadKind::Classification};

// Caps that keep hostile documents from running for hours.
constexpr std::size_t kMaxMatrixSide = 256;
constexpr std::size_t kMaxVertices = 100000;
constexpr int kMaxDegree = 64;

// A JSON value plus its JSON-pointer path, for schema errors.
class Node {
 public:
  Node(const Json& j, std::string path) : j_(j), path_(std::move(path)) {}

  const Json& json() const { return j_; }
  const std::string& path() const { return path_; }
  std::string where() const { return path_.empty() ? "/" : path_; }

  [[noreturn]] void error(const std::string& what) const { fail(ErrorCode::Parse, where() + ": " + what); }

  bool has(const std::string& key) const { return j_.is_object() && j_.contains(key); }

  Node at(const std::string& key) const {
    expect_object();
    if (!j_.contains(key)) error("missing required key '" + key + "'");
    return Node(j_.at(key), path_ + "/" + escape(key));
  }
  std::optional<Node> opt(const std::string& key) const {
    expect_object();
    if (!j_.contains(key)) return std::nullopt;
    return Node(j_.at(key), path_ + "/" + escape(key));
  }
  Node operator[](std::size_t i) const { return Node(j_.at(i), path_ + "/" + std::to_string(i)); }

  void expect_object() const {
    if (!j_.is_object()) error("expected an object");
  }
  std::size_t array_size() const {
    if (!j_.is_array()) error("expected an array");
    return j_.size();
  }
  // Rejects keys outside `allowed`.
  void only_keys(std::initializer_list<const char*> allowed) const {
    expect_object();
    for (auto it = j_.begin(); it != j_.end(); ++it) {
      if (std::none_of(allowed.begin(), allowed.end(), [&](const char* k) { return it.key() == k; })) {
        Node(it.value(), path_ + "/" + escape(it.key())).error("unknown key '" + it.key() + "'");
      }
    }
  }

  Integer integer() const {
    if (j_.is_number_integer()) {
      return j_.is_number_unsigned() ? Integer(std::to_string(j_.get<std::uint64_t>()))
                                     : Integer(std::to_string(j_.get<std::int64_t>()));
    }
    if (j_.is_string()) {
      try {
        return parse_integer(j_.get<std::string>());
      } catch (const Error&) {
        error("expected a decimal integer string, got \"" + j_.get<std::string>() + "\"");
      }
    }
    if (j_.is_number_float()) error("floating-point numbers are not accepted; write integers as \"12\"");
    error("expected an integer");
  }
  Rational rational() const {
    if (j_.is_number_integer()) return Rational(integer());
    if (j_.is_string()) {
      try {
        return parse_rational(j_.get<std::string>());
      } catch (const Error&) {
        error("expected a rational string like \"3/2\", got \"" + j_.get<std::string>() + "\"");
      }
    }
    if (j_.is_number_float()) error("floating-point numbers are not accepted; write rationals as \"3/2\"");
    error("expected a rational");
  }
  std::size_t index(std::size_t limit) const {
    const Integer v = integer();
    if (v < 0 || v >= limit) error("value " + v.get_str() + " outside 0.." + std::to_string(limit ? limit - 1 : 0));
    return v.get_ui();
  }
  std::size_t count(std::size_t max) const {
    const Integer v = integer();
    if (v < 0 || v > max) error("value " + v.get_str() + " outside 0.." + std::to_string(max));
    return v.get_ui();
  }
  bool boolean() const {
    if (!j_.is_boolean()) error("expected true or false");
    return j_.get<bool>();
  }
  std::string string() const {
    if (!j_.is_string()) error("expected a string");
    return j_.get<std::string>();
  }

  IntegerVector integer_vector(std::optional<std::size_t> length = std::nullopt) const {
    const std::size_t n = array_size();
    if (length && n != *length) error("expected " + std::to_string(*length) + " entries, found " + std::to_string(n));
    IntegerVector v;
    for (std::size_t i = 0; i < n; ++i) v.push_back((*this)[i].integer());
    return v;
  }
  RationalVector rational_vector(std::optional<std::size_t> length = std::nullopt) const {
    const std::size_t n = array_size();
    if (length && n != *length) error("expected " + std::to_string(*length) + " entries, found " + std::to_string(n));
    RationalVector v;
    for (std::size_t i = 0; i < n; ++i) v.push_back((*this)[i].rational());
    return v;
  }
  std::vector<IntegerVector> integer_rows(std::size_t length) const {
    std::vector<IntegerVector> rows;
    for (std::size_t i = 0, n = array_size(); i < n; ++i) rows.push_back((*this)[i].integer_vector(length));
    return rows;
  }
  Simplex simplex(std::size_t vertex_count) const {
    const std::size_t n = array_size();
    if (n == 0) error("a simplex needs at least one vertex");
    Simplex s;
    for (std::size_t i = 0; i < n; ++i) s.push_back((*this)[i].index(vertex_count));
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end()) error("simplex repeats a vertex");
    return s;
  }
  std::vector<Simplex> simplices(std::size_t vertex_count) const {
    std::vector<Simplex> out;
    for (std::size_t i = 0, n = array_size(); i < n; ++i) out.push_back((*this)[i].simplex(vertex_count));
    return out;
  }

 private:
  static std::string escape(const std::string& key) {
    std::string out;
    for (char c : key) {
      if (c == '~') out += "~0";
      else if (c == '/') out += "~1";
      else out += c;
    }
    return out;
  }

  const Json& j_;
  std::string path_;
};

// Re-throws construction errors from the core with the payload path attached.
template <class F>
auto at_path(const Node& node, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const Error& e) {
    fail(e.code(), node.where() + ": " + e.what());
  }
}

std::string line_col(std::string_view source, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < source.size(); ++i) {
    if (source[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

struct Document {
  Json root;
  PayloadKind kind;
  const Json& payload() const { return root.at(to_string(kind)); }
  Node node() const { return Node(payload(), std::string("/") + to_string(kind)); }
};

Document parse_document(std::string_view source) {
  Document doc;
  try {
    doc.root = Json::parse(source.begin(), source.end());
  } catch (const Json::parse_error& e) {
    std::string msg = e.what();
    // nlohmann prefixes "[json.exception.parse_error.101] parse error at line L, column C: "
    const auto colon = msg.find(": ");
    if (colon != std::string::npos && msg.find("parse error") < colon) msg = msg.substr(colon + 2);
    fail(ErrorCode::Parse, line_col(source, e.byte ? e.byte - 1 : 0) + ": " + msg);
  }
  const Node root(doc.root, "");
  root.expect_object();
  const Node version = root.at("schema_version");
  if (!version.json().is_number_integer() || version.json().get<long long>() != kSchemaVersion) {
    version.error("unsupported schema_version (expected " + std::to_string(kSchemaVersion) + ")");
  }
  std::optional<PayloadKind> found;
  for (auto it = doc.root.begin(); it != doc.root.end(); ++it) {
    if (it.key() == "schema_version" || it.key() == "description" || it.key() == "$comment") continue;
    const auto k = std::find_if(std::begin(kAllKinds), std::end(kAllKinds),
                                [&](PayloadKind p) { return it.key() == to_string(p); });
    if (k == std::end(kAllKinds)) {
      fail(ErrorCode::Parse, "/" + it.key() + ": unknown key (payloads: matrix, tuple, cone, good_cone, polytope, "
                             "complex, pair, classification)");
    }
    if (found) fail(ErrorCode::Parse, "/" + it.key() + ": a document carries exactly one payload");
    found = *k;
  }
  if (!found) fail(ErrorCode::Parse, "/: no payload found");
  doc.kind = *found;
  return doc;
}

// --- payload readers -------------------------------------------------------

IntegerMatrix read_matrix(const Node& n) {
  n.only_keys({"rows", "cols"});
  const Node rows = n.at("rows");
  const std::size_t r = rows.array_size();
  std::size_t c = 0;
  if (auto cols = n.opt("cols")) c = cols->count(kMaxMatrixSide);
  else if (r > 0) c = rows[0].array_size();
  else rows.error("an empty matrix needs an explicit 'cols'");
  if (r > kMaxMatrixSide || c > kMaxMatrixSide) n.error("matrix larger than " + std::to_string(kMaxMatrixSide));
  return IntegerMatrix::from_rows(rows.integer_rows(c), c);
}

struct TupleData {
  std::size_t dim;
  std::vector<IntegerVector> vectors;
};

TupleData read_tuple(const Node& n) {
  n.only_keys({"dim", "vectors"});
  TupleData t;
  t.dim = n.at("dim").count(kMaxMatrixSide);
  t.vectors = n.at("vectors").integer_rows(t.dim);
  if (t.vectors.size() > kMaxMatrixSide) n.error("too many vectors");
  return t;
}

std::size_t read_dim(const Node& n, std::size_t max) {
  const std::size_t d = n.count(max);
  if (d == 0) n.error("dimension must be at least 1");
  return d;
}

UnimodularCone read_cone(const Node& n) {
  n.only_keys({"apex", "normals", "points"});
  const RationalVector apex = n.at("apex").rational_vector();
  if (apex.empty()) n.at("apex").error("apex must have at least one coordinate");
  if (apex.size() > kMaxMatrixSide) n.at("apex").error("dimension too large");
  std::vector<IntegerVector> normals = n.at("normals").integer_rows(apex.size());
  return at_path(n, [&] { return UnimodularCone(apex, std::move(normals)); });
}

SimpleCone read_good_cone(const Node& n) {
  n.only_keys({"dim", "normals"});
  const std::size_t dim = read_dim(n.at("dim"), 16);
  std::vector<IntegerVector> normals = n.at("normals").integer_rows(dim);
  if (normals.size() > 16) n.at("normals").error("at most 16 normals are supported");
  return at_path(n, [&] { return SimpleCone(dim, std::move(normals)); });
}

RationalPolytope read_polytope(const Node& n) {
  n.only_keys({"dim", "vertices", "facets"});
  const std::size_t dim = read_dim(n.at("dim"), kMaxPolytopeDim);
  const bool has_v = n.has("vertices"), has_f = n.has("facets");
  if (has_v == has_f) n.error("give exactly one of 'vertices' or 'facets'");
  if (has_v) {
    const Node vs = n.at("vertices");
    std::vector<RationalVector> points;
    for (std::size_t i = 0, k = vs.array_size(); i < k; ++i) points.push_back(vs[i].rational_vector(dim));
    return at_path(n, [&] { return normalize_from_vertices(dim, points); });
  }
  const Node fs = n.at("facets");
  std::vector<Facet> facets;
  for (std::size_t i = 0, k = fs.array_size(); i < k; ++i) {
    const Node f = fs[i];
    f.only_keys({"normal", "offset"});
    facets.push_back(Facet{f.at("normal").integer_vector(dim), f.at("offset").rational()});
  }
  return at_path(n, [&] { return normalize_from_facets(dim, facets); });
}

SimplicialComplex read_complex(const Node& n) {
  n.only_keys({"vertex_count", "facets", "simplices"});
  const std::size_t vc = n.at("vertex_count").count(kMaxVertices);
  const bool has_f = n.has("facets"), has_s = n.has("simplices");
  if (has_f && has_s) n.error("give at most one of 'facets' or 'simplices'");
  if (has_s) {
    auto s = n.at("simplices").simplices(vc);
    return at_path(n, [&] { return SimplicialComplex::from_simplices(vc, std::move(s)); });
  }
  std::vector<Simplex> facets;
  if (has_f) facets = n.at("facets").simplices(vc);
  return at_path(n, [&] { return SimplicialComplex::from_facets(vc, facets); });
}

PairInclusion read_sub(const Node& n, const SimplicialComplex& ambient) {
  if (n.json().is_string()) {
    const std::string s = n.string();
    if (s == "identity") return PairInclusion::identity(ambient);
    if (s == "empty") return PairInclusion::empty(ambient);
    n.error("expected \"identity\", \"empty\" or an object");
  }
  n.only_keys({"simplices", "closed_star", "complex", "vertex_map"});
  if (n.has("simplices")) {
    auto s = n.at("simplices").simplices(ambient.vertex_count());
    return at_path(n, [&] { return PairInclusion::from_ambient_simplices(ambient, s); });
  }
  if (n.has("closed_star")) {
    const Node marked = n.at("closed_star");
    std::vector<std::size_t> vs;
    for (std::size_t i = 0, k = marked.array_size(); i < k; ++i) vs.push_back(marked[i].index(ambient.vertex_count()));
    return at_path(n, [&] { return PairInclusion::closed_star(ambient, vs); });
  }
  if (n.has("complex")) {
    SimplicialComplex sub = read_complex(n.at("complex"));
    const Node map = n.at("vertex_map");
    std::vector<std::size_t> vm;
    for (std::size_t i = 0, k = map.array_size(); i < k; ++i) vm.push_back(map[i].index(ambient.vertex_count()));
    return at_path(n, [&] { return PairInclusion(ambient, std::move(sub), std::move(vm)); });
  }
  n.error("expected one of 'simplices', 'closed_star' or 'complex' with 'vertex_map'");
}

PairInclusion read_pair(const Node& n) {
  n.only_keys({"ambient", "sub"});
  return read_sub(n.at("sub"), read_complex(n.at("ambient")));
}

OrbitSpaceSpec read_classification(const Node& n) {
  n.only_keys({"kind", "torus_rank", "model_W", "model_regW", "model_Wbar", "cones", "polytope", "free_action"});
  OrbitSpaceSpec spec;
  const Node kind = n.at("kind");
  spec.kind = at_path(kind, [&] { return parse_space_kind(kind.string()); });
  spec.torus_rank = read_dim(n.at("torus_rank"), kMaxMatrixSide);
  if (auto w = n.opt("model_W")) spec.model_W = read_complex(*w);
  if (auto w = n.opt("model_regW")) spec.model_regW = read_complex(*w);
  if (auto w = n.opt("model_Wbar")) {
    if (!spec.model_regW) w->error("model_Wbar needs model_regW");
    spec.model_Wbar = read_sub(*w, *spec.model_regW);
  }
  if (auto cones = n.opt("cones")) {
    for (std::size_t i = 0, k = cones->array_size(); i < k; ++i) {
      const Node c = (*cones)[i];
      try {
        spec.cones.push_back(read_cone(c));
      } catch (const Error& e) {
        // A cone that is not unimodular is a failed hypothesis, not bad input.
        if (e.code() == ErrorCode::NotUnimodular) fail(ErrorCode::ValidationFailed, e.what());
        throw;
      }
    }
  }
  if (auto p = n.opt("polytope")) spec.polytope = read_polytope(*p);
  if (auto f = n.opt("free_action")) spec.free_action = f->boolean();

  const bool wants_w = spec.kind != SpaceKind::Stratified;
  if (wants_w && !spec.model_W) n.error(std::string("kind ") + to_string(spec.kind) + " requires 'model_W'");
  if (!wants_w && !spec.model_regW) n.error("kind stratified requires 'model_regW'");
  if (wants_w && (spec.model_regW || spec.model_Wbar)) n.error("model_regW/model_Wbar only apply to kind stratified");
  if (!wants_w && spec.model_W) n.error("kind stratified takes 'model_regW', not 'model_W'");
  return spec;
}

// --- rendering -------------------------------------------------------------

template <class V>
OJson vec_json(const V& v) {
  OJson a = OJson::array();
  for (const auto& x : v) a.push_back(to_string(x));
  return a;
}
template <class V>
OJson rows_json(const std::vector<V>& rows) {
  OJson a = OJson::array();
  for (const auto& r : rows) a.push_back(vec_json(r));
  return a;
}
OJson matrix_json(const IntegerMatrix& m) { return rows_json(m.row_list()); }

template <class V>
std::string vec_text(const V& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + to_string(v[i]);
  return out + ")";
}
std::string matrix_text(const IntegerMatrix& m, const std::string& indent) {
  std::string out;
  for (std::size_t r = 0; r < m.rows(); ++r) out += indent + vec_text(m.row(r)) + "\n";
  if (m.rows() == 0) out += indent + "(empty)\n";
  return out;
}
std::string join(const std::vector<std::size_t>& v) {
  std::string out = "{";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out + "}";
}
OJson group_json(const AbelianGroupPresentation& g) {
  return {{"free_rank", g.free_rank}, {"torsion", vec_json(g.invariant_factors)}, {"text", g.to_string()}};
}

struct Outcome {
  int exit_code = kExitOk;
  std::string verdict;  // first line of the text report
  std::string details;  // remaining lines
  OJson result = OJson::object();
};

void require_kind(const Document& doc, const std::string& command, std::initializer_list<PayloadKind> kinds) {
  if (std::find(kinds.begin(), kinds.end(), doc.kind) != kinds.end()) return;
  std::string names;
  for (auto k : kinds) names += std::string(names.empty() ? "" : " or ") + to_string(k);
  fail(ErrorCode::InvalidArgument,
       "command '" + command + "' needs a " + names + " payload, found '" + to_string(doc.kind) + "'");
}

Outcome run_snf(const Document& doc) {
  require_kind(doc, "snf", {PayloadKind::Matrix, PayloadKind::Tuple});
  IntegerMatrix A;
  if (doc.kind == PayloadKind::Matrix) {
    A = read_matrix(doc.node());
  } else {
    const TupleData t = read_tuple(doc.node());
    A = tuple_matrix(t.vectors, t.dim);
  }
  const SmithDecomposition s = smith_normal_form(A);
  const HermiteDecomposition h = hermite_normal_form(A);
  Outcome o;
  std::string factors;
  for (const auto& d : s.invariant_factors()) factors += (factors.empty() ? "" : " ") + d.get_str();
  o.verdict = "invariant factors: " + (factors.empty() ? std::string("(none)") : factors);
  o.details = "rank " + std::to_string(s.rank()) + "\nD =\n" + matrix_text(s.D, "  ") + "U =\n" +
              matrix_text(s.U, "  ") + "V =\n" + matrix_text(s.V, "  ") + "Hermite form H = U' A with H =\n" +
              matrix_text(h.H, "  ") + "U' =\n" + matrix_text(h.U, "  ");
  o.result = {{"rows", A.rows()},
              {"cols", A.cols()},
              {"rank", s.rank()},
              {"invariant_factors", vec_json(s.invariant_factors())},
              {"D", matrix_json(s.D)},
              {"U", matrix_json(s.U)},
              {"V", matrix_json(s.V)},
              {"hermite", {{"H", matrix_json(h.H)}, {"U", matrix_json(h.U)}}}};
  return o;
}

Outcome run_check_unimodular(const Document& doc) {
  require_kind(doc, "check unimodular", {PayloadKind::Tuple, PayloadKind::Matrix});
  TupleData t;
  if (doc.kind == PayloadKind::Tuple) {
    t = read_tuple(doc.node());
  } else {
    const IntegerMatrix m = read_matrix(doc.node());
    t = {m.cols(), m.row_list()};
  }
  const UnimodularityReport r = unimodularity_report(t.vectors, t.dim);
  Outcome o;
  std::string reason;
  if (!r.unimodular) {
    if (r.size > r.dim) {
      reason = std::to_string(r.size) + " vectors in dimension " + std::to_string(r.dim);
    } else if (!r.independent) {
      reason = "linearly dependent";
    } else {
      for (const auto& d : r.invariant_factors)
        if (d != 1) {
          reason = "invariant factor " + d.get_str();
          break;
        }
    }
  }
  o.exit_code = r.unimodular ? kExitOk : kExitNegative;
  o.verdict = r.unimodular ? "unimodular" : "not unimodular: " + reason;
  o.details = "invariant factors: " + vec_text(r.invariant_factors) + "\n";
  o.result = {{"unimodular", r.unimodular}, {"independent", r.independent},   {"size", r.size},
              {"dim", r.dim},               {"invariant_factors", vec_json(r.invariant_factors)},
              {"reason", reason}};
  return o;
}

Outcome run_check_cone(const Document& doc, const std::string& property) {
  require_kind(doc, "check cone", {PayloadKind::Cone});
  const std::string prop = property.empty() ? "unimodular" : property;
  if (prop != "unimodular" && prop != "homogeneous") {
    fail(ErrorCode::InvalidArgument, "check cone: unknown property '" + prop + "' (unimodular, homogeneous)");
  }
  const Node n = doc.node();
  Outcome o;
  std::optional<UnimodularCone> cone;
  try {
    cone = read_cone(n);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NotUnimodular) throw;
    o.exit_code = kExitNegative;
    o.verdict = "not a unimodular cone: " + std::string(e.what());
    o.result = {{"unimodular", false}, {"reason", e.what()}};
    return o;
  }
  const bool homogeneous = is_homogeneous_cone(*cone);
  const ConeSplit split = split_cone(*cone);
  o.result = {{"unimodular", true},
              {"homogeneous", homogeneous},
              {"split",
               {{"lattice_basis", rows_json(split.lattice_basis)},
                {"complement", rows_json(split.complement)},
                {"section", rows_json(split.section)},
                {"reduced_normals", rows_json(split.reduced_normals)},
                {"reduced_apex", vec_json(split.reduced_apex)},
                {"annihilator_basis", rows_json(split.annihilator_basis)}}}};
  o.details = std::string("homogeneous: ") + (homogeneous ? "yes" : "no") + "\n";
  o.details += "annihilator basis: ";
  for (const auto& a : split.annihilator_basis) o.details += vec_text(a) + " ";
  o.details += "\nreduced normals: ";
  for (const auto& r : split.reduced_normals) o.details += vec_text(r) + " ";
  o.details += "\nreduced apex: " + vec_text(split.reduced_apex) + "\n";
  if (auto pts = n.opt("points")) {
    OJson arr = OJson::array();
    for (std::size_t i = 0, k = pts->array_size(); i < k; ++i) {
      const RationalVector eta = (*pts)[i].rational_vector(cone->dim());
      OJson p = {{"point", vec_json(eta)}, {"contained", cone_contains(*cone, eta)}};
      o.details += "point " + vec_text(eta);
      if (cone_contains(*cone, eta)) {
        const FaceData f = face_data(*cone, eta);
        std::vector<std::size_t> active(f.active_indices.begin(), f.active_indices.end());
        p["active"] = active;
        o.details += ": in cone, active normals " + join(active) + "\n";
      } else {
        o.details += ": outside\n";
      }
      arr.push_back(std::move(p));
    }
    o.result["points"] = std::move(arr);
  }
  if (prop == "homogeneous") {
    o.exit_code = homogeneous ? kExitOk : kExitNegative;
    o.verdict = homogeneous ? "homogeneous unimodular cone" : "unimodular cone, not homogeneous";
  } else {
    o.verdict = "unimodular cone";
  }
  return o;
}

OJson audit_json(const FaceAudit& f) {
  return {{"subset", f.subset},
          {"witness", vec_json(f.witness)},
          {"unimodular", f.unimodular},
          {"invariant_factors", vec_json(f.invariant_factors)}};
}

Outcome run_check_good_cone(const Document& doc) {
  require_kind(doc, "check good-cone", {PayloadKind::GoodCone});
  const SimpleCone cone = read_good_cone(doc.node());
  const GoodConeReport r = at_path(doc.node(), [&] { return is_good_cone(cone); });
  Outcome o;
  o.exit_code = r.good ? kExitOk : kExitNegative;
  o.verdict = r.good ? "good cone" : "not a good cone";
  for (const auto& f : r.faces) {
    o.details += "face " + join(f.subset) + " witness " + vec_text(f.witness) +
                 (f.unimodular ? " unimodular\n" : " NOT unimodular, invariant factors " +
                                                       vec_text(f.invariant_factors) + "\n");
  }
  if (r.normal_count_differs_from_dim) o.details += "note: normal count differs from the dimension\n";
  OJson faces = OJson::array(), failing = OJson::array();
  for (const auto& f : r.faces) faces.push_back(audit_json(f));
  for (const auto& f : r.failing) failing.push_back(audit_json(f));
  o.result = {{"good", r.good},
              {"normal_count_differs_from_dim", r.normal_count_differs_from_dim},
              {"faces", faces},
              {"failing", failing}};
  return o;
}

Outcome run_check_polytope(const Document& doc, const std::string& property) {
  require_kind(doc, "check polytope", {PayloadKind::Polytope});
  const std::string prop = property.empty() ? "delzant" : property;
  if (prop != "delzant" && prop != "bgl" && prop != "simple") {
    fail(ErrorCode::InvalidArgument, "check polytope: unknown property '" + prop + "' (delzant, bgl, simple)");
  }
  const RationalPolytope p = read_polytope(doc.node());
  const FaceLattice lattice = face_lattice(p);
  const SimplicityReport simple = simplicity_report(p);
  const DelzantReport delzant = is_delzant(p);

  Outcome o;
  OJson verts = OJson::array();
  bool any_reject = false;
  for (std::size_t i = 0; i < p.vertices().size(); ++i) {
    const VertexReport vr = classify_vertex(p, p.vertices()[i]);
    any_reject = any_reject || vr.verdict == VertexVerdict::Reject;
    verts.push_back({{"vertex", vec_json(p.vertices()[i])},
                     {"verdict", to_string(vr.verdict)},
                     {"active_facets", vr.active_facets}});
    o.details += "vertex " + vec_text(p.vertices()[i]) + ": " + to_string(vr.verdict) + ", facets " +
                 join(vr.active_facets) + "\n";
  }
  OJson facets = OJson::array();
  for (const auto& f : p.facets()) facets.push_back({{"normal", vec_json(f.normal)}, {"offset", to_string(f.offset)}});
  OJson failing = OJson::array();
  for (auto v : delzant.failing_vertices) failing.push_back(vec_json(p.vertices()[v]));

  const bool bgl = simple.simple_except_at_vertices && !any_reject;
  o.result = {{"dim", p.dim()},
              {"vertices", rows_json(p.vertices())},
              {"facets", facets},
              {"f_vector", lattice.f_vector()},
              {"euler", {{"sum", lattice.euler_sum()}, {"expected", lattice.euler_expected()}}},
              {"simple_everywhere", simple.simple_everywhere},
              {"simple_except_at_vertices", simple.simple_except_at_vertices},
              {"unimodular_away_from_vertices", simple.unimodular_away_from_vertices},
              {"delzant", delzant.delzant},
              {"delzant_failing_vertices", failing},
              {"bgl", bgl},
              {"vertex_verdicts", verts},
              {"property", prop}};
  std::string fv;
  for (auto c : lattice.f_vector()) fv += (fv.empty() ? "" : ", ") + std::to_string(c);
  o.details = "f-vector (" + fv + "), Euler sum " + std::to_string(lattice.euler_sum()) + "\n" +
              "simple everywhere: " + (simple.simple_everywhere ? "yes" : "no") +
              "\nsimple except at vertices: " + (simple.simple_except_at_vertices ? "yes" : "no") +
              "\nunimodular away from vertices: " + (simple.unimodular_away_from_vertices ? "yes" : "no") + "\n" +
              o.details;
  bool holds = false;
  if (prop == "delzant") {
    holds = delzant.delzant;
    o.verdict = holds ? "Delzant" : "not Delzant";
    if (!holds) {
      o.verdict += ": failing vertices";
      for (auto v : delzant.failing_vertices) o.verdict += " " + vec_text(p.vertices()[v]);
    }
  } else if (prop == "bgl") {
    holds = bgl;
    o.verdict = holds ? "simple except at vertices, every vertex smooth or good"
                      : (simple.simple_except_at_vertices ? "some vertex is rejected" : "not simple away from vertices");
  } else {
    holds = simple.simple_everywhere;
    o.verdict = holds ? "simple" : "not simple";
  }
  o.exit_code = holds ? kExitOk : kExitNegative;
  return o;
}

Outcome run_cohomology(const Document& doc, const RunOptions& opt) {
  require_kind(doc, "cohomology", {PayloadKind::Complex});
  const SimplicialComplex K = read_complex(doc.node());
  std::size_t lattice_rank = 0;
  if (opt.coeff.rfind("lattice:", 0) == 0) {
    try {
      const Integer n = parse_integer(opt.coeff.substr(8));
      if (n < 1 || n > 4096) throw Error(ErrorCode::InvalidArgument, "");
      lattice_rank = n.get_ui();
    } catch (const Error&) {
      fail(ErrorCode::InvalidArgument, "--coeff lattice:n needs 1 <= n <= 4096");
    }
  } else if (opt.coeff != "Z" && opt.coeff != "Q") {
    fail(ErrorCode::InvalidArgument, "--coeff must be Z, Q or lattice:n");
  }
  int lo = 0, hi = std::max(K.dimension(), 0);
  if (opt.degree) {
    if (*opt.degree < 0 || *opt.degree > kMaxDegree) fail(ErrorCode::InvalidArgument, "--degree out of range");
    lo = hi = *opt.degree;
  }
  Outcome o;
  OJson groups = OJson::array();
  std::vector<std::string> texts;
  for (int k = lo; k <= hi; ++k) {
    OJson g;
    std::string text;
    if (opt.coeff == "Q") {
      const std::size_t d = cohomology_rational(K, k);
      text = d == 0 ? "0" : (d == 1 ? "Q" : "Q^" + std::to_string(d));
      g = {{"degree", k}, {"dimension", d}, {"text", text}};
    } else {
      const AbelianGroupPresentation G =
          lattice_rank ? cohomology_lattice(K, k, lattice_rank) : cohomology_integer(K, k);
      text = G.to_string();
      g = group_json(G);
      g["degree"] = k;
    }
    groups.push_back(std::move(g));
    texts.push_back(text);
    if (!opt.degree) o.details += "H^" + std::to_string(k) + " = " + text + "\n";
  }
  o.verdict = opt.degree ? texts.front() : "H^" + std::to_string(lo) + ".." + std::to_string(hi);
  o.details += "complex: " + std::to_string(K.vertex_count()) + " vertices, dimension " +
               std::to_string(K.dimension()) + ", Euler characteristic " +
               std::to_string(K.euler_characteristic()) + "\n";
  o.result = {{"coeff", opt.coeff}, {"groups", groups}, {"euler_characteristic", K.euler_characteristic()}};
  return o;
}

Outcome run_relative(const Document& doc, const RunOptions& opt) {
  require_kind(doc, "relative", {PayloadKind::Pair});
  const PairInclusion pair = read_pair(doc.node());
  if (!opt.degree) fail(ErrorCode::InvalidArgument, "relative needs --degree");
  if (*opt.degree < 0 || *opt.degree > kMaxDegree) fail(ErrorCode::InvalidArgument, "--degree out of range");
  const int k = *opt.degree;
  const RelativeCohomology rc = relative_cohomology(pair, k);
  const int top = std::max({k, pair.ambient().dimension(), 0});
  const LesReport les = verify_long_exact_sequence(pair, top);
  if (!les.exact) fail(ErrorCode::Internal, "long exact sequence failed to be exact");

  Outcome o;
  o.verdict = rc.integral.to_string();
  o.details = "rational dimension " + std::to_string(rc.rational_dim) + "\nlong exact sequence (over Q):\n";
  OJson nodes = OJson::array();
  for (const auto& nd : les.nodes) {
    o.details += "  " + nd.label + " dim " + std::to_string(nd.dim) + ", rank in " + std::to_string(nd.rank_in) +
                 ", rank out " + std::to_string(nd.rank_out) + (nd.exact ? ", exact\n" : ", NOT exact\n");
    nodes.push_back({{"label", nd.label},
                     {"dim", nd.dim},
                     {"rank_in", nd.rank_in},
                     {"rank_out", nd.rank_out},
                     {"composition_zero", nd.composition_zero},
                     {"exact", nd.exact}});
  }
  o.result = {{"degree", k},
              {"integral", group_json(rc.integral)},
              {"rational_dim", rc.rational_dim},
              {"les", {{"exact", les.exact}, {"nodes", nodes}}}};
  if (k == 2) {
    const GoodFormReport g = good_form_subspace_dim(pair);
    o.result["exact_on_sub_dim"] = g.dim();
    o.details += "classes of H^2 vanishing on the subcomplex: dimension " + std::to_string(g.dim()) + "\n";
  }
  return o;
}

Outcome run_classify(const Document& doc) {
  require_kind(doc, "classify", {PayloadKind::Classification});
  const OrbitSpaceSpec spec = read_classification(doc.node());
  const ClassificationResult r = classify(spec);
  Outcome o;
  const std::string text = render_text(r);
  const auto nl = text.find('\n');
  o.verdict = text.substr(0, nl);
  o.details = text.substr(nl + 1);
  o.result = OJson::parse(render_json(r));
  return o;
}

Outcome dispatch(const RunOptions& opt, const Document& doc) {
  if (opt.command == "snf") return run_snf(doc);
  if (opt.command == "check") {
    if (opt.target == "unimodular") return run_check_unimodular(doc);
    if (opt.target == "cone") return run_check_cone(doc, opt.property);
    if (opt.target == "good-cone") return run_check_good_cone(doc);
    if (opt.target == "polytope") return run_check_polytope(doc, opt.property);
    fail(ErrorCode::InvalidArgument, "unknown check '" + opt.target + "' (unimodular, cone, good-cone, polytope)");
  }
  if (opt.command == "cohomology") return run_cohomology(doc, opt);
  if (opt.command == "relative") return run_relative(doc, opt);
  if (opt.command == "classify") return run_classify(doc);
  fail(ErrorCode::InvalidArgument, "unknown command '" + opt.command + "'");
}

std::string command_name(const RunOptions& opt) {
  return opt.command == "check" ? "check " + opt.target : opt.command;
}

const char* status_for(int exit_code) {
  switch (exit_code) {
    case kExitOk: return "ok";
    case kExitNegative: return "negative";
    case kExitInvalid: return "invalid";
    default: return "internal-error";
  }
}

}  // namespace

Report run_document(const RunOptions& options, std::string_view source, const std::string& source_name) {
  Report report;
  OJson j;
  j["schema_version"] = kSchemaVersion;
  j["command"] = command_name(options);
  j["source"] = source_name;
  try {
    const Document doc = parse_document(source);
    Outcome o = dispatch(options, doc);
    report.exit_code = o.exit_code;
    report.text = o.verdict + "\n" + o.details;
    j["status"] = status_for(o.exit_code);
    j["exit_code"] = o.exit_code;
    j["verdict"] = o.verdict;
    j["result"] = std::move(o.result);
  } catch (const Error& e) {
    // A negative verdict raised as an exception (failed validation payload)
    // still comes from valid input.
    report.exit_code = exit_code_for(e.code());
    const std::string prefix = report.exit_code == kExitNegative ? "validation failed: " : "error: ";
    report.text = prefix + source_name + ": " + e.what() + "\n";
    j["status"] = status_for(report.exit_code);
    j["exit_code"] = report.exit_code;
    j["error"] = {{"code", to_string(e.code())}, {"message", e.what()}};
  } catch (const std::exception& e) {
    report.exit_code = kExitInternal;
    report.text = std::string("internal error: ") + source_name + ": " + e.what() + "\n";
    j["status"] = status_for(report.exit_code);
    j["exit_code"] = report.exit_code;
    j["error"] = {{"code", "internal"}, {"message", e.what()}};
  }
  report.json = j.dump();
  return report;
}

PayloadKind document_kind(std::string_view source) { return parse_document(source).kind; }

IntegerMatrix load_matrix(std::string_view source) {
  const Document doc = parse_document(source);
  require_kind(doc, "load_matrix", {PayloadKind::Matrix});
  return read_matrix(doc.node());
}

SimplicialComplex load_complex(std::string_view source) {
  const Document doc = parse_document(source);
  require_kind(doc, "load_complex", {PayloadKind::Complex});
  return read_complex(doc.node());
}

PairInclusion load_pair(std::string_view source) {
  const Document doc = parse_document(source);
  require_kind(doc, "load_pair", {PayloadKind::Pair});
  return read_pair(doc.node());
}

RationalPolytope load_polytope(std::string_view source) {
  const Document doc = parse_document(source);
  require_kind(doc, "load_polytope", {PayloadKind::Polytope});
  return read_polytope(doc.node());
}

OrbitSpaceSpec load_classification(std::string_view source) {
  const Document doc = parse_document(source);
  require_kind(doc, "load_classification", {PayloadKind::Classification});
  return read_classification(doc.node());
}

}  // namespace toric
