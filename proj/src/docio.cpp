// Copyright 2026 The wignerkit authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "docio.hpp"

#include <charconv>
#include <fstream>
#include <initializer_list>
#include <sstream>

#include "rng.hpp"

namespace wignerkit {

namespace {

using nlohmann::json;

void emit_double(std::string& out, double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 17);
  out.append(buf, res.ptr);
}

// json object_t is an ordered map, so object keys come out in byte order.
void emit(std::string& out, const json& j) {
  switch (j.type()) {
    case json::value_t::object: {
      out.push_back('{');
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) out.push_back(',');
        first = false;
        out += json(it.key()).dump();
        out.push_back(':');
        emit(out, it.value());
      }
      out.push_back('}');
      break;
    }
    case json::value_t::array: {
      out.push_back('[');
      bool first = true;
      for (const json& item : j) {
        if (!first) out.push_back(',');
        first = false;
        emit(out, item);
      }
      out.push_back(']');
      break;
    }
    case json::value_t::string:
      out += j.dump();
      break;
    case json::value_t::boolean:
      out += j.get<bool>() ? "true" : "false";
      break;
    case json::value_t::number_integer:
      out += std::to_string(j.get<std::int64_t>());
      break;
    case json::value_t::number_unsigned:
      out += std::to_string(j.get<std::uint64_t>());
      break;
    case json::value_t::number_float:
      emit_double(out, j.get<double>());
      break;
    case json::value_t::null:
      out += "null";
      break;
    default:
      throw error(errc::internal, "canonical_json: unsupported value type");
  }
}

const json& require(const json& obj, const char* key, const char* ctx) {
  auto it = obj.find(key);
  if (it == obj.end()) {
    throw error(errc::parse_error, std::string(ctx) + ": missing field '" + key + "'");
  }
  return *it;
}

void check_allowed(const json& obj, std::initializer_list<const char*> keys, const char* ctx) {
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    bool known = false;
    for (const char* k : keys) {
      if (it.key() == k) {
        known = true;
        break;
      }
    }
    if (!known) {
      throw error(errc::parse_error,
                  std::string(ctx) + ": unexpected field '" + it.key() + "'");
    }
  }
}

double as_double(const json& j, const char* ctx) {
  if (!j.is_number()) throw error(errc::parse_error, std::string(ctx) + ": expected a number");
  return j.get<double>();
}

int as_int(const json& j, const char* ctx) {
  if (!j.is_number_integer() && !j.is_number_unsigned()) {
    throw error(errc::parse_error, std::string(ctx) + ": expected an integer");
  }
  return j.get<int>();
}

std::uint64_t as_seed(const json& j, const char* ctx) {
  if (!j.is_number_integer() && !j.is_number_unsigned()) {
    throw error(errc::parse_error, std::string(ctx) + ": expected an integer seed");
  }
  return j.get<std::uint64_t>();
}

MapSpecDoc parse_mapspec_object(const json& j, bool top);

MapSpecDoc parse_induced(const json& j, bool top) {
  check_allowed(j, {"schema_version", "dim", "kind", "matrix", "antilinear"}, "induced spec");
  MapSpecDoc doc;
  doc.dim = as_int(require(j, "dim", "induced spec"), "dim");
  doc.kind = "induced";
  doc.matrix = matrix_from_json(require(j, "matrix", "induced spec"));
  if (doc.matrix.rows() != doc.dim || doc.matrix.cols() != doc.dim) {
    throw error(errc::dimension_mismatch, "induced spec: matrix shape differs from dim");
  }
  if (auto it = j.find("antilinear"); it != j.end()) {
    if (!it->is_boolean()) throw error(errc::parse_error, "antilinear: expected a boolean");
    doc.antilinear = it->get<bool>();
  }
  (void)top;
  return doc;
}

MapSpecDoc parse_tabulated(const json& j) {
  check_allowed(j, {"schema_version", "dim", "kind", "pairs"}, "tabulated spec");
  MapSpecDoc doc;
  doc.dim = as_int(require(j, "dim", "tabulated spec"), "dim");
  doc.kind = "tabulated";
  const json& pairs = require(j, "pairs", "tabulated spec");
  if (!pairs.is_array() || pairs.empty()) {
    throw error(errc::parse_error, "tabulated spec: 'pairs' must be a nonempty array");
  }
  for (const json& entry : pairs) {
    if (!entry.is_object()) throw error(errc::parse_error, "pairs: expected objects");
    check_allowed(entry, {"in", "out"}, "pairs entry");
    Vector in = vector_from_json(require(entry, "in", "pairs entry"));
    Vector out = vector_from_json(require(entry, "out", "pairs entry"));
    if (in.size() != doc.dim || out.size() != doc.dim) {
      throw error(errc::dimension_mismatch, "pairs entry: vector length differs from dim");
    }
    doc.pairs.emplace_back(std::move(in), std::move(out));
  }
  return doc;
}

MapSpecDoc parse_composed(const json& j) {
  check_allowed(j, {"schema_version", "dim", "kind", "stages"}, "composed spec");
  MapSpecDoc doc;
  doc.dim = as_int(require(j, "dim", "composed spec"), "dim");
  doc.kind = "composed";
  const json& stages = require(j, "stages", "composed spec");
  if (!stages.is_array() || stages.empty()) {
    throw error(errc::parse_error, "composed spec: 'stages' must be a nonempty array");
  }
  for (const json& stage : stages) {
    MapSpecDoc sub = parse_mapspec_object(stage, false);
    if (sub.dim != doc.dim) {
      throw error(errc::dimension_mismatch, "composed spec: stage dim differs from parent");
    }
    doc.stages.push_back(std::move(sub));
  }
  return doc;
}

MapSpecDoc parse_adversarial(const json& j) {
  check_allowed(j, {"schema_version", "dim", "kind", "generator", "seed"}, "adversarial spec");
  MapSpecDoc doc;
  doc.dim = as_int(require(j, "dim", "adversarial spec"), "dim");
  doc.kind = "adversarial";
  const json& gen = require(j, "generator", "adversarial spec");
  if (!gen.is_object()) throw error(errc::parse_error, "generator: expected an object");
  check_allowed(gen, {"name", "params", "seed"}, "generator");
  const json& name = require(gen, "name", "generator");
  if (!name.is_string()) throw error(errc::parse_error, "generator name: expected a string");
  doc.generator_name = name.get<std::string>();
  if (auto it = gen.find("params"); it != gen.end()) {
    if (!it->is_object()) throw error(errc::parse_error, "generator params: expected an object");
    check_allowed(*it, {"eps", "merge_from", "merge_to"}, "generator params");
    if (auto e = it->find("eps"); e != it->end()) doc.params.eps = as_double(*e, "eps");
    if (auto f = it->find("merge_from"); f != it->end()) {
      doc.params.merge_from = as_int(*f, "merge_from");
    }
    if (auto t = it->find("merge_to"); t != it->end()) doc.params.merge_to = as_int(*t, "merge_to");
  }
  if (auto it = gen.find("seed"); it != gen.end()) {
    doc.seed = as_seed(*it, "generator seed");
  } else if (auto it2 = j.find("seed"); it2 != j.end()) {
    doc.seed = as_seed(*it2, "seed");
  }
  return doc;
}

MapSpecDoc parse_mapspec_object(const json& j, bool top) {
  if (!j.is_object()) throw error(errc::parse_error, "map spec: expected an object");
  if (top) {
    const json& version = require(j, "schema_version", "map spec");
    if (as_int(version, "schema_version") != kSchemaVersion) {
      throw error(errc::schema_version, "map spec: unsupported schema_version");
    }
  }
  const json& kind = require(j, "kind", "map spec");
  if (!kind.is_string()) throw error(errc::parse_error, "kind: expected a string");
  std::string k = kind.get<std::string>();
  if (k == "induced") return parse_induced(j, top);
  if (k == "tabulated") return parse_tabulated(j);
  if (k == "composed") return parse_composed(j);
  if (k == "adversarial") return parse_adversarial(j);
  throw error(errc::parse_error, "map spec: unknown kind '" + k + "'");
}

json mapspec_to_json(const MapSpecDoc& doc, bool top) {
  json j;
  if (top) j["schema_version"] = kSchemaVersion;
  j["dim"] = doc.dim;
  j["kind"] = doc.kind;
  if (doc.kind == "induced") {
    j["matrix"] = matrix_to_json(doc.matrix);
    j["antilinear"] = doc.antilinear;
  } else if (doc.kind == "tabulated") {
    json pairs = json::array();
    for (const auto& [in, out] : doc.pairs) {
      json entry;
      entry["in"] = vector_to_json(in);
      entry["out"] = vector_to_json(out);
      pairs.push_back(std::move(entry));
    }
    j["pairs"] = std::move(pairs);
  } else if (doc.kind == "composed") {
    json stages = json::array();
    for (const MapSpecDoc& stage : doc.stages) stages.push_back(mapspec_to_json(stage, false));
    j["stages"] = std::move(stages);
  } else if (doc.kind == "adversarial") {
    json gen;
    gen["name"] = doc.generator_name;
    json params = json::object();
    if (doc.generator_name == "noisy_induced") {
      params["eps"] = doc.params.eps;
    } else if (doc.generator_name == "collapse_pair" || doc.generator_name == "cosp_breaker") {
      params["merge_from"] = doc.params.merge_from;
      params["merge_to"] = doc.params.merge_to;
    }
    gen["params"] = std::move(params);
    gen["seed"] = doc.seed;
    j["generator"] = std::move(gen);
  } else {
    throw error(errc::internal, "mapspec_to_json: unknown kind '" + doc.kind + "'");
  }
  return j;
}

json header_json(int dim, std::uint64_t seed) {
  json j;
  j["schema_version"] = kSchemaVersion;
  j["dim"] = dim;
  json rng;
  rng["algorithm"] = kRngAlgorithm;
  rng["seed"] = seed;
  j["rng"] = std::move(rng);
  return j;
}

}  // namespace

std::string canonical_json(const json& j) {
  std::string out;
  emit(out, j);
  out.push_back('\n');
  return out;
}

json complex_to_json(cxd z) { return json::array({z.real(), z.imag()}); }

cxd complex_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2) {
    throw error(errc::parse_error, "complex entry: expected a [re, im] pair");
  }
  return {as_double(j[0], "complex entry"), as_double(j[1], "complex entry")};
}

json vector_to_json(const Vector& v) {
  json j = json::array();
  for (Eigen::Index k = 0; k < v.size(); ++k) j.push_back(complex_to_json(v(k)));
  return j;
}

Vector vector_from_json(const json& j) {
  if (!j.is_array() || j.empty()) {
    throw error(errc::parse_error, "vector: expected a nonempty array");
  }
  Vector v(static_cast<Eigen::Index>(j.size()));
  for (std::size_t k = 0; k < j.size(); ++k) v(static_cast<Eigen::Index>(k)) = complex_from_json(j[k]);
  return v;
}

json matrix_to_json(const Matrix& m) {
  json j = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(complex_to_json(m(r, c)));
    j.push_back(std::move(row));
  }
  return j;
}

Matrix matrix_from_json(const json& j) {
  if (!j.is_array() || j.empty()) {
    throw error(errc::parse_error, "matrix: expected a nonempty array of rows");
  }
  const std::size_t rows = j.size();
  if (!j[0].is_array() || j[0].empty()) {
    throw error(errc::parse_error, "matrix: rows must be nonempty arrays");
  }
  const std::size_t cols = j[0].size();
  Matrix m(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
  for (std::size_t r = 0; r < rows; ++r) {
    if (!j[r].is_array() || j[r].size() != cols) {
      throw error(errc::parse_error, "matrix: ragged rows");
    }
    for (std::size_t c = 0; c < cols; ++c) {
      m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = complex_from_json(j[r][c]);
    }
  }
  return m;
}

MapSpecDoc parse_mapspec_doc(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw error(errc::parse_error, std::string("malformed document: ") + e.what());
  }
  return parse_mapspec_object(j, true);
}

std::string serialize_mapspec(const MapSpecDoc& doc) {
  return canonical_json(mapspec_to_json(doc, true));
}

MapOracle build_oracle(const MapSpecDoc& doc, const ToleranceConfig& tol) {
  if (doc.dim < 1) throw error(errc::invalid_argument, "map spec: dim must be positive");
  if (doc.kind == "induced") {
    if (!satisfies_unitary_invariants(doc.matrix, tol)) {
      throw error(errc::invariant_violation, "induced spec: matrix is not unitary");
    }
    return MapOracle::induced(SymmetryOperator{doc.matrix, doc.antilinear});
  }
  if (doc.kind == "tabulated") {
    std::vector<std::pair<Projection, Projection>> table;
    table.reserve(doc.pairs.size());
    for (const auto& [in, out] : doc.pairs) {
      if (std::abs(in.norm() - 1.0) > tol.unit || std::abs(out.norm() - 1.0) > tol.unit) {
        throw error(errc::not_unit, "tabulated spec: pair vectors must be unit vectors");
      }
      table.emplace_back(Projection{in * in.adjoint()}, Projection{out * out.adjoint()});
    }
    return MapOracle::tabulated(doc.dim, std::move(table));
  }
  if (doc.kind == "composed") {
    std::vector<MapOracle> stages;
    stages.reserve(doc.stages.size());
    for (const MapSpecDoc& stage : doc.stages) stages.push_back(build_oracle(stage, tol));
    return MapOracle::composed(std::move(stages));
  }
  if (doc.kind == "adversarial") {
    return MapOracle::adversarial(doc.generator_name, doc.dim, doc.params, doc.seed);
  }
  throw error(errc::parse_error, "map spec: unknown kind '" + doc.kind + "'");
}

MapOracle parse_mapspec(const std::string& text, const ToleranceConfig& tol) {
  return build_oracle(parse_mapspec_doc(text), tol);
}

MapSpecDoc generate_mapspec(const std::string& name, int dim, std::uint64_t seed, double eps) {
  if (dim < 3) throw error(errc::invalid_argument, "generate_mapspec: dim must be at least 3");
  MapSpecDoc doc;
  doc.dim = dim;
  if (name == "induced" || name == "induced-antiunitary") {
    doc.kind = "induced";
    doc.antilinear = (name == "induced-antiunitary");
    Rng rng(derive_seed(seed, "gen/" + std::string(name)));
    doc.matrix = rng.unitary(dim);
    return doc;
  }
  constexpr const char* kPrefix = "adversarial:";
  if (name.rfind(kPrefix, 0) == 0) {
    std::string gen = name.substr(std::string(kPrefix).size());
    if (gen != "constant" && gen != "collapse_pair" && gen != "noisy_induced" &&
        gen != "cosp_breaker") {
      throw error(errc::unknown_generator, "unknown generator '" + name + "'");
    }
    doc.kind = "adversarial";
    doc.generator_name = gen;
    doc.seed = seed;
    if (gen == "noisy_induced") doc.params.eps = eps;
    return doc;
  }
  throw error(errc::unknown_generator, "unknown generator '" + name + "'");
}

FrameSamplesDoc parse_frame_samples(const std::string& text, const ToleranceConfig& tol) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw error(errc::parse_error, std::string("malformed document: ") + e.what());
  }
  if (!j.is_object()) throw error(errc::parse_error, "frame samples: expected an object");
  check_allowed(j, {"schema_version", "dim", "samples"}, "frame samples");
  if (as_int(require(j, "schema_version", "frame samples"), "schema_version") != kSchemaVersion) {
    throw error(errc::schema_version, "frame samples: unsupported schema_version");
  }
  FrameSamplesDoc doc;
  doc.dim = as_int(require(j, "dim", "frame samples"), "dim");
  if (doc.dim < 1) throw error(errc::invalid_argument, "frame samples: dim must be positive");
  const json& samples = require(j, "samples", "frame samples");
  if (!samples.is_array() || samples.empty()) {
    throw error(errc::parse_error, "frame samples: 'samples' must be a nonempty array");
  }
  for (const json& entry : samples) {
    if (!entry.is_object()) throw error(errc::parse_error, "sample: expected an object");
    check_allowed(entry, {"projection", "value"}, "sample");
    Matrix m = matrix_from_json(require(entry, "projection", "sample"));
    if (m.rows() != doc.dim || m.cols() != doc.dim) {
      throw error(errc::dimension_mismatch, "sample: projection shape differs from dim");
    }
    FrameSample s;
    s.projection = projection_from_matrix(std::move(m), tol);
    s.value = as_double(require(entry, "value", "sample"), "value");
    if (s.value < -tol.fit || s.value > 1.0 + tol.fit) {
      throw error(errc::invariant_violation, "sample: value outside [0, 1]");
    }
    doc.samples.push_back(std::move(s));
  }
  return doc;
}

std::string serialize_frame_samples(const FrameSamplesDoc& doc) {
  json j;
  j["schema_version"] = kSchemaVersion;
  j["dim"] = doc.dim;
  json samples = json::array();
  for (const FrameSample& s : doc.samples) {
    json entry;
    entry["projection"] = matrix_to_json(s.projection.mat);
    entry["value"] = s.value;
    samples.push_back(std::move(entry));
  }
  j["samples"] = std::move(samples);
  return canonical_json(j);
}

std::string serialize_report(const PipelineReport& r, int dim, std::uint64_t seed) {
  json j = header_json(dim, seed);
  j["status"] = r.ok ? "ok" : "error";
  json log = json::array();
  for (const StageEntry& e : r.stage_log) {
    json entry;
    entry["stage"] = e.stage;
    entry["max_deviation"] = e.max_deviation;
    log.push_back(std::move(entry));
  }
  j["stage_log"] = std::move(log);
  if (r.ok) {
    j["linearity"] = r.final.op.antilinear ? "antiunitary" : "unitary";
    j["matrix"] = matrix_to_json(r.final.op.mat);
    j["max_deviation"] = r.final.max_deviation;
    j["verified_projections"] = r.final.verified_pairs;
  } else {
    j["error_code"] = r.error_code;
    j["failed_stage"] = r.failed_stage;
    j["message"] = r.message;
  }
  return canonical_json(j);
}

std::string serialize_verify_report(const VerifyOutcome& v, int dim, std::uint64_t seed) {
  json j = header_json(dim, seed);
  j["status"] = v.pass ? "ok" : "error";
  j["gate_max_transition"] = v.gate_max;
  j["image_is_cosp"] = v.image_is_cosp;
  if (!v.pass) {
    j["error_code"] = v.error_code;
    j["message"] = v.message;
  }
  return canonical_json(j);
}

std::string serialize_fit_report(const FitReport& r, int dim) {
  json j;
  j["schema_version"] = kSchemaVersion;
  j["dim"] = dim;
  j["status"] = r.ok() ? "ok" : "error";
  j["density"] = matrix_to_json(r.density.mat);
  j["residual"] = r.residual;
  j["eigen_floor"] = r.eigen_floor;
  if (!r.ok()) j["error_code"] = r.error_code;
  return canonical_json(j);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw error(errc::io_error, "cannot open '" + path + "' for reading");
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw error(errc::io_error, "read failure on '" + path + "'");
  return buf.str();
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw error(errc::io_error, "cannot open '" + path + "' for writing");
  out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
  out.flush();
  if (!out) throw error(errc::io_error, "write failure on '" + path + "'");
}

}  // namespace wignerkit
