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

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "gleason.hpp"
#include "oracle.hpp"
#include "uhlhorn.hpp"

namespace wignerkit {

inline constexpr int kSchemaVersion = 1;

/// Canonical serialization: objects with keys in byte order, no whitespace,
/// doubles printed by to_chars in general form with 17 significant digits,
/// one trailing newline. Byte-identical across platforms for equal inputs.
std::string canonical_json(const nlohmann::json& j);

nlohmann::json complex_to_json(cxd z);
cxd complex_from_json(const nlohmann::json& j);
nlohmann::json vector_to_json(const Vector& v);
Vector vector_from_json(const nlohmann::json& j);
nlohmann::json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const nlohmann::json& j);

/// In-memory form of a map-spec document (schema_version 1). Exactly the
/// fields demanded by `kind` are populated:
///   induced:      matrix, antilinear
///   tabulated:    pairs (unit vectors; projections are their outer products)
///   composed:     stages, applied in list order
///   adversarial:  generator_name, params, seed
struct MapSpecDoc {
  int dim = 0;
  std::string kind;
  Matrix matrix;
  bool antilinear = false;
  std::vector<std::pair<Vector, Vector>> pairs;
  std::vector<MapSpecDoc> stages;
  std::string generator_name;
  AdversarialParams params;
  std::uint64_t seed = 0;
};

MapSpecDoc parse_mapspec_doc(const std::string& text);
std::string serialize_mapspec(const MapSpecDoc& doc);

/// Validated oracle from a document; checks matrices against the
/// SymmetryOperator/Projection invariants at load time.
MapOracle build_oracle(const MapSpecDoc& doc, const ToleranceConfig& tol);
MapOracle parse_mapspec(const std::string& text, const ToleranceConfig& tol);

/// Deterministic spec document for a named generator. Accepted names:
/// "induced", "induced-antiunitary", and "adversarial:<g>" for g in
/// {constant, collapse_pair, noisy_induced, cosp_breaker}. `eps` feeds the
/// noisy_induced rotation angle and is ignored elsewhere.
MapSpecDoc generate_mapspec(const std::string& name, int dim, std::uint64_t seed, double eps);

struct FrameSamplesDoc {
  int dim = 0;
  std::vector<FrameSample> samples;
};

FrameSamplesDoc parse_frame_samples(const std::string& text, const ToleranceConfig& tol);
std::string serialize_frame_samples(const FrameSamplesDoc& doc);

/// Gate-plus-COSP check outcome, the payload of a verify report.
struct VerifyOutcome {
  double gate_max = 0.0;
  bool image_is_cosp = false;
  bool pass = false;
  std::string error_code;   // empty when pass
  std::string message;
};

std::string serialize_report(const PipelineReport& r, int dim, std::uint64_t seed);
std::string serialize_verify_report(const VerifyOutcome& v, int dim, std::uint64_t seed);
std::string serialize_fit_report(const FitReport& r, int dim);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& contents);

}  // namespace wignerkit
