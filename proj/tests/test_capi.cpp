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

// Exercises the shared library strictly through the C header, the way an
// external binding would.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <cstring>
#include <memory>
#include <string>
#include <vector>

#include <json.hpp>

#include <wignerkit.h>

using nlohmann::json;

namespace {

struct TolDelete {
  void operator()(wk_tolerances* t) const { wk_tolerances_free(t); }
};
struct OracleDelete {
  void operator()(wk_oracle* o) const { wk_oracle_free(o); }
};
struct ReportDelete {
  void operator()(wk_report* r) const { wk_report_free(r); }
};
using TolPtr = std::unique_ptr<wk_tolerances, TolDelete>;
using OraclePtr = std::unique_ptr<wk_oracle, OracleDelete>;
using ReportPtr = std::unique_ptr<wk_report, ReportDelete>;

std::string take_string(char* s) {
  REQUIRE(s != nullptr);
  std::string out(s);
  wk_string_free(s);
  return out;
}

std::string generate(const char* name, int dim, uint64_t seed, double eps = 0.0) {
  char* doc = nullptr;
  REQUIRE(wk_mapspec_generate(name, dim, seed, eps, &doc) == WK_OK);
  return take_string(doc);
}

OraclePtr parse(const std::string& text) {
  wk_oracle* o = nullptr;
  REQUIRE(wk_oracle_parse(text.c_str(), text.size(), nullptr, &o) == WK_OK);
  return OraclePtr(o);
}

std::string report_document(const wk_report* r) {
  char* doc = nullptr;
  REQUIRE(wk_report_document(r, &doc) == WK_OK);
  return take_string(doc);
}

// Rank-one projection v v^dagger as a report-schema matrix.
json projection_json(const std::vector<std::complex<double>>& v) {
  json rows = json::array();
  for (const auto& a : v) {
    json row = json::array();
    for (const auto& b : v) {
      std::complex<double> e = a * std::conj(b);
      row.push_back(json::array({e.real(), e.imag()}));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

// Frame-samples document of the maximally mixed state on a dim-3
// informationally complete design; every value is exactly 1/3.
std::string mixed_state_samples() {
  const double s = 1.0 / std::sqrt(2.0);
  using C = std::complex<double>;
  std::vector<std::vector<C>> vectors = {
      {1, 0, 0}, {0, 1, 0}, {0, 0, 1},
      {{s, 0}, {s, 0}, {0, 0}}, {{s, 0}, {0, 0}, {s, 0}}, {{0, 0}, {s, 0}, {s, 0}},
      {{s, 0}, {0, s}, {0, 0}}, {{s, 0}, {0, 0}, {0, s}}, {{0, 0}, {s, 0}, {0, s}}};
  json doc;
  doc["schema_version"] = 1;
  doc["dim"] = 3;
  json samples = json::array();
  for (const auto& v : vectors) {
    json entry;
    entry["projection"] = projection_json(v);
    entry["value"] = 1.0 / 3.0;
    samples.push_back(std::move(entry));
  }
  doc["samples"] = std::move(samples);
  return doc.dump();
}

}  // namespace

TEST_CASE("version and error state") {
  CHECK(std::string(wk_version()) == "1.0.0");

  TolPtr tol(wk_tolerances_create());
  REQUIRE(tol != nullptr);
  CHECK(wk_tolerances_set(tol.get(), "fit", 1e-6) == WK_OK);
  CHECK(std::string(wk_last_error()).empty());

  CHECK(wk_tolerances_set(tol.get(), "mystery", 1e-6) == WK_ERR_INVALID);
  CHECK_FALSE(std::string(wk_last_error()).empty());

  CHECK(wk_tolerances_set(tol.get(), "fit", -1.0) == WK_ERR_INVALID);
  CHECK(wk_tolerances_set(nullptr, "fit", 1e-6) == WK_ERR_INVALID);
  CHECK(wk_tolerances_scale(tol.get(), 0.0) == WK_ERR_INVALID);
  CHECK(wk_tolerances_scale(tol.get(), 10.0) == WK_OK);
  CHECK(std::string(wk_last_error()).empty());
}

TEST_CASE("generate, parse and reconstruct an induced map") {
  std::string spec = generate("induced", 4, 7);
  CHECK(generate("induced", 4, 7) == spec);
  CHECK(generate("induced", 4, 8) != spec);

  OraclePtr oracle = parse(spec);
  CHECK(wk_oracle_dim(oracle.get()) == 4);

  wk_report* raw = nullptr;
  REQUIRE(wk_reconstruct(oracle.get(), 1, 0, nullptr, &raw) == WK_OK);
  ReportPtr report(raw);
  CHECK(wk_report_passed(report.get()) == 1);
  CHECK(wk_report_exit_code(report.get()) == 0);
  CHECK(wk_report_antilinear(report.get()) == 0);
  CHECK(std::string(wk_report_error_code(report.get())).empty());

  double dev = 1.0;
  REQUIRE(wk_report_metric(report.get(), "max_deviation", &dev) == WK_OK);
  CHECK(dev < 1e-7);
  double gate = 1.0;
  REQUIRE(wk_report_metric(report.get(), "gate_max_transition", &gate) == WK_OK);
  CHECK(gate < 1e-10);
  CHECK(wk_report_metric(report.get(), "mystery", &dev) == WK_ERR_INVALID);

  json doc = json::parse(report_document(report.get()));
  CHECK(doc["schema_version"] == 1);
  CHECK(doc["dim"] == 4);
  CHECK(doc["status"] == "ok");
  CHECK(doc["linearity"] == "unitary");
  CHECK(doc["stage_log"][0]["stage"] == "verify_orth_preserving");
}

TEST_CASE("antiunitary maps are labeled as such") {
  OraclePtr oracle = parse(generate("induced-antiunitary", 3, 9));
  wk_report* raw = nullptr;
  REQUIRE(wk_reconstruct(oracle.get(), 1, 0, nullptr, &raw) == WK_OK);
  ReportPtr report(raw);
  CHECK(wk_report_passed(report.get()) == 1);
  CHECK(wk_report_antilinear(report.get()) == 1);
  json doc = json::parse(report_document(report.get()));
  CHECK(doc["linearity"] == "antiunitary");
}

TEST_CASE("clean rejections come back as reports, not statuses") {
  OraclePtr oracle = parse(generate("adversarial:constant", 4, 3));
  wk_report* raw = nullptr;
  REQUIRE(wk_reconstruct(oracle.get(), 1, 0, nullptr, &raw) == WK_OK);
  ReportPtr report(raw);
  CHECK(wk_report_passed(report.get()) == 0);
  CHECK(wk_report_exit_code(report.get()) == 3);
  CHECK(wk_report_antilinear(report.get()) == -1);
  CHECK(std::string(wk_report_error_code(report.get())) == "orthogonality-violated");
  CHECK(std::string(wk_report_failed_stage(report.get())) == "verify_orth_preserving");
  json doc = json::parse(report_document(report.get()));
  CHECK(doc["status"] == "error");
  CHECK(doc["error_code"] == "orthogonality-violated");
}

TEST_CASE("verify flags a broken image family") {
  OraclePtr oracle = parse(generate("adversarial:cosp_breaker", 4, 5));
  wk_report* raw = nullptr;
  REQUIRE(wk_verify(oracle.get(), 2, 0, nullptr, &raw) == WK_OK);
  ReportPtr report(raw);
  CHECK(wk_report_passed(report.get()) == 0);
  CHECK(std::string(wk_report_error_code(report.get())) == "image-not-cosp");
  double is_cosp = 1.0;
  REQUIRE(wk_report_metric(report.get(), "image_is_cosp", &is_cosp) == WK_OK);
  CHECK(is_cosp == 0.0);
  double gate = 1.0;
  REQUIRE(wk_report_metric(report.get(), "gate_max_transition", &gate) == WK_OK);
  CHECK(gate < 1e-8);

  // Non-positive pair counts select the default sample size.
  OraclePtr good = parse(generate("induced", 3, 6));
  wk_report* a = nullptr;
  wk_report* b = nullptr;
  REQUIRE(wk_verify(good.get(), 2, -1, nullptr, &a) == WK_OK);
  REQUIRE(wk_verify(good.get(), 2, 200, nullptr, &b) == WK_OK);
  ReportPtr ra(a), rb(b);
  CHECK(wk_report_passed(ra.get()) == 1);
  CHECK(report_document(ra.get()) == report_document(rb.get()));
}

TEST_CASE("gleason fit through the C surface") {
  std::string samples = mixed_state_samples();
  wk_report* raw = nullptr;
  REQUIRE(wk_gleason_fit(samples.c_str(), samples.size(), nullptr, &raw) == WK_OK);
  ReportPtr report(raw);
  CHECK(wk_report_passed(report.get()) == 1);
  double residual = 1.0;
  REQUIRE(wk_report_metric(report.get(), "residual", &residual) == WK_OK);
  CHECK(residual < 1e-9);
  json doc = json::parse(report_document(report.get()));
  CHECK(doc["status"] == "ok");
  CHECK(doc["density"][0][0][0].get<double>() == doctest::Approx(1.0 / 3.0).epsilon(1e-9));
  CHECK(doc["density"][0][1][0].get<double>() == doctest::Approx(0.0).epsilon(1e-9));

  // Too few samples: a clean rejection inside the report.
  json trimmed = json::parse(samples);
  trimmed["samples"].erase(trimmed["samples"].begin() + 4, trimmed["samples"].end());
  std::string few = trimmed.dump();
  wk_report* raw2 = nullptr;
  REQUIRE(wk_gleason_fit(few.c_str(), few.size(), nullptr, &raw2) == WK_OK);
  ReportPtr deficient(raw2);
  CHECK(wk_report_passed(deficient.get()) == 0);
  CHECK(wk_report_exit_code(deficient.get()) == 3);
  CHECK(std::string(wk_report_error_code(deficient.get())) == "design-deficient");

  // Malformed text is a parse failure, not a report.
  wk_report* raw3 = nullptr;
  CHECK(wk_gleason_fit("junk", 4, nullptr, &raw3) == WK_ERR_PARSE);
  CHECK(raw3 == nullptr);
}

TEST_CASE("null arguments and unknown generators are invalid") {
  wk_oracle* o = nullptr;
  CHECK(wk_oracle_parse(nullptr, 0, nullptr, &o) == WK_ERR_INVALID);
  CHECK(wk_reconstruct(nullptr, 0, 0, nullptr, nullptr) == WK_ERR_INVALID);
  char* doc = nullptr;
  CHECK(wk_mapspec_generate("adversarial:mystery", 3, 0, 0.0, &doc) == WK_ERR_INVALID);
  CHECK(doc == nullptr);
  CHECK(wk_oracle_dim(nullptr) == 0);
  CHECK(wk_report_passed(nullptr) == 0);
  CHECK(wk_report_antilinear(nullptr) == -1);
}

TEST_CASE("status exit codes are pinned") {
  CHECK(wk_status_exit_code(WK_OK) == 0);
  CHECK(wk_status_exit_code(WK_ERR_INVALID) == 2);
  CHECK(wk_status_exit_code(WK_ERR_PARSE) == 2);
  CHECK(wk_status_exit_code(WK_ERR_REJECTED) == 3);
  CHECK(wk_status_exit_code(WK_ERR_INTERNAL) == 4);
}
