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

#include "wignerkit.h"

#include <cstdlib>
#include <cstring>
#include <map>
#include <string>
#include <utility>

#include "docio.hpp"
#include "gleason.hpp"
#include "projspace.hpp"
#include "uhlhorn.hpp"

struct wk_tolerances {
  wignerkit::ToleranceConfig cfg;
};

struct wk_oracle {
  wignerkit::MapOracle oracle;
  explicit wk_oracle(wignerkit::MapOracle o) : oracle(std::move(o)) {}
};

struct wk_report {
  std::string document;
  bool passed = false;
  std::string error_code;
  std::string failed_stage;
  int antilinear = -1;
  std::map<std::string, double> metrics;
};

namespace {

using namespace wignerkit;

thread_local std::string g_last_error;

wk_status class_of(errc c) {
  switch (c) {
    case errc::parse_error:
    case errc::schema_version:
      return WK_ERR_PARSE;
    case errc::invalid_argument:
    case errc::dimension_mismatch:
    case errc::not_unit:
    case errc::invariant_violation:
    case errc::unknown_generator:
    case errc::io_error:
      return WK_ERR_INVALID;
    case errc::internal:
      return WK_ERR_INTERNAL;
    default:
      return WK_ERR_REJECTED;
  }
}

template <typename F>
wk_status guarded(F&& f) {
  try {
    f();
    g_last_error.clear();
    return WK_OK;
  } catch (const error& e) {
    g_last_error = e.what();
    return class_of(e.code());
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return WK_ERR_INTERNAL;
  } catch (...) {
    g_last_error = "unknown failure";
    return WK_ERR_INTERNAL;
  }
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out != nullptr) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

ToleranceConfig resolve(const wk_tolerances* t) {
  return (t != nullptr) ? t->cfg : ToleranceConfig{};
}

}  // namespace

extern "C" {

const char* wk_version(void) { return "1.0.0"; }

const char* wk_last_error(void) { return g_last_error.c_str(); }

void wk_string_free(char* s) { std::free(s); }

wk_tolerances* wk_tolerances_create(void) { return new wk_tolerances{}; }

wk_status wk_tolerances_set(wk_tolerances* t, const char* name, double value) {
  return guarded([&] {
    if (t == nullptr || name == nullptr) {
      throw error(errc::invalid_argument, "wk_tolerances_set: null argument");
    }
    if (value <= 0.0) {
      throw error(errc::invalid_argument, "wk_tolerances_set: thresholds must be positive");
    }
    if (!t->cfg.set(name, value)) {
      throw error(errc::invalid_argument,
                  std::string("wk_tolerances_set: unknown tolerance '") + name + "'");
    }
  });
}

wk_status wk_tolerances_scale(wk_tolerances* t, double factor) {
  return guarded([&] {
    if (t == nullptr) throw error(errc::invalid_argument, "wk_tolerances_scale: null handle");
    if (factor <= 0.0) {
      throw error(errc::invalid_argument, "wk_tolerances_scale: factor must be positive");
    }
    t->cfg = t->cfg.scaled(factor);
  });
}

void wk_tolerances_free(wk_tolerances* t) { delete t; }

wk_status wk_oracle_parse(const char* text, size_t len, const wk_tolerances* tol,
                          wk_oracle** out) {
  return guarded([&] {
    if (text == nullptr || out == nullptr) {
      throw error(errc::invalid_argument, "wk_oracle_parse: null argument");
    }
    *out = nullptr;
    MapOracle oracle = parse_mapspec(std::string(text, len), resolve(tol));
    *out = new wk_oracle(std::move(oracle));
  });
}

int wk_oracle_dim(const wk_oracle* o) { return (o != nullptr) ? o->oracle.dim() : 0; }

void wk_oracle_free(wk_oracle* o) { delete o; }

wk_status wk_mapspec_generate(const char* name, int dim, uint64_t seed, double eps,
                              char** out) {
  return guarded([&] {
    if (name == nullptr || out == nullptr) {
      throw error(errc::invalid_argument, "wk_mapspec_generate: null argument");
    }
    *out = nullptr;
    std::string doc = serialize_mapspec(generate_mapspec(name, dim, seed, eps));
    *out = dup_string(doc);
    if (*out == nullptr) throw error(errc::internal, "wk_mapspec_generate: allocation failed");
  });
}

wk_status wk_reconstruct(const wk_oracle* o, uint64_t seed, int pairs,
                         const wk_tolerances* tol, wk_report** out) {
  return guarded([&] {
    if (o == nullptr || out == nullptr) {
      throw error(errc::invalid_argument, "wk_reconstruct: null argument");
    }
    *out = nullptr;
    ToleranceConfig cfg = resolve(tol);
    const int dim = o->oracle.dim();
    PipelineOptions opts;
    opts.seed = seed;
    if (pairs > 0) opts.pairs = pairs;
    PipelineReport rep = reconstruct_symmetry(o->oracle, standard_cosp(dim), dim, cfg, opts);

    auto* r = new wk_report;
    r->document = serialize_report(rep, dim, seed);
    r->passed = rep.ok;
    if (rep.ok) {
      r->antilinear = rep.final.op.antilinear ? 1 : 0;
      r->metrics["max_deviation"] = rep.final.max_deviation;
    } else {
      r->error_code = rep.error_code;
      r->failed_stage = rep.failed_stage;
    }
    for (const StageEntry& e : rep.stage_log) {
      if (e.stage == kStageGate) r->metrics["gate_max_transition"] = e.max_deviation;
    }
    *out = r;
  });
}

wk_status wk_verify(const wk_oracle* o, uint64_t seed, int pairs, const wk_tolerances* tol,
                    wk_report** out) {
  return guarded([&] {
    if (o == nullptr || out == nullptr) {
      throw error(errc::invalid_argument, "wk_verify: null argument");
    }
    *out = nullptr;
    ToleranceConfig cfg = resolve(tol);
    const int dim = o->oracle.dim();
    const int gate_pairs = (pairs > 0) ? pairs : PipelineOptions{}.pairs;

    VerifyOutcome v;
    try {
      v.gate_max = verify_orth_preserving(o->oracle, dim, gate_pairs, seed, cfg);
      Cosp cosp = standard_cosp(dim);
      std::vector<Projection> images;
      images.reserve(cosp.projections.size());
      for (const Projection& p : cosp.projections) images.push_back(o->oracle(p));
      v.image_is_cosp = is_cosp(images, dim, cfg);
      const bool gate_ok = v.gate_max <= cfg.orth;
      v.pass = gate_ok && v.image_is_cosp;
      if (!v.pass) {
        if (!gate_ok) {
          v.error_code = to_string(errc::orthogonality_violated);
          v.message = "sampled orthogonality gate exceeded tolerance";
        } else {
          v.error_code = to_string(errc::image_not_cosp);
          v.message = kImageNotCospMessage;
        }
      }
    } catch (const error& e) {
      if (class_of(e.code()) != WK_ERR_REJECTED) throw;
      v.pass = false;
      v.error_code = to_string(e.code());
      v.message = e.what();
    }

    auto* r = new wk_report;
    r->document = serialize_verify_report(v, dim, seed);
    r->passed = v.pass;
    r->error_code = v.error_code;
    r->metrics["gate_max_transition"] = v.gate_max;
    r->metrics["image_is_cosp"] = v.image_is_cosp ? 1.0 : 0.0;
    *out = r;
  });
}

wk_status wk_gleason_fit(const char* text, size_t len, const wk_tolerances* tol,
                         wk_report** out) {
  return guarded([&] {
    if (text == nullptr || out == nullptr) {
      throw error(errc::invalid_argument, "wk_gleason_fit: null argument");
    }
    *out = nullptr;
    ToleranceConfig cfg = resolve(tol);
    FrameSamplesDoc doc = parse_frame_samples(std::string(text, len), cfg);
    FitReport rep = fit_density(doc.samples, doc.dim, cfg);

    auto* r = new wk_report;
    r->document = serialize_fit_report(rep, doc.dim);
    r->passed = rep.ok();
    r->error_code = rep.error_code;
    r->metrics["residual"] = rep.residual;
    r->metrics["eigen_floor"] = rep.eigen_floor;
    *out = r;
  });
}

wk_status wk_report_document(const wk_report* r, char** out) {
  return guarded([&] {
    if (r == nullptr || out == nullptr) {
      throw error(errc::invalid_argument, "wk_report_document: null argument");
    }
    *out = dup_string(r->document);
    if (*out == nullptr) throw error(errc::internal, "wk_report_document: allocation failed");
  });
}

int wk_report_passed(const wk_report* r) { return (r != nullptr && r->passed) ? 1 : 0; }

const char* wk_report_error_code(const wk_report* r) {
  return (r != nullptr) ? r->error_code.c_str() : "";
}

const char* wk_report_failed_stage(const wk_report* r) {
  return (r != nullptr) ? r->failed_stage.c_str() : "";
}

int wk_report_antilinear(const wk_report* r) { return (r != nullptr) ? r->antilinear : -1; }

wk_status wk_report_metric(const wk_report* r, const char* name, double* out) {
  return guarded([&] {
    if (r == nullptr || name == nullptr || out == nullptr) {
      throw error(errc::invalid_argument, "wk_report_metric: null argument");
    }
    auto it = r->metrics.find(name);
    if (it == r->metrics.end()) {
      throw error(errc::invalid_argument,
                  std::string("wk_report_metric: no metric '") + name + "'");
    }
    *out = it->second;
  });
}

int wk_report_exit_code(const wk_report* r) {
  return (r != nullptr && r->passed) ? 0 : 3;
}

void wk_report_free(wk_report* r) { delete r; }

int wk_status_exit_code(wk_status s) {
  switch (s) {
    case WK_OK:
      return 0;
    case WK_ERR_INVALID:
    case WK_ERR_PARSE:
      return 2;
    case WK_ERR_REJECTED:
      return 3;
    case WK_ERR_INTERNAL:
    default:
      return 4;
  }
}

}  // extern "C"
