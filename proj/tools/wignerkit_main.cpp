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

// Command-line front end. Talks to the library exclusively through the C
// interface in wignerkit.h. Human-readable summaries go to stdout, report
// documents only to --out, diagnostics to stderr. Exit codes: 0 success,
// 2 parse/validation failure, 3 hypothesis rejection, 4 internal failure.

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "wignerkit.h"

namespace {

struct TolDeleter {
  void operator()(wk_tolerances* t) const { wk_tolerances_free(t); }
};
struct OracleDeleter {
  void operator()(wk_oracle* o) const { wk_oracle_free(o); }
};
struct ReportDeleter {
  void operator()(wk_report* r) const { wk_report_free(r); }
};

using TolPtr = std::unique_ptr<wk_tolerances, TolDeleter>;
using OraclePtr = std::unique_ptr<wk_oracle, OracleDeleter>;
using ReportPtr = std::unique_ptr<wk_report, ReportDeleter>;

struct Options {
  std::string spec_path;
  std::string out_path;
  std::string generator;
  int dim = 3;
  std::uint64_t seed = 0;
  int pairs = 200;
  double eps = 1e-3;
  double tol_orth = 0.0;  // 0 means "leave the default"
  double tol_fit = 0.0;
  double tol_gauge = 0.0;
};

int fail(wk_status s, const char* context) {
  std::cerr << context << ": " << wk_last_error() << "\n";
  return wk_status_exit_code(s);
}

// Tolerances assembled from defaults, WIGNERKIT_TOL_SCALE, then explicit
// flag overrides. Returns nullptr (with exit code in *code) on bad input.
TolPtr make_tolerances(const Options& opt, int* code) {
  TolPtr tol(wk_tolerances_create());
  *code = 0;
  if (const char* scale_text = std::getenv("WIGNERKIT_TOL_SCALE")) {
    char* end = nullptr;
    double scale = std::strtod(scale_text, &end);
    if (end == scale_text || *end != '\0' || !(scale > 0.0)) {
      std::cerr << "WIGNERKIT_TOL_SCALE: expected a positive number, got '" << scale_text
                << "'\n";
      *code = 2;
      return nullptr;
    }
    if (wk_status s = wk_tolerances_scale(tol.get(), scale); s != WK_OK) {
      *code = fail(s, "WIGNERKIT_TOL_SCALE");
      return nullptr;
    }
  }
  const std::pair<const char*, double> overrides[] = {
      {"orth", opt.tol_orth}, {"fit", opt.tol_fit}, {"gauge", opt.tol_gauge}};
  for (const auto& [name, value] : overrides) {
    if (value == 0.0) continue;
    if (wk_status s = wk_tolerances_set(tol.get(), name, value); s != WK_OK) {
      *code = fail(s, "tolerance override");
      return nullptr;
    }
  }
  return tol;
}

bool read_file(const std::string& path, std::string* out) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return false;
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) return false;
  *out = buf.str();
  return true;
}

bool write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) return false;
  out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
  out.flush();
  return static_cast<bool>(out);
}

// Writes the report document to --out when requested; 0 on success.
int emit_document(const wk_report* report, const std::string& out_path) {
  if (out_path.empty()) return 0;
  char* doc = nullptr;
  if (wk_status s = wk_report_document(report, &doc); s != WK_OK) {
    return fail(s, "report serialization");
  }
  std::string text(doc);
  wk_string_free(doc);
  if (!write_file(out_path, text)) {
    std::cerr << "cannot write '" << out_path << "'\n";
    return 2;
  }
  return 0;
}

int load_oracle(const Options& opt, const wk_tolerances* tol, OraclePtr* out) {
  std::string text;
  if (!read_file(opt.spec_path, &text)) {
    std::cerr << "cannot read '" << opt.spec_path << "'\n";
    return 2;
  }
  wk_oracle* oracle = nullptr;
  if (wk_status s = wk_oracle_parse(text.c_str(), text.size(), tol, &oracle); s != WK_OK) {
    return fail(s, "map spec");
  }
  out->reset(oracle);
  return 0;
}

void print_metric(const wk_report* report, const char* name, const char* label) {
  double value = 0.0;
  if (wk_report_metric(report, name, &value) == WK_OK) {
    std::printf("%s: %.17g\n", label, value);
  }
}

int cmd_reconstruct(const Options& opt) {
  int code = 0;
  TolPtr tol = make_tolerances(opt, &code);
  if (!tol) return code;
  OraclePtr oracle;
  if (int c = load_oracle(opt, tol.get(), &oracle); c != 0) return c;

  wk_report* raw = nullptr;
  wk_status s = wk_reconstruct(oracle.get(), opt.seed, opt.pairs, tol.get(), &raw);
  if (s != WK_OK) return fail(s, "reconstruct");
  ReportPtr report(raw);

  if (wk_report_passed(report.get())) {
    std::printf("status: ok\n");
    std::printf("linearity: %s\n",
                wk_report_antilinear(report.get()) == 1 ? "antiunitary" : "unitary");
    print_metric(report.get(), "max_deviation", "max deviation");
  } else {
    std::printf("status: error\n");
    std::printf("failed stage: %s\n", wk_report_failed_stage(report.get()));
    std::printf("error: %s\n", wk_report_error_code(report.get()));
    std::cerr << "rejected at stage '" << wk_report_failed_stage(report.get()) << "' ("
              << wk_report_error_code(report.get()) << ")\n";
  }
  if (int c = emit_document(report.get(), opt.out_path); c != 0) return c;
  return wk_report_exit_code(report.get());
}

int cmd_verify(const Options& opt) {
  int code = 0;
  TolPtr tol = make_tolerances(opt, &code);
  if (!tol) return code;
  OraclePtr oracle;
  if (int c = load_oracle(opt, tol.get(), &oracle); c != 0) return c;

  wk_report* raw = nullptr;
  wk_status s = wk_verify(oracle.get(), opt.seed, opt.pairs, tol.get(), &raw);
  if (s != WK_OK) return fail(s, "verify");
  ReportPtr report(raw);

  print_metric(report.get(), "gate_max_transition", "gate max transition");
  double cosp = 0.0;
  if (wk_report_metric(report.get(), "image_is_cosp", &cosp) == WK_OK) {
    std::printf("image is COSP: %s\n", cosp != 0.0 ? "yes" : "no");
  }
  if (wk_report_passed(report.get())) {
    std::printf("status: ok\n");
  } else {
    std::printf("status: error\n");
    std::printf("error: %s\n", wk_report_error_code(report.get()));
    if (std::strcmp(wk_report_error_code(report.get()), "image-not-cosp") == 0) {
      std::cerr << "image family is not a COSP\n";
    } else {
      std::cerr << "orthogonality gate failed\n";
    }
  }
  if (int c = emit_document(report.get(), opt.out_path); c != 0) return c;
  return wk_report_exit_code(report.get());
}

int cmd_gleason_fit(const Options& opt) {
  int code = 0;
  TolPtr tol = make_tolerances(opt, &code);
  if (!tol) return code;
  std::string text;
  if (!read_file(opt.spec_path, &text)) {
    std::cerr << "cannot read '" << opt.spec_path << "'\n";
    return 2;
  }
  wk_report* raw = nullptr;
  wk_status s = wk_gleason_fit(text.c_str(), text.size(), tol.get(), &raw);
  if (s != WK_OK) return fail(s, "frame samples");
  ReportPtr report(raw);

  std::printf("status: %s\n", wk_report_passed(report.get()) ? "ok" : "error");
  print_metric(report.get(), "residual", "residual");
  print_metric(report.get(), "eigen_floor", "eigen floor");
  if (!wk_report_passed(report.get())) {
    std::printf("error: %s\n", wk_report_error_code(report.get()));
    std::cerr << "fit rejected (" << wk_report_error_code(report.get()) << ")\n";
  }
  if (int c = emit_document(report.get(), opt.out_path); c != 0) return c;
  return wk_report_exit_code(report.get());
}

int cmd_gen(const Options& opt) {
  char* doc = nullptr;
  wk_status s = wk_mapspec_generate(opt.generator.c_str(), opt.dim, opt.seed, opt.eps, &doc);
  if (s != WK_OK) return fail(s, "gen");
  std::string text(doc);
  wk_string_free(doc);
  if (!write_file(opt.out_path, text)) {
    std::cerr << "cannot write '" << opt.out_path << "'\n";
    return 2;
  }
  std::printf("wrote %s\n", opt.out_path.c_str());
  return 0;
}

// Built-in smoke checks through the same C interface the commands use.
int cmd_selftest(const Options& opt) {
  TolPtr tol(wk_tolerances_create());
  int failures = 0;
  auto check = [&failures](bool ok, const char* what) {
    std::printf("[%s] %s\n", ok ? "ok" : "FAIL", what);
    if (!ok) ++failures;
  };

  auto run = [&](const char* gen, int dim, std::uint64_t seed) -> ReportPtr {
    char* doc = nullptr;
    if (wk_mapspec_generate(gen, dim, seed, 1e-3, &doc) != WK_OK) return nullptr;
    std::string text(doc);
    wk_string_free(doc);
    wk_oracle* oracle = nullptr;
    if (wk_oracle_parse(text.c_str(), text.size(), tol.get(), &oracle) != WK_OK) return nullptr;
    OraclePtr guard(oracle);
    wk_report* report = nullptr;
    if (wk_reconstruct(oracle, seed, 0, tol.get(), &report) != WK_OK) return nullptr;
    return ReportPtr(report);
  };

  ReportPtr unitary = run("induced", 3, opt.seed + 1);
  check(unitary && wk_report_passed(unitary.get()) == 1 &&
            wk_report_antilinear(unitary.get()) == 0,
        "induced unitary map reconstructs");

  ReportPtr anti = run("induced-antiunitary", 4, opt.seed + 2);
  check(anti && wk_report_passed(anti.get()) == 1 && wk_report_antilinear(anti.get()) == 1,
        "induced antiunitary map reconstructs");

  ReportPtr constant = run("adversarial:constant", 3, opt.seed + 3);
  check(constant && wk_report_passed(constant.get()) == 0 &&
            std::strcmp(wk_report_failed_stage(constant.get()), "verify_orth_preserving") == 0,
        "constant map rejected at the orthogonality gate");

  ReportPtr breaker = run("adversarial:cosp_breaker", 4, opt.seed + 4);
  check(breaker && wk_report_passed(breaker.get()) == 0 &&
            std::strcmp(wk_report_error_code(breaker.get()), "image-not-cosp") == 0,
        "cosp_breaker rejected at alignment");

  char* a = nullptr;
  char* b = nullptr;
  bool det = wk_mapspec_generate("induced", 5, opt.seed + 5, 1e-3, &a) == WK_OK &&
             wk_mapspec_generate("induced", 5, opt.seed + 5, 1e-3, &b) == WK_OK &&
             std::strcmp(a, b) == 0;
  wk_string_free(a);
  wk_string_free(b);
  check(det, "generation is deterministic per seed");

  std::printf("%s\n", failures == 0 ? "selftest passed" : "selftest FAILED");
  return failures == 0 ? 0 : 4;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Reconstruction toolkit for orthogonality-preserving maps on rank-one "
               "projections"};
  app.set_version_flag("--version", []() { return std::string(wk_version()); });
  app.require_subcommand(1);

  Options opt;

  CLI::App* reconstruct =
      app.add_subcommand("reconstruct", "Run the full reconstruction pipeline on a map spec");
  reconstruct->add_option("--spec", opt.spec_path, "Map-spec document")->required();
  reconstruct->add_option("--out", opt.out_path, "Write the report document here");
  reconstruct->add_option("--seed", opt.seed, "Base seed for all sampling");
  reconstruct->add_option("--pairs", opt.pairs, "Random orthogonal pairs at the gate");
  reconstruct->add_option("--tol-orth", opt.tol_orth, "Override the orthogonality tolerance");
  reconstruct->add_option("--tol-fit", opt.tol_fit, "Override the fit tolerance");
  reconstruct->add_option("--tol-gauge", opt.tol_gauge, "Override the gauge tolerance");

  CLI::App* verify =
      app.add_subcommand("verify", "Check the orthogonality gate and the image of the basis");
  verify->add_option("--spec", opt.spec_path, "Map-spec document")->required();
  verify->add_option("--out", opt.out_path, "Write the report document here");
  verify->add_option("--seed", opt.seed, "Base seed for all sampling");
  verify->add_option("--pairs", opt.pairs, "Random orthogonal pairs at the gate");
  verify->add_option("--tol-orth", opt.tol_orth, "Override the orthogonality tolerance");
  verify->add_option("--tol-fit", opt.tol_fit, "Override the fit tolerance");
  verify->add_option("--tol-gauge", opt.tol_gauge, "Override the gauge tolerance");

  CLI::App* fit = app.add_subcommand("gleason-fit", "Fit a density operator to frame samples");
  fit->add_option("--spec", opt.spec_path, "Frame-samples document")->required();
  fit->add_option("--out", opt.out_path, "Write the fit report here");
  fit->add_option("--tol-orth", opt.tol_orth, "Override the orthogonality tolerance");
  fit->add_option("--tol-fit", opt.tol_fit, "Override the fit tolerance");
  fit->add_option("--tol-gauge", opt.tol_gauge, "Override the gauge tolerance");

  CLI::App* gen = app.add_subcommand("gen", "Write a deterministic map-spec document");
  gen->add_option("name", opt.generator,
                  "Generator: induced, induced-antiunitary, adversarial:constant, "
                  "adversarial:collapse_pair, adversarial:noisy_induced, "
                  "adversarial:cosp_breaker")
      ->required();
  gen->add_option("--dim", opt.dim, "Hilbert space dimension (at least 3)");
  gen->add_option("--seed", opt.seed, "Generator seed");
  gen->add_option("--eps", opt.eps, "Rotation magnitude for noisy_induced");
  gen->add_option("--out", opt.out_path, "Output path for the document")->required();

  CLI::App* selftest = app.add_subcommand("selftest", "Run built-in smoke checks");
  selftest->add_option("--seed", opt.seed, "Base seed for the checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }

  if (reconstruct->parsed()) return cmd_reconstruct(opt);
  if (verify->parsed()) return cmd_verify(opt);
  if (fit->parsed()) return cmd_gleason_fit(opt);
  if (gen->parsed()) return cmd_gen(opt);
  if (selftest->parsed()) return cmd_selftest(opt);
  return 2;
}
