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

// Spawns the installed binary and checks exit codes, summaries and the
// byte-level determinism of emitted documents.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "docio.hpp"
#include "gleason.hpp"
#include "helpers.hpp"
#include "projspace.hpp"

using namespace wignerkit;
using namespace wignerkit::testutil;
using nlohmann::json;

namespace {

struct RunResult {
  int code = -1;
  std::string output;
};

// Runs a shell command, capturing stdout and stderr together.
RunResult run(const std::string& cmd) {
  RunResult result;
  std::string full = cmd + " 2>&1";
  FILE* pipe = popen(full.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[4096];
  std::size_t n = 0;
  while ((n = std::fread(buf, 1, sizeof buf, pipe)) > 0) result.output.append(buf, n);
  int status = pclose(pipe);
  result.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

const std::string& cli() {
  static const std::string path = WIGNERKIT_CLI_PATH;
  return path;
}

// Scratch directory shared by the whole run; removed when the process exits.
struct ScratchDir {
  std::string path;
  ScratchDir() {
    char tmpl[] = "/tmp/wignerkit_cli_XXXXXX";
    if (char* made = mkdtemp(tmpl)) path = made;
  }
  ~ScratchDir() {
    if (!path.empty()) {
      std::error_code ec;
      std::filesystem::remove_all(path, ec);
    }
  }
};

const std::string& tmpdir() {
  static ScratchDir scratch;
  REQUIRE_FALSE(scratch.path.empty());
  return scratch.path;
}

std::string path_of(const std::string& name) { return tmpdir() + "/" + name; }

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

// Emits a spec document for a generator and returns its path.
std::string gen_spec(const std::string& generator, int dim, int seed,
                     const std::string& name, const std::string& extra = "") {
  std::string path = path_of(name);
  RunResult r = run(cli() + " gen " + generator + " --dim " + std::to_string(dim) +
                    " --seed " + std::to_string(seed) + extra + " --out " + path);
  REQUIRE(r.code == 0);
  return path;
}

}  // namespace

TEST_CASE("reconstruct accepts induced specs and labels the linearity") {
  std::string spec = gen_spec("induced", 3, 5, "u3.json");
  RunResult r = run(cli() + " reconstruct --spec " + spec);
  CHECK(r.code == 0);
  CHECK(contains(r.output, "status: ok"));
  CHECK(contains(r.output, "linearity: unitary"));

  std::string anti = gen_spec("induced-antiunitary", 4, 6, "a4.json");
  RunResult ra = run(cli() + " reconstruct --spec " + anti);
  CHECK(ra.code == 0);
  CHECK(contains(ra.output, "linearity: antiunitary"));
}

TEST_CASE("missing and malformed inputs exit 2") {
  RunResult missing = run(cli() + " reconstruct --spec " + path_of("absent.json"));
  CHECK(missing.code == 2);
  CHECK(contains(missing.output, "cannot read"));

  write_file(path_of("broken.json"), "{\"truncated\": ");
  RunResult broken = run(cli() + " reconstruct --spec " + path_of("broken.json"));
  CHECK(broken.code == 2);

  write_file(path_of("future.json"),
             R"({"schema_version":2,"dim":3,"kind":"adversarial","generator":{"name":"constant","params":{},"seed":1}})");
  RunResult future = run(cli() + " reconstruct --spec " + path_of("future.json"));
  CHECK(future.code == 2);

  CHECK(run(cli() + " reconstruct --mystery-flag 1").code == 2);
  CHECK(run(cli()).code == 2);
  CHECK(run(cli() + " dance").code == 2);
  CHECK(run(cli() + " gen adversarial:mystery --out " + path_of("x.json")).code == 2);
}

TEST_CASE("adversarial maps exit 3 with the stage in the report") {
  std::string constant = gen_spec("adversarial:constant", 3, 7, "const.json");
  std::string report_path = path_of("const_report.json");
  RunResult r = run(cli() + " reconstruct --spec " + constant + " --out " + report_path);
  CHECK(r.code == 3);
  CHECK(contains(r.output, "status: error"));
  CHECK(contains(r.output, "failed stage: verify_orth_preserving"));
  json doc = json::parse(read_file(report_path));
  CHECK(doc["status"] == "error");
  CHECK(doc["error_code"] == "orthogonality-violated");
  CHECK(doc["failed_stage"] == "verify_orth_preserving");

  std::string breaker = gen_spec("adversarial:cosp_breaker", 4, 8, "breaker.json");
  std::string breaker_report = path_of("breaker_report.json");
  RunResult rb = run(cli() + " reconstruct --spec " + breaker + " --out " + breaker_report);
  CHECK(rb.code == 3);
  json bdoc = json::parse(read_file(breaker_report));
  CHECK(bdoc["error_code"] == "image-not-cosp");
  CHECK(bdoc["failed_stage"] == "align_cosp");
  CHECK(bdoc["message"] == "image family is not a COSP");
}

TEST_CASE("gleason-fit handles clean, deficient and inconsistent documents") {
  DensityOperator d = random_density(3, 404);
  FrameSamplesDoc doc;
  doc.dim = 3;
  for (const Projection& p : ic_family(3)) doc.samples.push_back({p, frame_value(d, p)});

  std::string clean = path_of("frames_clean.json");
  write_file(clean, serialize_frame_samples(doc));
  std::string fit_report = path_of("fit_clean.json");
  RunResult ok = run(cli() + " gleason-fit --spec " + clean + " --out " + fit_report);
  CHECK(ok.code == 0);
  CHECK(contains(ok.output, "status: ok"));
  json fit = json::parse(read_file(fit_report));
  CHECK(frob(matrix_from_json(fit["density"]), d.mat) < 1e-9);

  FrameSamplesDoc few;
  few.dim = 3;
  few.samples.assign(doc.samples.begin(), doc.samples.begin() + 4);
  std::string deficient = path_of("frames_few.json");
  write_file(deficient, serialize_frame_samples(few));
  RunResult rf = run(cli() + " gleason-fit --spec " + deficient);
  CHECK(rf.code == 3);
  CHECK(contains(rf.output, "design-deficient"));

  // Overdetermined design with one corrupted sample: the misfit survives in
  // the residual no matter which density is fitted.
  FrameSamplesDoc bumped = doc;
  for (int k = 0; k < 91; ++k) {
    Projection p = random_projection(3, 9000 + k);
    bumped.samples.push_back({p, frame_value(d, p)});
  }
  bumped.samples[0].value += 0.05;
  std::string inconsistent = path_of("frames_bump.json");
  write_file(inconsistent, serialize_frame_samples(bumped));
  std::string bump_report = path_of("fit_bump.json");
  RunResult ri = run(cli() + " gleason-fit --spec " + inconsistent + " --out " + bump_report);
  CHECK(ri.code == 3);
  CHECK(contains(ri.output, "inconsistent-samples"));
  json bump = json::parse(read_file(bump_report));
  double residual = bump["residual"].get<double>();
  CHECK(residual > 0.03);
  CHECK(residual < 0.06);

  // A loosened fit tolerance accepts the same document.
  RunResult loose = run(cli() + " gleason-fit --spec " + inconsistent + " --tol-fit 0.2");
  CHECK(loose.code == 0);
}

TEST_CASE("emitted documents are byte-identical across runs") {
  std::string spec = gen_spec("induced", 4, 9, "det.json");
  std::string a = path_of("det_a.json");
  std::string b = path_of("det_b.json");
  CHECK(run(cli() + " reconstruct --spec " + spec + " --seed 3 --out " + a).code == 0);
  CHECK(run(cli() + " reconstruct --spec " + spec + " --seed 3 --out " + b).code == 0);
  CHECK(read_file(a) == read_file(b));

  std::string c = path_of("det_c.json");
  CHECK(run(cli() + " verify --spec " + spec + " --seed 3 --out " + c).code == 0);
  std::string d = path_of("det_d.json");
  CHECK(run(cli() + " verify --spec " + spec + " --seed 3 --out " + d).code == 0);
  CHECK(read_file(c) == read_file(d));

  std::string g1 = gen_spec("adversarial:noisy_induced", 3, 11, "gen_a.json");
  std::string g2 = gen_spec("adversarial:noisy_induced", 3, 11, "gen_b.json");
  CHECK(read_file(g1) == read_file(g2));
}

TEST_CASE("verify separates clean maps from breakers") {
  std::string spec = gen_spec("induced", 4, 12, "v_u.json");
  RunResult ok = run(cli() + " verify --spec " + spec);
  CHECK(ok.code == 0);
  CHECK(contains(ok.output, "image is COSP: yes"));
  CHECK(contains(ok.output, "status: ok"));

  std::string collapse = gen_spec("adversarial:collapse_pair", 4, 13, "v_c.json");
  RunResult rc = run(cli() + " verify --spec " + collapse);
  CHECK(rc.code == 3);
  CHECK(contains(rc.output, "orthogonality-violated"));
}

TEST_CASE("tolerance scaling rescues noisy maps") {
  std::string spec =
      gen_spec("adversarial:noisy_induced", 4, 14, "noisy.json", " --eps 1e-3");

  RunResult strict = run(cli() + " verify --spec " + spec);
  CHECK(strict.code == 3);

  RunResult scaled = run("WIGNERKIT_TOL_SCALE=1e6 " + cli() + " verify --spec " + spec);
  CHECK(scaled.code == 0);

  std::string report_path = path_of("noisy_report.json");
  RunResult rec = run("WIGNERKIT_TOL_SCALE=1e6 " + cli() + " reconstruct --spec " + spec +
                      " --out " + report_path);
  CHECK(rec.code == 0);
  json doc = json::parse(read_file(report_path));
  double dev = doc["max_deviation"].get<double>();
  CHECK(dev > 1e-4);
  CHECK(dev < 1e-2);

  RunResult bad = run("WIGNERKIT_TOL_SCALE=banana " + cli() + " verify --spec " + spec);
  CHECK(bad.code == 2);
  CHECK(contains(bad.output, "WIGNERKIT_TOL_SCALE"));
}

TEST_CASE("help, version and selftest") {
  RunResult help = run(cli() + " --help");
  CHECK(help.code == 0);
  CHECK(contains(help.output, "reconstruct"));
  CHECK(contains(help.output, "gleason-fit"));

  RunResult version = run(cli() + " --version");
  CHECK(version.code == 0);
  CHECK(contains(version.output, "1.0.0"));

  RunResult selftest = run(cli() + " selftest");
  CHECK(selftest.code == 0);
  CHECK(contains(selftest.output, "selftest passed"));
  CHECK(!contains(selftest.output, "FAIL"));
}
