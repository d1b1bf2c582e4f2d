/* Copyright 2026 The wignerkit authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/* C interface of the wignerkit shared library.
 *
 * All objects are opaque handles created and destroyed by the library.
 * Functions that can fail return a wk_status; on failure the thread-local
 * message of wk_last_error() describes the cause. Runs that end in a clean
 * hypothesis rejection still produce a report (status WK_OK); the rejection
 * lives inside the report and maps to exit code 3.
 */

#ifndef WIGNERKIT_H
#define WIGNERKIT_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum wk_status {
  WK_OK = 0,
  WK_ERR_INVALID = 1,  /* bad arguments or violated input invariants */
  WK_ERR_PARSE = 2,    /* malformed or unsupported documents */
  WK_ERR_REJECTED = 3, /* a hypothesis of the theorem failed */
  WK_ERR_INTERNAL = 4  /* numerical or internal failure */
} wk_status;

typedef struct wk_tolerances wk_tolerances;
typedef struct wk_oracle wk_oracle;
typedef struct wk_report wk_report;

const char* wk_version(void);

/* Message of the most recent failure on this thread; empty string if none. */
const char* wk_last_error(void);

/* Frees strings returned through char** out parameters. */
void wk_string_free(char* s);

/* ---- tolerances ------------------------------------------------------- */

/* Default thresholds: orth/herm/idem/trace/complete 1e-8, fit 1e-7,
 * gauge 1e-8, unit 1e-10. */
wk_tolerances* wk_tolerances_create(void);

/* name is one of: orth, herm, idem, trace, complete, fit, gauge, unit. */
wk_status wk_tolerances_set(wk_tolerances* t, const char* name, double value);

/* Multiplies every threshold by factor (> 0). */
wk_status wk_tolerances_scale(wk_tolerances* t, double factor);

void wk_tolerances_free(wk_tolerances* t);

/* ---- oracles ---------------------------------------------------------- */

/* Parses and validates a map-spec document (schema_version 1). tol may be
 * NULL for defaults. On success *out owns the oracle. */
wk_status wk_oracle_parse(const char* text, size_t len, const wk_tolerances* tol,
                          wk_oracle** out);

int wk_oracle_dim(const wk_oracle* o);

void wk_oracle_free(wk_oracle* o);

/* Writes the canonical map-spec document of a named deterministic generator
 * to *out (free with wk_string_free). Names: "induced",
 * "induced-antiunitary", "adversarial:constant", "adversarial:collapse_pair",
 * "adversarial:noisy_induced", "adversarial:cosp_breaker". eps feeds the
 * noisy_induced rotation and is ignored elsewhere. */
wk_status wk_mapspec_generate(const char* name, int dim, uint64_t seed, double eps,
                              char** out);

/* ---- runs ------------------------------------------------------------- */

/* Full reconstruction pipeline against the standard-basis system.
 * pairs <= 0 selects the default gate sample count (200). */
wk_status wk_reconstruct(const wk_oracle* o, uint64_t seed, int pairs,
                         const wk_tolerances* tol, wk_report** out);

/* Gate-only run: sampled orthogonality preservation plus the COSP check on
 * the image of the standard basis. */
wk_status wk_verify(const wk_oracle* o, uint64_t seed, int pairs, const wk_tolerances* tol,
                    wk_report** out);

/* Least-squares density fit of a frame-samples document. */
wk_status wk_gleason_fit(const char* text, size_t len, const wk_tolerances* tol,
                         wk_report** out);

/* ---- reports ---------------------------------------------------------- */

/* Canonical report document (free with wk_string_free). */
wk_status wk_report_document(const wk_report* r, char** out);

/* 1 when the run succeeded, 0 on a hypothesis rejection. */
int wk_report_passed(const wk_report* r);

/* Machine-readable code of the rejection; empty string when passed. */
const char* wk_report_error_code(const wk_report* r);

/* Pipeline stage that rejected; empty string otherwise. */
const char* wk_report_failed_stage(const wk_report* r);

/* 1 antiunitary, 0 unitary, -1 not applicable. */
int wk_report_antilinear(const wk_report* r);

/* Named metric of the run. Reconstruction: "max_deviation",
 * "gate_max_transition". Verify: "gate_max_transition", "image_is_cosp"
 * (0 or 1). Fit: "residual", "eigen_floor". */
wk_status wk_report_metric(const wk_report* r, const char* name, double* out);

/* 0 when passed, 3 otherwise. */
int wk_report_exit_code(const wk_report* r);

void wk_report_free(wk_report* r);

/* Process exit code for a status: WK_OK 0, invalid/parse 2, rejected 3,
 * internal 4. */
int wk_status_exit_code(wk_status s);

#ifdef __cplusplus
}
#endif

#endif /* WIGNERKIT_H */
