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

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace wignerkit {

using cxd = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;

/// Inner product, linear in the first argument and conjugate-linear in the
/// second: inner(a, b) = sum_k a_k * conj(b_k). This convention is fixed
/// globally; every phase protocol in the library depends on it.
inline cxd inner(const Vector& a, const Vector& b) { return b.dot(a); }

enum class errc {
  dimension_mismatch,
  invalid_argument,
  not_unit,
  parse_error,
  schema_version,
  invariant_violation,
  unknown_generator,
  table_miss,
  design_deficient,
  negative_eigenvalue,
  inconsistent_samples,
  ambiguous_witness,
  not_wigner_candidate,
  verification_failure,
  orthogonality_violated,
  image_not_cosp,
  leakage,
  mixed_linearity,
  phase_disagreement,
  uncovered_index,
  io_error,
  internal,
};

/// Stable machine-readable code names; these appear verbatim in report
/// documents and must not change across releases.
const char* to_string(errc c);

class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  errc code() const { return code_; }

 private:
  errc code_;
};

/// Numerical thresholds used across all modules. Defaults are sized for
/// double precision at dimensions up to a few dozen, where round-off stays
/// several orders of magnitude below each threshold.
struct ToleranceConfig {
  double orth = 1e-8;      // pairwise orthogonality of projections
  double herm = 1e-8;      // Hermiticity / unitarity defects
  double idem = 1e-8;      // idempotence defect of projections
  double trace = 1e-8;     // trace deviation from 1
  double complete = 1e-8;  // COSP completeness defect
  double fit = 1e-7;       // reconstruction and fitting misfit
  double gauge = 1e-8;     // operator equality up to a global phase
  double unit = 1e-10;     // unit-vector norm deviation

  /// Returns a copy with every threshold multiplied by `factor`.
  ToleranceConfig scaled(double factor) const;

  /// Sets a threshold by name ("orth", "herm", "idem", "trace", "complete",
  /// "fit", "gauge", "unit"). Returns false for unknown names.
  bool set(const std::string& name, double value);

  /// Throws errc::invalid_argument unless every threshold is strictly positive.
  void validate() const;
};

/// Rank-one projection, stored as a full matrix so that no phase convention
/// leaks into the data model. Representative vectors are extracted on demand.
struct Projection {
  Matrix mat;
  int dim() const { return static_cast<int>(mat.rows()); }
};

/// Positive semidefinite trace-one operator.
struct DensityOperator {
  Matrix mat;
  int dim() const { return static_cast<int>(mat.rows()); }
};

/// A unitary matrix plus an antilinearity flag. The operator acts on a vector
/// x as mat*x when linear and as mat*conj(x) when antilinear (conjugation in
/// the standard basis).
struct SymmetryOperator {
  Matrix mat;
  bool antilinear = false;
  int dim() const { return static_cast<int>(mat.rows()); }
};

/// Ordered complete orthogonal system of rank-one projections together with
/// the orthonormal basis vectors spanning their images.
struct Cosp {
  std::vector<Projection> projections;
  std::vector<Vector> basis;
  int dim() const { return static_cast<int>(projections.size()); }
};

bool satisfies_projection_invariants(const Matrix& m, const ToleranceConfig& tol);
bool satisfies_density_invariants(const Matrix& m, const ToleranceConfig& tol);
bool satisfies_unitary_invariants(const Matrix& m, const ToleranceConfig& tol);

/// Validating factory; throws errc::invariant_violation.
Projection projection_from_matrix(Matrix m, const ToleranceConfig& tol);
DensityOperator density_from_matrix(Matrix m, const ToleranceConfig& tol);

}  // namespace wignerkit
