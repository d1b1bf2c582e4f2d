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

#include <functional>
#include <string>
#include <vector>

#include "types.hpp"

namespace wignerkit {

class MapOracle;

/// One evaluation of a frame function: a projection and its value in [0, 1].
struct FrameSample {
  Projection projection;
  double value = 0.0;
};

/// Outcome of fitting a density operator to frame-function samples.
///
/// On failure `error_code` is non-empty ("design-deficient",
/// "negative-eigenvalue" or "inconsistent-samples"); the density and residual
/// are still populated when computable so callers can report diagnostics.
struct FitReport {
  DensityOperator density;
  double residual = 0.0;    // max absolute sample misfit of the returned density
  double eigen_floor = 0.0; // most negative eigenvalue before clipping
  std::string error_code;   // empty on success

  bool ok() const { return error_code.empty(); }
};

/// Frame value tr(D P) of a density operator at a projection.
double frame_value(const DensityOperator& d, const Projection& p);

/// Least-squares inversion of frame samples into a density operator.
///
/// The Hermitian unknown is parametrized by dim real diagonal entries plus
/// dim(dim-1) real off-diagonal components and solved by a rank-revealing
/// orthogonal factorization. Eigenvalues inside [-tol.fit, 0) are clipped to
/// zero and the spectrum renormalized to trace one; a floor below -tol.fit
/// means the samples are not a genuine frame function and is reported as a
/// hard error. The sampled projections must span the Hermitian space: with
/// fewer than dim^2 samples, or a Gram matrix whose dim^2-th singular value
/// falls below 1e-6, the design is rejected as deficient.
FitReport fit_density(const std::vector<FrameSample>& samples, int dim,
                      const ToleranceConfig& tol);

using FrameFunction = std::function<double(const Projection&)>;

/// Max over the supplied COSPs of |sum_j frame(P_j) - 1|.
double check_frame_additivity(const FrameFunction& frame, const std::vector<Cosp>& cosps,
                              const ToleranceConfig& tol);

/// The frame function P -> tr(D * map(P)).
FrameFunction pushforward_frame(const DensityOperator& d, const MapOracle& map);

/// Fits the density operator E with tr(D * map(P)) = tr(E P) on the
/// informationally complete design. Throws when the fit rejects, which
/// certifies that the map is not COSP-to-COSP compatible.
DensityOperator conjugate_density(const MapOracle& map, const DensityOperator& d,
                                  const ToleranceConfig& tol);

}  // namespace wignerkit
