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

#include "rng.hpp"

#include <cmath>
#include <numbers>
#include <random>

namespace wignerkit {

double Rng::uniform() {
  return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
}

double Rng::normal() {
  // Shift keeps the log argument strictly inside (0, 1).
  double u1 = (static_cast<double>(gen_() >> 11) + 0.5) * 0x1.0p-53;
  double u2 = static_cast<double>(gen_() >> 11) * 0x1.0p-53;
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

Vector Rng::gaussian_vector(int dim) {
  Vector v(dim);
  for (int i = 0; i < dim; ++i) v(i) = complex_normal();
  return v;
}

Vector Rng::unit_vector(int dim) {
  for (;;) {
    Vector v = gaussian_vector(dim);
    double n = v.norm();
    if (n > 1e-6) return v / n;
  }
}

Matrix Rng::unitary(int dim) {
  Matrix g(dim, dim);
  for (int j = 0; j < dim; ++j)
    for (int i = 0; i < dim; ++i) g(i, j) = complex_normal();
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix q = qr.householderQ() * Matrix::Identity(dim, dim);
  Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < dim; ++j) {
    cxd d = r(j, j);
    double a = std::abs(d);
    q.col(j) *= (a > 0.0) ? d / a : cxd(1.0, 0.0);
  }
  return q;
}

std::uint64_t derive_seed(std::uint64_t base, std::string_view tag) {
  // FNV-1a over the tag, then splitmix64-style finalization mixed with base.
  std::uint64_t h = 1469598103934665603ULL;
  for (char c : tag) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ULL;
  }
  std::uint64_t z = base + 0x9e3779b97f4a7c15ULL + h;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace wignerkit
