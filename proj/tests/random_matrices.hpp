// Copyright 2026 The smu-codes Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <random>

#include "smu/linalg.hpp"

namespace smu::testing {

inline Matrix random_complex(std::ptrdiff_t rows, std::ptrdiff_t cols, std::mt19937_64& rng) {
  std::normal_distribution<double> n(0.0, 1.0);
  Matrix m(rows, cols);
  for (std::ptrdiff_t i = 0; i < rows; ++i)
    for (std::ptrdiff_t j = 0; j < cols; ++j) m(i, j) = Complex(n(rng), n(rng));
  return m;
}

inline Matrix random_hermitian(std::ptrdiff_t dim, std::mt19937_64& rng) {
  Matrix g = random_complex(dim, dim, rng);
  return 0.5 * (g + g.adjoint());
}

inline Vector random_state(std::ptrdiff_t dim, std::mt19937_64& rng) {
  Vector v = random_complex(dim, 1, rng);
  return v / v.norm();
}

/// G G^dagger / tr, full rank almost surely.
inline Matrix random_density(std::ptrdiff_t dim, std::mt19937_64& rng) {
  Matrix g = random_complex(dim, dim, rng);
  Matrix rho = g * g.adjoint();
  return rho / rho.trace();
}

/// Random density matrix supported on the span of orthonormal columns.
inline Matrix random_density_on(const Matrix& columns, std::mt19937_64& rng) {
  Matrix inner = random_density(columns.cols(), rng);
  return columns * inner * columns.adjoint();
}

inline Matrix random_unitary(std::ptrdiff_t dim, std::mt19937_64& rng) {
  Eigen::HouseholderQR<Matrix> qr(random_complex(dim, dim, rng));
  return qr.householderQ() * identity(dim);
}

}  // namespace smu::testing
