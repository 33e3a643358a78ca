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

// Dense complex linear algebra shared by the simulator modules.

#include <Eigen/Dense>
#include <complex>
#include <cstddef>
#include <vector>

namespace smu {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

/// Singular values below this fraction of the largest count as zero.
inline constexpr double kRankThreshold = 1e-10;

struct NullspaceResult {
  /// Orthonormal columns spanning the numerical kernel, ordered by
  /// descending singular value and phase-fixed (see `fix_phase`).
  Matrix basis;
  /// Full singular spectrum of the input, descending.
  std::vector<double> singular_values;
};

/// Numerical kernel of `a` with a relative rank threshold. An all-zero
/// matrix has the whole space as its kernel.
NullspaceResult nullspace(const Matrix& a, double relative_tolerance = kRankThreshold);

/// Rotates `v` by a global phase so that its largest-magnitude component
/// (first one on ties) is real and positive.
void fix_phase(Eigen::Ref<Vector> v);

Matrix kron(const Matrix& a, const Matrix& b);
Matrix identity(std::ptrdiff_t dim);
Vector basis_vector(std::ptrdiff_t dim, std::ptrdiff_t index);

/// max |m - m^dagger|
double hermiticity_error(const Matrix& m);
/// max |m^dagger m - 1|
double unitarity_error(const Matrix& m);

/// Partial traces on H_S (x) H_B with the system index most significant.
Matrix partial_trace_bath(const Matrix& rho, std::ptrdiff_t dim_system,
                          std::ptrdiff_t dim_bath);
Matrix partial_trace_system(const Matrix& rho, std::ptrdiff_t dim_system,
                            std::ptrdiff_t dim_bath);

/// Sum of singular values.
double trace_norm(const Matrix& m);

/// Largest principal angle between the column spans of two matrices with
/// orthonormal columns, computed from sines so that tiny angles are
/// resolved. Returns pi/2 when the dimensions differ.
double max_principal_angle(const Matrix& a, const Matrix& b);

/// Orthogonal projector onto the span of orthonormal columns.
Matrix projector(const Matrix& orthonormal_columns);

/// exp(-i H t) through a cached hermitian eigendecomposition.
class HermitianPropagator {
 public:
  /// Throws PreconditionError if `h` is not hermitian to `tolerance`.
  explicit HermitianPropagator(const Matrix& h, double tolerance = 1e-12);

  Matrix unitary(double t) const;
  Vector apply(double t, const Vector& state) const;
  const RealVector& eigenvalues() const { return eigenvalues_; }

 private:
  RealVector eigenvalues_;
  Matrix eigenvectors_;
};

}  // namespace smu
