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

#include "smu/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "smu/errors.hpp"

namespace smu {

NullspaceResult nullspace(const Matrix& a, double relative_tolerance) {
  const auto cols = a.cols();
  NullspaceResult out;
  if (cols == 0) return out;

  // Reduce tall systems to their square triangular factor first; the kernel
  // is unchanged and the SVD stays cols x cols.
  Matrix reduced;
  if (a.rows() > cols) {
    Eigen::HouseholderQR<Matrix> qr(a);
    reduced = qr.matrixQR().topRows(cols).triangularView<Eigen::Upper>();
  } else {
    reduced = a;
  }

  Eigen::BDCSVD<Matrix> svd(reduced, Eigen::ComputeFullV);
  const auto& s = svd.singularValues();
  out.singular_values.assign(s.data(), s.data() + s.size());

  const double largest = s.size() > 0 ? s(0) : 0.0;
  std::ptrdiff_t rank = 0;
  for (std::ptrdiff_t i = 0; i < s.size(); ++i) {
    if (largest > 0.0 && s(i) > relative_tolerance * largest) ++rank;
  }
  out.basis = svd.matrixV().rightCols(cols - rank);
  for (std::ptrdiff_t j = 0; j < out.basis.cols(); ++j) fix_phase(out.basis.col(j));
  return out;
}

void fix_phase(Eigen::Ref<Vector> v) {
  if (v.size() == 0) return;
  const double largest = v.cwiseAbs().maxCoeff();
  if (largest == 0.0) return;
  std::ptrdiff_t pivot = 0;
  for (std::ptrdiff_t i = 0; i < v.size(); ++i) {
    if (std::abs(v(i)) >= largest * (1.0 - 1e-9)) {
      pivot = i;
      break;
    }
  }
  const auto phase = std::conj(v(pivot)) / std::abs(v(pivot));
  v *= phase;
  v(pivot) = std::abs(v(pivot));
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::ptrdiff_t i = 0; i < a.rows(); ++i)
    for (std::ptrdiff_t j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

Matrix identity(std::ptrdiff_t dim) { return Matrix::Identity(dim, dim); }

Vector basis_vector(std::ptrdiff_t dim, std::ptrdiff_t index) {
  Vector v = Vector::Zero(dim);
  v(index) = 1.0;
  return v;
}

double hermiticity_error(const Matrix& m) {
  if (m.rows() != m.cols()) return std::numeric_limits<double>::infinity();
  if (m.size() == 0) return 0.0;
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

double unitarity_error(const Matrix& m) {
  if (m.rows() != m.cols()) return std::numeric_limits<double>::infinity();
  if (m.size() == 0) return 0.0;
  return (m.adjoint() * m - identity(m.rows())).cwiseAbs().maxCoeff();
}

Matrix partial_trace_bath(const Matrix& rho, std::ptrdiff_t dim_system,
                          std::ptrdiff_t dim_bath) {
  Matrix out = Matrix::Zero(dim_system, dim_system);
  for (std::ptrdiff_t i = 0; i < dim_system; ++i)
    for (std::ptrdiff_t j = 0; j < dim_system; ++j)
      out(i, j) = rho.block(i * dim_bath, j * dim_bath, dim_bath, dim_bath).trace();
  return out;
}

Matrix partial_trace_system(const Matrix& rho, std::ptrdiff_t dim_system,
                            std::ptrdiff_t dim_bath) {
  Matrix out = Matrix::Zero(dim_bath, dim_bath);
  for (std::ptrdiff_t i = 0; i < dim_system; ++i)
    out += rho.block(i * dim_bath, i * dim_bath, dim_bath, dim_bath);
  return out;
}

double trace_norm(const Matrix& m) {
  if (m.size() == 0) return 0.0;
  Eigen::BDCSVD<Matrix> svd(m);
  return svd.singularValues().sum();
}

Matrix projector(const Matrix& orthonormal_columns) {
  return orthonormal_columns * orthonormal_columns.adjoint();
}

double max_principal_angle(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.cols() || a.rows() != b.rows()) return std::numbers::pi / 2;
  if (a.cols() == 0) return 0.0;
  const Matrix residual = b - a * (a.adjoint() * b);
  Eigen::BDCSVD<Matrix> svd(residual);
  const double sine = std::min(1.0, svd.singularValues()(0));
  return std::asin(sine);
}

HermitianPropagator::HermitianPropagator(const Matrix& h, double tolerance) {
  const double err = hermiticity_error(h);
  if (err > tolerance) {
    std::ostringstream msg;
    msg << "Hamiltonian is not hermitian (max |H - H^dagger| = " << err << ")";
    throw PreconditionError(msg.str());
  }
  Eigen::SelfAdjointEigenSolver<Matrix> eig(h);
  eigenvalues_ = eig.eigenvalues();
  eigenvectors_ = eig.eigenvectors();
}

Matrix HermitianPropagator::unitary(double t) const {
  Vector phases(eigenvalues_.size());
  for (std::ptrdiff_t i = 0; i < eigenvalues_.size(); ++i)
    phases(i) = std::exp(Complex(0.0, -eigenvalues_(i) * t));
  return eigenvectors_ * phases.asDiagonal() * eigenvectors_.adjoint();
}

Vector HermitianPropagator::apply(double t, const Vector& state) const {
  Vector coeffs = eigenvectors_.adjoint() * state;
  for (std::ptrdiff_t i = 0; i < eigenvalues_.size(); ++i)
    coeffs(i) *= std::exp(Complex(0.0, -eigenvalues_(i) * t));
  return eigenvectors_ * coeffs;
}

}  // namespace smu
