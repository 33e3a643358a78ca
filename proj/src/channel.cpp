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

#include "smu/channel.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "smu/errors.hpp"

namespace smu {

double KrausSet::completeness_residual() const {
  const auto d = dim_system();
  Matrix sum = Matrix::Zero(d, d);
  for (const auto& a : operators) sum += a.adjoint() * a;
  return (sum - identity(d)).cwiseAbs().maxCoeff();
}

Matrix KrausSet::apply(const Matrix& rho) const {
  Matrix out = Matrix::Zero(rho.rows(), rho.cols());
  for (const auto& a : operators) out += a * rho * a.adjoint();
  return out;
}

KrausSet kraus_from_unitary(const Matrix& unitary, const Vector& zeta,
                            std::ptrdiff_t dim_system, const Matrix& bath_basis) {
  const std::ptrdiff_t dim_bath = zeta.size();
  if (unitary.rows() != dim_system * dim_bath || unitary.cols() != unitary.rows())
    throw PreconditionError("unitary does not act on H_S (x) H_B");
  if (unitarity_error(unitary) > kIdentityTolerance)
    throw PreconditionError("joint evolution is not unitary");
  if (std::abs(zeta.norm() - 1.0) > kIdentityTolerance)
    throw PreconditionError("bath vector is not normalized");
  const Matrix basis = bath_basis.size() == 0 ? identity(dim_bath) : bath_basis;
  if (basis.rows() != dim_bath || unitarity_error(basis) > kIdentityTolerance)
    throw PreconditionError("bath measurement basis is not orthonormal");

  // U (1 (x) |zeta>) as a (d_S d_B) x d_S matrix
  Matrix applied = Matrix::Zero(dim_system * dim_bath, dim_system);
  for (std::ptrdiff_t j = 0; j < dim_system; ++j)
    applied.col(j) = unitary.middleCols(j * dim_bath, dim_bath) * zeta;

  KrausSet out;
  for (std::ptrdiff_t a = 0; a < dim_bath; ++a) {
    Matrix op = Matrix::Zero(dim_system, dim_system);
    for (std::ptrdiff_t i = 0; i < dim_system; ++i)
      op.row(i) = basis.col(a).adjoint() * applied.middleRows(i * dim_bath, dim_bath);
    out.operators.push_back(std::move(op));
  }
  return out;
}

std::string_view to_string(CodeVerdict v) {
  switch (v) {
    case CodeVerdict::ErrorAvoiding:
      return "error-avoiding";
    case CodeVerdict::Nondegenerate:
      return "nondegenerate";
    case CodeVerdict::NotCertified:
      return "not-certified";
  }
  return "unknown";
}

namespace {

void require_orthonormal(const Matrix& code, std::ptrdiff_t dim_system) {
  if (code.cols() == 0) throw PreconditionError("code is empty");
  if (code.rows() != dim_system) throw PreconditionError("code vectors have the wrong length");
  const Matrix gram = code.adjoint() * code;
  if ((gram - identity(gram.rows())).cwiseAbs().maxCoeff() > 1e-12)
    throw PreconditionError("code vectors are not orthonormal");
}

std::vector<Complex> diagonal_eigenvalues(const KrausSet& kraus, const Matrix& code,
                                          double& residual) {
  std::vector<Complex> values;
  residual = 0.0;
  for (const auto& a : kraus.operators) {
    const Complex g = code.col(0).dot(a * code.col(0));
    values.push_back(g);
    for (std::ptrdiff_t i = 0; i < code.cols(); ++i)
      residual = std::max(residual, (a * code.col(i) - g * code.col(i)).norm());
  }
  return values;
}

}  // namespace

CodeCertificate certify_code(const KrausSet& kraus, const Matrix& code) {
  require_orthonormal(code, kraus.dim_system());
  const auto n_ops = static_cast<std::ptrdiff_t>(kraus.operators.size());
  const std::ptrdiff_t n_code = code.cols();

  // images(a) column i = A_a |c_i>
  std::vector<Matrix> images;
  images.reserve(kraus.operators.size());
  for (const auto& a : kraus.operators) images.push_back(a * code);

  CodeCertificate cert;
  cert.gamma = Matrix::Zero(n_ops, n_ops);
  for (std::ptrdiff_t a = 0; a < n_ops; ++a)
    for (std::ptrdiff_t b = 0; b < n_ops; ++b) {
      const Matrix block = images[a].adjoint() * images[b];  // <i|A_a^+ A_b|j>
      cert.gamma(a, b) = block(0, 0);
      for (std::ptrdiff_t i = 0; i < n_code; ++i) {
        if (std::abs(block(i, i) - block(0, 0)) > kVerdictTolerance) {
          std::ostringstream msg;
          msg << "<i|A_" << a << "^+ A_" << b << "|i> varies across code vectors ("
              << block(0, 0) << " vs " << block(i, i) << " at i=" << i << ")";
          throw CodeConditionError(msg.str());
        }
        for (std::ptrdiff_t j = 0; j < n_code; ++j)
          if (i != j)
            cert.off_block_residual = std::max(cert.off_block_residual, std::abs(block(i, j)));
      }
    }

  Eigen::BDCSVD<Matrix> svd(cert.gamma);
  const auto& s = svd.singularValues();
  if (s.size() > 1 && s(0) > 0.0) cert.rank_gap = s(1) / s(0);

  cert.eigenvalues = diagonal_eigenvalues(kraus, code, cert.eigen_residual);
  Vector g(n_ops);
  for (std::ptrdiff_t a = 0; a < n_ops; ++a) g(a) = cert.eigenvalues[static_cast<std::size_t>(a)];
  cert.factorization_residual =
      (cert.gamma - g.conjugate() * g.transpose()).cwiseAbs().maxCoeff();

  const bool diagonal_ok = cert.off_block_residual <= kVerdictTolerance;
  if (diagonal_ok && cert.rank_gap <= kVerdictTolerance &&
      cert.factorization_residual <= kVerdictTolerance &&
      cert.eigen_residual <= kVerdictTolerance) {
    cert.verdict = CodeVerdict::ErrorAvoiding;
  } else if (diagonal_ok && s.size() > 0 && s(s.size() - 1) > kVerdictTolerance * s(0)) {
    cert.verdict = CodeVerdict::Nondegenerate;
  } else {
    cert.verdict = CodeVerdict::NotCertified;
  }
  return cert;
}

std::vector<Complex> code_eigenvalues(const KrausSet& kraus, const Matrix& code) {
  require_orthonormal(code, kraus.dim_system());
  double residual = 0.0;
  auto values = diagonal_eigenvalues(kraus, code, residual);
  if (residual > kVerdictTolerance) {
    std::ostringstream msg;
    msg << "code is not a joint eigenspace of the Kraus operators (residual " << residual << ")";
    throw CodeConditionError(msg.str());
  }
  return values;
}

}  // namespace smu
