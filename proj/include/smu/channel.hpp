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

// Kraus representation of the system channel induced by a joint unitary and
// certification of error-avoiding codes: an orthonormal code {|i>} with
//
//   <i| A_a^dagger A_b |j> = gamma_ab delta_ij,   gamma_ab = conj(g_a) g_b,
//
// i.e. a rank-one gamma whose factors g_a are the common code eigenvalues of
// the A_a.

#include <iosfwd>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "smu/linalg.hpp"

namespace smu {

/// The supplied subspace does not satisfy the code condition at all
/// (i-dependent diagonal, or not a joint eigenspace).
class CodeConditionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr double kVerdictTolerance = 1e-8;
inline constexpr double kIdentityTolerance = 1e-10;

struct KrausSet {
  std::vector<Matrix> operators;

  std::ptrdiff_t dim_system() const { return operators.empty() ? 0 : operators.front().rows(); }
  /// max |sum_a A_a^dagger A_a - 1|
  double completeness_residual() const;
  /// sum_a A_a rho A_a^dagger
  Matrix apply(const Matrix& rho) const;
};

/// A_a = (1 (x) <e_a|) U (1 (x) |zeta>) where |e_a> are the columns of
/// `bath_basis` (the number basis when it is empty). Throws
/// PreconditionError for a non-unitary U or bath basis, or non-normalized zeta.
KrausSet kraus_from_unitary(const Matrix& unitary, const Vector& zeta,
                            std::ptrdiff_t dim_system, const Matrix& bath_basis = Matrix());

enum class CodeVerdict {
  ErrorAvoiding,
  /// Full-rank gamma: looks like an error-correcting code. Informational only.
  Nondegenerate,
  NotCertified,
};

std::string_view to_string(CodeVerdict v);

struct CodeCertificate {
  Matrix gamma;
  double off_block_residual = 0.0;
  /// Second over first singular value of gamma.
  double rank_gap = 0.0;
  /// g_a = <c_0| A_a |c_0>.
  std::vector<Complex> eigenvalues;
  /// max_{a,i} |A_a c_i - g_a c_i|
  double eigen_residual = 0.0;
  /// max |gamma - conj(g) g^T|
  double factorization_residual = 0.0;
  CodeVerdict verdict = CodeVerdict::NotCertified;
};

/// `code` holds the code basis as orthonormal columns (PreconditionError
/// otherwise). Throws CodeConditionError when <i|A_a^dagger A_b|i> depends on i.
CodeCertificate certify_code(const KrausSet& kraus, const Matrix& code);

/// The g_a with A_a|i> = g_a|i> on every code vector. Throws
/// CodeConditionError when some residual exceeds kVerdictTolerance.
std::vector<Complex> code_eigenvalues(const KrausSet& kraus, const Matrix& code);

}  // namespace smu
