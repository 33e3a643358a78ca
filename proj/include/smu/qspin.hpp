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

// Deformed collective spin operators on n-qubit registers.
//
// Two constructions are provided:
//  * Recurrence: the qubit-by-qubit recursion
//      K3 <- K3 (x) diag(mu^-2, mu^2) + 1 (x) diag(1/2, -1/2)
//      Kj <- Kj (x) diag(mu^-1, mu)   + 1 (x) diag(1/2, -1/2)   (j = 1, 2)
//    anchored at a user-supplied 2x2 base case.
//  * Enveloping: the U_q(su2) coproduct
//      J+ <- J+ (x) q^J3 + q^-J3 (x) J+,  J- = (J+)^dagger,  J3 <- J3 (x) 1 + 1 (x) J3
//    with q = 1/mu, the convention whose two-qubit kernel is the deformed
//    singlet |+-> - mu |-+>.

#include <array>
#include <iosfwd>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "smu/corep.hpp"
#include "smu/linalg.hpp"
#include "smu/qalg.hpp"

namespace smu {

enum class SpinStrategy { Recurrence, Enveloping };

std::string_view to_string(SpinStrategy s);
/// Accepts "recurrence" or "enveloping"; throws std::invalid_argument.
SpinStrategy parse_strategy(std::string_view text);

/// Single-qubit anchor of the recurrence: K1, K2, K3 as 2x2 matrices.
struct BaseCase {
  std::array<Matrix, 3> k;

  /// K3 = diag(1/(2 mu^2), -mu^2/2), K1 = K2 = diag(1/(2 mu), -mu/2): the
  /// only diagonal anchor for which the recursion annihilates the deformed
  /// singlet on two qubits.
  static BaseCase singlet_annihilating(double mu);
  /// Half the Pauli matrices.
  static BaseCase pauli_halves();

  bool is_hermitian(double tolerance = 1e-14) const;
};

class SpinOperatorSet {
 public:
  SpinOperatorSet(int qubits, double mu, SpinStrategy strategy,
                  std::map<std::string, Matrix> ops);

  int qubits() const { return qubits_; }
  double mu() const { return mu_; }
  SpinStrategy strategy() const { return strategy_; }
  std::ptrdiff_t dim() const { return std::ptrdiff_t{1} << qubits_; }

  /// {K1, K2, K3} or {J3, Jminus, Jplus}, keyed by name.
  const std::map<std::string, Matrix>& operators() const { return ops_; }
  /// Throws std::out_of_range for unknown names.
  const Matrix& op(std::string_view name) const;
  bool has(std::string_view name) const;

  /// K+ = K1 + i K2 (recurrence) or J+ (enveloping).
  Matrix raising() const;
  /// K- = K1 - i K2 (recurrence) or J- (enveloping).
  Matrix lowering() const;
  /// K3 or J3.
  const Matrix& weight() const;

 private:
  int qubits_;
  double mu_;
  SpinStrategy strategy_;
  std::map<std::string, Matrix> ops_;
};

SpinOperatorSet build_recurrence(const DeformationParameter& deformation, int qubits,
                                 const BaseCase& base);
SpinOperatorSet build_recurrence(const DeformationParameter& deformation, int qubits);

/// Which power of mu plays the role of q in the enveloping coproduct.
enum class EnvelopingConvention { InverseMu, Mu };

SpinOperatorSet build_enveloping(
    const DeformationParameter& deformation, int qubits,
    EnvelopingConvention convention = EnvelopingConvention::InverseMu);

/// Orthonormal kernel of all operators stacked, same rank threshold as the
/// corepresentation solver.
InvariantBasis joint_kernel(const SpinOperatorSet& s);

struct KernelComparison {
  std::size_t kernel_dim = 0;
  std::size_t reference_dim = 0;
  double max_angle = 0.0;
  bool agree = false;
  std::string summary;
};

inline constexpr double kKernelAgreementAngle = 1e-8;

/// Principal-angle comparison of joint_kernel(s) against a reference basis
/// (normally invariant_subspace of the register corepresentation). Throws
/// PreconditionError when the vector lengths differ.
KernelComparison compare_with_corep(const SpinOperatorSet& s, const InvariantBasis& reference);

/// CSV with header "operator,row,col,re,im"; entries that are exactly zero
/// are skipped.
void write_operator_csv(std::ostream& out, const SpinOperatorSet& s);

}  // namespace smu
