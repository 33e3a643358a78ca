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

// System (x) bath Hamiltonians with quantum dynamical symmetry,
//
//   H = P_1(K) (x) T_1 + ... + P_N(K) (x) T_N,
//
// where each P_a is a polynomial in the register spin operators and each T_a
// is a hermitian bath operator, plus the unitary evolution they generate.
// hbar = 1 throughout.

#include <string>
#include <utility>
#include <vector>

#include "smu/linalg.hpp"
#include "smu/qspin.hpp"

namespace smu {

struct BathSpec {
  std::vector<double> mode_frequencies;
  int truncation = 4;

  std::ptrdiff_t dim() const;
};

/// Truncated harmonic bath: b|m> = sqrt(m)|m-1>, b^dagger|top> = 0.
struct Bath {
  BathSpec spec;
  Matrix hamiltonian;                // sum_k w_k b_k^dagger b_k
  std::vector<Matrix> annihilators;  // b_k on the full bath space

  std::ptrdiff_t dim() const { return hamiltonian.rows(); }
};

/// Throws std::invalid_argument for truncation < 2, no modes, or
/// non-positive frequencies.
Bath build_bath(const BathSpec& spec);

/// T = sum_k g_k b_k and T' = sum_k h_k (b_k + b_k^dagger).
std::pair<Matrix, Matrix> linear_couplings(const Bath& bath, const std::vector<double>& g,
                                           const std::vector<double>& h);

/// A word is a left-to-right product of generator names; empty means 1.
using Word = std::vector<std::string>;

struct PolynomialTerm {
  Complex coefficient;
  Word word;
};

using Polynomial = std::vector<PolynomialTerm>;

/// P(K) as a matrix on the register.
Matrix realize(const Polynomial& p, const SpinOperatorSet& spin);

/// The character with chi(1) = 1 and chi(generator) = 0, extended
/// multiplicatively: the coefficient of the empty word.
Complex chi(const Polynomial& p);

struct SymmetricTerm {
  std::string label;
  Polynomial polynomial;
  Matrix bath_operator;
};

/// K+ (x) T + K- (x) T^dagger + K3 (x) T', written as hermitian
/// polynomial-times-hermitian-operator terms. Throws ConstructionError naming
/// the term when the result would not be hermitian.
std::vector<SymmetricTerm> build_interaction(const SpinOperatorSet& spin, const Matrix& t,
                                             const Matrix& t_prime);

/// The term 1 (x) H_B.
SymmetricTerm bath_term(const Bath& bath);

class CompositeHamiltonian {
 public:
  /// Realizes sum_a P_a(K) (x) T_a and diagonalizes it. Throws
  /// ConstructionError (naming the first offending term) if the result is
  /// not hermitian to 1e-12.
  CompositeHamiltonian(std::vector<SymmetricTerm> terms, SpinOperatorSet spin,
                       BathSpec bath);

  const std::vector<SymmetricTerm>& terms() const { return terms_; }
  const SpinOperatorSet& spin() const { return spin_; }
  const BathSpec& bath() const { return bath_; }
  const Matrix& matrix() const { return realized_; }
  const HermitianPropagator& propagator() const { return propagator_; }

  std::ptrdiff_t dim_system() const { return spin_.dim(); }
  std::ptrdiff_t dim_bath() const { return bath_.dim(); }

 private:
  std::vector<SymmetricTerm> terms_;
  SpinOperatorSet spin_;
  BathSpec bath_;
  Matrix realized_;
  HermitianPropagator propagator_;
};

/// sum_a chi(P_a) T_a on the bath.
Matrix effective_hamiltonian(const CompositeHamiltonian& h);

/// exp(-i H t) state. Throws PreconditionError unless |state| = 1 to 1e-10.
Vector evolve(const CompositeHamiltonian& h, const Vector& state, double t);

/// `steps` evenly spaced points from start to stop inclusive; steps == 1
/// gives {start}.
std::vector<double> time_grid(double start, double stop, int steps);

/// max_t | U(t)(psi (x) zeta) - psi (x) exp(-i H_eff t) zeta |, with no
/// precondition on psi (used for negative controls).
double factorization_deviation(const CompositeHamiltonian& h, const Vector& psi,
                          const Vector& zeta, const std::vector<double>& times);

/// Max |O psi| over the operators of the spin set.
double kernel_residual(const SpinOperatorSet& spin, const Vector& psi);

inline constexpr double kKernelMembershipTolerance = 1e-8;

/// factorization_deviation after checking that psi lies in the joint kernel of
/// h.spin() (PreconditionError otherwise).
double verify_factorization(const CompositeHamiltonian& h, const Vector& psi, const Vector& zeta,
                       const std::vector<double>& times);

/// Throws PreconditionError unless rho is hermitian, unit trace and
/// positive semidefinite (all to 1e-10).
void validate_density_matrix(const Matrix& rho, std::string_view name);

/// tr_B [ U(t) (rho_S (x) rho_B) U(t)^dagger ].
Matrix induced_channel(const CompositeHamiltonian& h, const Matrix& rho_system,
                       const Matrix& rho_bath, double t);

struct HamiltonianParts {
  Matrix system;       // H_S, carrying the trace of H
  Matrix bath;         // H_B, traceless
  Matrix interaction;  // traceless over either factor
};

/// H = H_S (x) 1 + 1 (x) H_B + H_I with H_S = tr_B(H)/d_B and
/// H_B = tr_S(H)/d_S - tr(H)/(d_S d_B).
HamiltonianParts decompose(const Matrix& h, std::ptrdiff_t dim_system,
                           std::ptrdiff_t dim_bath);
HamiltonianParts decompose(const CompositeHamiltonian& h);

}  // namespace smu
