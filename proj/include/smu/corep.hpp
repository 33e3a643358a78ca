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

// Matrix corepresentations of S_mu U(2) and their invariant vectors.
//
// A corepresentation on C^d is a d x d matrix v of algebra elements with
// phi(v_ij) = sum_k v_ik (x) v_kj. A vector psi is invariant when
// sum_j v_ij psi_j = psi_i 1 for every row i.

#include <cstddef>
#include <iosfwd>
#include <string_view>
#include <vector>

#include "smu/linalg.hpp"
#include "smu/qalg.hpp"

namespace smu {

/// Qubit count above which `register_corep` refuses to expand u^(x)n.
inline constexpr int kDefaultRegisterBudget = 6;

class Corepresentation {
 public:
  /// `entries` is row-major with dim * dim elements, all over `deformation`.
  Corepresentation(const DeformationParameter& deformation, std::size_t dim,
                   std::vector<AlgebraElement> entries);

  std::size_t dim() const { return dim_; }
  const DeformationParameter& deformation() const { return deformation_; }
  double mu() const { return deformation_.mu(); }

  /// Zero-based (row, col).
  const AlgebraElement& entry(std::size_t row, std::size_t col) const {
    return entries_[row * dim_ + col];
  }

  /// Copy with one entry replaced.
  Corepresentation with_entry(std::size_t row, std::size_t col,
                              const AlgebraElement& value) const;

 private:
  DeformationParameter deformation_;
  std::size_t dim_;
  std::vector<AlgebraElement> entries_;
};

/// u = [[alpha, -mu gamma*], [gamma, alpha*]] in the basis |+>, |->.
Corepresentation fundamental(const DeformationParameter& deformation);

/// Entry ((i,k),(j,l)) = v_ij w_kl, with the index of v most significant.
Corepresentation tensor_product(const Corepresentation& v, const Corepresentation& w);

/// u^(x)n, left-associated. Throws ResourceLimit when n > budget and
/// std::invalid_argument when n < 1.
Corepresentation register_corep(const DeformationParameter& deformation, int qubits,
                                int budget = kDefaultRegisterBudget);

/// max |(v^* v - 1)_ij| and max |(v v^* - 1)_ij| over all coefficients.
double unitarity_residual(const Corepresentation& v);

struct AxiomReport {
  double residual = 0.0;
  std::size_t worst_row = 0;
  std::size_t worst_col = 0;
};

/// Compares phi(v_ij) with sum_k v_ik (x) v_kj entry by entry.
AxiomReport check_axiom(const Corepresentation& v);

struct InvariantBasis {
  /// Orthonormal, phase-fixed columns.
  Matrix vectors;
  /// Norm of the stacked invariance constraints applied to each column.
  std::vector<double> residuals;

  std::size_t dimension() const { return static_cast<std::size_t>(vectors.cols()); }
};

/// One row per (row i, PBW monomial m) pair: sum_j [v_ij]_m psi_j - delta_{m,1} psi_i.
/// Rows whose coefficients all vanish are omitted.
Matrix invariance_constraints(const Corepresentation& v);

/// Orthonormal basis of { psi : v(psi) = psi (x) 1 }, possibly empty.
InvariantBasis invariant_subspace(const Corepresentation& v);

inline constexpr std::string_view kInvariantBasisCsvHeader =
    "mu,vector,index,component_re,component_im";

/// Appends one CSV row per basis component (no header).
void write_invariant_basis_rows(std::ostream& out, double mu, const InvariantBasis& basis);

}  // namespace smu
