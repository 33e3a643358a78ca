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

#include "smu/dynamics.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "smu/errors.hpp"

namespace smu {

std::ptrdiff_t BathSpec::dim() const {
  std::ptrdiff_t d = 1;
  for (std::size_t i = 0; i < mode_frequencies.size(); ++i) d *= truncation;
  return d;
}

Bath build_bath(const BathSpec& spec) {
  if (spec.truncation < 2) throw std::invalid_argument("bath truncation must be at least 2");
  if (spec.mode_frequencies.empty()) throw std::invalid_argument("bath needs at least one mode");
  for (double w : spec.mode_frequencies)
    if (!(w > 0.0)) throw std::invalid_argument("bath mode frequencies must be positive");

  const std::ptrdiff_t levels = spec.truncation;
  Matrix b_one = Matrix::Zero(levels, levels);
  for (std::ptrdiff_t m = 1; m < levels; ++m) b_one(m - 1, m) = std::sqrt(static_cast<double>(m));

  Bath bath;
  bath.spec = spec;
  const std::ptrdiff_t dim = spec.dim();
  bath.hamiltonian = Matrix::Zero(dim, dim);
  const std::size_t modes = spec.mode_frequencies.size();
  for (std::size_t k = 0; k < modes; ++k) {
    // mode 0 is the most significant factor
    Matrix b = identity(1);
    for (std::size_t i = 0; i < modes; ++i) b = kron(b, i == k ? b_one : identity(levels));
    bath.hamiltonian += spec.mode_frequencies[k] * (b.adjoint() * b);
    bath.annihilators.push_back(std::move(b));
  }
  return bath;
}

std::pair<Matrix, Matrix> linear_couplings(const Bath& bath, const std::vector<double>& g,
                                           const std::vector<double>& h) {
  if (g.size() != bath.annihilators.size() || h.size() != bath.annihilators.size())
    throw std::invalid_argument("coupling lists must have one entry per bath mode");
  Matrix t = Matrix::Zero(bath.dim(), bath.dim());
  Matrix t_prime = t;
  for (std::size_t k = 0; k < g.size(); ++k) {
    const Matrix& b = bath.annihilators[k];
    t += g[k] * b;
    t_prime += h[k] * (b + b.adjoint());
  }
  return {t, t_prime};
}

Matrix realize(const Polynomial& p, const SpinOperatorSet& spin) {
  Matrix out = Matrix::Zero(spin.dim(), spin.dim());
  for (const auto& term : p) {
    Matrix product = identity(spin.dim());
    for (const auto& name : term.word) product = product * spin.op(name);
    out += term.coefficient * product;
  }
  return out;
}

Complex chi(const Polynomial& p) {
  Complex sum = 0.0;
  for (const auto& term : p)
    if (term.word.empty()) sum += term.coefficient;
  return sum;
}

std::vector<SymmetricTerm> build_interaction(const SpinOperatorSet& spin, const Matrix& t,
                                             const Matrix& t_prime) {
  const Complex i(0.0, 1.0);
  const Matrix t_sum = t + t.adjoint();
  const Matrix t_diff = i * (t - t.adjoint());

  std::vector<SymmetricTerm> terms;
  if (spin.strategy() == SpinStrategy::Enveloping) {
    // J+ (x) T + J- (x) T^dagger = (J+ + J-)/2 (x) (T + T^dagger)
    //                              + (-i J+ + i J-)/2 (x) i (T - T^dagger)
    terms.push_back({"(J+ + J-)/2 (x) (T + T^dagger)",
                     {{0.5, {"Jplus"}}, {0.5, {"Jminus"}}},
                     t_sum});
    terms.push_back({"(-i J+ + i J-)/2 (x) i(T - T^dagger)",
                     {{-0.5 * i, {"Jplus"}}, {0.5 * i, {"Jminus"}}},
                     t_diff});
    terms.push_back({"J3 (x) T'", {{1.0, {"J3"}}}, t_prime});
  } else {
    // K+ (x) T + K- (x) T^dagger = K1 (x) (T + T^dagger) + K2 (x) i (T - T^dagger)
    terms.push_back({"K1 (x) (T + T^dagger)", {{1.0, {"K1"}}}, t_sum});
    terms.push_back({"K2 (x) i(T - T^dagger)", {{1.0, {"K2"}}}, t_diff});
    terms.push_back({"K3 (x) T'", {{1.0, {"K3"}}}, t_prime});
  }

  constexpr double kTolerance = 1e-12;
  for (const auto& term : terms) {
    const double sys = hermiticity_error(realize(term.polynomial, spin));
    const double env = hermiticity_error(term.bath_operator);
    if (sys > kTolerance || env > kTolerance) {
      std::ostringstream msg;
      msg << "interaction term '" << term.label << "' is not hermitian (system part error "
          << sys << ", bath part error " << env << ")";
      throw ConstructionError(msg.str());
    }
  }
  return terms;
}

SymmetricTerm bath_term(const Bath& bath) {
  return {"1 (x) H_B", {{1.0, {}}}, bath.hamiltonian};
}

namespace {

Matrix realize_all(const std::vector<SymmetricTerm>& terms, const SpinOperatorSet& spin,
                   std::ptrdiff_t dim_bath) {
  const std::ptrdiff_t dim = spin.dim() * dim_bath;
  Matrix h = Matrix::Zero(dim, dim);
  for (const auto& term : terms) {
    if (term.bath_operator.rows() != dim_bath || term.bath_operator.cols() != dim_bath)
      throw ConstructionError("term '" + term.label + "' has a bath operator of the wrong size");
    h += kron(realize(term.polynomial, spin), term.bath_operator);
  }
  const double err = hermiticity_error(h);
  if (err > 1e-12) {
    std::string culprit = "<sum>";
    for (const auto& term : terms) {
      if (hermiticity_error(kron(realize(term.polynomial, spin), term.bath_operator)) > 1e-12) {
        culprit = term.label;
        break;
      }
    }
    std::ostringstream msg;
    msg << "composite Hamiltonian is not hermitian (error " << err << "); offending term '"
        << culprit << "'";
    throw ConstructionError(msg.str());
  }
  return h;
}

}  // namespace

CompositeHamiltonian::CompositeHamiltonian(std::vector<SymmetricTerm> terms,
                                           SpinOperatorSet spin, BathSpec bath)
    : terms_(std::move(terms)),
      spin_(std::move(spin)),
      bath_(std::move(bath)),
      realized_(realize_all(terms_, spin_, bath_.dim())),
      propagator_(realized_) {}

Matrix effective_hamiltonian(const CompositeHamiltonian& h) {
  Matrix out = Matrix::Zero(h.dim_bath(), h.dim_bath());
  for (const auto& term : h.terms()) out += chi(term.polynomial) * term.bath_operator;
  return out;
}

Vector evolve(const CompositeHamiltonian& h, const Vector& state, double t) {
  if (state.size() != h.matrix().rows())
    throw PreconditionError("state has the wrong dimension");
  if (std::abs(state.norm() - 1.0) > 1e-10) throw PreconditionError("state is not normalized");
  return h.propagator().apply(t, state);
}

std::vector<double> time_grid(double start, double stop, int steps) {
  if (steps < 1) throw std::invalid_argument("time grid needs at least one step");
  std::vector<double> grid;
  grid.reserve(static_cast<std::size_t>(steps));
  if (steps == 1) return {start};
  for (int i = 0; i < steps; ++i)
    grid.push_back(start + (stop - start) * static_cast<double>(i) / (steps - 1));
  return grid;
}

double factorization_deviation(const CompositeHamiltonian& h, const Vector& psi,
                          const Vector& zeta, const std::vector<double>& times) {
  if (psi.size() != h.dim_system() || zeta.size() != h.dim_bath())
    throw PreconditionError("psi or zeta has the wrong dimension");
  const HermitianPropagator effective(effective_hamiltonian(h));
  const Vector initial = kron(psi, zeta);
  double worst = 0.0;
  for (double t : times) {
    const Vector full = h.propagator().apply(t, initial);
    const Vector factored = kron(psi, effective.apply(t, zeta));
    worst = std::max(worst, (full - factored).norm());
  }
  return worst;
}

double kernel_residual(const SpinOperatorSet& spin, const Vector& psi) {
  double worst = 0.0;
  for (const auto& [name, m] : spin.operators()) worst = std::max(worst, (m * psi).norm());
  return worst;
}

double verify_factorization(const CompositeHamiltonian& h, const Vector& psi, const Vector& zeta,
                       const std::vector<double>& times) {
  const double residual = kernel_residual(h.spin(), psi);
  if (residual > kKernelMembershipTolerance) {
    std::ostringstream msg;
    msg << "psi is not in the joint kernel of the spin operators (residual " << residual << ")";
    throw PreconditionError(msg.str());
  }
  return factorization_deviation(h, psi, zeta, times);
}

void validate_density_matrix(const Matrix& rho, std::string_view name) {
  auto fail = [&name](const std::string& why) {
    throw PreconditionError(std::string(name) + " is not a density matrix: " + why);
  };
  if (rho.rows() != rho.cols() || rho.rows() == 0) fail("not square");
  if (hermiticity_error(rho) > 1e-10) fail("not hermitian");
  if (std::abs(rho.trace() - Complex(1.0)) > 1e-10) fail("trace is not 1");
  Eigen::SelfAdjointEigenSolver<Matrix> eig(rho, Eigen::EigenvaluesOnly);
  if (eig.eigenvalues().minCoeff() < -1e-10) fail("has a negative eigenvalue");
}

Matrix induced_channel(const CompositeHamiltonian& h, const Matrix& rho_system,
                       const Matrix& rho_bath, double t) {
  validate_density_matrix(rho_system, "rho_S");
  validate_density_matrix(rho_bath, "rho_B");
  if (rho_system.rows() != h.dim_system() || rho_bath.rows() != h.dim_bath())
    throw PreconditionError("density matrix dimensions do not match the Hamiltonian");
  const Matrix u = h.propagator().unitary(t);
  const Matrix rho = u * kron(rho_system, rho_bath) * u.adjoint();
  return partial_trace_bath(rho, h.dim_system(), h.dim_bath());
}

HamiltonianParts decompose(const Matrix& h, std::ptrdiff_t dim_system, std::ptrdiff_t dim_bath) {
  if (h.rows() != dim_system * dim_bath || h.cols() != h.rows())
    throw std::invalid_argument("matrix size does not match the factor dimensions");
  const Complex total = h.trace() / static_cast<double>(dim_system * dim_bath);
  HamiltonianParts parts;
  parts.system = partial_trace_bath(h, dim_system, dim_bath) / static_cast<double>(dim_bath);
  parts.bath = partial_trace_system(h, dim_system, dim_bath) / static_cast<double>(dim_system) -
               total * identity(dim_bath);
  parts.interaction =
      h - kron(parts.system, identity(dim_bath)) - kron(identity(dim_system), parts.bath);
  return parts;
}

HamiltonianParts decompose(const CompositeHamiltonian& h) {
  return decompose(h.matrix(), h.dim_system(), h.dim_bath());
}

}  // namespace smu
