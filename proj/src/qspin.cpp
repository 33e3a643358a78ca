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

#include "smu/qspin.hpp"

#include <cmath>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "smu/csv.hpp"
#include "smu/errors.hpp"

namespace smu {

std::string_view to_string(SpinStrategy s) {
  return s == SpinStrategy::Recurrence ? "recurrence" : "enveloping";
}

SpinStrategy parse_strategy(std::string_view text) {
  if (text == "recurrence") return SpinStrategy::Recurrence;
  if (text == "enveloping") return SpinStrategy::Enveloping;
  throw std::invalid_argument("unknown strategy '" + std::string(text) +
                              "' (expected recurrence or enveloping)");
}

namespace {

Matrix diag2(Complex a, Complex b) {
  Matrix m = Matrix::Zero(2, 2);
  m(0, 0) = a;
  m(1, 1) = b;
  return m;
}

}  // namespace

BaseCase BaseCase::singlet_annihilating(double mu) {
  const Matrix k12 = diag2(1.0 / (2.0 * mu), -mu / 2.0);
  return BaseCase{{k12, k12, diag2(1.0 / (2.0 * mu * mu), -mu * mu / 2.0)}};
}

BaseCase BaseCase::pauli_halves() {
  Matrix x = Matrix::Zero(2, 2), y = Matrix::Zero(2, 2);
  x(0, 1) = x(1, 0) = 0.5;
  y(0, 1) = Complex(0.0, -0.5);
  y(1, 0) = Complex(0.0, 0.5);
  return BaseCase{{x, y, diag2(0.5, -0.5)}};
}

bool BaseCase::is_hermitian(double tolerance) const {
  for (const auto& m : k)
    if (hermiticity_error(m) > tolerance) return false;
  return true;
}

SpinOperatorSet::SpinOperatorSet(int qubits, double mu, SpinStrategy strategy,
                                 std::map<std::string, Matrix> ops)
    : qubits_(qubits), mu_(mu), strategy_(strategy), ops_(std::move(ops)) {
  for (const auto& [name, m] : ops_) {
    if (m.rows() != dim() || m.cols() != dim())
      throw std::invalid_argument("operator " + name + " has the wrong dimension");
  }
}

const Matrix& SpinOperatorSet::op(std::string_view name) const {
  auto it = ops_.find(std::string(name));
  if (it == ops_.end()) throw std::out_of_range("no operator named " + std::string(name));
  return it->second;
}

bool SpinOperatorSet::has(std::string_view name) const {
  return ops_.count(std::string(name)) > 0;
}

Matrix SpinOperatorSet::raising() const {
  if (strategy_ == SpinStrategy::Enveloping) return op("Jplus");
  return op("K1") + Complex(0.0, 1.0) * op("K2");
}

Matrix SpinOperatorSet::lowering() const {
  if (strategy_ == SpinStrategy::Enveloping) return op("Jminus");
  return op("K1") - Complex(0.0, 1.0) * op("K2");
}

const Matrix& SpinOperatorSet::weight() const {
  return strategy_ == SpinStrategy::Enveloping ? op("J3") : op("K3");
}

SpinOperatorSet build_recurrence(const DeformationParameter& d, int qubits,
                                 const BaseCase& base) {
  if (qubits < 1) throw std::invalid_argument("need at least one qubit");
  for (const auto& m : base.k) {
    if (m.rows() != 2 || m.cols() != 2)
      throw std::invalid_argument("base case matrices must be 2x2");
  }
  const double mu = d.mu();
  const Matrix half = diag2(0.5, -0.5);
  const Matrix scale3 = diag2(1.0 / (mu * mu), mu * mu);
  const Matrix scale12 = diag2(1.0 / mu, mu);

  std::array<Matrix, 3> k = base.k;
  for (int m = 1; m < qubits; ++m) {
    const Matrix id = identity(k[0].rows());
    k[0] = kron(k[0], scale12) + kron(id, half);
    k[1] = kron(k[1], scale12) + kron(id, half);
    k[2] = kron(k[2], scale3) + kron(id, half);
  }
  return SpinOperatorSet(qubits, mu, SpinStrategy::Recurrence,
                         {{"K1", k[0]}, {"K2", k[1]}, {"K3", k[2]}});
}

SpinOperatorSet build_recurrence(const DeformationParameter& d, int qubits) {
  return build_recurrence(d, qubits, BaseCase::singlet_annihilating(d.mu()));
}

SpinOperatorSet build_enveloping(const DeformationParameter& d, int qubits,
                                 EnvelopingConvention convention) {
  if (qubits < 1) throw std::invalid_argument("need at least one qubit");
  const double q = convention == EnvelopingConvention::InverseMu ? 1.0 / d.mu() : d.mu();
  // q^(J3) on one qubit; for q < 0 the square root is imaginary, which only
  // changes J- = (J+)^dagger by an overall sign per factor.
  const Complex root = std::sqrt(Complex(q, 0.0));
  const Matrix k_one = diag2(root, 1.0 / root);
  const Matrix k_inv_one = diag2(1.0 / root, root);
  Matrix jplus_one = Matrix::Zero(2, 2);
  jplus_one(0, 1) = 1.0;
  const Matrix j3_one = diag2(0.5, -0.5);

  Matrix jplus = jplus_one, j3 = j3_one, k_inv = k_inv_one;
  for (int m = 1; m < qubits; ++m) {
    const Matrix id = identity(j3.rows());
    jplus = kron(jplus, k_one) + kron(k_inv, jplus_one);
    j3 = kron(j3, identity(2)) + kron(id, j3_one);
    k_inv = kron(k_inv, k_inv_one);
  }
  Matrix jminus = jplus.adjoint();
  return SpinOperatorSet(qubits, d.mu(), SpinStrategy::Enveloping,
                         {{"Jplus", jplus}, {"Jminus", jminus}, {"J3", j3}});
}

InvariantBasis joint_kernel(const SpinOperatorSet& s) {
  const auto& ops = s.operators();
  Matrix stacked(s.dim() * static_cast<std::ptrdiff_t>(ops.size()), s.dim());
  std::ptrdiff_t row = 0;
  for (const auto& [name, m] : ops) {
    stacked.middleRows(row, s.dim()) = m;
    row += s.dim();
  }
  auto ns = nullspace(stacked);
  InvariantBasis basis;
  basis.vectors = std::move(ns.basis);
  for (std::ptrdiff_t j = 0; j < basis.vectors.cols(); ++j)
    basis.residuals.push_back((stacked * basis.vectors.col(j)).norm());
  return basis;
}

KernelComparison compare_with_corep(const SpinOperatorSet& s, const InvariantBasis& reference) {
  if (reference.vectors.rows() != s.dim() && reference.dimension() > 0) {
    throw PreconditionError("reference basis lives on a register of a different size");
  }
  const auto kernel = joint_kernel(s);
  KernelComparison out;
  out.kernel_dim = kernel.dimension();
  out.reference_dim = reference.dimension();
  Matrix ref = reference.vectors;
  if (ref.rows() != s.dim()) ref.resize(s.dim(), 0);
  out.max_angle = max_principal_angle(ref, kernel.vectors);
  out.agree = out.kernel_dim == out.reference_dim && out.max_angle <= kKernelAgreementAngle;

  std::ostringstream msg;
  msg << "n=" << s.qubits() << " mu=" << s.mu() << ": " << to_string(s.strategy())
      << " kernel dim " << out.kernel_dim << " vs corep dim " << out.reference_dim
      << ", max principal angle " << out.max_angle << " -> "
      << (out.agree ? "agree" : "DISAGREE");
  out.summary = msg.str();
  return out;
}

void write_operator_csv(std::ostream& out, const SpinOperatorSet& s) {
  out << "operator,row,col,re,im\n";
  for (const auto& [name, m] : s.operators()) {
    for (std::ptrdiff_t i = 0; i < m.rows(); ++i)
      for (std::ptrdiff_t j = 0; j < m.cols(); ++j) {
        const Complex z = m(i, j);
        if (z == Complex(0.0)) continue;
        out << name << ',' << i << ',' << j << ',' << format_double(z.real()) << ','
            << format_double(z.imag()) << '\n';
      }
  }
}

}  // namespace smu
