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

#include "smu/corep.hpp"

#include <algorithm>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "smu/csv.hpp"
#include "smu/errors.hpp"

namespace smu {

Corepresentation::Corepresentation(const DeformationParameter& deformation,
                                   std::size_t dim, std::vector<AlgebraElement> entries)
    : deformation_(deformation), dim_(dim), entries_(std::move(entries)) {
  if (dim_ == 0) throw std::invalid_argument("corepresentation dimension must be positive");
  if (entries_.size() != dim_ * dim_)
    throw std::invalid_argument("corepresentation needs dim * dim entries");
  for (const auto& e : entries_) {
    if (!(e.deformation() == deformation_))
      throw ParameterMismatch("corepresentation entry over a different deformation");
  }
}

Corepresentation Corepresentation::with_entry(std::size_t row, std::size_t col,
                                              const AlgebraElement& value) const {
  auto entries = entries_;
  entries.at(row * dim_ + col) = value;
  return Corepresentation(deformation_, dim_, std::move(entries));
}

Corepresentation fundamental(const DeformationParameter& d) {
  auto gen = [&d](Generator g) { return AlgebraElement::generator(d, g); };
  return Corepresentation(d, 2,
                          {gen(Generator::Alpha), gen(Generator::GammaStar) * (-d.mu()),
                           gen(Generator::Gamma), gen(Generator::AlphaStar)});
}

Corepresentation tensor_product(const Corepresentation& v, const Corepresentation& w) {
  if (!(v.deformation() == w.deformation()))
    throw ParameterMismatch("tensor product of corepresentations over different mu");
  const std::size_t dv = v.dim(), dw = w.dim(), d = dv * dw;
  std::vector<AlgebraElement> entries(d * d, AlgebraElement(v.deformation()));
  for (std::size_t i = 0; i < dv; ++i)
    for (std::size_t k = 0; k < dw; ++k)
      for (std::size_t j = 0; j < dv; ++j)
        for (std::size_t l = 0; l < dw; ++l)
          entries[(i * dw + k) * d + (j * dw + l)] = v.entry(i, j) * w.entry(k, l);
  return Corepresentation(v.deformation(), d, std::move(entries));
}

Corepresentation register_corep(const DeformationParameter& d, int qubits, int budget) {
  if (qubits < 1) throw std::invalid_argument("register needs at least one qubit");
  if (qubits > budget) {
    std::ostringstream msg;
    msg << "register of " << qubits << " qubits exceeds the symbolic budget of " << budget;
    throw ResourceLimit(msg.str());
  }
  const auto u = fundamental(d);
  Corepresentation v = u;
  for (int i = 1; i < qubits; ++i) v = tensor_product(v, u);
  return v;
}

double unitarity_residual(const Corepresentation& v) {
  const auto& d = v.deformation();
  const std::size_t n = v.dim();
  double worst = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      AlgebraElement star_v(d), v_star(d);
      for (std::size_t k = 0; k < n; ++k) {
        star_v = star_v + adjoint(v.entry(k, i)) * v.entry(k, j);
        v_star = v_star + v.entry(i, k) * adjoint(v.entry(j, k));
      }
      const auto expected = AlgebraElement::scalar(d, i == j ? 1.0 : 0.0);
      worst = std::max({worst, max_coefficient_distance(star_v, expected),
                        max_coefficient_distance(v_star, expected)});
    }
  }
  return worst;
}

AxiomReport check_axiom(const Corepresentation& v) {
  AxiomReport report;
  const std::size_t n = v.dim();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      TensorAlgebraElement composed(v.deformation());
      for (std::size_t k = 0; k < n; ++k)
        composed = composed + TensorAlgebraElement::pure(v.entry(i, k), v.entry(k, j));
      const double r = max_coefficient_distance(coproduct(v.entry(i, j)), composed);
      if (r > report.residual) report = AxiomReport{r, i, j};
    }
  }
  return report;
}

Matrix invariance_constraints(const Corepresentation& v) {
  const std::size_t n = v.dim();
  std::map<Monomial, std::size_t> index;
  index.emplace(Monomial{}, 0);
  for (std::size_t i = 0; i < n * n; ++i)
    for (const auto& [m, c] : v.entry(i / n, i % n).terms()) index.emplace(m, 0);
  std::size_t next = 0;
  for (auto& [m, idx] : index) idx = next++;

  const auto dim = static_cast<std::ptrdiff_t>(n);
  Matrix stacked = Matrix::Zero(static_cast<std::ptrdiff_t>(index.size()) * dim, dim);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (const auto& [m, c] : v.entry(i, j).terms()) {
        stacked(static_cast<std::ptrdiff_t>(index.at(m) * n + i),
                static_cast<std::ptrdiff_t>(j)) += c;
      }
    }
  }
  // psi_i (x) 1 on the right-hand side lands in the unit-monomial block.
  const auto unit_row = static_cast<std::ptrdiff_t>(index.at(Monomial{}) * n);
  stacked.block(unit_row, 0, dim, dim) -= identity(dim);

  std::vector<std::ptrdiff_t> keep;
  for (std::ptrdiff_t r = 0; r < stacked.rows(); ++r)
    if (stacked.row(r).cwiseAbs().maxCoeff() > 0.0) keep.push_back(r);
  Matrix compact(static_cast<std::ptrdiff_t>(keep.size()), dim);
  for (std::size_t r = 0; r < keep.size(); ++r)
    compact.row(static_cast<std::ptrdiff_t>(r)) = stacked.row(keep[r]);
  return compact;
}

InvariantBasis invariant_subspace(const Corepresentation& v) {
  const Matrix constraints = invariance_constraints(v);
  auto ns = nullspace(constraints);
  InvariantBasis basis;
  basis.vectors = std::move(ns.basis);
  for (std::ptrdiff_t j = 0; j < basis.vectors.cols(); ++j)
    basis.residuals.push_back((constraints * basis.vectors.col(j)).norm());
  return basis;
}

void write_invariant_basis_rows(std::ostream& out, double mu, const InvariantBasis& basis) {
  for (std::ptrdiff_t j = 0; j < basis.vectors.cols(); ++j) {
    for (std::ptrdiff_t i = 0; i < basis.vectors.rows(); ++i) {
      const Complex c = basis.vectors(i, j);
      out << format_double(mu) << ',' << j << ',' << i << ',' << format_double(c.real())
          << ',' << format_double(c.imag()) << '\n';
    }
  }
}

}  // namespace smu
