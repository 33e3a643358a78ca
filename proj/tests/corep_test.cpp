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

#include <gtest/gtest.h>

#include <sstream>

#include "oracles.hpp"
#include "smu/csv.hpp"
#include "smu/errors.hpp"

namespace smu {
namespace {

const std::vector<double> kMuGrid{-0.7, -0.3, 0.3, 0.7, 1.0};

TEST(ClassicalOracle, CatalanNumbers) {
  EXPECT_EQ(testing::classical_singlet_multiplicity(1), 0);
  EXPECT_EQ(testing::classical_singlet_multiplicity(2), 1);
  EXPECT_EQ(testing::classical_singlet_multiplicity(3), 0);
  EXPECT_EQ(testing::classical_singlet_multiplicity(4), 2);
  EXPECT_EQ(testing::classical_singlet_multiplicity(6), 5);
  EXPECT_EQ(testing::classical_singlet_multiplicity(8), 14);
}

TEST(Fundamental, Entries) {
  DeformationParameter d(0.4);
  auto u = fundamental(d);
  EXPECT_EQ(u.dim(), 2u);
  EXPECT_EQ(u.entry(0, 0), AlgebraElement::generator(d, Generator::Alpha));
  EXPECT_EQ(u.entry(0, 1), AlgebraElement::monomial(d, Monomial{0, 0, 1}, -0.4));
  EXPECT_EQ(u.entry(1, 0), AlgebraElement::generator(d, Generator::Gamma));
  EXPECT_EQ(u.entry(1, 1), AlgebraElement::generator(d, Generator::AlphaStar));
}

TEST(Fundamental, Unitary) {
  for (double mu : kMuGrid) {
    EXPECT_LE(unitarity_residual(fundamental(DeformationParameter(mu))), 1e-14) << mu;
  }
}

TEST(Fundamental, ClassicalEntriesCommute) {
  DeformationParameter d(1.0);
  auto u = fundamental(d);
  for (std::size_t a = 0; a < 4; ++a)
    for (std::size_t b = 0; b < 4; ++b) {
      const auto& x = u.entry(a / 2, a % 2);
      const auto& y = u.entry(b / 2, b % 2);
      EXPECT_LE(max_coefficient_distance(x * y, y * x), 1e-15);
    }
  EXPECT_EQ(u.entry(0, 1), AlgebraElement::monomial(d, Monomial{0, 0, 1}, -1.0));
}

TEST(TensorProduct, DimensionAndCornerEntry) {
  DeformationParameter d(0.6);
  auto u = fundamental(d);
  auto uu = tensor_product(u, u);
  EXPECT_EQ(uu.dim(), 4u);
  EXPECT_EQ(uu.entry(0, 0), AlgebraElement::monomial(d, Monomial{2, 0, 0}));
  EXPECT_LE(unitarity_residual(uu), 1e-12);
}

TEST(TensorProduct, MismatchedMuThrows) {
  EXPECT_THROW(tensor_product(fundamental(DeformationParameter(0.3)),
                              fundamental(DeformationParameter(0.4))),
               ParameterMismatch);
}

TEST(CheckAxiom, FundamentalAndSquare) {
  for (double mu : {-0.3, 0.3, 0.7, 1.0}) {
    DeformationParameter d(mu);
    auto u = fundamental(d);
    EXPECT_LE(check_axiom(u).residual, 1e-12);
    EXPECT_LE(check_axiom(tensor_product(u, u)).residual, 1e-12);
  }
}

TEST(CheckAxiom, CorruptedEntryIsDetected) {
  DeformationParameter d(0.3);
  auto bad = fundamental(d).with_entry(0, 0, AlgebraElement(d));
  EXPECT_GT(check_axiom(bad).residual, 0.1);
}

TEST(Register, BaseCaseAndDegrees) {
  DeformationParameter d(0.5);
  auto r1 = register_corep(d, 1);
  auto u = fundamental(d);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) EXPECT_EQ(r1.entry(i, j), u.entry(i, j));
  EXPECT_EQ(register_corep(d, 2).dim(), 4u);
  auto r3 = register_corep(d, 3);
  ASSERT_EQ(r3.dim(), 8u);
  for (std::size_t i = 0; i < 8; ++i)
    for (std::size_t j = 0; j < 8; ++j) EXPECT_LE(r3.entry(i, j).degree(), 3);
}

TEST(Register, Budget) {
  DeformationParameter d(0.5);
  EXPECT_THROW(register_corep(d, 7), ResourceLimit);
  EXPECT_THROW(register_corep(d, 3, 2), ResourceLimit);
  EXPECT_THROW(register_corep(d, 0), std::invalid_argument);
}

TEST(InvariantSubspace, FundamentalHasNone) {
  for (double mu : kMuGrid) {
    EXPECT_EQ(invariant_subspace(fundamental(DeformationParameter(mu))).dimension(), 0u);
  }
}

TEST(InvariantSubspace, DeformedSinglet) {
  for (double mu : kMuGrid) {
    auto basis = invariant_subspace(register_corep(DeformationParameter(mu), 2));
    ASSERT_EQ(basis.dimension(), 1u) << mu;
    EXPECT_LE((basis.vectors.col(0) - testing::deformed_singlet(mu)).cwiseAbs().maxCoeff(),
              1e-10)
        << mu;
  }
}

TEST(InvariantSubspace, ClassicalSinglet) {
  auto basis = invariant_subspace(register_corep(DeformationParameter(1.0), 2));
  ASSERT_EQ(basis.dimension(), 1u);
  Vector classical = Vector::Zero(4);
  classical(1) = 1.0 / std::sqrt(2.0);
  classical(2) = -1.0 / std::sqrt(2.0);
  EXPECT_LE((basis.vectors.col(0) - classical).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(InvariantSubspace, TripletIsComplement) {
  for (double mu : kMuGrid) {
    auto basis = invariant_subspace(register_corep(DeformationParameter(mu), 2));
    Matrix complement = identity(4) - projector(basis.vectors);
    Matrix triplet = projector(testing::deformed_triplet(mu));
    EXPECT_LE((complement - triplet).cwiseAbs().maxCoeff(), 1e-10) << mu;
  }
}

TEST(InvariantSubspace, MultiplicitiesMatchClassicalOracle) {
  for (double mu : kMuGrid) {
    DeformationParameter d(mu);
    for (int n : {2, 3, 4}) {
      auto basis = invariant_subspace(register_corep(d, n));
      EXPECT_EQ(static_cast<long>(basis.dimension()),
                testing::classical_singlet_multiplicity(n))
          << "mu=" << mu << " n=" << n;
    }
  }
}

TEST(InvariantSubspace, SixQubits) {
  auto basis = invariant_subspace(register_corep(DeformationParameter(0.6), 6));
  EXPECT_EQ(static_cast<long>(basis.dimension()), testing::classical_singlet_multiplicity(6));
}

TEST(InvariantSubspace, ResidualsAndOrthonormality) {
  for (double mu : kMuGrid) {
    auto v = register_corep(DeformationParameter(mu), 4);
    auto basis = invariant_subspace(v);
    const Matrix constraints = invariance_constraints(v);
    for (std::ptrdiff_t j = 0; j < basis.vectors.cols(); ++j) {
      EXPECT_LE((constraints * basis.vectors.col(j)).norm(), 1e-9);
      EXPECT_LE(basis.residuals[static_cast<std::size_t>(j)], 1e-9);
    }
    const Matrix gram = basis.vectors.adjoint() * basis.vectors;
    EXPECT_LE((gram - identity(gram.rows())).cwiseAbs().maxCoeff(), 1e-12);
  }
}

TEST(InvariantSubspace, CsvRows) {
  auto basis = invariant_subspace(register_corep(DeformationParameter(0.5), 2));
  std::ostringstream out;
  write_invariant_basis_rows(out, 0.5, basis);
  const std::string text = out.str();
  EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 4);
  const std::string expected_row = format_double(0.5) + ",0,1," +
                                   format_double(1.0 / std::sqrt(1.25)) + ",";
  EXPECT_NE(text.find(expected_row), std::string::npos) << text;
  EXPECT_EQ(text.substr(0, 24), "5.00000000000000000e-01,");
}

}  // namespace
}  // namespace smu
