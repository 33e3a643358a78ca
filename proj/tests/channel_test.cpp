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

#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "random_matrices.hpp"
#include "smu/dynamics.hpp"
#include "smu/errors.hpp"

namespace smu {
namespace {

using testing::random_complex;
using testing::random_density;
using testing::random_hermitian;
using testing::random_state;
using testing::random_unitary;

struct Setup {
  SpinOperatorSet spin;
  Bath bath;
  CompositeHamiltonian h;
};

Setup make_setup(double mu, int qubits, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  auto spin = build_enveloping(DeformationParameter(mu), qubits);
  auto bath = build_bath({{1.0, 1.4}, 3});
  auto terms = build_interaction(spin, random_complex(bath.dim(), bath.dim(), rng) * 0.4,
                                 random_hermitian(bath.dim(), rng) * 0.4);
  terms.push_back(bath_term(bath));
  terms.push_back({"J+J- (x) T2", {{1.0, {"Jplus", "Jminus"}}}, random_hermitian(bath.dim(), rng)});
  terms.push_back({"1 (x) T3", {{1.0, {}}}, random_hermitian(bath.dim(), rng) * 0.3});
  CompositeHamiltonian h(terms, spin, bath.spec);
  return {spin, bath, h};
}

TEST(Kraus, IdentityUnitary) {
  std::mt19937_64 rng(1);
  const Vector zeta = random_state(3, rng);
  auto kraus = kraus_from_unitary(identity(12), zeta, 4);
  ASSERT_EQ(kraus.operators.size(), 3u);
  for (std::size_t a = 0; a < 3; ++a)
    EXPECT_LE((kraus.operators[a] - zeta(static_cast<std::ptrdiff_t>(a)) * identity(4))
                  .cwiseAbs()
                  .maxCoeff(),
              1e-15);
  EXPECT_LE(kraus.completeness_residual(), 1e-14);
}

TEST(Kraus, BathOnlyUnitary) {
  std::mt19937_64 rng(2);
  const Matrix v = random_unitary(3, rng);
  const Vector zeta = random_state(3, rng);
  auto kraus = kraus_from_unitary(kron(identity(2), v), zeta, 2);
  const Vector image = v * zeta;
  for (std::size_t a = 0; a < 3; ++a)
    EXPECT_LE((kraus.operators[a] - image(static_cast<std::ptrdiff_t>(a)) * identity(2))
                  .cwiseAbs()
                  .maxCoeff(),
              1e-14);
}

TEST(Kraus, ReproducesPartialTrace) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 3; ++trial) {
    const Matrix u = random_unitary(12, rng);
    const Vector zeta = random_state(3, rng);
    auto kraus = kraus_from_unitary(u, zeta, 4);
    EXPECT_LE(kraus.completeness_residual(), 1e-12);
    const Matrix rho = random_density(4, rng);
    const Matrix joint = u * kron(rho, zeta * zeta.adjoint()) * u.adjoint();
    EXPECT_LE((kraus.apply(rho) - partial_trace_bath(joint, 4, 3)).cwiseAbs().maxCoeff(), 1e-12);
  }
}

TEST(Kraus, RejectsBadInputs) {
  std::mt19937_64 rng(4);
  const Vector zeta = random_state(3, rng);
  EXPECT_THROW(kraus_from_unitary(identity(12), 2.0 * zeta, 4), PreconditionError);
  EXPECT_THROW(kraus_from_unitary(2.0 * identity(12), zeta, 4), PreconditionError);
  EXPECT_THROW(kraus_from_unitary(identity(10), zeta, 4), PreconditionError);
  EXPECT_THROW(kraus_from_unitary(identity(12), zeta, 4, 2.0 * identity(3)), PreconditionError);
}

TEST(Certify, InvariantCodeIsErrorAvoiding) {
  for (double mu : {0.7, -0.3}) {
    for (int n : {2, 4}) {
      auto s = make_setup(mu, n, 5);
      const auto code = joint_kernel(s.spin).vectors;
      std::mt19937_64 rng(6);
      const Vector zeta = random_state(s.bath.dim(), rng);
      for (double t : {0.5, 1.0, 5.0}) {
        auto kraus = kraus_from_unitary(s.h.propagator().unitary(t), zeta, s.spin.dim());
        EXPECT_LE(kraus.completeness_residual(), 1e-10);
        auto cert = certify_code(kraus, code);
        EXPECT_EQ(cert.verdict, CodeVerdict::ErrorAvoiding) << "mu=" << mu << " n=" << n;
        EXPECT_LE(cert.rank_gap, 1e-8);
        EXPECT_LE(cert.factorization_residual, 1e-8);
        EXPECT_LE(cert.off_block_residual, 1e-8);
      }
    }
  }
}

TEST(Certify, ProductStateIsNotCertified) {
  auto s = make_setup(0.7, 2, 7);
  std::mt19937_64 rng(8);
  const Vector zeta = random_state(s.bath.dim(), rng);
  auto kraus = kraus_from_unitary(s.h.propagator().unitary(1.0), zeta, 4);
  auto cert = certify_code(kraus, basis_vector(4, 0));
  EXPECT_NE(cert.verdict, CodeVerdict::ErrorAvoiding);
  EXPECT_GT(cert.rank_gap, 1e-3);
}

TEST(Certify, VaryingDiagonalThrows) {
  auto s = make_setup(0.7, 2, 9);
  std::mt19937_64 rng(10);
  const Vector zeta = random_state(s.bath.dim(), rng);
  auto kraus = kraus_from_unitary(s.h.propagator().unitary(2.0), zeta, 4);
  Matrix product(4, 2);
  product << basis_vector(4, 0), basis_vector(4, 3);
  EXPECT_THROW(certify_code(kraus, product), CodeConditionError);
  EXPECT_THROW(code_eigenvalues(kraus, product), CodeConditionError);
  EXPECT_THROW(certify_code(kraus, 2.0 * basis_vector(4, 0)), PreconditionError);
}

TEST(Certify, EigenvaluesFollowEffectiveBathEvolution) {
  auto s = make_setup(0.5, 2, 11);
  std::mt19937_64 rng(12);
  const Vector zeta = random_state(s.bath.dim(), rng);
  const Vector singlet = testing::deformed_singlet(0.5);
  const Matrix heff = effective_hamiltonian(s.h);
  for (double t : {0.5, 3.0}) {
    auto kraus = kraus_from_unitary(s.h.propagator().unitary(t), zeta, 4);
    auto g = code_eigenvalues(kraus, singlet);
    const Vector expected = testing::taylor_exponential(heff, t) * zeta;
    double norm = 0.0;
    for (std::size_t a = 0; a < g.size(); ++a) {
      norm += std::norm(g[a]);
      EXPECT_LE(std::abs(g[a] - expected(static_cast<std::ptrdiff_t>(a))), 1e-9);
    }
    EXPECT_NEAR(norm, 1.0, 1e-10);
  }
}

TEST(Certify, VerdictIndependentOfBathBasis) {
  auto s = make_setup(0.6, 4, 13);
  const auto code = joint_kernel(s.spin).vectors;
  std::mt19937_64 rng(14);
  const Vector zeta = random_state(s.bath.dim(), rng);
  const Matrix u = s.h.propagator().unitary(2.5);
  auto standard = certify_code(kraus_from_unitary(u, zeta, s.spin.dim()), code);
  auto rotated = certify_code(
      kraus_from_unitary(u, zeta, s.spin.dim(), random_unitary(s.bath.dim(), rng)), code);
  EXPECT_EQ(standard.verdict, CodeVerdict::ErrorAvoiding);
  EXPECT_EQ(rotated.verdict, CodeVerdict::ErrorAvoiding);
  EXPECT_LE(rotated.factorization_residual, 1e-8);
}

TEST(Certify, VerdictNames) {
  EXPECT_EQ(to_string(CodeVerdict::ErrorAvoiding), "error-avoiding");
  EXPECT_EQ(to_string(CodeVerdict::Nondegenerate), "nondegenerate");
  EXPECT_EQ(to_string(CodeVerdict::NotCertified), "not-certified");
}

}  // namespace
}  // namespace smu
