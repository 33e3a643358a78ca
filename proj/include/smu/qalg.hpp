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

// Normal-ordering engine for the polynomial *-algebra of the quantum group
// S_mu U(2), generated by alpha, alpha*, gamma, gamma* subject to
//
//   alpha alpha* + mu^2 gamma* gamma = 1     alpha* alpha + gamma* gamma = 1
//   gamma* gamma = gamma gamma*
//   alpha gamma = mu gamma alpha             alpha gamma* = mu gamma* alpha
//
// Elements are stored in the PBW basis alpha^k gamma^l gamma*^m, where a
// negative k stands for alpha*^(-k). The deformation parameter is numeric and
// fixed per element.

#include <compare>
#include <complex>
#include <map>
#include <string>
#include <utility>

namespace smu {

using Complex = std::complex<double>;

/// Coefficients with magnitude below this are dropped after every
/// normalization.
inline constexpr double kDropThreshold = 1e-14;

/// Commutation factors used by the normal-ordering rewrite. For the genuine
/// algebra these are all fixed by mu (see `RewriteRules::standard`); the
/// struct exists so that test fixtures can inject a corrupted rule and check
/// that the verification suites notice.
struct RewriteRules {
  double gamma_alpha;             // gamma  alpha  = f alpha  gamma
  double gamma_star_alpha;        // gamma* alpha  = f alpha  gamma*
  double gamma_alpha_star;        // gamma  alpha* = f alpha* gamma
  double gamma_star_alpha_star;   // gamma* alpha* = f alpha* gamma*
  double alpha_alpha_star_weight; // alpha alpha* = 1 - w gamma* gamma
  double alpha_star_alpha_weight; // alpha* alpha = 1 - w gamma* gamma

  static RewriteRules standard(double mu);

  friend bool operator==(const RewriteRules&, const RewriteRules&) = default;
};

class DeformationParameter {
 public:
  /// Throws std::invalid_argument unless mu is in [-1, 1] and nonzero.
  explicit DeformationParameter(double mu);

  /// Test-fixture constructor: keeps `mu` but rewrites with `rules`.
  static DeformationParameter with_rules(double mu, const RewriteRules& rules);

  double mu() const { return mu_; }
  const RewriteRules& rules() const { return rules_; }

  friend bool operator==(const DeformationParameter&,
                         const DeformationParameter&) = default;

 private:
  double mu_;
  RewriteRules rules_;
};

enum class Generator { Alpha, AlphaStar, Gamma, GammaStar };

/// alpha^alpha_power gamma^gamma_power gamma*^gamma_star_power, with a
/// negative alpha_power meaning powers of alpha*.
struct Monomial {
  int alpha_power = 0;
  int gamma_power = 0;
  int gamma_star_power = 0;

  int degree() const;
  bool is_unit() const {
    return alpha_power == 0 && gamma_power == 0 && gamma_star_power == 0;
  }
  std::string to_string() const;

  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

using TermMap = std::map<Monomial, Complex>;

class AlgebraElement {
 public:
  /// The zero element.
  explicit AlgebraElement(const DeformationParameter& deformation);

  static AlgebraElement scalar(const DeformationParameter& deformation,
                               Complex value);
  static AlgebraElement generator(const DeformationParameter& deformation,
                                  Generator g);
  /// A single normal-ordered monomial. Throws std::invalid_argument if the
  /// gamma powers are negative.
  static AlgebraElement monomial(const DeformationParameter& deformation,
                                 const Monomial& m, Complex coefficient = 1.0);
  /// Builds from already normal-ordered terms, dropping coefficients below
  /// kDropThreshold.
  static AlgebraElement from_terms(const DeformationParameter& deformation,
                                   TermMap terms);

  const DeformationParameter& deformation() const { return deformation_; }
  double mu() const { return deformation_.mu(); }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Complex coefficient(const Monomial& m) const;
  int degree() const;
  std::string to_string() const;

  AlgebraElement operator+(const AlgebraElement& other) const;
  AlgebraElement operator-(const AlgebraElement& other) const;
  AlgebraElement operator-() const;
  AlgebraElement operator*(const AlgebraElement& other) const;
  AlgebraElement operator*(Complex s) const;
  friend AlgebraElement operator*(Complex s, const AlgebraElement& a) {
    return a * s;
  }

  /// Term-wise equality of the normal forms.
  friend bool operator==(const AlgebraElement& a, const AlgebraElement& b);

 private:
  AlgebraElement(const DeformationParameter& deformation, TermMap terms);

  DeformationParameter deformation_;
  TermMap terms_;
};

/// Product in PBW normal form. Throws ParameterMismatch when the operands
/// carry different deformation parameters.
AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b);

/// The *-involution: antilinear, order reversing, involutive.
AlgebraElement adjoint(const AlgebraElement& a);

/// Largest coefficient magnitude of a - b.
double max_coefficient_distance(const AlgebraElement& a,
                                const AlgebraElement& b);

/// max_coefficient_distance scaled by max(1, largest coefficient of a or b).
/// Products of high degree pick up factors mu^-k, so for |mu| << 1 absolute
/// float error grows with the coefficients themselves.
double relative_coefficient_distance(const AlgebraElement& a,
                                     const AlgebraElement& b);

using TensorTermMap = std::map<std::pair<Monomial, Monomial>, Complex>;

/// Element of A (x) A; both legs kept in normal form.
class TensorAlgebraElement {
 public:
  explicit TensorAlgebraElement(const DeformationParameter& deformation);

  static TensorAlgebraElement pure(const AlgebraElement& left,
                                   const AlgebraElement& right);
  static TensorAlgebraElement from_terms(const DeformationParameter& deformation,
                                         TensorTermMap terms);

  const DeformationParameter& deformation() const { return deformation_; }
  const TensorTermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  TensorAlgebraElement operator+(const TensorAlgebraElement& other) const;
  TensorAlgebraElement operator-(const TensorAlgebraElement& other) const;
  TensorAlgebraElement operator*(const TensorAlgebraElement& other) const;
  TensorAlgebraElement operator*(Complex s) const;

  friend bool operator==(const TensorAlgebraElement&,
                         const TensorAlgebraElement&) = default;

 private:
  TensorAlgebraElement(const DeformationParameter& deformation,
                       TensorTermMap terms);

  DeformationParameter deformation_;
  TensorTermMap terms_;
};

double max_coefficient_distance(const TensorAlgebraElement& a,
                                const TensorAlgebraElement& b);

/// The comultiplication, extended multiplicatively from
///   alpha  -> alpha (x) alpha - mu gamma* (x) gamma
///   alpha* -> alpha* (x) alpha* - mu gamma (x) gamma*
///   gamma  -> gamma (x) alpha + alpha* (x) gamma
///   gamma* -> gamma* (x) alpha* + alpha (x) gamma*
TensorAlgebraElement coproduct(const AlgebraElement& a);

/// Hopf counit: alpha, alpha* -> 1 and gamma, gamma* -> 0.
Complex counit(const AlgebraElement& a);
Complex counit(const Monomial& m);

}  // namespace smu
