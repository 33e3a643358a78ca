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

#include "smu/qalg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "smu/errors.hpp"

namespace smu {

RewriteRules RewriteRules::standard(double mu) {
  // gamma alpha = mu^-1 alpha gamma follows from alpha gamma = mu gamma alpha;
  // the alpha* rules are the *-images of the alpha rules.
  return RewriteRules{
      .gamma_alpha = 1.0 / mu,
      .gamma_star_alpha = 1.0 / mu,
      .gamma_alpha_star = mu,
      .gamma_star_alpha_star = mu,
      .alpha_alpha_star_weight = mu * mu,
      .alpha_star_alpha_weight = 1.0,
  };
}

DeformationParameter::DeformationParameter(double mu)
    : mu_(mu), rules_(RewriteRules::standard(mu)) {
  if (!(mu >= -1.0 && mu <= 1.0) || mu == 0.0) {
    std::ostringstream msg;
    msg << "deformation parameter must lie in [-1, 1] \\ {0}, got " << mu;
    throw std::invalid_argument(msg.str());
  }
}

DeformationParameter DeformationParameter::with_rules(double mu,
                                                      const RewriteRules& rules) {
  DeformationParameter d(mu);
  d.rules_ = rules;
  return d;
}

int Monomial::degree() const {
  return std::abs(alpha_power) + gamma_power + gamma_star_power;
}

std::string Monomial::to_string() const {
  if (is_unit()) return "1";
  std::ostringstream out;
  auto factor = [&out](const char* name, int power) {
    if (power == 0) return;
    if (out.tellp() > 0) out << ' ';
    out << name;
    if (power != 1) out << '^' << power;
  };
  if (alpha_power > 0) factor("a", alpha_power);
  if (alpha_power < 0) factor("a*", -alpha_power);
  factor("g", gamma_power);
  factor("g*", gamma_star_power);
  return out.str();
}

namespace {

void check_same(const DeformationParameter& a, const DeformationParameter& b) {
  if (!(a == b)) {
    std::ostringstream msg;
    msg << "deformation parameter mismatch: " << a.mu() << " vs " << b.mu();
    throw ParameterMismatch(msg.str());
  }
}

void accumulate(TermMap& terms, const Monomial& m, Complex c) {
  if (c == Complex(0.0)) return;
  terms[m] += c;
}

void prune(TermMap& terms) {
  std::erase_if(terms, [](const auto& kv) {
    return std::abs(kv.second) < kDropThreshold;
  });
}

double ipow(double x, int n) {
  double r = 1.0;
  for (int i = 0; i < n; ++i) r *= x;
  return r;
}

// alpha-part product alpha^a alpha^b, returned as the coefficients of
// alpha^(a+b) (gamma* gamma)^k for k = 0, 1, ...
//
// alpha^a alpha*^c = alpha^(a-1) alpha*^(c-1) (1 - w S^(c-1) gamma* gamma)
// alpha*^c alpha^a = alpha*^(c-1) alpha^(a-1) (1 - w R^(a-1) gamma* gamma)
// where S, R are the factors picked up by gamma* gamma moving right past a
// single alpha* respectively alpha.
std::vector<Complex> alpha_block_product(int a, int b, const RewriteRules& r) {
  std::vector<Complex> poly{1.0};
  auto times_linear = [&poly](double x) {
    // poly *= (1 - x t)
    poly.push_back(0.0);
    for (std::size_t k = poly.size() - 1; k > 0; --k) poly[k] -= x * poly[k - 1];
  };
  if (a > 0 && b < 0) {
    const int c = -b;
    const int d = std::min(a, c);
    const double s = r.gamma_alpha_star * r.gamma_star_alpha_star;
    for (int j = 0; j < d; ++j)
      times_linear(r.alpha_alpha_star_weight * ipow(s, c - 1 - j));
  } else if (a < 0 && b > 0) {
    const int c = -a;
    const int d = std::min(c, b);
    const double rr = r.gamma_alpha * r.gamma_star_alpha;
    for (int j = 0; j < d; ++j)
      times_linear(r.alpha_star_alpha_weight * ipow(rr, b - 1 - j));
  }
  return poly;
}

// (alpha^a g^l g*^m)(alpha^b g^p g*^r), accumulated into `out`.
void multiply_monomials(const Monomial& x, const Monomial& y, Complex coeff,
                        const RewriteRules& rules, TermMap& out) {
  const int b = y.alpha_power;
  double f = 1.0;
  if (b > 0) {
    f = ipow(rules.gamma_alpha, x.gamma_power * b) *
        ipow(rules.gamma_star_alpha, x.gamma_star_power * b);
  } else if (b < 0) {
    f = ipow(rules.gamma_alpha_star, x.gamma_power * -b) *
        ipow(rules.gamma_star_alpha_star, x.gamma_star_power * -b);
  }
  const auto poly = alpha_block_product(x.alpha_power, b, rules);
  const int s = x.alpha_power + b;
  for (std::size_t k = 0; k < poly.size(); ++k) {
    const int kk = static_cast<int>(k);
    accumulate(out,
               Monomial{s, x.gamma_power + y.gamma_power + kk,
                        x.gamma_star_power + y.gamma_star_power + kk},
               coeff * f * poly[k]);
  }
}

}  // namespace

AlgebraElement::AlgebraElement(const DeformationParameter& deformation)
    : deformation_(deformation) {}

AlgebraElement::AlgebraElement(const DeformationParameter& deformation,
                               TermMap terms)
    : deformation_(deformation), terms_(std::move(terms)) {
  prune(terms_);
}

AlgebraElement AlgebraElement::scalar(const DeformationParameter& deformation,
                                      Complex value) {
  TermMap t;
  accumulate(t, Monomial{}, value);
  return AlgebraElement(deformation, std::move(t));
}

AlgebraElement AlgebraElement::generator(const DeformationParameter& deformation,
                                         Generator g) {
  switch (g) {
    case Generator::Alpha:
      return monomial(deformation, Monomial{1, 0, 0});
    case Generator::AlphaStar:
      return monomial(deformation, Monomial{-1, 0, 0});
    case Generator::Gamma:
      return monomial(deformation, Monomial{0, 1, 0});
    case Generator::GammaStar:
      return monomial(deformation, Monomial{0, 0, 1});
  }
  throw std::invalid_argument("unknown generator");
}

AlgebraElement AlgebraElement::monomial(const DeformationParameter& deformation,
                                        const Monomial& m, Complex coefficient) {
  TermMap t;
  accumulate(t, m, coefficient);
  return from_terms(deformation, std::move(t));
}

AlgebraElement AlgebraElement::from_terms(const DeformationParameter& deformation,
                                          TermMap terms) {
  for (const auto& [m, c] : terms) {
    if (m.gamma_power < 0 || m.gamma_star_power < 0)
      throw std::invalid_argument("gamma powers must be non-negative");
  }
  return AlgebraElement(deformation, std::move(terms));
}

Complex AlgebraElement::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Complex(0.0) : it->second;
}

int AlgebraElement::degree() const {
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
  return d;
}

std::string AlgebraElement::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) out << " + ";
    first = false;
    out << '(' << c.real();
    if (c.imag() != 0.0) out << (c.imag() < 0 ? "-" : "+") << std::abs(c.imag()) << 'i';
    out << ')';
    if (!m.is_unit()) out << ' ' << m.to_string();
  }
  return out.str();
}

AlgebraElement AlgebraElement::operator+(const AlgebraElement& other) const {
  check_same(deformation_, other.deformation_);
  TermMap t = terms_;
  for (const auto& [m, c] : other.terms_) accumulate(t, m, c);
  return AlgebraElement(deformation_, std::move(t));
}

AlgebraElement AlgebraElement::operator-(const AlgebraElement& other) const {
  return *this + (-other);
}

AlgebraElement AlgebraElement::operator-() const { return *this * Complex(-1.0); }

AlgebraElement AlgebraElement::operator*(Complex s) const {
  TermMap t;
  for (const auto& [m, c] : terms_) accumulate(t, m, c * s);
  return AlgebraElement(deformation_, std::move(t));
}

AlgebraElement AlgebraElement::operator*(const AlgebraElement& other) const {
  return multiply(*this, other);
}

bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
  return a.deformation_ == b.deformation_ && a.terms_ == b.terms_;
}

AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b) {
  check_same(a.deformation(), b.deformation());
  const auto& rules = a.deformation().rules();
  TermMap out;
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms())
      multiply_monomials(ma, mb, ca * cb, rules, out);
  return AlgebraElement::from_terms(a.deformation(), std::move(out));
}

AlgebraElement adjoint(const AlgebraElement& a) {
  // (alpha^k g^l g*^m)* = g^m g*^l alpha^-k, then normal-order
  const auto& rules = a.deformation().rules();
  TermMap out;
  for (const auto& [m, c] : a.terms()) {
    multiply_monomials(Monomial{0, m.gamma_star_power, m.gamma_power},
                       Monomial{-m.alpha_power, 0, 0}, std::conj(c), rules, out);
  }
  return AlgebraElement::from_terms(a.deformation(), std::move(out));
}

double max_coefficient_distance(const AlgebraElement& a,
                                const AlgebraElement& b) {
  check_same(a.deformation(), b.deformation());
  TermMap diff = a.terms();
  for (const auto& [m, c] : b.terms()) diff[m] -= c;
  double worst = 0.0;
  for (const auto& [m, c] : diff) worst = std::max(worst, std::abs(c));
  return worst;
}

double relative_coefficient_distance(const AlgebraElement& a,
                                     const AlgebraElement& b) {
  double scale = 1.0;
  for (const auto& [m, c] : a.terms()) scale = std::max(scale, std::abs(c));
  for (const auto& [m, c] : b.terms()) scale = std::max(scale, std::abs(c));
  return max_coefficient_distance(a, b) / scale;
}

// ---------------------------------------------------------------------------
// A (x) A

TensorAlgebraElement::TensorAlgebraElement(const DeformationParameter& deformation)
    : deformation_(deformation) {}

TensorAlgebraElement::TensorAlgebraElement(const DeformationParameter& deformation,
                                           TensorTermMap terms)
    : deformation_(deformation), terms_(std::move(terms)) {
  std::erase_if(terms_, [](const auto& kv) {
    return std::abs(kv.second) < kDropThreshold;
  });
}

TensorAlgebraElement TensorAlgebraElement::from_terms(
    const DeformationParameter& deformation, TensorTermMap terms) {
  return TensorAlgebraElement(deformation, std::move(terms));
}

TensorAlgebraElement TensorAlgebraElement::pure(const AlgebraElement& left,
                                                const AlgebraElement& right) {
  check_same(left.deformation(), right.deformation());
  TensorTermMap t;
  for (const auto& [ml, cl] : left.terms())
    for (const auto& [mr, cr] : right.terms()) t[{ml, mr}] += cl * cr;
  return TensorAlgebraElement(left.deformation(), std::move(t));
}

TensorAlgebraElement TensorAlgebraElement::operator+(
    const TensorAlgebraElement& other) const {
  check_same(deformation_, other.deformation_);
  TensorTermMap t = terms_;
  for (const auto& [k, c] : other.terms_) t[k] += c;
  return TensorAlgebraElement(deformation_, std::move(t));
}

TensorAlgebraElement TensorAlgebraElement::operator-(
    const TensorAlgebraElement& other) const {
  return *this + other * Complex(-1.0);
}

TensorAlgebraElement TensorAlgebraElement::operator*(Complex s) const {
  TensorTermMap t;
  for (const auto& [k, c] : terms_) t[k] = c * s;
  return TensorAlgebraElement(deformation_, std::move(t));
}

TensorAlgebraElement TensorAlgebraElement::operator*(
    const TensorAlgebraElement& other) const {
  check_same(deformation_, other.deformation_);
  const auto& rules = deformation_.rules();
  TensorTermMap out;
  TermMap left, right;
  for (const auto& [ka, ca] : terms_) {
    for (const auto& [kb, cb] : other.terms_) {
      left.clear();
      right.clear();
      multiply_monomials(ka.first, kb.first, 1.0, rules, left);
      multiply_monomials(ka.second, kb.second, 1.0, rules, right);
      for (const auto& [ml, cl] : left)
        for (const auto& [mr, cr] : right) out[{ml, mr}] += ca * cb * cl * cr;
    }
  }
  return TensorAlgebraElement(deformation_, std::move(out));
}

double max_coefficient_distance(const TensorAlgebraElement& a,
                                const TensorAlgebraElement& b) {
  check_same(a.deformation(), b.deformation());
  TensorTermMap diff = a.terms();
  for (const auto& [k, c] : b.terms()) diff[k] -= c;
  double worst = 0.0;
  for (const auto& [k, c] : diff) worst = std::max(worst, std::abs(c));
  return worst;
}

namespace {

TensorAlgebraElement generator_coproduct(const DeformationParameter& d,
                                         Generator g) {
  const double mu = d.mu();
  auto gen = [&d](Generator x) { return AlgebraElement::generator(d, x); };
  using G = Generator;
  switch (g) {
    case G::Alpha:
      return TensorAlgebraElement::pure(gen(G::Alpha), gen(G::Alpha)) -
             TensorAlgebraElement::pure(gen(G::GammaStar), gen(G::Gamma)) * mu;
    case G::AlphaStar:
      return TensorAlgebraElement::pure(gen(G::AlphaStar), gen(G::AlphaStar)) -
             TensorAlgebraElement::pure(gen(G::Gamma), gen(G::GammaStar)) * mu;
    case G::Gamma:
      return TensorAlgebraElement::pure(gen(G::Gamma), gen(G::Alpha)) +
             TensorAlgebraElement::pure(gen(G::AlphaStar), gen(G::Gamma));
    case G::GammaStar:
      return TensorAlgebraElement::pure(gen(G::GammaStar), gen(G::AlphaStar)) +
             TensorAlgebraElement::pure(gen(G::Alpha), gen(G::GammaStar));
  }
  throw std::invalid_argument("unknown generator");
}

}  // namespace

TensorAlgebraElement coproduct(const AlgebraElement& a) {
  const auto& d = a.deformation();
  const auto one = TensorAlgebraElement::pure(AlgebraElement::scalar(d, 1.0),
                                              AlgebraElement::scalar(d, 1.0));
  const auto phi_alpha = generator_coproduct(d, Generator::Alpha);
  const auto phi_alpha_star = generator_coproduct(d, Generator::AlphaStar);
  const auto phi_gamma = generator_coproduct(d, Generator::Gamma);
  const auto phi_gamma_star = generator_coproduct(d, Generator::GammaStar);

  TensorAlgebraElement result(d);
  for (const auto& [m, c] : a.terms()) {
    TensorAlgebraElement image = one;
    const auto& alpha_image = m.alpha_power >= 0 ? phi_alpha : phi_alpha_star;
    for (int i = 0; i < std::abs(m.alpha_power); ++i) image = image * alpha_image;
    for (int i = 0; i < m.gamma_power; ++i) image = image * phi_gamma;
    for (int i = 0; i < m.gamma_star_power; ++i) image = image * phi_gamma_star;
    result = result + image * c;
  }
  return result;
}

Complex counit(const Monomial& m) {
  return (m.gamma_power == 0 && m.gamma_star_power == 0) ? 1.0 : 0.0;
}

Complex counit(const AlgebraElement& a) {
  Complex sum = 0.0;
  for (const auto& [m, c] : a.terms()) sum += c * counit(m);
  return sum;
}

}  // namespace smu
