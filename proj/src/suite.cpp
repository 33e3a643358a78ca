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

#include "smu/suite.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>
#include <set>

#include "smu/channel.hpp"
#include "smu/corep.hpp"
#include "smu/dynamics.hpp"
#include "smu/qalg.hpp"
#include "smu/qspin.hpp"

namespace smu {

namespace {

constexpr double kAlgebraTolerance = 1e-12;
constexpr double kSubspaceTolerance = 1e-10;
constexpr double kDynamicsTolerance = 1e-9;
constexpr double kControlThreshold = 1e-3;

using Gen = Generator;

AlgebraElement gen(const DeformationParameter& d, Gen g) { return AlgebraElement::generator(d, g); }

AlgebraElement random_element(const DeformationParameter& d, std::mt19937_64& rng) {
  static constexpr Gen kGens[] = {Gen::Alpha, Gen::AlphaStar, Gen::Gamma, Gen::GammaStar};
  std::uniform_int_distribution<int> len(0, 3);
  std::uniform_int_distribution<int> pick(0, 3);
  std::normal_distribution<double> c(0.0, 1.0);
  AlgebraElement sum(d);
  for (int w = 0; w < 3; ++w) {
    AlgebraElement word = AlgebraElement::scalar(d, Complex(c(rng), c(rng)));
    for (int i = len(rng); i > 0; --i) word = word * gen(d, kGens[pick(rng)]);
    sum = sum + word;
  }
  return sum;
}

/// Singlet count of n spin-1/2 factors at the undeformed point.
std::size_t classical_singlets(int n) {
  std::vector<std::size_t> mult{1};  // index: twice the total spin
  for (int k = 0; k < n; ++k) {
    std::vector<std::size_t> next(mult.size() + 1, 0);
    for (std::size_t j = 0; j < mult.size(); ++j) {
      if (!mult[j]) continue;
      next[j + 1] += mult[j];
      if (j > 0) next[j - 1] += mult[j];
    }
    mult = next;
  }
  return mult[0];
}

class Runner {
 public:
  Runner(const RunConfig& config, SuiteReport& report)
      : config_(config), report_(report), rng_(config.seed) {}

  void run_all() {
    for (double mu : config_.check_mu_grid) {
      qalg(mu);
      corep(mu);
      qspin(mu);
      dynamics(mu);
      channel(mu);
    }
  }

 private:
  // Evaluates `f` and records the property; exceptions count as failures.
  void record(const std::string& module, const std::string& property, double mu, double tol,
              const std::function<double()>& f, bool negative_control = false) {
    PropertyResult r{module, property, mu, 0.0, tol, negative_control ? ">" : "<=", false, ""};
    try {
      r.value = f();
      r.passed = negative_control ? r.value > tol : r.value <= tol;
    } catch (const std::exception& e) {
      r.value = std::nan("");
      r.detail = e.what();
    }
    report_.results.push_back(std::move(r));
  }

  void qalg(double mu) {
    DeformationParameter d(mu);
    if (config_.inject_fault == "qalg") {
      auto rules = RewriteRules::standard(mu);
      rules.gamma_alpha = mu;
      d = DeformationParameter::with_rules(mu, rules);
    }
    record("qalg", "relations", mu, kAlgebraTolerance, [&] {
      const auto a = gen(d, Gen::Alpha), as = gen(d, Gen::AlphaStar);
      const auto g = gen(d, Gen::Gamma), gs = gen(d, Gen::GammaStar);
      const auto one = AlgebraElement::scalar(d, 1.0);
      const AlgebraElement zero(d);
      return std::max({max_coefficient_distance(a * as + gs * g * (mu * mu), one),
                       max_coefficient_distance(as * a + gs * g, one),
                       max_coefficient_distance(gs * g, g * gs),
                       max_coefficient_distance(a * g, g * a * mu),
                       max_coefficient_distance(a * gs, gs * a * mu),
                       max_coefficient_distance(g * as, as * g * mu),
                       max_coefficient_distance(gs * as, as * gs * mu)});
    });
    record("qalg", "associativity", mu, kAlgebraTolerance, [&] {
      double worst = 0.0;
      for (int trial = 0; trial < 10; ++trial) {
        const auto x = random_element(d, rng_), y = random_element(d, rng_),
                   z = random_element(d, rng_);
        worst = std::max(worst, relative_coefficient_distance((x * y) * z, x * (y * z)));
      }
      return worst;
    });
    record("qalg", "coproduct_homomorphism", mu, kAlgebraTolerance, [&] {
      double worst = 0.0;
      for (Gen x : {Gen::Alpha, Gen::AlphaStar, Gen::Gamma, Gen::GammaStar})
        for (Gen y : {Gen::Alpha, Gen::AlphaStar, Gen::Gamma, Gen::GammaStar})
          worst = std::max(worst, max_coefficient_distance(coproduct(gen(d, x) * gen(d, y)),
                                                           coproduct(gen(d, x)) *
                                                               coproduct(gen(d, y))));
      return worst;
    });
  }

  void corep(double mu) {
    const DeformationParameter d(mu);
    record("corep", "axiom", mu, kAlgebraTolerance, [&] {
      const auto u = fundamental(d);
      return std::max(check_axiom(u).residual, check_axiom(tensor_product(u, u)).residual);
    });
    record("corep", "unitarity", mu, kAlgebraTolerance,
           [&] { return unitarity_residual(fundamental(d)); });
    record("corep", "singlet", mu, kSubspaceTolerance, [&] {
      const auto basis = invariant_subspace(register_corep(d, 2));
      if (basis.dimension() != 1) return 1.0;
      Vector s = Vector::Zero(4);
      s(1) = 1.0;
      s(2) = -mu;
      s /= std::sqrt(1.0 + mu * mu);
      const Complex overlap = s.dot(basis.vectors.col(0));
      const Vector aligned = s * (overlap / std::abs(overlap));
      return (basis.vectors.col(0) - aligned).cwiseAbs().maxCoeff();
    });
    record("corep", "multiplicity", mu, 0.0, [&] {
      double worst = 0.0;
      for (int n : {2, 3, 4}) {
        const auto dim = invariant_subspace(register_corep(d, n)).dimension();
        worst = std::max(worst, std::abs(static_cast<double>(dim) -
                                         static_cast<double>(classical_singlets(n))));
      }
      return worst;
    });
  }

  void qspin(double mu) {
    const DeformationParameter d(mu);
    record("qspin", "enveloping_matches_corep", mu, kKernelAgreementAngle, [&] {
      double worst = 0.0;
      for (int n : {2, 4}) {
        const auto cmp =
            compare_with_corep(build_enveloping(d, n), invariant_subspace(register_corep(d, n)));
        if (!cmp.agree) return 1.0;
        worst = std::max(worst, cmp.max_angle);
      }
      return worst;
    });
    try {
      const auto cmp =
          compare_with_corep(build_recurrence(d, 2), invariant_subspace(register_corep(d, 2)));
      report_.notes.push_back(cmp.summary);
    } catch (const std::exception& e) {
      report_.notes.push_back(std::string("recurrence comparison failed: ") + e.what());
    }
  }

  struct Model {
    SpinOperatorSet spin;
    Bath bath;
    CompositeHamiltonian h;
  };

  Model model(double mu) {
    auto spin = build_enveloping(DeformationParameter(mu), 2);
    auto bath = build_bath({{1.0}, 3});
    auto [t, tp] = linear_couplings(bath, {0.3}, {0.2});
    auto terms = build_interaction(spin, t, tp);
    terms.push_back(bath_term(bath));
    CompositeHamiltonian h(terms, spin, bath.spec);
    return {std::move(spin), std::move(bath), std::move(h)};
  }

  Vector random_state(std::ptrdiff_t dim) {
    std::normal_distribution<double> n(0.0, 1.0);
    Vector v(dim);
    for (auto& x : v) x = Complex(n(rng_), n(rng_));
    return v / v.norm();
  }

  void dynamics(double mu) {
    const auto grid = time_grid(0.0, 10.0, 10);
    record("dynamics", "factorization", mu, kDynamicsTolerance, [&] {
      auto m = model(mu);
      const auto kernel = joint_kernel(m.spin);
      return verify_factorization(m.h, kernel.vectors.col(0), random_state(m.bath.dim()), grid);
    });
    record(
        "dynamics", "factorization_control", mu, kControlThreshold,
        [&] {
          auto m = model(mu);
          return factorization_deviation(m.h, basis_vector(m.spin.dim(), 0),
                                    random_state(m.bath.dim()), grid);
        },
        /*negative_control=*/true);
    record("dynamics", "invariant_density_fixed", mu, kDynamicsTolerance, [&] {
      auto m = model(mu);
      const Vector psi = joint_kernel(m.spin).vectors.col(0);
      const Vector z = random_state(m.bath.dim());
      double worst = 0.0;
      for (double t : grid)
        worst = std::max(worst, trace_norm(induced_channel(m.h, psi * psi.adjoint(),
                                                            z * z.adjoint(), t) -
                                           psi * psi.adjoint()));
      return worst;
    });
  }

  void channel(double mu) {
    record("channel", "invariant_code_certified", mu, kVerdictTolerance, [&] {
      auto m = model(mu);
      const auto code = joint_kernel(m.spin).vectors;
      const auto kraus =
          kraus_from_unitary(m.h.propagator().unitary(1.0), random_state(m.bath.dim()), 4);
      const auto cert = certify_code(kraus, code);
      if (cert.verdict != CodeVerdict::ErrorAvoiding) return 1.0;
      return std::max({kraus.completeness_residual(), cert.rank_gap,
                       cert.factorization_residual});
    });
  }

  const RunConfig& config_;
  SuiteReport& report_;
  std::mt19937_64 rng_;
};

}  // namespace

bool SuiteReport::passed() const {
  return std::all_of(results.begin(), results.end(), [](const auto& r) { return r.passed; });
}

std::vector<std::string> SuiteReport::failing_modules() const {
  std::set<std::string> out;
  for (const auto& r : results)
    if (!r.passed) out.insert(r.module);
  return {out.begin(), out.end()};
}

std::string SuiteReport::to_json() const {
  nlohmann::ordered_json j;
  j["passed"] = passed();
  j["injected_fault"] =
      injected_fault.empty() ? nlohmann::ordered_json() : nlohmann::ordered_json(injected_fault);
  j["failing_modules"] = failing_modules();
  std::set<std::string> failing;
  auto all = nlohmann::ordered_json::array();
  for (const auto& r : results) {
    nlohmann::ordered_json e;
    e["module"] = r.module;
    e["property"] = r.property;
    e["mu"] = r.mu;
    e["value"] = std::isnan(r.value) ? nlohmann::ordered_json() : nlohmann::ordered_json(r.value);
    e["comparison"] = r.comparison;
    e["tolerance"] = r.tolerance;
    e["passed"] = r.passed;
    if (!r.detail.empty()) e["detail"] = r.detail;
    if (!r.passed) failing.insert(r.module + "." + r.property);
    all.push_back(std::move(e));
  }
  j["failing_properties"] = failing;
  j["notes"] = notes;
  j["properties"] = all;
  return j.dump(2);
}

SuiteReport run_property_suite(const RunConfig& config) {
  SuiteReport report;
  report.injected_fault = config.inject_fault;
  Runner(config, report).run_all();
  return report;
}

}  // namespace smu
