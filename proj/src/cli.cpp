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

#include "smu/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>

#include "smu/channel.hpp"
#include "smu/corep.hpp"
#include "smu/csv.hpp"
#include "smu/dynamics.hpp"
#include "smu/errors.hpp"
#include "smu/qspin.hpp"
#include "smu/suite.hpp"

namespace smu {

namespace {

SpinOperatorSet make_spin(const RunConfig& c, double mu) {
  const DeformationParameter d(mu);
  if (c.strategy == SpinStrategy::Enveloping) return build_enveloping(d, c.qubits);
  return c.base_case ? build_recurrence(d, c.qubits, *c.base_case) : build_recurrence(d, c.qubits);
}

struct Model {
  SpinOperatorSet spin;
  Bath bath;
  CompositeHamiltonian h;
};

Model make_model(const RunConfig& c, double mu) {
  auto spin = make_spin(c, mu);
  auto bath = build_bath(c.bath);
  auto [t, tp] = linear_couplings(bath, c.g, c.h);
  auto terms = build_interaction(spin, t, tp);
  terms.push_back(bath_term(bath));
  CompositeHamiltonian h(terms, spin, bath.spec);
  return {std::move(spin), std::move(bath), std::move(h)};
}

Vector initial_bath_state(const RunConfig& c, std::ptrdiff_t dim, std::mt19937_64& rng) {
  if (c.bath_state == "vacuum") return basis_vector(dim, 0);
  std::normal_distribution<double> n(0.0, 1.0);
  Vector v(dim);
  for (auto& x : v) x = Complex(n(rng), n(rng));
  return v / v.norm();
}

Vector invariant_state(const SpinOperatorSet& spin) {
  const auto kernel = joint_kernel(spin);
  if (kernel.dimension() == 0)
    throw ConfigError("qubits=" + std::to_string(spin.qubits()) + " has no invariant state");
  return kernel.vectors.col(0);
}

}  // namespace

int cmd_invariants(const RunConfig& c, std::ostream& csv, std::ostream& log) {
  if (c.qubits > kKernelQubitBudget)
    throw ResourceLimit("qubits=" + std::to_string(c.qubits) + " exceeds the kernel budget of " +
                        std::to_string(kKernelQubitBudget));
  write_comment_header(csv, c.resolved());
  csv << kInvariantBasisCsvHeader << '\n';
  bool all_agree = true;
  for (double mu : c.mu) {
    const auto spin = make_spin(c, mu);
    if (c.qubits <= kDefaultRegisterBudget) {
      const auto basis = invariant_subspace(register_corep(DeformationParameter(mu), c.qubits));
      write_invariant_basis_rows(csv, mu, basis);
      const auto cmp = compare_with_corep(spin, basis);
      all_agree = all_agree && cmp.agree;
      log << "mu=" << format_double(mu) << " dimension=" << basis.dimension()
          << " method=corep; " << cmp.summary << '\n';
    } else {
      const auto basis = joint_kernel(spin);
      write_invariant_basis_rows(csv, mu, basis);
      log << "mu=" << format_double(mu) << " dimension=" << basis.dimension() << " method="
          << to_string(c.strategy) << "-kernel; corep skipped (qubits > "
          << kDefaultRegisterBudget << ")\n";
    }
  }
  return all_agree ? kExitOk : kExitFailure;
}

int cmd_evolve(const RunConfig& c, std::ostream& csv, std::ostream& log) {
  std::mt19937_64 rng(c.seed);
  const auto grid = time_grid(c.times.start, c.times.stop, c.times.steps);
  write_comment_header(csv, c.resolved());
  csv << kEvolveCsvHeader << '\n';
  double worst_invariant = 0.0;
  for (double mu : c.mu) {
    const auto m = make_model(c, mu);
    const auto ds = m.h.dim_system(), db = m.h.dim_bath();
    const Vector zeta = initial_bath_state(c, db, rng);
    const std::pair<const char*, Vector> states[] = {{"invariant", invariant_state(m.spin)},
                                                     {"control", basis_vector(ds, 0)}};
    for (const auto& [label, psi] : states) {
      const Matrix target = psi * psi.adjoint();
      const Vector joint = kron(psi, zeta);
      for (double t : grid) {
        const Vector state = evolve(m.h, joint, t);
        const Matrix rho = partial_trace_bath(state * state.adjoint(), ds, db);
        const double fidelity = psi.dot(rho * psi).real();
        const double distance = trace_norm(rho - target);
        const double deviation = factorization_deviation(m.h, psi, zeta, {t});
        const double purity = (rho * rho).trace().real();
        if (std::string_view(label) == "invariant")
          worst_invariant = std::max(worst_invariant, deviation);
        csv << format_double(mu) << ',' << label << ',' << format_double(t) << ','
            << format_double(fidelity) << ',' << format_double(distance) << ','
            << format_double(deviation) << ',' << format_double(purity) << '\n';
      }
    }
  }
  log << "max invariant-state deviation " << format_double(worst_invariant) << '\n';
  return worst_invariant <= kKernelMembershipTolerance ? kExitOk : kExitFailure;
}

int cmd_kraus(const RunConfig& c, std::ostream& csv, std::ostream& log) {
  std::mt19937_64 rng(c.seed);
  write_comment_header(csv, c.resolved());
  const std::ptrdiff_t db = c.bath.dim();
  csv << "mu,t,rank_gap,off_block_residual,factorization_residual,completeness_residual,verdict";
  for (std::ptrdiff_t a = 0; a < db; ++a) csv << ",gamma_abs_" << a;
  csv << '\n';
  bool all_avoiding = true;
  for (double mu : c.mu) {
    const auto m = make_model(c, mu);
    const Vector zeta = initial_bath_state(c, db, rng);
    const Matrix code =
        c.code == "invariant" ? joint_kernel(m.spin).vectors : Matrix(basis_vector(m.spin.dim(), 0));
    if (code.cols() == 0)
      throw ConfigError("qubits=" + std::to_string(c.qubits) + " has no invariant code");
    const auto kraus = kraus_from_unitary(m.h.propagator().unitary(c.time), zeta, m.spin.dim());
    csv << format_double(mu) << ',' << format_double(c.time) << ',';
    try {
      const auto cert = certify_code(kraus, code);
      csv << format_double(cert.rank_gap) << ',' << format_double(cert.off_block_residual) << ','
          << format_double(cert.factorization_residual) << ','
          << format_double(kraus.completeness_residual()) << ',' << to_string(cert.verdict);
      for (const auto& g : cert.eigenvalues) csv << ',' << format_double(std::abs(g));
      all_avoiding = all_avoiding && cert.verdict == CodeVerdict::ErrorAvoiding;
      log << "mu=" << format_double(mu) << " verdict=" << to_string(cert.verdict) << '\n';
    } catch (const CodeConditionError& e) {
      csv << "nan,nan,nan," << format_double(kraus.completeness_residual()) << ','
          << to_string(CodeVerdict::NotCertified);
      for (std::ptrdiff_t a = 0; a < db; ++a) csv << ",nan";
      all_avoiding = false;
      log << "mu=" << format_double(mu) << " verdict=not-certified (" << e.what() << ")\n";
    }
    csv << '\n';
  }
  return all_avoiding ? kExitOk : kExitFailure;
}

int cmd_check(const RunConfig& c, std::ostream& out, std::ostream& log) {
  const auto report = run_property_suite(c);
  out << report.to_json() << '\n';
  for (const auto& module : report.failing_modules()) log << "check failed in module " << module << '\n';
  return report.passed() ? kExitOk : kExitFailure;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Invariant subspaces and error-avoiding codes for S_muU(2) symmetric baths",
               "smucodes"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string config_path, mu, strategy, out_path;
  std::optional<int> qubits;
  std::optional<double> time;
  std::optional<long long> seed;
  app.add_option("--config", config_path, "key = value configuration file");
  app.add_option("--mu", mu, "deformation parameter, or a comma separated list");
  app.add_option("--qubits", qubits, "register size");
  app.add_option("--strategy", strategy, "recurrence or enveloping");
  app.add_option("--time", time, "evaluation time for kraus");
  app.add_option("--out", out_path, "output file (default: standard output)");
  app.add_option("--seed", seed, "random seed");
  auto* invariants = app.add_subcommand("invariants", "invariant basis and dimension summary");
  auto* evolve = app.add_subcommand("evolve", "fidelity and trace distance over a time grid");
  auto* kraus = app.add_subcommand("kraus", "Kraus certificate for the chosen code");
  auto* check = app.add_subcommand("check", "run the property suite");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitConfig;
  }

  try {
    Settings settings;
    if (!config_path.empty()) {
      std::ifstream file(config_path);
      if (!file) throw ConfigError("cannot read config file " + config_path);
      settings = parse_settings(file);
    }
    if (!mu.empty()) settings["mu"] = mu;
    if (qubits) settings["qubits"] = std::to_string(*qubits);
    if (!strategy.empty()) settings["strategy"] = strategy;
    if (time) settings["time"] = format_double(*time);
    if (seed) settings["seed"] = std::to_string(*seed);
    if (!out_path.empty()) settings["output"] = out_path;
    const RunConfig config = resolve_config(settings);

    std::ofstream file;
    if (!config.output.empty()) {
      file.open(config.output);
      if (!file) throw ConfigError("cannot write " + config.output);
    }
    std::ostream& csv = config.output.empty() ? out : file;
    // Keep standard output parseable when it carries the CSV.
    std::ostream& log = config.output.empty() ? err : out;

    if (invariants->parsed()) return cmd_invariants(config, csv, log);
    if (evolve->parsed()) return cmd_evolve(config, csv, log);
    if (kraus->parsed()) return cmd_kraus(config, csv, log);
    if (check->parsed()) return cmd_check(config, csv, err);
    return kExitConfig;
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const ResourceLimit& e) {
    err << "budget exceeded: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
}

}  // namespace smu
