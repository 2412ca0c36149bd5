// Copyright 2026 The ri-thermalizer Authors
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

// ri_thermalizer: parameter sweeps, oracle cross-checks and spectra for the
// repeated-interaction thermalization engine.

#include <cstdint>
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "ri/spectral.hpp"
#include "ri/sweep.hpp"
#include "ri/validation.hpp"

namespace {

constexpr int kExitFailure = 1;
constexpr int kExitConfigInvalid = 2;
constexpr int kExitIoError = 3;

int exit_code_for(const ri::Error& e) {
  switch (e.code()) {
    case ri::ErrorCode::ConfigInvalid: return kExitConfigInvalid;
    case ri::ErrorCode::IoError: return kExitIoError;
    default: return kExitFailure;
  }
}

struct SweepOptions {
  std::string config;
  std::string out;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> engine;
  unsigned parallel = 1;
};

int run_sweep_command(const SweepOptions& opt) {
  ri::SweepSpec spec = ri::load_config(opt.config);
  if (opt.seed) spec.seed = *opt.seed;
  if (opt.engine) {
    const auto engine = ri::parse_engine(*opt.engine);
    if (!engine) {
      throw ri::Error(ri::ErrorCode::ConfigInvalid, "unknown engine '" + *opt.engine + "'");
    }
    spec.engine = *engine;
    ri::validate(spec);
  }
  const auto records = ri::run_sweep(spec, ri::resolve_thread_count(opt.parallel));
  if (opt.out.empty() || opt.out == "-") {
    ri::emit_csv(records, std::cout);
  } else {
    ri::emit_csv(records, opt.out);
  }
  return 0;
}

int run_validate_command(std::uint64_t seed) {
  bool all = true;
  for (const ri::CheckResult& r : ri::run_validation_suite(seed)) {
    std::printf("%-4s %-45s measured=%.3e tolerance=%.1e\n", r.passed ? "PASS" : "FAIL",
                r.name.c_str(), r.measured, r.tolerance);
    all = all && r.passed;
  }
  return all ? 0 : kExitFailure;
}

int run_spectra_command(int d, double p_ancilla, double rate) {
  const ri::RealVector xi = ri::xi_closed(d, p_ancilla, rate);
  const ri::RealVector xi_num = ri::tridiagonal_spectrum(ri::stochastic_matrix(d, p_ancilla, rate));
  const ri::RealVector lam = ri::lambda_closed(d, p_ancilla, rate);
  const ri::RealVector lam_num =
      ri::tridiagonal_spectrum(ri::liouvillian_matrix(d, p_ancilla, rate));
  std::printf("# d=%d pA=%.12g jtau=gamma=%.12g\n", d, p_ancilla, rate);
  std::printf("m,xi_closed,xi_numeric,lambda_closed,lambda_numeric\n");
  for (int m = 0; m < d; ++m) {
    std::printf("%d,%.15g,%.15g,%.15g,%.15g\n", m + 1, xi(m), xi_num(m), lam(m), lam_num(m));
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Repeated-interaction thermalization: sweeps, validation and spectra"};
  app.require_subcommand(1);

  SweepOptions sweep_opt;
  auto* sweep = app.add_subcommand("sweep", "Run a parameter sweep and emit CSV");
  sweep->add_option("config", sweep_opt.config, "Sweep configuration file")->required();
  sweep->add_option("--out", sweep_opt.out, "Output CSV path (default: stdout)");
  sweep->add_option("--seed", sweep_opt.seed, "Master seed override");
  sweep->add_option("--engine", sweep_opt.engine, "brute_force | recursion | ode_sl");
  sweep->add_option("--parallel", sweep_opt.parallel,
                    "Worker threads (0 = hardware; RI_THERMALIZER_THREADS overrides)");

  std::uint64_t validate_seed = 0;
  auto* validate = app.add_subcommand("validate", "Run the oracle cross-check suite");
  validate->add_option("--seed", validate_seed, "Seed for random test inputs");

  int spectra_d = 3;
  double spectra_p = 1.0;
  double spectra_rate = 1.0;
  auto* spectra = app.add_subcommand(
      "spectra", "Closed-form vs numeric eigenvalues of the population map and generator");
  spectra->add_option("d", spectra_d, "Number of levels")->required()->check(CLI::Range(2, 64));
  spectra->add_option("pA", spectra_p, "Ancilla ground population")
      ->required()
      ->check(CLI::Range(0.0, 1.0));
  spectra->add_option("rate", spectra_rate, "J tau for the map, Gamma for the generator")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfigInvalid;
  }

  try {
    if (*sweep) return run_sweep_command(sweep_opt);
    if (*validate) return run_validate_command(validate_seed);
    if (*spectra) return run_spectra_command(spectra_d, spectra_p, spectra_rate);
  } catch (const ri::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitFailure;
}
