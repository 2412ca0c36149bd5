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

#include "ri/validation.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "ri/collision.hpp"
#include "ri/lambert.hpp"
#include "ri/sim_time.hpp"
#include "ri/sl_ode.hpp"
#include "ri/spectral.hpp"

namespace ri {
namespace {

CheckResult check(std::string name, double measured, double tolerance) {
  return {std::move(name), measured <= tolerance, measured, tolerance};
}

double eigen_reconstruction(std::mt19937_64& rng) {
  std::normal_distribution<double> normal;
  ComplexMatrix g(12, 12);
  for (Eigen::Index i = 0; i < g.rows(); ++i) {
    for (Eigen::Index j = 0; j < g.cols(); ++j) g(i, j) = Complex(normal(rng), normal(rng));
  }
  const ComplexMatrix h = g + g.adjoint();
  const auto eig = hermitian_eigen(h);
  const ComplexMatrix rebuilt =
      eig.basis * eig.eigenvalues.cast<Complex>().asDiagonal() * eig.basis.adjoint();
  return (rebuilt - h).cwiseAbs().maxCoeff() / h.cwiseAbs().maxCoeff();
}

double recursion_vs_unitary(int d, std::mt19937_64& rng) {
  ModelSpec model;
  model.system = {d, 1.0};
  model.ancilla = {1.0, 0.8};
  model.interaction = IsotropicFlipFlop{0.9};
  CollisionConfig cfg;
  cfg.tau = 0.7;
  cfg.n_max = 50;
  const DensityMatrix rho0 = random_density_matrix(d, rng);
  const TrajectoryRecord exact = evolve(rho0, model, cfg, 30);
  const RecursiveTrajectory fast = evolve_recursive(rho0, model, cfg, 30);
  double worst = 0.0;
  for (std::size_t k = 0; k < exact.states.size(); ++k) {
    worst = std::max(worst,
                     (exact.states[k].diagonal().real() - fast.populations[k]).cwiseAbs().maxCoeff());
    if (d == 3) {
      const CoherencesD3 c = coherences_of(exact.states[k]);
      worst = std::max({worst, std::abs(c.c12 - fast.coherences[k].c12),
                        std::abs(c.c13 - fast.coherences[k].c13),
                        std::abs(c.c23 - fast.coherences[k].c23)});
    }
  }
  return worst;
}

double spectra_closed_vs_numeric(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> p_draw(0.5, 1.0);
  std::uniform_real_distribution<double> angle(0.05, 3.0);
  double worst = 0.0;
  for (int d = 2; d <= 10; ++d) {
    const double p = p_draw(rng);
    const double x = angle(rng);
    worst = std::max(worst, (tridiagonal_spectrum(stochastic_matrix(d, p, x)) -
                             xi_closed(d, p, x)).cwiseAbs().maxCoeff());
    worst = std::max(worst, (tridiagonal_spectrum(liouvillian_matrix(d, p, x)) -
                             lambda_closed(d, p, x)).cwiseAbs().maxCoeff());
  }
  return worst;
}

double lambert_residual() {
  double worst = 0.0;
  const double branch = -std::exp(-1.0);
  for (int i = 0; i < 200; ++i) {
    const double z0 = branch + (10.0 - branch) * i / 199.0;
    const double w0 = lambert_w(LambertBranch::Principal, z0);
    worst = std::max(worst, std::abs(w0 * std::exp(w0) - z0) / std::max(1.0, std::abs(z0)));
    const double z1 = branch * (1.0 - i / 200.0);
    const double w1 = lambert_w(LambertBranch::LowerMinusOne, z1);
    worst = std::max(worst, std::abs(w1 * std::exp(w1) - z1) / std::max(1.0, std::abs(z1)));
  }
  return worst;
}

double zero_temperature_closed_forms(std::mt19937_64& rng) {
  const RealVector p0 = random_populations(6, rng);
  RealVector p = p0;
  double worst = 0.0;
  for (long n = 1; n <= 12; ++n) {
    p = apply_population_map(p, 1.0, 0.6);
    worst = std::max(worst, (zero_temp_populations_closed(p0, n, 0.6) - p).cwiseAbs().maxCoeff());
  }
  return worst;
}

double lambert_count_vs_simulation() {
  const RealVector p0 = RealVector::Constant(3, 1.0 / 3.0);
  RealVector target = RealVector::Zero(3);
  target(0) = 1.0;
  double worst = 0.0;
  for (double j_tau : {std::numbers::pi / 8, std::numbers::pi / 4, 3 * std::numbers::pi / 8}) {
    const CollisionEstimate closed = nstar_closed_d3_zeroT(p0, j_tau, 1e-4);
    const ThermalizationResult sim = nstar_simulated_populations(p0, 1.0, j_tau, target, 1e-4,
                                                                 100000);
    worst = std::max(worst, std::abs(static_cast<double>(closed.ceiled - *sim.n_star)));
  }
  return worst;
}

double lambert_time_vs_ode() {
  const RealVector p0 = RealVector::Constant(3, 1.0 / 3.0);
  RealVector target = RealVector::Zero(3);
  target(0) = 1.0;
  const double closed = tsim_closed_sl_zeroT(p0, 1.0, 1e-4);
  const ThermalizationResult sim = tsim_simulated_sl(p0, 1.0, 1.0, target, 1e-4, 100.0);
  return std::abs(closed - sim.t_sim);
}

}  // namespace

std::vector<CheckResult> run_validation_suite(std::uint64_t seed) {
  auto rng = make_generator(seed, 0x76616c6964ULL);
  std::vector<CheckResult> out;
  out.push_back(check("jacobi reconstruction (12x12, relative)", eigen_reconstruction(rng), 1e-10));
  for (int d : {2, 3, 5}) {
    out.push_back(check("recursion vs joint unitary, d=" + std::to_string(d),
                        recursion_vs_unitary(d, rng), 1e-12));
  }
  out.push_back(check("closed-form spectra vs Sturm bisection", spectra_closed_vs_numeric(rng),
                      1e-10));
  out.push_back(check("Lambert W residual", lambert_residual(), 1e-12));
  out.push_back(check("zero-temperature cascade vs iteration", zero_temperature_closed_forms(rng),
                      1e-12));
  out.push_back(check("Lambert collision count vs simulation", lambert_count_vs_simulation(), 1.0));
  out.push_back(check("Lambert SL time vs ODE crossing", lambert_time_vs_ode(), 1e-6));
  return out;
}

}  // namespace ri
