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

#include "ri/collision.hpp"

#include <cmath>
#include <string>
#include <utility>

namespace ri {
namespace {

void require(bool ok, ErrorCode code, const std::string& message) {
  if (!ok) throw Error(code, message);
}

// Binomial weight C(n, j) a^j b^(n-j), zero for j > n.
double binomial_weight(long n, long j, double a, double b) {
  if (j < 0 || j > n) return 0.0;
  if (a == 0.0 && j > 0) return 0.0;
  if (b == 0.0 && n - j > 0) return 0.0;
  const double log_c = std::lgamma(static_cast<double>(n) + 1.0) -
                       std::lgamma(static_cast<double>(j) + 1.0) -
                       std::lgamma(static_cast<double>(n - j) + 1.0);
  const double log_a = j > 0 ? static_cast<double>(j) * std::log(a) : 0.0;
  const double log_b = n - j > 0 ? static_cast<double>(n - j) * std::log(b) : 0.0;
  return std::exp(log_c + log_a + log_b);
}

// (a^n - b^n) / (a - b), continuous through a = b.
double divided_power_difference(double a, double b, long n) {
  if (n == 0) return 0.0;
  const double gap = std::abs(a - b);
  if (gap < 1e-12) return static_cast<double>(n) * std::pow(b, static_cast<double>(n - 1));
  if (gap < 1e-4 && n <= 100000) {
    double sum = 0.0;
    for (long k = 0; k < n; ++k) {
      sum += std::pow(a, static_cast<double>(k)) * std::pow(b, static_cast<double>(n - 1 - k));
    }
    return sum;
  }
  return (std::pow(a, static_cast<double>(n)) - std::pow(b, static_cast<double>(n))) / (a - b);
}

double coupling_of(const ModelSpec& model) {
  return std::get<IsotropicFlipFlop>(model.interaction).coupling;
}

}  // namespace

void validate(const CollisionConfig& cfg) {
  require(std::isfinite(cfg.tau) && cfg.tau > 0, ErrorCode::InvalidArgument,
          "collision duration must be positive");
  require(cfg.n_max >= 1, ErrorCode::InvalidArgument, "collision cap must be >= 1");
  require(cfg.epsilon > 0 && cfg.epsilon < 1, ErrorCode::InvalidArgument,
          "epsilon must lie in (0, 1)");
}

CollisionChannel::CollisionChannel(ModelSpec model, double tau)
    : model_(std::move(model)), tau_(tau) {
  validate(model_);
  require(std::isfinite(tau_) && tau_ >= 0, ErrorCode::InvalidArgument,
          "collision duration must be >= 0");
  ancilla_state_ = ancilla_thermal_state(model_.ancilla);
  if (!redraws_per_collision(model_.interaction)) {
    fixed_unitary_ = unitary_from_hamiltonian(total_hamiltonian(model_), tau_);
  }
}

ComplexMatrix CollisionChannel::unitary(std::uint64_t collision_index) const {
  if (!redraws_per_collision(model_.interaction)) return fixed_unitary_;
  return unitary_from_hamiltonian(total_hamiltonian(model_, collision_index), tau_);
}

DensityMatrix CollisionChannel::apply(const DensityMatrix& rho,
                                      std::uint64_t collision_index) const {
  const int d = dimension();
  require(rho.rows() == d && rho.cols() == d, ErrorCode::DimensionMismatch,
          "state dimension " + std::to_string(rho.rows()) + " does not match d = " +
              std::to_string(d));
  const ComplexMatrix u = unitary(collision_index);
  const ComplexMatrix joint = u * kron(rho, ancilla_state_) * u.adjoint();
  const DensityMatrix reduced = partial_trace_second(joint, d, 2);
  return (reduced + reduced.adjoint()) / 2.0;
}

DensityMatrix collide_once(const DensityMatrix& rho, const ModelSpec& model,
                           const CollisionConfig& cfg) {
  validate(cfg);
  return CollisionChannel(model, cfg.tau).apply(rho, 0);
}

TrajectoryRecord evolve(const DensityMatrix& rho0, const ModelSpec& model,
                        const CollisionConfig& cfg, long n) {
  validate(cfg);
  require(n >= 0, ErrorCode::InvalidArgument, "collision count must be >= 0");
  require(n <= cfg.n_max, ErrorCode::CapExceeded,
          std::to_string(n) + " collisions requested, cap is " + std::to_string(cfg.n_max));
  const CollisionChannel channel(model, cfg.tau);
  const DensityMatrix target = target_state(model);
  TrajectoryRecord record;
  record.states.reserve(static_cast<std::size_t>(n) + 1);
  record.distances.reserve(static_cast<std::size_t>(n) + 1);
  record.states.push_back(rho0);
  record.distances.push_back(trace_distance(rho0, target));
  for (long k = 0; k < n; ++k) {
    record.states.push_back(channel.apply(record.states.back(), static_cast<std::uint64_t>(k)));
    record.distances.push_back(trace_distance(record.states.back(), target));
  }
  return record;
}

MixingFactors mixing_factors(double j_tau) {
  const double c = std::cos(j_tau);
  const double s = std::sin(j_tau);
  return {std::cos(2.0 * j_tau), c * c, s * s, c};
}

EtaCoefficients eta_coefficients(double p_ancilla, double j_tau) {
  const MixingFactors f = mixing_factors(j_tau);
  EtaCoefficients eta;
  eta.eta11 = 1.0 - (1.0 - p_ancilla) * f.lambda_down;
  eta.eta12 = p_ancilla * f.lambda_down;
  eta.eta21 = (1.0 - p_ancilla) * f.lambda_down;
  eta.eta22 = f.lambda_up;
  eta.eta33 = 1.0 - p_ancilla * f.lambda_down;
  return eta;
}

PsiCoefficients psi_coefficients(double p_ancilla, double j_tau) {
  const MixingFactors f = mixing_factors(j_tau);
  PsiCoefficients psi;
  psi.psi11 = (1.0 - p_ancilla) * f.lambda_up + p_ancilla * f.mu;
  psi.psi13 = p_ancilla * f.lambda_down;
  psi.psi22 = f.mu;
  psi.psi31 = (1.0 - p_ancilla) * f.lambda_down;
  psi.psi33 = p_ancilla * f.lambda_up + (1.0 - p_ancilla) * f.mu;
  return psi;
}

CoherencesD3 coherences_of(const DensityMatrix& rho) {
  require(rho.rows() == 3 && rho.cols() == 3, ErrorCode::DimensionMismatch,
          "qutrit coherences need a 3x3 state");
  return {rho(0, 1), rho(0, 2), rho(1, 2)};
}

RealVector apply_population_map(const RealVector& p, double p_ancilla, double j_tau) {
  const Eigen::Index d = p.size();
  require(d >= 2, ErrorCode::DimensionMismatch, "population vector needs d >= 2");
  const EtaCoefficients eta = eta_coefficients(p_ancilla, j_tau);
  RealVector out(d);
  for (Eigen::Index k = 0; k < d; ++k) {
    const double diag = (k == 0) ? eta.eta11 : (k == d - 1 ? eta.eta33 : eta.eta22);
    double value = diag * p(k);
    if (k + 1 < d) value += eta.eta12 * p(k + 1);
    if (k > 0) value += eta.eta21 * p(k - 1);
    out(k) = value;
  }
  return out;
}

RealVector step_populations_recursive(const RealVector& delta_p, double p_ancilla,
                                      double j_tau) {
  const double total = delta_p.sum();
  require(std::abs(total) <= 1e-12, ErrorCode::SumNotZero,
          "population deviation sums to " + std::to_string(total));
  return apply_population_map(delta_p, p_ancilla, j_tau);
}

CoherencesD3 step_coherences_d3(const CoherencesD3& c, double p_ancilla, double j_tau,
                                double omega_tau) {
  const PsiCoefficients psi = psi_coefficients(p_ancilla, j_tau);
  const Complex phase1 = std::polar(1.0, omega_tau);
  const Complex phase2 = std::polar(1.0, 2.0 * omega_tau);
  CoherencesD3 out;
  out.c12 = phase1 * (psi.psi11 * c.c12 + psi.psi13 * c.c23);
  out.c13 = phase2 * psi.psi22 * c.c13;
  out.c23 = phase1 * (psi.psi31 * c.c12 + psi.psi33 * c.c23);
  return out;
}

RealVector zero_temp_populations_closed(const RealVector& p0, long n, double j_tau) {
  const Eigen::Index d = p0.size();
  require(d >= 2, ErrorCode::DimensionMismatch, "population vector needs d >= 2");
  require(n >= 0, ErrorCode::InvalidArgument, "collision count must be >= 0");
  const MixingFactors f = mixing_factors(j_tau);
  RealVector out(d);
  double excited = 0.0;
  // Level index d-1-k collects population cascading down from the k levels above it.
  for (Eigen::Index k = 0; k + 1 < d; ++k) {
    double value = 0.0;
    for (Eigen::Index j = 0; j <= k; ++j) {
      value += binomial_weight(n, static_cast<long>(j), f.lambda_down, f.lambda_up) *
               p0(d - 1 - k + j);
    }
    out(d - 1 - k) = value;
    excited += value;
  }
  out(0) = p0.sum() - excited;
  return out;
}

CoherencesD3 zero_temp_coherences_d3_closed(const CoherencesD3& c0, long n, double j_tau,
                                            double omega_tau) {
  require(n >= 0, ErrorCode::InvalidArgument, "collision count must be >= 0");
  const MixingFactors f = mixing_factors(j_tau);
  const double steps = static_cast<double>(n);
  const Complex phase1 = std::polar(1.0, omega_tau * steps);
  const Complex phase2 = std::polar(1.0, 2.0 * omega_tau * steps);
  const double mu_n = std::pow(f.mu, steps);
  const double up_n = std::pow(f.lambda_up, steps);
  CoherencesD3 out;
  out.c13 = phase2 * mu_n * c0.c13;
  out.c23 = phase1 * up_n * c0.c23;
  out.c12 = phase1 * (mu_n * c0.c12 +
                      f.lambda_down * divided_power_difference(f.lambda_up, f.mu, n) * c0.c23);
  return out;
}

PopulationTrajectory evolve_populations(const RealVector& p0, double p_ancilla, double j_tau,
                                        const RealVector& target, long n) {
  require(target.size() == p0.size(), ErrorCode::DimensionMismatch,
          "target and initial populations differ in length");
  require(n >= 0, ErrorCode::InvalidArgument, "collision count must be >= 0");
  PopulationTrajectory out;
  out.populations.reserve(static_cast<std::size_t>(n) + 1);
  out.distances.reserve(static_cast<std::size_t>(n) + 1);
  out.populations.push_back(p0);
  out.distances.push_back(population_distance(p0, target));
  for (long k = 0; k < n; ++k) {
    out.populations.push_back(apply_population_map(out.populations.back(), p_ancilla, j_tau));
    out.distances.push_back(population_distance(out.populations.back(), target));
  }
  return out;
}

RecursiveTrajectory evolve_recursive(const DensityMatrix& rho0, const ModelSpec& model,
                                     const CollisionConfig& cfg, long n) {
  validate(cfg);
  validate(model);
  require(is_energy_conserving(model), ErrorCode::InvalidArgument,
          "recursion path needs a flip-flop interaction with matched splittings");
  require(rho0.rows() == model.system.d && rho0.cols() == model.system.d,
          ErrorCode::DimensionMismatch, "initial state dimension does not match d");
  require(n >= 0 && n <= cfg.n_max, ErrorCode::CapExceeded,
          std::to_string(n) + " collisions requested, cap is " + std::to_string(cfg.n_max));
  const double p_ancilla = ground_population(model.ancilla);
  const double j_tau = coupling_of(model) * cfg.tau;
  const double omega_tau = model.system.omega * cfg.tau;
  const bool qutrit = model.system.d == 3;

  RecursiveTrajectory out;
  out.populations.push_back(rho0.diagonal().real());
  if (qutrit) out.coherences.push_back(coherences_of(rho0));
  for (long k = 0; k < n; ++k) {
    out.populations.push_back(apply_population_map(out.populations.back(), p_ancilla, j_tau));
    if (qutrit) {
      out.coherences.push_back(
          step_coherences_d3(out.coherences.back(), p_ancilla, j_tau, omega_tau));
    }
  }
  return out;
}

}  // namespace ri
