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

#include "ri/sim_time.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "ri/sl_ode.hpp"
#include "ri/spectral.hpp"

namespace ri {
namespace {

void require(bool ok, ErrorCode code, const std::string& message) {
  if (!ok) throw Error(code, message);
}

long ceil_count(double value) {
  return static_cast<long>(std::ceil(value - 1e-9 * std::max(1.0, std::abs(value))));
}

CollisionEstimate make_estimate(double value, ClosedFormRegime regime) {
  return {value, std::max(0L, ceil_count(value)), regime};
}

ThermalizationResult reached(long n, double tau, double distance) {
  ThermalizationResult r;
  r.n_star = n;
  r.reachable = true;
  r.t_sim = static_cast<double>(n) * tau;
  r.final_distance = distance;
  r.mode = TimeMode::Discrete;
  return r;
}

ThermalizationResult unreachable(long n_max, double tau, double distance) {
  ThermalizationResult r;
  r.reachable = false;
  r.t_sim = static_cast<double>(n_max) * tau;
  r.final_distance = distance;
  r.mode = TimeMode::Discrete;
  return r;
}

bool is_diagonal(const DensityMatrix& rho) {
  for (Eigen::Index i = 0; i < rho.rows(); ++i) {
    for (Eigen::Index j = 0; j < rho.cols(); ++j) {
      if (i != j && rho(i, j) != Complex(0.0, 0.0)) return false;
    }
  }
  return true;
}

DensityMatrix qutrit_state(const RealVector& p, const CoherencesD3& c) {
  DensityMatrix rho = diagonal_state(p);
  rho(0, 1) = c.c12;
  rho(0, 2) = c.c13;
  rho(1, 2) = c.c23;
  rho(1, 0) = std::conj(c.c12);
  rho(2, 0) = std::conj(c.c13);
  rho(2, 1) = std::conj(c.c23);
  return rho;
}

ThermalizationResult brute_force_count(const DensityMatrix& rho0, const ModelSpec& model,
                                       const CollisionConfig& cfg,
                                       const DensityMatrix& target) {
  const CollisionChannel channel(model, cfg.tau);
  DensityMatrix rho = rho0;
  double distance = trace_distance(rho, target);
  if (distance <= cfg.epsilon) return reached(0, cfg.tau, distance);
  for (long n = 1; n <= cfg.n_max; ++n) {
    rho = channel.apply(rho, static_cast<std::uint64_t>(n - 1));
    distance = trace_distance(rho, target);
    if (distance <= cfg.epsilon) return reached(n, cfg.tau, distance);
  }
  return unreachable(cfg.n_max, cfg.tau, distance);
}

ThermalizationResult qutrit_recursion_count(const DensityMatrix& rho0, double p_ancilla,
                                            double j_tau, double omega_tau,
                                            const CollisionConfig& cfg,
                                            const DensityMatrix& target) {
  RealVector p = rho0.diagonal().real();
  CoherencesD3 c = coherences_of(rho0);
  double distance = trace_distance(rho0, target);
  if (distance <= cfg.epsilon) return reached(0, cfg.tau, distance);
  for (long n = 1; n <= cfg.n_max; ++n) {
    p = apply_population_map(p, p_ancilla, j_tau);
    c = step_coherences_d3(c, p_ancilla, j_tau, omega_tau);
    distance = trace_distance(qutrit_state(p, c), target);
    if (distance <= cfg.epsilon) return reached(n, cfg.tau, distance);
  }
  return unreachable(cfg.n_max, cfg.tau, distance);
}

// Tail sums S_j = sum_{k=j}^{d-2} p0[d-1-k+j] of the zero-temperature cascade.
RealVector cascade_tail_sums(const RealVector& p0) {
  const Eigen::Index d = p0.size();
  RealVector s = RealVector::Zero(d - 1);
  for (Eigen::Index j = 0; j + 1 < d; ++j) {
    for (Eigen::Index k = j; k + 1 < d; ++k) s(j) += p0(d - 1 - k + j);
  }
  return s;
}

// Upper-level sums S'_k = sum_{i>k} p0[i].
RealVector upper_sums(const RealVector& p0) {
  const Eigen::Index d = p0.size();
  RealVector s = RealVector::Zero(d - 1);
  for (Eigen::Index k = 0; k + 1 < d; ++k) s(k) = p0.tail(d - 1 - k).sum();
  return s;
}

void require_populations(const RealVector& p0, Eigen::Index expected, const char* what) {
  if (expected > 0) {
    require(p0.size() == expected, ErrorCode::DimensionMismatch,
            std::string(what) + " expects " + std::to_string(expected) + " populations");
  } else {
    require(p0.size() >= 2, ErrorCode::DimensionMismatch,
            std::string(what) + " expects at least two populations");
  }
  require(p0.allFinite() && p0.minCoeff() >= 0.0, ErrorCode::InvalidArgument,
          std::string(what) + " needs non-negative populations");
}

void require_epsilon(double epsilon) {
  require(epsilon > 0.0 && epsilon < 1.0, ErrorCode::InvalidArgument,
          "epsilon must lie in (0, 1)");
}

// Exact zero-temperature count when each collision shifts every level down by one.
CollisionEstimate instant_cascade(const RealVector& p0, double epsilon) {
  const Eigen::Index d = p0.size();
  for (Eigen::Index n = 0; n < d; ++n) {
    const double remaining = n + 1 < d ? p0.tail(d - 1 - n).sum() : 0.0;
    if (remaining <= epsilon) {
      return {static_cast<double>(n), static_cast<long>(n), ClosedFormRegime::Instant};
    }
  }
  return {static_cast<double>(d - 1), static_cast<long>(d - 1), ClosedFormRegime::Instant};
}

}  // namespace

ThermalizationResult nstar_simulated(const DensityMatrix& rho0, const ModelSpec& model,
                                     const CollisionConfig& cfg, Engine engine) {
  validate(model);
  validate(cfg);
  require(rho0.rows() == model.system.d && rho0.cols() == model.system.d,
          ErrorCode::DimensionMismatch, "initial state dimension does not match d");
  const DensityMatrix target = target_state(model);
  switch (engine) {
    case Engine::BruteForce:
      return brute_force_count(rho0, model, cfg, target);
    case Engine::Recursion: {
      require(is_energy_conserving(model), ErrorCode::InvalidArgument,
              "recursion engine needs a flip-flop interaction with matched splittings");
      const double p_ancilla = ground_population(model.ancilla);
      const double j_tau = std::get<IsotropicFlipFlop>(model.interaction).coupling * cfg.tau;
      if (is_diagonal(rho0)) {
        return nstar_simulated_populations(rho0.diagonal().real(), p_ancilla, j_tau,
                                           target.diagonal().real(), cfg.epsilon, cfg.n_max,
                                           cfg.tau);
      }
      if (model.system.d == 3) {
        return qutrit_recursion_count(rho0, p_ancilla, j_tau, model.system.omega * cfg.tau, cfg,
                                      target);
      }
      return brute_force_count(rho0, model, cfg, target);
    }
    case Engine::OdeSL:
      break;
  }
  throw Error(ErrorCode::InvalidArgument, "collision counts need a discrete engine");
}

ThermalizationResult nstar_simulated_populations(const RealVector& p0, double p_ancilla,
                                                 double j_tau, const RealVector& target,
                                                 double epsilon, long n_max, double tau) {
  require(p0.size() == target.size(), ErrorCode::DimensionMismatch,
          "target and initial populations differ in length");
  require(n_max >= 0, ErrorCode::InvalidArgument, "collision cap must be >= 0");
  RealVector p = p0;
  double distance = population_distance(p, target);
  if (distance <= epsilon) return reached(0, tau, distance);
  for (long n = 1; n <= n_max; ++n) {
    p = apply_population_map(p, p_ancilla, j_tau);
    distance = population_distance(p, target);
    if (distance <= epsilon) return reached(n, tau, distance);
  }
  return unreachable(n_max, tau, distance);
}

ThermalizationResult tsim_simulated_sl(const RealVector& p0, double p_ancilla, double gamma,
                                       const RealVector& target, double epsilon, double t_max,
                                       double dt) {
  require(p0.size() == target.size(), ErrorCode::DimensionMismatch,
          "target and initial populations differ in length");
  require(gamma >= 0.0, ErrorCode::InvalidArgument, "rate must be >= 0");
  require(t_max >= 0.0, ErrorCode::InvalidArgument, "time cap must be >= 0");
  const double step = checked_time_step(dt, gamma);
  const RealMatrix generator = liouvillian_matrix(static_cast<int>(p0.size()), p_ancilla, gamma);
  auto rate = [&generator](const RealVector& p) -> RealVector { return generator * p; };

  ThermalizationResult result;
  result.mode = TimeMode::ContinuousSL;
  double distance = population_distance(p0, target);
  if (distance <= epsilon) {
    result.reachable = true;
    result.final_distance = distance;
    return result;
  }
  if (gamma == 0.0) {
    result.t_sim = t_max;
    result.final_distance = distance;
    return result;
  }
  RealVector p = p0;
  for (long k = 0;; ++k) {
    const double t = static_cast<double>(k) * step;
    if (t >= t_max) break;
    const double h = std::min(step, t_max - t);
    const RealVector next = rk4_step(p, rate, h);
    const double next_distance = population_distance(next, target);
    if (next_distance <= epsilon) {
      double lo = 0.0;
      double hi = h;
      double hi_distance = next_distance;
      for (int iter = 0; iter < 80 && hi - lo > 1e-15 * (t + h); ++iter) {
        const double mid = 0.5 * (lo + hi);
        const double d_mid = population_distance(rk4_step(p, rate, mid), target);
        if (d_mid <= epsilon) {
          hi = mid;
          hi_distance = d_mid;
        } else {
          lo = mid;
        }
      }
      result.reachable = true;
      result.t_sim = t + hi;
      result.final_distance = hi_distance;
      return result;
    }
    p = next;
    distance = next_distance;
  }
  result.t_sim = t_max;
  result.final_distance = distance;
  return result;
}

double zero_temp_excited_population(const RealVector& p0, double n, double j_tau) {
  require_populations(p0, 0, "zero_temp_excited_population");
  const MixingFactors f = mixing_factors(j_tau);
  const RealVector tails = cascade_tail_sums(p0);
  if (f.lambda_down == 0.0) return tails(0);
  const double log_up = std::log(f.lambda_up);
  const double log_down = std::log(f.lambda_down);
  double total = 0.0;
  double binomial = 1.0;
  for (Eigen::Index j = 0; j < tails.size(); ++j) {
    if (j > 0) binomial *= (n - static_cast<double>(j - 1)) / static_cast<double>(j);
    if (binomial == 0.0 || tails(j) == 0.0) continue;
    const double jd = static_cast<double>(j);
    const double power = (f.lambda_up == 0.0)
                             ? (n == jd ? std::exp(jd * log_down) : 0.0)
                             : std::exp(jd * log_down + (n - jd) * log_up);
    total += binomial * power * tails(j);
  }
  return total;
}

double zero_temp_sl_excited_population(const RealVector& p0, double gamma, double t) {
  require_populations(p0, 0, "zero_temp_sl_excited_population");
  const RealVector sums = upper_sums(p0);
  const double x = gamma * t;
  double total = 0.0;
  for (Eigen::Index k = 0; k < sums.size(); ++k) {
    if (sums(k) == 0.0) continue;
    const double kd = static_cast<double>(k);
    const double log_poisson = (k == 0 ? 0.0 : kd * std::log(x)) - x - std::lgamma(kd + 1.0);
    total += std::exp(log_poisson) * sums(k);
  }
  return total;
}

CollisionEstimate nstar_closed_d3_zeroT(const RealVector& p0, double j_tau, double epsilon) {
  require_populations(p0, 3, "nstar_closed_d3_zeroT");
  require_epsilon(epsilon);
  const MixingFactors f = mixing_factors(j_tau);
  require(f.lambda_down > 1e-14, ErrorCode::FrozenDynamics,
          "J tau is a multiple of pi; populations do not evolve");
  const double a = p0(1) + p0(2);
  const double p3 = p0(2);
  if (a <= epsilon) return {0.0, 0, ClosedFormRegime::AlreadyWithin};
  if (std::abs(f.mu) < 1e-15) return instant_cascade(p0, epsilon);
  const double log_up = std::log(f.lambda_up);
  if (p3 == 0.0) {
    return make_estimate(std::log(epsilon / a) / log_up, ClosedFormRegime::SingleMode);
  }
  const double alpha = -log_up;
  const double b = p3 * f.lambda_down / f.lambda_up;
  const double log_neg_z = std::log(alpha * epsilon / b) - alpha * a / b;
  require(log_neg_z <= -1.0, ErrorCode::EpsilonTooLarge,
          "epsilon " + std::to_string(epsilon) + " exceeds the Lambert validity bound");
  const double w = lambert_wm1_from_log(log_neg_z);
  // Equal to -w / alpha - a / b via w + log(-w) = log(-z), without cancelling large terms.
  return make_estimate(std::log(-w * b / (alpha * epsilon)) / alpha, ClosedFormRegime::Lambert);
}

double tsim_closed_sl_zeroT(const RealVector& p0, double gamma, double epsilon) {
  require_populations(p0, 3, "tsim_closed_sl_zeroT");
  require_epsilon(epsilon);
  require(gamma > 0.0, ErrorCode::InvalidArgument, "rate must be positive");
  const double a = p0(1) + p0(2);
  const double p3 = p0(2);
  if (a <= epsilon) return 0.0;
  if (p3 == 0.0) return std::log(a / epsilon) / gamma;
  const double log_neg_z = std::log(epsilon / p3) - a / p3;
  require(log_neg_z <= -1.0, ErrorCode::EpsilonTooLarge,
          "epsilon " + std::to_string(epsilon) + " exceeds p3 exp(p2 / p3)");
  const double w = lambert_wm1_from_log(log_neg_z);
  // Equal to -(a / p3 + w) / gamma, rearranged as above.
  return std::log(-w * p3 / epsilon) / gamma;
}

CollisionEstimate nstar_general_zeroT_solve(const RealVector& p0, double j_tau, double epsilon,
                                            double n_cap) {
  require_populations(p0, 0, "nstar_general_zeroT_solve");
  require_epsilon(epsilon);
  const MixingFactors f = mixing_factors(j_tau);
  require(f.lambda_down > 1e-14, ErrorCode::FrozenDynamics,
          "J tau is a multiple of pi; populations do not evolve");
  auto excess = [&](double n) { return zero_temp_excited_population(p0, n, j_tau) - epsilon; };
  if (excess(0.0) <= 0.0) return {0.0, 0, ClosedFormRegime::AlreadyWithin};
  if (std::abs(f.mu) < 1e-15) return instant_cascade(p0, epsilon);

  double lo = 0.0;
  double hi = 1.0;
  while (excess(hi) > 0.0) {
    lo = hi;
    hi *= 2.0;
    require(hi <= n_cap, ErrorCode::NoRootBelowCap,
            "no crossing below n = " + std::to_string(n_cap));
  }
  while (hi - lo > 1e-10 * hi) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (excess(mid) > 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return make_estimate(0.5 * (lo + hi), ClosedFormRegime::Numeric);
}

double tsim_general_sl_zeroT_solve(const RealVector& p0, double gamma, double epsilon,
                                   double t_cap) {
  require_populations(p0, 0, "tsim_general_sl_zeroT_solve");
  require_epsilon(epsilon);
  require(gamma > 0.0, ErrorCode::InvalidArgument, "rate must be positive");
  auto excess = [&](double t) {
    return zero_temp_sl_excited_population(p0, gamma, t) - epsilon;
  };
  // d/dt of the excited population: -gamma e^{-x} sum_k x^k / k! p0[k+1].
  auto slope = [&](double t) {
    const double x = gamma * t;
    double total = 0.0;
    for (Eigen::Index k = 0; k + 1 < p0.size(); ++k) {
      if (p0(k + 1) == 0.0) continue;
      const double kd = static_cast<double>(k);
      total += std::exp((k == 0 ? 0.0 : kd * std::log(x)) - x - std::lgamma(kd + 1.0)) *
               p0(k + 1);
    }
    return -gamma * total;
  };
  if (excess(0.0) <= 0.0) return 0.0;

  double lo = 0.0;
  double hi = 1.0 / gamma;
  while (excess(hi) > 0.0) {
    lo = hi;
    hi *= 2.0;
    require(hi <= t_cap, ErrorCode::NoRootBelowCap,
            "no crossing below t = " + std::to_string(t_cap));
  }
  double t = 0.5 * (lo + hi);
  for (int iter = 0; iter < 200 && hi - lo > 1e-10 * hi; ++iter) {
    const double g = excess(t);
    if (g > 0.0) {
      lo = t;
    } else {
      hi = t;
    }
    const double s = slope(t);
    double next = (s < 0.0) ? t - g / s : 0.5 * (lo + hi);
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    if (std::abs(next - t) <= 1e-14 * t) {
      t = next;
      break;
    }
    t = next;
  }
  return t;
}

}  // namespace ri
