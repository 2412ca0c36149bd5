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

#ifndef RI_SIM_TIME_HPP
#define RI_SIM_TIME_HPP

#include <optional>

#include "ri/collision.hpp"
#include "ri/lambert.hpp"
#include "ri/models.hpp"

namespace ri {

enum class TimeMode { Discrete, ContinuousSL };
enum class Engine { BruteForce, Recursion, OdeSL };

struct ThermalizationResult {
  std::optional<long> n_star;  // empty when unreachable, and in ContinuousSL mode
  bool reachable = false;
  double t_sim = 0.0;          // n* tau, ODE crossing time, or the cap when unreachable
  double final_distance = 0.0;
  TimeMode mode = TimeMode::Discrete;
};

// Smallest n <= cfg.n_max with D(rho_n, Gibbs) <= epsilon. Recursion needs an energy-conserving
// model; it tracks populations for diagonal inputs and the full qutrit state otherwise, and
// falls back to the joint-unitary map for coherent inputs with d != 3.
ThermalizationResult nstar_simulated(const DensityMatrix& rho0, const ModelSpec& model,
                                     const CollisionConfig& cfg,
                                     Engine engine = Engine::BruteForce);

// Population-only variant of the recursion engine.
ThermalizationResult nstar_simulated_populations(const RealVector& p0, double p_ancilla,
                                                 double j_tau, const RealVector& target,
                                                 double epsilon, long n_max, double tau = 1.0);

// First time the SL population ODE comes within epsilon of target; refined inside the last
// step by bisection on a partial RK4 step. Unreachable past t_max.
ThermalizationResult tsim_simulated_sl(const RealVector& p0, double p_ancilla, double gamma,
                                       const RealVector& target, double epsilon, double t_max,
                                       double dt = 0.0);

enum class ClosedFormRegime { Lambert, SingleMode, Instant, AlreadyWithin, Numeric };

struct CollisionEstimate {
  double value = 0.0;  // real-valued solution
  long ceiled = 0;     // smallest integer collision count >= value
  ClosedFormRegime regime = ClosedFormRegime::Lambert;
};

// Zero-temperature qutrit collision count via W_{-1}. FrozenDynamics for J tau in pi Z,
// EpsilonTooLarge outside the validity bound. p3 = 0 uses the single-mode decay law;
// cos(J tau) = 0 to machine precision uses the exact cascade count.
CollisionEstimate nstar_closed_d3_zeroT(const RealVector& p0, double j_tau, double epsilon);

// Zero-temperature qutrit SL crossing time via W_{-1}; EpsilonTooLarge outside its bound.
double tsim_closed_sl_zeroT(const RealVector& p0, double gamma, double epsilon);

// Numeric roots of the general-d zero-temperature crossing equations.
CollisionEstimate nstar_general_zeroT_solve(const RealVector& p0, double j_tau, double epsilon,
                                            double n_cap = 1e12);
double tsim_general_sl_zeroT_solve(const RealVector& p0, double gamma, double epsilon,
                                   double t_cap = 1e12);

// Distance to the ground state after n collisions (real n) at zero temperature.
double zero_temp_excited_population(const RealVector& p0, double n, double j_tau);
// Distance to the ground state at time t under the zero-temperature SL generator.
double zero_temp_sl_excited_population(const RealVector& p0, double gamma, double t);

}  // namespace ri

#endif  // RI_SIM_TIME_HPP
