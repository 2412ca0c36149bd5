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

#ifndef RI_SL_ODE_HPP
#define RI_SL_ODE_HPP

#include <vector>

#include "ri/collision.hpp"
#include "ri/linalg.hpp"

namespace ri {

// Default RK4 step for a system whose fastest rate is gamma_max.
double default_time_step(double gamma_max);
// StepTooLarge if dt * gamma_max > 0.1; dt <= 0 selects the default step.
double checked_time_step(double dt, double gamma_max);

// Classical fourth-order Runge-Kutta step for y' = f(y).
template <typename State, typename Rhs>
State rk4_step(const State& y, const Rhs& f, double h) {
  const State k1 = f(y);
  const State k2 = f(State(y + (0.5 * h) * k1));
  const State k3 = f(State(y + (0.5 * h) * k2));
  const State k4 = f(State(y + h * k3));
  return State(y + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4));
}

struct PopulationOdeTrajectory {
  std::vector<double> times;
  std::vector<RealVector> populations;
};

// p' = L p with the tridiagonal generator of any dimension.
PopulationOdeTrajectory sl_evolve_populations(const RealVector& p0, double p_ancilla,
                                              double gamma, double t_end, double dt = 0.0);

struct CoherenceOdeTrajectory {
  std::vector<double> times;
  std::vector<CoherencesD3> coherences;
};

CoherencesD3 sl_coherence_rate_d3(const CoherencesD3& c, double p_ancilla, double gamma);
CoherenceOdeTrajectory sl_evolve_coherences_d3(const CoherencesD3& c0, double p_ancilla,
                                               double gamma, double t_end, double dt = 0.0);

// Flip-flop (1) and counter-rotating (2) rates for a qutrit: J1^2 tau, J2^2 tau, J1 J2 tau.
struct NonConservingRates {
  double gamma1 = 0;
  double gamma2 = 0;
  double gamma12 = 0;

  static NonConservingRates from_couplings(double j1, double j2, double tau) {
    return {j1 * j1 * tau, j2 * j2 * tau, j1 * j2 * tau};
  }
  double max_rate() const;
};

struct QutritState {
  RealVector populations = RealVector::Zero(3);
  CoherencesD3 coherences;
};

QutritState sl_nonconserving_rate(const QutritState& s, double p_ancilla,
                                  const NonConservingRates& rates);

struct QutritOdeTrajectory {
  std::vector<double> times;
  std::vector<QutritState> states;
};

QutritOdeTrajectory sl_evolve_nonconserving_d3(const QutritState& s0, double p_ancilla,
                                               const NonConservingRates& rates, double t_end,
                                               double dt = 0.0);

}  // namespace ri

#endif  // RI_SL_ODE_HPP
