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

#ifndef RI_SPECTRAL_HPP
#define RI_SPECTRAL_HPP

#include "ri/collision.hpp"
#include "ri/linalg.hpp"

namespace ri {

// sqrt(p_A (1 - p_A)), in [0, 1/2].
double thermal_mixing(double p_ancilla);

// Discrete population map per collision; column-stochastic, tridiagonal.
RealMatrix stochastic_matrix(int d, double p_ancilla, double j_tau);
// Continuous-time population generator; columns sum to zero.
RealMatrix liouvillian_matrix(int d, double p_ancilla, double gamma);

// 1 first, then descending.
RealVector xi_closed(int d, double p_ancilla, double j_tau);
// 0 first, then descending.
RealVector lambda_closed(int d, double p_ancilla, double gamma);

// Eigenvalues (descending) of a real tridiagonal matrix whose off-diagonal products are
// non-negative, by Sturm-count bisection on its symmetrised similarity transform.
RealVector tridiagonal_spectrum(const RealMatrix& m);

// Qutrit relaxation modes of the population dynamics at ancilla ground population p_A.
struct SlowModeSummary {
  double theta = 0;
  RealVector eigenvalues;        // unit-rate generator: 0, -(1 - theta), -(1 + theta)
  RealMatrix right_modes;        // columns: Gibbs populations, slow mode, fast mode
  RealVector left_slow;          // u2 with u2 . right_modes.col(1) = 1
  RealVector coefficients;       // projections of the deviation onto each mode
  double alpha2 = 0;             // slow-mode projection of the initial deviation
  double amplitude_sl = 0;       // C
  double amplitude_discrete = 0; // K
};

// SumNotZero unless sum(delta_p0) ~ 0; DegenerateTemperature at p_A = 1 (theta = 0).
SlowModeSummary slow_mode_projection(const RealVector& delta_p0, double p_ancilla);

// Single-mode crossing-time estimates; AmplitudeTooSmall when the amplitude is <= 2 epsilon.
double tsim_estimate_sl(const RealVector& delta_p0, double p_ancilla, double gamma,
                        double epsilon);
// FrozenDynamics when J tau is a multiple of pi.
double nstar_estimate_discrete(const RealVector& delta_p0, double p_ancilla, double j_tau,
                               double epsilon);

// Stationary c13 of the non-energy-conserving qutrit dynamics.
double c13_steady_state(double gamma1, double gamma2, double gamma12,
                        const RealVector& p_star);

}  // namespace ri

#endif  // RI_SPECTRAL_HPP
