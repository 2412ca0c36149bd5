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

#ifndef RI_COLLISION_HPP
#define RI_COLLISION_HPP

#include <cstdint>
#include <vector>

#include "ri/linalg.hpp"
#include "ri/models.hpp"

namespace ri {

struct CollisionConfig {
  double tau = 1.0;       // collision duration
  long n_max = 100000;    // collision cap
  double epsilon = 1e-4;  // trace-distance target
};

void validate(const CollisionConfig& cfg);

// One system-ancilla collision: rho -> Tr_A[U (rho (x) rho_A) U^H].
// The unitary is cached unless the interaction is redrawn per collision.
class CollisionChannel {
 public:
  CollisionChannel(ModelSpec model, double tau);

  DensityMatrix apply(const DensityMatrix& rho, std::uint64_t collision_index = 0) const;
  ComplexMatrix unitary(std::uint64_t collision_index = 0) const;

  const ModelSpec& model() const noexcept { return model_; }
  double tau() const noexcept { return tau_; }
  int dimension() const noexcept { return model_.system.d; }

 private:
  ModelSpec model_;
  double tau_;
  DensityMatrix ancilla_state_;
  ComplexMatrix fixed_unitary_;
};

DensityMatrix collide_once(const DensityMatrix& rho, const ModelSpec& model,
                           const CollisionConfig& cfg);

struct TrajectoryRecord {
  std::vector<DensityMatrix> states;  // states[k] after k collisions
  std::vector<double> distances;      // trace distance of states[k] to the Gibbs target
};

// n collisions of the exact joint-unitary map; CapExceeded if n > cfg.n_max.
TrajectoryRecord evolve(const DensityMatrix& rho0, const ModelSpec& model,
                        const CollisionConfig& cfg, long n);

// Contraction factors of one flip-flop collision.
struct MixingFactors {
  double lambda;      // cos 2J tau
  double lambda_up;   // cos^2 J tau
  double lambda_down; // sin^2 J tau
  double mu;          // cos J tau
};
MixingFactors mixing_factors(double j_tau);

struct EtaCoefficients {
  double eta11 = 1, eta12 = 0, eta21 = 0, eta22 = 1, eta33 = 1;
};
struct PsiCoefficients {
  double psi11 = 1, psi13 = 0, psi22 = 1, psi31 = 0, psi33 = 1;
};

EtaCoefficients eta_coefficients(double p_ancilla, double j_tau);
PsiCoefficients psi_coefficients(double p_ancilla, double j_tau);

// Off-diagonal elements of a qutrit state: c12 = rho(0,1), c13 = rho(0,2), c23 = rho(1,2).
struct CoherencesD3 {
  Complex c12{0.0, 0.0};
  Complex c13{0.0, 0.0};
  Complex c23{0.0, 0.0};
};
CoherencesD3 coherences_of(const DensityMatrix& rho);

// Tridiagonal column-stochastic population map applied to any vector.
RealVector apply_population_map(const RealVector& p, double p_ancilla, double j_tau);
// Same map on deviations from the fixed point; SumNotZero unless sum(delta_p) ~ 0.
RealVector step_populations_recursive(const RealVector& delta_p, double p_ancilla, double j_tau);
CoherencesD3 step_coherences_d3(const CoherencesD3& c, double p_ancilla, double j_tau,
                                double omega_tau);

// p_A = 1 closed forms after n collisions.
RealVector zero_temp_populations_closed(const RealVector& p0, long n, double j_tau);
CoherencesD3 zero_temp_coherences_d3_closed(const CoherencesD3& c0, long n, double j_tau,
                                            double omega_tau);

struct PopulationTrajectory {
  std::vector<RealVector> populations;
  std::vector<double> distances;
};

// Diagonal fast path for energy-conserving flip-flop collisions.
PopulationTrajectory evolve_populations(const RealVector& p0, double p_ancilla, double j_tau,
                                        const RealVector& target, long n);

struct RecursiveTrajectory {
  std::vector<RealVector> populations;
  std::vector<CoherencesD3> coherences;  // filled for d = 3 only
};

// Recursion path for an energy-conserving model; coherences are tracked for d = 3.
RecursiveTrajectory evolve_recursive(const DensityMatrix& rho0, const ModelSpec& model,
                                     const CollisionConfig& cfg, long n);

}  // namespace ri

#endif  // RI_COLLISION_HPP
