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

#ifndef RI_MODELS_HPP
#define RI_MODELS_HPP

#include <cstdint>
#include <limits>
#include <random>
#include <variant>

#include "ri/linalg.hpp"

namespace ri {

// beta = kZeroTemperature maps to a fully polarised ancilla, p_A = 1 exactly.
inline constexpr double kZeroTemperature = std::numeric_limits<double>::infinity();

struct SystemSpec {
  int d = 3;           // number of levels, d = 2s + 1
  double omega = 1.0;  // level splitting
};

struct AncillaSpec {
  double omega = 1.0;
  double beta = 1.0;  // >= 0 or kZeroTemperature
};

// |k+1, g> <-> |k, e> with strength `coupling`.
struct IsotropicFlipFlop {
  double coupling = 0.0;
};

// Flip-flop plus |k+1, e> <-> |k, g> with strength `counter_coupling`.
struct CounterRotating {
  double coupling = 0.0;
  double counter_coupling = 0.0;
};

// Every joint-space pair i < j coupled with U(lo, hi); redrawn for each collision.
struct RandomFull {
  double lo = 0.0;
  double hi = 1.0;
  std::uint64_t seed = 0;
};

using InteractionSpec = std::variant<IsotropicFlipFlop, CounterRotating, RandomFull>;

struct ModelSpec {
  SystemSpec system;
  AncillaSpec ancilla;
  InteractionSpec interaction = IsotropicFlipFlop{};
};

void validate(const SystemSpec& spec);
void validate(const AncillaSpec& spec);
void validate(const InteractionSpec& spec);
void validate(const ModelSpec& spec);

// 1 / (1 + exp(-beta * omega)); exactly 1 at zero temperature.
double ground_population(double beta, double omega);
double ground_population(const AncillaSpec& spec);

ComplexMatrix system_hamiltonian(const SystemSpec& spec);
ComplexMatrix ancilla_hamiltonian(const AncillaSpec& spec);
DensityMatrix ancilla_thermal_state(const AncillaSpec& spec);

RealVector gibbs_populations(const SystemSpec& spec, double beta);
DensityMatrix system_gibbs_state(const SystemSpec& spec, double beta);
// Gibbs state of the system at the ancilla temperature.
DensityMatrix target_state(const ModelSpec& model);

// Joint index convention: k * 2 + a, ancilla a = 0 is the ground state.
ComplexMatrix interaction_hamiltonian(const SystemSpec& sys, const InteractionSpec& interaction,
                                      std::uint64_t collision_index = 0);
ComplexMatrix free_hamiltonian(const SystemSpec& sys, const AncillaSpec& anc);
ComplexMatrix total_hamiltonian(const SystemSpec& sys, const AncillaSpec& anc,
                                const InteractionSpec& interaction,
                                std::uint64_t collision_index = 0);
ComplexMatrix total_hamiltonian(const ModelSpec& model, std::uint64_t collision_index = 0);

// Flip-flop coupling with matched system and ancilla splittings.
bool is_energy_conserving(const ModelSpec& model);
bool redraws_per_collision(const InteractionSpec& interaction);

// Deterministic generator for (seed, stream) pairs, e.g. (master seed, collision index).
std::mt19937_64 make_generator(std::uint64_t seed, std::uint64_t stream = 0,
                               std::uint64_t substream = 0);
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream, std::uint64_t substream = 0);

DensityMatrix maximally_mixed_state(int d);
DensityMatrix diagonal_state(const RealVector& populations);
// Ginibre convention: G G^H / Tr(G G^H) with i.i.d. complex normal G.
DensityMatrix random_density_matrix(int d, std::mt19937_64& rng);
RealVector random_populations(int d, std::mt19937_64& rng);

}  // namespace ri

#endif  // RI_MODELS_HPP
