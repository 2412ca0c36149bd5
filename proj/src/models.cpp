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

#include "ri/models.hpp"

#include <array>
#include <cmath>
#include <string>

namespace ri {
namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

void require(bool ok, const std::string& message) {
  if (!ok) throw Error(ErrorCode::InvalidArgument, message);
}

Eigen::Index joint_index(int level, int ancilla) { return Eigen::Index{level} * 2 + ancilla; }

}  // namespace

void validate(const SystemSpec& spec) {
  require(spec.d >= 2, "system dimension must be >= 2, got " + std::to_string(spec.d));
  require(std::isfinite(spec.omega) && spec.omega > 0, "system omega must be positive");
}

void validate(const AncillaSpec& spec) {
  require(std::isfinite(spec.omega) && spec.omega > 0, "ancilla omega must be positive");
  require(!std::isnan(spec.beta) && spec.beta >= 0, "ancilla beta must be >= 0");
}

void validate(const InteractionSpec& spec) {
  std::visit(Overloaded{
                 [](const IsotropicFlipFlop& s) {
                   require(std::isfinite(s.coupling), "coupling must be finite");
                 },
                 [](const CounterRotating& s) {
                   require(std::isfinite(s.coupling) && std::isfinite(s.counter_coupling),
                           "couplings must be finite");
                 },
                 [](const RandomFull& s) {
                   require(std::isfinite(s.lo) && std::isfinite(s.hi) && s.lo < s.hi,
                           "random coupling range needs lo < hi");
                 },
             },
             spec);
}

void validate(const ModelSpec& spec) {
  validate(spec.system);
  validate(spec.ancilla);
  validate(spec.interaction);
}

double ground_population(double beta, double omega) {
  if (std::isinf(beta)) return 1.0;
  return 1.0 / (1.0 + std::exp(-beta * omega));
}

double ground_population(const AncillaSpec& spec) {
  return ground_population(spec.beta, spec.omega);
}

ComplexMatrix system_hamiltonian(const SystemSpec& spec) {
  validate(spec);
  const double s = 0.5 * (spec.d - 1);
  ComplexMatrix h = ComplexMatrix::Zero(spec.d, spec.d);
  for (int k = 0; k < spec.d; ++k) h(k, k) = spec.omega * (k - s);
  return h;
}

ComplexMatrix ancilla_hamiltonian(const AncillaSpec& spec) {
  validate(spec);
  ComplexMatrix h = ComplexMatrix::Zero(2, 2);
  h(0, 0) = -0.5 * spec.omega;
  h(1, 1) = 0.5 * spec.omega;
  return h;
}

DensityMatrix ancilla_thermal_state(const AncillaSpec& spec) {
  validate(spec);
  const double p = ground_population(spec);
  DensityMatrix rho = DensityMatrix::Zero(2, 2);
  rho(0, 0) = p;
  rho(1, 1) = 1.0 - p;
  return rho;
}

RealVector gibbs_populations(const SystemSpec& spec, double beta) {
  validate(spec);
  require(!std::isnan(beta) && beta >= 0, "beta must be >= 0");
  RealVector p = RealVector::Zero(spec.d);
  if (std::isinf(beta)) {
    p(0) = 1.0;
    return p;
  }
  // Weights relative to the ground state never overflow.
  for (int k = 0; k < spec.d; ++k) p(k) = std::exp(-beta * spec.omega * k);
  return p / p.sum();
}

DensityMatrix system_gibbs_state(const SystemSpec& spec, double beta) {
  return diagonal_state(gibbs_populations(spec, beta));
}

DensityMatrix target_state(const ModelSpec& model) {
  return system_gibbs_state(model.system, model.ancilla.beta);
}

ComplexMatrix interaction_hamiltonian(const SystemSpec& sys, const InteractionSpec& interaction,
                                      std::uint64_t collision_index) {
  validate(sys);
  validate(interaction);
  const Eigen::Index n = 2 * Eigen::Index{sys.d};
  ComplexMatrix h = ComplexMatrix::Zero(n, n);
  auto couple = [&h](Eigen::Index i, Eigen::Index j, double value) {
    h(i, j) = value;
    h(j, i) = value;
  };
  std::visit(Overloaded{
                 [&](const IsotropicFlipFlop& s) {
                   for (int k = 0; k + 1 < sys.d; ++k) {
                     couple(joint_index(k + 1, 0), joint_index(k, 1), s.coupling);
                   }
                 },
                 [&](const CounterRotating& s) {
                   for (int k = 0; k + 1 < sys.d; ++k) {
                     couple(joint_index(k + 1, 0), joint_index(k, 1), s.coupling);
                     couple(joint_index(k + 1, 1), joint_index(k, 0), s.counter_coupling);
                   }
                 },
                 [&](const RandomFull& s) {
                   auto rng = make_generator(s.seed, collision_index);
                   std::uniform_real_distribution<double> draw(s.lo, s.hi);
                   for (Eigen::Index i = 0; i < n; ++i) {
                     for (Eigen::Index j = i + 1; j < n; ++j) couple(i, j, draw(rng));
                   }
                 },
             },
             interaction);
  return h;
}

ComplexMatrix free_hamiltonian(const SystemSpec& sys, const AncillaSpec& anc) {
  const ComplexMatrix id_sys = ComplexMatrix::Identity(sys.d, sys.d);
  const ComplexMatrix id_anc = ComplexMatrix::Identity(2, 2);
  return kron(system_hamiltonian(sys), id_anc) + kron(id_sys, ancilla_hamiltonian(anc));
}

ComplexMatrix total_hamiltonian(const SystemSpec& sys, const AncillaSpec& anc,
                                const InteractionSpec& interaction,
                                std::uint64_t collision_index) {
  return free_hamiltonian(sys, anc) + interaction_hamiltonian(sys, interaction, collision_index);
}

ComplexMatrix total_hamiltonian(const ModelSpec& model, std::uint64_t collision_index) {
  return total_hamiltonian(model.system, model.ancilla, model.interaction, collision_index);
}

bool is_energy_conserving(const ModelSpec& model) {
  return std::holds_alternative<IsotropicFlipFlop>(model.interaction) &&
         model.system.omega == model.ancilla.omega;
}

bool redraws_per_collision(const InteractionSpec& interaction) {
  return std::holds_alternative<RandomFull>(interaction);
}

std::mt19937_64 make_generator(std::uint64_t seed, std::uint64_t stream,
                               std::uint64_t substream) {
  auto lo = [](std::uint64_t x) { return static_cast<std::uint32_t>(x & 0xffffffffu); };
  auto hi = [](std::uint64_t x) { return static_cast<std::uint32_t>(x >> 32); };
  std::seed_seq seq{lo(seed), hi(seed), lo(stream), hi(stream), lo(substream), hi(substream)};
  return std::mt19937_64(seq);
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream, std::uint64_t substream) {
  auto rng = make_generator(seed, stream, substream);
  return rng();
}

DensityMatrix maximally_mixed_state(int d) {
  require(d >= 1, "dimension must be positive");
  return DensityMatrix::Identity(d, d) / static_cast<double>(d);
}

DensityMatrix diagonal_state(const RealVector& populations) {
  DensityMatrix rho = DensityMatrix::Zero(populations.size(), populations.size());
  for (Eigen::Index k = 0; k < populations.size(); ++k) rho(k, k) = populations(k);
  return rho;
}

DensityMatrix random_density_matrix(int d, std::mt19937_64& rng) {
  require(d >= 1, "dimension must be positive");
  std::normal_distribution<double> normal(0.0, 1.0);
  ComplexMatrix g(d, d);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) g(i, j) = Complex(normal(rng), normal(rng));
  }
  DensityMatrix rho = g * g.adjoint();
  rho /= rho.trace().real();
  return (rho + rho.adjoint()) / 2.0;
}

RealVector random_populations(int d, std::mt19937_64& rng) {
  require(d >= 1, "dimension must be positive");
  std::exponential_distribution<double> expo(1.0);
  RealVector p(d);
  for (int k = 0; k < d; ++k) p(k) = expo(rng);
  return p / p.sum();
}

}  // namespace ri
