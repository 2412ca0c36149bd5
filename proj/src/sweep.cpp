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

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>

#include "ri/sim_time.hpp"
#include "ri/sweep.hpp"

namespace ri {
namespace {

struct TaskOutcome {
  double value = 0.0;
  bool reachable = true;
};

RealVector initial_populations(const SweepSpec& spec) {
  if (spec.initial_populations) return *spec.initial_populations;
  return RealVector::Constant(spec.d, 1.0 / spec.d);
}

ModelSpec flip_flop_model(const SweepSpec& spec, double beta) {
  ModelSpec model;
  model.system = {spec.d, spec.omega};
  model.ancilla = {spec.omega, beta};
  model.interaction = IsotropicFlipFlop{spec.coupling};
  return model;
}

TaskOutcome collision_count(const SweepSpec& spec, double beta, double j_tau) {
  const ModelSpec model = flip_flop_model(spec, beta);
  CollisionConfig cfg;
  cfg.tau = j_tau / spec.coupling;
  cfg.n_max = spec.n_max;
  cfg.epsilon = spec.epsilon;
  const ThermalizationResult r =
      nstar_simulated(diagonal_state(initial_populations(spec)), model, cfg, spec.engine);
  if (!r.reachable) return {static_cast<double>(spec.n_max), false};
  return {static_cast<double>(*r.n_star), true};
}

TaskOutcome simulation_time(const SweepSpec& spec, double beta, double epsilon) {
  if (spec.engine == Engine::OdeSL) {
    const SystemSpec system{spec.d, spec.omega};
    const ThermalizationResult r = tsim_simulated_sl(
        initial_populations(spec), ground_population(beta, spec.omega), spec.gamma,
        gibbs_populations(system, beta), epsilon, spec.t_max);
    return {r.t_sim, r.reachable};
  }
  // Discrete collisions at fixed gamma = J^2 tau.
  const ModelSpec model = flip_flop_model(spec, beta);
  CollisionConfig cfg;
  cfg.tau = spec.gamma / (spec.coupling * spec.coupling);
  cfg.n_max = spec.n_max;
  cfg.epsilon = epsilon;
  const ThermalizationResult r =
      nstar_simulated(diagonal_state(initial_populations(spec)), model, cfg, spec.engine);
  return {r.t_sim, r.reachable};
}

TaskOutcome random_ensemble_member(const SweepSpec& spec, double beta, std::size_t point,
                                   int repetition) {
  ModelSpec model;
  model.system = {spec.d, spec.omega};
  model.ancilla = {spec.omega, beta};
  model.interaction = RandomFull{spec.coupling_lo, spec.coupling_hi,
                                 derive_seed(spec.seed, point, static_cast<std::uint64_t>(repetition))};
  CollisionConfig cfg;
  cfg.tau = spec.tau;
  cfg.n_max = spec.n_max;
  cfg.epsilon = spec.epsilon;
  const ThermalizationResult r =
      nstar_simulated(diagonal_state(initial_populations(spec)), model, cfg, Engine::BruteForce);
  if (!r.reachable) return {static_cast<double>(spec.n_max), false};
  return {static_cast<double>(*r.n_star), true};
}

TaskOutcome run_task(const SweepSpec& spec, std::size_t point, int repetition) {
  const double x = spec.grid[point];
  switch (spec.kind) {
    case SweepKind::NstarVsJtau: return collision_count(spec, spec.beta, x);
    case SweepKind::NstarVsBeta: return collision_count(spec, x, spec.j_tau);
    case SweepKind::TsimVsBeta: return simulation_time(spec, x, spec.epsilon);
    case SweepKind::TsimVsEpsilon: return simulation_time(spec, spec.beta, x);
    case SweepKind::RandomEnsembleVsBeta:
      return random_ensemble_member(spec, x, point, repetition);
  }
  return {};
}

double cap_value(const SweepSpec& spec) {
  const bool ode_time = (spec.kind == SweepKind::TsimVsBeta ||
                         spec.kind == SweepKind::TsimVsEpsilon);
  if (!ode_time) return static_cast<double>(spec.n_max);
  if (spec.engine == Engine::OdeSL) return spec.t_max;
  return static_cast<double>(spec.n_max) * spec.gamma / (spec.coupling * spec.coupling);
}

}  // namespace

unsigned resolve_thread_count(unsigned requested) {
  if (const char* env = std::getenv("RI_THERMALIZER_THREADS")) {
    char* end = nullptr;
    const unsigned long value = std::strtoul(env, &end, 10);
    if (end != env && *end == '\0' && value > 0) return static_cast<unsigned>(value);
  }
  if (requested == 0) return std::max(1u, std::thread::hardware_concurrency());
  return requested;
}

std::vector<SweepRecord> run_sweep(const SweepSpec& spec, unsigned threads) {
  validate(spec);
  const int reps = spec.kind == SweepKind::RandomEnsembleVsBeta ? spec.repetitions : 1;
  const std::size_t points = spec.grid.size();
  const std::size_t tasks = points * static_cast<std::size_t>(reps);
  std::vector<TaskOutcome> outcomes(tasks);

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&]() {
    for (;;) {
      const std::size_t task = next.fetch_add(1);
      if (task >= tasks) return;
      try {
        outcomes[task] = run_task(spec, task / static_cast<std::size_t>(reps),
                                  static_cast<int>(task % static_cast<std::size_t>(reps)));
      } catch (...) {
        const std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next.store(tasks);
        return;
      }
    }
  };
  const unsigned workers =
      static_cast<unsigned>(std::min<std::size_t>(std::max(1u, threads), tasks));
  if (workers <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned i = 0; i < workers; ++i) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);

  std::vector<SweepRecord> records;
  records.reserve(points);
  for (std::size_t p = 0; p < points; ++p) {
    SweepRecord rec;
    rec.point = spec.grid[p];
    const auto first = outcomes.begin() + static_cast<std::ptrdiff_t>(p * reps);
    const auto last = first + reps;
    rec.reachable = std::all_of(first, last, [](const TaskOutcome& o) { return o.reachable; });
    if (!rec.reachable) {
      rec.value = cap_value(spec);
      records.push_back(rec);
      continue;
    }
    double mean = 0.0;
    for (auto it = first; it != last; ++it) mean += it->value;
    mean /= reps;
    double spread = 0.0;
    if (reps > 1) {
      for (auto it = first; it != last; ++it) spread += (it->value - mean) * (it->value - mean);
      spread = std::sqrt(spread / (reps - 1) / reps);
    }
    rec.value = mean;
    rec.std_error = spread;
    records.push_back(rec);
  }
  return records;
}

}  // namespace ri
