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

#ifndef RI_SWEEP_HPP
#define RI_SWEEP_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ri/linalg.hpp"
#include "ri/sim_time.hpp"

namespace ri {

enum class SweepKind { NstarVsJtau, NstarVsBeta, TsimVsBeta, TsimVsEpsilon, RandomEnsembleVsBeta };

std::string_view to_string(SweepKind kind) noexcept;
std::string_view to_string(Engine engine) noexcept;
std::optional<SweepKind> parse_sweep_kind(std::string_view text);
std::optional<Engine> parse_engine(std::string_view text);

struct SweepSpec {
  SweepKind kind = SweepKind::NstarVsBeta;
  std::vector<double> grid;  // strictly increasing

  int d = 3;
  double omega = 1.0;
  double beta = 10.0;              // fixed side for Jτ and ε sweeps
  double j_tau = 1.5707963267948966;  // fixed side for β sweeps
  double coupling = 1e-3;          // J; tau = Jτ / J
  double gamma = 1.0;              // SL rate, tau = gamma / J^2 for discrete time sweeps
  double epsilon = 1e-4;
  double tau = 100.0;              // random ensembles only
  double coupling_lo = 1e-3;       // random ensembles only
  double coupling_hi = 3.141592653589793e-3;
  long n_max = 100000;
  double t_max = 1e4;
  std::optional<RealVector> initial_populations;  // maximally mixed when empty

  Engine engine = Engine::Recursion;
  std::uint64_t seed = 0;
  int repetitions = 1;
};

struct SweepRecord {
  double point = 0.0;
  double value = 0.0;   // n*, T_sim or ensemble mean; the cap when unreachable
  double std_error = 0.0;  // ensembles only
  bool reachable = true;
};

// Engine defaults per kind: Recursion for collision counts, OdeSL for times,
// BruteForce for random ensembles.
Engine default_engine(SweepKind kind) noexcept;

// ConfigInvalid with the offending line or field.
void validate(const SweepSpec& spec);

// Flat `key = value` text with `#` comments. Grids: `start:stop:count` or `a, b, c`.
// Reals accept `inf` and multiples of `pi` such as `pi/2` or `3*pi/8`.
SweepSpec parse_config(std::string_view text);
SweepSpec load_config(const std::string& path);

std::vector<double> parse_grid(std::string_view text);
double parse_real(std::string_view text);

// Deterministic in (spec, seed) for any thread count.
std::vector<SweepRecord> run_sweep(const SweepSpec& spec, unsigned threads = 1);

void emit_csv(const std::vector<SweepRecord>& records, std::ostream& out);
void emit_csv(const std::vector<SweepRecord>& records, const std::string& path);
std::string format_csv(const std::vector<SweepRecord>& records);
std::vector<SweepRecord> parse_csv(std::string_view text);

// Thread count: RI_THERMALIZER_THREADS when set, else the requested value (0 = hardware).
unsigned resolve_thread_count(unsigned requested);

}  // namespace ri

#endif  // RI_SWEEP_HPP
