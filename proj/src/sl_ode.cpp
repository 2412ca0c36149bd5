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

#include "ri/sl_ode.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "ri/spectral.hpp"

namespace ri {
namespace {

void require(bool ok, ErrorCode code, const std::string& message) {
  if (!ok) throw Error(code, message);
}

struct StepPlan {
  long steps;
  double h;
};

StepPlan plan_steps(double t_end, double dt, double gamma_max) {
  require(std::isfinite(t_end) && t_end >= 0.0, ErrorCode::InvalidArgument,
          "end time must be finite and >= 0");
  const double step = checked_time_step(dt, gamma_max);
  if (t_end == 0.0) return {0, 0.0};
  const long steps = std::max(1L, static_cast<long>(std::ceil(t_end / step - 1e-9)));
  return {steps, t_end / static_cast<double>(steps)};
}

ComplexVector pack(const CoherencesD3& c) {
  ComplexVector v(3);
  v << c.c12, c.c13, c.c23;
  return v;
}

CoherencesD3 unpack_coherences(const ComplexVector& v) { return {v(0), v(1), v(2)}; }

ComplexVector pack(const QutritState& s) {
  ComplexVector v(6);
  v << s.populations(0), s.populations(1), s.populations(2), s.coherences.c12,
      s.coherences.c13, s.coherences.c23;
  return v;
}

QutritState unpack_state(const ComplexVector& v) {
  QutritState s;
  s.populations = v.head(3).real();
  s.coherences = {v(3), v(4), v(5)};
  return s;
}

}  // namespace

double default_time_step(double gamma_max) {
  if (gamma_max <= 0.0) return std::numeric_limits<double>::infinity();
  return 0.01 / gamma_max;
}

double checked_time_step(double dt, double gamma_max) {
  require(gamma_max >= 0.0, ErrorCode::InvalidArgument, "rates must be >= 0");
  if (dt <= 0.0) return default_time_step(gamma_max);
  require(dt * gamma_max <= 0.1, ErrorCode::StepTooLarge,
          "dt * rate = " + std::to_string(dt * gamma_max) + " exceeds 0.1");
  return dt;
}

PopulationOdeTrajectory sl_evolve_populations(const RealVector& p0, double p_ancilla,
                                              double gamma, double t_end, double dt) {
  const RealMatrix generator = liouvillian_matrix(static_cast<int>(p0.size()), p_ancilla, gamma);
  const StepPlan plan = plan_steps(t_end, dt, gamma);
  auto rate = [&generator](const RealVector& p) -> RealVector { return generator * p; };
  PopulationOdeTrajectory out;
  out.times.reserve(static_cast<std::size_t>(plan.steps) + 1);
  out.populations.reserve(static_cast<std::size_t>(plan.steps) + 1);
  out.times.push_back(0.0);
  out.populations.push_back(p0);
  for (long k = 1; k <= plan.steps; ++k) {
    out.populations.push_back(rk4_step(out.populations.back(), rate, plan.h));
    out.times.push_back(plan.h * static_cast<double>(k));
  }
  return out;
}

CoherencesD3 sl_coherence_rate_d3(const CoherencesD3& c, double p_ancilla, double gamma) {
  CoherencesD3 r;
  r.c12 = gamma * (-0.5 * (2.0 - p_ancilla) * c.c12 + p_ancilla * c.c23);
  r.c13 = -0.5 * gamma * c.c13;
  r.c23 = gamma * ((1.0 - p_ancilla) * c.c12 - 0.5 * (1.0 + p_ancilla) * c.c23);
  return r;
}

CoherenceOdeTrajectory sl_evolve_coherences_d3(const CoherencesD3& c0, double p_ancilla,
                                               double gamma, double t_end, double dt) {
  const StepPlan plan = plan_steps(t_end, dt, gamma);
  auto rate = [&](const ComplexVector& v) -> ComplexVector {
    return pack(sl_coherence_rate_d3(unpack_coherences(v), p_ancilla, gamma));
  };
  CoherenceOdeTrajectory out;
  out.times.push_back(0.0);
  out.coherences.push_back(c0);
  ComplexVector y = pack(c0);
  for (long k = 1; k <= plan.steps; ++k) {
    y = rk4_step(y, rate, plan.h);
    out.times.push_back(plan.h * static_cast<double>(k));
    out.coherences.push_back(unpack_coherences(y));
  }
  return out;
}

double NonConservingRates::max_rate() const {
  return std::max({gamma1, gamma2, std::abs(gamma12)});
}

QutritState sl_nonconserving_rate(const QutritState& s, double p_ancilla,
                                  const NonConservingRates& rates) {
  const double g1 = rates.gamma1;
  const double g2 = rates.gamma2;
  const double g12 = rates.gamma12;
  const double q = 1.0 - p_ancilla;
  const double p1 = s.populations(0);
  const double p2 = s.populations(1);
  const double p3 = s.populations(2);
  const Complex c12 = s.coherences.c12;
  const Complex c13 = s.coherences.c13;
  const Complex c23 = s.coherences.c23;
  const double re13 = c13.real();

  // Upward (1 -> 2, 2 -> 3) and downward (2 -> 1, 3 -> 2) transfer rates.
  const double up = g1 * q + g2 * p_ancilla;
  const double down = g2 * q + g1 * p_ancilla;

  QutritState r;
  r.populations(0) = -up * p1 + down * p2 - g12 * re13;
  r.populations(1) = up * p1 - (g1 + g2) * p2 + down * p3 + 2.0 * g12 * re13;
  r.populations(2) = up * p2 - down * p3 - g12 * re13;
  r.coherences.c13 = 0.5 * g12 * (2.0 * p2 - p1 - p3) - (g1 + g2) * c13 / 3.0;
  r.coherences.c12 = down * c23 -
                     0.5 * c12 * (g1 * (2.0 - p_ancilla) + g2 * (1.0 + p_ancilla)) +
                     0.5 * g12 * (2.0 * std::conj(c12) - std::conj(c23));
  r.coherences.c23 = up * c12 -
                     0.5 * c23 * (g2 * (2.0 - p_ancilla) + g1 * (1.0 + p_ancilla)) -
                     0.5 * g12 * (std::conj(c12) - 2.0 * std::conj(c23));
  return r;
}

QutritOdeTrajectory sl_evolve_nonconserving_d3(const QutritState& s0, double p_ancilla,
                                               const NonConservingRates& rates, double t_end,
                                               double dt) {
  require(s0.populations.size() == 3, ErrorCode::DimensionMismatch, "need three populations");
  require(rates.gamma1 >= 0.0 && rates.gamma2 >= 0.0, ErrorCode::InvalidArgument,
          "rates must be >= 0");
  const StepPlan plan = plan_steps(t_end, dt, rates.max_rate());
  auto rate = [&](const ComplexVector& v) -> ComplexVector {
    return pack(sl_nonconserving_rate(unpack_state(v), p_ancilla, rates));
  };
  QutritOdeTrajectory out;
  out.times.push_back(0.0);
  out.states.push_back(s0);
  ComplexVector y = pack(s0);
  for (long k = 1; k <= plan.steps; ++k) {
    y = rk4_step(y, rate, plan.h);
    out.times.push_back(plan.h * static_cast<double>(k));
    out.states.push_back(unpack_state(y));
  }
  return out;
}

}  // namespace ri
