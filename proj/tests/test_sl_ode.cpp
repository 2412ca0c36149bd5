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

#include <cmath>
#include <random>

#include "doctest.h"
#include "ri/collision.hpp"
#include "ri/models.hpp"
#include "ri/sl_ode.hpp"
#include "ri/spectral.hpp"

using ri::Complex;
using ri::RealVector;

namespace {

Complex random_complex(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-0.3, 0.3);
  return {u(rng), u(rng)};
}

}  // namespace

TEST_CASE("time step control") {
  CHECK(ri::default_time_step(2.0) == doctest::Approx(0.005));
  CHECK(std::isinf(ri::default_time_step(0.0)));
  CHECK(ri::checked_time_step(0.0, 4.0) == doctest::Approx(0.0025));
  CHECK(ri::checked_time_step(0.05, 2.0) == 0.05);
  try {
    ri::checked_time_step(0.2, 1.0);
    FAIL("expected StepTooLarge");
  } catch (const ri::Error& e) {
    CHECK(e.code() == ri::ErrorCode::StepTooLarge);
  }
  CHECK_THROWS_AS(ri::sl_evolve_populations(RealVector::Ones(3) / 3.0, 0.7, 1.0, 1.0, 0.5),
                  ri::Error);
}

TEST_CASE("rk4 integrates exponential decay to fourth order") {
  RealVector y = RealVector::Ones(1);
  auto f = [](const RealVector& v) -> RealVector { return -v; };
  for (int k = 0; k < 100; ++k) y = ri::rk4_step(y, f, 0.01);
  CHECK(y(0) == doctest::Approx(std::exp(-1.0)).epsilon(1e-10));
}

TEST_CASE("zero-temperature qutrit populations follow the closed form") {
  std::mt19937_64 rng(3);
  const RealVector p0 = ri::random_populations(3, rng);
  const double gamma = 1.7, t = 3.0 / gamma;
  const auto traj = ri::sl_evolve_populations(p0, 1.0, gamma, t);
  const RealVector& p = traj.populations.back();
  const double e = std::exp(-gamma * t);
  CHECK(traj.times.back() == doctest::Approx(t).epsilon(1e-14));
  CHECK(std::abs(p(0) - (1 - e * (p0(1) + p0(2) * (1 + gamma * t)))) <= 1e-8);
  CHECK(std::abs(p(1) - e * (p0(1) + gamma * t * p0(2))) <= 1e-8);
  CHECK(std::abs(p(2) - e * p0(2)) <= 1e-8);
}

TEST_CASE("population generator matches the explicit qutrit rates") {
  const double p = 0.8, gamma = 1.3;
  const RealVector q = (RealVector(3) << 0.2, 0.5, 0.3).finished();
  const RealVector rate = ri::liouvillian_matrix(3, p, gamma) * q;
  CHECK(rate(0) == doctest::Approx(gamma * (-q(0) * (1 - p) + q(1) * p)).epsilon(1e-15));
  CHECK(rate(1) == doctest::Approx(gamma * (q(0) * (1 - p) - q(1) + q(2) * p)).epsilon(1e-15));
  CHECK(rate(2) == doctest::Approx(gamma * (q(1) * (1 - p) - q(2) * p)).epsilon(1e-15));
}

TEST_CASE("zero rate leaves the state unchanged") {
  const RealVector p0 = (RealVector(4) << 0.1, 0.2, 0.3, 0.4).finished();
  const auto traj = ri::sl_evolve_populations(p0, 0.7, 0.0, 10.0);
  CHECK((traj.populations.back() - p0).cwiseAbs().maxCoeff() == 0.0);
  const auto coh = ri::sl_evolve_coherences_d3({Complex(0.1, 0.2), Complex(0.3, 0), Complex(0, 0.1)},
                                               0.7, 0.0, 10.0);
  CHECK(coh.coherences.back().c13 == Complex(0.3, 0));
}

TEST_CASE("population sum is conserved for any dimension") {
  std::mt19937_64 rng(5);
  for (int d : {2, 3, 6, 10}) {
    const RealVector p0 = ri::random_populations(d, rng);
    const auto traj = ri::sl_evolve_populations(p0, 0.62, 2.0, 200.0);
    for (const auto& p : traj.populations) CHECK(std::abs(p.sum() - 1.0) <= 1e-10);
    const RealVector target = ri::gibbs_populations({d, 1.0}, std::log(0.62 / 0.38));
    CHECK((traj.populations.back() - target).cwiseAbs().maxCoeff() <= 1e-6);
  }
}

TEST_CASE("zero-temperature coherences follow the closed form") {
  std::mt19937_64 rng(7);
  const ri::CoherencesD3 c0{random_complex(rng), random_complex(rng), random_complex(rng)};
  const double gamma = 0.9, t = 4.0;
  const auto c = ri::sl_evolve_coherences_d3(c0, 1.0, gamma, t).coherences.back();
  const double half = std::exp(-gamma * t / 2), full = std::exp(-gamma * t);
  CHECK(std::abs(c.c12 - (half * c0.c12 + 2.0 * (half - full) * c0.c23)) <= 1e-9);
  CHECK(std::abs(c.c13 - half * c0.c13) <= 1e-9);
  CHECK(std::abs(c.c23 - full * c0.c23) <= 1e-9);
}

TEST_CASE("coherence ODE is the small-step limit of the coherence recursion") {
  // J = 10, tau = 1e-2, omega tau -> 0.
  std::mt19937_64 rng(11);
  for (double p : {0.6, 0.85, 1.0}) {
    const ri::CoherencesD3 c0{random_complex(rng), random_complex(rng), random_complex(rng)};
    const auto ode = ri::sl_evolve_coherences_d3(c0, p, 1.0, 5.0, 1e-3);
    ri::CoherencesD3 c = c0;
    double worst = 0;
    for (int n = 1; n <= 500; ++n) {
      c = ri::step_coherences_d3(c, p, 0.1, 0.0);
      const auto& ref = ode.coherences[static_cast<std::size_t>(n) * 10];
      worst = std::max({worst, std::abs(c.c12 - ref.c12), std::abs(c.c13 - ref.c13),
                        std::abs(c.c23 - ref.c23)});
    }
    CHECK(worst <= 5e-3);
  }
}

TEST_CASE("non-conserving system reduces to the flip-flop equations when J2 = 0") {
  std::mt19937_64 rng(13);
  ri::QutritState s;
  s.populations = ri::random_populations(3, rng);
  s.coherences = {random_complex(rng), random_complex(rng), random_complex(rng)};
  const double p = 0.75, gamma = 1.4;
  const auto r = ri::sl_nonconserving_rate(s, p, {gamma, 0.0, 0.0});
  const RealVector pop_rate = ri::liouvillian_matrix(3, p, gamma) * s.populations;
  CHECK((r.populations - pop_rate).cwiseAbs().maxCoeff() <= 1e-15);
  const auto c = ri::sl_coherence_rate_d3(s.coherences, p, gamma);
  CHECK(std::abs(r.coherences.c12 - c.c12) <= 1e-15);
  CHECK(std::abs(r.coherences.c23 - c.c23) <= 1e-15);
}

TEST_CASE("non-conserving rates from couplings") {
  const auto rates = ri::NonConservingRates::from_couplings(2.0, 0.5, 0.1);
  CHECK(rates.gamma1 == doctest::Approx(0.4));
  CHECK(rates.gamma2 == doctest::Approx(0.025));
  CHECK(rates.gamma12 == doctest::Approx(0.1));
  CHECK(rates.max_rate() == doctest::Approx(0.4));
}

TEST_CASE("non-conserving dynamics settle on a nonzero long-range coherence") {
  // The slowest relaxation rate of this system is about 0.022, so integrate well past 1/0.022.
  const ri::NonConservingRates rates{1.0, 0.25, 0.5};
  const double p = ri::ground_population(1.0, 1.0);
  ri::QutritState s0;
  s0.populations = RealVector::Ones(3) / 3.0;
  const auto traj = ri::sl_evolve_nonconserving_d3(s0, p, rates, 1500.0);
  const auto& end = traj.states.back();
  CHECK(std::abs(end.populations.sum() - 1.0) <= 1e-10);
  const double c13 = ri::c13_steady_state(rates.gamma1, rates.gamma2, rates.gamma12, end.populations);
  CHECK(std::abs(end.coherences.c13.real() - c13) <= 1e-6);
  CHECK(std::abs(end.coherences.c13.imag()) <= 1e-10);
  CHECK(std::abs(c13) > 1e-3);
  const auto rate = ri::sl_nonconserving_rate(end, p, rates);
  CHECK(rate.populations.cwiseAbs().maxCoeff() <= 1e-9);
  CHECK(std::abs(rate.coherences.c13) <= 1e-9);
}

TEST_CASE("c13 steady state formula") {
  const RealVector p_star = (RealVector(3) << 0.5, 0.3, 0.2).finished();
  CHECK(ri::c13_steady_state(1.0, 0.5, 0.3, p_star) ==
        doctest::Approx(1.5 * 0.3 / 1.5 * (0.6 - 0.5 - 0.2)).epsilon(1e-15));
}
