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

#include "ri/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

namespace ri {
namespace {

void require(bool ok, ErrorCode code, const std::string& message) {
  if (!ok) throw Error(code, message);
}

void require_levels(int d) {
  require(d >= 2, ErrorCode::InvalidArgument, "need d >= 2, got " + std::to_string(d));
}

// Tridiagonal matrix with constant interior diagonal and distinct corner entries.
RealMatrix banded(int d, double top, double interior, double bottom, double upper,
                  double lower) {
  RealMatrix m = RealMatrix::Zero(d, d);
  for (int k = 0; k < d; ++k) {
    m(k, k) = interior;
    if (k + 1 < d) {
      m(k, k + 1) = upper;
      m(k + 1, k) = lower;
    }
  }
  m(0, 0) = top;
  m(d - 1, d - 1) = bottom;
  return m;
}

// Eigenvalues of the symmetric tridiagonal (diag, off) strictly below x.
int sturm_count(const RealVector& diag, const RealVector& off_sq, double x, double pivot_floor) {
  int count = 0;
  double q = diag(0) - x;
  for (Eigen::Index k = 0;; ++k) {
    if (q == 0.0) q = -pivot_floor;
    if (q < 0.0) ++count;
    if (k + 1 == diag.size()) break;
    q = diag(k + 1) - x - off_sq(k) / q;
  }
  return count;
}

RealVector qutrit_gibbs(double p_ancilla) {
  const double z = 1.0 - p_ancilla + p_ancilla * p_ancilla;
  RealVector p(3);
  p << p_ancilla * p_ancilla, p_ancilla * (1.0 - p_ancilla),
      (1.0 - p_ancilla) * (1.0 - p_ancilla);
  return p / z;
}

}  // namespace

double thermal_mixing(double p_ancilla) {
  return std::sqrt(std::max(0.0, p_ancilla * (1.0 - p_ancilla)));
}

RealMatrix stochastic_matrix(int d, double p_ancilla, double j_tau) {
  require_levels(d);
  const EtaCoefficients eta = eta_coefficients(p_ancilla, j_tau);
  return banded(d, eta.eta11, eta.eta22, eta.eta33, eta.eta12, eta.eta21);
}

RealMatrix liouvillian_matrix(int d, double p_ancilla, double gamma) {
  require_levels(d);
  return banded(d, -gamma * (1.0 - p_ancilla), -gamma, -gamma * p_ancilla, gamma * p_ancilla,
                gamma * (1.0 - p_ancilla));
}

RealVector xi_closed(int d, double p_ancilla, double j_tau) {
  require_levels(d);
  const MixingFactors f = mixing_factors(j_tau);
  const double theta = thermal_mixing(p_ancilla);
  RealVector xi(d);
  xi(0) = 1.0;
  for (int m = 1; m < d; ++m) {
    xi(m) = f.lambda_up + 2.0 * theta * f.lambda_down * std::cos(m * std::numbers::pi / d);
  }
  return xi;
}

RealVector lambda_closed(int d, double p_ancilla, double gamma) {
  require_levels(d);
  const double theta = thermal_mixing(p_ancilla);
  RealVector lambda(d);
  lambda(0) = 0.0;
  for (int m = 1; m < d; ++m) {
    lambda(m) = -gamma * (1.0 - 2.0 * theta * std::cos(m * std::numbers::pi / d));
  }
  return lambda;
}

RealVector tridiagonal_spectrum(const RealMatrix& m) {
  require(m.rows() == m.cols() && m.rows() >= 1, ErrorCode::DimensionMismatch,
          "tridiagonal_spectrum expects a square matrix");
  const Eigen::Index n = m.rows();
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      if (std::abs(i - j) > 1) {
        require(m(i, j) == 0.0, ErrorCode::InvalidArgument, "matrix is not tridiagonal");
      }
    }
  }
  RealVector diag = m.diagonal();
  RealVector off_sq = RealVector::Zero(std::max<Eigen::Index>(n - 1, 1));
  RealVector off = RealVector::Zero(n);
  for (Eigen::Index k = 0; k + 1 < n; ++k) {
    const double product = m(k, k + 1) * m(k + 1, k);
    require(product >= 0.0, ErrorCode::InvalidArgument,
            "off-diagonal products must be non-negative");
    off_sq(k) = product;
    off(k) = std::sqrt(product);
  }

  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  for (Eigen::Index k = 0; k < n; ++k) {
    const double radius = off(k) + (k > 0 ? off(k - 1) : 0.0);
    lo = std::min(lo, diag(k) - radius);
    hi = std::max(hi, diag(k) + radius);
  }
  const double scale = std::max({std::abs(lo), std::abs(hi), 1e-300});
  lo -= 1e-12 * scale;
  hi += 1e-12 * scale;
  const double pivot_floor = std::numeric_limits<double>::epsilon() * scale;

  RealVector ascending(n);
  for (Eigen::Index k = 0; k < n; ++k) {
    double left = lo;
    double right = hi;
    for (int iter = 0; iter < 200; ++iter) {
      const double mid = 0.5 * (left + right);
      if (mid <= left || mid >= right) break;
      if (sturm_count(diag, off_sq, mid, pivot_floor) >= k + 1) {
        right = mid;
      } else {
        left = mid;
      }
    }
    ascending(k) = 0.5 * (left + right);
  }
  return ascending.reverse();
}

SlowModeSummary slow_mode_projection(const RealVector& delta_p0, double p_ancilla) {
  require(delta_p0.size() == 3, ErrorCode::DimensionMismatch,
          "slow-mode projection is defined for qutrits");
  require(std::abs(delta_p0.sum()) <= 1e-12, ErrorCode::SumNotZero,
          "population deviation sums to " + std::to_string(delta_p0.sum()));
  require(p_ancilla > 0.0 && p_ancilla <= 1.0, ErrorCode::InvalidArgument,
          "ancilla ground population must lie in (0, 1]");
  const double theta = thermal_mixing(p_ancilla);
  require(theta > 0.0 && p_ancilla < 1.0, ErrorCode::DegenerateTemperature,
          "slow and fast modes coincide at zero temperature");
  const double ratio = p_ancilla / theta;

  SlowModeSummary s;
  s.theta = theta;
  s.eigenvalues.resize(3);
  s.eigenvalues << 0.0, -(1.0 - theta), -(1.0 + theta);
  s.right_modes.resize(3, 3);
  s.right_modes.col(0) = qutrit_gibbs(p_ancilla);
  s.right_modes.col(1) << -ratio, -1.0 + ratio, 1.0;
  s.right_modes.col(2) << ratio, -1.0 - ratio, 1.0;

  auto left_mode = [p_ancilla](double t) {
    RealVector u(3);
    u << -(1.0 - p_ancilla) * t / p_ancilla, -1.0 + p_ancilla + t, p_ancilla;
    return RealVector(u / (2.0 * (1.0 - t)));
  };
  s.left_slow = left_mode(theta);
  const RealVector left_fast = left_mode(-theta);

  s.coefficients.resize(3);
  s.coefficients << 0.0, s.left_slow.dot(delta_p0), left_fast.dot(delta_p0);
  s.alpha2 = s.coefficients(1);
  const double p2_star = s.right_modes(1, 0);
  const double magnitude = std::abs(s.alpha2);
  s.amplitude_sl = magnitude * (p2_star + 2.0 * theta / (1.0 - p_ancilla));
  s.amplitude_discrete = magnitude * (std::abs(p2_star) + std::abs(-1.0 + ratio) +
                                      std::abs(-1.0 - ratio));
  return s;
}

double tsim_estimate_sl(const RealVector& delta_p0, double p_ancilla, double gamma,
                        double epsilon) {
  require(gamma > 0.0, ErrorCode::InvalidArgument, "rate must be positive");
  const SlowModeSummary s = slow_mode_projection(delta_p0, p_ancilla);
  require(s.amplitude_sl > 2.0 * epsilon, ErrorCode::AmplitudeTooSmall,
          "slow-mode amplitude " + std::to_string(s.amplitude_sl) + " <= 2 epsilon");
  return -std::log(2.0 * epsilon / s.amplitude_sl) / (gamma * (1.0 - s.theta));
}

double nstar_estimate_discrete(const RealVector& delta_p0, double p_ancilla, double j_tau,
                               double epsilon) {
  const MixingFactors f = mixing_factors(j_tau);
  require(f.lambda_down > 1e-14, ErrorCode::FrozenDynamics,
          "J tau is a multiple of pi; populations do not evolve");
  const SlowModeSummary s = slow_mode_projection(delta_p0, p_ancilla);
  require(s.amplitude_discrete > 2.0 * epsilon, ErrorCode::AmplitudeTooSmall,
          "slow-mode amplitude " + std::to_string(s.amplitude_discrete) + " <= 2 epsilon");
  const double xi2 = f.lambda_up + s.theta * f.lambda_down;
  return std::log(2.0 * epsilon / s.amplitude_discrete) / std::log(xi2);
}

double c13_steady_state(double gamma1, double gamma2, double gamma12,
                        const RealVector& p_star) {
  require(p_star.size() == 3, ErrorCode::DimensionMismatch, "need three populations");
  require(gamma1 + gamma2 > 0.0, ErrorCode::InvalidArgument, "total rate must be positive");
  return 1.5 * gamma12 / (gamma1 + gamma2) * (2.0 * p_star(1) - p_star(0) - p_star(2));
}

}  // namespace ri
