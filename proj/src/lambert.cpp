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

#include "ri/lambert.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "ri/error.hpp"

namespace ri {
namespace {

// 1/e split into a leading double and its rounding remainder.
constexpr double kInvEHi = 0.36787944117144233;
constexpr double kInvELo = -1.2428753672788363e-17;
constexpr double kE = 2.718281828459045;

double distance_to_branch_point(double z) { return (z + kInvEHi) + kInvELo; }

// Expansion about the branch point in p = +-sqrt(2 (1 + e z)).
double branch_point_series(double p) {
  static constexpr double c[] = {-1.0,
                                 1.0,
                                 -1.0 / 3.0,
                                 11.0 / 72.0,
                                 -43.0 / 540.0,
                                 769.0 / 17280.0,
                                 -221.0 / 8505.0,
                                 680863.0 / 43545600.0,
                                 -1963.0 / 204120.0};
  double w = 0.0;
  for (int k = 8; k >= 0; --k) w = w * p + c[k];
  return w;
}

double halley(double w, double z) {
  for (int iter = 0; iter < 64; ++iter) {
    const double ew = std::exp(w);
    const double f = w * ew - z;
    const double wp1 = w + 1.0;
    if (wp1 == 0.0 || f == 0.0) break;
    const double denom = ew * wp1 - (w + 2.0) * f / (2.0 * wp1);
    const double step = f / denom;
    w -= step;
    if (std::abs(step) <= 4.0 * std::numeric_limits<double>::epsilon() * (1.0 + std::abs(w))) {
      break;
    }
  }
  return w;
}

double principal(double z) {
  if (z == 0.0) return 0.0;
  const double q = distance_to_branch_point(z);
  const double p = std::sqrt(std::max(0.0, 2.0 * kE * q));
  if (q < 1e-6) return branch_point_series(p);
  double w;
  if (z < 1.0) {
    w = (z < -0.25) ? branch_point_series(p) : std::log1p(z);
  } else {
    const double l1 = std::log(z);
    const double l2 = std::log(l1 > 1.0 ? l1 : 1.0);
    w = l1 - l2 + (l1 > 1.0 ? l2 / l1 : 0.0);
  }
  return halley(w, z);
}

double lower_branch(double z) {
  const double q = distance_to_branch_point(z);
  const double p = -std::sqrt(std::max(0.0, 2.0 * kE * q));
  if (q < 1e-6) return branch_point_series(p);
  double w;
  if (z < -0.25) {
    w = branch_point_series(p);
  } else {
    const double l1 = std::log(-z);
    const double l2 = std::log(-l1);
    w = l1 - l2 + l2 / l1;
  }
  return halley(w, z);
}

}  // namespace

double lambert_w(LambertBranch branch, double z) {
  if (std::isnan(z)) throw Error(ErrorCode::OutOfDomain, "Lambert W of NaN");
  // A few ulps below -1/e are treated as the branch point itself.
  const double q = distance_to_branch_point(z);
  if (q < -8.0 * std::numeric_limits<double>::epsilon() * kInvEHi) {
    throw Error(ErrorCode::OutOfDomain,
                "Lambert W argument " + std::to_string(z) + " is below -1/e");
  }
  if (branch == LambertBranch::Principal) {
    if (std::isinf(z)) return z;
    return principal(z);
  }
  if (z >= 0.0) {
    throw Error(ErrorCode::OutOfDomain, "lower Lambert branch needs z < 0");
  }
  return lower_branch(z);
}

double lambert_wm1_from_log(double log_neg_z) {
  if (std::isnan(log_neg_z) || log_neg_z > -1.0 + 1e-14) {
    throw Error(ErrorCode::OutOfDomain, "log(-z) = " + std::to_string(log_neg_z) + " > -1");
  }
  if (log_neg_z >= -1.0) return -1.0;
  if (log_neg_z > -700.0) return lambert_w(LambertBranch::LowerMinusOne, -std::exp(log_neg_z));
  // Solve w + log(-w) = log(-z) by Newton; far from the branch point this is well conditioned.
  double w = log_neg_z - std::log(-log_neg_z);
  for (int iter = 0; iter < 64; ++iter) {
    const double g = w + std::log(-w) - log_neg_z;
    const double step = g / (1.0 + 1.0 / w);
    w -= step;
    if (std::abs(step) <= 4.0 * std::numeric_limits<double>::epsilon() * std::abs(w)) break;
  }
  return w;
}

}  // namespace ri
