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

#ifndef RI_LAMBERT_HPP
#define RI_LAMBERT_HPP

namespace ri {

enum class LambertBranch { Principal, LowerMinusOne };

// Real branches of the inverse of w -> w e^w. Principal: z >= -1/e, w >= -1.
// LowerMinusOne: -1/e <= z < 0, w <= -1. OutOfDomain otherwise.
double lambert_w(LambertBranch branch, double z);

// W_{-1}(z) for z = -exp(log_neg_z), usable when |z| underflows. Requires log_neg_z <= -1.
double lambert_wm1_from_log(double log_neg_z);

}  // namespace ri

#endif  // RI_LAMBERT_HPP
