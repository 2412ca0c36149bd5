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

#ifndef RI_ERROR_HPP
#define RI_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace ri {

enum class ErrorCode {
  NotHermitian,
  NoConvergence,
  DimensionMismatch,
  InvalidArgument,
  CapExceeded,
  SumNotZero,
  StepTooLarge,
  DegenerateTemperature,
  AmplitudeTooSmall,
  FrozenDynamics,
  OutOfDomain,
  EpsilonTooLarge,
  NoRootBelowCap,
  ConfigInvalid,
  IoError,
};

std::string_view to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

inline std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NotHermitian: return "NotHermitian";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::SumNotZero: return "SumNotZero";
    case ErrorCode::StepTooLarge: return "StepTooLarge";
    case ErrorCode::DegenerateTemperature: return "DegenerateTemperature";
    case ErrorCode::AmplitudeTooSmall: return "AmplitudeTooSmall";
    case ErrorCode::FrozenDynamics: return "FrozenDynamics";
    case ErrorCode::OutOfDomain: return "OutOfDomain";
    case ErrorCode::EpsilonTooLarge: return "EpsilonTooLarge";
    case ErrorCode::NoRootBelowCap: return "NoRootBelowCap";
    case ErrorCode::ConfigInvalid: return "ConfigInvalid";
    case ErrorCode::IoError: return "IoError";
  }
  return "Unknown";
}

}  // namespace ri

#endif  // RI_ERROR_HPP
