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

#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>
#include <string>

#include "ri/sweep.hpp"

namespace ri {
namespace {

constexpr const char* kHeader = "point,value,stderr,reachable";

std::string format_number(double x) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.12g", x);
  return buffer;
}

}  // namespace

std::string format_csv(const std::vector<SweepRecord>& records) {
  std::string out = std::string(kHeader) + "\n";
  for (const SweepRecord& r : records) {
    out += format_number(r.point) + "," + format_number(r.value) + "," +
           format_number(r.std_error) + "," + (r.reachable ? "true" : "false") + "\n";
  }
  return out;
}

void emit_csv(const std::vector<SweepRecord>& records, std::ostream& out) {
  out << format_csv(records);
  out.flush();
  if (!out) throw Error(ErrorCode::IoError, "failed to write CSV output");
}

void emit_csv(const std::vector<SweepRecord>& records, const std::string& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::IoError, "cannot open '" + path + "' for writing");
  emit_csv(records, out);
}

std::vector<SweepRecord> parse_csv(std::string_view text) {
  std::vector<SweepRecord> records;
  std::istringstream in{std::string(text)};
  std::string line;
  if (!std::getline(in, line) || line != kHeader) {
    throw Error(ErrorCode::InvalidArgument, "CSV header must be '" + std::string(kHeader) + "'");
  }
  int line_number = 1;
  while (std::getline(in, line)) {
    ++line_number;
    if (line.empty()) continue;
    std::istringstream fields(line);
    std::string point, value, err, reachable;
    if (!std::getline(fields, point, ',') || !std::getline(fields, value, ',') ||
        !std::getline(fields, err, ',') || !std::getline(fields, reachable)) {
      throw Error(ErrorCode::InvalidArgument,
                  "CSV line " + std::to_string(line_number) + " needs four fields");
    }
    if (reachable != "true" && reachable != "false") {
      throw Error(ErrorCode::InvalidArgument,
                  "CSV line " + std::to_string(line_number) + ": reachable must be true/false");
    }
    records.push_back({parse_real(point), parse_real(value), parse_real(err),
                       reachable == "true"});
  }
  return records;
}

}  // namespace ri
