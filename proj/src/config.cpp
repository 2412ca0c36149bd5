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
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <map>
#include <numbers>
#include <set>
#include <sstream>
#include <string>

#include "ri/sweep.hpp"

namespace ri {
namespace {

[[noreturn]] void invalid(const std::string& message) {
  throw Error(ErrorCode::ConfigInvalid, message);
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

bool parse_plain_real(std::string_view text, double& out) {
  text = trim(text);
  if (text.empty()) return false;
  if (text.front() == '+') text.remove_prefix(1);
  const char* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, out);
  return ec == std::errc() && ptr == end;
}

template <typename Int>
Int parse_integer(std::string_view text, const std::string& field) {
  text = trim(text);
  Int value{};
  const char* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end || text.empty()) {
    invalid("field '" + field + "': expected an integer, got '" + std::string(text) + "'");
  }
  return value;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (;;) {
    const std::size_t pos = text.find(sep, start);
    parts.push_back(text.substr(start, pos == std::string_view::npos ? pos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

void require_field(bool ok, const std::string& field, const std::string& message) {
  if (!ok) invalid("field '" + field + "': " + message);
}

bool strictly_increasing(const std::vector<double>& v) {
  for (std::size_t i = 1; i < v.size(); ++i) {
    if (!(v[i] > v[i - 1])) return false;
  }
  return true;
}

RealVector parse_populations(std::string_view text) {
  const auto parts = split(text, ',');
  RealVector p(static_cast<Eigen::Index>(parts.size()));
  for (std::size_t i = 0; i < parts.size(); ++i) {
    p(static_cast<Eigen::Index>(i)) = parse_real(parts[i]);
  }
  return p;
}

}  // namespace

std::string_view to_string(SweepKind kind) noexcept {
  switch (kind) {
    case SweepKind::NstarVsJtau: return "nstar_vs_jtau";
    case SweepKind::NstarVsBeta: return "nstar_vs_beta";
    case SweepKind::TsimVsBeta: return "tsim_vs_beta";
    case SweepKind::TsimVsEpsilon: return "tsim_vs_epsilon";
    case SweepKind::RandomEnsembleVsBeta: return "random_ensemble_vs_beta";
  }
  return "unknown";
}

std::string_view to_string(Engine engine) noexcept {
  switch (engine) {
    case Engine::BruteForce: return "brute_force";
    case Engine::Recursion: return "recursion";
    case Engine::OdeSL: return "ode_sl";
  }
  return "unknown";
}

std::optional<SweepKind> parse_sweep_kind(std::string_view text) {
  const std::string key = lower(trim(text));
  for (SweepKind kind : {SweepKind::NstarVsJtau, SweepKind::NstarVsBeta, SweepKind::TsimVsBeta,
                         SweepKind::TsimVsEpsilon, SweepKind::RandomEnsembleVsBeta}) {
    if (key == to_string(kind)) return kind;
  }
  return std::nullopt;
}

std::optional<Engine> parse_engine(std::string_view text) {
  const std::string key = lower(trim(text));
  for (Engine engine : {Engine::BruteForce, Engine::Recursion, Engine::OdeSL}) {
    if (key == to_string(engine)) return engine;
  }
  return std::nullopt;
}

Engine default_engine(SweepKind kind) noexcept {
  switch (kind) {
    case SweepKind::NstarVsJtau:
    case SweepKind::NstarVsBeta: return Engine::Recursion;
    case SweepKind::TsimVsBeta:
    case SweepKind::TsimVsEpsilon: return Engine::OdeSL;
    case SweepKind::RandomEnsembleVsBeta: return Engine::BruteForce;
  }
  return Engine::Recursion;
}

double parse_real(std::string_view text) {
  const std::string s = lower(trim(text));
  std::string_view v = s;
  double value = 0.0;
  if (parse_plain_real(v, value)) return value;
  if (v == "inf" || v == "+inf" || v == "infinity") return std::numeric_limits<double>::infinity();

  // [coef[*]]pi[/den]
  double denominator = 1.0;
  const std::size_t slash = v.find('/');
  if (slash != std::string_view::npos) {
    if (!parse_plain_real(v.substr(slash + 1), denominator) || denominator == 0.0) {
      invalid("cannot parse real value '" + s + "'");
    }
    v = trim(v.substr(0, slash));
  }
  double numerator = 0.0;
  if (v.size() >= 2 && v.substr(v.size() - 2) == "pi") {
    std::string_view coef = trim(v.substr(0, v.size() - 2));
    if (!coef.empty() && coef.back() == '*') coef = trim(coef.substr(0, coef.size() - 1));
    double c = 1.0;
    if (coef == "-") {
      c = -1.0;
    } else if (!coef.empty() && !parse_plain_real(coef, c)) {
      invalid("cannot parse real value '" + s + "'");
    }
    numerator = c * std::numbers::pi;
  } else if (!parse_plain_real(v, numerator)) {
    invalid("cannot parse real value '" + s + "'");
  }
  return numerator / denominator;
}

std::vector<double> parse_grid(std::string_view text) {
  text = trim(text);
  std::vector<double> grid;
  if (text.find(':') != std::string_view::npos) {
    const auto parts = split(text, ':');
    if (parts.size() != 3) invalid("grid range must be start:stop:count");
    const double start = parse_real(parts[0]);
    const double stop = parse_real(parts[1]);
    const long count = parse_integer<long>(parts[2], "grid");
    if (count < 1) invalid("grid count must be >= 1");
    if (count == 1) return {start};
    const double step = (stop - start) / static_cast<double>(count - 1);
    for (long i = 0; i < count; ++i) {
      grid.push_back(i + 1 == count ? stop : start + static_cast<double>(i) * step);
    }
    return grid;
  }
  for (std::string_view part : split(text, ',')) {
    if (trim(part).empty()) invalid("grid has an empty entry");
    grid.push_back(parse_real(part));
  }
  return grid;
}

void validate(const SweepSpec& spec) {
  require_field(!spec.grid.empty(), "grid", "must not be empty");
  require_field(strictly_increasing(spec.grid), "grid", "must be strictly increasing");
  for (double x : spec.grid) require_field(!std::isnan(x), "grid", "contains NaN");
  require_field(spec.d >= 2, "d", "must be >= 2");
  require_field(std::isfinite(spec.omega) && spec.omega > 0, "omega", "must be positive");
  require_field(spec.epsilon > 0 && spec.epsilon < 1, "epsilon", "must lie in (0, 1)");
  require_field(spec.n_max >= 1, "n_max", "must be >= 1");
  require_field(spec.t_max > 0, "t_max", "must be positive");
  require_field(spec.repetitions >= 1, "repetitions", "must be >= 1");
  require_field(std::isfinite(spec.gamma) && spec.gamma > 0, "gamma", "must be positive");
  require_field(std::isfinite(spec.coupling) && spec.coupling > 0, "coupling",
                "must be positive");
  require_field(std::isfinite(spec.tau) && spec.tau > 0, "tau", "must be positive");
  require_field(spec.coupling_lo < spec.coupling_hi, "coupling_lo",
                "must be below coupling_hi");
  require_field(!std::isnan(spec.beta) && spec.beta >= 0, "beta", "must be >= 0");
  require_field(std::isfinite(spec.j_tau), "jtau", "must be finite");

  if (spec.initial_populations) {
    const RealVector& p = *spec.initial_populations;
    require_field(p.size() == spec.d, "initial", "needs exactly d populations");
    require_field(p.allFinite() && p.minCoeff() >= 0, "initial", "populations must be >= 0");
    require_field(std::abs(p.sum() - 1.0) <= 1e-9, "initial", "populations must sum to 1");
  }

  switch (spec.kind) {
    case SweepKind::NstarVsJtau:
      for (double x : spec.grid) {
        require_field(std::isfinite(x) && x > 0, "grid", "J tau values must be positive");
      }
      break;
    case SweepKind::NstarVsBeta:
    case SweepKind::TsimVsBeta:
    case SweepKind::RandomEnsembleVsBeta:
      for (double x : spec.grid) require_field(x >= 0, "grid", "beta values must be >= 0");
      break;
    case SweepKind::TsimVsEpsilon:
      for (double x : spec.grid) {
        require_field(x > 0 && x < 1, "grid", "epsilon values must lie in (0, 1)");
      }
      break;
  }

  const bool counts = spec.kind == SweepKind::NstarVsJtau || spec.kind == SweepKind::NstarVsBeta;
  if (counts) {
    require_field(spec.engine != Engine::OdeSL, "engine",
                  "collision counts need brute_force or recursion");
  }
  if (spec.kind == SweepKind::RandomEnsembleVsBeta) {
    require_field(spec.engine == Engine::BruteForce, "engine",
                  "random interactions need brute_force");
  }
}

SweepSpec parse_config(std::string_view text) {
  static const std::set<std::string> kKnown = {
      "kind",    "grid",        "d",           "omega",   "beta",   "jtau",
      "coupling", "gamma",      "epsilon",     "tau",     "coupling_lo", "coupling_hi",
      "n_max",   "t_max",       "initial",     "engine",  "seed",   "repetitions"};
  std::map<std::string, std::pair<std::string, int>> entries;

  int line_number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t end = text.find('\n', start);
    std::string_view line =
        text.substr(start, end == std::string_view::npos ? std::string_view::npos : end - start);
    start = (end == std::string_view::npos) ? text.size() + 1 : end + 1;
    ++line_number;
    const std::size_t hash = line.find('#');
    if (hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const std::size_t eq = line.find('=');
    const std::string where = "line " + std::to_string(line_number);
    if (eq == std::string_view::npos) invalid(where + ": expected 'key = value'");
    const std::string key = lower(trim(line.substr(0, eq)));
    const std::string value(trim(line.substr(eq + 1)));
    if (key.empty()) invalid(where + ": missing key");
    if (!kKnown.count(key)) invalid(where + ": unknown key '" + key + "'");
    if (value.empty()) invalid(where + ": key '" + key + "' has no value");
    if (entries.count(key)) invalid(where + ": duplicate key '" + key + "'");
    entries[key] = {value, line_number};
  }

  SweepSpec spec;
  auto with_line = [&entries](const std::string& key, auto&& apply) {
    const auto it = entries.find(key);
    if (it == entries.end()) return;
    try {
      apply(it->second.first);
    } catch (const Error& e) {
      invalid("line " + std::to_string(it->second.second) + ": key '" + key + "': " + e.what());
    }
  };

  if (!entries.count("kind")) invalid("missing required key 'kind'");
  if (!entries.count("grid")) invalid("missing required key 'grid'");
  with_line("kind", [&](const std::string& v) {
    const auto kind = parse_sweep_kind(v);
    if (!kind) invalid("unknown sweep kind '" + v + "'");
    spec.kind = *kind;
  });
  spec.engine = default_engine(spec.kind);
  with_line("grid", [&](const std::string& v) { spec.grid = parse_grid(v); });
  with_line("d", [&](const std::string& v) { spec.d = parse_integer<int>(v, "d"); });
  with_line("omega", [&](const std::string& v) { spec.omega = parse_real(v); });
  with_line("beta", [&](const std::string& v) { spec.beta = parse_real(v); });
  with_line("jtau", [&](const std::string& v) { spec.j_tau = parse_real(v); });
  with_line("coupling", [&](const std::string& v) { spec.coupling = parse_real(v); });
  with_line("gamma", [&](const std::string& v) { spec.gamma = parse_real(v); });
  with_line("epsilon", [&](const std::string& v) { spec.epsilon = parse_real(v); });
  with_line("tau", [&](const std::string& v) { spec.tau = parse_real(v); });
  with_line("coupling_lo", [&](const std::string& v) { spec.coupling_lo = parse_real(v); });
  with_line("coupling_hi", [&](const std::string& v) { spec.coupling_hi = parse_real(v); });
  with_line("n_max", [&](const std::string& v) { spec.n_max = parse_integer<long>(v, "n_max"); });
  with_line("t_max", [&](const std::string& v) { spec.t_max = parse_real(v); });
  with_line("seed",
            [&](const std::string& v) { spec.seed = parse_integer<std::uint64_t>(v, "seed"); });
  with_line("repetitions", [&](const std::string& v) {
    spec.repetitions = parse_integer<int>(v, "repetitions");
  });
  with_line("engine", [&](const std::string& v) {
    const auto engine = parse_engine(v);
    if (!engine) invalid("unknown engine '" + v + "'");
    spec.engine = *engine;
  });
  with_line("initial", [&](const std::string& v) {
    if (lower(v) == "maximally_mixed") {
      spec.initial_populations.reset();
    } else {
      spec.initial_populations = parse_populations(v);
    }
  });

  validate(spec);
  return spec;
}

SweepSpec load_config(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::IoError, "cannot open config '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw Error(ErrorCode::IoError, "cannot read config '" + path + "'");
  return parse_config(buffer.str());
}

}  // namespace ri
