// Copyright Contributors to the walshlab Project
// SPDX-License-Identifier: Apache-2.0

#include "walshlab/signal.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "walshlab/summability.hpp"
#include "walshlab/systems.hpp"

namespace walshlab {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = s.find(sep, start);
    if (pos == std::string::npos) {
      parts.push_back(s.substr(start));
      return parts;
    }
    parts.push_back(s.substr(start, pos - start));
    start = pos + 1;
  }
}

double parse_double(const std::string& s, const char* what) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    throw std::invalid_argument(std::string("signal: bad ") + what + " '" + s + "'");
  }
  if (used != s.size()) {
    throw std::invalid_argument(std::string("signal: trailing junk in ") + what + " '" + s + "'");
  }
  return v;
}

std::uint64_t parse_uint(const std::string& s, const char* what) {
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos) {
    throw std::invalid_argument(std::string("signal: bad ") + what + " '" + s + "'");
  }
  return std::stoull(s);
}

// splitmix64; fixed here so seeded signals are identical on every platform.
std::uint64_t next_random(std::uint64_t& state) {
  state += 0x9e3779b97f4a7c15ull;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

}  // namespace

SignalSpec SignalSpec::parse(const std::string& text) {
  const std::size_t colon = text.find(':');
  const std::string name = text.substr(0, colon);
  static const char* known[] = {"constant", "indicator", "walsh",  "kaczmarz",
                                "dirichlet", "step",      "random"};
  if (std::find_if(std::begin(known), std::end(known),
                   [&](const char* k) { return name == k; }) == std::end(known)) {
    throw std::invalid_argument("signal: unknown generator '" + name + "'");
  }
  return SignalSpec{text};
}

GridFunction random_grid_function(Resolution res, std::uint64_t seed) {
  std::uint64_t state = seed;
  std::vector<double> values(res.cells());
  for (double& v : values) {
    // 53 random bits mapped to [-1, 1]
    v = std::ldexp(static_cast<double>(next_random(state) >> 11), -52) - 1.0;
  }
  return GridFunction(res, std::move(values));
}

GridFunction build_signal(const SignalSpec& spec, Resolution res) {
  const std::size_t colon = spec.text.find(':');
  const std::string name = spec.text.substr(0, colon);
  const std::string args = colon == std::string::npos ? "" : spec.text.substr(colon + 1);

  if (name == "constant") {
    return GridFunction::constant(res, parse_double(args, "constant value"));
  }
  if (name == "indicator") {
    const auto parts = split(args, ':');
    if (parts.size() != 2) throw std::invalid_argument("signal: indicator wants level:prefix");
    const auto level = parse_uint(parts[0], "level");
    const auto prefix = parse_uint(parts[1], "prefix");
    return GridFunction::indicator(res, DyadicInterval(static_cast<int>(level), prefix));
  }
  if (name == "walsh" || name == "kaczmarz") {
    const auto n = parse_uint(args, "function index");
    const SystemKind system = name == "walsh" ? SystemKind::Walsh : SystemKind::Kaczmarz;
    return system_function(system, n, res);
  }
  if (name == "dirichlet") {
    const auto n = parse_uint(args, "kernel order");
    return dirichlet_kernel(n, SystemKind::Walsh, res);
  }
  if (name == "step") {
    // pos=value pairs; each value holds from its breakpoint (a fraction of
    // the group, mapped to a cell) up to the next one.
    std::vector<std::pair<std::size_t, double>> steps;
    for (const std::string& pair : split(args, ',')) {
      const auto kv = split(pair, '=');
      if (kv.size() != 2) throw std::invalid_argument("signal: step wants pos=value pairs");
      const double pos = parse_double(kv[0], "step position");
      if (pos < 0.0 || pos >= 1.0) throw std::invalid_argument("signal: step position not in [0,1)");
      const auto cell = static_cast<std::size_t>(pos * static_cast<double>(res.cells()));
      steps.emplace_back(cell, parse_double(kv[1], "step value"));
    }
    if (steps.empty() || steps.front().first != 0) {
      throw std::invalid_argument("signal: step needs a breakpoint at position 0");
    }
    for (std::size_t i = 1; i < steps.size(); ++i) {
      if (steps[i].first <= steps[i - 1].first) {
        throw std::invalid_argument("signal: step positions must be strictly increasing");
      }
    }
    std::vector<double> values(res.cells());
    std::size_t idx = 0;
    for (std::size_t j = 0; j < values.size(); ++j) {
      while (idx + 1 < steps.size() && steps[idx + 1].first <= j) ++idx;
      values[j] = steps[idx].second;
    }
    return GridFunction(res, std::move(values));
  }
  if (name == "random") {
    return random_grid_function(res, parse_uint(args, "seed"));
  }
  throw std::invalid_argument("signal: unknown generator '" + name + "'");
}

}  // namespace walshlab
