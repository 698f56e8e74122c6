// Copyright Contributors to the walshlab Project
// SPDX-License-Identifier: Apache-2.0

#ifndef WALSHLAB_SIGNAL_HPP
#define WALSHLAB_SIGNAL_HPP

#include <cstdint>
#include <string>

#include "walshlab/dyadic.hpp"

namespace walshlab {

/// Text form of the CLI signal generators:
///
///   constant:<c>
///   indicator:<level>:<prefix>
///   walsh:<n>
///   kaczmarz:<n>
///   dirichlet:<n>
///   step:<pos>=<value>,<pos>=<value>,...   positions are fractions in [0, 1)
///   random:<seed>                          uniform in [-1, 1], reproducible
///
/// Parsing is strict; parameters are range-checked against the resolution
/// when the signal is built.
struct SignalSpec {
  std::string text;

  static SignalSpec parse(const std::string& text);
};

GridFunction build_signal(const SignalSpec& spec, Resolution res);

/// Seeded uniform [-1, 1] noise; the sequence depends only on (seed, N).
GridFunction random_grid_function(Resolution res, std::uint64_t seed);

}  // namespace walshlab

#endif
