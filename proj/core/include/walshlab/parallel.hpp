// Copyright Contributors to the walshlab Project
// SPDX-License-Identifier: Apache-2.0

#ifndef WALSHLAB_PARALLEL_HPP
#define WALSHLAB_PARALLEL_HPP

#include <cstddef>
#include <functional>

namespace walshlab {

// Process-wide worker count for the few operations that opt into
// parallelism (maximal sweeps, butterfly stages, per-k experiments).
// Every parallel code path must produce output that is bit-identical
// to the single-threaded run.
void set_thread_count(unsigned n);
unsigned thread_count();

// Splits [0, n) into contiguous chunks and runs body(begin, end) on each,
// using up to thread_count() workers. Chunk boundaries depend only on n
// and the worker count, never on scheduling.
void parallel_for(std::size_t n, const std::function<void(std::size_t, std::size_t)>& body);

}  // namespace walshlab

#endif
