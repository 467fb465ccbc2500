#pragma once

#include <cstddef>

#include "kfl/execution.hpp"

namespace kfl::detail {

/// Runs body(i) for i in [0, n). The parallel path uses OpenMP with dynamic
/// scheduling; bodies write only to slot i of their output, so both paths
/// produce identical results.
template <typename Body>
void for_each_index(std::size_t n, Execution exec, Body&& body) {
  if (exec == Execution::Parallel) {
    const auto count = static_cast<long long>(n);
#pragma omp parallel for schedule(dynamic, 8)
    for (long long i = 0; i < count; ++i) body(static_cast<std::size_t>(i));
  } else {
    for (std::size_t i = 0; i < n; ++i) body(i);
  }
}

}  // namespace kfl::detail
