#pragma once

#include <cstddef>
#include <functional>
#include <optional>

namespace cppgen {

/// Worker count: the explicit value if given, else CPPGEN_THREADS, else 1.
/// Values below 1 are rejected.
int resolve_threads(std::optional<int> requested);

/// Calls body(index) for index in [0, count) on `threads` workers using
/// static contiguous chunks. Results must be written to per-index slots so
/// the outcome does not depend on the worker count. The first exception
/// thrown by any worker is rethrown after all workers join.
void parallel_for(std::size_t count, int threads,
                  const std::function<void(std::size_t)>& body);

}  // namespace cppgen
