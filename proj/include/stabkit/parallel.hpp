#pragma once

// Deterministic data parallelism: work is split by index, every index writes
// its own slot, and reductions use a fixed pairwise tree. Results therefore do
// not depend on the number of threads.

#include <cstddef>
#include <functional>
#include <optional>
#include <span>

namespace stabkit::parallel {

/// Explicit request if given, else STABKIT_THREADS, else hardware concurrency
/// (at least 1).
unsigned resolve_threads(std::optional<unsigned> requested = std::nullopt);

/// Calls fn(i) for i in [0, count) on up to `threads` workers. The first
/// exception thrown by any call is rethrown after all workers stop.
void parallel_for(std::size_t count, unsigned threads, const std::function<void(std::size_t)>& fn);

/// Sum by recursive halving; the association order depends only on the length.
double pairwise_sum(std::span<const double> values);

}  // namespace stabkit::parallel
