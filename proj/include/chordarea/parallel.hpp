#pragma once

#include <cstddef>
#include <functional>

namespace chordarea {

/// Worker count: CHORDAREA_THREADS if set and positive, else hardware concurrency.
unsigned thread_count();

/// Calls body(i) for every i in [0, count). Work is split into contiguous
/// blocks across thread_count() workers; body must only touch slot i of any
/// shared output. The first exception thrown by any worker is rethrown.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

}  // namespace chordarea
