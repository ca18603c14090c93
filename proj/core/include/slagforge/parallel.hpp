#pragma once

#include <cstddef>
#include <functional>

namespace slagforge {

// worker count: SLAGFORGE_THREADS if set, else the hardware concurrency
unsigned thread_count();
void set_thread_count(unsigned n);  // 0 restores the default

// runs body(0..n-1) over a static block partition; the first exception is rethrown
void parallel_for(size_t n, const std::function<void(size_t)>& body);

}  // namespace slagforge
