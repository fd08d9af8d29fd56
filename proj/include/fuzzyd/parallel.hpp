#pragma once

#include <cstddef>
#include <functional>

namespace fuzzyd {

// worker count: FUZZYD_THREADS when set and positive, else hardware concurrency
std::size_t thread_cap();

// runs f(0..n-1) on up to thread_cap() threads; rethrows the first exception
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& f);

}  // namespace fuzzyd
