#pragma once

// Minimal data-parallel loop.  KOUNT_THREADS caps the worker count; results
// are written by index, so scheduling never changes output.

#include <algorithm>
#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

namespace kount {

inline unsigned thread_count() {
  unsigned hw = std::thread::hardware_concurrency();
  if (hw == 0) hw = 1;
  if (const char* env = std::getenv("KOUNT_THREADS")) {
    try {
      unsigned cap = static_cast<unsigned>(std::stoul(env));
      if (cap >= 1) hw = std::min(hw, cap);
    } catch (...) {
      // ignore malformed values, fall through to hardware count
    }
  }
  return hw;
}

template <class Fn>
void parallel_for(std::size_t begin, std::size_t end, Fn&& fn) {
  const std::size_t count = end > begin ? end - begin : 0;
  const unsigned workers = thread_count();
  if (workers <= 1 || count < 2) {
    for (std::size_t i = begin; i < end; ++i) fn(i);
    return;
  }
  const unsigned used = static_cast<unsigned>(std::min<std::size_t>(workers, count));
  std::vector<std::thread> pool;
  pool.reserve(used);
  const std::size_t chunk = (count + used - 1) / used;
  for (unsigned w = 0; w < used; ++w) {
    const std::size_t lo = begin + w * chunk;
    const std::size_t hi = std::min(end, lo + chunk);
    if (lo >= hi) break;
    pool.emplace_back([lo, hi, &fn] {
      for (std::size_t i = lo; i < hi; ++i) fn(i);
    });
  }
  for (auto& t : pool) t.join();
}

}  // namespace kount
