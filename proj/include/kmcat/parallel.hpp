#pragma once

// Worker pool for independent jobs. Results land in job order, whatever the
// completion order, so reports assembled from them are deterministic.

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace kmcat {

inline unsigned default_workers() { return std::max(1U, std::thread::hardware_concurrency()); }

/// out[k] = job(k) for k < count. The first exception (by job index) is rethrown.
template <typename Result, typename Job>
std::vector<Result> parallel_map(std::size_t count, Job job, unsigned workers = default_workers()) {
  std::vector<Result> out(count);
  std::vector<std::exception_ptr> errors(count);
  std::atomic<std::size_t> next{0};
  auto run = [&] {
    for (std::size_t k = next++; k < count; k = next++) {
      try {
        out[k] = job(k);
      } catch (...) {
        errors[k] = std::current_exception();
      }
    }
  };
  const unsigned n = static_cast<unsigned>(std::min<std::size_t>(workers, count));
  if (n <= 1) {
    run();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < n; ++t) pool.emplace_back(run);
    for (auto& t : pool) t.join();
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

}  // namespace kmcat
