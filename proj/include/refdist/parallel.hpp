#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace refdist {

/// Calls body(i) for i in [0, n) on up to `jobs` threads. Indices are handed
/// out dynamically; the first exception by index is rethrown after all
/// workers finish.
template <typename Body>
void parallel_for(std::size_t n, unsigned jobs, Body&& body)
{
  std::vector<std::exception_ptr> errors(n);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < n; i = next++) {
      try {
        body(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const auto cap = static_cast<unsigned>(std::max<std::size_t>(n, 1));
  const unsigned n_threads = std::clamp<unsigned>(jobs, 1, cap);
  std::vector<std::thread> pool;
  for (unsigned k = 1; k < n_threads; ++k)
    pool.emplace_back(worker);
  worker();
  for (auto& th : pool)
    th.join();
  for (const auto& e : errors)
    if (e)
      std::rethrow_exception(e);
}

} // namespace refdist
