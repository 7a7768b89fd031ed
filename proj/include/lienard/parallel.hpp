#pragma once

#include <atomic>
#include <cstddef>
#include <thread>
#include <vector>

namespace lienard {

// Runs f(i) for i in [0, n) on up to `jobs` threads (0 = hardware
// concurrency). Callers write results into pre-sized slots indexed by i, so
// output ordering stays deterministic regardless of scheduling.
template <class Fn>
void parallel_for(std::size_t n, unsigned jobs, Fn&& f) {
  if (jobs == 0) jobs = std::thread::hardware_concurrency();
  if (jobs == 0) jobs = 1;
  if (jobs == 1 || n <= 1) {
    for (std::size_t i = 0; i < n; ++i) f(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= n) return;
      f(i);
    }
  };
  std::vector<std::thread> pool;
  unsigned nt = static_cast<unsigned>(std::min<std::size_t>(jobs, n));
  pool.reserve(nt);
  for (unsigned t = 0; t < nt; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
}

}  // namespace lienard
