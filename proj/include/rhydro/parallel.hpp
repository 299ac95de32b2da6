#ifndef RHYDRO_PARALLEL_HPP
#define RHYDRO_PARALLEL_HPP

#include <atomic>
#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace rhydro {

// Worker count: RESERVOIR_HYDRO_THREADS if set, else the hardware count.
inline unsigned worker_count() {
  if (const char* env = std::getenv("RESERVOIR_HYDRO_THREADS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v >= 1) return static_cast<unsigned>(v);
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw >= 1 ? hw : 1;
}

// Runs fn(i) for i in [0, count). Each index writes only its own output
// slot, so results are identical for any worker count.
template <class Fn>
void parallel_for(std::size_t count, const Fn& fn) {
  const unsigned workers = worker_count();
  if (workers <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= count) return;
      fn(i);
    }
  };
  std::vector<std::thread> pool;
  const unsigned n = std::min<std::size_t>(workers, count);
  pool.reserve(n);
  for (unsigned w = 0; w < n; ++w) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
}

}  // namespace rhydro

#endif
