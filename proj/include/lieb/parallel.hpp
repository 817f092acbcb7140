#ifndef LIEB_PARALLEL_HPP
#define LIEB_PARALLEL_HPP

#include <atomic>
#include <cstdlib>
#include <thread>
#include <vector>

namespace lieb {

// Thread budget for internal parallelism, capped by LEIBNIZ_GSB_THREADS.
inline unsigned thread_cap() {
  unsigned hw = std::thread::hardware_concurrency();
  if (hw == 0) hw = 1;
  if (const char* env = std::getenv("LEIBNIZ_GSB_THREADS")) {
    long v = std::strtol(env, nullptr, 10);
    if (v >= 1 && static_cast<unsigned>(v) < hw) hw = static_cast<unsigned>(v);
    if (v == 1) hw = 1;
  }
  return hw;
}

// Runs f(i) for i in [0, n); results must be written into index-addressed
// slots by the caller so output order stays deterministic.
template <typename F>
void parallel_for(std::size_t n, F&& f) {
  unsigned threads = thread_cap();
  if (threads <= 1 || n < 2) {
    for (std::size_t i = 0; i < n; ++i) f(i);
    return;
  }
  if (threads > n) threads = static_cast<unsigned>(n);
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (unsigned t = 0; t < threads; ++t)
    pool.emplace_back([&] {
      for (std::size_t i = next.fetch_add(1); i < n; i = next.fetch_add(1)) f(i);
    });
  for (auto& th : pool) th.join();
}

}  // namespace lieb

#endif  // LIEB_PARALLEL_HPP
