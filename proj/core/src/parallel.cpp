#include "br/parallel.hpp"

#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

namespace br {

unsigned resolve_threads(unsigned requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("BORDERRANK_THREADS")) {
    int v = std::atoi(env);
    if (v > 0) return static_cast<unsigned>(v);
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? hw : 1;
}

void parallel_chunks(std::size_t n, unsigned threads,
                     const std::function<void(std::size_t, std::size_t, unsigned)>& fn) {
  threads = resolve_threads(threads);
  if (n == 0) return;
  if (threads <= 1 || n == 1) {
    fn(0, n, 0);
    return;
  }
  if (threads > n) threads = static_cast<unsigned>(n);
  std::vector<std::thread> pool;
  pool.reserve(threads);
  const std::size_t base = n / threads, extra = n % threads;
  std::size_t start = 0;
  for (unsigned w = 0; w < threads; ++w) {
    std::size_t len = base + (w < extra ? 1 : 0);
    pool.emplace_back(fn, start, start + len, w);
    start += len;
  }
  for (auto& t : pool) t.join();
}

void parallel_for(std::size_t n, unsigned threads, const std::function<void(std::size_t)>& fn) {
  parallel_chunks(n, threads, [&](std::size_t lo, std::size_t hi, unsigned) {
    for (std::size_t i = lo; i < hi; ++i) fn(i);
  });
}

} // namespace br
