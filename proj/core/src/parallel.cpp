#include "chebpol/parallel.hpp"

#include <atomic>
#include <exception>
#include <thread>
#include <vector>

namespace chebpol {

namespace {
std::atomic<int> g_thread_cap{1};
}

void set_thread_cap(int threads) { g_thread_cap.store(threads < 1 ? 1 : threads); }

int thread_cap() { return g_thread_cap.load(); }

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body) {
  int workers = g_thread_cap.load();
  if (workers <= 1 || n < 2) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  if (static_cast<std::size_t>(workers) > n) workers = static_cast<int>(n);
  // static block partition: worker w owns [w*chunk, ...); no shared state
  std::size_t chunk = (n + workers - 1) / workers;
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(workers);
  pool.reserve(workers);
  for (int w = 0; w < workers; ++w) {
    std::size_t begin = w * chunk;
    std::size_t end = begin + chunk < n ? begin + chunk : n;
    if (begin >= end) break;
    pool.emplace_back([&body, &errors, w, begin, end] {
      try {
        for (std::size_t i = begin; i < end; ++i) body(i);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace chebpol
