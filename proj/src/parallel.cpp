#include "motifcount/parallel.hpp"

#include <exception>
#include <mutex>
#include <thread>

namespace motifcount {

unsigned resolve_threads(unsigned requested) {
  if (requested != 0) return requested;
  return std::max(1u, std::thread::hardware_concurrency());
}

void run_workers(unsigned threads, const std::function<void(unsigned)>& worker) {
  if (threads <= 1) {
    worker(0);
    return;
  }
  std::exception_ptr failure;
  std::mutex lock;
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (unsigned w = 0; w < threads; ++w) {
    pool.emplace_back([&, w] {
      try {
        worker(w);
      } catch (...) {
        std::lock_guard guard(lock);
        if (!failure) failure = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

}  // namespace motifcount
