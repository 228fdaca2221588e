#include "logchern/parallel.hpp"

#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <vector>

namespace logchern {

namespace {

std::optional<std::size_t>& override_limit() {
  static std::optional<std::size_t> v;
  return v;
}

}  // namespace

std::size_t thread_limit() {
  if (override_limit()) return *override_limit();
  if (const char* env = std::getenv("LOGCHERN_THREADS")) {
    try {
      long v = std::stol(env);
      return v <= 1 ? 1 : static_cast<std::size_t>(v);
    } catch (const std::exception&) {
      return 1;
    }
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

void set_thread_limit(std::size_t n) { override_limit() = n == 0 ? 1 : n; }

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn) {
  std::size_t workers = std::min(thread_limit(), n);
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex mu;
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < n; i = next++) {
        try {
          fn(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(mu);
          if (!error) error = std::current_exception();
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace logchern
