#include "hypercomm/threads.hpp"

#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace hypercomm {

unsigned resolve_thread_count(int requested) {
  long value = requested;
  if (requested < 0) {
    if (const char* env = std::getenv("HYPERCOMM_THREADS")) {
      char* end = nullptr;
      value = std::strtol(env, &end, 10);
      if (end == env || value < 0) value = -1;
    } else {
      value = -1;
    }
    if (value < 0) {
      const unsigned hw = std::thread::hardware_concurrency();
      value = hw == 0 ? 1 : static_cast<long>(hw);
    }
  }
  return value <= 1 ? 1 : static_cast<unsigned>(value);
}

void parallel_for(std::uint64_t count, unsigned threads,
                  const std::function<void(std::uint64_t)>& f) {
  if (count == 0) return;
  if (threads <= 1 || count == 1) {
    for (std::uint64_t i = 0; i < count; ++i) f(i);
    return;
  }
  const unsigned workers =
      static_cast<unsigned>(std::min<std::uint64_t>(threads, count));
  std::atomic<std::uint64_t> next{0};
  std::exception_ptr first_error;
  std::mutex error_mutex;
  auto run = [&] {
    while (true) {
      const std::uint64_t i = next.fetch_add(1);
      if (i >= count) return;
      try {
        f(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!first_error) first_error = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run);
  for (auto& t : pool) t.join();
  if (first_error) std::rethrow_exception(first_error);
}

}  // namespace hypercomm
