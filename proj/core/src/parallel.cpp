#include "infocoh/parallel.hpp"

#include <atomic>
#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

namespace infocoh {

int worker_count() {
  if (const char* env = std::getenv("INFOCOH_THREADS")) {
    try {
      int n = std::stoi(env);
      if (n > 0) return n;
    } catch (...) {
      // fall through to the hardware default
    }
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

void parallel_for(std::size_t jobs, const std::function<void(std::size_t)>& fn) {
  int workers = worker_count();
  if (jobs == 0) return;
  if (workers <= 1 || jobs == 1) {
    for (std::size_t j = 0; j < jobs; ++j) fn(j);
    return;
  }
  std::atomic<std::size_t> next{0};
  auto body = [&] {
    while (true) {
      std::size_t j = next.fetch_add(1);
      if (j >= jobs) break;
      fn(j);
    }
  };
  std::vector<std::thread> pool;
  int spawn = static_cast<int>(std::min<std::size_t>(jobs, static_cast<std::size_t>(workers)));
  pool.reserve(static_cast<std::size_t>(spawn));
  for (int i = 0; i < spawn; ++i) pool.emplace_back(body);
  for (auto& t : pool) t.join();
}

}  // namespace infocoh
