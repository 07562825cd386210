#include "hive/parallel.hpp"

#include <algorithm>
#include <cstdlib>
#include <exception>
#include <string>
#include <thread>
#include <vector>

namespace hive {

int worker_count() {
  int n = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  if (const char* env = std::getenv("HIVE_VEM_THREADS")) {
    try {
      n = std::max(1, std::stoi(env));
    } catch (const std::exception&) {
      // Malformed value: keep the default.
    }
  }
  return n;
}

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body, int workers) {
  const std::size_t w = std::min<std::size_t>(static_cast<std::size_t>(std::max(1, workers)), n);
  if (w <= 1) {
    for (std::size_t k = 0; k < n; ++k) body(k);
    return;
  }
  std::vector<std::exception_ptr> errors(w);
  {
    std::vector<std::jthread> pool;
    pool.reserve(w);
    for (std::size_t t = 0; t < w; ++t) {
      const std::size_t begin = n * t / w;
      const std::size_t end = n * (t + 1) / w;
      pool.emplace_back([&, t, begin, end] {
        for (std::size_t k = begin; k < end; ++k) {
          try {
            body(k);
          } catch (...) {
            errors[t] = std::current_exception();
            return;
          }
        }
      });
    }
  }
  for (std::size_t t = 0; t < w; ++t) {
    if (errors[t]) std::rethrow_exception(errors[t]);
  }
}

} // namespace hive
