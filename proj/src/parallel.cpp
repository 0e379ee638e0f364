#include "pauliwalk/parallel.hpp"

#include <algorithm>
#include <cstdlib>
#include <thread>
#include <vector>

namespace pauliwalk {

int thread_cap() {
  static const int cap = [] {
    int hw = static_cast<int>(std::thread::hardware_concurrency());
    if (hw < 1) hw = 1;
    const char* env = std::getenv("PAULIWALK_THREADS");
    if (env == nullptr) return hw;
    const long v = std::strtol(env, nullptr, 10);
    if (v <= 0) return hw;  // 0 or unparsable means auto
    return static_cast<int>(std::min<long>(v, 256));
  }();
  return cap;
}

void parallel_for(std::int64_t n,
                  const std::function<void(std::int64_t, std::int64_t)>& body,
                  std::int64_t min_chunk) {
  if (min_chunk < 1) min_chunk = 1;
  const int workers = static_cast<int>(
      std::min<std::int64_t>(thread_cap(), (n + min_chunk - 1) / min_chunk));
  if (workers <= 1) {
    body(0, n);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers);
  const std::int64_t chunk = (n + workers - 1) / workers;
  for (int w = 0; w < workers; ++w) {
    const std::int64_t begin = w * chunk;
    const std::int64_t end = std::min(n, begin + chunk);
    if (begin >= end) break;
    pool.emplace_back([&body, begin, end] { body(begin, end); });
  }
  for (std::thread& t : pool) t.join();
}

}  // namespace pauliwalk
