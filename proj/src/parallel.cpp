#include "sbtc/parallel.hpp"

#include <charconv>
#include <cstdlib>
#include <cstring>

namespace sbtc {

ExecPlan plan(std::size_t b_num, std::size_t c_num) {
  if (c_num == 0) throw InvalidInput("worker count must be at least 1");
  ExecPlan p;
  p.worker_count = c_num;
  p.blocks_per_worker = (b_num + c_num - 1) / c_num;
  p.chunks.reserve(c_num);
  const std::size_t base = b_num / c_num;
  const std::size_t extra = b_num % c_num;  // first `extra` workers get one more
  std::size_t begin = 0;
  for (std::size_t w = 0; w < c_num; ++w) {
    const std::size_t len = base + (w < extra ? 1 : 0);
    p.chunks.push_back({begin, begin + len});
    begin += len;
  }
  return p;
}

std::size_t hardware_workers() noexcept {
  const unsigned n = std::thread::hardware_concurrency();
  return n == 0 ? 1 : n;
}

std::size_t resolve_worker_count(std::optional<std::size_t> requested) {
  if (requested) return *requested > 0 ? *requested : hardware_workers();
  if (const char* env = std::getenv("SBTC_THREADS"); env != nullptr && *env != '\0') {
    std::size_t n = 0;
    const char* last = env + std::strlen(env);
    auto [ptr, ec] = std::from_chars(env, last, n);
    if (ec == std::errc{} && ptr == last) return n > 0 ? n : hardware_workers();
  }
  return hardware_workers();
}

}  // namespace sbtc
