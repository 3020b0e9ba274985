#pragma once

#include <cstddef>
#include <exception>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <thread>
#include <type_traits>
#include <vector>

#include "sbtc/errors.hpp"

namespace sbtc {

// Half-open range of block indices [begin, end).
struct Chunk {
  std::size_t begin = 0;
  std::size_t end = 0;

  std::size_t size() const noexcept { return end - begin; }
  friend bool operator==(const Chunk&, const Chunk&) = default;
};

// Static assignment of blocks to workers: contiguous chunks whose sizes
// differ by at most one.
struct ExecPlan {
  std::size_t worker_count = 1;
  std::size_t blocks_per_worker = 0;  // ceil(b_num / worker_count)
  std::vector<Chunk> chunks;          // one per worker, in index order
};

ExecPlan plan(std::size_t b_num, std::size_t c_num);

// Resolves the worker count: an explicit positive request wins, 0 means the
// hardware core count. With no request at all the SBTC_THREADS environment
// variable is consulted before falling back to the core count.
std::size_t resolve_worker_count(std::optional<std::size_t> requested);

std::size_t hardware_workers() noexcept;

// Fork-join map of `fn` over `items` following `exec`. Results land in
// index order, so output never depends on the worker count. A throwing `fn`
// surfaces as ExecutionError naming the lowest failing index.
template <class Item, class Fn>
auto encode_parallel(std::span<const Item> items, Fn&& fn, const ExecPlan& exec)
    -> std::vector<std::invoke_result_t<Fn&, const Item&>> {
  using Result = std::invoke_result_t<Fn&, const Item&>;
  static_assert(std::is_default_constructible_v<Result>);

  std::size_t covered = 0;
  for (const Chunk& c : exec.chunks) covered += c.size();
  if (covered != items.size()) {
    throw InvalidInput("execution plan covers " + std::to_string(covered) +
                       " blocks but " + std::to_string(items.size()) + " were given");
  }

  std::vector<Result> out(items.size());
  struct Failure {
    std::size_t index = 0;
    std::string message;
  };
  std::vector<std::optional<Failure>> failures(exec.chunks.size());

  auto run_chunk = [&](std::size_t w) {
    const Chunk& c = exec.chunks[w];
    for (std::size_t k = c.begin; k < c.end; ++k) {
      try {
        out[k] = fn(items[k]);
      } catch (const std::exception& e) {
        failures[w] = Failure{k, e.what()};
        return;
      } catch (...) {
        failures[w] = Failure{k, "unknown error"};
        return;
      }
    }
  };

  if (exec.chunks.size() <= 1) {
    if (!exec.chunks.empty()) run_chunk(0);
  } else {
    std::vector<std::jthread> workers;
    workers.reserve(exec.chunks.size() - 1);
    for (std::size_t w = 1; w < exec.chunks.size(); ++w) {
      if (exec.chunks[w].size() > 0) workers.emplace_back(run_chunk, w);
    }
    run_chunk(0);
  }  // jthreads join here

  for (const auto& f : failures) {
    if (f) throw ExecutionError(f->index, f->message);
  }
  return out;
}

template <class Item, class Fn>
auto encode_parallel(const std::vector<Item>& items, Fn&& fn, const ExecPlan& exec) {
  return encode_parallel(std::span<const Item>(items), std::forward<Fn>(fn), exec);
}

}  // namespace sbtc
