#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sbtc {

// Caller passed something the operation cannot accept (empty image, shape
// mismatch, zero workers, ...).
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Malformed `.sbtc` stream. `offset()` is the byte position where decoding
// stopped.
class FormatError : public std::runtime_error {
 public:
  FormatError(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " (at byte " + std::to_string(offset) + ")"),
        offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

// A per-block worker threw. Carries the failing block index.
class ExecutionError : public std::runtime_error {
 public:
  ExecutionError(std::size_t block_index, const std::string& what)
      : std::runtime_error("block " + std::to_string(block_index) + ": " + what),
        block_index_(block_index) {}

  std::size_t block_index() const noexcept { return block_index_; }

 private:
  std::size_t block_index_;
};

// Upstream invariant broken (e.g. a quantization level outside [0, 255]).
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace sbtc
