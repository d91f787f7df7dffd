#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace streamqm {

/// Bad user input: dimension mismatches, invalid configuration values,
/// out-of-range indices. CLI exit code 2.
class ArgumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Malformed file content. Carries the byte offset at which parsing gave up.
/// CLI exit code 3.
class FormatError : public std::runtime_error {
 public:
  FormatError(const std::string& what, std::size_t byte_offset)
      : std::runtime_error(what + " (at byte offset " +
                           std::to_string(byte_offset) + ")"),
        byte_offset_(byte_offset) {}

  std::size_t byte_offset() const noexcept { return byte_offset_; }

 private:
  std::size_t byte_offset_;
};

/// Numerical failure inside a kernel, e.g. a non-positive Cholesky pivot.
/// CLI exit code 4.
class NumericError : public std::runtime_error {
 public:
  NumericError(const std::string& what, std::ptrdiff_t pivot_index)
      : std::runtime_error(what + " (pivot " + std::to_string(pivot_index) +
                           ")"),
        pivot_index_(pivot_index) {}

  std::ptrdiff_t pivot_index() const noexcept { return pivot_index_; }

 private:
  std::ptrdiff_t pivot_index_;
};

/// Malformed or inconsistent chunk stream. Carries the index of the chunk at
/// which the problem was detected. CLI exit code 3.
class StreamError : public std::runtime_error {
 public:
  StreamError(const std::string& what, std::int64_t chunk_index)
      : std::runtime_error(what + " (chunk " + std::to_string(chunk_index) +
                           ")"),
        chunk_index_(chunk_index) {}

  std::int64_t chunk_index() const noexcept { return chunk_index_; }

 private:
  std::int64_t chunk_index_;
};

}  // namespace streamqm
