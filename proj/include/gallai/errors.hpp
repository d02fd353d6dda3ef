#pragma once

#include <chrono>
#include <cstddef>
#include <stdexcept>
#include <string>

namespace gallai {

/// An input violated an operation's precondition.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An exact search exceeded an instance-size, result-count or time cap.
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed graph6 record; offset is the byte position of the problem.
class Graph6Error : public std::invalid_argument {
 public:
  Graph6Error(std::size_t offset, const std::string& what)
      : std::invalid_argument(what + " at byte " + std::to_string(offset)), offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

/// The record uses an encoding other than graph6 (sparse6 or digraph6).
class UnsupportedFormatError : public Graph6Error {
 public:
  using Graph6Error::Graph6Error;
};

/// Per-thread wall-clock deadline consulted by the exponential searches.
/// Searches throw CapExceeded once it has passed.
class ScopedDeadline {
 public:
  explicit ScopedDeadline(std::chrono::milliseconds budget);
  ~ScopedDeadline();
  ScopedDeadline(const ScopedDeadline&) = delete;
  ScopedDeadline& operator=(const ScopedDeadline&) = delete;

 private:
  std::chrono::steady_clock::time_point previous_;
  bool had_previous_;
};

namespace detail {
/// Cheap amortised check; call from inner search loops.
void poll_deadline();
}  // namespace detail

}  // namespace gallai
