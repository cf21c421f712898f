#pragma once

#include <chrono>
#include <optional>

namespace gqt {

// Worker count for the OpenMP kernels. threads <= 0 means the OpenMP default.
struct Exec {
  int threads = 0;

  int resolved() const;
  static Exec serial() { return Exec{1}; }
};

// Wall-clock budget. A default-constructed deadline never expires.
class Deadline {
 public:
  using Clock = std::chrono::steady_clock;

  Deadline() = default;
  static Deadline after(double seconds);
  static Deadline none() { return Deadline(); }

  bool expired() const { return end_ && Clock::now() >= *end_; }
  bool bounded() const { return end_.has_value(); }

 private:
  std::optional<Clock::time_point> end_;
};

}  // namespace gqt
