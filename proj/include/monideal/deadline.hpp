#pragma once

#include <chrono>
#include <optional>

namespace monideal {

// Cooperative cancellation for the long enumerations (closure boxes and
// witness searches). A deadline is installed per thread by ScopedDeadline;
// the enumerations poll check_deadline() and throw BudgetExceeded once it
// has passed. Without an installed deadline the poll is a no-op.

using Clock = std::chrono::steady_clock;

class ScopedDeadline {
public:
  explicit ScopedDeadline(std::optional<Clock::time_point> when);
  ~ScopedDeadline();

  ScopedDeadline(const ScopedDeadline&) = delete;
  ScopedDeadline& operator=(const ScopedDeadline&) = delete;

private:
  std::optional<Clock::time_point> previous_;
};

/// Throws BudgetExceeded when the current thread's deadline has passed.
void check_deadline();

} // namespace monideal
