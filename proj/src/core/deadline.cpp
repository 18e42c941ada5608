#include "monideal/deadline.hpp"

#include "monideal/errors.hpp"

namespace monideal {

namespace {
thread_local std::optional<Clock::time_point> g_deadline;
}

ScopedDeadline::ScopedDeadline(std::optional<Clock::time_point> when) : previous_(g_deadline) {
  // Nested scopes can only tighten the deadline.
  if (when && (!g_deadline || *when < *g_deadline)) g_deadline = when;
}

ScopedDeadline::~ScopedDeadline() { g_deadline = previous_; }

void check_deadline() {
  if (g_deadline && Clock::now() > *g_deadline) throw BudgetExceeded("time budget exhausted");
}

} // namespace monideal
