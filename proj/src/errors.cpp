#include "gallai/errors.hpp"

namespace gallai {

namespace {
thread_local bool t_active = false;
thread_local std::chrono::steady_clock::time_point t_deadline;
thread_local unsigned t_counter = 0;
}  // namespace

ScopedDeadline::ScopedDeadline(std::chrono::milliseconds budget)
    : previous_(t_deadline), had_previous_(t_active) {
  auto mine = std::chrono::steady_clock::now() + budget;
  t_deadline = (t_active && previous_ < mine) ? previous_ : mine;
  t_active = true;
}

ScopedDeadline::~ScopedDeadline() {
  t_deadline = previous_;
  t_active = had_previous_;
}

namespace detail {
void poll_deadline() {
  if (!t_active) return;
  if ((++t_counter & 0x3ffU) != 0) return;
  if (std::chrono::steady_clock::now() > t_deadline) throw CapExceeded("time budget exhausted");
}
}  // namespace detail

}  // namespace gallai
