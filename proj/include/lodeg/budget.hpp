#pragma once

#include <chrono>
#include <optional>
#include <string>

#include "lodeg/errors.hpp"

namespace lodeg {

/// Time allowance granted to each individual Groebner computation.
/// An empty budget never expires.
class Budget {
public:
  Budget() = default;
  static Budget seconds(double secs) {
    Budget b;
    b.secs_ = secs;
    return b;
  }
  static Budget unlimited() { return Budget(); }

  std::optional<double> per_call_seconds() const noexcept { return secs_; }

private:
  std::optional<double> secs_;
};

/// Deadline for one computation, started when constructed.
class Deadline {
public:
  explicit Deadline(const Budget& budget) {
    if (auto s = budget.per_call_seconds()) {
      end_ = Clock::now() + std::chrono::duration_cast<Clock::duration>(std::chrono::duration<double>(*s));
    }
  }

  bool expired() const { return end_ && Clock::now() > *end_; }

  void check(const char* where) const {
    if (expired()) throw BudgetExceeded(std::string("time budget exceeded in ") + where);
  }

private:
  using Clock = std::chrono::steady_clock;
  std::optional<Clock::time_point> end_;
};

}  // namespace lodeg
