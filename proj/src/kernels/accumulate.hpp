#pragma once

#include <atomic>
#include <chrono>
#include <cstddef>
#include <optional>

#include <omp.h>

#include "pathideal/betti.hpp"
#include "pathideal/errors.hpp"

namespace pathideal::kernels {

using Deadline = std::optional<std::chrono::steady_clock::time_point>;

inline bool past(const Deadline& deadline) {
  return deadline && std::chrono::steady_clock::now() > *deadline;
}

/// Serial reference loop: unit(i, table) for i in [0, count), in order.
template <class Unit>
BettiTable accumulate_serial(std::size_t count, const Deadline& deadline, Unit&& unit) {
  BettiTable table;
  for (std::size_t i = 0; i < count; ++i) {
    if (past(deadline)) throw DeadlineExceeded("betti computation passed its deadline");
    unit(i, table);
  }
  return table;
}

/// OpenMP loop with per-thread tables merged at the end. Units must be pure.
template <class Unit>
BettiTable accumulate_parallel(std::size_t count, const Deadline& deadline, Unit&& unit) {
  BettiTable table;
  std::atomic<bool> expired{false};
  std::atomic<bool> failed{false};
#pragma omp parallel
  {
    BettiTable local;
#pragma omp for schedule(dynamic, 1) nowait
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(count); ++i) {
      if (expired.load(std::memory_order_relaxed) || failed.load(std::memory_order_relaxed)) continue;
      if (past(deadline)) {
        expired.store(true);
        continue;
      }
      try {
        unit(static_cast<std::size_t>(i), local);
      } catch (...) {
        failed.store(true);
      }
    }
#pragma omp critical(pathideal_betti_merge)
    table.merge(local);
  }
  if (expired.load()) throw DeadlineExceeded("betti computation passed its deadline");
  if (failed.load()) throw std::runtime_error("betti kernel unit failed");
  return table;
}

template <class Unit>
BettiTable accumulate(ExecPolicy policy, std::size_t count, const Deadline& deadline, Unit&& unit) {
  if (policy == ExecPolicy::Serial) return accumulate_serial(count, deadline, unit);
  return accumulate_parallel(count, deadline, unit);
}

}  // namespace pathideal::kernels
