#pragma once

// Scan kernels shared by every condition checker. Each checker turns its
// condition into a per-item evaluation; the kernels run it over a batch and
// report the first violating index plus how many items were actually tested.
//
// scan_serial is the reference; scan_parallel must return the identical
// result for any schedule.

#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace coupled_fp {

enum class Execution { serial, parallel };

/// Result of evaluating a single item.
enum class Outcome : std::uint8_t {
  skipped,    ///< item outside the condition's premise (incomparable, out of band, ...)
  satisfied,
  violated,
};

struct ScanResult {
  static constexpr std::size_t none = std::numeric_limits<std::size_t>::max();

  std::size_t first_violation = none;
  std::size_t evaluated = 0;  ///< items whose outcome was not `skipped`

  bool violated() const { return first_violation != none; }
  bool operator==(const ScanResult&) const = default;
};

template <class Item, class Eval>
ScanResult scan_serial(std::span<const Item> items, Eval&& eval) {
  ScanResult result;
  for (std::size_t i = 0; i < items.size(); ++i) {
    const Outcome o = eval(items[i]);
    if (o == Outcome::skipped) continue;
    ++result.evaluated;
    if (o == Outcome::violated && result.first_violation == ScanResult::none) result.first_violation = i;
  }
  return result;
}

template <class Item, class Eval>
ScanResult scan_parallel(std::span<const Item> items, Eval&& eval) {
  std::size_t first = ScanResult::none;
  std::size_t evaluated = 0;
  const auto n = static_cast<std::int64_t>(items.size());
#pragma omp parallel for schedule(static) reduction(min : first) reduction(+ : evaluated)
  for (std::int64_t i = 0; i < n; ++i) {
    const Outcome o = eval(items[static_cast<std::size_t>(i)]);
    if (o == Outcome::skipped) continue;
    ++evaluated;
    if (o == Outcome::violated && static_cast<std::size_t>(i) < first) first = static_cast<std::size_t>(i);
  }
  return ScanResult{first, evaluated};
}

template <class Item, class Eval>
ScanResult scan(Execution exec, std::span<const Item> items, Eval&& eval) {
  return exec == Execution::serial ? scan_serial(items, eval) : scan_parallel(items, eval);
}

/// Caps the number of worker threads; 0 leaves the runtime default.
inline void set_thread_cap(int threads) {
#ifdef _OPENMP
  if (threads > 0) omp_set_num_threads(threads);
#else
  (void)threads;
#endif
}

inline int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace coupled_fp
