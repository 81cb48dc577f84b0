#pragma once

// Multiplication-count comparison of the (p-1)! pair test against the
// half-factorial pair test. Counts follow the conventions documented in
// modmath.hpp and are deterministic; wall-clock times are informational.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace polignac {

struct BenchReport {
  std::uint64_t p = 0;
  std::uint64_t k = 0;
  std::uint64_t mults_t3 = 0;  // polignac_factorial
  std::uint64_t mults_t7 = 0;  // polignac_half
  double ratio = 0.0;          // mults_t7 / mults_t3
  std::optional<std::int64_t> wall_ns_t3;
  std::optional<std::int64_t> wall_ns_t7;
};

/// Runs both tests at (p, k) with counting enabled. Throws PreconditionError
/// naming the theorem whose preconditions fail at (p, k).
BenchReport bench_pair(std::uint64_t p, std::uint64_t k, bool timed = false);

/// bench_pair over every odd p in [from, to] admissible for both theorems.
std::vector<BenchReport> bench_sweep(std::uint64_t from, std::uint64_t to, std::uint64_t k,
                                     bool timed = false);

/// Columns p,k,mults_t3,mults_t7,ratio and, when `with_wall`,
/// wall_ns_t3,wall_ns_t7. Ratio is printed with 6 decimals.
std::string bench_csv(const std::vector<BenchReport>& reports, bool with_wall = false);

}  // namespace polignac
