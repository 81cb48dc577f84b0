#include "polignac/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <sstream>

#include "polignac/theorems.hpp"

namespace polignac {
namespace {

struct Run {
  TestVerdict verdict;
  std::uint64_t mults;
  std::int64_t wall_ns;
};

template <typename Test>
Run counted(Test test) {
  MulCounter counter;
  const auto start = std::chrono::steady_clock::now();
  TestVerdict v = test(&counter);
  const auto stop = std::chrono::steady_clock::now();
  return {std::move(v), counter.count(),
          std::chrono::duration_cast<std::chrono::nanoseconds>(stop - start).count()};
}

}  // namespace

BenchReport bench_pair(std::uint64_t p, std::uint64_t k, bool timed) {
  const Run t3 = counted([&](MulCounter* c) { return polignac_factorial(p, k, c); });
  if (!t3.verdict.evaluated())
    throw PreconditionError("PolignacFactorial: " + t3.verdict.reason);
  const Run t7 = counted([&](MulCounter* c) { return polignac_half(p, k, c); });
  if (!t7.verdict.evaluated())
    throw PreconditionError("PolignacHalf: " + t7.verdict.reason);

  BenchReport r;
  r.p = p;
  r.k = k;
  r.mults_t3 = t3.mults;
  r.mults_t7 = t7.mults;
  r.ratio = static_cast<double>(t7.mults) / static_cast<double>(t3.mults);
  if (timed) {
    r.wall_ns_t3 = t3.wall_ns;
    r.wall_ns_t7 = t7.wall_ns;
  }
  return r;
}

std::vector<BenchReport> bench_sweep(std::uint64_t from, std::uint64_t to, std::uint64_t k,
                                     bool timed) {
  if (from > to) throw DomainError("bench sweep needs from <= to");
  std::vector<BenchReport> out;
  for (std::uint64_t p = std::max<std::uint64_t>(from | 1, 3); p <= to; p += 2) {
    try {
      out.push_back(bench_pair(p, k, timed));
    } catch (const PreconditionError&) {
      // inadmissible p (divides a coefficient constant) is skipped
    }
  }
  return out;
}

std::string bench_csv(const std::vector<BenchReport>& reports, bool with_wall) {
  std::ostringstream out;
  out << "p,k,mults_t3,mults_t7,ratio";
  if (with_wall) out << ",wall_ns_t3,wall_ns_t7";
  out << '\n';
  for (const BenchReport& r : reports) {
    char ratio[32];
    std::snprintf(ratio, sizeof ratio, "%.6f", r.ratio);
    out << r.p << ',' << r.k << ',' << r.mults_t3 << ',' << r.mults_t7 << ',' << ratio;
    if (with_wall)
      out << ',' << r.wall_ns_t3.value_or(0) << ',' << r.wall_ns_t7.value_or(0);
    out << '\n';
  }
  return out.str();
}

}  // namespace polignac
