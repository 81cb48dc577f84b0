#include "polignac/oracle.hpp"

#include <cmath>
#include <string>

#include "polignac/modmath.hpp"

namespace polignac {

SieveOracle::SieveOracle(std::uint64_t limit) : limit_(limit) {
  if (limit < 2) throw DomainError("sieve limit must be >= 2");
  composite_.assign(limit + 1, false);
  composite_[0] = composite_[1] = true;
  for (std::uint64_t i = 2; i * i <= limit; ++i) {
    if (composite_[i]) continue;
    for (std::uint64_t j = i * i; j <= limit; j += i) composite_[j] = true;
  }
  for (std::uint64_t n = 2; n <= limit; ++n)
    if (!composite_[n]) ++count_;
}

bool SieveOracle::is_prime(std::uint64_t n) const {
  if (n > limit_)
    throw DomainError("n = " + std::to_string(n) + " beyond sieve limit " +
                      std::to_string(limit_));
  return !composite_[n];
}

std::vector<std::uint64_t> SieveOracle::primes() const {
  std::vector<std::uint64_t> out;
  out.reserve(count_);
  for (std::uint64_t n = 2; n <= limit_; ++n)
    if (!composite_[n]) out.push_back(n);
  return out;
}

std::vector<std::uint64_t> SieveOracle::pairs(std::uint64_t k, std::uint64_t limit) const {
  if (k == 0) throw DomainError("pair offset k must be >= 1");
  if (limit > limit_ || 2 * k > limit_ - limit)
    throw DomainError("pair range " + std::to_string(limit) + " + 2k exceeds sieve limit " +
                      std::to_string(limit_));
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = 2; p <= limit; ++p)
    if (!composite_[p] && !composite_[p + 2 * k]) out.push_back(p);
  return out;
}

std::optional<std::pair<std::uint64_t, std::uint64_t>> SieveOracle::goldbach_decompose(
    std::uint64_t m) const {
  if (m % 2 != 0) throw DomainError("goldbach_decompose needs an even m");
  if (m > limit_)
    throw DomainError("m = " + std::to_string(m) + " beyond sieve limit " +
                      std::to_string(limit_));
  for (std::uint64_t p1 = 3; 2 * p1 < m; p1 += 2)
    if (!composite_[p1] && !composite_[m - p1]) return std::pair{p1, m - p1};
  return std::nullopt;
}

double pnt_estimate(std::uint64_t n) {
  if (n < 2) throw DomainError("pnt_estimate needs n >= 2");
  const double x = static_cast<double>(n);
  return x / std::log(x);
}

}  // namespace polignac
