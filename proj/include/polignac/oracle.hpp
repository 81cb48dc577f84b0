#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace polignac {

/// Sieve of Eratosthenes primality table for 0..limit. Immutable after
/// construction; safe to share between concurrent readers.
class SieveOracle {
 public:
  /// Throws DomainError for limit < 2.
  explicit SieveOracle(std::uint64_t limit);

  std::uint64_t limit() const noexcept { return limit_; }

  /// Throws DomainError when n > limit().
  bool is_prime(std::uint64_t n) const;

  /// Number of primes <= limit().
  std::uint64_t count() const noexcept { return count_; }

  std::vector<std::uint64_t> primes() const;

  /// Ascending p <= limit with p and p + 2k both prime.
  /// Requires limit + 2k <= this->limit(); k >= 1.
  std::vector<std::uint64_t> pairs(std::uint64_t k, std::uint64_t limit) const;

  /// Minimal-p1 decomposition m = p1 + p2 into distinct odd primes p1 < p2.
  /// m must be even and <= limit(); returns nullopt when none exists
  /// (always the case below 8).
  std::optional<std::pair<std::uint64_t, std::uint64_t>> goldbach_decompose(
      std::uint64_t m) const;

 private:
  std::uint64_t limit_;
  std::uint64_t count_ = 0;
  std::vector<bool> composite_;
};

inline SieveOracle build_sieve(std::uint64_t limit) { return SieveOracle(limit); }

/// n / ln(n), the classical estimate of the prime-counting function.
double pnt_estimate(std::uint64_t n);

}  // namespace polignac
