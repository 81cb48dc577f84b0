#pragma once

// Modular arithmetic kernels over arbitrary-precision operands.
//
// Every kernel reduces into a canonical Residue (0 <= value < modulus) and can
// optionally report the number of modular multiplications it performed to a
// caller-owned MulCounter. Moduli below 2^64 take a native fast path; larger
// moduli fall back to boost::multiprecision. The counts are identical on both
// paths.

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "polignac/errors.hpp"

namespace polignac {

/// Arbitrary-precision integer. `Natural` marks values that must be >= 0;
/// public entry points reject negative input with DomainError.
using Integer = boost::multiprecision::cpp_int;
using Natural = boost::multiprecision::cpp_int;

/// Canonical residue class representative.
struct Residue {
  Natural value;
  Natural modulus;

  Residue(Natural v, Natural m);

  bool is_zero() const { return value == 0; }
  friend bool operator==(const Residue&, const Residue&) = default;
};

/// Counts modular multiplications for one computation. Owned by the caller and
/// never shared between concurrent computations.
class MulCounter {
 public:
  void add(std::uint64_t n = 1) noexcept { count_ += n; }
  std::uint64_t count() const noexcept { return count_; }
  void reset() noexcept { count_ = 0; }

 private:
  std::uint64_t count_ = 0;
};

void require_natural(const Integer& x, const char* what);
void require_modulus(const Natural& m);

/// Canonical residue of an arbitrary signed integer.
Natural reduce(const Integer& x, const Natural& m);

/// Narrowing for loop bounds; throws DomainError when `n` does not fit.
std::uint64_t to_u64(const Natural& n, const char* what);

/// (a*b) mod m. Counts one multiplication.
Residue mul_mod(const Natural& a, const Natural& b, const Natural& m,
                MulCounter* counter = nullptr);

/// n! mod m. The accumulator starts at 1 and is multiplied by 1..n, so this
/// performs exactly n counted multiplications (0! costs nothing).
Residue factorial_mod(const Natural& n, const Natural& m,
                      MulCounter* counter = nullptr);

/// (lo+1)(lo+2)...(hi) mod m, i.e. hi!/lo!. Performs hi-lo counted
/// multiplications; factorial_mod(n) == factorial_range_mod(0, n). Splitting
/// [0, n] at any point and multiplying the segments gives the same residue.
Residue factorial_range_mod(const Natural& lo, const Natural& hi,
                            const Natural& m, MulCounter* counter = nullptr);

/// 1*3*5*...*(2k-1) mod m, k counted multiplications.
Residue double_factorial_odd_mod(const Natural& k, const Natural& m,
                                 MulCounter* counter = nullptr);

/// b^e mod m by right-to-left square-and-multiply. Counts one multiplication
/// per set bit of e plus one squaring per bit after the lowest, i.e.
/// popcount(e) + bitlength(e) - 1 (zero for e == 0).
Residue pow_mod(const Natural& b, const Natural& e, const Natural& m,
                MulCounter* counter = nullptr);

/// Canonical residue of (-1)^e: 1 for even e, m-1 for odd e. No multiplications.
Residue sign_pow(const Natural& e, const Natural& m);

/// Decimal rendering.
std::string to_string(const Integer& x);

}  // namespace polignac
