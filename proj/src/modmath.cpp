#include "polignac/modmath.hpp"

#include <limits>

namespace polignac {
namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

constexpr u64 kU32Max = std::numeric_limits<std::uint32_t>::max();

bool fits_u64(const Natural& x) {
  return x <= std::numeric_limits<u64>::max();
}

// Native product accumulation for moduli below 2^64. `next(i)` yields the
// i-th factor already reduced mod m.
template <typename Next>
u64 accumulate_small(u64 acc, u64 steps, u64 m, Next next) {
  if (m <= kU32Max) {
    for (u64 i = 0; i < steps; ++i) acc = acc * next(i) % m;
  } else {
    for (u64 i = 0; i < steps; ++i)
      acc = static_cast<u64>(static_cast<u128>(acc) * next(i) % m);
  }
  return acc;
}

}  // namespace

Residue::Residue(Natural v, Natural m) : value(std::move(v)), modulus(std::move(m)) {
  require_modulus(modulus);
  if (value < 0 || value >= modulus)
    throw DomainError("residue value " + to_string(value) + " not canonical mod " +
                      to_string(modulus));
}

void require_natural(const Integer& x, const char* what) {
  if (x < 0) throw DomainError(std::string(what) + " must be non-negative");
}

void require_modulus(const Natural& m) {
  if (m < 2) throw DomainError("modulus must be >= 2, got " + to_string(m));
}

Natural reduce(const Integer& x, const Natural& m) {
  Integer r = x % m;
  if (r < 0) r += m;
  return r;
}

std::uint64_t to_u64(const Natural& n, const char* what) {
  require_natural(n, what);
  if (!fits_u64(n)) throw DomainError(std::string(what) + " exceeds 64-bit iteration range");
  return static_cast<u64>(n);
}

std::string to_string(const Integer& x) { return x.str(); }

Residue mul_mod(const Natural& a, const Natural& b, const Natural& m,
                MulCounter* counter) {
  require_modulus(m);
  require_natural(a, "multiplicand");
  require_natural(b, "multiplicand");
  if (counter) counter->add();
  return Residue((a * b) % m, m);
}

Residue factorial_range_mod(const Natural& lo, const Natural& hi, const Natural& m,
                            MulCounter* counter) {
  require_modulus(m);
  require_natural(lo, "range start");
  if (hi < lo) throw DomainError("factorial range end precedes start");
  const u64 start = to_u64(lo, "range start");
  const u64 steps = to_u64(hi - lo, "range length");
  if (counter) counter->add(steps);

  if (fits_u64(m) && fits_u64(hi)) {
    const u64 mod = static_cast<u64>(m);
    const u64 acc = accumulate_small(1 % mod, steps, mod,
                                     [&](u64 i) { return (start + 1 + i) % mod; });
    return Residue(Natural(acc), m);
  }
  Natural acc = 1;
  Natural factor = lo;
  for (u64 i = 0; i < steps; ++i) {
    ++factor;
    acc = acc * factor % m;
  }
  return Residue(acc % m, m);
}

Residue factorial_mod(const Natural& n, const Natural& m, MulCounter* counter) {
  return factorial_range_mod(0, n, m, counter);
}

Residue double_factorial_odd_mod(const Natural& k, const Natural& m,
                                 MulCounter* counter) {
  require_modulus(m);
  const u64 steps = to_u64(k, "double factorial length");
  if (counter) counter->add(steps);

  if (fits_u64(m) && steps < (std::numeric_limits<u64>::max() >> 1)) {
    const u64 mod = static_cast<u64>(m);
    const u64 acc = accumulate_small(1 % mod, steps, mod,
                                     [&](u64 i) { return (2 * i + 1) % mod; });
    return Residue(Natural(acc), m);
  }
  Natural acc = 1;
  for (u64 i = 0; i < steps; ++i) acc = acc * (2 * Natural(i) + 1) % m;
  return Residue(acc % m, m);
}

Residue pow_mod(const Natural& b, const Natural& e, const Natural& m,
                MulCounter* counter) {
  require_modulus(m);
  require_natural(b, "base");
  require_natural(e, "exponent");
  Natural result = 1 % m;
  Natural base = b % m;
  Natural exp = e;
  while (exp > 0) {
    if (bit_test(exp, 0)) result = mul_mod(result, base, m, counter).value;
    exp >>= 1;
    if (exp > 0) base = mul_mod(base, base, m, counter).value;
  }
  return Residue(result, m);
}

Residue sign_pow(const Natural& e, const Natural& m) {
  require_modulus(m);
  require_natural(e, "exponent");
  return Residue(bit_test(e, 0) ? Natural(m - 1) : Natural(1), m);
}

}  // namespace polignac
