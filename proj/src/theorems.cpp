#include "polignac/theorems.hpp"

#include <algorithm>
#include <cctype>

namespace polignac {
namespace {

constexpr std::array<TheoremInfo, kAllTheorems.size()> kInfo = {{
    {TheoremId::Wilson, "Wilson", Direction::Iff, Claim::PrimeP, Params::None,
     "(p-1)! == -1 (mod p)"},
    {TheoremId::Clement, "Clement", Direction::Iff, Claim::TwinPair, Params::None,
     "4[(p-1)!+1] == -p (mod p(p+2))"},
    {TheoremId::PolignacFactorial, "PolignacFactorial", Direction::Iff, Claim::PolignacPair,
     Params::K, "2k(2k)![(p-1)!+1] == [1-(2k)!]p (mod p(p+2k))"},
    {TheoremId::Simionov, "Simionov", Direction::Iff, Claim::PrimeP, Params::K,
     "(k-1)!(p-k)! == (-1)^k (mod p)"},
    {TheoremId::HalfWilson, "HalfWilson", Direction::Iff, Claim::PrimeP, Params::None,
     "[((p-1)/2)!]^2 == (-1)^((p+1)/2) (mod p)"},
    {TheoremId::TwinHalf, "TwinHalf", Direction::Iff, Claim::TwinPair, Params::None,
     "2[((p-1)/2)!]^2 + (-1)^((p-1)/2)(5p+2) == 0 (mod p(p+2))"},
    {TheoremId::PolignacHalf, "PolignacHalf", Direction::Iff, Claim::PolignacPair, Params::K,
     "2k(2k-1)!!^2[((p-1)/2)!]^2 + (-1)^((p-1)/2)[(2k-1)!!^2(p+2k) + 4^k(-1)^(k+1)p] == 0 "
     "(mod p(p+2k))"},
    {TheoremId::GoldbachCorollary, "GoldbachCorollary", Direction::Iff, Claim::PrimeP,
     Params::P1P2, "(p-p1)!(p-p2)! == -1 (mod p), p+1 = p1+p2"},
    {TheoremId::DualIndexCorollary, "DualIndexCorollary", Direction::ForwardOnly, Claim::PrimeP,
     Params::K1K2, "k1!k2!(p-k1-1)!(p-k2-1)! == -1 (mod p)"},
}};

std::string squash(std::string_view name) {
  std::string out;
  for (char c : name)
    if (c != '_' && c != '-' && c != ' ')
      out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  return out;
}

bool is_odd(const Natural& n) { return bit_test(n, 0); }

Natural add_mod(const Natural& a, const Natural& b, const Natural& m) { return (a + b) % m; }

Natural sub_mod(const Natural& a, const Natural& b, const Natural& m) {
  return (a % m + m - b % m) % m;
}

// Canonical residue of s * x where s is the residue of (-1)^e.
Natural signed_term(const Residue& sign, const Natural& x, const Natural& m) {
  return sign.value == 1 ? x % m : sub_mod(0, x, m);
}

std::optional<TestVerdict> require_odd_pair_base(const Natural& p) {
  require_natural(p, "p");
  if (p < 3 || !is_odd(p)) return TestVerdict::precondition("p must be odd >= 3");
  return std::nullopt;
}

Natural require_k(const Natural& k) {
  require_natural(k, "k");
  if (k < 1) throw DomainError("k must be >= 1");
  return k;
}

// p | 2k(2k)! for odd p >= 3.
bool divides_t3_constant(const Natural& p, const Natural& k) {
  if (p <= 2 * k) return true;
  return mul_mod(factorial_mod(2 * k, p).value, 2 * k, p).is_zero();
}

// p | 2k((2k-1)!!)^2 for odd p >= 3. Any odd p <= 2k-1 is a factor of (2k-1)!!.
bool divides_t7_constant(const Natural& p, const Natural& k) {
  if (p <= 2 * k - 1) return true;
  const Natural d = double_factorial_odd_mod(k, p).value;
  return (2 * k * d * d) % p == 0;
}

}  // namespace

std::string_view to_string(VerdictKind kind) {
  switch (kind) {
    case VerdictKind::Satisfied: return "Satisfied";
    case VerdictKind::NotSatisfied: return "NotSatisfied";
    case VerdictKind::PreconditionViolated: return "PreconditionViolated";
  }
  return "?";
}

TestVerdict TestVerdict::evaluated(Residue lhs) {
  TestVerdict v;
  v.kind = lhs.is_zero() ? VerdictKind::Satisfied : VerdictKind::NotSatisfied;
  v.residual = std::move(lhs);
  return v;
}

TestVerdict TestVerdict::precondition(std::string why) {
  TestVerdict v;
  v.kind = VerdictKind::PreconditionViolated;
  v.reason = why.empty() ? std::string("precondition violated") : std::move(why);
  return v;
}

const TheoremInfo& theorem_info(TheoremId id) {
  return kInfo.at(static_cast<std::size_t>(id));
}

std::optional<TheoremId> parse_theorem(std::string_view name) {
  const std::string key = squash(name);
  for (const auto& info : kInfo)
    if (squash(info.name) == key) return info.id;
  if (key == "t1") return TheoremId::Wilson;
  if (key == "t2") return TheoremId::Clement;
  if (key == "t3") return TheoremId::PolignacFactorial;
  if (key == "t4") return TheoremId::Simionov;
  if (key == "t5") return TheoremId::HalfWilson;
  if (key == "t6") return TheoremId::TwinHalf;
  if (key == "t7") return TheoremId::PolignacHalf;
  if (key == "goldbach") return TheoremId::GoldbachCorollary;
  if (key == "dualindex") return TheoremId::DualIndexCorollary;
  return std::nullopt;
}

TestVerdict wilson(const Natural& p, MulCounter* counter) {
  require_natural(p, "p");
  if (p < 2) throw DomainError("wilson needs p >= 2");
  const Residue f = factorial_mod(p - 1, p, counter);
  return TestVerdict::evaluated(Residue(add_mod(f.value, 1, p), p));
}

TestVerdict clement(const Natural& p, MulCounter* counter) {
  if (auto bad = require_odd_pair_base(p)) return *bad;
  const Natural m = p * (p + 2);
  const Residue f = factorial_mod(p - 1, m, counter);
  const Residue scaled = mul_mod(4, add_mod(f.value, 1, m), m, counter);
  return TestVerdict::evaluated(Residue(add_mod(scaled.value, p, m), m));
}

TestVerdict polignac_factorial(const Natural& p, const Natural& k, MulCounter* counter) {
  require_k(k);
  if (auto bad = require_odd_pair_base(p)) return *bad;
  if (divides_t3_constant(p, k)) return TestVerdict::precondition("p divides 2k(2k)!");

  const Natural m = p * (p + 2 * k);
  const Residue f = factorial_mod(p - 1, m, counter);
  const Residue g = factorial_mod(2 * k, m, counter);
  const Residue coeff = mul_mod(2 * k, g.value, m, counter);
  const Residue lhs = mul_mod(coeff.value, add_mod(f.value, 1, m), m, counter);
  // -[1 - (2k)!]p = [(2k)! - 1]p
  const Residue rhs = mul_mod(sub_mod(g.value, 1, m), p, m, counter);
  return TestVerdict::evaluated(Residue(add_mod(lhs.value, rhs.value, m), p * (p + 2 * k)));
}

TestVerdict simionov(const Natural& p, const Natural& k, MulCounter* counter) {
  require_natural(p, "p");
  require_natural(k, "k");
  if (p < 2) throw DomainError("simionov needs p >= 2");
  if (k < 1 || k > p) throw DomainError("simionov needs 1 <= k <= p");
  const Residue a = factorial_mod(k - 1, p, counter);
  const Residue b = factorial_mod(p - k, p, counter);
  const Residue prod = mul_mod(a.value, b.value, p, counter);
  return TestVerdict::evaluated(Residue(sub_mod(prod.value, sign_pow(k, p).value, p), p));
}

TestVerdict half_wilson(const Natural& p, MulCounter* counter) {
  if (auto bad = require_odd_pair_base(p)) return *bad;
  const Residue h = factorial_mod((p - 1) / 2, p, counter);
  const Residue h2 = mul_mod(h.value, h.value, p, counter);
  const Residue target = sign_pow((p + 1) / 2, p);
  return TestVerdict::evaluated(Residue(sub_mod(h2.value, target.value, p), p));
}

TestVerdict twin_half(const Natural& p, MulCounter* counter) {
  if (auto bad = require_odd_pair_base(p)) return *bad;
  const Natural m = p * (p + 2);
  const Residue h = factorial_mod((p - 1) / 2, m, counter);
  const Residue h2 = mul_mod(h.value, h.value, m, counter);
  const Residue lead = mul_mod(2, h2.value, m, counter);
  const Natural bracket = add_mod(mul_mod(5, p, m, counter).value, 2, m);
  const Residue s = sign_pow((p - 1) / 2, m);
  return TestVerdict::evaluated(Residue(add_mod(lead.value, signed_term(s, bracket, m), m), m));
}

TestVerdict polignac_half(const Natural& p, const Natural& k, MulCounter* counter) {
  require_k(k);
  if (auto bad = require_odd_pair_base(p)) return *bad;
  if (divides_t7_constant(p, k)) return TestVerdict::precondition("p divides 2k((2k-1)!!)^2");

  const Natural m = p * (p + 2 * k);
  const Residue h = factorial_mod((p - 1) / 2, m, counter);
  const Residue h2 = mul_mod(h.value, h.value, m, counter);
  const Residue d = double_factorial_odd_mod(k, m, counter);
  const Residue d2 = mul_mod(d.value, d.value, m, counter);
  const Residue coeff = mul_mod(2 * k, d2.value, m, counter);
  const Residue lead = mul_mod(coeff.value, h2.value, m, counter);

  const Residue four_k = pow_mod(4, k, m, counter);
  const Residue shifted = mul_mod(d2.value, p + 2 * k, m, counter);
  const Residue scaled_p = mul_mod(four_k.value, p, m, counter);
  const Natural bracket = add_mod(shifted.value, signed_term(sign_pow(k + 1, m), scaled_p.value, m), m);
  const Residue s = sign_pow((p - 1) / 2, m);
  return TestVerdict::evaluated(Residue(add_mod(lead.value, signed_term(s, bracket, m), m), m));
}

TestVerdict goldbach_corollary(const Natural& p, const Natural& p1, const Natural& p2,
                               const SieveOracle& oracle, MulCounter* counter) {
  require_natural(p, "p");
  require_natural(p1, "p1");
  require_natural(p2, "p2");
  if (!is_odd(p)) return TestVerdict::precondition("p must be odd");
  if (p1 == p2) return TestVerdict::precondition("p1 and p2 must be distinct");
  if (p + 1 != p1 + p2) return TestVerdict::precondition("p + 1 must equal p1 + p2");
  if (!is_odd(p1) || !is_odd(p2) || p1 < 3 || p2 < 3)
    return TestVerdict::precondition("p1 and p2 must be odd primes");
  const Natural top = std::max(p1, p2);
  if (top > oracle.limit())
    throw DomainError("oracle limit " + std::to_string(oracle.limit()) + " does not cover " +
                      to_string(top));
  if (!oracle.is_prime(static_cast<std::uint64_t>(p1)) ||
      !oracle.is_prime(static_cast<std::uint64_t>(p2)))
    return TestVerdict::precondition("p1 and p2 must be odd primes");

  const Residue a = factorial_mod(p - p1, p, counter);
  const Residue b = factorial_mod(p - p2, p, counter);
  const Residue prod = mul_mod(a.value, b.value, p, counter);
  return TestVerdict::evaluated(Residue(add_mod(prod.value, 1, p), p));
}

TestVerdict dual_index_corollary(const Natural& p, const Natural& k1, const Natural& k2,
                                 MulCounter* counter) {
  require_natural(p, "p");
  require_natural(k1, "k1");
  require_natural(k2, "k2");
  if (!(k1 < k2 && k2 < p)) throw DomainError("dual index needs 0 <= k1 < k2 < p");
  if (!is_odd(k2 - k1)) throw DomainError("dual index needs k2 - k1 odd");

  const Residue a = factorial_mod(k1, p, counter);
  const Residue b = factorial_mod(k2, p, counter);
  const Residue c = factorial_mod(p - k1 - 1, p, counter);
  const Residue d = factorial_mod(p - k2 - 1, p, counter);
  const Residue ab = mul_mod(a.value, b.value, p, counter);
  const Residue cd = mul_mod(c.value, d.value, p, counter);
  const Residue prod = mul_mod(ab.value, cd.value, p, counter);
  return TestVerdict::evaluated(Residue(add_mod(prod.value, 1, p), p));
}

}  // namespace polignac
