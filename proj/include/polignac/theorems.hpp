#pragma once

// Congruence characterizations of primes and prime pairs (p, p + 2k).
//
// Every test is normalized to "LHS == 0 (mod M)" and returns the canonical
// residue of the LHS, so Satisfied holds exactly when the residual is zero.
// Preconditions stated by the characterization (oddness, non-divisibility of
// the coefficient constants, valid decompositions) yield a
// PreconditionViolated verdict; inputs outside the mathematical domain
// (p < 2, k out of range) throw DomainError.

#include <array>
#include <optional>
#include <string>
#include <string_view>

#include "polignac/modmath.hpp"
#include "polignac/oracle.hpp"

namespace polignac {

enum class VerdictKind { Satisfied, NotSatisfied, PreconditionViolated };

std::string_view to_string(VerdictKind kind);

struct TestVerdict {
  VerdictKind kind = VerdictKind::PreconditionViolated;
  std::string reason;               // non-empty iff PreconditionViolated
  std::optional<Residue> residual;  // present iff not PreconditionViolated

  static TestVerdict evaluated(Residue lhs);
  static TestVerdict precondition(std::string why);

  bool satisfied() const { return kind == VerdictKind::Satisfied; }
  bool evaluated() const { return kind != VerdictKind::PreconditionViolated; }
};

enum class TheoremId {
  Wilson,
  Clement,
  PolignacFactorial,
  Simionov,
  HalfWilson,
  TwinHalf,
  PolignacHalf,
  GoldbachCorollary,
  DualIndexCorollary,
};

inline constexpr std::array kAllTheorems = {
    TheoremId::Wilson,       TheoremId::Clement,           TheoremId::PolignacFactorial,
    TheoremId::Simionov,     TheoremId::HalfWilson,        TheoremId::TwinHalf,
    TheoremId::PolignacHalf, TheoremId::GoldbachCorollary, TheoremId::DualIndexCorollary,
};

/// Whether a Satisfied verdict is evidence for the claim (Iff) or only a
/// NotSatisfied verdict is evidence against it (ForwardOnly).
enum class Direction { Iff, ForwardOnly };

/// What the congruence characterizes: primality of p, of the pair (p, p+2),
/// or of the pair (p, p+2k).
enum class Claim { PrimeP, TwinPair, PolignacPair };

enum class Params { None, K, K1K2, P1P2 };

struct TheoremInfo {
  TheoremId id;
  std::string_view name;  // CamelCase, as emitted in reports
  Direction direction;
  Claim claim;
  Params params;
  std::string_view statement;
};

const TheoremInfo& theorem_info(TheoremId id);

/// Accepts the CamelCase name or snake/kebab/lower-case spellings
/// ("polignac_half", "polignac-half", "polignachalf"), plus short aliases.
std::optional<TheoremId> parse_theorem(std::string_view name);

/// (p-1)! + 1 == 0 (mod p).
TestVerdict wilson(const Natural& p, MulCounter* counter = nullptr);

/// 4[(p-1)! + 1] + p == 0 (mod p(p+2)); p odd >= 3.
TestVerdict clement(const Natural& p, MulCounter* counter = nullptr);

/// 2k(2k)![(p-1)! + 1] - [1 - (2k)!]p == 0 (mod p(p+2k));
/// p odd >= 3, k >= 1, p does not divide 2k(2k)!.
TestVerdict polignac_factorial(const Natural& p, const Natural& k,
                               MulCounter* counter = nullptr);

/// (k-1)!(p-k)! - (-1)^k == 0 (mod p); 1 <= k <= p.
TestVerdict simionov(const Natural& p, const Natural& k, MulCounter* counter = nullptr);

/// [((p-1)/2)!]^2 - (-1)^((p+1)/2) == 0 (mod p); p odd >= 3.
TestVerdict half_wilson(const Natural& p, MulCounter* counter = nullptr);

/// 2[((p-1)/2)!]^2 + (-1)^((p-1)/2)(5p+2) == 0 (mod p(p+2)); p odd >= 3.
TestVerdict twin_half(const Natural& p, MulCounter* counter = nullptr);

/// 2k D^2 [((p-1)/2)!]^2 + (-1)^((p-1)/2)[D^2 (p+2k) + 4^k (-1)^(k+1) p]
///   == 0 (mod p(p+2k)), D = (2k-1)!!;
/// p odd >= 3, k >= 1, p does not divide 2k D^2.
TestVerdict polignac_half(const Natural& p, const Natural& k, MulCounter* counter = nullptr);

/// (p-p1)!(p-p2)! + 1 == 0 (mod p) for p + 1 = p1 + p2 with p1, p2 distinct
/// odd primes. Primality of p1, p2 is checked against `oracle`, which must
/// cover max(p1, p2).
TestVerdict goldbach_corollary(const Natural& p, const Natural& p1, const Natural& p2,
                               const SieveOracle& oracle, MulCounter* counter = nullptr);

/// k1! k2! (p-k1-1)! (p-k2-1)! + 1 == 0 (mod p); 0 <= k1 < k2 < p, k2 - k1 odd.
/// Forward-only: p prime implies Satisfied, nothing more.
TestVerdict dual_index_corollary(const Natural& p, const Natural& k1, const Natural& k2,
                                 MulCounter* counter = nullptr);

}  // namespace polignac
