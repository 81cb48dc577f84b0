#pragma once

// Coefficient-combination method: merge
//
//     f1(p) + C1 == 0        (mod p)
//     g f1(p) + C2 == 0      (mod p + lambda)
//
// into the single congruence
//
//     X g f1(p) + Y p + X C2 + Y lambda == 0   (mod p(p + lambda))
//
// by choosing multipliers with X g C1 = X C2 + Y lambda. The combined form is
// equivalent to the pair whenever gcd(X, p) = gcd(X, p + lambda) = 1 and
// gcd(g, p(p + lambda)) = 1.

#include <string>
#include <string_view>

#include "polignac/modmath.hpp"

namespace polignac {

enum class Sign { Plus = 1, Minus = -1 };

struct CombinationScheme {
  Natural lambda;
  Natural g;
  Integer c1;
  Integer c2;
  Natural x;
  Integer y;

  friend bool operator==(const CombinationScheme&, const CombinationScheme&) = default;
};

/// X g C1 - X C2 - Y lambda; zero iff the selection identity holds.
Integer selection_defect(const CombinationScheme& s);
inline bool identity_holds(const CombinationScheme& s) { return selection_defect(s) == 0; }

/// Minimal positive X admitting an integer Y:
/// X = lambda / gcd(lambda, g C1 - C2), Y = X (g C1 - C2) / lambda.
/// Throws DomainError for lambda == 0 or negative g.
CombinationScheme solve_coefficients(const Natural& lambda, const Natural& g, const Integer& c1,
                                     const Integer& c2);

/// Multiplies X and Y by `factor`; the identity is preserved and the combined
/// congruence is scaled by `factor`.
CombinationScheme scale_scheme(const CombinationScheme& s, const Natural& factor);

/// Canonical residue of X g f1 + Y p + X C2 + Y lambda mod p(p + lambda).
/// Throws PreconditionError naming the offending gcd when the combination is
/// not an equivalence at p.
Residue combine(const CombinationScheme& s, const Natural& f1_residue, const Natural& p);

/// Scheme for the (p-1)! pair: lambda = 2k, g = (2k)!, C1 = C2 = 1.
/// Always yields X = 2k, Y = (2k)! - 1.
CombinationScheme derive_scheme_t3(const Natural& k);

/// Scheme for the half-factorial pair: lambda = 2k, g = ((2k-1)!!)^2,
/// C1 = s, C2 = 4^k s (-1)^k, where s = (-1)^((p-1)/2) selects p's class mod 4.
/// The minimal solution is X = 2k, Y = ((2k-1)!!)^2 s - 4^k s (-1)^k, whose
/// combined form is exactly 2k(2k-1)!!^2 h^2 + s[(2k-1)!!^2 (p+2k) + 4^k(-1)^(k+1) p].
CombinationScheme derive_scheme_t7(const Natural& k, Sign s);

/// derive_scheme_t7 scaled so that X = 4^k (2k). With that X the identity
/// forces Y = 4^k times the minimal Y, and the combined congruence is 4^k
/// times the minimal one (same vanishing set for odd moduli).
CombinationScheme derive_scheme_t7_scaled(const Natural& k, Sign s);

/// Coefficients of the combined congruence lead*f1 + p_coeff*p + constant == 0.
struct CombinedCongruence {
  Integer lead;      // X g
  Integer p_coeff;   // Y
  Integer constant;  // X C2 + Y lambda  (= X g C1 under the identity)
  Natural lambda;
};

CombinedCongruence combined(const CombinationScheme& s);

/// Aligned name/value table of the scheme fields.
std::string render_table(const CombinationScheme& s);

/// "Xg[f1+C1] == -Yp (mod p(p+lambda))" using the identity, with `f1` naming
/// the combined function and `eq` the congruence symbol.
std::string render_congruence(const CombinationScheme& s, std::string_view f1 = "f1(p)",
                              std::string_view eq = "≡");

/// Sign-factored form used for the half-factorial family:
/// "Xg[((p-1)/2)!]^2 + (-1)^((p-1)/2)[a + bp] == 0 (mod p(p+2k))".
std::string render_half_factorial(const CombinationScheme& s, Sign sign,
                                  std::string_view eq = "≡");

}  // namespace polignac
