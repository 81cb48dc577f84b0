#include "polignac/synthesis.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <utility>
#include <vector>

namespace polignac {
namespace {

using boost::multiprecision::abs;
using boost::multiprecision::gcd;

Natural exact_factorial(const Natural& n) {
  Natural acc = 1;
  for (Natural i = 2; i <= n; ++i) acc *= i;
  return acc;
}

Natural exact_double_factorial_odd(const Natural& k) {
  Natural acc = 1;
  for (Natural i = 1; i <= k; ++i) acc *= 2 * i - 1;
  return acc;
}

Natural exact_pow(const Natural& b, const Natural& e) {
  Natural acc = 1;
  for (Natural i = 0; i < e; ++i) acc *= b;
  return acc;
}

// "7p", "-p", "p", "0"
std::string p_term(const Integer& c) {
  if (c == 0) return "0";
  if (c == 1) return "p";
  if (c == -1) return "-p";
  return to_string(c) + "p";
}

std::string signed_offset(const Integer& c) {
  if (c == 0) return "";
  return (c > 0 ? "+" : "-") + to_string(abs(c));
}

std::string modulus_text(const Natural& lambda) {
  return "(mod p(p+" + to_string(lambda) + "))";
}

void require_k(const Natural& k) {
  require_natural(k, "k");
  if (k < 1) throw DomainError("k must be >= 1");
}

}  // namespace

Integer selection_defect(const CombinationScheme& s) {
  return s.x * s.g * s.c1 - s.x * s.c2 - s.y * s.lambda;
}

CombinationScheme solve_coefficients(const Natural& lambda, const Natural& g, const Integer& c1,
                                     const Integer& c2) {
  require_natural(lambda, "lambda");
  require_natural(g, "g");
  if (lambda == 0) throw DomainError("lambda must be >= 1");
  const Integer d = g * c1 - c2;
  CombinationScheme s{lambda, g, c1, c2, 1, 0};
  if (d != 0) {
    s.x = lambda / gcd(lambda, Natural(abs(d)));
    s.y = s.x * d / lambda;
  }
  return s;
}

CombinationScheme scale_scheme(const CombinationScheme& s, const Natural& factor) {
  require_natural(factor, "scale factor");
  if (factor == 0) throw DomainError("scale factor must be >= 1");
  CombinationScheme out = s;
  out.x *= factor;
  out.y *= factor;
  return out;
}

Residue combine(const CombinationScheme& s, const Natural& f1_residue, const Natural& p) {
  require_natural(p, "p");
  require_natural(f1_residue, "f1 residue");
  if (p < 1) throw DomainError("combine needs p >= 1");
  const Natural q = p + s.lambda;
  const Natural m = p * q;

  const auto check = [](const Natural& a, const Natural& b, const char* name) {
    const Natural d = gcd(a, b);
    if (d != 1)
      throw PreconditionError(std::string(name) + " = " + to_string(d) + ", need 1");
  };
  check(s.x, p, "gcd(X, p)");
  check(s.x, q, "gcd(X, p+lambda)");
  check(s.g, m, "gcd(g, p(p+lambda))");

  const Integer lhs = s.x * s.g * f1_residue + s.y * p + s.x * s.c2 + s.y * s.lambda;
  return Residue(reduce(lhs, m), m);
}

CombinationScheme derive_scheme_t3(const Natural& k) {
  require_k(k);
  const Natural lambda = 2 * k;
  const Natural g = exact_factorial(lambda);
  CombinationScheme s = solve_coefficients(lambda, g, 1, 1);
  if (s.x != lambda || s.y != g - 1)
    throw std::logic_error("derive_scheme_t3: expected X = 2k, Y = (2k)! - 1");
  return s;
}

CombinationScheme derive_scheme_t7(const Natural& k, Sign sign) {
  require_k(k);
  const Integer s = static_cast<int>(sign);
  const Integer alt = bit_test(k, 0) ? -1 : 1;  // (-1)^k
  const Natural d = exact_double_factorial_odd(k);
  const Natural four_k = exact_pow(4, k);
  const Natural lambda = 2 * k;
  const Natural g = d * d;

  CombinationScheme scheme = solve_coefficients(lambda, g, s, four_k * s * alt);
  // (-1)^((p+2k-1)/2) = s (-1)^k
  const Integer closed_y = g * s - four_k * s * alt;
  if (scheme.x != lambda || scheme.y != closed_y)
    throw std::logic_error("derive_scheme_t7: expected X = 2k and the closed-form Y");
  return scheme;
}

CombinationScheme derive_scheme_t7_scaled(const Natural& k, Sign sign) {
  return scale_scheme(derive_scheme_t7(k, sign), exact_pow(4, k));
}

CombinedCongruence combined(const CombinationScheme& s) {
  return {s.x * s.g, s.y, s.x * s.c2 + s.y * s.lambda, s.lambda};
}

std::string render_table(const CombinationScheme& s) {
  const std::vector<std::pair<std::string, std::string>> rows = {
      {"lambda", to_string(s.lambda)}, {"g", to_string(s.g)}, {"C1", to_string(s.c1)},
      {"C2", to_string(s.c2)},         {"X", to_string(s.x)}, {"Y", to_string(s.y)},
  };
  std::size_t width = 0;
  for (const auto& [_, v] : rows) width = std::max(width, v.size());
  std::ostringstream out;
  for (const auto& [name, value] : rows) {
    out << "  " << name << std::string(8 - name.size(), ' ')
        << std::string(width - value.size(), ' ') << value << '\n';
  }
  return out.str();
}

std::string render_congruence(const CombinationScheme& s, std::string_view f1,
                              std::string_view eq) {
  const CombinedCongruence c = combined(s);
  std::ostringstream out;
  if (c.lead != 1) out << to_string(c.lead);
  out << '[' << f1 << signed_offset(s.c1) << "] " << eq << ' ' << p_term(-s.y) << ' '
      << modulus_text(s.lambda);
  return out.str();
}

std::string render_half_factorial(const CombinationScheme& s, Sign sign, std::string_view eq) {
  const CombinedCongruence c = combined(s);
  const Integer sg = static_cast<int>(sign);
  const Integer a = c.constant * sg;
  const Integer b = c.p_coeff * sg;
  std::ostringstream out;
  out << to_string(c.lead) << "[((p-1)/2)!]^2 + (-1)^((p-1)/2)[" << to_string(a);
  if (b != 0) out << (b > 0 ? " + " : " - ") << p_term(abs(b));
  out << "] " << eq << " 0 " << modulus_text(s.lambda);
  return out.str();
}

}  // namespace polignac
