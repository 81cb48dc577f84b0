#include "polignac/polignac.h"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "polignac/bench.hpp"
#include "polignac/oracle.hpp"
#include "polignac/scanner.hpp"
#include "polignac/synthesis.hpp"
#include "polignac/theorems.hpp"

using namespace polignac;

struct pg_oracle {
  SieveOracle oracle;
};

struct pg_list {
  std::vector<std::uint64_t> values;
};

struct pg_verdict {
  TestVerdict verdict;
  std::uint64_t mults = 0;
  std::string residual;
  std::string modulus;
  std::string describe;
};

struct pg_scan {
  ScanResult result;
};

struct pg_scheme {
  enum class Preset { None, T3, T7 } preset = Preset::None;
  CombinationScheme scheme;
  Natural k = 0;
  Sign sign = Sign::Plus;
  std::string fields[6];
  std::string congruence;
  std::string rendered;
};

namespace {

thread_local std::string g_last_error;

class ArgumentError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

pg_status fail(pg_status status, std::string message) {
  g_last_error = std::move(message);
  return status;
}

// Runs `body`, translating exceptions into status codes.
template <typename Body>
pg_status guarded(Body&& body) {
  try {
    body();
    g_last_error.clear();
    return PG_OK;
  } catch (const DomainError& e) {
    return fail(PG_ERR_DOMAIN, e.what());
  } catch (const PreconditionError& e) {
    return fail(PG_ERR_PRECONDITION, e.what());
  } catch (const ArgumentError& e) {
    return fail(PG_ERR_INVALID_ARGUMENT, e.what());
  } catch (const std::bad_alloc&) {
    return fail(PG_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(PG_ERR_INTERNAL, e.what());
  }
}

template <typename T>
void require_ptr(T* ptr, const char* what) {
  if (ptr == nullptr) throw ArgumentError(std::string(what) + " must not be null");
}

Integer parse_integer(const char* text, const char* what, bool allow_sign) {
  if (text == nullptr) throw ArgumentError(std::string("argument ") + what + " is required");
  std::string_view s(text);
  std::string_view digits = s;
  if (allow_sign && !digits.empty() && digits.front() == '-') digits.remove_prefix(1);
  if (digits.empty() || digits.find_first_not_of("0123456789") != std::string_view::npos)
    throw ArgumentError(std::string("argument ") + what + " is not a decimal integer: '" +
                        std::string(s) + "'");
  return Integer(std::string(s));
}

Natural parse_natural(const char* text, const char* what) {
  return parse_integer(text, what, false);
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

TheoremId to_id(pg_theorem t) {
  const auto index = static_cast<std::size_t>(t);
  if (index >= kAllTheorems.size()) throw ArgumentError("unknown theorem id");
  return kAllTheorems[index];
}

void finish_scheme(pg_scheme& h) {
  const CombinationScheme& s = h.scheme;
  h.fields[PG_SCHEME_LAMBDA] = to_string(s.lambda);
  h.fields[PG_SCHEME_G] = to_string(s.g);
  h.fields[PG_SCHEME_C1] = to_string(s.c1);
  h.fields[PG_SCHEME_C2] = to_string(s.c2);
  h.fields[PG_SCHEME_X] = to_string(s.x);
  h.fields[PG_SCHEME_Y] = to_string(s.y);

  std::string out = "scheme\n" + render_table(s);
  switch (h.preset) {
    case pg_scheme::Preset::None:
      h.congruence = render_congruence(s);
      break;
    case pg_scheme::Preset::T3:
      h.congruence = render_congruence(s, "(p-1)!");
      break;
    case pg_scheme::Preset::T7:
      h.congruence = render_half_factorial(s, h.sign);
      break;
  }
  out += "combined\n  " + h.congruence + "\n";
  if (h.preset == pg_scheme::Preset::T7)
    out += "  " + render_congruence(s, "((p-1)/2)!^2") + "\n";
  out += "identity\n  X*g*C1 = X*C2 + Y*lambda: ";
  out += identity_holds(s) ? "holds\n" : "FAILS\n";

  if (h.preset == pg_scheme::Preset::T7) {
    // X = 4^k(2k) is a common way to write this combination; it only balances
    // with Y scaled by 4^k as well.
    const CombinationScheme scaled = derive_scheme_t7_scaled(h.k, h.sign);
    CombinationScheme literal = scaled;
    literal.y = s.y;
    out += "note\n";
    out += "  X = 4^k(2k) = " + to_string(scaled.x) + " with the unscaled Y = " +
           to_string(s.y) + " leaves X*g*C1 - X*C2 - Y*lambda = " +
           to_string(selection_defect(literal)) + "\n";
    out += "  the identity with X = " + to_string(scaled.x) + " requires Y = " +
           to_string(scaled.y) + " and yields 4^k = " + to_string(scaled.x / s.x) +
           " times the congruence above;\n";
    out += "  4^k is a unit mod the odd modulus p(p+2k), so both vanish for the same p\n";
  }
  h.rendered = std::move(out);
}

}  // namespace

extern "C" {

const char* pg_status_string(pg_status status) {
  switch (status) {
    case PG_OK: return "ok";
    case PG_ERR_DOMAIN: return "domain error";
    case PG_ERR_PRECONDITION: return "precondition violated";
    case PG_ERR_INVALID_ARGUMENT: return "invalid argument";
    case PG_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* pg_last_error(void) { return g_last_error.c_str(); }

void pg_string_free(char* s) { std::free(s); }

pg_status pg_oracle_create(uint64_t limit, pg_oracle** out) {
  return guarded([&] {
    require_ptr(out, "out");
    *out = nullptr;
    *out = new pg_oracle{SieveOracle(limit)};
  });
}

void pg_oracle_destroy(pg_oracle* oracle) { delete oracle; }

uint64_t pg_oracle_limit(const pg_oracle* oracle) { return oracle ? oracle->oracle.limit() : 0; }

uint64_t pg_oracle_prime_count(const pg_oracle* oracle) {
  return oracle ? oracle->oracle.count() : 0;
}

pg_status pg_oracle_is_prime(const pg_oracle* oracle, uint64_t n, int* out) {
  return guarded([&] {
    require_ptr(oracle, "oracle");
    require_ptr(out, "out");
    *out = oracle->oracle.is_prime(n) ? 1 : 0;
  });
}

size_t pg_list_size(const pg_list* list) { return list ? list->values.size() : 0; }

uint64_t pg_list_at(const pg_list* list, size_t index) {
  return list && index < list->values.size() ? list->values[index] : 0;
}

void pg_list_destroy(pg_list* list) { delete list; }

pg_status pg_oracle_primes(const pg_oracle* oracle, pg_list** out) {
  return guarded([&] {
    require_ptr(oracle, "oracle");
    require_ptr(out, "out");
    *out = new pg_list{oracle->oracle.primes()};
  });
}

pg_status pg_oracle_pairs(const pg_oracle* oracle, uint64_t k, uint64_t limit, pg_list** out) {
  return guarded([&] {
    require_ptr(oracle, "oracle");
    require_ptr(out, "out");
    *out = new pg_list{oracle->oracle.pairs(k, limit)};
  });
}

pg_status pg_oracle_goldbach(const pg_oracle* oracle, uint64_t m, int* found, uint64_t* p1,
                             uint64_t* p2) {
  return guarded([&] {
    require_ptr(oracle, "oracle");
    require_ptr(found, "found");
    const auto split = oracle->oracle.goldbach_decompose(m);
    *found = split ? 1 : 0;
    if (p1) *p1 = split ? split->first : 0;
    if (p2) *p2 = split ? split->second : 0;
  });
}

pg_status pg_pnt_estimate(uint64_t n, double* out) {
  return guarded([&] {
    require_ptr(out, "out");
    *out = pnt_estimate(n);
  });
}

pg_status pg_theorem_parse(const char* name, pg_theorem* out) {
  return guarded([&] {
    require_ptr(name, "name");
    require_ptr(out, "out");
    const auto id = parse_theorem(name);
    if (!id) throw ArgumentError(std::string("unknown theorem '") + name + "'");
    *out = static_cast<pg_theorem>(*id);
  });
}

const char* pg_theorem_name(pg_theorem theorem) {
  const auto index = static_cast<std::size_t>(theorem);
  if (index >= kAllTheorems.size()) return "";
  return theorem_info(kAllTheorems[index]).name.data();
}

const char* pg_theorem_statement(pg_theorem theorem) {
  const auto index = static_cast<std::size_t>(theorem);
  if (index >= kAllTheorems.size()) return "";
  return theorem_info(kAllTheorems[index]).statement.data();
}

int pg_theorem_is_forward_only(pg_theorem theorem) {
  const auto index = static_cast<std::size_t>(theorem);
  if (index >= kAllTheorems.size()) return 0;
  return theorem_info(kAllTheorems[index]).direction == Direction::ForwardOnly ? 1 : 0;
}

pg_status pg_test(pg_theorem theorem, const pg_test_args* args, const pg_oracle* oracle,
                  pg_verdict** out) {
  return guarded([&] {
    require_ptr(args, "args");
    require_ptr(out, "out");
    *out = nullptr;
    const TheoremId id = to_id(theorem);
    const Natural p = parse_natural(args->p, "p");
    MulCounter counter;
    TestVerdict v;
    switch (id) {
      case TheoremId::Wilson: v = wilson(p, &counter); break;
      case TheoremId::Clement: v = clement(p, &counter); break;
      case TheoremId::PolignacFactorial:
        v = polignac_factorial(p, parse_natural(args->k, "k"), &counter);
        break;
      case TheoremId::Simionov: v = simionov(p, parse_natural(args->k, "k"), &counter); break;
      case TheoremId::HalfWilson: v = half_wilson(p, &counter); break;
      case TheoremId::TwinHalf: v = twin_half(p, &counter); break;
      case TheoremId::PolignacHalf:
        v = polignac_half(p, parse_natural(args->k, "k"), &counter);
        break;
      case TheoremId::GoldbachCorollary: {
        const Natural p1 = parse_natural(args->p1, "p1");
        const Natural p2 = parse_natural(args->p2, "p2");
        if (oracle) {
          v = goldbach_corollary(p, p1, p2, oracle->oracle, &counter);
        } else {
          const Natural top = std::max<Natural>(std::max(p1, p2), 2);
          const SieveOracle local(to_u64(top, "max(p1, p2)"));
          v = goldbach_corollary(p, p1, p2, local, &counter);
        }
        break;
      }
      case TheoremId::DualIndexCorollary:
        v = dual_index_corollary(p, parse_natural(args->k1, "k1"), parse_natural(args->k2, "k2"),
                                 &counter);
        break;
    }

    auto h = std::make_unique<pg_verdict>();
    h->mults = counter.count();
    if (v.residual) {
      h->residual = to_string(v.residual->value);
      h->modulus = to_string(v.residual->modulus);
      h->describe = std::string(to_string(v.kind)) + " residual=" + h->residual + " mod " +
                    h->modulus;
      if (v.satisfied() && theorem_info(id).direction == Direction::ForwardOnly)
        h->describe += " (forward-only: not evidence of primality)";
    } else {
      h->describe = std::string(to_string(v.kind)) + ": " + v.reason;
    }
    h->verdict = std::move(v);
    *out = h.release();
  });
}

void pg_verdict_destroy(pg_verdict* verdict) { delete verdict; }

pg_verdict_kind pg_verdict_get_kind(const pg_verdict* verdict) {
  if (!verdict) return PG_PRECONDITION_VIOLATED;
  return static_cast<pg_verdict_kind>(verdict->verdict.kind);
}

const char* pg_verdict_reason(const pg_verdict* verdict) {
  return verdict ? verdict->verdict.reason.c_str() : "";
}

const char* pg_verdict_residual(const pg_verdict* verdict) {
  return verdict ? verdict->residual.c_str() : "";
}

const char* pg_verdict_modulus(const pg_verdict* verdict) {
  return verdict ? verdict->modulus.c_str() : "";
}

uint64_t pg_verdict_mults(const pg_verdict* verdict) { return verdict ? verdict->mults : 0; }

const char* pg_verdict_describe(const pg_verdict* verdict) {
  return verdict ? verdict->describe.c_str() : "";
}

pg_status pg_scan_run(const pg_scan_config* config, const pg_oracle* oracle, pg_scan** out) {
  return guarded([&] {
    require_ptr(config, "config");
    require_ptr(oracle, "oracle");
    require_ptr(out, "out");
    *out = nullptr;
    if (config->theorem_count > 0) require_ptr(config->theorems, "config->theorems");
    ScanConfig c;
    c.p_min = config->p_min;
    c.p_max = config->p_max;
    c.k = config->k;
    c.count_mults = config->count_mults != 0;
    for (std::size_t i = 0; i < config->theorem_count; ++i) {
      const TheoremId id = to_id(config->theorems[i]);
      if (std::find(c.theorems.begin(), c.theorems.end(), id) == c.theorems.end())
        c.theorems.push_back(id);
    }
    *out = new pg_scan{scan(c, oracle->oracle, config->jobs == 0 ? 1 : config->jobs)};
  });
}

void pg_scan_destroy(pg_scan* scan) { delete scan; }

uint64_t pg_scan_rows(const pg_scan* scan) { return scan ? scan->result.summary.rows_scanned : 0; }

uint64_t pg_scan_mismatches(const pg_scan* scan) {
  return scan ? scan->result.summary.mismatches.size() : 0;
}

uint64_t pg_scan_oracle_pairs(const pg_scan* scan) {
  return scan ? scan->result.summary.pairs_found_by_oracle : 0;
}

pg_status pg_scan_theorem_tally(const pg_scan* scan, pg_theorem theorem, uint64_t* satisfied,
                                uint64_t* skipped, uint64_t* mismatches, uint64_t* mults) {
  return guarded([&] {
    require_ptr(scan, "scan");
    const auto& tallies = scan->result.summary.per_theorem;
    const auto it = tallies.find(to_id(theorem));
    if (it == tallies.end()) throw ArgumentError("theorem was not part of the scan");
    if (satisfied) *satisfied = it->second.satisfied;
    if (skipped) *skipped = it->second.preconditions_skipped;
    if (mismatches) *mismatches = it->second.mismatches;
    if (mults) *mults = it->second.total_mults;
  });
}

pg_status pg_scan_emit(const pg_scan* scan, pg_format format, char** out) {
  return guarded([&] {
    require_ptr(scan, "scan");
    require_ptr(out, "out");
    if (format != PG_FORMAT_TABLE && format != PG_FORMAT_CSV)
      throw ArgumentError("unknown output format");
    *out = dup_string(
        emit(scan->result, format == PG_FORMAT_CSV ? OutputFormat::Csv : OutputFormat::Table));
  });
}

pg_status pg_solve(const char* lambda, const char* g, const char* c1, const char* c2,
                   pg_scheme** out) {
  return guarded([&] {
    require_ptr(out, "out");
    *out = nullptr;
    auto h = std::make_unique<pg_scheme>();
    h->scheme = solve_coefficients(parse_natural(lambda, "lambda"), parse_natural(g, "g"),
                                   parse_integer(c1, "c1", true), parse_integer(c2, "c2", true));
    finish_scheme(*h);
    *out = h.release();
  });
}

pg_status pg_scheme_t3(uint64_t k, pg_scheme** out) {
  return guarded([&] {
    require_ptr(out, "out");
    *out = nullptr;
    auto h = std::make_unique<pg_scheme>();
    h->preset = pg_scheme::Preset::T3;
    h->k = k;
    h->scheme = derive_scheme_t3(k);
    finish_scheme(*h);
    *out = h.release();
  });
}

pg_status pg_scheme_t7(uint64_t k, int sign, pg_scheme** out) {
  return guarded([&] {
    require_ptr(out, "out");
    *out = nullptr;
    if (sign != 1 && sign != -1) throw ArgumentError("sign must be +1 or -1");
    auto h = std::make_unique<pg_scheme>();
    h->preset = pg_scheme::Preset::T7;
    h->k = k;
    h->sign = sign > 0 ? Sign::Plus : Sign::Minus;
    h->scheme = derive_scheme_t7(k, h->sign);
    finish_scheme(*h);
    *out = h.release();
  });
}

void pg_scheme_destroy(pg_scheme* scheme) { delete scheme; }

const char* pg_scheme_get(const pg_scheme* scheme, pg_scheme_field field) {
  const auto index = static_cast<std::size_t>(field);
  if (!scheme || index >= 6) return "";
  return scheme->fields[index].c_str();
}

int pg_scheme_identity_holds(const pg_scheme* scheme) {
  return scheme && identity_holds(scheme->scheme) ? 1 : 0;
}

const char* pg_scheme_render(const pg_scheme* scheme) {
  return scheme ? scheme->rendered.c_str() : "";
}

const char* pg_scheme_congruence(const pg_scheme* scheme) {
  return scheme ? scheme->congruence.c_str() : "";
}

pg_status pg_combine(const pg_scheme* scheme, const char* f1_residue, const char* p,
                     char** residual) {
  return guarded([&] {
    require_ptr(scheme, "scheme");
    require_ptr(residual, "residual");
    *residual = nullptr;
    const Residue r =
        combine(scheme->scheme, parse_natural(f1_residue, "f1"), parse_natural(p, "p"));
    *residual = dup_string(to_string(r.value));
  });
}

pg_status pg_bench_pair(uint64_t p, uint64_t k, int timed, pg_bench_report* out) {
  return guarded([&] {
    require_ptr(out, "out");
    const BenchReport r = bench_pair(p, k, timed != 0);
    *out = pg_bench_report{r.p,
                           r.k,
                           r.mults_t3,
                           r.mults_t7,
                           r.ratio,
                           r.wall_ns_t3.has_value() ? 1 : 0,
                           r.wall_ns_t3.value_or(0),
                           r.wall_ns_t7.value_or(0)};
  });
}

pg_status pg_bench_sweep_csv(uint64_t from, uint64_t to, uint64_t k, int timed, char** out) {
  return guarded([&] {
    require_ptr(out, "out");
    *out = dup_string(bench_csv(bench_sweep(from, to, k, timed != 0), timed != 0));
  });
}

pg_status pg_bench_csv(const pg_bench_report* reports, size_t count, int with_wall, char** out) {
  return guarded([&] {
    require_ptr(out, "out");
    if (count > 0) require_ptr(reports, "reports");
    std::vector<BenchReport> rs;
    rs.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
      BenchReport r;
      r.p = reports[i].p;
      r.k = reports[i].k;
      r.mults_t3 = reports[i].mults_t3;
      r.mults_t7 = reports[i].mults_t7;
      r.ratio = reports[i].ratio;
      if (reports[i].has_wall) {
        r.wall_ns_t3 = reports[i].wall_ns_t3;
        r.wall_ns_t7 = reports[i].wall_ns_t7;
      }
      rs.push_back(r);
    }
    *out = dup_string(bench_csv(rs, with_wall != 0));
  });
}

}  // extern "C"
