// polignac: command-line front end over the C API.
//
// Exit codes: 0 success / Satisfied / no mismatches, 1 NotSatisfied or
// mismatches found, 2 usage, domain or precondition error.

#include <charconv>
#include <cstdint>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "polignac/polignac.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ApiError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void check(pg_status status) {
  if (status != PG_OK)
    throw ApiError(std::string(pg_status_string(status)) + ": " + pg_last_error());
}

template <typename T, void (*Destroy)(T*)>
struct Deleter {
  void operator()(T* p) const { Destroy(p); }
};
using Oracle = std::unique_ptr<pg_oracle, Deleter<pg_oracle, pg_oracle_destroy>>;
using Verdict = std::unique_ptr<pg_verdict, Deleter<pg_verdict, pg_verdict_destroy>>;
using Scan = std::unique_ptr<pg_scan, Deleter<pg_scan, pg_scan_destroy>>;
using Scheme = std::unique_ptr<pg_scheme, Deleter<pg_scheme, pg_scheme_destroy>>;
using List = std::unique_ptr<pg_list, Deleter<pg_list, pg_list_destroy>>;
using Text = std::unique_ptr<char, Deleter<char, pg_string_free>>;

const CLI::Validator kDecimal(
    [](std::string& s) -> std::string {
      if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
        return "expected a decimal number, got '" + s + "'";
      return {};
    },
    "DECIMAL");

const CLI::Validator kSignedDecimal(
    [](std::string& s) -> std::string {
      const std::size_t start = (!s.empty() && s.front() == '-') ? 1 : 0;
      if (s.size() == start || s.find_first_not_of("0123456789", start) != std::string::npos)
        return "expected a decimal integer, got '" + s + "'";
      return {};
    },
    "INTEGER");

std::uint64_t to_u64(const std::string& s, const char* flag) {
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size())
    throw UsageError(std::string(flag) + ": value out of range: " + s);
  return v;
}

Oracle make_oracle(std::uint64_t limit) {
  pg_oracle* raw = nullptr;
  check(pg_oracle_create(limit < 2 ? 2 : limit, &raw));
  return Oracle(raw);
}

void print_text(Text text) { std::cout << text.get(); }

// --- test -------------------------------------------------------------------

struct TestOptions {
  std::string theorem;
  std::string p;
  std::optional<std::string> k, k1, k2, p1, p2;
  bool mults = false;
};

int run_test(const TestOptions& o) {
  pg_theorem theorem{};
  if (pg_theorem_parse(o.theorem.c_str(), &theorem) != PG_OK) throw UsageError(pg_last_error());
  const auto c = [](const std::optional<std::string>& s) { return s ? s->c_str() : nullptr; };
  const pg_test_args args{o.p.c_str(), c(o.k), c(o.k1), c(o.k2), c(o.p1), c(o.p2)};
  pg_verdict* raw = nullptr;
  check(pg_test(theorem, &args, nullptr, &raw));
  const Verdict verdict(raw);
  std::cout << pg_verdict_describe(verdict.get()) << '\n';
  if (o.mults) std::cout << "mults=" << pg_verdict_mults(verdict.get()) << '\n';
  switch (pg_verdict_get_kind(verdict.get())) {
    case PG_SATISFIED: return kExitOk;
    case PG_NOT_SATISFIED: return kExitNegative;
    case PG_PRECONDITION_VIOLATED: break;
  }
  return kExitUsage;
}

// --- scan -------------------------------------------------------------------

struct ScanOptions {
  std::string from, to, k = "1", jobs = "1";
  std::vector<std::string> theorems;
  std::string format = "table";
  bool mults = false;
};

int run_scan(const ScanOptions& o) {
  const std::uint64_t from = to_u64(o.from, "--from");
  const std::uint64_t to = to_u64(o.to, "--to");
  const std::uint64_t k = to_u64(o.k, "--k");
  std::vector<pg_theorem> ids;
  for (const std::string& name : o.theorems) {
    pg_theorem id{};
    if (pg_theorem_parse(name.c_str(), &id) != PG_OK) throw UsageError(pg_last_error());
    ids.push_back(id);
  }
  if (k > (UINT64_MAX - to) / 2) throw UsageError("--to + 2k overflows");
  const Oracle oracle = make_oracle(to + 2 * k);
  const pg_scan_config config{from,       to,       k, ids.data(), ids.size(), o.mults ? 1 : 0,
                              static_cast<unsigned>(to_u64(o.jobs, "--jobs"))};
  pg_scan* raw = nullptr;
  check(pg_scan_run(&config, oracle.get(), &raw));
  const Scan scan(raw);
  char* text = nullptr;
  check(pg_scan_emit(scan.get(), o.format == "csv" ? PG_FORMAT_CSV : PG_FORMAT_TABLE, &text));
  print_text(Text(text));
  return pg_scan_mismatches(scan.get()) == 0 ? kExitOk : kExitNegative;
}

// --- solve ------------------------------------------------------------------

struct SolveOptions {
  std::optional<std::string> lambda, g, c1, c2, preset, k;
  std::string sign = "+";
};

int run_solve(const SolveOptions& o) {
  pg_scheme* raw = nullptr;
  if (o.preset) {
    if (o.lambda || o.g || o.c1 || o.c2)
      throw UsageError("--preset cannot be combined with --lambda/--g/--c1/--c2");
    if (!o.k) throw UsageError("--preset needs --k");
    const std::uint64_t k = to_u64(*o.k, "--k");
    if (*o.preset == "t3") {
      check(pg_scheme_t3(k, &raw));
    } else {
      check(pg_scheme_t7(k, o.sign == "-" ? -1 : 1, &raw));
    }
  } else {
    if (!(o.lambda && o.g && o.c1 && o.c2))
      throw UsageError("solve needs --lambda, --g, --c1 and --c2, or --preset");
    check(pg_solve(o.lambda->c_str(), o.g->c_str(), o.c1->c_str(), o.c2->c_str(), &raw));
  }
  const Scheme scheme(raw);
  std::cout << pg_scheme_render(scheme.get());
  return kExitOk;
}

// --- bench ------------------------------------------------------------------

struct BenchOptions {
  std::optional<std::string> p;
  std::vector<std::string> sweep;
  std::string k = "1";
  bool timed = false;
};

int run_bench(const BenchOptions& o) {
  const std::uint64_t k = to_u64(o.k, "--k");
  char* text = nullptr;
  if (!o.sweep.empty()) {
    if (o.p) throw UsageError("--p and --sweep are exclusive");
    check(pg_bench_sweep_csv(to_u64(o.sweep[0], "--sweep"), to_u64(o.sweep[1], "--sweep"), k,
                             o.timed ? 1 : 0, &text));
  } else {
    if (!o.p) throw UsageError("bench needs --p or --sweep");
    pg_bench_report report{};
    check(pg_bench_pair(to_u64(*o.p, "--p"), k, o.timed ? 1 : 0, &report));
    check(pg_bench_csv(&report, 1, o.timed ? 1 : 0, &text));
  }
  print_text(Text(text));
  return kExitOk;
}

// --- sieve ------------------------------------------------------------------

struct SieveOptions {
  std::string limit;
  std::optional<std::string> pairs_k;
  bool count = false;
};

int run_sieve(const SieveOptions& o) {
  const std::uint64_t limit = to_u64(o.limit, "--limit");
  pg_list* raw = nullptr;
  Oracle oracle;
  if (o.pairs_k) {
    const std::uint64_t k = to_u64(*o.pairs_k, "--pairs-k");
    if (k > (UINT64_MAX - limit) / 2) throw UsageError("--limit + 2k overflows");
    oracle = make_oracle(limit + 2 * k);
    check(pg_oracle_pairs(oracle.get(), k, limit, &raw));
  } else {
    pg_oracle* o_raw = nullptr;
    check(pg_oracle_create(limit, &o_raw));
    oracle.reset(o_raw);
    if (o.count) {
      std::cout << pg_oracle_prime_count(oracle.get()) << '\n';
      return kExitOk;
    }
    check(pg_oracle_primes(oracle.get(), &raw));
  }
  const List list(raw);
  if (o.count) {
    std::cout << pg_list_size(list.get()) << '\n';
  } else {
    std::string out;
    for (std::size_t i = 0; i < pg_list_size(list.get()); ++i)
      out += std::to_string(pg_list_at(list.get(), i)) + '\n';
    std::cout << out;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Wilson-type congruence tests for primes and prime pairs (p, p+2k)", "polignac"};
  app.require_subcommand(1);

  TestOptions test_o;
  auto* test = app.add_subcommand("test", "Evaluate one congruence characterization");
  test->add_option("--theorem", test_o.theorem,
                   "wilson, clement, polignac_factorial, simionov, half_wilson, twin_half, "
                   "polignac_half, goldbach_corollary, dual_index_corollary")
      ->required();
  test->add_option("--p", test_o.p, "p")->required()->check(kDecimal);
  test->add_option("--k", test_o.k, "k")->check(kDecimal);
  test->add_option("--k1", test_o.k1, "k1 (dual index)")->check(kDecimal);
  test->add_option("--k2", test_o.k2, "k2 (dual index)")->check(kDecimal);
  test->add_option("--p1", test_o.p1, "p1 (goldbach)")->check(kDecimal);
  test->add_option("--p2", test_o.p2, "p2 (goldbach)")->check(kDecimal);
  test->add_flag("--mults", test_o.mults, "also print the modular multiplication count");

  ScanOptions scan_o;
  auto* scan = app.add_subcommand("scan", "Cross-check theorems against the sieve over a range");
  scan->add_option("--from", scan_o.from, "first p")->required()->check(kDecimal);
  scan->add_option("--to", scan_o.to, "last p")->required()->check(kDecimal);
  scan->add_option("--k", scan_o.k, "pair offset k (p, p+2k)")->check(kDecimal);
  scan->add_option("--theorems", scan_o.theorems, "comma-separated theorem list")
      ->required()
      ->delimiter(',');
  scan->add_option("--format", scan_o.format, "csv or table")
      ->check(CLI::IsMember({"csv", "table"}));
  scan->add_flag("--mults", scan_o.mults, "fill the mults column");
  scan->add_option("--jobs", scan_o.jobs, "worker threads")->check(kDecimal);

  SolveOptions solve_o;
  auto* solve = app.add_subcommand("solve", "Coefficient-combination solver");
  solve->add_option("--lambda", solve_o.lambda, "offset lambda")->check(kDecimal);
  solve->add_option("--g", solve_o.g, "multiplier g(lambda)")->check(kDecimal);
  solve->add_option("--c1", solve_o.c1, "constant C1")->check(kSignedDecimal);
  solve->add_option("--c2", solve_o.c2, "constant C2")->check(kSignedDecimal);
  solve->add_option("--preset", solve_o.preset, "t3 or t7")->check(CLI::IsMember({"t3", "t7"}));
  solve->add_option("--k", solve_o.k, "k for presets")->check(kDecimal);
  solve->add_option("--sign", solve_o.sign, "(-1)^((p-1)/2) for t7: + or -")
      ->check(CLI::IsMember({"+", "-"}));

  BenchOptions bench_o;
  auto* bench = app.add_subcommand("bench", "Multiplication counts, factorial vs half-factorial");
  bench->add_option("--p", bench_o.p, "p")->check(kDecimal);
  bench->add_option("--sweep", bench_o.sweep, "from to")->expected(2)->check(kDecimal);
  bench->add_option("--k", bench_o.k, "pair offset k")->check(kDecimal);
  bench->add_flag("--timed", bench_o.timed, "add wall-clock columns");

  SieveOptions sieve_o;
  auto* sieve = app.add_subcommand("sieve", "Primes, prime pairs or counts");
  sieve->add_option("--limit", sieve_o.limit, "upper bound")->required()->check(kDecimal);
  sieve->add_option("--pairs-k", sieve_o.pairs_k, "list p with p and p+2k prime")
      ->check(kDecimal);
  sieve->add_flag("--count", sieve_o.count, "print only the count");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  try {
    if (test->parsed()) return run_test(test_o);
    if (scan->parsed()) return run_scan(scan_o);
    if (solve->parsed()) return run_solve(solve_o);
    if (bench->parsed()) return run_bench(bench_o);
    if (sieve->parsed()) return run_sieve(sieve_o);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  } catch (const ApiError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
