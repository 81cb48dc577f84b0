#include "doctest.h"
#include "polignac/polignac.h"

#include <memory>
#include <string>

namespace {

struct OracleDeleter {
  void operator()(pg_oracle* o) const { pg_oracle_destroy(o); }
};
struct VerdictDeleter {
  void operator()(pg_verdict* v) const { pg_verdict_destroy(v); }
};
struct SchemeDeleter {
  void operator()(pg_scheme* s) const { pg_scheme_destroy(s); }
};
struct ListDeleter {
  void operator()(pg_list* l) const { pg_list_destroy(l); }
};
struct ScanDeleter {
  void operator()(pg_scan* s) const { pg_scan_destroy(s); }
};

using Oracle = std::unique_ptr<pg_oracle, OracleDeleter>;
using Verdict = std::unique_ptr<pg_verdict, VerdictDeleter>;
using Scheme = std::unique_ptr<pg_scheme, SchemeDeleter>;

Oracle make_oracle(uint64_t limit) {
  pg_oracle* o = nullptr;
  REQUIRE(pg_oracle_create(limit, &o) == PG_OK);
  return Oracle(o);
}

Verdict run(pg_theorem t, pg_test_args args, const pg_oracle* oracle = nullptr) {
  pg_verdict* v = nullptr;
  const pg_status st = pg_test(t, &args, oracle, &v);
  REQUIRE_MESSAGE(st == PG_OK, std::string(pg_last_error()));
  return Verdict(v);
}

std::string take(char* s) {
  std::string out = s ? s : "";
  pg_string_free(s);
  return out;
}

}  // namespace

TEST_CASE("oracle handles") {
  pg_oracle* bad = reinterpret_cast<pg_oracle*>(1);
  CHECK(pg_oracle_create(1, &bad) == PG_ERR_DOMAIN);
  CHECK(bad == nullptr);
  CHECK(std::string(pg_last_error()).size() > 0);
  CHECK(pg_oracle_create(10, nullptr) == PG_ERR_INVALID_ARGUMENT);

  const Oracle o = make_oracle(100);
  CHECK(pg_oracle_limit(o.get()) == 100);
  CHECK(pg_oracle_prime_count(o.get()) == 25);
  int prime = -1;
  CHECK(pg_oracle_is_prime(o.get(), 97, &prime) == PG_OK);
  CHECK(prime == 1);
  CHECK(pg_oracle_is_prime(o.get(), 101, &prime) == PG_ERR_DOMAIN);
  CHECK(pg_oracle_is_prime(nullptr, 5, &prime) == PG_ERR_INVALID_ARGUMENT);

  pg_list* list = nullptr;
  REQUIRE(pg_oracle_pairs(o.get(), 2, 20, &list) == PG_OK);
  const std::unique_ptr<pg_list, ListDeleter> pairs(list);
  REQUIRE(pg_list_size(list) == 4);
  CHECK(pg_list_at(list, 0) == 3);
  CHECK(pg_list_at(list, 3) == 19);
  CHECK(pg_oracle_pairs(o.get(), 1, 99, &list) == PG_ERR_DOMAIN);

  REQUIRE(pg_oracle_primes(o.get(), &list) == PG_OK);
  CHECK(pg_list_size(list) == 25);
  pg_list_destroy(list);

  int found = -1;
  uint64_t p1 = 0, p2 = 0;
  CHECK(pg_oracle_goldbach(o.get(), 16, &found, &p1, &p2) == PG_OK);
  CHECK(found == 1);
  CHECK(p1 == 3);
  CHECK(p2 == 13);
  CHECK(pg_oracle_goldbach(o.get(), 6, &found, &p1, &p2) == PG_OK);
  CHECK(found == 0);
  CHECK(pg_oracle_goldbach(o.get(), 15, &found, &p1, &p2) == PG_ERR_DOMAIN);

  double est = 0;
  CHECK(pg_pnt_estimate(10000, &est) == PG_OK);
  CHECK(est == doctest::Approx(1085.736).epsilon(1e-6));
  CHECK(pg_pnt_estimate(1, &est) == PG_ERR_DOMAIN);
}

TEST_CASE("theorem metadata") {
  pg_theorem t{};
  CHECK(pg_theorem_parse("twin_half", &t) == PG_OK);
  CHECK(t == PG_TWIN_HALF);
  CHECK(std::string(pg_theorem_name(PG_POLIGNAC_HALF)) == "PolignacHalf");
  CHECK(pg_theorem_parse("fermat", &t) == PG_ERR_INVALID_ARGUMENT);
  CHECK(pg_theorem_parse(nullptr, &t) == PG_ERR_INVALID_ARGUMENT);
  CHECK(pg_theorem_is_forward_only(PG_DUAL_INDEX_COROLLARY) == 1);
  CHECK(pg_theorem_is_forward_only(PG_CLEMENT) == 0);
  CHECK(std::string(pg_theorem_statement(PG_WILSON)).size() > 0);
}

TEST_CASE("pg_test verdicts") {
  const Verdict five = run(PG_CLEMENT, {"5"});
  CHECK(pg_verdict_get_kind(five.get()) == PG_SATISFIED);
  CHECK(std::string(pg_verdict_residual(five.get())) == "0");
  CHECK(std::string(pg_verdict_modulus(five.get())) == "35");
  CHECK(std::string(pg_verdict_describe(five.get())) == "Satisfied residual=0 mod 35");
  CHECK(std::string(pg_verdict_reason(five.get())).empty());
  CHECK(pg_verdict_mults(five.get()) == 5);

  const Verdict four = run(PG_CLEMENT, {"4"});
  CHECK(pg_verdict_get_kind(four.get()) == PG_PRECONDITION_VIOLATED);
  CHECK(std::string(pg_verdict_residual(four.get())).empty());
  CHECK(std::string(pg_verdict_describe(four.get())).rfind("PreconditionViolated: ", 0) == 0);

  CHECK(pg_verdict_get_kind(run(PG_CLEMENT, {"7"}).get()) == PG_NOT_SATISFIED);
  CHECK(pg_verdict_get_kind(run(PG_POLIGNAC_FACTORIAL, {"7", "2"}).get()) == PG_SATISFIED);
  CHECK(pg_verdict_get_kind(run(PG_POLIGNAC_HALF, {"7", "2"}).get()) == PG_SATISFIED);
  CHECK(pg_verdict_get_kind(run(PG_TWIN_HALF, {"3"}).get()) == PG_SATISFIED);
  CHECK(pg_verdict_get_kind(run(PG_SIMIONOV, {"7", "3"}).get()) == PG_SATISFIED);

  const Verdict dual = run(PG_DUAL_INDEX_COROLLARY, {"7", nullptr, "1", "2"});
  CHECK(std::string(pg_verdict_describe(dual.get())).find("forward-only") != std::string::npos);

  // no oracle: one is built for the call
  const Verdict gb = run(PG_GOLDBACH_COROLLARY, {"7", nullptr, nullptr, nullptr, "3", "5"});
  CHECK(pg_verdict_get_kind(gb.get()) == PG_SATISFIED);
  const Oracle small = make_oracle(4);
  pg_test_args args{"7", nullptr, nullptr, nullptr, "3", "5"};
  pg_verdict* v = nullptr;
  CHECK(pg_test(PG_GOLDBACH_COROLLARY, &args, small.get(), &v) == PG_ERR_DOMAIN);

  // big inputs parse; an even one fails the precondition, an odd one is too long to iterate
  const Verdict huge = run(PG_CLEMENT, {"1000000000000000000000000000000000"});
  CHECK(pg_verdict_get_kind(huge.get()) == PG_PRECONDITION_VIOLATED);
  pg_test_args odd{"1000000000000000000000000000000001"};
  CHECK(pg_test(PG_CLEMENT, &odd, nullptr, &v) == PG_ERR_DOMAIN);
}

TEST_CASE("pg_test argument errors") {
  pg_verdict* v = nullptr;
  pg_test_args args{"5"};
  CHECK(pg_test(PG_CLEMENT, nullptr, nullptr, &v) == PG_ERR_INVALID_ARGUMENT);
  CHECK(pg_test(PG_CLEMENT, &args, nullptr, nullptr) == PG_ERR_INVALID_ARGUMENT);

  for (const char* bad : {"", "0x5", "1,000", "-5", "5 ", "five"}) {
    args.p = bad;
    CHECK(pg_test(PG_CLEMENT, &args, nullptr, &v) == PG_ERR_INVALID_ARGUMENT);
    CHECK(v == nullptr);
  }
  args.p = nullptr;
  CHECK(pg_test(PG_CLEMENT, &args, nullptr, &v) == PG_ERR_INVALID_ARGUMENT);
  CHECK(std::string(pg_last_error()).find("required") != std::string::npos);

  pg_test_args missing_k{"7"};
  CHECK(pg_test(PG_POLIGNAC_FACTORIAL, &missing_k, nullptr, &v) == PG_ERR_INVALID_ARGUMENT);
  pg_test_args zero_k{"7", "0"};
  CHECK(pg_test(PG_POLIGNAC_FACTORIAL, &zero_k, nullptr, &v) == PG_ERR_DOMAIN);
  CHECK(pg_test(static_cast<pg_theorem>(42), &zero_k, nullptr, &v) == PG_ERR_INVALID_ARGUMENT);

  CHECK(std::string(pg_status_string(PG_ERR_PRECONDITION)).size() > 0);
}

TEST_CASE("scan through the C API") {
  const Oracle o = make_oracle(100);
  const pg_theorem ts[] = {PG_CLEMENT, PG_CLEMENT};
  pg_scan_config cfg{3, 20, 1, ts, 2, 1, 0};
  pg_scan* raw = nullptr;
  REQUIRE(pg_scan_run(&cfg, o.get(), &raw) == PG_OK);
  const std::unique_ptr<pg_scan, ScanDeleter> s(raw);
  CHECK(pg_scan_rows(raw) == 9);
  CHECK(pg_scan_mismatches(raw) == 0);
  CHECK(pg_scan_oracle_pairs(raw) == 4);

  uint64_t sat = 0, skipped = 0, mism = 0, mults = 0;
  CHECK(pg_scan_theorem_tally(raw, PG_CLEMENT, &sat, &skipped, &mism, &mults) == PG_OK);
  CHECK(sat == 4);
  CHECK(mults > 0);
  CHECK(pg_scan_theorem_tally(raw, PG_WILSON, &sat, &skipped, &mism, &mults) ==
        PG_ERR_INVALID_ARGUMENT);

  char* csv = nullptr;
  REQUIRE(pg_scan_emit(raw, PG_FORMAT_CSV, &csv) == PG_OK);
  const std::string text = take(csv);
  CHECK(text.rfind("p,k,theorem,verdict,residual,oracle,agree,mults\n3,1,Clement,Satisfied,0,", 0) ==
        0);

  cfg.jobs = 3;
  REQUIRE(pg_scan_run(&cfg, o.get(), &raw) == PG_OK);
  REQUIRE(pg_scan_emit(raw, PG_FORMAT_CSV, &csv) == PG_OK);
  CHECK(take(csv) == text);
  pg_scan_destroy(raw);

  cfg.p_max = 99;
  CHECK(pg_scan_run(&cfg, o.get(), &raw) == PG_ERR_DOMAIN);
  CHECK(pg_scan_run(&cfg, nullptr, &raw) == PG_ERR_INVALID_ARGUMENT);
}

TEST_CASE("schemes through the C API") {
  pg_scheme* raw = nullptr;
  REQUIRE(pg_scheme_t3(2, &raw) == PG_OK);
  const Scheme t3(raw);
  CHECK(std::string(pg_scheme_get(raw, PG_SCHEME_X)) == "4");
  CHECK(std::string(pg_scheme_get(raw, PG_SCHEME_Y)) == "23");
  CHECK(std::string(pg_scheme_get(raw, PG_SCHEME_G)) == "24");
  CHECK(pg_scheme_identity_holds(raw) == 1);
  CHECK(std::string(pg_scheme_congruence(raw)) == "96[(p-1)!+1] ≡ -23p (mod p(p+4))");
  CHECK(std::string(pg_scheme_render(raw)).find("identity") != std::string::npos);

  char* residual = nullptr;
  REQUIRE(pg_combine(raw, "720", "7", &residual) == PG_OK);
  CHECK(take(residual) == "0");
  CHECK(pg_combine(raw, "0", "9", &residual) == PG_ERR_PRECONDITION);
  CHECK(std::string(pg_last_error()).find("gcd") != std::string::npos);

  REQUIRE(pg_scheme_t7(2, -1, &raw) == PG_OK);
  const Scheme t7(raw);
  CHECK(std::string(pg_scheme_render(raw)).find("4^k") != std::string::npos);
  CHECK(pg_scheme_t7(2, 0, &raw) == PG_ERR_INVALID_ARGUMENT);
  CHECK(pg_scheme_t3(0, &raw) == PG_ERR_DOMAIN);

  REQUIRE(pg_solve("2", "2", "1", "-3", &raw) == PG_OK);
  const Scheme solved(raw);
  CHECK(std::string(pg_scheme_get(raw, PG_SCHEME_C2)) == "-3");
  CHECK(std::string(pg_scheme_get(raw, PG_SCHEME_X)) == "2");
  CHECK(pg_solve("0", "2", "1", "1", &raw) == PG_ERR_DOMAIN);
  CHECK(pg_solve("2", "-2", "1", "1", &raw) == PG_ERR_INVALID_ARGUMENT);
  CHECK(pg_solve("2", "2", "1", "--1", &raw) == PG_ERR_INVALID_ARGUMENT);
}

TEST_CASE("bench through the C API") {
  pg_bench_report r{};
  REQUIRE(pg_bench_pair(101, 1, 0, &r) == PG_OK);
  CHECK(r.mults_t3 == 105);
  CHECK(r.mults_t7 == 58);
  CHECK(r.has_wall == 0);
  CHECK(pg_bench_pair(3, 2, 0, &r) == PG_ERR_PRECONDITION);
  CHECK(std::string(pg_last_error()).find("PolignacFactorial") != std::string::npos);

  char* csv = nullptr;
  REQUIRE(pg_bench_sweep_csv(101, 103, 1, 0, &csv) == PG_OK);
  CHECK(take(csv) == "p,k,mults_t3,mults_t7,ratio\n101,1,105,58,0.552381\n103,1,107,59,0.551402\n");
  CHECK(pg_bench_sweep_csv(10, 5, 1, 0, &csv) == PG_ERR_DOMAIN);

  REQUIRE(pg_bench_pair(101, 1, 0, &r) == PG_OK);
  REQUIRE(pg_bench_csv(&r, 1, 0, &csv) == PG_OK);
  CHECK(take(csv) == "p,k,mults_t3,mults_t7,ratio\n101,1,105,58,0.552381\n");
  CHECK(pg_bench_csv(nullptr, 1, 0, &csv) == PG_ERR_INVALID_ARGUMENT);

  pg_string_free(nullptr);
}
